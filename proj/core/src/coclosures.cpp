#include "polycalc/coclosures.hpp"

#include <numeric>

namespace poly {

Poly right_coclosure(const Poly& p, const Poly& q) {
  Poly r;
  r.dirs.reserve(p.dirs.size());
  for (int d : p.dirs)
    r.dirs.push_back(static_cast<int>(guard_size(eval_size(q, FinSet{d}), "right_coclosure")));
  return r;
}

PolyMap rc_transpose(const Poly& p, const Poly& q, const Poly& r, const PolyMap& phi) {
  if (phi.src != right_coclosure(p, q) || phi.tgt != r) throw ShapeError("rc_transpose: shape mismatch");
  Poly tgt = substitute(r, q);
  PolyMap psi{p, tgt, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    FinSet pi = p.dir(i);
    int k = phi.fwd[static_cast<std::size_t>(i)];
    const auto& sharp = phi.bwd[static_cast<std::size_t>(i)];  // r[k] -> eval(q, p[i])
    FinFn g{r.dir(k), q.positions(), {}};
    g.table.reserve(sharp.size());
    std::vector<FinFn> hs;
    hs.reserve(sharp.size());
    for (int v : sharp) {
      auto [j, h] = eval_decode(q, pi, static_cast<std::uint64_t>(v));
      g.table.push_back(j);
      hs.push_back(std::move(h));
    }
    psi.fwd.push_back(static_cast<int>(subst_pos_encode(r, q, k, g)));
    SumLayout dl = subst_dir_layout(r, q, k, g);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(dl.total));
    for (std::uint64_t e = 0; e < dl.total; ++e) {
      auto [re, d] = dl.decode(e);
      t.push_back(hs[static_cast<std::size_t>(re)](static_cast<int>(d)));
    }
    psi.bwd.push_back(std::move(t));
  }
  validate(psi);
  return psi;
}

PolyMap rc_untranspose(const Poly& p, const Poly& q, const Poly& r, const PolyMap& psi) {
  if (psi.src != p || psi.tgt != substitute(r, q)) throw ShapeError("rc_untranspose: shape mismatch");
  Poly src = right_coclosure(p, q);
  PolyMap phi{src, r, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    FinSet pi = p.dir(i);
    auto [k, g] = subst_pos_decode(r, q, static_cast<std::uint64_t>(psi.fwd[static_cast<std::size_t>(i)]));
    phi.fwd.push_back(k);
    SumLayout dl = subst_dir_layout(r, q, k, g);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(r.dirs[static_cast<std::size_t>(k)]));
    for (int e = 0; e < r.dirs[static_cast<std::size_t>(k)]; ++e) {
      FinFn h{q.dir(g(e)), pi, {}};
      h.table.reserve(static_cast<std::size_t>(h.dom.size));
      for (int d = 0; d < h.dom.size; ++d)
        h.table.push_back(psi.bwd[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(dl.encode(e, static_cast<std::uint64_t>(d)))]);
      t.push_back(static_cast<int>(eval_encode(q, pi, g(e), h)));
    }
    phi.bwd.push_back(std::move(t));
  }
  validate(phi);
  return phi;
}

PolyMap coevaluation(const Poly& p, const Poly& q) {
  Poly rc = right_coclosure(p, q);
  return rc_transpose(p, q, rc, identity_map(rc));
}

PolyMap rc_fmap(const PolyMap& alpha, const PolyMap& beta) {
  // alpha: p -> p', beta: q' -> q; result [[p|q]] -> [[p'|q']]
  const Poly& p = alpha.src;
  const Poly& p2 = alpha.tgt;
  const Poly& q = beta.tgt;
  const Poly& q2 = beta.src;
  Poly src = right_coclosure(p, q), tgt = right_coclosure(p2, q2);
  PolyMap m{src, tgt, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    int i2 = alpha.fwd[static_cast<std::size_t>(i)];
    m.fwd.push_back(i2);
    FinFn asharp = bwd_fn(alpha, i);  // p'[i2] -> p[i]
    FinSet pi = p.dir(i), pi2 = p2.dir(i2);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(tgt.dirs[static_cast<std::size_t>(i2)]));
    for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(tgt.dirs[static_cast<std::size_t>(i2)]); ++v) {
      auto [j2, h2] = eval_decode(q2, pi2, v);  // h2: q'[j2] -> p'[i2]
      int j = beta.fwd[static_cast<std::size_t>(j2)];
      FinFn bsharp = bwd_fn(beta, j2);  // q[j] -> q'[j2]
      FinFn h = fn_compose(asharp, fn_compose(h2, bsharp));  // q[j] -> p[i]
      t.push_back(static_cast<int>(eval_encode(q, pi, j, h)));
    }
    m.bwd.push_back(std::move(t));
  }
  validate(m);
  return m;
}

SumLayout sub_coclosure_layout(const Poly& p, const Poly& q, const FinFn& f) {
  if (f.dom != p.positions() || f.cod != q.positions())
    throw ShapeError("sub_coclosure: index map shape mismatch");
  std::vector<int> sizes;
  sizes.reserve(p.dirs.size());
  for (int i = 0; i < p.num_positions(); ++i) sizes.push_back(q.dirs[static_cast<std::size_t>(f(i))]);
  return SumLayout(sizes);
}

Poly sub_coclosure(const Poly& p, const Poly& q, const FinFn& f) {
  SumLayout lay = sub_coclosure_layout(p, q, f);
  guard_size(lay.total, "sub_coclosure");
  Poly r;
  r.dirs.reserve(static_cast<std::size_t>(lay.total));
  for (int i = 0; i < p.num_positions(); ++i)
    for (int e = 0; e < q.dirs[static_cast<std::size_t>(f(i))]; ++e)
      r.dirs.push_back(p.dirs[static_cast<std::size_t>(i)]);
  return r;
}

SubDecomp decompose_sub(const Poly& p, const Poly& q, const Poly& r, const PolyMap& phi) {
  if (phi.src != p || phi.tgt != substitute(q, r)) throw ShapeError("decompose_sub: shape mismatch");
  FinFn f{p.positions(), q.positions(), {}};
  std::vector<FinFn> gs;
  gs.reserve(static_cast<std::size_t>(p.num_positions()));
  for (int i = 0; i < p.num_positions(); ++i) {
    auto [j, g] = subst_pos_decode(q, r, static_cast<std::uint64_t>(phi.fwd[static_cast<std::size_t>(i)]));
    f.table.push_back(j);
    gs.push_back(std::move(g));
  }
  Poly src = sub_coclosure(p, q, f);
  SumLayout lay = sub_coclosure_layout(p, q, f);
  PolyMap psi{src, r, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    const FinFn& g = gs[static_cast<std::size_t>(i)];
    SumLayout dl = subst_dir_layout(q, r, f(i), g);
    for (int e = 0; e < q.dirs[static_cast<std::size_t>(f(i))]; ++e) {
      psi.fwd.push_back(g(e));
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(r.dirs[static_cast<std::size_t>(g(e))]));
      for (int d = 0; d < r.dirs[static_cast<std::size_t>(g(e))]; ++d)
        t.push_back(phi.bwd[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(dl.encode(e, static_cast<std::uint64_t>(d)))]);
      psi.bwd.push_back(std::move(t));
    }
  }
  (void)lay;
  validate(psi);
  return {std::move(f), std::move(psi)};
}

PolyMap pair_sub(const Poly& p, const Poly& q, const Poly& r, const FinFn& f, const PolyMap& psi) {
  Poly src = sub_coclosure(p, q, f);
  if (psi.src != src || psi.tgt != r) throw ShapeError("pair_sub: shape mismatch");
  SumLayout lay = sub_coclosure_layout(p, q, f);
  PolyMap phi{p, substitute(q, r), {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    int j = f(i);
    FinFn g{q.dir(j), r.positions(), {}};
    g.table.reserve(static_cast<std::size_t>(g.dom.size));
    for (int e = 0; e < q.dirs[static_cast<std::size_t>(j)]; ++e)
      g.table.push_back(psi.fwd[static_cast<std::size_t>(lay.encode(i, static_cast<std::uint64_t>(e)))]);
    phi.fwd.push_back(static_cast<int>(subst_pos_encode(q, r, j, g)));
    SumLayout dl = subst_dir_layout(q, r, j, g);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(dl.total));
    for (std::uint64_t ed = 0; ed < dl.total; ++ed) {
      auto [e, d] = dl.decode(ed);
      t.push_back(psi.bwd[static_cast<std::size_t>(lay.encode(i, static_cast<std::uint64_t>(e)))]
                          [static_cast<std::size_t>(d)]);
    }
    phi.bwd.push_back(std::move(t));
  }
  validate(phi);
  return phi;
}

Poly tensor_coclosure(const Poly& p, const Poly& q, const FinFn& f) {
  if (f.dom != p.positions() || f.cod != q.positions())
    throw ShapeError("tensor_coclosure: index map shape mismatch");
  Poly r;
  r.dirs.reserve(p.dirs.size());
  for (int i = 0; i < p.num_positions(); ++i)
    r.dirs.push_back(static_cast<int>(
        guard_size(fn_count(q.dir(f(i)), p.dir(i)), "tensor_coclosure")));
  return r;
}

TensorDecomp decompose_tensor(const Poly& p, const Poly& q, const Poly& r, const PolyMap& phi) {
  if (phi.src != p || phi.tgt != tensor(q, r)) throw ShapeError("decompose_tensor: shape mismatch");
  int nr = r.num_positions();
  FinFn f{p.positions(), q.positions(), {}};
  std::vector<int> ks(static_cast<std::size_t>(p.num_positions()));
  for (int i = 0; i < p.num_positions(); ++i) {
    int jk = phi.fwd[static_cast<std::size_t>(i)];
    f.table.push_back(jk / nr);
    ks[static_cast<std::size_t>(i)] = jk % nr;
  }
  Poly src = tensor_coclosure(p, q, f);
  PolyMap psi{src, r, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    int j = f(i), k = ks[static_cast<std::size_t>(i)];
    psi.fwd.push_back(k);
    FinSet qj = q.dir(j), rk = r.dir(k), pi = p.dir(i);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(rk.size));
    for (int d = 0; d < rk.size; ++d) {
      FinFn h{qj, pi, {}};
      h.table.reserve(static_cast<std::size_t>(qj.size));
      for (int e = 0; e < qj.size; ++e)
        h.table.push_back(phi.bwd[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(pair_encode(qj, rk, e, d))]);
      t.push_back(static_cast<int>(fn_encode(h)));
    }
    psi.bwd.push_back(std::move(t));
  }
  validate(psi);
  return {std::move(f), std::move(psi)};
}

PolyMap pair_tensor(const Poly& p, const Poly& q, const Poly& r, const FinFn& f, const PolyMap& psi) {
  Poly src = tensor_coclosure(p, q, f);
  if (psi.src != src || psi.tgt != r) throw ShapeError("pair_tensor: shape mismatch");
  int nr = r.num_positions();
  PolyMap phi{p, tensor(q, r), {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    int j = f(i), k = psi.fwd[static_cast<std::size_t>(i)];
    phi.fwd.push_back(j * nr + k);
    FinSet qj = q.dir(j), rk = r.dir(k), pi = p.dir(i);
    std::vector<int> t(static_cast<std::size_t>(qj.size) * static_cast<std::size_t>(rk.size));
    for (int d = 0; d < rk.size; ++d) {
      FinFn h = fn_decode(qj, pi, static_cast<std::uint64_t>(psi.bwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]));
      for (int e = 0; e < qj.size; ++e)
        t[static_cast<std::size_t>(pair_encode(qj, rk, e, d))] = h(e);
    }
    phi.bwd.push_back(std::move(t));
  }
  validate(phi);
  return phi;
}

Poly deriv(const Poly& p) {
  Poly r;
  for (int d : p.dirs)
    for (int e = 0; e < d; ++e) r.dirs.push_back(d - 1);
  return r;
}

Poly star(const Poly& p) {
  Poly r;
  for (int d : p.dirs)
    for (int e = 0; e < d; ++e) r.dirs.push_back(d);
  return r;
}

namespace {
SumLayout star_layout(const Poly& p) { return SumLayout(p.dirs); }
}  // namespace

PolyMap star_counit(const Poly& p) {
  Poly s = star(p);
  PolyMap m{s, p, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i)
    for (int d = 0; d < p.dirs[static_cast<std::size_t>(i)]; ++d) {
      m.fwd.push_back(i);
      m.bwd.push_back(fn_identity(p.dir(i)).table);
    }
  validate(m);
  return m;
}

PolyMap star_to_y(const Poly& p) {
  Poly s = star(p);
  PolyMap m{s, poly_y(), {}, {}};
  for (int i = 0; i < p.num_positions(); ++i)
    for (int d = 0; d < p.dirs[static_cast<std::size_t>(i)]; ++d) {
      m.fwd.push_back(0);
      m.bwd.push_back({d});
    }
  validate(m);
  return m;
}

PolyMap star_map_cart(const PolyMap& phi) {
  if (!classify(phi).cartesian) throw ShapeError("star_map_cart: map is not cartesian");
  const Poly& p = phi.src;
  const Poly& q = phi.tgt;
  Poly sp = star(p), sq = star(q);
  SumLayout lq = star_layout(q);
  PolyMap m{sp, sq, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    int j = phi.fwd[static_cast<std::size_t>(i)];
    FinFn sharp = bwd_fn(phi, i);       // q[j] -> p[i], bijective
    FinFn inv = fn_inverse(sharp);      // p[i] -> q[j]
    for (int d = 0; d < p.dirs[static_cast<std::size_t>(i)]; ++d) {
      m.fwd.push_back(static_cast<int>(lq.encode(j, static_cast<std::uint64_t>(inv(d)))));
      m.bwd.push_back(sharp.table);
    }
  }
  validate(m);
  return m;
}

PolySpan span_of(const PolyMap& phi) {
  validate(phi);
  const Poly& p = phi.src;
  const Poly& q = phi.tgt;
  FinFn f = fwd_fn(phi);
  Poly apex = sub_coclosure(p, q, f);
  SumLayout lp = star_layout(p), lq = star_layout(q);
  PolySpan s;
  s.apex = apex;
  PolyMap left{apex, star(p), {}, {}};
  PolyMap right{apex, star(q), {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    int j = phi.fwd[static_cast<std::size_t>(i)];
    const auto& sharp = phi.bwd[static_cast<std::size_t>(i)];
    for (int e = 0; e < q.dirs[static_cast<std::size_t>(j)]; ++e) {
      left.fwd.push_back(static_cast<int>(lp.encode(i, static_cast<std::uint64_t>(sharp[static_cast<std::size_t>(e)]))));
      left.bwd.push_back(fn_identity(p.dir(i)).table);
      right.fwd.push_back(static_cast<int>(lq.encode(j, static_cast<std::uint64_t>(e))));
      right.bwd.push_back(sharp);
    }
  }
  s.left = std::move(left);
  s.right = std::move(right);
  validate(s.left);
  validate(s.right);
  return s;
}

PolySpan span_compose(const PolySpan& s1, const PolySpan& s2) {
  if (s1.right.tgt != s2.left.tgt) throw ShapeError("span_compose: middle objects differ");
  PolySpan pb = poly_pullback(s1.right, s2.left);
  PolySpan out;
  out.apex = pb.apex;
  out.left = compose(s1.left, pb.left);
  out.right = compose(s2.right, pb.right);
  return out;
}

IsoWitness span_compose_direct_iso(const PolyMap& phi, const PolyMap& psi) {
  if (phi.tgt != psi.src) throw ShapeError("span_compose_direct_iso: maps not composable");
  PolySpan s1 = span_of(phi), s2 = span_of(psi);
  PolySpan comp = span_compose(s1, s2);
  PolyMap chain = compose(psi, phi);
  Poly direct = sub_coclosure(phi.src, psi.tgt, fwd_fn(chain));
  // positions of the pullback apex: pairs (u, v) of apex1/apex2 positions
  // agreeing in star(q); recover the correspondence explicitly.
  PullbackSet pos = finset_pullback(fwd_fn(s1.right), fwd_fn(s2.left));
  const Poly& p = phi.src;
  const Poly& q = phi.tgt;
  const Poly& r = psi.tgt;
  SumLayout l1 = sub_coclosure_layout(p, q, fwd_fn(phi));
  SumLayout l2 = sub_coclosure_layout(q, r, fwd_fn(psi));
  SumLayout ld = sub_coclosure_layout(p, r, fwd_fn(chain));
  PolyMap fwd{direct, comp.apex, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    int j = phi.fwd[static_cast<std::size_t>(i)];
    int k = psi.fwd[static_cast<std::size_t>(j)];
    const auto& psisharp = psi.bwd[static_cast<std::size_t>(j)];  // r[k] -> q[j]
    for (int e2 = 0; e2 < r.dirs[static_cast<std::size_t>(k)]; ++e2) {
      int e = psisharp[static_cast<std::size_t>(e2)];
      int u = static_cast<int>(l1.encode(i, static_cast<std::uint64_t>(e)));
      int v = static_cast<int>(l2.encode(j, static_cast<std::uint64_t>(e2)));
      int w = pos.pair_index(u, v);
      if (w < 0) throw ShapeError("span_compose_direct_iso: pair not in pullback");
      std::uint64_t dpos = ld.encode(i, static_cast<std::uint64_t>(e2));
      (void)dpos;
      fwd.fwd.push_back(w);
      // apex direction is the pushout of p[i] <- q[j] -> q[j], which
      // renumbers to p[i] with from_a the identity
      PushoutSet po = finset_pushout(bwd_fn(s1.right, u), bwd_fn(s2.left, v));
      if (po.total != p.dir(i)) throw ShapeError("span_compose_direct_iso: pushout is not p[i]");
      fwd.bwd.push_back(fn_inverse(po.from_a).table);
    }
  }
  return invert(fwd);
}

FinFn bundle_eval_at_one(const PolyMap& phi) {
  const Poly& p = phi.src;
  const Poly& q = phi.tgt;
  Poly apex = sub_coclosure(p, q, fwd_fn(phi));
  SumLayout lq = star_layout(q);
  // pullback of p(1) -> q(1) <- q*(1)
  FinFn bundle{star(q).positions(), q.positions(), {}};
  for (int j = 0; j < q.num_positions(); ++j)
    for (int e = 0; e < q.dirs[static_cast<std::size_t>(j)]; ++e) bundle.table.push_back(j);
  PullbackSet pb = finset_pullback(fwd_fn(phi), bundle);
  FinFn out{apex.positions(), pb.total, {}};
  SumLayout la = sub_coclosure_layout(p, q, fwd_fn(phi));
  for (int i = 0; i < p.num_positions(); ++i) {
    int j = phi.fwd[static_cast<std::size_t>(i)];
    for (int e = 0; e < q.dirs[static_cast<std::size_t>(j)]; ++e) {
      int idx = pb.pair_index(i, static_cast<int>(lq.encode(j, static_cast<std::uint64_t>(e))));
      if (idx < 0) throw ShapeError("bundle_eval_at_one: missing pullback pair");
      out.table.push_back(idx);
    }
  }
  (void)la;
  if (!fn_bijective(out)) throw ShapeError("bundle_eval_at_one: not a bijection");
  return out;
}

void validate_monoid(const PolyMonoid& m) {
  validate(m.eta);
  validate(m.mu);
  if (m.eta.src != poly_y() || m.eta.tgt != m.carrier) throw ShapeError("monoid: eta has wrong shape");
  if (m.mu.src != substitute(m.carrier, m.carrier) || m.mu.tgt != m.carrier)
    throw ShapeError("monoid: mu has wrong shape");
  // left unit: y <| m = m literally, so mu . (eta <| m) must be the identity
  PolyMap lu = compose(m.mu, subst_map(m.eta, identity_map(m.carrier)));
  if (!is_identity(PolyMap{m.carrier, m.carrier, lu.fwd, lu.bwd}))
    throw ShapeError("monoid: left unit law fails");
  PolyMap ru = compose(m.mu, subst_map(identity_map(m.carrier), m.eta));
  if (!is_identity(PolyMap{m.carrier, m.carrier, ru.fwd, ru.bwd}))
    throw ShapeError("monoid: right unit law fails");
  // associativity through the <| associator
  IsoWitness assoc = product_assoc(ProductKind::Subst, m.carrier, m.carrier, m.carrier);
  PolyMap lhs = compose(m.mu, subst_map(m.mu, identity_map(m.carrier)));
  PolyMap rhs = compose(compose(m.mu, subst_map(identity_map(m.carrier), m.mu)), assoc.fwd);
  if (!map_equal(lhs, rhs)) throw ShapeError("monoid: associativity fails");
}

PolyMonoid identity_monoid() {
  Poly y = poly_y();
  PolyMonoid m{y, identity_map(y), {}};
  Poly yy = substitute(y, y);
  m.mu = PolyMap{yy, y, {0}, {{0}}};
  validate_monoid(m);
  return m;
}

Poly u_trunc(int n) {
  if (n < 0) throw ShapeError("u_trunc: negative depth");
  Poly u;
  u.dirs.resize(static_cast<std::size_t>(n) + 1);
  std::iota(u.dirs.begin(), u.dirs.end(), 0);
  return u;
}

Poly lawvere_trunc(const PolyMonoid& m, int n) {
  validate_monoid(m);
  Poly u = u_trunc(n);
  return right_coclosure(u, substitute(u, m.carrier));
}

}  // namespace poly
