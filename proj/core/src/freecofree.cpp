#include "polycalc/freecofree.hpp"

#include <numeric>

namespace poly {

TruncChain cofree_trunc(const Poly& p, int depth) {
  if (depth < 0) throw ShapeError("cofree_trunc: negative depth");
  TruncChain c;
  c.base = p;
  c.depth = depth;
  c.is_free = false;
  c.stages.push_back(poly_y());
  for (int k = 0; k < depth; ++k)
    c.stages.push_back(times(substitute(p, c.stages.back()), poly_y()));
  if (depth >= 1) {
    // f0: p x y -> y, projection onto the appended direction
    const Poly& s1 = c.stages[1];
    PolyMap f0{s1, poly_y(), {}, {}};
    for (int i = 0; i < s1.num_positions(); ++i) {
      f0.fwd.push_back(0);
      f0.bwd.push_back({s1.dirs[static_cast<std::size_t>(i)] - 1});
    }
    validate(f0);
    c.links.push_back(std::move(f0));
    for (int k = 1; k < depth; ++k)
      c.links.push_back(times_map(subst_map(identity_map(p), c.links.back()), identity_map(poly_y())));
  }
  for (int k = 0; k < static_cast<int>(c.links.size()); ++k)
    if (classify(c.links[static_cast<std::size_t>(k)]).iso) { c.stabilized_at = k; break; }
  return c;
}

TruncChain free_trunc(const Poly& p, int depth) {
  if (depth < 0) throw ShapeError("free_trunc: negative depth");
  TruncChain c;
  c.base = p;
  c.depth = depth;
  c.is_free = true;
  c.stages.push_back(poly_y());
  for (int k = 0; k < depth; ++k)
    c.stages.push_back(coproduct(poly_y(), substitute(p, c.stages.back())));
  if (depth >= 1) {
    c.links.push_back(coproduct_inl(poly_y(), substitute(p, poly_y())));
    for (int k = 1; k < depth; ++k)
      c.links.push_back(coproduct_map(identity_map(poly_y()), subst_map(identity_map(p), c.links.back())));
  }
  for (int k = 0; k < static_cast<int>(c.links.size()); ++k)
    if (classify(c.links[static_cast<std::size_t>(k)]).iso) { c.stabilized_at = k; break; }
  return c;
}

PolyMap chain_link_composite(const TruncChain& c, int from, int to) {
  if (from < 0 || from > c.depth || to < 0 || to > c.depth)
    throw ShapeError("chain_link_composite: stage out of range");
  PolyMap m = identity_map(c.stages[static_cast<std::size_t>(from)]);
  if (c.is_free) {
    if (to < from) throw ShapeError("chain_link_composite: free links go upward");
    for (int k = from; k < to; ++k) m = compose(c.links[static_cast<std::size_t>(k)], m);
  } else {
    if (to > from) throw ShapeError("chain_link_composite: cofree links go downward");
    for (int k = from; k > to; --k) m = compose(c.links[static_cast<std::size_t>(k - 1)], m);
  }
  return m;
}

// ---- cofree tree codecs ----

CofreeTree cofree_pos_decode(const TruncChain& c, int k, std::uint64_t pos) {
  if (k == 0) {
    if (pos != 0) throw ShapeError("cofree_pos_decode: bad stub position");
    return {};
  }
  auto [root, assign] = subst_pos_decode(c.base, c.stages[static_cast<std::size_t>(k - 1)], pos);
  CofreeTree t;
  t.root = root;
  t.kids.reserve(assign.table.size());
  for (int v : assign.table) t.kids.push_back(cofree_pos_decode(c, k - 1, static_cast<std::uint64_t>(v)));
  return t;
}

std::uint64_t cofree_pos_encode(const TruncChain& c, int k, const CofreeTree& t) {
  if (k == 0) {
    if (t.root != -1) throw ShapeError("cofree_pos_encode: tree too tall for stage 0");
    return 0;
  }
  if (t.root == -1) throw ShapeError("cofree_pos_encode: stub at positive stage");
  const Poly& prev = c.stages[static_cast<std::size_t>(k - 1)];
  FinFn assign{c.base.dir(t.root), prev.positions(), {}};
  assign.table.reserve(t.kids.size());
  for (const CofreeTree& kid : t.kids)
    assign.table.push_back(static_cast<int>(cofree_pos_encode(c, k - 1, kid)));
  return subst_pos_encode(c.base, prev, t.root, assign);
}

namespace {

CofreeTree truncate_tree(const CofreeTree& t, int n) {
  if (n == 0) return {};
  if (t.root == -1) throw ShapeError("truncate_tree: stub below requested height");
  CofreeTree out;
  out.root = t.root;
  out.kids.reserve(t.kids.size());
  for (const CofreeTree& kid : t.kids) out.kids.push_back(truncate_tree(kid, n - 1));
  return out;
}

// paths of length <= k in a stage-k tree, in direction-index order
using Path = std::vector<int>;

Path cofree_path_decode(const TruncChain& c, int k, const CofreeTree& t, std::uint64_t dir) {
  if (k == 0) {
    if (dir != 0) throw ShapeError("cofree_path_decode: bad stage-0 direction");
    return {};
  }
  const Poly& prev = c.stages[static_cast<std::size_t>(k - 1)];
  FinFn assign{c.base.dir(t.root), prev.positions(), {}};
  for (const CofreeTree& kid : t.kids)
    assign.table.push_back(static_cast<int>(cofree_pos_encode(c, k - 1, kid)));
  SumLayout lay = subst_dir_layout(c.base, prev, t.root, assign);
  if (dir == lay.total) return {};  // the appended stop
  auto [i, d] = lay.decode(dir);
  Path rest = cofree_path_decode(c, k - 1, t.kids[static_cast<std::size_t>(i)], d);
  Path out{i};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::uint64_t cofree_path_encode(const TruncChain& c, int k, const CofreeTree& t, const Path& path) {
  if (k == 0) {
    if (!path.empty()) throw ShapeError("cofree_path_encode: path too long");
    return 0;
  }
  const Poly& prev = c.stages[static_cast<std::size_t>(k - 1)];
  FinFn assign{c.base.dir(t.root), prev.positions(), {}};
  for (const CofreeTree& kid : t.kids)
    assign.table.push_back(static_cast<int>(cofree_pos_encode(c, k - 1, kid)));
  SumLayout lay = subst_dir_layout(c.base, prev, t.root, assign);
  if (path.empty()) return lay.total;  // the stop direction sits last
  Path rest(path.begin() + 1, path.end());
  return lay.encode(path.front(),
                    cofree_path_encode(c, k - 1, t.kids[static_cast<std::size_t>(path.front())], rest));
}

const CofreeTree* subtree_at(const CofreeTree& t, const Path& path) {
  const CofreeTree* cur = &t;
  for (int i : path) cur = &cur->kids[static_cast<std::size_t>(i)];
  return cur;
}

}  // namespace

PolyMap cofree_comult(const TruncChain& c, int m, int n) {
  if (c.is_free) throw ShapeError("cofree_comult: chain is a free chain");
  if (m < 0 || n < 0 || m + n > c.depth) throw ShapeError("cofree_comult: depth exceeded");
  const Poly& smn = c.stages[static_cast<std::size_t>(m + n)];
  const Poly& sm = c.stages[static_cast<std::size_t>(m)];
  const Poly& sn = c.stages[static_cast<std::size_t>(n)];
  Poly tgt = substitute(sm, sn);
  PolyMap out{smn, tgt, {}, {}};
  for (std::uint64_t pos = 0; pos < static_cast<std::uint64_t>(smn.num_positions()); ++pos) {
    CofreeTree t = cofree_pos_decode(c, m + n, pos);
    CofreeTree tm = truncate_tree(t, m);
    std::uint64_t tmpos = cofree_pos_encode(c, m, tm);
    // assignment: each length-<=m path goes to the n-truncated subtree there
    FinFn g{sm.dir(static_cast<int>(tmpos)), sn.positions(), {}};
    g.table.reserve(static_cast<std::size_t>(g.dom.size));
    std::vector<Path> paths;
    paths.reserve(static_cast<std::size_t>(g.dom.size));
    for (std::uint64_t d = 0; d < static_cast<std::uint64_t>(g.dom.size); ++d) {
      Path pi = cofree_path_decode(c, m, tm, d);
      CofreeTree sub = truncate_tree(*subtree_at(t, pi), n);
      g.table.push_back(static_cast<int>(cofree_pos_encode(c, n, sub)));
      paths.push_back(std::move(pi));
    }
    out.fwd.push_back(static_cast<int>(subst_pos_encode(sm, sn, static_cast<int>(tmpos), g)));
    // backward: (pi, pi') -> pi . pi'
    SumLayout lay = subst_dir_layout(sm, sn, static_cast<int>(tmpos), g);
    std::vector<int> bwd;
    bwd.reserve(static_cast<std::size_t>(lay.total));
    for (std::uint64_t e = 0; e < lay.total; ++e) {
      auto [dm, dn] = lay.decode(e);
      const Path& pi = paths[static_cast<std::size_t>(dm)];
      CofreeTree subn = truncate_tree(*subtree_at(t, pi), n);
      Path pi2 = cofree_path_decode(c, n, subn, dn);
      Path joined = pi;
      joined.insert(joined.end(), pi2.begin(), pi2.end());
      bwd.push_back(static_cast<int>(cofree_path_encode(c, m + n, t, joined)));
    }
    out.bwd.push_back(std::move(bwd));
  }
  validate(out);
  return out;
}

PolyMap cofree_counit(const TruncChain& c, int k) { return chain_link_composite(c, k, 0); }

PolyMap cofree_unit_y(int k) {
  Poly y = poly_y();
  PolyMap h = identity_map(y);
  TruncChain c = cofree_trunc(y, k);
  for (int i = 0; i < k; ++i) {
    // y -> (s_i x y); substitute(y, s_i) == s_i literally
    PolyMap paired = pairing(h, identity_map(y));
    paired.tgt = c.stages[static_cast<std::size_t>(i + 1)];
    validate(paired);
    h = std::move(paired);
  }
  return h;
}

PolyMap cofree_lax_tensor(const Poly& p, const Poly& q, int k) {
  Poly pq = tensor(p, q);
  TruncChain cp = cofree_trunc(p, k), cq = cofree_trunc(q, k), cpq = cofree_trunc(pq, k);
  // recursive construction up the stages
  PolyMap lax{tensor(poly_y(), poly_y()), poly_y(), {0}, {{0}}};
  validate(lax);
  for (int i = 0; i < k; ++i) {
    const Poly& a = cp.stages[static_cast<std::size_t>(i)];
    const Poly& b = cq.stages[static_cast<std::size_t>(i)];
    Poly sa = substitute(p, a), sb = substitute(q, b);
    // step 1: (sa x y) ox (sb x y) -> (sa ox sb) x y, pairing the stops
    Poly src = tensor(times(sa, poly_y()), times(sb, poly_y()));
    Poly mid = times(tensor(sa, sb), poly_y());
    PolyMap stops{src, mid, {}, {}};
    int nb = sb.num_positions();
    for (int A = 0; A < sa.num_positions(); ++A)
      for (int B = 0; B < nb; ++B) {
        stops.fwd.push_back(A * nb + B);
        int da = sa.dirs[static_cast<std::size_t>(A)], db = sb.dirs[static_cast<std::size_t>(B)];
        std::vector<int> t;
        t.reserve(static_cast<std::size_t>(da * db + 1));
        for (int d = 0; d < da; ++d)
          for (int e = 0; e < db; ++e)
            t.push_back(pair_encode(FinSet{da + 1}, FinSet{db + 1}, d, e));
        t.push_back(pair_encode(FinSet{da + 1}, FinSet{db + 1}, da, db));
        stops.bwd.push_back(std::move(t));
      }
    validate(stops);
    // step 2: duoidal, step 3: recurse inside
    PolyMap duo = duoidal_map(p, a, q, b);
    PolyMap step23 = times_map(compose(subst_map(identity_map(pq), lax), duo), identity_map(poly_y()));
    PolyMap next = compose(step23, stops);
    next.tgt = cpq.stages[static_cast<std::size_t>(i + 1)];
    validate(next);
    lax = std::move(next);
  }
  return lax;
}

PolyMap cofree_hom_map(const Poly& p, const Poly& q, const Poly& p2, const Poly& q2, int k) {
  Poly a = dirichlet_closure(p, q);
  Poly b = dirichlet_closure(p2, q2);
  Poly qq = coproduct(q, q2);
  Poly x = dirichlet_closure(coproduct(p, p2), qq);
  TruncChain ca = cofree_trunc(a, k), cb = cofree_trunc(b, k), cx = cofree_trunc(x, k);
  // static piece w1: a1 ox b1 -> x, where a1 = a x y, b1 = b x y
  // component into [p, q+q']: project to a, then push the codomain inclusion
  PolyMap w1;
  {
    Poly a1 = times(a, poly_y());  // stage 1 of the a-chain
    Poly b1 = times(b, poly_y());
    PolyMap proj_a = times_proj1(a, poly_y());
    PolyMap proj_b = times_proj1(b, poly_y());
    PolyMap stop_a{a1, poly_y(), std::vector<int>(static_cast<std::size_t>(a1.num_positions()), 0), {}};
    for (int i = 0; i < a1.num_positions(); ++i)
      stop_a.bwd.push_back({a1.dirs[static_cast<std::size_t>(i)] - 1});
    validate(stop_a);
    PolyMap stop_b{b1, poly_y(), std::vector<int>(static_cast<std::size_t>(b1.num_positions()), 0), {}};
    for (int i = 0; i < b1.num_positions(); ++i)
      stop_b.bwd.push_back({b1.dirs[static_cast<std::size_t>(i)] - 1});
    validate(stop_b);
    // a1 ox b1 -> a ox y = a, then include the codomain: [p,q] -> [p,q+q']
    PolyMap to_a = tensor_map(proj_a, stop_b);
    to_a.tgt = a;  // a ox y == a literally
    validate(to_a);
    PolyMap left = compose(dirichlet_map(identity_map(p), coproduct_inl(q, q2)), to_a);
    PolyMap to_b = tensor_map(stop_a, proj_b);
    to_b.tgt = b;  // y ox b == b literally
    validate(to_b);
    PolyMap right = compose(dirichlet_map(identity_map(p2), coproduct_inr(q, q2)), to_b);
    w1 = pairing(left, right);
    w1.tgt = x;  // [p,q+q'] x [p',q+q'] == [p+p',q+q'] literally
    validate(w1);
  }
  // stage recursion
  PolyMap h{tensor(poly_y(), poly_y()), poly_y(), {0}, {{0}}};
  validate(h);
  for (int i = 0; i < k; ++i) {
    const Poly& ai1 = ca.stages[static_cast<std::size_t>(i + 1)];
    const Poly& bi1 = cb.stages[static_cast<std::size_t>(i + 1)];
    PolyMap da = cofree_comult(ca, 1, i);  // a_{i+1} -> a_1 <| a_i
    PolyMap db = cofree_comult(cb, 1, i);
    PolyMap duo = duoidal_map(ca.stages[1], ca.stages[static_cast<std::size_t>(i)],
                              cb.stages[1], cb.stages[static_cast<std::size_t>(i)]);
    PolyMap u = compose(subst_map(w1, h), compose(duo, tensor_map(da, db)));
    // v: the paired stops
    PolyMap stop_a{ai1, poly_y(), std::vector<int>(static_cast<std::size_t>(ai1.num_positions()), 0), {}};
    for (int ii = 0; ii < ai1.num_positions(); ++ii)
      stop_a.bwd.push_back({ai1.dirs[static_cast<std::size_t>(ii)] - 1});
    PolyMap stop_b{bi1, poly_y(), std::vector<int>(static_cast<std::size_t>(bi1.num_positions()), 0), {}};
    for (int ii = 0; ii < bi1.num_positions(); ++ii)
      stop_b.bwd.push_back({bi1.dirs[static_cast<std::size_t>(ii)] - 1});
    validate(stop_a);
    validate(stop_b);
    PolyMap v = tensor_map(stop_a, stop_b);
    v.tgt = poly_y();  // y ox y == y
    validate(v);
    PolyMap next = pairing(u, v);
    next.tgt = cx.stages[static_cast<std::size_t>(i + 1)];
    validate(next);
    h = std::move(next);
  }
  return h;
}

PolyMap free_eta(const TruncChain& c, int k) {
  if (!c.is_free) throw ShapeError("free_eta: chain is not free");
  return chain_link_composite(c, 0, k);
}

PolyMap free_mu(const TruncChain& c, int m, int n) {
  if (!c.is_free) throw ShapeError("free_mu: chain is not free");
  if (m < 0 || n < 0 || m + n > c.depth) throw ShapeError("free_mu: depth exceeded");
  const Poly& sn = c.stages[static_cast<std::size_t>(n)];
  if (m == 0) {
    PolyMap out = identity_map(sn);
    out.src = substitute(poly_y(), sn);  // equal tables
    validate(out);
    return out;
  }
  // s_m = y + (p <| s_{m-1}); substitution distributes literally over +
  PolyMap inner = free_mu(c, m - 1, n);  // s_{m-1} <| s_n -> s_{m+n-1}
  const Poly& smn = c.stages[static_cast<std::size_t>(m + n)];
  PolyMap left = chain_link_composite(c, n, m + n);  // s_n -> s_{m+n}
  IsoWitness assoc = product_assoc(ProductKind::Subst, c.base,
                                   c.stages[static_cast<std::size_t>(m - 1)], sn);
  PolyMap graft = compose(subst_map(identity_map(c.base), inner), assoc.fwd);
  // p <| s_{m+n-1} -> y + (p <| s_{m+n-1}) = s_{m+n}
  PolyMap inr = coproduct_inr(poly_y(), substitute(c.base, c.stages[static_cast<std::size_t>(m + n - 1)]));
  inr.tgt = smn;
  validate(inr);
  PolyMap right = compose(inr, graft);
  PolyMap out = copair(left, right);
  out.src = substitute(c.stages[static_cast<std::size_t>(m)], sn);  // equal tables
  validate(out);
  return out;
}

PolyMap free_incl_map(const PolyMap& phi, const TruncChain& cp, const TruncChain& cq, int k) {
  if (phi.src != cp.base || phi.tgt != cq.base) throw ShapeError("free_incl_map: base mismatch");
  PolyMap m = identity_map(poly_y());
  for (int i = 0; i < k; ++i) {
    m = coproduct_map(identity_map(poly_y()), subst_map(phi, m));
    m.src = cp.stages[static_cast<std::size_t>(i + 1)];
    m.tgt = cq.stages[static_cast<std::size_t>(i + 1)];
    validate(m);
  }
  return m;
}

FinSet free_algebra(const Poly& p, FinSet x, int k) {
  TruncChain c = free_trunc(p, k);
  return eval_set(c.stages[static_cast<std::size_t>(k)], x);
}

FinFn free_algebra_inclusion(const Poly& p, FinSet x, int k) {
  TruncChain c = free_trunc(p, k);
  Poly px = coproduct(p, constant(x.size));
  TruncChain c2 = free_trunc(px, k + 1);
  FinSet zero{0};
  // recursive injection builder
  std::vector<FinFn> inj(static_cast<std::size_t>(k) + 1);
  {
    // stage 0: X -> eval(s'_1, 0)
    const Poly& s1 = c2.stages[1];  // y + (p + X)
    FinFn f{eval_set(c.stages[0], x), eval_set(s1, zero), {}};
    for (int v = 0; v < x.size; ++v) {
      FinFn empty{FinSet{0}, zero, {}};
      f.table.push_back(static_cast<int>(eval_encode(s1, zero, 1 + p.num_positions() + v, empty)));
    }
    inj[0] = std::move(f);
  }
  for (int i = 1; i <= k; ++i) {
    const Poly& si = c.stages[static_cast<std::size_t>(i)];       // y + (p <| s_{i-1})
    const Poly& ti = c2.stages[static_cast<std::size_t>(i + 1)];  // y + ((p+X) <| t_i)
    const Poly& prev = c.stages[static_cast<std::size_t>(i - 1)];
    const Poly& tprev = c2.stages[static_cast<std::size_t>(i)];
    Poly sub = substitute(p, prev);
    FinFn f{eval_set(si, x), eval_set(ti, zero), {}};
    f.table.reserve(static_cast<std::size_t>(f.dom.size));
    for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(f.dom.size); ++v) {
      auto [pos, g] = eval_decode(si, x, v);
      if (pos == 0) {
        // leaf x at the root
        int xv = g(0);
        FinFn emptyassign{FinSet{0}, tprev.positions(), {}};
        std::uint64_t w = subst_pos_encode(px, tprev, p.num_positions() + xv, emptyassign);
        FinFn empty{FinSet{0}, zero, {}};
        f.table.push_back(static_cast<int>(eval_encode(ti, zero, 1 + static_cast<int>(w), empty)));
      } else {
        auto [root, assign] = subst_pos_decode(p, prev, static_cast<std::uint64_t>(pos - 1));
        SumLayout lay = subst_dir_layout(p, prev, root, assign);
        FinFn assign2{px.dir(root), tprev.positions(), {}};
        for (int i2 = 0; i2 < p.dirs[static_cast<std::size_t>(root)]; ++i2) {
          // child i2: the eval element (assign(i2), g restricted to block i2)
          FinFn sub_g{prev.dir(assign(i2)), x, {}};
          for (int d = 0; d < prev.dirs[static_cast<std::size_t>(assign(i2))]; ++d)
            sub_g.table.push_back(g(static_cast<int>(lay.encode(i2, static_cast<std::uint64_t>(d)))));
          std::uint64_t child = eval_encode(prev, x, assign(i2), sub_g);
          int mapped = inj[static_cast<std::size_t>(i - 1)](static_cast<int>(child));
          auto [cpos, cg] = eval_decode(tprev, zero, static_cast<std::uint64_t>(mapped));
          (void)cg;
          assign2.table.push_back(cpos);
        }
        std::uint64_t w = subst_pos_encode(px, tprev, root, assign2);
        FinFn empty{FinSet{0}, zero, {}};
        f.table.push_back(static_cast<int>(eval_encode(ti, zero, 1 + static_cast<int>(w), empty)));
      }
    }
    inj[static_cast<std::size_t>(i)] = std::move(f);
  }
  if (!fn_injective(inj[static_cast<std::size_t>(k)]))
    throw ShapeError("free_algebra_inclusion: not injective");
  return inj[static_cast<std::size_t>(k)];
}

int vee_lax_target_depth(VeeLaxKind which, int k) {
  switch (which) {
    case VeeLaxKind::Plus: return k + 1;
    case VeeLaxKind::Tensor: return 2 * k;
    case VeeLaxKind::Subst: return 2 * k;
    case VeeLaxKind::Vee: return std::max(k + 1, 2 * k);
  }
  throw ShapeError("vee_lax_target_depth: bad kind");
}

namespace {

// tensor(a+b, c+d) ~= a.c + a.d + b.c + b.d with blocks in that order
IsoWitness tensor_dist4(const Poly& a, const Poly& b, const Poly& cc, const Poly& d) {
  Poly lhs = tensor(coproduct(a, b), coproduct(cc, d));
  Poly rhs = coproduct(coproduct(coproduct(tensor(a, cc), tensor(a, d)), tensor(b, cc)), tensor(b, d));
  int na = a.num_positions(), nb = b.num_positions();
  int nc = cc.num_positions(), nd = d.num_positions();
  SumLayout blocks(std::vector<int>{na * nc, na * nd, nb * nc, nb * nd});
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int xx = 0; xx < na + nb; ++xx)
    for (int yy = 0; yy < nc + nd; ++yy) {
      int img;
      if (xx < na && yy < nc) img = static_cast<int>(blocks.encode(0, static_cast<std::uint64_t>(xx * nc + yy)));
      else if (xx < na) img = static_cast<int>(blocks.encode(1, static_cast<std::uint64_t>(xx * nd + (yy - nc))));
      else if (yy < nc) img = static_cast<int>(blocks.encode(2, static_cast<std::uint64_t>((xx - na) * nc + yy)));
      else img = static_cast<int>(blocks.encode(3, static_cast<std::uint64_t>((xx - na) * nd + (yy - nc))));
      fwd.fwd.push_back(img);
      int lpos = xx * (nc + nd) + yy;
      if (rhs.dirs[static_cast<std::size_t>(img)] != lhs.dirs[static_cast<std::size_t>(lpos)])
        throw ShapeError("tensor_dist4: direction sizes disagree");
      fwd.bwd.push_back(fn_identity(lhs.dir(lpos)).table);
    }
  return invert(fwd);
}

PolyMap free_tensor_interleave(const Poly& p, const Poly& q, const TruncChain& cp,
                               const TruncChain& cq, const TruncChain& cv, int k) {
  Poly v = cv.base;
  PolyMap inl = garner_inl(p, q, DayKind::Tensor);
  PolyMap inr = garner_inr(p, q, DayKind::Tensor);
  PolyMap mid = garner_mid(p, q, DayKind::Tensor);
  // Phi_0: y ox y -> r_0
  PolyMap phi{tensor(poly_y(), poly_y()), poly_y(), {0}, {{0}}};
  validate(phi);
  for (int i = 0; i < k; ++i) {
    const Poly& ap = cp.stages[static_cast<std::size_t>(i)];
    const Poly& aq = cq.stages[static_cast<std::size_t>(i)];
    Poly P = substitute(p, ap), Q = substitute(q, aq);
    IsoWitness dist = tensor_dist4(poly_y(), P, poly_y(), Q);
    int d = 2 * (i + 1);
    const Poly& target = cv.stages[static_cast<std::size_t>(d)];
    // block y ox y = y: eta
    PolyMap m00 = chain_link_composite(cv, 0, d);
    m00.src = tensor(poly_y(), poly_y());
    validate(m00);
    // block y ox Q = Q -> v <| r_i -> r_{i+1} -> r_d
    PolyMap incq = free_incl_map(inr, cq, cv, i);
    PolyMap m01 = subst_map(inr, incq);  // Q -> v <| r_i
    PolyMap step{substitute(v, cv.stages[static_cast<std::size_t>(i)]),
                 cv.stages[static_cast<std::size_t>(i + 1)], {}, {}};
    {
      PolyMap in2 = coproduct_inr(poly_y(), substitute(v, cv.stages[static_cast<std::size_t>(i)]));
      in2.tgt = cv.stages[static_cast<std::size_t>(i + 1)];
      validate(in2);
      step = std::move(in2);
    }
    m01 = compose(chain_link_composite(cv, i + 1, d), compose(step, m01));
    m01.src = tensor(poly_y(), Q);
    validate(m01);
    // block P ox y = P -> v <| r_i -> r_d
    PolyMap incp = free_incl_map(inl, cp, cv, i);
    PolyMap m02 = compose(chain_link_composite(cv, i + 1, d), compose(step, subst_map(inl, incp)));
    m02.src = tensor(P, poly_y());
    validate(m02);
    // block P ox Q: duoidal, then mid <| phi, then inr, then links
    PolyMap duo = duoidal_map(p, ap, q, aq);
    PolyMap m03 = compose(subst_map(mid, phi), duo);  // -> v <| r_{2i}
    PolyMap step2 = coproduct_inr(poly_y(), substitute(v, cv.stages[static_cast<std::size_t>(2 * i)]));
    step2.tgt = cv.stages[static_cast<std::size_t>(2 * i + 1)];
    validate(step2);
    m03 = compose(chain_link_composite(cv, 2 * i + 1, d), compose(step2, m03));
    PolyMap glued = copair(copair(copair(m00, m01), m02), m03);
    PolyMap next = compose(glued, dist.fwd);
    next.src = tensor(cp.stages[static_cast<std::size_t>(i + 1)], cq.stages[static_cast<std::size_t>(i + 1)]);
    next.tgt = target;
    validate(next);
    phi = std::move(next);
  }
  return phi;
}

}  // namespace

PolyMap free_vee_lax(const Poly& p, const Poly& q, int k, VeeLaxKind which) {
  Poly v = vee(p, q);
  int d = vee_lax_target_depth(which, k);
  TruncChain cp = free_trunc(p, k), cq = free_trunc(q, k), cv = free_trunc(v, d);
  PolyMap inl = garner_inl(p, q, DayKind::Tensor);
  PolyMap inr = garner_inr(p, q, DayKind::Tensor);
  switch (which) {
    case VeeLaxKind::Plus: {
      PolyMap a = compose(chain_link_composite(cv, k, d), free_incl_map(inl, cp, cv, k));
      PolyMap b = compose(chain_link_composite(cv, k, d), free_incl_map(inr, cq, cv, k));
      return copair(a, b);
    }
    case VeeLaxKind::Tensor:
      return free_tensor_interleave(p, q, cp, cq, cv, k);
    case VeeLaxKind::Subst: {
      PolyMap incp = free_incl_map(inl, cp, cv, k);
      PolyMap incq = free_incl_map(inr, cq, cv, k);
      PolyMap m = compose(free_mu(cv, k, k), subst_map(incp, incq));
      return m;
    }
    case VeeLaxKind::Vee: {
      PolyMap b1 = compose(chain_link_composite(cv, k, d), free_incl_map(inl, cp, cv, k));
      PolyMap b3 = compose(chain_link_composite(cv, k, d), free_incl_map(inr, cq, cv, k));
      PolyMap b2 = compose(chain_link_composite(cv, 2 * k, d),
                           free_tensor_interleave(p, q, cp, cq, cv, k));
      PolyMap out = copair(copair(b1, b2), b3);
      out.src = vee(cp.stages[static_cast<std::size_t>(k)], cq.stages[static_cast<std::size_t>(k)]);
      validate(out);
      return out;
    }
  }
  throw ShapeError("free_vee_lax: bad kind");
}

}  // namespace poly
