#include "polycalc/closures.hpp"

namespace poly {

Poly product_fold(std::span<const Poly> factors) {
  Poly r = poly_one();
  for (const Poly& f : factors) r = times(r, f);
  return r;
}

namespace {
std::vector<int> factor_sizes(std::span<const Poly> factors) {
  std::vector<int> ns;
  ns.reserve(factors.size());
  for (const Poly& f : factors) ns.push_back(f.num_positions());
  return ns;
}
}  // namespace

std::vector<int> fold_pos_decode(std::span<const Poly> factors, std::uint64_t idx) {
  return mr_decode(factor_sizes(factors), idx);
}

std::uint64_t fold_pos_encode(std::span<const Poly> factors, std::span<const int> components) {
  return mr_encode(factor_sizes(factors), components);
}

std::vector<int> fold_dir_offsets(std::span<const Poly> factors, std::span<const int> components) {
  std::vector<int> offsets;
  offsets.reserve(factors.size());
  int off = 0;
  for (std::size_t t = 0; t < factors.size(); ++t) {
    offsets.push_back(off);
    off += factors[t].dirs[static_cast<std::size_t>(components[t])];
  }
  return offsets;
}

Poly cart_factor(const Poly& q, const Poly& p, int i) {
  return substitute(q, coproduct(constant(p.dirs[static_cast<std::size_t>(i)]), poly_y()));
}

Poly cart_closure(const Poly& q, const Poly& p) {
  std::vector<Poly> factors;
  factors.reserve(p.dirs.size());
  for (int i = 0; i < p.num_positions(); ++i) factors.push_back(cart_factor(q, p, i));
  return product_fold(factors);
}

PolyMap transpose_cart(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& phi) {
  if (phi.src != times(pp, p) || phi.tgt != q) throw ShapeError("transpose_cart: shape mismatch");
  std::vector<Poly> factors;
  for (int i = 0; i < p.num_positions(); ++i) factors.push_back(cart_factor(q, p, i));
  Poly qp = product_fold(factors);
  int np = p.num_positions();
  PolyMap psi{pp, qp, {}, {}};
  for (int ip = 0; ip < pp.num_positions(); ++ip) {
    int dpp = pp.dirs[static_cast<std::size_t>(ip)];
    std::vector<int> comps(static_cast<std::size_t>(np));
    std::vector<FinFn> assigns;
    assigns.reserve(static_cast<std::size_t>(np));
    std::vector<int> js(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) {
      int srcpos = ip * np + i;
      int j = phi.fwd[static_cast<std::size_t>(srcpos)];
      js[static_cast<std::size_t>(i)] = j;
      const auto& sharp = phi.bwd[static_cast<std::size_t>(srcpos)];  // q[j] -> pp[ip]+p[i]
      int di = p.dirs[static_cast<std::size_t>(i)];
      Poly piy = coproduct(constant(di), poly_y());
      FinFn f{q.dir(j), piy.positions(), {}};
      f.table.reserve(sharp.size());
      for (int v : sharp) f.table.push_back(v < dpp ? di : v - dpp);
      comps[static_cast<std::size_t>(i)] =
          static_cast<int>(subst_pos_encode(q, piy, j, f));
      assigns.push_back(std::move(f));
    }
    psi.fwd.push_back(static_cast<int>(fold_pos_encode(factors, comps)));
    // backward: directions of q^p at the tuple -> pp[ip]
    std::vector<int> offsets = fold_dir_offsets(factors, comps);
    int total = 0;
    for (int i = 0; i < np; ++i)
      total += factors[static_cast<std::size_t>(i)].dirs[static_cast<std::size_t>(comps[static_cast<std::size_t>(i)])];
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i < np; ++i) {
      int di = p.dirs[static_cast<std::size_t>(i)];
      Poly piy = coproduct(constant(di), poly_y());
      SumLayout dl = subst_dir_layout(q, piy, js[static_cast<std::size_t>(i)], assigns[static_cast<std::size_t>(i)]);
      int srcpos = ip * np + i;
      const auto& sharp = phi.bwd[static_cast<std::size_t>(srcpos)];
      for (std::uint64_t e = 0; e < dl.total; ++e) {
        auto [qe, inner] = dl.decode(e);
        (void)inner;  // inner is always 0: only the y slot has a direction
        int v = sharp[static_cast<std::size_t>(qe)];
        if (v >= dpp) throw ShapeError("transpose_cart: direction does not land in p'");
        t.push_back(v);
      }
    }
    psi.bwd.push_back(std::move(t));
  }
  validate(psi);
  return psi;
}

PolyMap untranspose_cart(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& psi) {
  std::vector<Poly> factors;
  for (int i = 0; i < p.num_positions(); ++i) factors.push_back(cart_factor(q, p, i));
  Poly qp = product_fold(factors);
  if (psi.src != pp || psi.tgt != qp) throw ShapeError("untranspose_cart: shape mismatch");
  int np = p.num_positions();
  PolyMap phi{times(pp, p), q, {}, {}};
  for (int ip = 0; ip < pp.num_positions(); ++ip) {
    int dpp = pp.dirs[static_cast<std::size_t>(ip)];
    std::vector<int> comps = fold_pos_decode(factors, static_cast<std::uint64_t>(psi.fwd[static_cast<std::size_t>(ip)]));
    std::vector<int> offsets = fold_dir_offsets(factors, comps);
    for (int i = 0; i < np; ++i) {
      int di = p.dirs[static_cast<std::size_t>(i)];
      Poly piy = coproduct(constant(di), poly_y());
      auto [j, f] = subst_pos_decode(q, piy, static_cast<std::uint64_t>(comps[static_cast<std::size_t>(i)]));
      phi.fwd.push_back(j);
      SumLayout dl = subst_dir_layout(q, piy, j, f);
      std::vector<int> sharp;
      sharp.reserve(static_cast<std::size_t>(q.dirs[static_cast<std::size_t>(j)]));
      int seen = 0;
      for (int e = 0; e < q.dirs[static_cast<std::size_t>(j)]; ++e) {
        if (f(e) == di) {
          // y slot: the transpose stored the p'-direction here
          std::uint64_t diridx = dl.encode(e, 0);
          (void)diridx;
          int v = psi.bwd[static_cast<std::size_t>(ip)]
                         [static_cast<std::size_t>(offsets[static_cast<std::size_t>(i)] + seen)];
          sharp.push_back(v);
          ++seen;
        } else {
          sharp.push_back(dpp + f(e));  // constant slot names a p[i]-direction
        }
      }
      phi.bwd.push_back(std::move(sharp));
    }
  }
  validate(phi);
  return phi;
}

PolyMap cart_eval(const Poly& p, const Poly& q) {
  Poly qp = cart_closure(q, p);
  return untranspose_cart(qp, p, q, identity_map(qp));
}

PolyMap cart_closure_map(const PolyMap& phi, const PolyMap& psi) {
  // phi: p2 -> p1, psi: q1 -> q2; builds q1^{p1} -> q2^{p2}
  const Poly& p1 = phi.tgt;
  const Poly& p2 = phi.src;
  const Poly& q1 = psi.src;
  const Poly& q2 = psi.tgt;
  Poly qp1 = cart_closure(q1, p1);
  PolyMap ev = cart_eval(p1, q1);  // q1^{p1} x p1 -> q1
  PolyMap step = compose(psi, compose(ev, times_map(identity_map(qp1), phi)));
  return transpose_cart(qp1, p2, q2, step);
}

Poly dirichlet_closure(const Poly& p, const Poly& q) {
  std::vector<Poly> factors;
  factors.reserve(p.dirs.size());
  for (int i = 0; i < p.num_positions(); ++i)
    factors.push_back(substitute(q, linear(p.dirs[static_cast<std::size_t>(i)])));
  return product_fold(factors);
}

Poly dirichlet_closure_by_homs(const Poly& p, const Poly& q) {
  HomRange homs(p, q);
  Poly r;
  r.dirs.reserve(static_cast<std::size_t>(homs.size()));
  for (const PolyMap& m : homs) {
    int d = 0;
    for (int i = 0; i < p.num_positions(); ++i)
      d += q.dirs[static_cast<std::size_t>(m.fwd[static_cast<std::size_t>(i)])];
    r.dirs.push_back(d);
  }
  return r;
}

PolyMap transpose_dirichlet(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& phi) {
  if (phi.src != tensor(pp, p) || phi.tgt != q) throw ShapeError("transpose_dirichlet: shape mismatch");
  std::vector<Poly> factors;
  for (int i = 0; i < p.num_positions(); ++i)
    factors.push_back(substitute(q, linear(p.dirs[static_cast<std::size_t>(i)])));
  Poly pq = product_fold(factors);
  int np = p.num_positions();
  PolyMap psi{pp, pq, {}, {}};
  for (int ip = 0; ip < pp.num_positions(); ++ip) {
    int dpp = pp.dirs[static_cast<std::size_t>(ip)];
    std::vector<int> comps(static_cast<std::size_t>(np));
    std::vector<int> js(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) {
      int srcpos = ip * np + i;
      int j = phi.fwd[static_cast<std::size_t>(srcpos)];
      js[static_cast<std::size_t>(i)] = j;
      const auto& sharp = phi.bwd[static_cast<std::size_t>(srcpos)];  // q[j] -> pp[ip] x p[i]
      int di = p.dirs[static_cast<std::size_t>(i)];
      Poly piy = linear(di);
      FinFn f{q.dir(j), piy.positions(), {}};
      f.table.reserve(sharp.size());
      for (int v : sharp) f.table.push_back(v % (di == 0 ? 1 : di));
      if (di == 0 && !sharp.empty()) throw ShapeError("transpose_dirichlet: direction into empty set");
      comps[static_cast<std::size_t>(i)] = static_cast<int>(subst_pos_encode(q, piy, j, f));
    }
    psi.fwd.push_back(static_cast<int>(fold_pos_encode(factors, comps)));
    std::vector<int> t;
    for (int i = 0; i < np; ++i) {
      int srcpos = ip * np + i;
      const auto& sharp = phi.bwd[static_cast<std::size_t>(srcpos)];
      int di = p.dirs[static_cast<std::size_t>(i)];
      // directions of the factor at (j, f) enumerate q[j]; store the pp-component
      for (int e = 0; e < q.dirs[static_cast<std::size_t>(js[static_cast<std::size_t>(i)])]; ++e)
        t.push_back(di == 0 ? sharp[static_cast<std::size_t>(e)] : sharp[static_cast<std::size_t>(e)] / di);
      (void)dpp;
    }
    psi.bwd.push_back(std::move(t));
  }
  validate(psi);
  return psi;
}

PolyMap untranspose_dirichlet(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& psi) {
  std::vector<Poly> factors;
  for (int i = 0; i < p.num_positions(); ++i)
    factors.push_back(substitute(q, linear(p.dirs[static_cast<std::size_t>(i)])));
  Poly pq = product_fold(factors);
  if (psi.src != pp || psi.tgt != pq) throw ShapeError("untranspose_dirichlet: shape mismatch");
  int np = p.num_positions();
  PolyMap phi{tensor(pp, p), q, {}, {}};
  for (int ip = 0; ip < pp.num_positions(); ++ip) {
    std::vector<int> comps = fold_pos_decode(factors, static_cast<std::uint64_t>(psi.fwd[static_cast<std::size_t>(ip)]));
    std::vector<int> offsets = fold_dir_offsets(factors, comps);
    for (int i = 0; i < np; ++i) {
      int di = p.dirs[static_cast<std::size_t>(i)];
      Poly piy = linear(di);
      auto [j, f] = subst_pos_decode(q, piy, static_cast<std::uint64_t>(comps[static_cast<std::size_t>(i)]));
      phi.fwd.push_back(j);
      std::vector<int> sharp;
      sharp.reserve(static_cast<std::size_t>(q.dirs[static_cast<std::size_t>(j)]));
      for (int e = 0; e < q.dirs[static_cast<std::size_t>(j)]; ++e) {
        int ppdir = psi.bwd[static_cast<std::size_t>(ip)]
                           [static_cast<std::size_t>(offsets[static_cast<std::size_t>(i)] + e)];
        sharp.push_back(pair_encode(pp.dir(ip), p.dir(i), ppdir, f(e)));
      }
      phi.bwd.push_back(std::move(sharp));
    }
  }
  validate(phi);
  return phi;
}

PolyMap dirichlet_eval(const Poly& p, const Poly& q) {
  Poly pq = dirichlet_closure(p, q);
  return untranspose_dirichlet(pq, p, q, identity_map(pq));
}

PolyMap dirichlet_map(const PolyMap& phi, const PolyMap& psi) {
  const Poly& p1 = phi.tgt;
  const Poly& p2 = phi.src;
  const Poly& q1 = psi.src;
  const Poly& q2 = psi.tgt;
  Poly pq1 = dirichlet_closure(p1, q1);
  PolyMap ev = dirichlet_eval(p1, q1);
  PolyMap step = compose(psi, compose(ev, tensor_map(identity_map(pq1), phi)));
  return transpose_dirichlet(pq1, p2, q2, step);
}

}  // namespace poly
