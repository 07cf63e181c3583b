#include "polycalc/setadj.hpp"

#include <algorithm>
#include <numeric>

namespace poly {

Poly const_poly(int a) { return constant(a); }
Poly linear_poly(int a) { return linear(a); }
Poly rep_poly(int a) { return representable(a); }
Poly pair_embed(int a, int b) { return monomial(b, a); }

FinFn linear_adj_to_set(int a, const Poly& p, const PolyMap& phi) {
  if (phi.src != linear(a) || phi.tgt != p) throw ShapeError("linear_adj_to_set: shape mismatch");
  return {FinSet{a}, p.positions(), phi.fwd};
}

PolyMap linear_adj_from_set(int a, const Poly& p, const FinFn& g) {
  if (g.dom != FinSet{a} || g.cod != p.positions()) throw ShapeError("linear_adj_from_set: shape mismatch");
  PolyMap m{linear(a), p, g.table, {}};
  for (int x = 0; x < a; ++x)
    m.bwd.push_back(fn_constant(p.dir(g(x)), FinSet{1}, 0).table);
  validate(m);
  return m;
}

FinFn const_right_adj_to_set(int a, const Poly& p, const PolyMap& phi) {
  if (phi.src != p || phi.tgt != constant(a)) throw ShapeError("const_right_adj_to_set: shape mismatch");
  return {p.positions(), FinSet{a}, phi.fwd};
}

PolyMap const_right_adj_from_set(int a, const Poly& p, const FinFn& g) {
  if (g.dom != p.positions() || g.cod != FinSet{a}) throw ShapeError("const_right_adj_from_set: shape mismatch");
  PolyMap m{p, constant(a), g.table, std::vector<std::vector<int>>(static_cast<std::size_t>(p.num_positions()))};
  validate(m);
  return m;
}

FinFn const_left_adj_to_set(int a, const Poly& p, const PolyMap& phi) {
  if (phi.src != constant(a) || phi.tgt != p) throw ShapeError("const_left_adj_to_set: shape mismatch");
  std::vector<int> consts = constant_positions(p);
  FinFn g{FinSet{a}, FinSet{static_cast<int>(consts.size())}, {}};
  for (int x = 0; x < a; ++x) {
    auto it = std::lower_bound(consts.begin(), consts.end(), phi.fwd[static_cast<std::size_t>(x)]);
    if (it == consts.end() || *it != phi.fwd[static_cast<std::size_t>(x)])
      throw ShapeError("const_left_adj_to_set: map does not land in constant positions");
    g.table.push_back(static_cast<int>(it - consts.begin()));
  }
  return g;
}

PolyMap const_left_adj_from_set(int a, const Poly& p, const FinFn& g) {
  std::vector<int> consts = constant_positions(p);
  if (g.dom != FinSet{a} || g.cod != FinSet{static_cast<int>(consts.size())})
    throw ShapeError("const_left_adj_from_set: shape mismatch");
  PolyMap m{constant(a), p, {}, std::vector<std::vector<int>>(static_cast<std::size_t>(a))};
  for (int x = 0; x < a; ++x) m.fwd.push_back(consts[static_cast<std::size_t>(g(x))]);
  validate(m);
  return m;
}

FinFn rep_adj_to_set(int a, const Poly& p, const PolyMap& phi) {
  if (phi.src != p || phi.tgt != representable(a)) throw ShapeError("rep_adj_to_set: shape mismatch");
  FinFn g{FinSet{a}, gamma_set(p), {}};
  for (int x = 0; x < a; ++x) {
    std::vector<int> choice;
    choice.reserve(p.dirs.size());
    for (int i = 0; i < p.num_positions(); ++i)
      choice.push_back(phi.bwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
    g.table.push_back(static_cast<int>(gamma_encode(p, choice)));
  }
  return g;
}

PolyMap rep_adj_from_set(int a, const Poly& p, const FinFn& g) {
  if (g.dom != FinSet{a} || g.cod != gamma_set(p)) throw ShapeError("rep_adj_from_set: shape mismatch");
  PolyMap m{p, representable(a), std::vector<int>(static_cast<std::size_t>(p.num_positions()), 0), {}};
  std::vector<std::vector<int>> choices;
  choices.reserve(static_cast<std::size_t>(a));
  for (int x = 0; x < a; ++x) choices.push_back(gamma_decode(p, static_cast<std::uint64_t>(g(x))));
  for (int i = 0; i < p.num_positions(); ++i) {
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x) t.push_back(choices[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)]);
    m.bwd.push_back(std::move(t));
  }
  validate(m);
  return m;
}

std::pair<FinFn, FinFn> pair_adj_to_set(int a, int b, const Poly& p, const PolyMap& phi) {
  if (phi.src != p || phi.tgt != pair_embed(a, b)) throw ShapeError("pair_adj_to_set: shape mismatch");
  FinFn g1{p.positions(), FinSet{b}, phi.fwd};
  FinFn g2{FinSet{a}, gamma_set(p), {}};
  for (int x = 0; x < a; ++x) {
    std::vector<int> choice;
    choice.reserve(p.dirs.size());
    for (int i = 0; i < p.num_positions(); ++i)
      choice.push_back(phi.bwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
    g2.table.push_back(static_cast<int>(gamma_encode(p, choice)));
  }
  return {std::move(g1), std::move(g2)};
}

PolyMap pair_adj_from_set(int a, int b, const Poly& p, const FinFn& g1, const FinFn& g2) {
  if (g1.dom != p.positions() || g1.cod != FinSet{b}) throw ShapeError("pair_adj_from_set: g1 shape mismatch");
  if (g2.dom != FinSet{a} || g2.cod != gamma_set(p)) throw ShapeError("pair_adj_from_set: g2 shape mismatch");
  PolyMap m{p, pair_embed(a, b), g1.table, {}};
  std::vector<std::vector<int>> choices;
  for (int x = 0; x < a; ++x) choices.push_back(gamma_decode(p, static_cast<std::uint64_t>(g2(x))));
  for (int i = 0; i < p.num_positions(); ++i) {
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(a));
    for (int x = 0; x < a; ++x) t.push_back(choices[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)]);
    m.bwd.push_back(std::move(t));
  }
  validate(m);
  return m;
}

IsoWitness linear_plus_iso(int a, int b) {
  return literal_witness(coproduct(linear(a), linear(b)), linear(a + b), "Ay+By");
}

IsoWitness linear_tensor_iso(int a, int b) {
  return literal_witness(tensor(linear(a), linear(b)), linear(a * b), "Ay ox By");
}

IsoWitness const_plus_iso(int a, int b) {
  return literal_witness(coproduct(constant(a), constant(b)), constant(a + b), "A+B constants");
}

IsoWitness const_tensor_iso(int a, int b) {
  return literal_witness(tensor(constant(a), constant(b)), constant(a * b), "AxB constants");
}

FinFn gamma_plus_split(const Poly& p, const Poly& q) {
  Poly s = coproduct(p, q);
  ProductSet prod = finset_product(gamma_set(p), gamma_set(q));
  FinFn out{gamma_set(s), prod.total, {}};
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(out.dom.size); ++v) {
    std::vector<int> choice = gamma_decode(s, v);
    std::vector<int> c1(choice.begin(), choice.begin() + p.num_positions());
    std::vector<int> c2(choice.begin() + p.num_positions(), choice.end());
    out.table.push_back(pair_encode(gamma_set(p), gamma_set(q),
                                    static_cast<int>(gamma_encode(p, c1)),
                                    static_cast<int>(gamma_encode(q, c2))));
  }
  if (!fn_bijective(out)) throw ShapeError("gamma_plus_split: not a bijection");
  return out;
}

FinFn gamma_tensor_split(const Poly& p, const Poly& q) {
  Poly t = tensor(p, q);
  FinSet gp = gamma_set(p), gq = gamma_set(q);
  FinSet gpq = finset_exponential(q.positions(), gp);   // Gamma(p)^{q(1)}
  FinSet gqp = finset_exponential(p.positions(), gq);   // Gamma(q)^{p(1)}
  FinFn out{gamma_set(t), FinSet{gpq.size * gqp.size}, {}};
  int np = p.num_positions(), nq = q.num_positions();
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(out.dom.size); ++v) {
    std::vector<int> choice = gamma_decode(t, v);  // choice[(i,j)] in p[i] x q[j]
    // F: q(1) -> Gamma(p): F(j)(i) = first(choice(i,j))
    FinFn fq{q.positions(), gp, {}};
    for (int j = 0; j < nq; ++j) {
      std::vector<int> c(static_cast<std::size_t>(np));
      for (int i = 0; i < np; ++i) {
        auto [d, e] = pair_decode(p.dir(i), q.dir(j), choice[static_cast<std::size_t>(i * nq + j)]);
        (void)e;
        c[static_cast<std::size_t>(i)] = d;
      }
      fq.table.push_back(static_cast<int>(gamma_encode(p, c)));
    }
    FinFn gpn{p.positions(), gq, {}};
    for (int i = 0; i < np; ++i) {
      std::vector<int> c(static_cast<std::size_t>(nq));
      for (int j = 0; j < nq; ++j) {
        auto [d, e] = pair_decode(p.dir(i), q.dir(j), choice[static_cast<std::size_t>(i * nq + j)]);
        (void)d;
        c[static_cast<std::size_t>(j)] = e;
      }
      gpn.table.push_back(static_cast<int>(gamma_encode(q, c)));
    }
    out.table.push_back(pair_encode(gpq, gqp, static_cast<int>(fn_encode(fq)), static_cast<int>(fn_encode(gpn))));
  }
  if (!fn_bijective(out)) throw ShapeError("gamma_tensor_split: not a bijection");
  return out;
}

FinFn eval_plus_iso(const Poly& p, const Poly& q, FinSet a) {
  Poly s = coproduct(p, q);
  SumSet sum = finset_sum(eval_set(p, a), eval_set(q, a));
  FinFn out{sum.total, eval_set(s, a), {}};
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(eval_size(p, a)); ++v) {
    auto [i, g] = eval_decode(p, a, v);
    out.table.push_back(static_cast<int>(eval_encode(s, a, i, g)));
  }
  for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(eval_size(q, a)); ++v) {
    auto [j, g] = eval_decode(q, a, v);
    out.table.push_back(static_cast<int>(eval_encode(s, a, p.num_positions() + j, g)));
  }
  if (!fn_bijective(out)) throw ShapeError("eval_plus_iso: not a bijection");
  return out;
}

FinFn eval_times_iso(const Poly& p, const Poly& q, FinSet a) {
  Poly t = times(p, q);
  ProductSet prod = finset_product(eval_set(p, a), eval_set(q, a));
  FinFn out{prod.total, eval_set(t, a), {}};
  int nq = q.num_positions();
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  for (int v = 0; v < prod.total.size; ++v) {
    auto [vp, vq] = pair_decode(eval_set(p, a), eval_set(q, a), v);
    auto [i, g1] = eval_decode(p, a, static_cast<std::uint64_t>(vp));
    auto [j, g2] = eval_decode(q, a, static_cast<std::uint64_t>(vq));
    FinFn g{t.dir(i * nq + j), a, g1.table};
    g.table.insert(g.table.end(), g2.table.begin(), g2.table.end());
    out.table.push_back(static_cast<int>(eval_encode(t, a, i * nq + j, g)));
  }
  if (!fn_bijective(out)) throw ShapeError("eval_times_iso: not a bijection");
  return out;
}

}  // namespace poly
