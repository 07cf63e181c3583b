#include "polycalc/fibration.hpp"

#include <algorithm>
#include <numeric>

namespace poly {

std::vector<int> fiber_of(const FinFn& f, int b) {
  std::vector<int> out;
  for (int a = 0; a < f.dom.size; ++a)
    if (f(a) == b) out.push_back(a);
  return out;
}

namespace {
void check_over(const FinFn& f, const Poly& p) {
  if (p.positions() != f.dom) throw ShapeError("fibration: polynomial is not over the domain of f");
}
std::vector<int> fiber_radices(const FinFn& f, const Poly& p, int b) {
  std::vector<int> radices;
  for (int a : fiber_of(f, b)) radices.push_back(p.dirs[static_cast<std::size_t>(a)]);
  return radices;
}
}  // namespace

Poly pushforward_shriek(const FinFn& f, const Poly& p) {
  check_over(f, p);
  Poly q;
  q.dirs.reserve(static_cast<std::size_t>(f.cod.size));
  for (int b = 0; b < f.cod.size; ++b)
    q.dirs.push_back(static_cast<int>(guard_size(mixed_radix_size(fiber_radices(f, p, b)), "pushforward_shriek")));
  return q;
}

Poly pullback_star(const FinFn& f, const Poly& q) {
  if (q.positions() != f.cod) throw ShapeError("pullback_star: polynomial is not over the codomain of f");
  Poly p;
  p.dirs.reserve(static_cast<std::size_t>(f.dom.size));
  for (int a = 0; a < f.dom.size; ++a) p.dirs.push_back(q.dirs[static_cast<std::size_t>(f(a))]);
  return p;
}

Poly pushforward_lower(const FinFn& f, const Poly& p) {
  check_over(f, p);
  Poly q;
  q.dirs.reserve(static_cast<std::size_t>(f.cod.size));
  for (int b = 0; b < f.cod.size; ++b) {
    int s = 0;
    for (int a : fiber_of(f, b)) s += p.dirs[static_cast<std::size_t>(a)];
    q.dirs.push_back(s);
  }
  return q;
}

PolyMap shriek_unit(const FinFn& f, const Poly& p) {
  Poly q = pushforward_shriek(f, p);
  PolyMap m{p, q, f.table, {}};
  for (int a = 0; a < f.dom.size; ++a) {
    int b = f(a);
    std::vector<int> fiber = fiber_of(f, b);
    std::vector<int> radices = fiber_radices(f, p, b);
    std::size_t slot = static_cast<std::size_t>(std::lower_bound(fiber.begin(), fiber.end(), a) - fiber.begin());
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(q.dirs[static_cast<std::size_t>(b)]));
    for (std::uint64_t v = 0; v < static_cast<std::uint64_t>(q.dirs[static_cast<std::size_t>(b)]); ++v)
      t.push_back(mr_decode(radices, v)[slot]);
    m.bwd.push_back(std::move(t));
  }
  validate(m);
  return m;
}

PolyMap pullback_counit(const FinFn& f, const Poly& q) {
  Poly p = pullback_star(f, q);
  PolyMap m{p, q, f.table, {}};
  for (int a = 0; a < f.dom.size; ++a) m.bwd.push_back(fn_identity(q.dir(f(a))).table);
  validate(m);
  return m;
}

std::uint64_t fiber_hom_count(const Poly& p, const Poly& q) {
  if (p.num_positions() != q.num_positions()) throw ShapeError("fiber_hom_count: fibers differ");
  std::uint64_t n = 1;
  for (int a = 0; a < p.num_positions(); ++a)
    n = checked_mul(n, checked_pow(static_cast<std::uint64_t>(p.dirs[static_cast<std::size_t>(a)]),
                                   static_cast<std::uint64_t>(q.dirs[static_cast<std::size_t>(a)])));
  return n;
}

std::uint64_t vertical_count(const Poly& p, const Poly& q) { return fiber_hom_count(p, q); }

PolyMap vertical_by_index(const Poly& p, const Poly& q, std::uint64_t rank) {
  if (p.num_positions() != q.num_positions()) throw ShapeError("vertical_by_index: fibers differ");
  PolyMap m{p, q, {}, {}};
  m.fwd.resize(static_cast<std::size_t>(p.num_positions()));
  std::iota(m.fwd.begin(), m.fwd.end(), 0);
  std::vector<std::uint64_t> per(static_cast<std::size_t>(p.num_positions()));
  for (int a = p.num_positions() - 1; a >= 0; --a) {
    std::uint64_t c = fn_count(q.dir(a), p.dir(a));
    if (c == 0) throw ShapeError("vertical_by_index: empty choice");
    per[static_cast<std::size_t>(a)] = rank % c;
    rank /= c;
  }
  if (rank != 0) throw ShapeError("vertical_by_index: rank out of range");
  for (int a = 0; a < p.num_positions(); ++a)
    m.bwd.push_back(fn_decode(q.dir(a), p.dir(a), per[static_cast<std::size_t>(a)]).table);
  validate(m);
  return m;
}

PolyMap shriek_transpose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& phi) {
  // phi: f_!p -> q vertical over B; result p -> f^*q vertical over A
  Poly fp = pushforward_shriek(f, p);
  if (phi.src != fp || phi.tgt != q || !classify(phi).vertical)
    throw ShapeError("shriek_transpose: expected a vertical map f_!p -> q");
  Poly fq = pullback_star(f, q);
  PolyMap psi{p, fq, {}, {}};
  psi.fwd.resize(static_cast<std::size_t>(p.num_positions()));
  std::iota(psi.fwd.begin(), psi.fwd.end(), 0);
  for (int a = 0; a < f.dom.size; ++a) {
    int b = f(a);
    std::vector<int> fiber = fiber_of(f, b);
    std::vector<int> radices = fiber_radices(f, p, b);
    std::size_t slot = static_cast<std::size_t>(std::lower_bound(fiber.begin(), fiber.end(), a) - fiber.begin());
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(q.dirs[static_cast<std::size_t>(b)]));
    for (int d = 0; d < q.dirs[static_cast<std::size_t>(b)]; ++d)
      t.push_back(mr_decode(radices, static_cast<std::uint64_t>(phi.bwd[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)]))[slot]);
    psi.bwd.push_back(std::move(t));
  }
  validate(psi);
  return psi;
}

PolyMap shriek_untranspose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& psi) {
  Poly fq = pullback_star(f, q);
  if (psi.src != p || psi.tgt != fq || !classify(psi).vertical)
    throw ShapeError("shriek_untranspose: expected a vertical map p -> f^*q");
  Poly fp = pushforward_shriek(f, p);
  PolyMap phi{fp, q, {}, {}};
  phi.fwd.resize(static_cast<std::size_t>(q.num_positions()));
  std::iota(phi.fwd.begin(), phi.fwd.end(), 0);
  for (int b = 0; b < f.cod.size; ++b) {
    std::vector<int> fiber = fiber_of(f, b);
    std::vector<int> radices = fiber_radices(f, p, b);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(q.dirs[static_cast<std::size_t>(b)]));
    for (int d = 0; d < q.dirs[static_cast<std::size_t>(b)]; ++d) {
      std::vector<int> digits;
      digits.reserve(fiber.size());
      for (int a : fiber) digits.push_back(psi.bwd[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)]);
      t.push_back(static_cast<int>(mr_encode(radices, digits)));
    }
    phi.bwd.push_back(std::move(t));
  }
  validate(phi);
  return phi;
}

PolyMap lower_transpose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& phi) {
  // phi: f^*q -> p vertical over A; result q -> f_*p vertical over B
  Poly fq = pullback_star(f, q);
  if (phi.src != fq || phi.tgt != p || !classify(phi).vertical)
    throw ShapeError("lower_transpose: expected a vertical map f^*q -> p");
  Poly fp = pushforward_lower(f, p);
  PolyMap psi{q, fp, {}, {}};
  psi.fwd.resize(static_cast<std::size_t>(q.num_positions()));
  std::iota(psi.fwd.begin(), psi.fwd.end(), 0);
  for (int b = 0; b < f.cod.size; ++b) {
    std::vector<int> fiber = fiber_of(f, b);
    std::vector<int> sizes;
    for (int a : fiber) sizes.push_back(p.dirs[static_cast<std::size_t>(a)]);
    SumLayout lay(sizes);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(lay.total));
    for (std::uint64_t v = 0; v < lay.total; ++v) {
      auto [slot, d] = lay.decode(v);
      int a = fiber[static_cast<std::size_t>(slot)];
      t.push_back(phi.bwd[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)]);
    }
    psi.bwd.push_back(std::move(t));
  }
  validate(psi);
  return psi;
}

PolyMap lower_untranspose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& psi) {
  Poly fp = pushforward_lower(f, p);
  if (psi.src != q || psi.tgt != fp || !classify(psi).vertical)
    throw ShapeError("lower_untranspose: expected a vertical map q -> f_*p");
  Poly fq = pullback_star(f, q);
  PolyMap phi{fq, p, {}, {}};
  phi.fwd.resize(static_cast<std::size_t>(f.dom.size));
  std::iota(phi.fwd.begin(), phi.fwd.end(), 0);
  for (int a = 0; a < f.dom.size; ++a) {
    int b = f(a);
    std::vector<int> fiber = fiber_of(f, b);
    std::vector<int> sizes;
    for (int a2 : fiber) sizes.push_back(p.dirs[static_cast<std::size_t>(a2)]);
    SumLayout lay(sizes);
    std::size_t slot = static_cast<std::size_t>(std::lower_bound(fiber.begin(), fiber.end(), a) - fiber.begin());
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(p.dirs[static_cast<std::size_t>(a)]));
    for (int d = 0; d < p.dirs[static_cast<std::size_t>(a)]; ++d)
      t.push_back(psi.bwd[static_cast<std::size_t>(b)]
                          [static_cast<std::size_t>(lay.encode(static_cast<int>(slot), static_cast<std::uint64_t>(d)))]);
    phi.bwd.push_back(std::move(t));
  }
  validate(phi);
  return phi;
}

const char* factor_system_name(FactorSystem s) {
  switch (s) {
    case FactorSystem::EpiMono: return "epi_mono";
    case FactorSystem::VertCart: return "vert_cart";
    case FactorSystem::OpcartVert: return "opcart_vert";
  }
  return "?";
}

namespace {

Factorization factor_vert_cart(const PolyMap& phi) {
  FinFn f = fwd_fn(phi);
  Poly mid = pullback_star(f, phi.tgt);
  PolyMap left{phi.src, mid, {}, {}};
  left.fwd.resize(static_cast<std::size_t>(phi.src.num_positions()));
  std::iota(left.fwd.begin(), left.fwd.end(), 0);
  for (int i = 0; i < phi.src.num_positions(); ++i)
    left.bwd.push_back(phi.bwd[static_cast<std::size_t>(i)]);
  PolyMap right = pullback_counit(f, phi.tgt);
  validate(left);
  return {std::move(left), std::move(right), std::move(mid)};
}

Factorization factor_opcart_vert(const PolyMap& phi) {
  FinFn f = fwd_fn(phi);
  Poly mid = pushforward_shriek(f, phi.src);
  PolyMap left = shriek_unit(f, phi.src);
  PolyMap right{mid, phi.tgt, {}, {}};
  right.fwd.resize(static_cast<std::size_t>(phi.tgt.num_positions()));
  std::iota(right.fwd.begin(), right.fwd.end(), 0);
  for (int j = 0; j < phi.tgt.num_positions(); ++j)
    right.bwd.push_back(joint_map(phi, j).table);
  validate(right);
  return {std::move(left), std::move(right), std::move(mid)};
}

Factorization factor_epi_mono(const PolyMap& phi) {
  // middle positions: image of phi1, in increasing order
  std::vector<int> image;
  for (int j : phi.fwd) image.push_back(j);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<int> img_index(static_cast<std::size_t>(phi.tgt.num_positions()), -1);
  for (std::size_t k = 0; k < image.size(); ++k) img_index[static_cast<std::size_t>(image[k])] = static_cast<int>(k);
  // joint tuples (bwd over the fiber) per target direction, without encoding
  auto tuples_at = [&](int j) {
    std::vector<int> fiber;
    for (int i2 = 0; i2 < phi.src.num_positions(); ++i2)
      if (phi.fwd[static_cast<std::size_t>(i2)] == j) fiber.push_back(i2);
    std::vector<std::vector<int>> tups;
    for (int d = 0; d < phi.tgt.dirs[static_cast<std::size_t>(j)]; ++d) {
      std::vector<int> tup;
      tup.reserve(fiber.size());
      for (int i2 : fiber) tup.push_back(phi.bwd[static_cast<std::size_t>(i2)][static_cast<std::size_t>(d)]);
      tups.push_back(std::move(tup));
    }
    return std::pair(fiber, tups);
  };
  // middle direction at image position j: distinct joint tuples, sorted
  Poly mid;
  std::vector<std::vector<std::vector<int>>> dir_elems;
  for (int j : image) {
    auto [fiber, tups] = tuples_at(j);
    std::sort(tups.begin(), tups.end());
    tups.erase(std::unique(tups.begin(), tups.end()), tups.end());
    mid.dirs.push_back(static_cast<int>(tups.size()));
    dir_elems.push_back(std::move(tups));
  }
  // left: p -> mid (epi)
  PolyMap left{phi.src, mid, {}, {}};
  for (int i = 0; i < phi.src.num_positions(); ++i) {
    int j = phi.fwd[static_cast<std::size_t>(i)];
    int jm = img_index[static_cast<std::size_t>(j)];
    left.fwd.push_back(jm);
    auto [fiber, tups] = tuples_at(j);
    (void)tups;
    std::size_t slot = static_cast<std::size_t>(std::lower_bound(fiber.begin(), fiber.end(), i) - fiber.begin());
    std::vector<int> t;
    for (const auto& rep : dir_elems[static_cast<std::size_t>(jm)]) t.push_back(rep[slot]);
    left.bwd.push_back(std::move(t));
  }
  // right: mid -> q (mono)
  PolyMap right{mid, phi.tgt, {}, {}};
  for (std::size_t k = 0; k < image.size(); ++k) {
    right.fwd.push_back(image[k]);
    auto [fiber, tups] = tuples_at(image[k]);
    (void)fiber;
    const auto& elems = dir_elems[k];
    std::vector<int> t;
    t.reserve(tups.size());
    for (const auto& tup : tups)
      t.push_back(static_cast<int>(std::lower_bound(elems.begin(), elems.end(), tup) - elems.begin()));
    right.bwd.push_back(std::move(t));
  }
  validate(left);
  validate(right);
  return {std::move(left), std::move(right), std::move(mid)};
}

}  // namespace

Factorization factor(const PolyMap& phi, FactorSystem s) {
  validate(phi);
  Factorization out;
  switch (s) {
    case FactorSystem::VertCart: out = factor_vert_cart(phi); break;
    case FactorSystem::OpcartVert: out = factor_opcart_vert(phi); break;
    case FactorSystem::EpiMono: out = factor_epi_mono(phi); break;
  }
  if (!map_equal(compose(out.right, out.left), phi))
    throw ShapeError("factor: factors do not recompose");
  return out;
}

}  // namespace poly
