#ifndef POLYCALC_LAW_HELPERS_HPP
#define POLYCALC_LAW_HELPERS_HPP

#include <random>
#include <sstream>

#include "polycalc/laws.hpp"
#include "polycalc/monoidal.hpp"

namespace poly::lawdetail {

// Deterministic morphism sampling for naturality probes.
struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed = 0x90110c4c) : rng(seed) {}

  int pick(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

  Poly poly(int max_pos, int max_dir) {
    Poly p;
    int n = pick(max_pos + 1);
    for (int i = 0; i < n; ++i) p.dirs.push_back(pick(max_dir + 1));
    return p;
  }

  // a morphism out of `a` into some small polynomial (resampled until the
  // hom set is nonempty)
  PolyMap hom_from(const Poly& a, int max_pos = 2, int max_dir = 2) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      Poly b = poly(max_pos, max_dir);
      std::uint64_t n = hom_count(a, b);
      if (n == 0) continue;
      return hom_by_index(a, b, rng() % n);
    }
    return identity_map(a);
  }

  PolyMap hom_between(const Poly& a, const Poly& b) {
    std::uint64_t n = hom_count(a, b);
    if (n == 0) throw ShapeError("Sampler::hom_between: empty hom set");
    return hom_by_index(a, b, rng() % n);
  }
};

inline LawOutcome pass_outcome(const std::string& detail) { return {true, detail}; }
inline LawOutcome fail_outcome(const std::string& detail) { return {false, detail}; }

// Runs a witness builder, converting construction failures into law failures.
inline LawOutcome check_iso_law(const std::function<IsoWitness()>& build,
                                const std::string& what) {
  try {
    IsoWitness w = build();
    if (!verify_iso(w)) return fail_outcome(what + ": composites are not the identity");
    return pass_outcome(what + ": iso " + to_string_canonical(w.fwd.src) + " ~= " +
                        to_string_canonical(w.fwd.tgt));
  } catch (const ShapeError& e) {
    return fail_outcome(what + ": " + e.what());
  }
}

// Builds a structure map and checks the given naturality squares.
inline LawOutcome check_map_law(const std::function<PolyMap()>& build,
                                const std::function<bool(const PolyMap&)>& probe,
                                const std::string& what) {
  try {
    PolyMap m = build();
    validate(m);
    if (probe && !probe(m)) return fail_outcome(what + ": naturality probe failed");
    return pass_outcome(what + ": map " + to_string_canonical(m.src) + " -> " +
                        to_string_canonical(m.tgt));
  } catch (const ShapeError& e) {
    return fail_outcome(what + ": " + e.what());
  }
}

inline Bindings bind_polys(std::initializer_list<std::pair<std::string, Poly>> ps,
                           std::initializer_list<std::pair<std::string, int>> is = {}) {
  Bindings b;
  for (auto& [k, v] : ps) b.polys.emplace(k, v);
  for (auto& [k, v] : is) b.ints.emplace(k, v);
  return b;
}

// shared sample polynomials
inline const std::vector<Poly>& sample_polys() {
  static const std::vector<Poly> s = {
      poly_zero(), poly_one(), poly_y(), linear(2), representable(2),
      coproduct(poly_y(), poly_one()), coproduct(representable(2), poly_y()),
      constant(2), coproduct(representable(2), poly_one())};
  return s;
}

}  // namespace poly::lawdetail

#endif
