#ifndef POLYCALC_LAWS_HPP
#define POLYCALC_LAWS_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polycalc/poly.hpp"

namespace poly {

// Named parameter bindings for a law instance. Poly parameters are lowercase
// (p, q, r, p1, ...); integer parameters are uppercase (A, B, I, J, k, N).
struct Bindings {
  std::map<std::string, Poly> polys;
  std::map<std::string, int> ints;

  const Poly& poly(const std::string& name) const;
  int integer(const std::string& name) const;
};

struct LawOutcome {
  bool pass = false;
  std::string detail;
};

// A registered identity or natural map from the ledger. `run` checks one
// instance; `defaults` are the instances exercised by `law <name>` with no
// bindings and by the acceptance suite.
struct Law {
  std::string name;
  std::string statement;
  std::vector<std::string> params;
  std::function<LawOutcome(const Bindings&)> run;
  std::vector<Bindings> defaults;
};

// The full ledger, ordered by name group (A, B, C, D, E).
const std::vector<Law>& law_registry();
const Law* find_law(std::string_view name);
// Runs every default instance of the law; fails fast with the instance detail.
LawOutcome run_law_defaults(const Law& law);

namespace lawdetail {
// group builders, assembled by law_registry()
std::vector<Law> monoidal_laws();
std::vector<Law> closure_laws();
std::vector<Law> coclosure_laws();
std::vector<Law> setadj_laws();
std::vector<Law> freecofree_laws();
}  // namespace lawdetail

}  // namespace poly

#endif
