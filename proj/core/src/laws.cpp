#include "polycalc/laws.hpp"

#include <algorithm>

namespace poly {

const Poly& Bindings::poly(const std::string& name) const {
  auto it = polys.find(name);
  if (it == polys.end()) throw ShapeError("missing polynomial binding: " + name);
  return it->second;
}

int Bindings::integer(const std::string& name) const {
  auto it = ints.find(name);
  if (it == ints.end()) throw ShapeError("missing integer binding: " + name);
  return it->second;
}

const std::vector<Law>& law_registry() {
  static const std::vector<Law> registry = [] {
    std::vector<Law> all;
    for (auto* group : {&lawdetail::monoidal_laws, &lawdetail::closure_laws,
                        &lawdetail::coclosure_laws, &lawdetail::setadj_laws,
                        &lawdetail::freecofree_laws}) {
      std::vector<Law> g = (*group)();
      all.insert(all.end(), std::make_move_iterator(g.begin()), std::make_move_iterator(g.end()));
    }
    return all;
  }();
  return registry;
}

const Law* find_law(std::string_view name) {
  for (const Law& l : law_registry())
    if (l.name == name) return &l;
  return nullptr;
}

LawOutcome run_law_defaults(const Law& law) {
  if (law.defaults.empty()) return law.run(Bindings{});
  for (std::size_t i = 0; i < law.defaults.size(); ++i) {
    LawOutcome out = law.run(law.defaults[i]);
    if (!out.pass) {
      out.detail = "instance " + std::to_string(i) + ": " + out.detail;
      return out;
    }
  }
  LawOutcome ok;
  ok.pass = true;
  ok.detail = std::to_string(law.defaults.size()) + " instance(s) pass";
  return ok;
}

}  // namespace poly
