#ifndef POLYCALC_SETADJ_HPP
#define POLYCALC_SETADJ_HPP

#include "polycalc/monoidal.hpp"

namespace poly {

// Embeddings of Set (and Set^op) into Poly.
Poly const_poly(int a);       // A y^0
Poly linear_poly(int a);      // A y
Poly rep_poly(int a);         // y^A
Poly pair_embed(int a, int b);  // B y^A

// ---- the four Set adjunctions and the Set x Set^op adjunction ----
// Each pair is a bijection, natural in both arguments; the *_to_set /
// *_from_set functions are mutually inverse.

// Poly(Ay, p) ~= Set(A, p(1))
FinFn linear_adj_to_set(int a, const Poly& p, const PolyMap& phi);
PolyMap linear_adj_from_set(int a, const Poly& p, const FinFn& g);

// Poly(p, Ay^0) ~= Set(p(1), A)
FinFn const_right_adj_to_set(int a, const Poly& p, const PolyMap& phi);
PolyMap const_right_adj_from_set(int a, const Poly& p, const FinFn& g);

// Poly(Ay^0, p) ~= Set(A, p(0));  p(0) is the set of 0-direction positions,
// renumbered in increasing position order.
FinFn const_left_adj_to_set(int a, const Poly& p, const PolyMap& phi);
PolyMap const_left_adj_from_set(int a, const Poly& p, const FinFn& g);

// Poly(p, y^A) ~= Set(A, Gamma(p))
FinFn rep_adj_to_set(int a, const Poly& p, const PolyMap& phi);
PolyMap rep_adj_from_set(int a, const Poly& p, const FinFn& g);

// Poly(p, B y^A) ~= Set(p(1), B) x Set(A, Gamma(p))
std::pair<FinFn, FinFn> pair_adj_to_set(int a, int b, const Poly& p, const PolyMap& phi);
PolyMap pair_adj_from_set(int a, int b, const Poly& p, const FinFn& g1, const FinFn& g2);

// ---- rig-monoidal structure of the embeddings ----

// Ay + By ~= (A+B)y and Ay ox By ~= (AxB)y, and the constant analogues.
IsoWitness linear_plus_iso(int a, int b);
IsoWitness linear_tensor_iso(int a, int b);
IsoWitness const_plus_iso(int a, int b);
IsoWitness const_tensor_iso(int a, int b);

// Gamma interaction: explicit bijections.
// Gamma(p+q) -> Gamma(p) x Gamma(q)
FinFn gamma_plus_split(const Poly& p, const Poly& q);
// Gamma(p ox q) -> Gamma(p)^{q(1)} x Gamma(q)^{p(1)}
FinFn gamma_tensor_split(const Poly& p, const Poly& q);
// eval distributivity: p(A)+q(A) -> (p+q)(A) and p(A)xq(A) -> (pxq)(A)
FinFn eval_plus_iso(const Poly& p, const Poly& q, FinSet a);
FinFn eval_times_iso(const Poly& p, const Poly& q, FinSet a);

}  // namespace poly

#endif
