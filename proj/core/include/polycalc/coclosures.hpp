#ifndef POLYCALC_COCLOSURES_HPP
#define POLYCALC_COCLOSURES_HPP

#include "polycalc/closures.hpp"

namespace poly {

// Right coclosure (left Kan extension): [[p|q]] = sum_I y^{q(p[I])}.
Poly right_coclosure(const Poly& p, const Poly& q);

// Transposition along Poly([[p|q]], r) ~= Poly(p, r <| q).
PolyMap rc_transpose(const Poly& p, const Poly& q, const Poly& r, const PolyMap& phi);
PolyMap rc_untranspose(const Poly& p, const Poly& q, const Poly& r, const PolyMap& psi);
// Coevaluation p -> [[p|q]] <| q (transpose of the identity).
PolyMap coevaluation(const Poly& p, const Poly& q);
// Covariant in p, contravariant in q: [[p|q]] -> [[p'|q']] from alpha: p -> p',
// beta: q' -> q.
PolyMap rc_fmap(const PolyMap& alpha, const PolyMap& beta);

// Indexed left <|-coclosure: p |_f q = sum_I q[f I] y^{p[I]}, f: p(1) -> q(1).
// Positions are pairs (I, e) with e in q[f I], laid out I-major.
Poly sub_coclosure(const Poly& p, const Poly& q, const FinFn& f);
SumLayout sub_coclosure_layout(const Poly& p, const Poly& q, const FinFn& f);

struct SubDecomp {
  FinFn index;   // p(1) -> q(1)
  PolyMap rest;  // p |_index q -> r
};
// Splits phi: p -> q <| r along the indexed adjunction.
SubDecomp decompose_sub(const Poly& p, const Poly& q, const Poly& r, const PolyMap& phi);
PolyMap pair_sub(const Poly& p, const Poly& q, const Poly& r, const FinFn& f, const PolyMap& psi);

// Indexed coclosure for ox: p 8_f q = sum_I y^{p[I]^{q[f I]}}.
Poly tensor_coclosure(const Poly& p, const Poly& q, const FinFn& f);

struct TensorDecomp {
  FinFn index;
  PolyMap rest;  // p 8_index q -> r
};
TensorDecomp decompose_tensor(const Poly& p, const Poly& q, const Poly& r, const PolyMap& phi);
PolyMap pair_tensor(const Poly& p, const Poly& q, const Poly& r, const FinFn& f, const PolyMap& psi);

// Derivative and the bundle polynomial p* = p |_id p = sum_I p[I] y^{p[I]}.
// Positions of both are pairs (I, d in p[I]); deriv deletes d from the
// direction set and renumbers (e < d stays, e > d shifts down).
Poly deriv(const Poly& p);
Poly star(const Poly& p);
PolyMap star_counit(const Poly& p);  // p* -> p
PolyMap star_to_y(const Poly& p);    // p* -> y
// p |-> p* is functorial on cartesian maps.
PolyMap star_map_cart(const PolyMap& phi);

// Span functor: phi: p -> q goes to  p* <- (p |_{phi1} q) -> q*.
PolySpan span_of(const PolyMap& phi);
// Composition by pullback over q*; `direct_iso` certifies the apex against
// p |_{phi1;psi1} r when both spans come from morphisms.
PolySpan span_compose(const PolySpan& s1, const PolySpan& s2);
IsoWitness span_compose_direct_iso(const PolyMap& phi, const PolyMap& psi);
// (p |_{phi1} q)(1) ~= p(1) x_{q(1)} q*(1), as an explicit bijection.
FinFn bundle_eval_at_one(const PolyMap& phi);

// A <|-monoid structure on a carrier polynomial.
struct PolyMonoid {
  Poly carrier;
  PolyMap eta;  // y -> m
  PolyMap mu;   // m <| m -> m
};
// Checks unitality and associativity at table level; throws ShapeError if the
// structure fails.
void validate_monoid(const PolyMonoid& m);
PolyMonoid identity_monoid();  // m = y

// u_N = sum_{n<=N} y^n.
Poly u_trunc(int n);
// Depth-truncated Lawvere theory [[u_N | u_N <| m]].
Poly lawvere_trunc(const PolyMonoid& m, int n);

}  // namespace poly

#endif
