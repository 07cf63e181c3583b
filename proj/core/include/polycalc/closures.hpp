#ifndef POLYCALC_CLOSURES_HPP
#define POLYCALC_CLOSURES_HPP

#include "polycalc/monoidal.hpp"

namespace poly {

// Product of a list of polynomials. Positions are big-endian mixed-radix
// tuples of factor positions; directions concatenate factorwise. This agrees
// literally with a left fold of `times` starting from 1.
Poly product_fold(std::span<const Poly> factors);
// Position-tuple and direction codecs for a product_fold value.
std::vector<int> fold_pos_decode(std::span<const Poly> factors, std::uint64_t idx);
std::uint64_t fold_pos_encode(std::span<const Poly> factors, std::span<const int> components);
// Offsets of each factor's direction block at the given position tuple.
std::vector<int> fold_dir_offsets(std::span<const Poly> factors, std::span<const int> components);

// Cartesian closure q^p = prod_{I in p(1)} q <| (p[I] + y).
Poly cart_closure(const Poly& q, const Poly& p);
// The closure's factor at position I of p: q <| (p[I] + y).
Poly cart_factor(const Poly& q, const Poly& p, int i);

// Transposition along Poly(p' x p, q) ~= Poly(p', q^p).
PolyMap transpose_cart(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& phi);
PolyMap untranspose_cart(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& psi);
// Evaluation q^p x p -> q (untranspose of the identity).
PolyMap cart_eval(const Poly& p, const Poly& q);
// Functorial action: contravariant in the exponent, covariant in the base.
PolyMap cart_closure_map(const PolyMap& phi, const PolyMap& psi);  // q1^{p1} -> q2^{p2}, phi: p2->p1, psi: q1->q2

// Dirichlet closure [p,q] = prod_{I in p(1)} q <| (p[I] y).
Poly dirichlet_closure(const Poly& p, const Poly& q);
// Same object built from the morphism-indexed standard form
// sum_{phi in Poly(p,q)} y^{sum_I q[phi1 I]}; agrees with dirichlet_closure
// table-for-table because hom ranks and fold tuples share their encoding.
Poly dirichlet_closure_by_homs(const Poly& p, const Poly& q);

// Transposition along Poly(p' ox p, q) ~= Poly(p', [p,q]).
PolyMap transpose_dirichlet(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& phi);
PolyMap untranspose_dirichlet(const Poly& pp, const Poly& p, const Poly& q, const PolyMap& psi);
// Evaluation [p,q] ox p -> q.
PolyMap dirichlet_eval(const Poly& p, const Poly& q);
PolyMap dirichlet_map(const PolyMap& phi, const PolyMap& psi);  // [p1,q1] -> [p2,q2], phi: p2->p1, psi: q1->q2

}  // namespace poly

#endif
