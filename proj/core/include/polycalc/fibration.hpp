#ifndef POLYCALC_FIBRATION_HPP
#define POLYCALC_FIBRATION_HPP

#include "polycalc/poly.hpp"

namespace poly {

// The positions functor p |-> p(1) is a *-bifibration; for f: A -> B this
// module gives the adjoint triple f_! -| f^* -| f_* between the fibers.

// f_!(p): direction at b is prod_{f(a)=b} p[a] (fiber in increasing order,
// mixed-radix encoded).
Poly pushforward_shriek(const FinFn& f, const Poly& p);
// f^*(q): direction at a is q[f(a)].
Poly pullback_star(const FinFn& f, const Poly& q);
// f_*(p): direction at b is sum_{f(a)=b} p[a] (fiber blocks in order).
Poly pushforward_lower(const FinFn& f, const Poly& p);

// Fiber of f over b, in increasing order.
std::vector<int> fiber_of(const FinFn& f, int b);

// The op-cartesian unit p -> f_!(p) and cartesian counit f^*(q) -> q.
PolyMap shriek_unit(const FinFn& f, const Poly& p);
PolyMap pullback_counit(const FinFn& f, const Poly& q);

// Vertical hom count within a fiber: prod_a |p[a]|^{|q[a]|}.
std::uint64_t fiber_hom_count(const Poly& p, const Poly& q);
// Vertical morphism p -> q over the same position set, by rank.
PolyMap vertical_by_index(const Poly& p, const Poly& q, std::uint64_t rank);
std::uint64_t vertical_count(const Poly& p, const Poly& q);

// f_! -| f^*: transposes between vertical f_!p -> q and vertical p -> f^*q.
PolyMap shriek_transpose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& phi);
PolyMap shriek_untranspose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& psi);
// f^* -| f_*: transposes between vertical f^*q -> p and vertical q -> f_*p.
PolyMap lower_transpose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& phi);
PolyMap lower_untranspose(const FinFn& f, const Poly& p, const Poly& q, const PolyMap& psi);

enum class FactorSystem { EpiMono, VertCart, OpcartVert };
const char* factor_system_name(FactorSystem s);

struct Factorization {
  PolyMap left, right;
  Poly middle;
};
// Factors phi with left factor in the left class and right factor in the
// right class of the named system; the composite recovers phi table-exactly.
Factorization factor(const PolyMap& phi, FactorSystem s);

}  // namespace poly

#endif
