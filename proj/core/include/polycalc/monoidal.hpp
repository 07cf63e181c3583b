#ifndef POLYCALC_MONOIDAL_HPP
#define POLYCALC_MONOIDAL_HPP

#include "polycalc/poly.hpp"

namespace poly {

// ---- coproduct ----
// p+q concatenates position lists; direction sets are carried unchanged.

Poly coproduct(const Poly& p, const Poly& q);
PolyMap coproduct_map(const PolyMap& f, const PolyMap& g);
PolyMap coproduct_inl(const Poly& p, const Poly& q);
PolyMap coproduct_inr(const Poly& p, const Poly& q);
PolyMap copair(const PolyMap& f, const PolyMap& g);  // [f,g]: p+q -> r

// ---- Day convolution over a symmetric monoidal structure on Set ----
// Positions are pairs (I,J) encoded I-major; the direction set at (I,J) is
// the chosen Set-product of p[I] and q[J]:
//   Times  (Set +): layout [p-dirs | q-dirs]
//   Tensor (Set x): pairs, p-dir major
//   Ovee   (Set v): A v B = [A | AxB | B]

enum class DayKind { Times, Tensor, Ovee };

int monoid_unit(DayKind k);
int monoid_op(DayKind k, int a, int b);
// covariant action on direction sets: op(f,g): op(A,B) -> op(A',B')
FinFn monoid_cov_fn(DayKind k, const FinFn& f, const FinFn& g);
FinFn monoid_assoc_fn(DayKind k, FinSet a, FinSet b, FinSet c);  // op(op(a,b),c) -> op(a,op(b,c))
FinFn monoid_sym_fn(DayKind k, FinSet a, FinSet b);              // op(a,b) -> op(b,a)

// Set-level v layout helpers: A v B = A + AxB + B
int vee_set_size(int a, int b);
int vee_set_inl(int a, int b, int x);
int vee_set_mid(int a, int b, int x, int y);
int vee_set_inr(int a, int b, int y);

Poly day(const Poly& p, const Poly& q, DayKind k);
PolyMap day_map(const PolyMap& f, const PolyMap& g, DayKind k);

Poly times(const Poly& p, const Poly& q);   // day +
Poly tensor(const Poly& p, const Poly& q);  // day x
Poly ovee(const Poly& p, const Poly& q);    // day v

PolyMap times_map(const PolyMap& f, const PolyMap& g);
PolyMap tensor_map(const PolyMap& f, const PolyMap& g);

PolyMap times_proj1(const Poly& p, const Poly& q);
PolyMap times_proj2(const Poly& p, const Poly& q);
PolyMap pairing(const PolyMap& f, const PolyMap& g);  // <f,g>: r -> p x q

// A copies of p, positions (a,I) a-major.
Poly scalar_mul(int a, const Poly& p);

// ---- substitution product p <| q ----
// Position: (I, B: p[I] -> q-positions); blocks ordered by I, assignments
// ranked lexicographically. Direction at (I,B): Sigma_{i in p[I]} q[B(i)],
// elements (i,d) in i-major order.

Poly substitute(const Poly& p, const Poly& q);
PolyMap subst_map(const PolyMap& f, const PolyMap& g);

struct SubstPos {
  int outer;
  FinFn assign;  // p[outer] -> q positions
};
std::uint64_t subst_pos_encode(const Poly& p, const Poly& q, int outer, const FinFn& assign);
SubstPos subst_pos_decode(const Poly& p, const Poly& q, std::uint64_t idx);
SumLayout subst_dir_layout(const Poly& p, const Poly& q, int outer, const FinFn& assign);

// ---- Garner-pattern products p + (p . q) + q ----
// vee uses Tensor, vee_times uses Times, vee_ovee uses Ovee; blocks are laid
// out [p | p.q | q]. Unit is 0 for all three.

Poly garner(const Poly& p, const Poly& q, DayKind k);
Poly vee(const Poly& p, const Poly& q);
Poly vee_times(const Poly& p, const Poly& q);
Poly vee_ovee(const Poly& p, const Poly& q);
PolyMap garner_map(const PolyMap& f, const PolyMap& g, DayKind k);
PolyMap vee_map(const PolyMap& f, const PolyMap& g);
// block inclusions p -> garner(p,q,k)
PolyMap garner_inl(const Poly& p, const Poly& q, DayKind k);
PolyMap garner_mid(const Poly& p, const Poly& q, DayKind k);  // day(p,q,k) -> garner
PolyMap garner_inr(const Poly& p, const Poly& q, DayKind k);

// ---- cross products (de Paiva / Niu) ----
// p dagger q:  direction at (I,J) = p[I] x (q[J]^{p(1)})
// p ddagger q: direction at (I,J) = (p[I]^{q(1)}) x (q[J]^{p(1)})

Poly dagger(const Poly& p, const Poly& q);
Poly ddagger(const Poly& p, const Poly& q);
PolyMap dagger_map(const PolyMap& f, const PolyMap& g);
PolyMap ddagger_map(const PolyMap& f, const PolyMap& g);

// ---- generic monoidal-structure interface ----

enum class ProductKind {
  Plus, Times, Tensor, Ovee, Subst, Vee, VeeTimes, VeeOvee, Dagger, DDagger
};

const char* product_name(ProductKind k);
Poly apply_product(ProductKind k, const Poly& p, const Poly& q);
Poly product_unit(ProductKind k);
bool product_symmetric(ProductKind k);  // false for Subst and Dagger
PolyMap product_map(ProductKind k, const PolyMap& f, const PolyMap& g);
IsoWitness product_assoc(ProductKind k, const Poly& p, const Poly& q, const Poly& r);
IsoWitness product_unit_left(ProductKind k, const Poly& p);
IsoWitness product_unit_right(ProductKind k, const Poly& p);
IsoWitness product_sym(ProductKind k, const Poly& p, const Poly& q);

// ---- distributivity / duoidal / interchange structure maps ----

// p . (q1+q2) ~= (p.q1) + (p.q2) for any Day product
IsoWitness day_distributivity(DayKind k, const Poly& p, const Poly& q1, const Poly& q2);
// (p+p') <| q ~= (p<|q) + (p'<|q)   [literal in this encoding]
IsoWitness subst_plus_distrib(const Poly& p, const Poly& p2, const Poly& q);
// (p x p') <| q ~= (p<|q) x (p'<|q)
IsoWitness subst_times_distrib(const Poly& p, const Poly& p2, const Poly& q);
// (p1<|p2) ox (q1<|q2) -> (p1 ox q1) <| (p2 ox q2)
PolyMap duoidal_map(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2);
// p ox q -> p <| q
PolyMap indep_map(const Poly& p, const Poly& q);
// 1 -> y <| 1
PolyMap one_to_y_sub_one();
// (p1<|p2) x (q1<|q2) -> (p1 ox q1) <| (p2 x q2)
PolyMap duoidal_times_map(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2);
// middle-four interchange (a ox b) ox (c ox d) -> (a ox c) ox (b ox d)
PolyMap tensor_interchange(const Poly& a, const Poly& b, const Poly& c, const Poly& d);
// (p+y) ox (q+y) ~= (p v q) + y
IsoWitness vee_strong_monoidal(const Poly& p, const Poly& q);
// p + q -> p v q
PolyMap plus_to_vee(const Poly& p, const Poly& q);
// (p1<|p2) v (q1<|q2) -> (p1 v q1) <| (p2 v q2)
PolyMap vee_sub_duoidal(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2);
// (p1 ox p2) v (q1 ox q2) -> (p1 v q1) ox (p2 v q2)
PolyMap vee_tensor_duoidal(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2);

// Asserts a == b (table equality) and returns the identity-shaped witness
// between them. The assertion failing means an encoding convention broke.
IsoWitness literal_witness(const Poly& a, const Poly& b, const char* what);

}  // namespace poly

#endif
