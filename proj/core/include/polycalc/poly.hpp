#ifndef POLYCALC_POLY_HPP
#define POLYCALC_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "polycalc/finset.hpp"

namespace poly {

// A polynomial functor in standard form: a finite list of positions, each
// carrying the size of its (canonical) direction set.
struct Poly {
  std::vector<int> dirs;

  int num_positions() const { return static_cast<int>(dirs.size()); }
  FinSet positions() const { return FinSet{num_positions()}; }
  FinSet dir(int i) const { return FinSet{dirs[static_cast<std::size_t>(i)]}; }

  bool operator==(const Poly&) const = default;
};

Poly poly_zero();            // 0: no positions
Poly poly_one();             // 1 = y^0
Poly poly_y();               // y
Poly representable(int a);   // y^A
Poly constant(int a);        // A y^0
Poly linear(int a);          // A y
Poly monomial(int coeff, int exp);  // coeff copies of y^exp

// Sorted-descending multiset of direction-set sizes. Two polynomials are
// abstractly isomorphic iff their canonical forms agree.
std::vector<int> canonical_form(const Poly& p);

// A morphism of polynomials: forward on positions, backward on directions.
// bwd[i] maps tgt.dir(fwd[i]) -> src.dir(i).
struct PolyMap {
  Poly src, tgt;
  std::vector<int> fwd;
  std::vector<std::vector<int>> bwd;

  bool operator==(const PolyMap&) const = default;
};

void validate(const PolyMap& m);
PolyMap identity_map(const Poly& p);
// psi after phi
PolyMap compose(const PolyMap& psi, const PolyMap& phi);
bool map_equal(const PolyMap& a, const PolyMap& b);
bool is_identity(const PolyMap& m);

FinFn fwd_fn(const PolyMap& m);
FinFn bwd_fn(const PolyMap& m, int i);

// A pair of morphisms certified mutually inverse.
struct IsoWitness {
  PolyMap fwd, bwd;
};
bool verify_iso(const IsoWitness& w);
IsoWitness identity_witness(const Poly& p);
// Builds the inverse of a map whose fwd and bwd components are all bijective.
IsoWitness invert(const PolyMap& m);

// Isomorphism search driven by canonical forms: sorts positions by direction
// count and matches them up. Returns nullopt when canonical forms differ.
std::optional<IsoWitness> find_iso(const Poly& p, const Poly& q);

// ---- evaluation and sections ----

// |p(A)| = sum_I |A|^{|p[I]|}, guarded.
std::uint64_t eval_size(const Poly& p, FinSet a);
FinSet eval_set(const Poly& p, FinSet a);
// Elements of p(A) are pairs (I, g: p[I] -> A), blocks ordered by I, functions
// ranked lexicographically.
std::uint64_t eval_encode(const Poly& p, FinSet a, int i, const FinFn& g);
std::pair<int, FinFn> eval_decode(const Poly& p, FinSet a, std::uint64_t idx);
// Layout helper: block offsets of eval_set(p, a).
SumLayout eval_layout(const Poly& p, FinSet a);
// p(f): eval is functorial in the set argument.
FinFn eval_fn(const Poly& p, const FinFn& f);
// Number of constant positions (p(0)), with their position indices.
std::vector<int> constant_positions(const Poly& p);

// Global sections: gamma(p) = prod_I p[I]; elements are choice functions
// encoded big-endian mixed-radix over positions.
std::uint64_t gamma_size(const Poly& p);
FinSet gamma_set(const Poly& p);
std::uint64_t gamma_encode(const Poly& p, std::span<const int> choice);
std::vector<int> gamma_decode(const Poly& p, std::uint64_t idx);

// ---- hom sets ----

// |Poly(p,q)| = prod_I sum_J |p[I]|^{|q[J]|} (checked, may throw GuardExceeded).
std::uint64_t hom_count(const Poly& p, const Poly& q);

// Morphisms are ranked by a big-endian mixed radix over source positions; the
// per-position choice enumerates (J, backward table) with J-major blocks and
// tables in lexicographic order.
PolyMap hom_by_index(const Poly& p, const Poly& q, std::uint64_t rank);
std::uint64_t hom_index_of(const PolyMap& m);

// Restartable stream over Poly(p,q) in rank order; guarded.
class HomRange {
 public:
  HomRange(Poly p, Poly q);
  std::uint64_t size() const { return count_; }
  PolyMap operator[](std::uint64_t rank) const { return hom_by_index(p_, q_, rank); }

  class iterator {
   public:
    iterator(const HomRange* r, std::uint64_t i) : range_(r), i_(i) {}
    PolyMap operator*() const { return (*range_)[i_]; }
    iterator& operator++() { ++i_; return *this; }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }
   private:
    const HomRange* range_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  Poly p_, q_;
  std::uint64_t count_;
};

// ---- morphism classification ----

struct Classification {
  bool vertical = false;
  bool cartesian = false;
  bool opcartesian = false;
  bool mono = false;
  bool epi = false;
  bool iso = false;
};
// vertical: fwd is the identity table. cartesian: every bwd[i] bijective.
// op-cartesian: for each target position J the joint map
// q[J] -> prod_{fwd(I)=J} p[I] is bijective. mono: fwd injective and every
// bwd[i] surjective. epi: fwd surjective and every joint map injective (a
// validated conjecture; the cancellability oracle is enforced in the tests).
Classification classify(const PolyMap& m);

// Joint map at target position j: q[j] -> prod over the fiber of fwd over j
// (fiber positions in increasing order, product encoded mixed-radix).
FinFn joint_map(const PolyMap& m, int j);

// ---- pullbacks of polynomials ----

struct PolySpan {
  Poly apex;
  PolyMap left, right;
};

// Pullback of phi: p -> r against psi: q -> r. Positions pull back along the
// forward maps; the direction set over (I,J) above K is the pushout of
// p[I] <- r[K] -> q[J].
PolySpan poly_pullback(const PolyMap& phi, const PolyMap& psi);
// Mediator for a cone (sigma: c -> p, tau: c -> q) with phi.sigma = psi.tau.
PolyMap pullback_mediator(const PolyMap& phi, const PolyMap& psi,
                          const PolySpan& pb, const PolyMap& sigma,
                          const PolyMap& tau);

// ---- small utilities shared by tests and the law registry ----

// All polynomials with at most max_pos positions and direction counts at most
// max_dir, in a fixed deterministic order.
std::vector<Poly> all_polys(int max_pos, int max_dir);

std::string to_string(const Poly& p);           // standard form, e.g. "y^3 + 2y + 1"
std::string to_string_canonical(const Poly& p); // "[3,1,1,0]"
std::string to_string(const PolyMap& m);

}  // namespace poly

#endif
