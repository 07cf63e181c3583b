#ifndef POLYCALC_FINSET_HPP
#define POLYCALC_FINSET_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poly {

// Thrown when an enumeration or construction would exceed the configured
// size guard. Oracles fail loudly instead of hanging.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on mismatched endpoints, malformed tables, bad indices.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime-configurable guard on enumeration/construction sizes.
std::uint64_t enumeration_guard();
void set_enumeration_guard(std::uint64_t limit);

// Checked arithmetic; throws GuardExceeded on uint64 overflow.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

// Throws GuardExceeded when n exceeds the enumeration guard.
std::uint64_t guard_size(std::uint64_t n, const char* what);

// A canonical finite set: elements are 0..size-1.
struct FinSet {
  int size = 0;
  bool operator==(const FinSet&) const = default;
};

// A function between canonical finite sets, as a full table.
struct FinFn {
  FinSet dom;
  FinSet cod;
  std::vector<int> table;

  int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }
  bool operator==(const FinFn&) const = default;
};

void validate(const FinFn& f);

FinFn fn_identity(FinSet a);
FinFn fn_constant(FinSet dom, FinSet cod, int value);
// g after f
FinFn fn_compose(const FinFn& g, const FinFn& f);
bool fn_injective(const FinFn& f);
bool fn_surjective(const FinFn& f);
bool fn_bijective(const FinFn& f);
FinFn fn_inverse(const FinFn& f);  // requires bijective

// ---- coproduct, product, exponential ----

struct SumSet {
  FinSet total;  // size a+b; layout [A | B]
  FinFn inl, inr;
};
SumSet finset_sum(FinSet a, FinSet b);

struct ProductSet {
  FinSet total;  // size a*b; pair (x,y) encodes as x*b+y
  FinFn proj1, proj2;
};
ProductSet finset_product(FinSet a, FinSet b);

int pair_encode(FinSet a, FinSet b, int x, int y);
std::pair<int, int> pair_decode(FinSet a, FinSet b, int idx);

// Number of functions a -> b (checked b^a).
std::uint64_t fn_count(FinSet a, FinSet b);
// The set of functions a -> b, guarded.
FinSet finset_exponential(FinSet a, FinSet b);

// Functions a -> b are ranked lexicographically by table (table[0] most
// significant). fn_encode/fn_decode convert between rank and table.
std::uint64_t fn_encode(const FinFn& f);
FinFn fn_decode(FinSet dom, FinSet cod, std::uint64_t rank);

// Restartable stream over all functions dom -> cod in rank order.
class FnRange {
 public:
  FnRange(FinSet dom, FinSet cod);  // throws GuardExceeded past the guard
  std::uint64_t size() const { return count_; }
  FinFn operator[](std::uint64_t rank) const { return fn_decode(dom_, cod_, rank); }

  class iterator {
   public:
    iterator(const FnRange* r, std::uint64_t i) : range_(r), i_(i) {}
    FinFn operator*() const { return (*range_)[i_]; }
    iterator& operator++() { ++i_; return *this; }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }
   private:
    const FnRange* range_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  FinSet dom_, cod_;
  std::uint64_t count_;
};

// ---- pushout, pullback, quotient ----

struct PushoutSet {
  FinSet total;
  FinFn from_a, from_b;  // the cocone legs A -> P, B -> P
};
// Pushout of the span A <-f- C -g-> B (coequalizer of both legs into A+B).
// Classes are renumbered in order of least representative within A+B.
PushoutSet finset_pushout(const FinFn& f, const FinFn& g);
// Universal map out of the pushout: u: A->Z, v: B->Z with u.f = v.g.
FinFn pushout_copair(const PushoutSet& po, const FinFn& u, const FinFn& v);

struct PullbackSet {
  FinSet total;
  FinFn proj1, proj2;                 // P -> A, P -> B
  std::vector<std::pair<int, int>> pairs;  // element i is pairs[i], lex by (a,b)
  int pair_index(int a, int b) const;      // -1 when (a,b) not in the pullback
};
// Pullback of A -f-> C <-g- B: pairs (a,b) with f(a)=g(b).
PullbackSet finset_pullback(const FinFn& f, const FinFn& g);

struct QuotientSet {
  FinSet total;
  FinFn proj;  // A -> Q
};
// Quotient of A by the equivalence relation generated by the given pairs;
// classes renumbered in order of least representative.
QuotientSet finset_quotient(FinSet a, std::span<const std::pair<int, int>> pairs);
// Quotient by the kernel of f (x ~ y iff f(x) = f(y)).
QuotientSet finset_quotient_kernel(const FinFn& f);

// ---- mixed-radix encodings (big-endian: digit 0 most significant) ----

std::uint64_t mixed_radix_size(std::span<const int> radices);
std::uint64_t mr_encode(std::span<const int> radices, std::span<const int> digits);
std::vector<int> mr_decode(std::span<const int> radices, std::uint64_t index);

// Offsets for a Sigma layout: block i occupies [offset[i], offset[i]+sizes[i]).
struct SumLayout {
  std::vector<std::uint64_t> offsets;
  std::uint64_t total = 0;

  explicit SumLayout(std::span<const int> sizes);
  SumLayout() = default;
  std::uint64_t encode(int block, std::uint64_t inner) const { return offsets[static_cast<std::size_t>(block)] + inner; }
  // returns (block, inner)
  std::pair<int, std::uint64_t> decode(std::uint64_t idx) const;
};

}  // namespace poly

#endif
