#include "polycalc/finset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace poly {

namespace {
std::uint64_t g_guard = 1'000'000;
}

std::uint64_t enumeration_guard() { return g_guard; }
void set_enumeration_guard(std::uint64_t limit) { g_guard = limit; }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw GuardExceeded("overflow in addition");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw GuardExceeded("overflow in multiplication");
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) result = checked_mul(result, base);
  return result;
}

std::uint64_t guard_size(std::uint64_t n, const char* what) {
  if (n > g_guard)
    throw GuardExceeded(std::string(what) + ": size " + std::to_string(n) +
                        " exceeds guard " + std::to_string(g_guard));
  return n;
}

void validate(const FinFn& f) {
  if (static_cast<int>(f.table.size()) != f.dom.size)
    throw ShapeError("FinFn table length does not match domain");
  for (int v : f.table)
    if (v < 0 || v >= f.cod.size) throw ShapeError("FinFn table entry out of codomain");
}

FinFn fn_identity(FinSet a) {
  FinFn f{a, a, std::vector<int>(static_cast<std::size_t>(a.size))};
  std::iota(f.table.begin(), f.table.end(), 0);
  return f;
}

FinFn fn_constant(FinSet dom, FinSet cod, int value) {
  if (value < 0 || value >= cod.size) throw ShapeError("fn_constant: value out of codomain");
  return {dom, cod, std::vector<int>(static_cast<std::size_t>(dom.size), value)};
}

FinFn fn_compose(const FinFn& g, const FinFn& f) {
  if (f.cod != g.dom) throw ShapeError("fn_compose: endpoint mismatch");
  FinFn h{f.dom, g.cod, {}};
  h.table.reserve(f.table.size());
  for (int v : f.table) h.table.push_back(g.table[static_cast<std::size_t>(v)]);
  return h;
}

bool fn_injective(const FinFn& f) {
  std::vector<char> seen(static_cast<std::size_t>(f.cod.size), 0);
  for (int v : f.table) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool fn_surjective(const FinFn& f) {
  std::vector<char> seen(static_cast<std::size_t>(f.cod.size), 0);
  for (int v : f.table) seen[static_cast<std::size_t>(v)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool fn_bijective(const FinFn& f) {
  return f.dom.size == f.cod.size && fn_injective(f);
}

FinFn fn_inverse(const FinFn& f) {
  if (!fn_bijective(f)) throw ShapeError("fn_inverse: function is not bijective");
  FinFn g{f.cod, f.dom, std::vector<int>(static_cast<std::size_t>(f.cod.size))};
  for (int x = 0; x < f.dom.size; ++x) g.table[static_cast<std::size_t>(f.table[static_cast<std::size_t>(x)])] = x;
  return g;
}

SumSet finset_sum(FinSet a, FinSet b) {
  FinSet total{a.size + b.size};
  FinFn inl{a, total, std::vector<int>(static_cast<std::size_t>(a.size))};
  std::iota(inl.table.begin(), inl.table.end(), 0);
  FinFn inr{b, total, std::vector<int>(static_cast<std::size_t>(b.size))};
  std::iota(inr.table.begin(), inr.table.end(), a.size);
  return {total, std::move(inl), std::move(inr)};
}

ProductSet finset_product(FinSet a, FinSet b) {
  guard_size(checked_mul(static_cast<std::uint64_t>(a.size), static_cast<std::uint64_t>(b.size)), "finset_product");
  FinSet total{a.size * b.size};
  FinFn p1{total, a, {}}, p2{total, b, {}};
  p1.table.reserve(static_cast<std::size_t>(total.size));
  p2.table.reserve(static_cast<std::size_t>(total.size));
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y) {
      p1.table.push_back(x);
      p2.table.push_back(y);
    }
  return {total, std::move(p1), std::move(p2)};
}

int pair_encode(FinSet a, FinSet b, int x, int y) {
  if (x < 0 || x >= a.size || y < 0 || y >= b.size) throw ShapeError("pair_encode: out of range");
  return x * b.size + y;
}

std::pair<int, int> pair_decode(FinSet a, FinSet b, int idx) {
  if (b.size == 0 || idx < 0 || idx >= a.size * b.size) throw ShapeError("pair_decode: out of range");
  return {idx / b.size, idx % b.size};
}

std::uint64_t fn_count(FinSet a, FinSet b) {
  return checked_pow(static_cast<std::uint64_t>(b.size), static_cast<std::uint64_t>(a.size));
}

FinSet finset_exponential(FinSet a, FinSet b) {
  return FinSet{static_cast<int>(guard_size(fn_count(a, b), "finset_exponential"))};
}

std::uint64_t fn_encode(const FinFn& f) {
  std::uint64_t rank = 0;
  for (int v : f.table) rank = checked_add(checked_mul(rank, static_cast<std::uint64_t>(f.cod.size)), static_cast<std::uint64_t>(v));
  return rank;
}

FinFn fn_decode(FinSet dom, FinSet cod, std::uint64_t rank) {
  FinFn f{dom, cod, std::vector<int>(static_cast<std::size_t>(dom.size))};
  for (int i = dom.size - 1; i >= 0; --i) {
    if (cod.size == 0) throw ShapeError("fn_decode: empty codomain with nonempty domain");
    f.table[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(cod.size));
    rank /= static_cast<std::uint64_t>(cod.size);
  }
  if (rank != 0) throw ShapeError("fn_decode: rank out of range");
  return f;
}

FnRange::FnRange(FinSet dom, FinSet cod) : dom_(dom), cod_(cod), count_(guard_size(fn_count(dom, cod), "enumerate_fns")) {}

PushoutSet finset_pushout(const FinFn& f, const FinFn& g) {
  validate(f);
  validate(g);
  if (f.dom != g.dom) throw ShapeError("finset_pushout: span legs have different apex");
  const int na = f.cod.size, nb = g.cod.size;
  // union-find over A+B
  std::vector<int> parent(static_cast<std::size_t>(na + nb));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);  // keep least representative as root
    parent[static_cast<std::size_t>(y)] = x;
  };
  for (int c = 0; c < f.dom.size; ++c) unite(f(c), na + g(c));
  // renumber classes by least representative
  std::vector<int> cls(static_cast<std::size_t>(na + nb), -1);
  int next = 0;
  for (int x = 0; x < na + nb; ++x) {
    int r = find(x);
    if (cls[static_cast<std::size_t>(r)] == -1) cls[static_cast<std::size_t>(r)] = next++;
    cls[static_cast<std::size_t>(x)] = cls[static_cast<std::size_t>(r)];
  }
  PushoutSet po;
  po.total = FinSet{next};
  po.from_a = FinFn{f.cod, po.total, std::vector<int>(cls.begin(), cls.begin() + na)};
  po.from_b = FinFn{g.cod, po.total, std::vector<int>(cls.begin() + na, cls.end())};
  return po;
}

FinFn pushout_copair(const PushoutSet& po, const FinFn& u, const FinFn& v) {
  if (u.dom != po.from_a.dom || v.dom != po.from_b.dom || u.cod != v.cod)
    throw ShapeError("pushout_copair: endpoint mismatch");
  FinFn h{po.total, u.cod, std::vector<int>(static_cast<std::size_t>(po.total.size), -1)};
  for (int a = 0; a < u.dom.size; ++a) h.table[static_cast<std::size_t>(po.from_a(a))] = u(a);
  for (int b = 0; b < v.dom.size; ++b) {
    int& slot = h.table[static_cast<std::size_t>(po.from_b(b))];
    if (slot == -1) slot = v(b);
    else if (slot != v(b)) throw ShapeError("pushout_copair: cocone does not commute");
  }
  for (int x : h.table)
    if (x == -1) throw ShapeError("pushout_copair: class with no representative image");
  return h;
}

int PullbackSet::pair_index(int a, int b) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
  if (it == pairs.end() || *it != std::make_pair(a, b)) return -1;
  return static_cast<int>(it - pairs.begin());
}

PullbackSet finset_pullback(const FinFn& f, const FinFn& g) {
  validate(f);
  validate(g);
  if (f.cod != g.cod) throw ShapeError("finset_pullback: cospan legs have different base");
  PullbackSet pb;
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < g.dom.size; ++b)
      if (f(a) == g(b)) pb.pairs.emplace_back(a, b);
  pb.total = FinSet{static_cast<int>(pb.pairs.size())};
  pb.proj1 = FinFn{pb.total, f.dom, {}};
  pb.proj2 = FinFn{pb.total, g.dom, {}};
  for (auto [a, b] : pb.pairs) {
    pb.proj1.table.push_back(a);
    pb.proj2.table.push_back(b);
  }
  return pb;
}

QuotientSet finset_quotient(FinSet a, std::span<const std::pair<int, int>> pairs) {
  std::vector<int> parent(static_cast<std::size_t>(a.size));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= a.size || y < 0 || y >= a.size) throw ShapeError("finset_quotient: pair out of range");
    int rx = find(x), ry = find(y);
    if (rx == ry) continue;
    if (rx > ry) std::swap(rx, ry);
    parent[static_cast<std::size_t>(ry)] = rx;
  }
  std::vector<int> cls(static_cast<std::size_t>(a.size), -1);
  int next = 0;
  for (int x = 0; x < a.size; ++x) {
    int r = find(x);
    if (cls[static_cast<std::size_t>(r)] == -1) cls[static_cast<std::size_t>(r)] = next++;
    cls[static_cast<std::size_t>(x)] = cls[static_cast<std::size_t>(r)];
  }
  return {FinSet{next}, FinFn{a, FinSet{next}, std::move(cls)}};
}

QuotientSet finset_quotient_kernel(const FinFn& f) {
  validate(f);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> first(static_cast<std::size_t>(f.cod.size), -1);
  for (int x = 0; x < f.dom.size; ++x) {
    int& slot = first[static_cast<std::size_t>(f(x))];
    if (slot == -1) slot = x;
    else pairs.emplace_back(slot, x);
  }
  return finset_quotient(f.dom, pairs);
}

std::uint64_t mixed_radix_size(std::span<const int> radices) {
  std::uint64_t n = 1;
  for (int r : radices) n = checked_mul(n, static_cast<std::uint64_t>(r));
  return n;
}

std::uint64_t mr_encode(std::span<const int> radices, std::span<const int> digits) {
  if (radices.size() != digits.size()) throw ShapeError("mr_encode: digit count mismatch");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    if (digits[i] < 0 || digits[i] >= radices[i]) throw ShapeError("mr_encode: digit out of range");
    idx = checked_add(checked_mul(idx, static_cast<std::uint64_t>(radices[i])), static_cast<std::uint64_t>(digits[i]));
  }
  return idx;
}

std::vector<int> mr_decode(std::span<const int> radices, std::uint64_t index) {
  std::vector<int> digits(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    auto r = static_cast<std::uint64_t>(radices[i]);
    if (r == 0) throw ShapeError("mr_decode: zero radix");
    digits[i] = static_cast<int>(index % r);
    index /= r;
  }
  if (index != 0) throw ShapeError("mr_decode: index out of range");
  return digits;
}

SumLayout::SumLayout(std::span<const int> sizes) {
  offsets.reserve(sizes.size());
  for (int s : sizes) {
    offsets.push_back(total);
    total = checked_add(total, static_cast<std::uint64_t>(s));
  }
}

std::pair<int, std::uint64_t> SumLayout::decode(std::uint64_t idx) const {
  if (idx >= total) throw ShapeError("SumLayout::decode: index out of range");
  auto it = std::upper_bound(offsets.begin(), offsets.end(), idx);
  int block = static_cast<int>(it - offsets.begin()) - 1;
  return {block, idx - offsets[static_cast<std::size_t>(block)]};
}

}  // namespace poly
