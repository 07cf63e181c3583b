#include "polycalc/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace poly {

Poly poly_zero() { return {}; }
Poly poly_one() { return {{0}}; }
Poly poly_y() { return {{1}}; }

Poly representable(int a) {
  if (a < 0) throw ShapeError("representable: negative exponent");
  return {{a}};
}

Poly constant(int a) { return monomial(a, 0); }
Poly linear(int a) { return monomial(a, 1); }

Poly monomial(int coeff, int exp) {
  if (coeff < 0 || exp < 0) throw ShapeError("monomial: negative parameter");
  Poly p;
  p.dirs.assign(static_cast<std::size_t>(coeff), exp);
  return p;
}

std::vector<int> canonical_form(const Poly& p) {
  std::vector<int> form = p.dirs;
  std::sort(form.begin(), form.end(), std::greater<int>());
  return form;
}

void validate(const PolyMap& m) {
  if (static_cast<int>(m.fwd.size()) != m.src.num_positions())
    throw ShapeError("PolyMap: fwd length does not match source positions");
  if (m.bwd.size() != m.fwd.size()) throw ShapeError("PolyMap: bwd count does not match source positions");
  for (int i = 0; i < m.src.num_positions(); ++i) {
    int j = m.fwd[static_cast<std::size_t>(i)];
    if (j < 0 || j >= m.tgt.num_positions()) throw ShapeError("PolyMap: fwd entry out of range");
    const auto& t = m.bwd[static_cast<std::size_t>(i)];
    if (static_cast<int>(t.size()) != m.tgt.dirs[static_cast<std::size_t>(j)])
      throw ShapeError("PolyMap: bwd table length does not match target directions");
    for (int v : t)
      if (v < 0 || v >= m.src.dirs[static_cast<std::size_t>(i)])
        throw ShapeError("PolyMap: bwd entry out of range");
  }
}

PolyMap identity_map(const Poly& p) {
  PolyMap m{p, p, {}, {}};
  m.fwd.resize(static_cast<std::size_t>(p.num_positions()));
  std::iota(m.fwd.begin(), m.fwd.end(), 0);
  m.bwd.reserve(m.fwd.size());
  for (int d : p.dirs) {
    std::vector<int> t(static_cast<std::size_t>(d));
    std::iota(t.begin(), t.end(), 0);
    m.bwd.push_back(std::move(t));
  }
  return m;
}

PolyMap compose(const PolyMap& psi, const PolyMap& phi) {
  if (phi.tgt != psi.src) throw ShapeError("compose: endpoint mismatch");
  PolyMap m{phi.src, psi.tgt, {}, {}};
  m.fwd.reserve(phi.fwd.size());
  m.bwd.reserve(phi.fwd.size());
  for (int i = 0; i < phi.src.num_positions(); ++i) {
    int mid = phi.fwd[static_cast<std::size_t>(i)];
    int j = psi.fwd[static_cast<std::size_t>(mid)];
    m.fwd.push_back(j);
    const auto& outer = psi.bwd[static_cast<std::size_t>(mid)];  // tgt.dir(j) -> mid dirs
    const auto& inner = phi.bwd[static_cast<std::size_t>(i)];    // mid dirs -> src.dir(i)
    std::vector<int> t;
    t.reserve(outer.size());
    for (int v : outer) t.push_back(inner[static_cast<std::size_t>(v)]);
    m.bwd.push_back(std::move(t));
  }
  return m;
}

bool map_equal(const PolyMap& a, const PolyMap& b) {
  return a.src == b.src && a.tgt == b.tgt && a.fwd == b.fwd && a.bwd == b.bwd;
}

bool is_identity(const PolyMap& m) { return map_equal(m, identity_map(m.src)); }

FinFn fwd_fn(const PolyMap& m) { return {m.src.positions(), m.tgt.positions(), m.fwd}; }

FinFn bwd_fn(const PolyMap& m, int i) {
  int j = m.fwd[static_cast<std::size_t>(i)];
  return {m.tgt.dir(j), m.src.dir(i), m.bwd[static_cast<std::size_t>(i)]};
}

bool verify_iso(const IsoWitness& w) {
  try {
    validate(w.fwd);
    validate(w.bwd);
  } catch (const ShapeError&) {
    return false;
  }
  if (w.fwd.src != w.bwd.tgt || w.fwd.tgt != w.bwd.src) return false;
  return is_identity(compose(w.bwd, w.fwd)) && is_identity(compose(w.fwd, w.bwd));
}

IsoWitness identity_witness(const Poly& p) { return {identity_map(p), identity_map(p)}; }

IsoWitness invert(const PolyMap& m) {
  validate(m);
  FinFn f = fwd_fn(m);
  if (!fn_bijective(f)) throw ShapeError("invert: forward map not bijective");
  FinFn finv = fn_inverse(f);
  PolyMap inv{m.tgt, m.src, finv.table, {}};
  inv.bwd.resize(static_cast<std::size_t>(m.tgt.num_positions()));
  for (int j = 0; j < m.tgt.num_positions(); ++j) {
    int i = finv(j);
    FinFn b = bwd_fn(m, i);  // tgt.dir(j) -> src.dir(i)
    if (!fn_bijective(b)) throw ShapeError("invert: backward map not bijective");
    inv.bwd[static_cast<std::size_t>(j)] = fn_inverse(b).table;  // src.dir(i) -> tgt.dir(j)
  }
  IsoWitness w{m, inv};
  if (!verify_iso(w)) throw ShapeError("invert: witness failed verification");
  return w;
}

std::optional<IsoWitness> find_iso(const Poly& p, const Poly& q) {
  if (canonical_form(p) != canonical_form(q)) return std::nullopt;
  // stable sort of position indices by descending direction count
  auto order_of = [](const Poly& r) {
    std::vector<int> idx(static_cast<std::size_t>(r.num_positions()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return r.dirs[static_cast<std::size_t>(a)] > r.dirs[static_cast<std::size_t>(b)];
    });
    return idx;
  };
  std::vector<int> po = order_of(p), qo = order_of(q);
  PolyMap fwd{p, q, std::vector<int>(po.size()), {}};
  fwd.bwd.resize(po.size());
  for (std::size_t k = 0; k < po.size(); ++k) {
    int i = po[k], j = qo[k];
    fwd.fwd[static_cast<std::size_t>(i)] = j;
    fwd.bwd[static_cast<std::size_t>(i)] = fn_identity(p.dir(i)).table;
  }
  return invert(fwd);
}

std::uint64_t eval_size(const Poly& p, FinSet a) {
  std::uint64_t n = 0;
  for (int d : p.dirs) n = checked_add(n, checked_pow(static_cast<std::uint64_t>(a.size), static_cast<std::uint64_t>(d)));
  return n;
}

FinSet eval_set(const Poly& p, FinSet a) {
  return FinSet{static_cast<int>(guard_size(eval_size(p, a), "eval_set"))};
}

SumLayout eval_layout(const Poly& p, FinSet a) {
  std::vector<int> sizes;
  sizes.reserve(p.dirs.size());
  for (int d : p.dirs)
    sizes.push_back(static_cast<int>(guard_size(checked_pow(static_cast<std::uint64_t>(a.size), static_cast<std::uint64_t>(d)), "eval_layout")));
  return SumLayout(sizes);
}

std::uint64_t eval_encode(const Poly& p, FinSet a, int i, const FinFn& g) {
  if (g.dom != p.dir(i) || g.cod != a) throw ShapeError("eval_encode: element shape mismatch");
  return eval_layout(p, a).encode(i, fn_encode(g));
}

std::pair<int, FinFn> eval_decode(const Poly& p, FinSet a, std::uint64_t idx) {
  auto [i, inner] = eval_layout(p, a).decode(idx);
  return {i, fn_decode(p.dir(i), a, inner)};
}

FinFn eval_fn(const Poly& p, const FinFn& f) {
  FinSet a = f.dom, b = f.cod;
  FinFn out{eval_set(p, a), eval_set(p, b), {}};
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(out.dom.size); ++idx) {
    auto [i, g] = eval_decode(p, a, idx);
    out.table.push_back(static_cast<int>(eval_encode(p, b, i, fn_compose(f, g))));
  }
  return out;
}

std::vector<int> constant_positions(const Poly& p) {
  std::vector<int> out;
  for (int i = 0; i < p.num_positions(); ++i)
    if (p.dirs[static_cast<std::size_t>(i)] == 0) out.push_back(i);
  return out;
}

std::uint64_t gamma_size(const Poly& p) { return mixed_radix_size(p.dirs); }

FinSet gamma_set(const Poly& p) {
  return FinSet{static_cast<int>(guard_size(gamma_size(p), "gamma_set"))};
}

std::uint64_t gamma_encode(const Poly& p, std::span<const int> choice) {
  return mr_encode(p.dirs, choice);
}

std::vector<int> gamma_decode(const Poly& p, std::uint64_t idx) {
  return mr_decode(p.dirs, idx);
}

// per-source-position choice space: (J, table of q.dir(J) -> p.dir(i))
namespace {
SumLayout hom_choice_layout(const Poly& p, const Poly& q, int i) {
  std::vector<int> sizes;
  sizes.reserve(q.dirs.size());
  for (int j = 0; j < q.num_positions(); ++j)
    sizes.push_back(static_cast<int>(
        guard_size(fn_count(q.dir(j), p.dir(i)), "hom enumeration")));
  return SumLayout(sizes);
}
}  // namespace

std::uint64_t hom_count(const Poly& p, const Poly& q) {
  std::uint64_t n = 1;
  for (int i = 0; i < p.num_positions(); ++i) {
    std::uint64_t per = 0;
    for (int j = 0; j < q.num_positions(); ++j)
      per = checked_add(per, checked_pow(static_cast<std::uint64_t>(p.dirs[static_cast<std::size_t>(i)]),
                                         static_cast<std::uint64_t>(q.dirs[static_cast<std::size_t>(j)])));
    n = checked_mul(n, per);
  }
  return n;
}

PolyMap hom_by_index(const Poly& p, const Poly& q, std::uint64_t rank) {
  PolyMap m{p, q, std::vector<int>(static_cast<std::size_t>(p.num_positions())),
            std::vector<std::vector<int>>(static_cast<std::size_t>(p.num_positions()))};
  // decode big-endian: position 0 most significant
  std::vector<std::uint64_t> choice(static_cast<std::size_t>(p.num_positions()));
  for (int i = p.num_positions() - 1; i >= 0; --i) {
    SumLayout layout = hom_choice_layout(p, q, i);
    if (layout.total == 0) throw ShapeError("hom_by_index: empty hom set");
    choice[static_cast<std::size_t>(i)] = rank % layout.total;
    rank /= layout.total;
  }
  if (rank != 0) throw ShapeError("hom_by_index: rank out of range");
  for (int i = 0; i < p.num_positions(); ++i) {
    SumLayout layout = hom_choice_layout(p, q, i);
    auto [j, inner] = layout.decode(choice[static_cast<std::size_t>(i)]);
    m.fwd[static_cast<std::size_t>(i)] = j;
    m.bwd[static_cast<std::size_t>(i)] = fn_decode(q.dir(j), p.dir(i), inner).table;
  }
  return m;
}

std::uint64_t hom_index_of(const PolyMap& m) {
  validate(m);
  std::uint64_t rank = 0;
  for (int i = 0; i < m.src.num_positions(); ++i) {
    SumLayout layout = hom_choice_layout(m.src, m.tgt, i);
    int j = m.fwd[static_cast<std::size_t>(i)];
    std::uint64_t c = layout.encode(j, fn_encode(bwd_fn(m, i)));
    rank = checked_add(checked_mul(rank, layout.total), c);
  }
  return rank;
}

HomRange::HomRange(Poly p, Poly q)
    : p_(std::move(p)), q_(std::move(q)), count_(guard_size(hom_count(p_, q_), "enumerate_homs")) {}

FinFn joint_map(const PolyMap& m, int j) {
  std::vector<int> fiber;
  for (int i = 0; i < m.src.num_positions(); ++i)
    if (m.fwd[static_cast<std::size_t>(i)] == j) fiber.push_back(i);
  std::vector<int> radices;
  radices.reserve(fiber.size());
  for (int i : fiber) radices.push_back(m.src.dirs[static_cast<std::size_t>(i)]);
  FinSet prod{static_cast<int>(guard_size(mixed_radix_size(radices), "joint_map"))};
  FinFn out{m.tgt.dir(j), prod, {}};
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  for (int d = 0; d < out.dom.size; ++d) {
    std::vector<int> digits;
    digits.reserve(fiber.size());
    for (int i : fiber) digits.push_back(m.bwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
    out.table.push_back(static_cast<int>(mr_encode(radices, digits)));
  }
  return out;
}

namespace {
// tuples (bwd[i](d))_{i in fiber of j} for each d in q[j]; avoids
// materializing the product set
std::vector<std::vector<int>> joint_tuples(const PolyMap& m, int j) {
  std::vector<int> fiber;
  for (int i = 0; i < m.src.num_positions(); ++i)
    if (m.fwd[static_cast<std::size_t>(i)] == j) fiber.push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(m.tgt.dirs[static_cast<std::size_t>(j)]));
  for (int d = 0; d < m.tgt.dirs[static_cast<std::size_t>(j)]; ++d) {
    std::vector<int> tup;
    tup.reserve(fiber.size());
    for (int i : fiber) tup.push_back(m.bwd[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)]);
    out.push_back(std::move(tup));
  }
  return out;
}

bool joint_injective_at(const PolyMap& m, int j) {
  auto tuples = joint_tuples(m, j);
  std::sort(tuples.begin(), tuples.end());
  return std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end();
}

bool joint_bijective_at(const PolyMap& m, int j) {
  std::uint64_t prod = 1;
  bool huge = false;
  for (int i = 0; i < m.src.num_positions(); ++i)
    if (m.fwd[static_cast<std::size_t>(i)] == j) {
      try {
        prod = checked_mul(prod, static_cast<std::uint64_t>(m.src.dirs[static_cast<std::size_t>(i)]));
      } catch (const GuardExceeded&) {
        huge = true;
        break;
      }
    }
  if (huge || prod != static_cast<std::uint64_t>(m.tgt.dirs[static_cast<std::size_t>(j)])) return false;
  return joint_injective_at(m, j);
}
}  // namespace

Classification classify(const PolyMap& m) {
  validate(m);
  Classification c;
  c.vertical = m.src.num_positions() == m.tgt.num_positions();
  if (c.vertical)
    for (int i = 0; i < m.src.num_positions(); ++i)
      if (m.fwd[static_cast<std::size_t>(i)] != i) { c.vertical = false; break; }

  c.cartesian = true;
  for (int i = 0; i < m.src.num_positions(); ++i)
    if (!fn_bijective(bwd_fn(m, i))) { c.cartesian = false; break; }

  FinFn f = fwd_fn(m);
  bool joint_bij = true, joint_inj = true;
  for (int j = 0; j < m.tgt.num_positions(); ++j) {
    if (!joint_bijective_at(m, j)) joint_bij = false;
    if (!joint_injective_at(m, j)) joint_inj = false;
    if (!joint_bij && !joint_inj) break;
  }
  c.opcartesian = joint_bij;

  bool bwd_all_surj = true;
  for (int i = 0; i < m.src.num_positions(); ++i)
    if (!fn_surjective(bwd_fn(m, i))) { bwd_all_surj = false; break; }

  c.mono = fn_injective(f) && bwd_all_surj;
  c.epi = fn_surjective(f) && joint_inj;
  c.iso = fn_bijective(f) && c.cartesian;
  return c;
}

PolySpan poly_pullback(const PolyMap& phi, const PolyMap& psi) {
  validate(phi);
  validate(psi);
  if (phi.tgt != psi.tgt) throw ShapeError("poly_pullback: codomain mismatch");
  PullbackSet pos = finset_pullback(fwd_fn(phi), fwd_fn(psi));
  PolySpan span;
  span.apex.dirs.reserve(pos.pairs.size());
  PolyMap left{span.apex, phi.src, {}, {}};
  PolyMap right{span.apex, psi.src, {}, {}};
  for (auto [i, j] : pos.pairs) {
    // directions: pushout of p[i] <-phi#- r[k] -psi#-> q[j]
    PushoutSet po = finset_pushout(bwd_fn(phi, i), bwd_fn(psi, j));
    span.apex.dirs.push_back(po.total.size);
    left.fwd.push_back(i);
    left.bwd.push_back(po.from_a.table);   // p[i] -> pushout
    right.fwd.push_back(j);
    right.bwd.push_back(po.from_b.table);  // q[j] -> pushout
  }
  left.src = span.apex;
  right.src = span.apex;
  span.left = std::move(left);
  span.right = std::move(right);
  validate(span.left);
  validate(span.right);
  return span;
}

PolyMap pullback_mediator(const PolyMap& phi, const PolyMap& psi,
                          const PolySpan& pb, const PolyMap& sigma,
                          const PolyMap& tau) {
  validate(sigma);
  validate(tau);
  if (sigma.src != tau.src || sigma.tgt != phi.src || tau.tgt != psi.src)
    throw ShapeError("pullback_mediator: cone endpoints mismatch");
  if (!map_equal(compose(phi, sigma), compose(psi, tau)))
    throw ShapeError("pullback_mediator: cone does not commute");
  PullbackSet pos = finset_pullback(fwd_fn(phi), fwd_fn(psi));
  PolyMap med{sigma.src, pb.apex, {}, {}};
  for (int x = 0; x < sigma.src.num_positions(); ++x) {
    int i = sigma.fwd[static_cast<std::size_t>(x)];
    int j = tau.fwd[static_cast<std::size_t>(x)];
    int w = pos.pair_index(i, j);
    if (w < 0) throw ShapeError("pullback_mediator: cone lands outside pullback");
    med.fwd.push_back(w);
    // pushout universal map into c[x]
    PushoutSet po = finset_pushout(bwd_fn(phi, i), bwd_fn(psi, j));
    FinFn u = bwd_fn(sigma, x);   // p[i] -> c[x]
    FinFn v = bwd_fn(tau, x);     // q[j] -> c[x]
    med.bwd.push_back(pushout_copair(po, u, v).table);
  }
  validate(med);
  return med;
}

std::vector<Poly> all_polys(int max_pos, int max_dir) {
  std::vector<Poly> out;
  out.push_back(poly_zero());
  std::vector<Poly> frontier{poly_zero()};
  for (int n = 1; n <= max_pos; ++n) {
    std::vector<Poly> next;
    for (const Poly& p : frontier)
      for (int d = 0; d <= max_dir; ++d) {
        Poly q = p;
        q.dirs.push_back(d);
        next.push_back(q);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string to_string(const Poly& p) {
  std::vector<int> form = canonical_form(p);
  if (form.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < form.size()) {
    std::size_t j = i;
    while (j < form.size() && form[j] == form[i]) ++j;
    std::size_t coeff = j - i;
    int e = form[i];
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << coeff;
    } else {
      if (coeff > 1) os << coeff;
      os << "y";
      if (e > 1) os << "^" << e;
    }
    i = j;
  }
  return os.str();
}

std::string to_string_canonical(const Poly& p) {
  std::ostringstream os;
  os << "[";
  std::vector<int> form = canonical_form(p);
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i) os << ",";
    os << form[i];
  }
  os << "]";
  return os.str();
}

std::string to_string(const PolyMap& m) {
  std::ostringstream os;
  os << to_string(m.src) << " -> " << to_string(m.tgt) << "; fwd:";
  for (int v : m.fwd) os << " " << v;
  for (std::size_t i = 0; i < m.bwd.size(); ++i) {
    os << "; bwd[" << i << "]:";
    for (int v : m.bwd[i]) os << " " << v;
  }
  return os.str();
}

}  // namespace poly
