#include "polycalc/monoidal.hpp"

#include <numeric>

namespace poly {

// ---- coproduct ----

Poly coproduct(const Poly& p, const Poly& q) {
  Poly r = p;
  r.dirs.insert(r.dirs.end(), q.dirs.begin(), q.dirs.end());
  return r;
}

PolyMap coproduct_map(const PolyMap& f, const PolyMap& g) {
  PolyMap m{coproduct(f.src, g.src), coproduct(f.tgt, g.tgt), {}, {}};
  int off = f.tgt.num_positions();
  m.fwd = f.fwd;
  for (int j : g.fwd) m.fwd.push_back(off + j);
  m.bwd = f.bwd;
  m.bwd.insert(m.bwd.end(), g.bwd.begin(), g.bwd.end());
  return m;
}

PolyMap coproduct_inl(const Poly& p, const Poly& q) {
  PolyMap m{p, coproduct(p, q), {}, {}};
  m.fwd.resize(static_cast<std::size_t>(p.num_positions()));
  std::iota(m.fwd.begin(), m.fwd.end(), 0);
  for (int i = 0; i < p.num_positions(); ++i) m.bwd.push_back(fn_identity(p.dir(i)).table);
  return m;
}

PolyMap coproduct_inr(const Poly& p, const Poly& q) {
  PolyMap m{q, coproduct(p, q), {}, {}};
  m.fwd.resize(static_cast<std::size_t>(q.num_positions()));
  std::iota(m.fwd.begin(), m.fwd.end(), p.num_positions());
  for (int j = 0; j < q.num_positions(); ++j) m.bwd.push_back(fn_identity(q.dir(j)).table);
  return m;
}

PolyMap copair(const PolyMap& f, const PolyMap& g) {
  if (f.tgt != g.tgt) throw ShapeError("copair: target mismatch");
  PolyMap m{coproduct(f.src, g.src), f.tgt, {}, {}};
  m.fwd = f.fwd;
  m.fwd.insert(m.fwd.end(), g.fwd.begin(), g.fwd.end());
  m.bwd = f.bwd;
  m.bwd.insert(m.bwd.end(), g.bwd.begin(), g.bwd.end());
  return m;
}

// ---- Set-monoid plumbing ----

int monoid_unit(DayKind k) {
  switch (k) {
    case DayKind::Times: return 0;
    case DayKind::Tensor: return 1;
    case DayKind::Ovee: return 0;
  }
  throw ShapeError("monoid_unit: bad kind");
}

int vee_set_size(int a, int b) { return a + a * b + b; }
int vee_set_inl(int /*a*/, int /*b*/, int x) { return x; }
int vee_set_mid(int a, int b, int x, int y) { return a + x * b + y; }
int vee_set_inr(int a, int b, int y) { return a + a * b + y; }

namespace {
// decode element of A v B into one of three cases
struct VeeElem {
  int block;  // 0: A, 1: AxB, 2: B
  int x = 0, y = 0;
};
VeeElem vee_set_decode(int a, int b, int v) {
  if (v < a) return {0, v, 0};
  v -= a;
  if (v < a * b) return {1, v / b, v % b};
  return {2, 0, v - a * b};
}
}  // namespace

int monoid_op(DayKind k, int a, int b) {
  switch (k) {
    case DayKind::Times: return a + b;
    case DayKind::Tensor: return a * b;
    case DayKind::Ovee: return vee_set_size(a, b);
  }
  throw ShapeError("monoid_op: bad kind");
}

FinFn monoid_cov_fn(DayKind k, const FinFn& f, const FinFn& g) {
  int a = f.dom.size, b = g.dom.size;
  int a2 = f.cod.size, b2 = g.cod.size;
  FinFn out{FinSet{monoid_op(k, a, b)}, FinSet{monoid_op(k, a2, b2)}, {}};
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  switch (k) {
    case DayKind::Times:
      for (int x = 0; x < a; ++x) out.table.push_back(f(x));
      for (int y = 0; y < b; ++y) out.table.push_back(a2 + g(y));
      break;
    case DayKind::Tensor:
      for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y) out.table.push_back(f(x) * b2 + g(y));
      break;
    case DayKind::Ovee:
      for (int v = 0; v < out.dom.size; ++v) {
        VeeElem e = vee_set_decode(a, b, v);
        if (e.block == 0) out.table.push_back(vee_set_inl(a2, b2, f(e.x)));
        else if (e.block == 1) out.table.push_back(vee_set_mid(a2, b2, f(e.x), g(e.y)));
        else out.table.push_back(vee_set_inr(a2, b2, g(e.y)));
      }
      break;
  }
  return out;
}

FinFn monoid_assoc_fn(DayKind k, FinSet a, FinSet b, FinSet c) {
  int ab = monoid_op(k, a.size, b.size);
  int bc = monoid_op(k, b.size, c.size);
  FinFn out{FinSet{monoid_op(k, ab, c.size)}, FinSet{monoid_op(k, a.size, bc)}, {}};
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  switch (k) {
    case DayKind::Times:
      // [[A|B]|C] -> [A|[B|C]]: same flat layout
      return fn_identity(out.dom);
    case DayKind::Tensor:
      // (x*b+y)*c+z = x*(b*c)+(y*c+z): same encoding
      return fn_identity(out.dom);
    case DayKind::Ovee: {
      const int A = a.size, B = b.size, C = c.size;
      for (int v = 0; v < out.dom.size; ++v) {
        VeeElem o = vee_set_decode(ab, C, v);
        int img = 0;
        if (o.block == 0) {
          VeeElem i = vee_set_decode(A, B, o.x);
          if (i.block == 0) img = vee_set_inl(A, bc, i.x);
          else if (i.block == 1) img = vee_set_mid(A, bc, i.x, vee_set_inl(B, C, i.y));
          else img = vee_set_inr(A, bc, vee_set_inl(B, C, i.y));
        } else if (o.block == 1) {
          VeeElem i = vee_set_decode(A, B, o.x);
          if (i.block == 0) img = vee_set_mid(A, bc, i.x, vee_set_inr(B, C, o.y));
          else if (i.block == 1) img = vee_set_mid(A, bc, i.x, vee_set_mid(B, C, i.y, o.y));
          else img = vee_set_inr(A, bc, vee_set_mid(B, C, i.y, o.y));
        } else {
          img = vee_set_inr(A, bc, vee_set_inr(B, C, o.y));
        }
        out.table.push_back(img);
      }
      return out;
    }
  }
  throw ShapeError("monoid_assoc_fn: bad kind");
}

FinFn monoid_sym_fn(DayKind k, FinSet a, FinSet b) {
  FinFn out{FinSet{monoid_op(k, a.size, b.size)}, FinSet{monoid_op(k, b.size, a.size)}, {}};
  out.table.reserve(static_cast<std::size_t>(out.dom.size));
  switch (k) {
    case DayKind::Times:
      for (int x = 0; x < a.size; ++x) out.table.push_back(b.size + x);
      for (int y = 0; y < b.size; ++y) out.table.push_back(y);
      break;
    case DayKind::Tensor:
      for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y) out.table.push_back(y * a.size + x);
      break;
    case DayKind::Ovee:
      for (int v = 0; v < out.dom.size; ++v) {
        VeeElem e = vee_set_decode(a.size, b.size, v);
        if (e.block == 0) out.table.push_back(vee_set_inr(b.size, a.size, e.x));
        else if (e.block == 1) out.table.push_back(vee_set_mid(b.size, a.size, e.y, e.x));
        else out.table.push_back(vee_set_inl(b.size, a.size, e.y));
      }
      break;
  }
  return out;
}

// ---- Day products ----

Poly day(const Poly& p, const Poly& q, DayKind k) {
  guard_size(checked_mul(static_cast<std::uint64_t>(p.num_positions()),
                         static_cast<std::uint64_t>(q.num_positions())),
             "day product");
  Poly r;
  r.dirs.reserve(static_cast<std::size_t>(p.num_positions()) * static_cast<std::size_t>(q.num_positions()));
  for (int i = 0; i < p.num_positions(); ++i)
    for (int j = 0; j < q.num_positions(); ++j)
      r.dirs.push_back(monoid_op(k, p.dirs[static_cast<std::size_t>(i)], q.dirs[static_cast<std::size_t>(j)]));
  return r;
}

PolyMap day_map(const PolyMap& f, const PolyMap& g, DayKind k) {
  Poly src = day(f.src, g.src, k), tgt = day(f.tgt, g.tgt, k);
  PolyMap m{src, tgt, {}, {}};
  int nq = g.src.num_positions(), nq2 = g.tgt.num_positions();
  for (int i = 0; i < f.src.num_positions(); ++i)
    for (int j = 0; j < nq; ++j) {
      m.fwd.push_back(f.fwd[static_cast<std::size_t>(i)] * nq2 + g.fwd[static_cast<std::size_t>(j)]);
      // target dir op(p'[fI], q'[gJ]) -> source dir op(p[I], q[J])
      m.bwd.push_back(monoid_cov_fn(k, bwd_fn(f, i), bwd_fn(g, j)).table);
    }
  return m;
}

Poly times(const Poly& p, const Poly& q) { return day(p, q, DayKind::Times); }
Poly tensor(const Poly& p, const Poly& q) { return day(p, q, DayKind::Tensor); }
Poly ovee(const Poly& p, const Poly& q) { return day(p, q, DayKind::Ovee); }

PolyMap times_map(const PolyMap& f, const PolyMap& g) { return day_map(f, g, DayKind::Times); }
PolyMap tensor_map(const PolyMap& f, const PolyMap& g) { return day_map(f, g, DayKind::Tensor); }

PolyMap times_proj1(const Poly& p, const Poly& q) {
  PolyMap m{times(p, q), p, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i)
    for (int j = 0; j < q.num_positions(); ++j) {
      m.fwd.push_back(i);
      // p[i] -> p[i]+q[j]: left block
      std::vector<int> t(static_cast<std::size_t>(p.dirs[static_cast<std::size_t>(i)]));
      std::iota(t.begin(), t.end(), 0);
      m.bwd.push_back(std::move(t));
    }
  return m;
}

PolyMap times_proj2(const Poly& p, const Poly& q) {
  PolyMap m{times(p, q), q, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i)
    for (int j = 0; j < q.num_positions(); ++j) {
      m.fwd.push_back(j);
      std::vector<int> t(static_cast<std::size_t>(q.dirs[static_cast<std::size_t>(j)]));
      std::iota(t.begin(), t.end(), 0);
      m.bwd.push_back(std::move(t));
    }
  return m;
}

PolyMap pairing(const PolyMap& f, const PolyMap& g) {
  if (f.src != g.src) throw ShapeError("pairing: source mismatch");
  Poly tgt = times(f.tgt, g.tgt);
  PolyMap m{f.src, tgt, {}, {}};
  int nq = g.tgt.num_positions();
  for (int x = 0; x < f.src.num_positions(); ++x) {
    int i = f.fwd[static_cast<std::size_t>(x)], j = g.fwd[static_cast<std::size_t>(x)];
    m.fwd.push_back(i * nq + j);
    std::vector<int> t = f.bwd[static_cast<std::size_t>(x)];
    const auto& t2 = g.bwd[static_cast<std::size_t>(x)];
    t.insert(t.end(), t2.begin(), t2.end());
    m.bwd.push_back(std::move(t));
  }
  return m;
}

Poly scalar_mul(int a, const Poly& p) {
  if (a < 0) throw ShapeError("scalar_mul: negative scalar");
  Poly r;
  r.dirs.reserve(static_cast<std::size_t>(a) * p.dirs.size());
  for (int c = 0; c < a; ++c) r.dirs.insert(r.dirs.end(), p.dirs.begin(), p.dirs.end());
  return r;
}

// ---- substitution ----

namespace {
SumLayout subst_pos_layout(const Poly& p, const Poly& q) {
  std::vector<int> sizes;
  sizes.reserve(p.dirs.size());
  for (int d : p.dirs)
    sizes.push_back(static_cast<int>(guard_size(fn_count(FinSet{d}, q.positions()), "substitute positions")));
  return SumLayout(sizes);
}
}  // namespace

Poly substitute(const Poly& p, const Poly& q) {
  SumLayout layout = subst_pos_layout(p, q);
  guard_size(layout.total, "substitute positions");
  Poly r;
  r.dirs.reserve(static_cast<std::size_t>(layout.total));
  for (int i = 0; i < p.num_positions(); ++i) {
    FnRange assigns(p.dir(i), q.positions());
    for (const FinFn& b : assigns) {
      std::uint64_t d = 0;
      for (int v : b.table) d = checked_add(d, static_cast<std::uint64_t>(q.dirs[static_cast<std::size_t>(v)]));
      r.dirs.push_back(static_cast<int>(guard_size(d, "substitute directions")));
    }
  }
  return r;
}

std::uint64_t subst_pos_encode(const Poly& p, const Poly& q, int outer, const FinFn& assign) {
  if (assign.dom != p.dir(outer) || assign.cod != q.positions())
    throw ShapeError("subst_pos_encode: assignment shape mismatch");
  return subst_pos_layout(p, q).encode(outer, fn_encode(assign));
}

SubstPos subst_pos_decode(const Poly& p, const Poly& q, std::uint64_t idx) {
  auto [outer, inner] = subst_pos_layout(p, q).decode(idx);
  return {outer, fn_decode(p.dir(outer), q.positions(), inner)};
}

SumLayout subst_dir_layout(const Poly& p, const Poly& q, int outer, const FinFn& assign) {
  if (assign.dom != p.dir(outer) || assign.cod != q.positions())
    throw ShapeError("subst_dir_layout: assignment shape mismatch");
  std::vector<int> sizes;
  sizes.reserve(assign.table.size());
  for (int v : assign.table) sizes.push_back(q.dirs[static_cast<std::size_t>(v)]);
  return SumLayout(sizes);
}

PolyMap subst_map(const PolyMap& f, const PolyMap& g) {
  Poly src = substitute(f.src, g.src), tgt = substitute(f.tgt, g.tgt);
  PolyMap m{src, tgt, {}, {}};
  m.fwd.reserve(src.dirs.size());
  m.bwd.reserve(src.dirs.size());
  for (std::uint64_t w = 0; w < static_cast<std::uint64_t>(src.num_positions()); ++w) {
    auto [i, assign] = subst_pos_decode(f.src, g.src, w);
    int i2 = f.fwd[static_cast<std::size_t>(i)];
    FinFn fsharp = bwd_fn(f, i);  // p'[i2] -> p[i]
    // assignment on the target side: p'[i2] -> q' positions
    FinFn assign2{f.tgt.dir(i2), g.tgt.positions(), {}};
    assign2.table.reserve(static_cast<std::size_t>(assign2.dom.size));
    for (int i2d = 0; i2d < assign2.dom.size; ++i2d)
      assign2.table.push_back(g.fwd[static_cast<std::size_t>(assign(fsharp(i2d)))]);
    m.fwd.push_back(static_cast<int>(subst_pos_encode(f.tgt, g.tgt, i2, assign2)));
    // backward: (i', d') -> (fsharp(i'), gsharp(d'))
    SumLayout src_dirs = subst_dir_layout(f.src, g.src, i, assign);
    SumLayout tgt_dirs = subst_dir_layout(f.tgt, g.tgt, i2, assign2);
    std::vector<int> t;
    t.reserve(static_cast<std::size_t>(tgt_dirs.total));
    for (std::uint64_t e = 0; e < tgt_dirs.total; ++e) {
      auto [i2d, d2] = tgt_dirs.decode(e);
      int i1 = fsharp(i2d);
      FinFn gsharp = bwd_fn(g, assign(i1));  // q'[g1(B i1)] -> q[B i1]
      t.push_back(static_cast<int>(src_dirs.encode(i1, static_cast<std::uint64_t>(gsharp(static_cast<int>(d2))))));
    }
    m.bwd.push_back(std::move(t));
  }
  return m;
}

// ---- Garner-pattern products ----

Poly garner(const Poly& p, const Poly& q, DayKind k) {
  return coproduct(coproduct(p, day(p, q, k)), q);
}

Poly vee(const Poly& p, const Poly& q) { return garner(p, q, DayKind::Tensor); }
Poly vee_times(const Poly& p, const Poly& q) { return garner(p, q, DayKind::Times); }
Poly vee_ovee(const Poly& p, const Poly& q) { return garner(p, q, DayKind::Ovee); }

PolyMap garner_map(const PolyMap& f, const PolyMap& g, DayKind k) {
  return coproduct_map(coproduct_map(f, day_map(f, g, k)), g);
}

PolyMap vee_map(const PolyMap& f, const PolyMap& g) { return garner_map(f, g, DayKind::Tensor); }

PolyMap garner_inl(const Poly& p, const Poly& q, DayKind k) {
  Poly mid = day(p, q, k);
  return compose(coproduct_inl(coproduct(p, mid), q), coproduct_inl(p, mid));
}

PolyMap garner_mid(const Poly& p, const Poly& q, DayKind k) {
  Poly mid = day(p, q, k);
  return compose(coproduct_inl(coproduct(p, mid), q), coproduct_inr(p, mid));
}

PolyMap garner_inr(const Poly& p, const Poly& q, DayKind k) {
  return coproduct_inr(coproduct(p, day(p, q, k)), q);
}

// ---- cross products ----

Poly dagger(const Poly& p, const Poly& q) {
  Poly r;
  std::uint64_t np = static_cast<std::uint64_t>(p.num_positions());
  for (int i = 0; i < p.num_positions(); ++i)
    for (int j = 0; j < q.num_positions(); ++j) {
      std::uint64_t d = checked_mul(static_cast<std::uint64_t>(p.dirs[static_cast<std::size_t>(i)]),
                                    checked_pow(static_cast<std::uint64_t>(q.dirs[static_cast<std::size_t>(j)]), np));
      r.dirs.push_back(static_cast<int>(guard_size(d, "dagger directions")));
    }
  return r;
}

Poly ddagger(const Poly& p, const Poly& q) {
  Poly r;
  std::uint64_t np = static_cast<std::uint64_t>(p.num_positions());
  std::uint64_t nq = static_cast<std::uint64_t>(q.num_positions());
  for (int i = 0; i < p.num_positions(); ++i)
    for (int j = 0; j < q.num_positions(); ++j) {
      std::uint64_t d = checked_mul(checked_pow(static_cast<std::uint64_t>(p.dirs[static_cast<std::size_t>(i)]), nq),
                                    checked_pow(static_cast<std::uint64_t>(q.dirs[static_cast<std::size_t>(j)]), np));
      r.dirs.push_back(static_cast<int>(guard_size(d, "ddagger directions")));
    }
  return r;
}

PolyMap dagger_map(const PolyMap& f, const PolyMap& g) {
  Poly src = dagger(f.src, g.src), tgt = dagger(f.tgt, g.tgt);
  PolyMap m{src, tgt, {}, {}};
  int nq = g.src.num_positions(), nq2 = g.tgt.num_positions();
  FinSet srcpos = f.src.positions(), tgtpos = f.tgt.positions();
  for (int i = 0; i < f.src.num_positions(); ++i)
    for (int j = 0; j < nq; ++j) {
      m.fwd.push_back(f.fwd[static_cast<std::size_t>(i)] * nq2 + g.fwd[static_cast<std::size_t>(j)]);
      FinFn fsharp = bwd_fn(f, i);  // p'[fI] -> p[I]
      FinFn gsharp = bwd_fn(g, j);  // q'[gJ] -> q[J]
      FinSet a2 = f.tgt.dir(f.fwd[static_cast<std::size_t>(i)]);
      FinSet b2 = g.tgt.dir(g.fwd[static_cast<std::size_t>(j)]);
      FinSet exp2{static_cast<int>(fn_count(tgtpos, b2))};
      FinSet a = f.src.dir(i), b = g.src.dir(j);
      FinSet exp{static_cast<int>(fn_count(srcpos, b))};
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(a2.size) * static_cast<std::size_t>(exp2.size));
      for (int a2v = 0; a2v < a2.size; ++a2v)
        for (int gv = 0; gv < exp2.size; ++gv) {
          FinFn g2 = fn_decode(tgtpos, b2, static_cast<std::uint64_t>(gv));  // p'(1) -> q'[gJ]
          FinFn g1{srcpos, b, {}};
          g1.table.reserve(static_cast<std::size_t>(srcpos.size));
          for (int x = 0; x < srcpos.size; ++x)
            g1.table.push_back(gsharp(g2(f.fwd[static_cast<std::size_t>(x)])));
          t.push_back(pair_encode(a, exp, fsharp(a2v), static_cast<int>(fn_encode(g1))));
        }
      m.bwd.push_back(std::move(t));
    }
  return m;
}

PolyMap ddagger_map(const PolyMap& f, const PolyMap& g) {
  Poly src = ddagger(f.src, g.src), tgt = ddagger(f.tgt, g.tgt);
  PolyMap m{src, tgt, {}, {}};
  int nq = g.src.num_positions(), nq2 = g.tgt.num_positions();
  FinSet srcpos = f.src.positions(), tgtpos = f.tgt.positions();
  FinSet srcqpos = g.src.positions(), tgtqpos = g.tgt.positions();
  for (int i = 0; i < f.src.num_positions(); ++i)
    for (int j = 0; j < nq; ++j) {
      m.fwd.push_back(f.fwd[static_cast<std::size_t>(i)] * nq2 + g.fwd[static_cast<std::size_t>(j)]);
      FinFn fsharp = bwd_fn(f, i), gsharp = bwd_fn(g, j);
      FinSet a = f.src.dir(i), b = g.src.dir(j);
      FinSet a2 = f.tgt.dir(f.fwd[static_cast<std::size_t>(i)]);
      FinSet b2 = g.tgt.dir(g.fwd[static_cast<std::size_t>(j)]);
      FinSet expa{static_cast<int>(fn_count(srcqpos, a))};
      FinSet expb{static_cast<int>(fn_count(srcpos, b))};
      FinSet expa2{static_cast<int>(fn_count(tgtqpos, a2))};
      FinSet expb2{static_cast<int>(fn_count(tgtpos, b2))};
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(expa2.size) * static_cast<std::size_t>(expb2.size));
      for (int fv = 0; fv < expa2.size; ++fv)
        for (int gv = 0; gv < expb2.size; ++gv) {
          FinFn f2 = fn_decode(tgtqpos, a2, static_cast<std::uint64_t>(fv));  // q'(1) -> p'[fI]
          FinFn g2 = fn_decode(tgtpos, b2, static_cast<std::uint64_t>(gv));   // p'(1) -> q'[gJ]
          FinFn f1{srcqpos, a, {}};
          for (int y = 0; y < srcqpos.size; ++y)
            f1.table.push_back(fsharp(f2(g.fwd[static_cast<std::size_t>(y)])));
          FinFn g1{srcpos, b, {}};
          for (int x = 0; x < srcpos.size; ++x)
            g1.table.push_back(gsharp(g2(f.fwd[static_cast<std::size_t>(x)])));
          t.push_back(pair_encode(expa, expb, static_cast<int>(fn_encode(f1)), static_cast<int>(fn_encode(g1))));
        }
      m.bwd.push_back(std::move(t));
    }
  return m;
}

// ---- generic monoidal interface ----

const char* product_name(ProductKind k) {
  switch (k) {
    case ProductKind::Plus: return "+";
    case ProductKind::Times: return "*";
    case ProductKind::Tensor: return "ox";
    case ProductKind::Ovee: return "ovee";
    case ProductKind::Subst: return "<|";
    case ProductKind::Vee: return "vv";
    case ProductKind::VeeTimes: return "garner-times";
    case ProductKind::VeeOvee: return "garner-ovee";
    case ProductKind::Dagger: return "dag";
    case ProductKind::DDagger: return "ddag";
  }
  return "?";
}

Poly apply_product(ProductKind k, const Poly& p, const Poly& q) {
  switch (k) {
    case ProductKind::Plus: return coproduct(p, q);
    case ProductKind::Times: return times(p, q);
    case ProductKind::Tensor: return tensor(p, q);
    case ProductKind::Ovee: return ovee(p, q);
    case ProductKind::Subst: return substitute(p, q);
    case ProductKind::Vee: return vee(p, q);
    case ProductKind::VeeTimes: return vee_times(p, q);
    case ProductKind::VeeOvee: return vee_ovee(p, q);
    case ProductKind::Dagger: return dagger(p, q);
    case ProductKind::DDagger: return ddagger(p, q);
  }
  throw ShapeError("apply_product: bad kind");
}

Poly product_unit(ProductKind k) {
  switch (k) {
    case ProductKind::Plus: return poly_zero();
    case ProductKind::Times: return poly_one();
    case ProductKind::Tensor: return poly_y();
    case ProductKind::Ovee: return poly_one();
    case ProductKind::Subst: return poly_y();
    case ProductKind::Vee:
    case ProductKind::VeeTimes:
    case ProductKind::VeeOvee: return poly_zero();
    case ProductKind::Dagger: return poly_y();
    case ProductKind::DDagger: return poly_y();
  }
  throw ShapeError("product_unit: bad kind");
}

bool product_symmetric(ProductKind k) {
  return k != ProductKind::Subst && k != ProductKind::Dagger;
}

PolyMap product_map(ProductKind k, const PolyMap& f, const PolyMap& g) {
  switch (k) {
    case ProductKind::Plus: return coproduct_map(f, g);
    case ProductKind::Times: return times_map(f, g);
    case ProductKind::Tensor: return tensor_map(f, g);
    case ProductKind::Ovee: return day_map(f, g, DayKind::Ovee);
    case ProductKind::Subst: return subst_map(f, g);
    case ProductKind::Vee: return garner_map(f, g, DayKind::Tensor);
    case ProductKind::VeeTimes: return garner_map(f, g, DayKind::Times);
    case ProductKind::VeeOvee: return garner_map(f, g, DayKind::Ovee);
    case ProductKind::Dagger: return dagger_map(f, g);
    case ProductKind::DDagger: return ddagger_map(f, g);
  }
  throw ShapeError("product_map: bad kind");
}

IsoWitness literal_witness(const Poly& a, const Poly& b, const char* what) {
  if (a != b) throw ShapeError(std::string("literal_witness: sides differ in ") + what);
  PolyMap fwd = identity_map(a);
  fwd.tgt = b;
  PolyMap bwd = identity_map(b);
  bwd.tgt = a;
  return {fwd, bwd};
}

namespace {

IsoWitness iso_from_fwd(PolyMap fwd) {
  IsoWitness w = invert(fwd);
  if (!verify_iso(w)) throw ShapeError("iso_from_fwd: verification failed");
  return w;
}

// associativity of a Day product: positions agree literally, directions via
// the set-level associator.
IsoWitness day_assoc(DayKind k, const Poly& p, const Poly& q, const Poly& r) {
  Poly lhs = day(day(p, q, k), r, k);
  Poly rhs = day(p, day(q, r, k), k);
  if (lhs.num_positions() != rhs.num_positions()) throw ShapeError("day_assoc: position mismatch");
  PolyMap fwd{lhs, rhs, {}, {}};
  int nq = q.num_positions(), nr = r.num_positions();
  for (int i = 0; i < p.num_positions(); ++i)
    for (int j = 0; j < nq; ++j)
      for (int l = 0; l < nr; ++l) {
        int pos = (i * nq + j) * nr + l;
        fwd.fwd.push_back(pos);
        FinFn assoc = monoid_assoc_fn(k, p.dir(i), q.dir(j), r.dir(l));
        // bwd: rhs dir -> lhs dir = inverse of the associator
        fwd.bwd.push_back(fn_inverse(assoc).table);
      }
  (void)lhs;
  return iso_from_fwd(std::move(fwd));
}

IsoWitness day_sym(DayKind k, const Poly& p, const Poly& q) {
  Poly lhs = day(p, q, k), rhs = day(q, p, k);
  PolyMap fwd{lhs, rhs, {}, {}};
  int nq = q.num_positions(), np = p.num_positions();
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) {
      fwd.fwd.push_back(j * np + i);
      // rhs dir at (j,i) = op(q[j],p[i]) -> lhs dir op(p[i],q[j])
      fwd.bwd.push_back(monoid_sym_fn(k, q.dir(j), p.dir(i)).table);
    }
  return iso_from_fwd(std::move(fwd));
}

IsoWitness plus_sym(const Poly& p, const Poly& q) {
  Poly lhs = coproduct(p, q), rhs = coproduct(q, p);
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int i = 0; i < p.num_positions(); ++i) {
    fwd.fwd.push_back(q.num_positions() + i);
    fwd.bwd.push_back(fn_identity(p.dir(i)).table);
  }
  for (int j = 0; j < q.num_positions(); ++j) {
    fwd.fwd.push_back(j);
    fwd.bwd.push_back(fn_identity(q.dir(j)).table);
  }
  return iso_from_fwd(std::move(fwd));
}

IsoWitness subst_assoc(const Poly& p, const Poly& q, const Poly& r) {
  Poly lhs = substitute(substitute(p, q), r);
  Poly rhs = substitute(p, substitute(q, r));
  Poly pq = substitute(p, q);
  PolyMap fwd{lhs, rhs, {}, {}};
  fwd.fwd.reserve(lhs.dirs.size());
  for (std::uint64_t w = 0; w < static_cast<std::uint64_t>(lhs.num_positions()); ++w) {
    auto [pqpos, assignB] = subst_pos_decode(pq, r, w);  // B: (pq-dir) -> r(1)
    auto [i, assignA] = subst_pos_decode(p, q, static_cast<std::uint64_t>(pqpos));
    SumLayout inner = subst_dir_layout(p, q, i, assignA);
    // C: p[i] -> (q<|r)(1): C(x) = (A(x), B restricted to block x)
    FinFn c{p.dir(i), substitute(q, r).positions(), {}};
    c.table.reserve(static_cast<std::size_t>(c.dom.size));
    for (int x = 0; x < p.dir(i).size; ++x) {
      int qi = assignA(x);
      FinFn bx{q.dir(qi), r.positions(), {}};
      bx.table.reserve(static_cast<std::size_t>(bx.dom.size));
      for (int d = 0; d < q.dir(qi).size; ++d)
        bx.table.push_back(assignB(static_cast<int>(inner.encode(x, static_cast<std::uint64_t>(d)))));
      c.table.push_back(static_cast<int>(subst_pos_encode(q, r, qi, bx)));
    }
    fwd.fwd.push_back(static_cast<int>(subst_pos_encode(p, substitute(q, r), i, c)));
    // directions coincide literally (same flattening order)
    if (rhs.dirs[static_cast<std::size_t>(fwd.fwd.back())] != lhs.dirs[static_cast<std::size_t>(w)])
      throw ShapeError("subst_assoc: direction sizes disagree");
    fwd.bwd.push_back(fn_identity(lhs.dir(static_cast<int>(w))).table);
  }
  return iso_from_fwd(std::move(fwd));
}

// garner block arithmetic: blocks [p | day(p,q,k) | q]
struct GarnerLayout {
  int np, nmid, nq;
  int block(int pos) const {
    if (pos < np) return 0;
    if (pos < np + nmid) return 1;
    return 2;
  }
  int inner(int pos) const {
    int b = block(pos);
    return b == 0 ? pos : b == 1 ? pos - np : pos - np - nmid;
  }
  int encode(int b, int i) const { return b == 0 ? i : b == 1 ? np + i : np + nmid + i; }
};

GarnerLayout garner_layout(const Poly& p, const Poly& q) {
  return {p.num_positions(), p.num_positions() * q.num_positions(), q.num_positions()};
}

IsoWitness garner_assoc(DayKind k, const Poly& p, const Poly& q, const Poly& r) {
  Poly pq = garner(p, q, k);
  Poly qr = garner(q, r, k);
  Poly lhs = garner(pq, r, k);
  Poly rhs = garner(p, qr, k);
  GarnerLayout lay_pq = garner_layout(p, q);
  GarnerLayout lay_qr = garner_layout(q, r);
  GarnerLayout lay_l = garner_layout(pq, r);
  GarnerLayout lay_r = garner_layout(p, qr);
  int nr = r.num_positions(), nq = q.num_positions();
  int nqr = qr.num_positions();
  PolyMap fwd{lhs, rhs, {}, {}};
  fwd.fwd.reserve(lhs.dirs.size());
  for (int pos = 0; pos < lhs.num_positions(); ++pos) {
    int b = lay_l.block(pos), in = lay_l.inner(pos);
    int img = -1;
    FinFn dirmap{FinSet{0}, FinSet{0}, {}};  // rhs dir -> lhs dir, identity unless noted
    bool ident = true;
    if (b == 0) {
      // element of pq
      int bb = lay_pq.block(in), ii = lay_pq.inner(in);
      if (bb == 0) img = lay_r.encode(0, ii);                                   // p -> p
      else if (bb == 1) img = lay_r.encode(1, (ii / nq) * nqr + lay_qr.encode(0, ii % nq));  // p.q -> p.(q-block)
      else img = lay_r.encode(2, lay_qr.encode(0, ii));                          // q -> qr q-block
    } else if (b == 1) {
      // (x in pq, l in r)
      int x = in / nr, l = in % nr;
      int bb = lay_pq.block(x), ii = lay_pq.inner(x);
      if (bb == 0) img = lay_r.encode(1, ii * nqr + lay_qr.encode(2, l));        // (p,r) -> p.(r-block)
      else if (bb == 1) {
        int i = ii / nq, j = ii % nq;
        img = lay_r.encode(1, i * nqr + lay_qr.encode(1, j * nr + l));           // ((p,q),r) -> p.(q,r)
        FinFn assoc = monoid_assoc_fn(k, p.dir(i), q.dir(j), r.dir(l));
        dirmap = fn_inverse(assoc);
        ident = false;
      } else {
        img = lay_r.encode(2, lay_qr.encode(1, ii * nr + l));                    // (q,r) -> qr mid
      }
    } else {
      img = lay_r.encode(2, lay_qr.encode(2, in));                               // r -> r
    }
    fwd.fwd.push_back(img);
    if (ident) {
      if (rhs.dirs[static_cast<std::size_t>(img)] != lhs.dirs[static_cast<std::size_t>(pos)])
        throw ShapeError("garner_assoc: direction sizes disagree");
      fwd.bwd.push_back(fn_identity(lhs.dir(pos)).table);
    } else {
      fwd.bwd.push_back(dirmap.table);
    }
  }
  return iso_from_fwd(std::move(fwd));
}

IsoWitness garner_sym(DayKind k, const Poly& p, const Poly& q) {
  Poly lhs = garner(p, q, k), rhs = garner(q, p, k);
  GarnerLayout lay_l = garner_layout(p, q), lay_r = garner_layout(q, p);
  int np = p.num_positions(), nq = q.num_positions();
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int pos = 0; pos < lhs.num_positions(); ++pos) {
    int b = lay_l.block(pos), in = lay_l.inner(pos);
    if (b == 0) {
      fwd.fwd.push_back(lay_r.encode(2, in));
      fwd.bwd.push_back(fn_identity(p.dir(in)).table);
    } else if (b == 1) {
      int i = in / nq, j = in % nq;
      fwd.fwd.push_back(lay_r.encode(1, j * np + i));
      fwd.bwd.push_back(monoid_sym_fn(k, q.dir(j), p.dir(i)).table);
    } else {
      fwd.fwd.push_back(lay_r.encode(0, in));
      fwd.bwd.push_back(fn_identity(q.dir(in)).table);
    }
  }
  return iso_from_fwd(std::move(fwd));
}

IsoWitness dagger_assoc(const Poly& p, const Poly& q, const Poly& r) {
  Poly lhs = dagger(dagger(p, q), r);
  Poly rhs = dagger(p, dagger(q, r));
  int np = p.num_positions(), nq = q.num_positions(), nr = r.num_positions();
  FinSet ppos = p.positions(), qpos = q.positions();
  FinSet pqpos{np * nq}, qrpos{nq * nr};
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int l = 0; l < nr; ++l) {
        int pos = (i * nq + j) * nr + l;
        fwd.fwd.push_back(pos);
        FinSet a = p.dir(i), b = q.dir(j), c = r.dir(l);
        // lhs dir: (a x b^np) x c^(np*nq); rhs dir: a x (b x c^nq)^np
        FinSet bexp{static_cast<int>(fn_count(ppos, b))};
        FinSet abx{a.size * bexp.size};
        FinSet cexp_l{static_cast<int>(fn_count(pqpos, c))};
        FinSet qr_dir{b.size * static_cast<int>(fn_count(qpos, c))};
        FinSet cexp_q{static_cast<int>(fn_count(qpos, c))};
        FinSet mexp{static_cast<int>(fn_count(ppos, qr_dir))};
        std::vector<int> t;  // rhs dir -> lhs dir
        t.reserve(static_cast<std::size_t>(a.size) * static_cast<std::size_t>(mexp.size));
        for (int av = 0; av < a.size; ++av)
          for (int mv = 0; mv < mexp.size; ++mv) {
            FinFn mfn = fn_decode(ppos, qr_dir, static_cast<std::uint64_t>(mv));  // p(1) -> b x c^nq
            FinFn gfn{ppos, b, {}};
            FinFn hfn{pqpos, c, {}};
            hfn.table.resize(static_cast<std::size_t>(pqpos.size));
            for (int x = 0; x < np; ++x) {
              auto [bv, cv] = pair_decode(b, cexp_q, mfn(x));
              gfn.table.push_back(bv);
              FinFn cfn = fn_decode(qpos, c, static_cast<std::uint64_t>(cv));  // q(1) -> c
              for (int y = 0; y < nq; ++y)
                hfn.table[static_cast<std::size_t>(x * nq + y)] = cfn(y);
            }
            int abv = pair_encode(a, bexp, av, static_cast<int>(fn_encode(gfn)));
            t.push_back(pair_encode(abx, cexp_l, abv, static_cast<int>(fn_encode(hfn))));
          }
        fwd.bwd.push_back(std::move(t));
      }
  return iso_from_fwd(std::move(fwd));
}

IsoWitness ddagger_assoc(const Poly& p, const Poly& q, const Poly& r) {
  Poly lhs = ddagger(ddagger(p, q), r);
  Poly rhs = ddagger(p, ddagger(q, r));
  int np = p.num_positions(), nq = q.num_positions(), nr = r.num_positions();
  FinSet ppos = p.positions(), qpos = q.positions(), rpos = r.positions();
  FinSet pqpos{np * nq}, qrpos{nq * nr};
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int l = 0; l < nr; ++l) {
        fwd.fwd.push_back((i * nq + j) * nr + l);
        FinSet a = p.dir(i), b = q.dir(j), c = r.dir(l);
        // lhs dir: ((a^nq x b^np)^nr) x c^(np*nq)
        FinSet aexp{static_cast<int>(fn_count(qpos, a))};
        FinSet bexp{static_cast<int>(fn_count(ppos, b))};
        FinSet abdir{aexp.size * bexp.size};
        FinSet lout{static_cast<int>(fn_count(rpos, abdir))};
        FinSet lc{static_cast<int>(fn_count(pqpos, c))};
        // rhs dir: a^(nq*nr) x ((b^nr x c^nq)^np)
        FinSet ra{static_cast<int>(fn_count(qrpos, a))};
        FinSet bexp_r{static_cast<int>(fn_count(rpos, b))};
        FinSet cexp_q{static_cast<int>(fn_count(qpos, c))};
        FinSet qrdir{bexp_r.size * cexp_q.size};
        FinSet rm{static_cast<int>(fn_count(ppos, qrdir))};
        std::vector<int> t;
        t.reserve(static_cast<std::size_t>(ra.size) * static_cast<std::size_t>(rm.size));
        for (int uv = 0; uv < ra.size; ++uv)
          for (int mv = 0; mv < rm.size; ++mv) {
            FinFn ufn = fn_decode(qrpos, a, static_cast<std::uint64_t>(uv));   // q(1)xr(1) -> a
            FinFn mfn = fn_decode(ppos, qrdir, static_cast<std::uint64_t>(mv));  // p(1) -> b^nr x c^nq
            // build F: r(1) -> (a^nq x b^np), and h: p(1)xq(1) -> c
            FinFn F{rpos, abdir, {}};
            FinFn h{pqpos, c, {}};
            h.table.resize(static_cast<std::size_t>(pqpos.size));
            std::vector<FinFn> s(static_cast<std::size_t>(np)), tt(static_cast<std::size_t>(np));
            for (int x = 0; x < np; ++x) {
              auto [sv, tv] = pair_decode(bexp_r, cexp_q, mfn(x));
              s[static_cast<std::size_t>(x)] = fn_decode(rpos, b, static_cast<std::uint64_t>(sv));  // nr -> b
              tt[static_cast<std::size_t>(x)] = fn_decode(qpos, c, static_cast<std::uint64_t>(tv)); // nq -> c
              for (int y = 0; y < nq; ++y)
                h.table[static_cast<std::size_t>(x * nq + y)] = tt[static_cast<std::size_t>(x)](y);
            }
            for (int kk = 0; kk < nr; ++kk) {
              FinFn v{qpos, a, {}};
              for (int y = 0; y < nq; ++y) v.table.push_back(ufn(y * nr + kk));
              FinFn w{ppos, b, {}};
              for (int x = 0; x < np; ++x) w.table.push_back(s[static_cast<std::size_t>(x)](kk));
              F.table.push_back(pair_encode(aexp, bexp, static_cast<int>(fn_encode(v)), static_cast<int>(fn_encode(w))));
            }
            t.push_back(pair_encode(lout, lc, static_cast<int>(fn_encode(F)), static_cast<int>(fn_encode(h))));
          }
        fwd.bwd.push_back(std::move(t));
      }
  return iso_from_fwd(std::move(fwd));
}

IsoWitness ddagger_sym(const Poly& p, const Poly& q) {
  Poly lhs = ddagger(p, q), rhs = ddagger(q, p);
  int np = p.num_positions(), nq = q.num_positions();
  FinSet ppos = p.positions(), qpos = q.positions();
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j) {
      fwd.fwd.push_back(j * np + i);
      FinSet a = p.dir(i), b = q.dir(j);
      FinSet aexp{static_cast<int>(fn_count(qpos, a))};
      FinSet bexp{static_cast<int>(fn_count(ppos, b))};
      // rhs dir at (j,i): b^np x a^nq -> lhs dir: a^nq x b^np
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(bexp.size) * static_cast<std::size_t>(aexp.size));
      for (int bv = 0; bv < bexp.size; ++bv)
        for (int av = 0; av < aexp.size; ++av)
          t.push_back(pair_encode(aexp, bexp, av, bv));
      fwd.bwd.push_back(std::move(t));
    }
  return iso_from_fwd(std::move(fwd));
}

}  // namespace

IsoWitness product_assoc(ProductKind k, const Poly& p, const Poly& q, const Poly& r) {
  switch (k) {
    case ProductKind::Plus:
      return literal_witness(coproduct(coproduct(p, q), r), coproduct(p, coproduct(q, r)), "+ associativity");
    case ProductKind::Times:
    case ProductKind::Tensor:
      return literal_witness(day(day(p, q, k == ProductKind::Times ? DayKind::Times : DayKind::Tensor), r,
                                 k == ProductKind::Times ? DayKind::Times : DayKind::Tensor),
                             day(p, day(q, r, k == ProductKind::Times ? DayKind::Times : DayKind::Tensor),
                                 k == ProductKind::Times ? DayKind::Times : DayKind::Tensor),
                             "day associativity");
    case ProductKind::Ovee: return day_assoc(DayKind::Ovee, p, q, r);
    case ProductKind::Subst: return subst_assoc(p, q, r);
    case ProductKind::Vee: return garner_assoc(DayKind::Tensor, p, q, r);
    case ProductKind::VeeTimes: return garner_assoc(DayKind::Times, p, q, r);
    case ProductKind::VeeOvee: return garner_assoc(DayKind::Ovee, p, q, r);
    case ProductKind::Dagger: return dagger_assoc(p, q, r);
    case ProductKind::DDagger: return ddagger_assoc(p, q, r);
  }
  throw ShapeError("product_assoc: bad kind");
}

IsoWitness product_unit_left(ProductKind k, const Poly& p) {
  Poly u = product_unit(k);
  return literal_witness(apply_product(k, u, p), p, "left unit");
}

IsoWitness product_unit_right(ProductKind k, const Poly& p) {
  Poly u = product_unit(k);
  return literal_witness(apply_product(k, p, u), p, "right unit");
}

IsoWitness product_sym(ProductKind k, const Poly& p, const Poly& q) {
  switch (k) {
    case ProductKind::Plus: return plus_sym(p, q);
    case ProductKind::Times: return day_sym(DayKind::Times, p, q);
    case ProductKind::Tensor: return day_sym(DayKind::Tensor, p, q);
    case ProductKind::Ovee: return day_sym(DayKind::Ovee, p, q);
    case ProductKind::Vee: return garner_sym(DayKind::Tensor, p, q);
    case ProductKind::VeeTimes: return garner_sym(DayKind::Times, p, q);
    case ProductKind::VeeOvee: return garner_sym(DayKind::Ovee, p, q);
    case ProductKind::DDagger: return ddagger_sym(p, q);
    case ProductKind::Subst:
    case ProductKind::Dagger:
      throw ShapeError("product_sym: product is not symmetric");
  }
  throw ShapeError("product_sym: bad kind");
}

// ---- distributivity and duoidal maps ----

IsoWitness day_distributivity(DayKind k, const Poly& p, const Poly& q1, const Poly& q2) {
  Poly lhs = day(p, coproduct(q1, q2), k);
  Poly rhs = coproduct(day(p, q1, k), day(p, q2, k));
  int n1 = q1.num_positions(), n2 = q2.num_positions();
  int np = p.num_positions();
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int i = 0; i < np; ++i)
    for (int x = 0; x < n1 + n2; ++x) {
      int img = x < n1 ? i * n1 + x : np * n1 + i * n2 + (x - n1);
      fwd.fwd.push_back(img);
      if (rhs.dirs[static_cast<std::size_t>(img)] != lhs.dirs[static_cast<std::size_t>(i * (n1 + n2) + x)])
        throw ShapeError("day_distributivity: direction sizes disagree");
      fwd.bwd.push_back(fn_identity(lhs.dir(i * (n1 + n2) + x)).table);
    }
  return iso_from_fwd(std::move(fwd));
}

IsoWitness subst_plus_distrib(const Poly& p, const Poly& p2, const Poly& q) {
  return literal_witness(substitute(coproduct(p, p2), q),
                         coproduct(substitute(p, q), substitute(p2, q)),
                         "(p+p')<|q");
}

IsoWitness subst_times_distrib(const Poly& p, const Poly& p2, const Poly& q) {
  Poly lhs = substitute(times(p, p2), q);
  Poly rhs = times(substitute(p, q), substitute(p2, q));
  Poly pt = times(p, p2);
  Poly sq2 = substitute(p2, q);
  PolyMap fwd{lhs, rhs, {}, {}};
  fwd.fwd.reserve(lhs.dirs.size());
  for (std::uint64_t w = 0; w < static_cast<std::uint64_t>(lhs.num_positions()); ++w) {
    auto [ij, assign] = subst_pos_decode(pt, q, w);
    int i = ij / p2.num_positions(), j = ij % p2.num_positions();
    int d1 = p.dirs[static_cast<std::size_t>(i)];
    FinFn a1{p.dir(i), q.positions(), {assign.table.begin(), assign.table.begin() + d1}};
    FinFn a2{p2.dir(j), q.positions(), {assign.table.begin() + d1, assign.table.end()}};
    std::uint64_t w1 = subst_pos_encode(p, q, i, a1);
    std::uint64_t w2 = subst_pos_encode(p2, q, j, a2);
    int img = static_cast<int>(checked_add(checked_mul(w1, static_cast<std::uint64_t>(sq2.num_positions())), w2));
    fwd.fwd.push_back(img);
    if (rhs.dirs[static_cast<std::size_t>(img)] != lhs.dirs[static_cast<std::size_t>(w)])
      throw ShapeError("subst_times_distrib: direction sizes disagree");
    fwd.bwd.push_back(fn_identity(lhs.dir(static_cast<int>(w))).table);
  }
  return iso_from_fwd(std::move(fwd));
}

PolyMap duoidal_map(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2) {
  Poly sp = substitute(p1, p2), sq = substitute(q1, q2);
  Poly src = tensor(sp, sq);
  Poly tp = tensor(p1, q1), tq = tensor(p2, q2);
  Poly tgt = substitute(tp, tq);
  PolyMap m{src, tgt, {}, {}};
  int nsq = sq.num_positions();
  int nq2 = q2.num_positions();
  for (std::uint64_t wp = 0; wp < static_cast<std::uint64_t>(sp.num_positions()); ++wp) {
    auto [i1, a] = subst_pos_decode(p1, p2, wp);
    SumLayout alay = subst_dir_layout(p1, p2, i1, a);
    for (std::uint64_t wq = 0; wq < static_cast<std::uint64_t>(nsq); ++wq) {
      auto [j1, b] = subst_pos_decode(q1, q2, wq);
      SumLayout blay = subst_dir_layout(q1, q2, j1, b);
      // target position: ((i1,j1), C) with C(i,j) = (a(i), b(j))
      int ij = i1 * q1.num_positions() + j1;
      FinFn c{tp.dir(ij), tq.positions(), {}};
      int da = p1.dirs[static_cast<std::size_t>(i1)], db = q1.dirs[static_cast<std::size_t>(j1)];
      c.table.reserve(static_cast<std::size_t>(da) * static_cast<std::size_t>(db));
      for (int x = 0; x < da; ++x)
        for (int y = 0; y < db; ++y) c.table.push_back(a(x) * nq2 + b(y));
      m.fwd.push_back(static_cast<int>(subst_pos_encode(tp, tq, ij, c)));
      // bwd: tgt dir ((x,y),(d2,e2)) -> src dir ((x,d2),(y,e2))
      SumLayout clay = subst_dir_layout(tp, tq, ij, c);
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(clay.total));
      for (std::uint64_t e = 0; e < clay.total; ++e) {
        auto [xy, de] = clay.decode(e);
        int x = xy / db, y = xy % db;
        int dp2 = p2.dirs[static_cast<std::size_t>(a(x))];
        int dq2 = q2.dirs[static_cast<std::size_t>(b(y))];
        auto [d2, e2] = pair_decode(FinSet{dp2}, FinSet{dq2}, static_cast<int>(de));
        std::uint64_t sdir = alay.encode(x, static_cast<std::uint64_t>(d2));
        std::uint64_t sdir2 = blay.encode(y, static_cast<std::uint64_t>(e2));
        t.push_back(pair_encode(FinSet{static_cast<int>(alay.total)}, FinSet{static_cast<int>(blay.total)},
                                static_cast<int>(sdir), static_cast<int>(sdir2)));
      }
      m.bwd.push_back(std::move(t));
    }
  }
  validate(m);
  return m;
}

PolyMap indep_map(const Poly& p, const Poly& q) {
  Poly src = tensor(p, q), tgt = substitute(p, q);
  PolyMap m{src, tgt, {}, {}};
  int nq = q.num_positions();
  for (int i = 0; i < p.num_positions(); ++i)
    for (int j = 0; j < nq; ++j) {
      FinFn constj = fn_constant(p.dir(i), q.positions(), j);
      m.fwd.push_back(static_cast<int>(subst_pos_encode(p, q, i, constj)));
      // dir of p<|q at (i, const j): blocks of constant size q[j]; the
      // Sigma layout index (x, d) equals the pair index x*|q[j]|+d
      int total = p.dirs[static_cast<std::size_t>(i)] * q.dirs[static_cast<std::size_t>(j)];
      std::vector<int> t(static_cast<std::size_t>(total));
      std::iota(t.begin(), t.end(), 0);
      m.bwd.push_back(std::move(t));
    }
  validate(m);
  return m;
}

PolyMap one_to_y_sub_one() {
  Poly one = poly_one();
  Poly tgt = substitute(poly_y(), one);
  PolyMap m{one, tgt, {0}, {{}}};
  validate(m);
  return m;
}

PolyMap duoidal_times_map(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2) {
  Poly sp = substitute(p1, p2), sq = substitute(q1, q2);
  Poly src = times(sp, sq);
  Poly tp = tensor(p1, q1), tq = times(p2, q2);
  Poly tgt = substitute(tp, tq);
  PolyMap m{src, tgt, {}, {}};
  int nq2 = q2.num_positions();
  for (std::uint64_t wp = 0; wp < static_cast<std::uint64_t>(sp.num_positions()); ++wp) {
    auto [i1, a] = subst_pos_decode(p1, p2, wp);
    SumLayout alay = subst_dir_layout(p1, p2, i1, a);
    for (std::uint64_t wq = 0; wq < static_cast<std::uint64_t>(sq.num_positions()); ++wq) {
      auto [j1, b] = subst_pos_decode(q1, q2, wq);
      SumLayout blay = subst_dir_layout(q1, q2, j1, b);
      int ij = i1 * q1.num_positions() + j1;
      FinFn c{tp.dir(ij), tq.positions(), {}};
      int da = p1.dirs[static_cast<std::size_t>(i1)], db = q1.dirs[static_cast<std::size_t>(j1)];
      for (int x = 0; x < da; ++x)
        for (int y = 0; y < db; ++y) c.table.push_back(a(x) * nq2 + b(y));
      m.fwd.push_back(static_cast<int>(subst_pos_encode(tp, tq, ij, c)));
      SumLayout clay = subst_dir_layout(tp, tq, ij, c);
      std::vector<int> t;
      t.reserve(static_cast<std::size_t>(clay.total));
      for (std::uint64_t e = 0; e < clay.total; ++e) {
        auto [xy, de] = clay.decode(e);
        int x = xy / db, y = xy % db;
        int dp2 = p2.dirs[static_cast<std::size_t>(a(x))];
        // tq dir at (a(x), b(y)) = p2[a(x)] + q2[b(y)]
        if (static_cast<int>(de) < dp2) {
          t.push_back(static_cast<int>(alay.encode(x, de)));
        } else {
          std::uint64_t e2 = de - static_cast<std::uint64_t>(dp2);
          t.push_back(static_cast<int>(checked_add(alay.total, blay.encode(y, e2))));
        }
      }
      m.bwd.push_back(std::move(t));
    }
  }
  validate(m);
  return m;
}

IsoWitness vee_strong_monoidal(const Poly& p, const Poly& q) {
  Poly y = poly_y();
  Poly lhs = tensor(coproduct(p, y), coproduct(q, y));
  Poly rhs = coproduct(vee(p, q), y);
  int np = p.num_positions(), nq = q.num_positions();
  GarnerLayout lay = garner_layout(p, q);
  PolyMap fwd{lhs, rhs, {}, {}};
  for (int x = 0; x < np + 1; ++x)
    for (int yy = 0; yy < nq + 1; ++yy) {
      int img;
      if (x < np && yy < nq) img = lay.encode(1, x * nq + yy);
      else if (x < np) img = lay.encode(0, x);
      else if (yy < nq) img = lay.encode(2, yy);
      else img = lay.np + lay.nmid + lay.nq;  // the appended y position
      fwd.fwd.push_back(img);
      if (rhs.dirs[static_cast<std::size_t>(img)] != lhs.dirs[static_cast<std::size_t>(x * (nq + 1) + yy)])
        throw ShapeError("vee_strong_monoidal: direction sizes disagree");
      fwd.bwd.push_back(fn_identity(lhs.dir(x * (nq + 1) + yy)).table);
    }
  return iso_from_fwd(std::move(fwd));
}

PolyMap plus_to_vee(const Poly& p, const Poly& q) {
  return copair(garner_inl(p, q, DayKind::Tensor), garner_inr(p, q, DayKind::Tensor));
}

PolyMap vee_sub_duoidal(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2) {
  Poly sp = substitute(p1, p2), sq = substitute(q1, q2);
  Poly v1 = vee(p1, q1), v2 = vee(p2, q2);
  // block 1: p1<|p2 -> v1<|v2 via componentwise inclusions
  PolyMap b1 = subst_map(garner_inl(p1, q1, DayKind::Tensor), garner_inl(p2, q2, DayKind::Tensor));
  // block 2: (p1<|p2)ox(q1<|q2) -> (p1 ox q1)<|(p2 ox q2) -> v1<|v2
  PolyMap duo = duoidal_map(p1, p2, q1, q2);
  PolyMap mid = subst_map(garner_mid(p1, q1, DayKind::Tensor), garner_mid(p2, q2, DayKind::Tensor));
  PolyMap b2 = compose(mid, duo);
  // block 3
  PolyMap b3 = subst_map(garner_inr(p1, q1, DayKind::Tensor), garner_inr(p2, q2, DayKind::Tensor));
  return copair(copair(b1, b2), b3);
}

PolyMap tensor_interchange(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  Poly src = tensor(tensor(a, b), tensor(c, d));
  Poly tgt = tensor(tensor(a, c), tensor(b, d));
  int na = a.num_positions(), nb = b.num_positions(), nc = c.num_positions(), nd = d.num_positions();
  PolyMap swap{src, tgt, {}, {}};
  for (int i1 = 0; i1 < na; ++i1)
    for (int i2 = 0; i2 < nb; ++i2)
      for (int j1 = 0; j1 < nc; ++j1)
        for (int j2 = 0; j2 < nd; ++j2) {
          swap.fwd.push_back(((i1 * nc + j1) * nb + i2) * nd + j2);
          FinSet da{a.dirs[static_cast<std::size_t>(i1)]}, db{b.dirs[static_cast<std::size_t>(i2)]};
          FinSet dc{c.dirs[static_cast<std::size_t>(j1)]}, dd{d.dirs[static_cast<std::size_t>(j2)]};
          // tgt dir ((a,c),(b,d)) -> src dir ((a,b),(c,d))
          std::vector<int> t;
          t.reserve(static_cast<std::size_t>(da.size * dc.size * db.size * dd.size));
          FinSet ac{da.size * dc.size}, bd{db.size * dd.size};
          FinSet ab{da.size * db.size}, cd{dc.size * dd.size};
          for (int e = 0; e < ac.size * bd.size; ++e) {
            auto [acv, bdv] = pair_decode(ac, bd, e);
            auto [av, cv] = pair_decode(da, dc, acv);
            auto [bv, dv] = pair_decode(db, dd, bdv);
            t.push_back(pair_encode(ab, cd, pair_encode(da, db, av, bv), pair_encode(dc, dd, cv, dv)));
          }
          swap.bwd.push_back(std::move(t));
        }
  validate(swap);
  return swap;
}

PolyMap vee_tensor_duoidal(const Poly& p1, const Poly& p2, const Poly& q1, const Poly& q2) {
  Poly t1 = tensor(p1, p2), t2 = tensor(q1, q2);
  Poly v1 = vee(p1, q1), v2 = vee(p2, q2);
  PolyMap b1 = tensor_map(garner_inl(p1, q1, DayKind::Tensor), garner_inl(p2, q2, DayKind::Tensor));
  PolyMap b3 = tensor_map(garner_inr(p1, q1, DayKind::Tensor), garner_inr(p2, q2, DayKind::Tensor));
  PolyMap swap = tensor_interchange(p1, p2, q1, q2);
  PolyMap b2 = compose(tensor_map(garner_mid(p1, q1, DayKind::Tensor), garner_mid(p2, q2, DayKind::Tensor)), swap);
  return copair(copair(b1, b2), b3);
}

}  // namespace poly
