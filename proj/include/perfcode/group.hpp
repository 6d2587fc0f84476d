#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "perfcode/errors.hpp"

namespace perfcode {

// Elements of a materialized group are dense integer handles; id 0 is
// always the identity.
using ElementId = std::uint32_t;

namespace detail {

inline std::size_t mask_words(std::uint32_t bits) { return (bits + 63u) / 64u; }

inline void mask_set(std::vector<std::uint64_t>& m, std::uint32_t i) {
  m[i >> 6] |= std::uint64_t(1) << (i & 63u);
}

inline bool mask_test(const std::vector<std::uint64_t>& m, std::uint32_t i) {
  return (m[i >> 6] >> (i & 63u)) & 1u;
}

// True when a ⊆ b, as bit sets of equal width.
inline bool mask_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 0x243f6a8885a308d3ull ^ v.size();
    for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace detail

// A finite group materialized as a dense multiplication table.  Immutable
// after construction; every operation in the library reads it without
// locking.  Cells are 16-bit because every cap keeps orders well below
// 65536.
struct GroupTable {
  std::uint32_t order = 1;
  std::vector<std::uint16_t> mul_table;  // row-major, order × order
  std::vector<std::uint16_t> inv_table;
  std::vector<std::uint32_t> generators;  // construction generators (ids)
  std::string name = "trivial";
  std::string source;  // the group-spec string it was built from, if any

  GroupTable() : mul_table{0}, inv_table{0} {}

  ElementId mul(ElementId a, ElementId b) const {
    return mul_table[std::size_t(a) * order + b];
  }
  ElementId inv(ElementId a) const { return inv_table[a]; }
  // Conjugate of h by x, i.e. x^{-1} h x.
  ElementId conj(ElementId h, ElementId x) const { return mul(mul(inv(x), h), x); }

  std::uint32_t element_order(ElementId a) const {
    std::uint32_t n = 1;
    ElementId cur = a;
    while (cur != 0) {
      cur = mul(cur, a);
      ++n;
    }
    return n;
  }

  bool is_abelian() const {
    if (!generators.empty()) {
      for (auto a : generators)
        for (auto b : generators)
          if (mul(a, b) != mul(b, a)) return false;
      return true;
    }
    for (ElementId a = 0; a < order; ++a)
      for (ElementId b = a + 1; b < order; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // Elements used to drive orbit computations: the construction
  // generators when known, otherwise every element.
  std::vector<std::uint32_t> acting_set() const {
    if (!generators.empty()) return generators;
    std::vector<std::uint32_t> all(order);
    std::iota(all.begin(), all.end(), 0u);
    return all;
  }
};

inline ElementId product(const GroupTable& g, ElementId a, ElementId b) { return g.mul(a, b); }
inline ElementId inverse(const GroupTable& g, ElementId a) { return g.inv(a); }
inline std::uint32_t element_order(const GroupTable& g, ElementId a) {
  return g.element_order(a);
}

// A subgroup of a GroupTable: sorted member ids plus a bitmask over the
// owner's elements.  Closure under mul/inv is the producer's obligation;
// identity membership and Lagrange are asserted on construction.
struct Subgroup {
  const GroupTable* owner = nullptr;
  std::vector<std::uint32_t> members;  // sorted, members[0] == 0
  std::vector<std::uint64_t> mask;

  std::uint32_t order() const { return static_cast<std::uint32_t>(members.size()); }
  bool contains(ElementId x) const { return detail::mask_test(mask, x); }
  std::uint32_t index() const { return owner->order / order(); }
  bool is_trivial() const { return order() == 1; }
  bool is_full() const { return order() == owner->order; }
};

inline Subgroup make_subgroup(const GroupTable& g, std::vector<std::uint32_t> sorted_members) {
  assert(!sorted_members.empty() && sorted_members.front() == 0);
  assert(g.order % sorted_members.size() == 0);
  Subgroup s;
  s.owner = &g;
  s.mask.assign(detail::mask_words(g.order), 0);
  for (auto m : sorted_members) detail::mask_set(s.mask, m);
  s.members = std::move(sorted_members);
  return s;
}

inline Subgroup trivial_subgroup(const GroupTable& g) { return make_subgroup(g, {0}); }

inline Subgroup full_subgroup(const GroupTable& g) {
  std::vector<std::uint32_t> all(g.order);
  std::iota(all.begin(), all.end(), 0u);
  return make_subgroup(g, std::move(all));
}

// Closure of a seed set inside g: BFS over right-multiplication by the
// seeds.  Seeds act as the generator list, so the cost is
// O(result · seeds).  Returns sorted members.
inline std::vector<std::uint32_t> close_subset(const GroupTable& g,
                                               const std::vector<std::uint32_t>& seeds) {
  std::vector<std::uint64_t> seen(detail::mask_words(g.order), 0);
  std::vector<std::uint32_t> out;
  out.reserve(seeds.size() + 1);
  detail::mask_set(seen, 0);
  out.push_back(0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : seeds) {
      ElementId t = g.mul(out[i], s);
      if (!detail::mask_test(seen, t)) {
        detail::mask_set(seen, t);
        out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Same closure with a size cap; returns nullopt as soon as the closure
// strictly exceeds max_size.
inline std::optional<std::vector<std::uint32_t>> close_subset_capped(
    const GroupTable& g, const std::vector<std::uint32_t>& seeds, std::uint32_t max_size) {
  std::vector<std::uint64_t> seen(detail::mask_words(g.order), 0);
  std::vector<std::uint32_t> out;
  detail::mask_set(seen, 0);
  out.push_back(0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : seeds) {
      ElementId t = g.mul(out[i], s);
      if (!detail::mask_test(seen, t)) {
        if (out.size() >= max_size) return std::nullopt;
        detail::mask_set(seen, t);
        out.push_back(t);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Subgroup generated_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& seeds) {
  return make_subgroup(g, close_subset(g, seeds));
}

// ---------------------------------------------------------------------------
// Construction from generators.

// A permutation given by its image list; points are 0-based internally.
struct Perm {
  std::vector<std::uint32_t> img;
  bool operator==(const Perm&) const = default;
};

// A 2×2 matrix over the prime field F_p, row-major entries.
struct Mat2 {
  std::uint32_t p = 2;
  std::array<std::uint32_t, 4> a{1, 0, 0, 1};
  bool operator==(const Mat2&) const = default;
};

namespace detail {

struct PermHash {
  std::size_t operator()(const Perm& p) const { return VecHash{}(p.img); }
};

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ m.p;
    for (auto x : m.a) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

inline Perm perm_mul(const Perm& x, const Perm& y) {
  Perm r;
  r.img.resize(x.img.size());
  for (std::size_t i = 0; i < x.img.size(); ++i) r.img[i] = y.img[x.img[i]];
  return r;
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  const std::uint64_t p = x.p;
  Mat2 r;
  r.p = x.p;
  r.a[0] = static_cast<std::uint32_t>((std::uint64_t(x.a[0]) * y.a[0] + std::uint64_t(x.a[1]) * y.a[2]) % p);
  r.a[1] = static_cast<std::uint32_t>((std::uint64_t(x.a[0]) * y.a[1] + std::uint64_t(x.a[1]) * y.a[3]) % p);
  r.a[2] = static_cast<std::uint32_t>((std::uint64_t(x.a[2]) * y.a[0] + std::uint64_t(x.a[3]) * y.a[2]) % p);
  r.a[3] = static_cast<std::uint32_t>((std::uint64_t(x.a[2]) * y.a[1] + std::uint64_t(x.a[3]) * y.a[3]) % p);
  return r;
}

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Breadth-first closure keeping, for each discovered element, the BFS
// parent and the generator index that produced it.  Element 0 is the
// identity.
template <class Elem, class Hash, class MulFn>
struct Closure {
  std::vector<Elem> elems;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> via_gen;
  std::vector<std::uint32_t> gen_ids;  // id of each generator in elems

  Closure(const Elem& identity, const std::vector<Elem>& gens, MulFn mul, std::uint32_t cap) {
    std::unordered_map<Elem, std::uint32_t, Hash> index;
    elems.push_back(identity);
    parent.push_back(0);
    via_gen.push_back(0);
    index.emplace(identity, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
        Elem next = mul(elems[i], gens[gi]);
        auto [it, inserted] = index.emplace(next, static_cast<std::uint32_t>(elems.size()));
        if (inserted) {
          if (elems.size() >= cap)
            throw CapExceeded("generated group exceeds the order cap of " + std::to_string(cap));
          elems.push_back(std::move(next));
          parent.push_back(static_cast<std::uint32_t>(i));
          via_gen.push_back(gi);
        }
      }
    }
    gen_ids.reserve(gens.size());
    for (const auto& g : gens) gen_ids.push_back(index.at(g));
  }
};

// Verifies the structural invariants of a finished table: Latin square,
// identity row/column, inverse involution, and associativity (full below
// 10^5 triples, otherwise a fixed-seed sample of 10^5).  Raises
// InternalError, since a violation means a construction bug.
inline void verify_structure(const GroupTable& g) {
  const std::uint32_t n = g.order;
  std::vector<std::uint64_t> seen(mask_words(n));
  for (std::uint32_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t c = 0; c < n; ++c) {
      ElementId v = g.mul(r, c);
      if (v >= n || mask_test(seen, v)) throw InternalError("multiplication row is not a permutation");
      mask_set(seen, v);
    }
  }
  for (std::uint32_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t r = 0; r < n; ++r) {
      ElementId v = g.mul(r, c);
      if (mask_test(seen, v)) throw InternalError("multiplication column is not a permutation");
      mask_set(seen, v);
    }
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) throw InternalError("id 0 is not the identity");
    if (g.mul(x, g.inv(x)) != 0 || g.inv(g.inv(x)) != x) throw InternalError("inverse table broken");
  }
  const std::uint64_t full = std::uint64_t(n) * n * n;
  if (full <= 100000) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw InternalError("associativity violated");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        throw InternalError("associativity violated (sampled)");
    }
  }
}

// Builds the dense table from a closure.  Generator columns are computed
// by composing the underlying elements; every other column b with BFS
// parent b = b'·g is filled as mul[a][b] = mul[mul[a][b']][g], which keeps
// the whole table O(n²) lookups.
template <class Elem, class Hash, class MulFn>
GroupTable table_from_closure(Closure<Elem, Hash, MulFn>& cl, const std::vector<Elem>& gens,
                              MulFn mul) {
  GroupTable g;
  const std::uint32_t n = static_cast<std::uint32_t>(cl.elems.size());
  g.order = n;
  g.mul_table.assign(std::size_t(n) * n, 0);
  g.inv_table.assign(n, 0);
  {
    std::unordered_map<Elem, std::uint32_t, Hash> index;
    index.reserve(n * 2);
    for (std::uint32_t i = 0; i < n; ++i) index.emplace(cl.elems[i], i);
    for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
      const std::uint32_t gid = cl.gen_ids[gi];
      for (std::uint32_t a = 0; a < n; ++a)
        g.mul_table[std::size_t(a) * n + gid] =
            static_cast<std::uint16_t>(index.at(mul(cl.elems[a], gens[gi])));
    }
  }
  std::vector<char> col_done(n, 0);
  col_done[0] = 1;
  for (std::uint32_t a = 0; a < n; ++a) g.mul_table[std::size_t(a) * n + 0] = static_cast<std::uint16_t>(a);
  for (auto gid : cl.gen_ids) col_done[gid] = 1;
  for (std::uint32_t b = 1; b < n; ++b) {
    if (col_done[b]) continue;
    // BFS order guarantees the parent's column is already complete.
    const std::uint32_t bp = cl.parent[b];
    const std::uint32_t gid = cl.gen_ids[cl.via_gen[b]];
    assert(col_done[bp]);
    for (std::uint32_t a = 0; a < n; ++a) {
      const std::uint16_t ab = g.mul_table[std::size_t(a) * n + bp];
      g.mul_table[std::size_t(a) * n + b] = g.mul_table[std::size_t(ab) * n + gid];
    }
    col_done[b] = 1;
  }
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::uint32_t a = 0; a < n; ++a)
      if (g.mul_table[std::size_t(a) * n + b] == 0) g.inv_table[a] = static_cast<std::uint16_t>(b);
  for (auto gid : cl.gen_ids)
    if (gid != 0) g.generators.push_back(gid);
  // Drop duplicate generator ids while preserving order.
  std::vector<std::uint32_t> uniq;
  for (auto x : g.generators)
    if (std::find(uniq.begin(), uniq.end(), x) == uniq.end()) uniq.push_back(x);
  g.generators = std::move(uniq);
  verify_structure(g);
  return g;
}

inline void validate_perms(std::vector<Perm>& gens) {
  std::size_t deg = 1;
  for (const auto& p : gens) deg = std::max(deg, p.img.size());
  for (auto& p : gens) {
    const std::size_t old = p.img.size();
    p.img.resize(deg);
    for (std::size_t i = old; i < deg; ++i) p.img[i] = static_cast<std::uint32_t>(i);
    std::vector<char> hit(deg, 0);
    for (auto v : p.img) {
      if (v >= deg || hit[v]) throw InvalidGenerator("generator is not a permutation");
      hit[v] = 1;
    }
  }
}

inline void validate_mats(std::vector<Mat2>& gens) {
  if (gens.empty()) return;
  const std::uint32_t p = gens.front().p;
  if (!is_prime_u32(p)) throw InvalidGenerator("matrix modulus must be prime");
  for (auto& m : gens) {
    if (m.p != p) throw InvalidGenerator("matrix generators use mixed moduli");
    for (auto& e : m.a) e %= p;
    const std::uint64_t det =
        (std::uint64_t(m.a[0]) * m.a[3] % p + p - std::uint64_t(m.a[1]) * m.a[2] % p) % p;
    if (det == 0) throw InvalidGenerator("matrix generator is singular");
  }
}

}  // namespace detail

// Materializes the group generated by permutations.  Elements are numbered
// breadth-first from the identity with the generators in the given order,
// so the numbering is reproducible.
inline GroupTable closure_from_generators(std::vector<Perm> gens, const Caps& caps = {}) {
  if (gens.empty()) return GroupTable{};
  detail::validate_perms(gens);
  Perm id;
  id.img.resize(gens.front().img.size());
  std::iota(id.img.begin(), id.img.end(), 0u);
  auto mul = [](const Perm& a, const Perm& b) { return detail::perm_mul(a, b); };
  detail::Closure<Perm, detail::PermHash, decltype(mul)> cl(id, gens, mul, caps.group_order);
  GroupTable g = detail::table_from_closure(cl, gens, mul);
  g.name = "perm group of order " + std::to_string(g.order);
  return g;
}

// Materializes the group generated by 2×2 matrices over F_p.
inline GroupTable closure_from_generators(std::vector<Mat2> gens, const Caps& caps = {}) {
  if (gens.empty()) return GroupTable{};
  detail::validate_mats(gens);
  Mat2 id;
  id.p = gens.front().p;
  auto mul = [](const Mat2& a, const Mat2& b) { return detail::mat_mul(a, b); };
  detail::Closure<Mat2, detail::Mat2Hash, decltype(mul)> cl(id, gens, mul, caps.group_order);
  GroupTable g = detail::table_from_closure(cl, gens, mul);
  g.name = "matrix group of order " + std::to_string(g.order);
  return g;
}

// Order of the generated group without materializing the table; used
// where the dense table would be out of scale.
inline std::uint64_t closure_order(std::vector<Perm> gens, std::uint32_t cap) {
  if (gens.empty()) return 1;
  detail::validate_perms(gens);
  Perm id;
  id.img.resize(gens.front().img.size());
  std::iota(id.img.begin(), id.img.end(), 0u);
  auto mul = [](const Perm& a, const Perm& b) { return detail::perm_mul(a, b); };
  detail::Closure<Perm, detail::PermHash, decltype(mul)> cl(id, gens, mul, cap);
  return cl.elems.size();
}

// ---------------------------------------------------------------------------
// Conjugacy classes of elements.

struct ConjClassPartition {
  std::vector<std::vector<std::uint32_t>> classes;  // class 0 is {identity}
  std::vector<std::uint32_t> class_of;

  // Number of classes consisting of involutions (identity's class excluded).
  std::uint32_t involution_class_count(const GroupTable& g) const {
    std::uint32_t n = 0;
    for (std::size_t c = 1; c < classes.size(); ++c) {
      const ElementId rep = classes[c].front();
      if (g.mul(rep, rep) == 0) ++n;
    }
    return n;
  }
};

inline ConjClassPartition conjugacy_classes_elements(const GroupTable& g) {
  ConjClassPartition part;
  part.class_of.assign(g.order, UINT32_MAX);
  const auto actors = g.acting_set();
  for (ElementId a = 0; a < g.order; ++a) {
    if (part.class_of[a] != UINT32_MAX) continue;
    const std::uint32_t ci = static_cast<std::uint32_t>(part.classes.size());
    std::vector<std::uint32_t> orbit{a};
    part.class_of[a] = ci;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto x : actors) {
        ElementId t = g.conj(orbit[i], x);
        if (part.class_of[t] == UINT32_MAX) {
          part.class_of[t] = ci;
          orbit.push_back(t);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.classes.push_back(std::move(orbit));
  }
  assert(part.classes.front().size() == 1 && part.classes.front().front() == 0);
  return part;
}

inline Subgroup center(const GroupTable& g) {
  const auto actors = g.acting_set();
  std::vector<std::uint32_t> members;
  for (ElementId x = 0; x < g.order; ++x) {
    bool central = true;
    for (auto a : actors) {
      if (g.mul(x, a) != g.mul(a, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return make_subgroup(g, std::move(members));
}

// ---------------------------------------------------------------------------
// Derived series and solvability.

struct DerivedSeries {
  std::vector<Subgroup> series;  // G ⊵ G' ⊵ G'' ⊵ … until stabilization
  bool solvable = false;
};

inline Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& h) {
  std::vector<std::uint64_t> seen(detail::mask_words(g.order), 0);
  std::vector<std::uint32_t> comms;
  for (auto a : h.members) {
    for (auto b : h.members) {
      const ElementId c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!detail::mask_test(seen, c)) {
        detail::mask_set(seen, c);
        comms.push_back(c);
      }
    }
  }
  return generated_subgroup(g, comms);
}

inline DerivedSeries derived_series_solvable(const GroupTable& g) {
  DerivedSeries out;
  out.series.push_back(full_subgroup(g));
  while (true) {
    Subgroup next = commutator_subgroup(g, out.series.back());
    if (next.order() == out.series.back().order()) break;
    out.series.push_back(std::move(next));
    if (out.series.back().order() == 1) break;
  }
  out.solvable = out.series.back().order() == 1;
  return out;
}

inline bool is_solvable(const GroupTable& g) { return derived_series_solvable(g).solvable; }

// ---------------------------------------------------------------------------
// Quotients.

struct QuotientResult {
  GroupTable group;
  std::vector<std::uint32_t> projection;  // element id -> coset id
};

// Quotient by a verified-normal subgroup.  Cosets are numbered by their
// least member, which puts the coset of the identity at id 0.
inline QuotientResult quotient(const GroupTable& g, const Subgroup& n) {
  assert(n.owner == &g);
  for (auto x : g.acting_set()) {
    for (auto m : n.members) {
      if (!n.contains(g.conj(m, x)))
        throw NotNormal("subgroup of order " + std::to_string(n.order()) + " is not normal");
    }
  }
  QuotientResult out;
  out.projection.assign(g.order, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (ElementId x = 0; x < g.order; ++x) {
    if (out.projection[x] != UINT32_MAX) continue;
    const std::uint32_t ci = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (auto m : n.members) out.projection[g.mul(m, x)] = ci;
  }
  const std::uint32_t q = static_cast<std::uint32_t>(reps.size());
  assert(q == g.order / n.order());
  GroupTable& t = out.group;
  t.order = q;
  t.mul_table.assign(std::size_t(q) * q, 0);
  t.inv_table.assign(q, 0);
  for (std::uint32_t i = 0; i < q; ++i) {
    for (std::uint32_t j = 0; j < q; ++j)
      t.mul_table[std::size_t(i) * q + j] =
          static_cast<std::uint16_t>(out.projection[g.mul(reps[i], reps[j])]);
    t.inv_table[i] = static_cast<std::uint16_t>(out.projection[g.inv(reps[i])]);
  }
  for (auto gi : g.generators) {
    const std::uint32_t im = out.projection[gi];
    if (im != 0 && std::find(t.generators.begin(), t.generators.end(), im) == t.generators.end())
      t.generators.push_back(im);
  }
  t.name = g.name + " / N" + std::to_string(n.order());
  // The projection must respect multiplication; full check at small
  // orders, sampled above.
  if (g.order <= 256) {
    for (ElementId a = 0; a < g.order; ++a)
      for (ElementId b = 0; b < g.order; ++b)
        if (out.projection[g.mul(a, b)] != t.mul(out.projection[a], out.projection[b]))
          throw InternalError("quotient projection does not respect multiplication");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order - 1);
    for (int i = 0; i < 100000; ++i) {
      const ElementId a = pick(rng), b = pick(rng);
      if (out.projection[g.mul(a, b)] != t.mul(out.projection[a], out.projection[b]))
        throw InternalError("quotient projection does not respect multiplication");
    }
  }
  detail::verify_structure(t);
  return out;
}

}  // namespace perfcode
