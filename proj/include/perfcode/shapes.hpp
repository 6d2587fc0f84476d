#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perfcode/group.hpp"
#include "perfcode/lattice.hpp"

namespace perfcode {

enum class ShapeKind : std::uint8_t {
  cyclic,
  dihedral,
  generalized_quaternion,
  elementary_abelian,
  other,
};

// Structural tag with verified defining relations.  Coincidences at tiny
// orders resolve by priority: cyclic, then elementary abelian, then
// generalized quaternion, then dihedral (so Z₂ is cyclic(2), not
// dihedral(2); the Klein four-group is elementary_abelian(2,2), not
// dihedral(4)).
struct ShapeTag {
  ShapeKind kind = ShapeKind::other;
  std::uint32_t order = 0;  // group order for cyclic/dihedral/quaternion
  std::uint32_t p = 0;      // elementary_abelian(p, k)
  std::uint32_t k = 0;

  bool is_cyclic() const { return kind == ShapeKind::cyclic; }
  bool is_dihedral() const { return kind == ShapeKind::dihedral; }
  bool is_generalized_quaternion() const { return kind == ShapeKind::generalized_quaternion; }
  bool is_elementary_abelian() const { return kind == ShapeKind::elementary_abelian; }
  bool cyclic_or_quaternion() const { return is_cyclic() || is_generalized_quaternion(); }

  std::string to_string() const {
    switch (kind) {
      case ShapeKind::cyclic:
        return "cyclic(" + std::to_string(order) + ")";
      case ShapeKind::dihedral:
        return "dihedral(" + std::to_string(order) + ")";
      case ShapeKind::generalized_quaternion:
        return "generalized_quaternion(" + std::to_string(order) + ")";
      case ShapeKind::elementary_abelian:
        return "elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")";
      case ShapeKind::other:
        break;
    }
    return "other";
  }
};

enum class CheckStatus : std::uint8_t { pass, fail, not_applicable };

struct CheckResult {
  std::string check_name;
  CheckStatus status = CheckStatus::not_applicable;
  std::string witness;  // non-empty exactly when status == fail
  std::string details;

  bool passed() const { return status != CheckStatus::fail; }
  bool operator==(const CheckResult&) const = default;
  std::string status_string() const {
    switch (status) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail";
      case CheckStatus::not_applicable:
        break;
    }
    return "not_applicable";
  }
};

inline CheckResult check_pass(std::string name, std::string details) {
  return CheckResult{std::move(name), CheckStatus::pass, "", std::move(details)};
}
inline CheckResult check_fail(std::string name, std::string witness, std::string details) {
  assert(!witness.empty());
  return CheckResult{std::move(name), CheckStatus::fail, std::move(witness), std::move(details)};
}
inline CheckResult check_na(std::string name, std::string details) {
  return CheckResult{std::move(name), CheckStatus::not_applicable, "", std::move(details)};
}

namespace detail {

inline std::vector<std::uint32_t> cyclic_members(const GroupTable& g, ElementId x) {
  std::vector<std::uint32_t> out{0};
  ElementId cur = x;
  while (cur != 0) {
    out.push_back(cur);
    cur = g.mul(cur, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline ShapeTag recognize_shape(const GroupTable& g) {
  const std::uint32_t n = g.order;
  ShapeTag tag;
  tag.order = n;
  for (ElementId x = 0; x < n; ++x) {
    if (g.element_order(x) == n) {
      tag.kind = ShapeKind::cyclic;
      return tag;
    }
  }
  const auto sig = prime_signature(g);
  if (sig.primes.size() == 1 && g.is_abelian()) {
    const std::uint32_t p = sig.primes.front();
    bool exponent_p = true;
    for (ElementId x = 1; x < n && exponent_p; ++x)
      if (detail::pow_element(g, x, p) != 0) exponent_p = false;
    if (exponent_p) {
      tag.kind = ShapeKind::elementary_abelian;
      tag.p = p;
      tag.k = sig.exponents.front();
      return tag;
    }
  }
  // Both remaining shapes need a cyclic subgroup of index 2; finding one
  // witness pair (x, y) satisfying the defining relations pins the
  // isomorphism type, since the presentation has the same order.
  if (n >= 8 && (n & (n - 1)) == 0) {
    for (ElementId x = 1; x < n; ++x) {
      if (g.element_order(x) != n / 2) continue;
      const auto cyc = detail::cyclic_members(g, x);
      const ElementId central_inv = detail::pow_element(g, x, n / 4);
      for (ElementId y = 1; y < n; ++y) {
        if (std::binary_search(cyc.begin(), cyc.end(), y)) continue;
        if (g.mul(y, y) == central_inv && g.conj(x, y) == g.inv(x)) {
          tag.kind = ShapeKind::generalized_quaternion;
          return tag;
        }
      }
      break;  // all index-2 cyclic subgroups are equivalent witnesses
    }
  }
  if (n >= 2 && n % 2 == 0) {
    for (ElementId x = 1; x < n; ++x) {
      if (g.element_order(x) != n / 2) continue;
      const auto cyc = detail::cyclic_members(g, x);
      for (ElementId y = 1; y < n; ++y) {
        if (std::binary_search(cyc.begin(), cyc.end(), y)) continue;
        if (g.mul(y, y) == 0 && g.conj(x, y) == g.inv(x)) {
          tag.kind = ShapeKind::dihedral;
          return tag;
        }
      }
    }
  }
  tag.kind = ShapeKind::other;
  return tag;
}

// (order -> count) pairs, ascending by order.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> element_order_profile(
    const GroupTable& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  std::vector<std::uint32_t> orders(g.order);
  for (ElementId x = 0; x < g.order; ++x) orders[x] = g.element_order(x);
  std::sort(orders.begin(), orders.end());
  for (std::size_t i = 0; i < orders.size();) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    out.emplace_back(orders[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return out;
}

struct IsoVerdict {
  bool isomorphic = false;
  bool confident = true;  // false only for a fingerprint-mode "true"

  explicit operator bool() const { return isomorphic; }
};

namespace detail {

// Greedy minimal generating sequence: repeatedly adjoin the least
// element outside the running closure.
inline std::vector<std::uint32_t> minimal_generating_sequence(const GroupTable& g) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint64_t> have(mask_words(g.order), 0);
  mask_set(have, 0);
  std::uint32_t covered = 1;
  while (covered < g.order) {
    ElementId next = 0;
    for (ElementId x = 1; x < g.order; ++x) {
      if (!mask_test(have, x)) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    const auto closed = close_subset(g, gens);
    std::fill(have.begin(), have.end(), 0);
    for (auto m : closed) mask_set(have, m);
    covered = static_cast<std::uint32_t>(closed.size());
  }
  return gens;
}

// Exact isomorphism search: map a minimal generating sequence of a into
// b, candidates filtered by (element order, conjugacy class size), with
// the partial map closed under products after every extension.
inline bool exact_isomorphic(const GroupTable& a, const GroupTable& b) {
  const std::uint32_t n = a.order;
  const auto gens = minimal_generating_sequence(a);
  const auto cls_a = conjugacy_classes_elements(a);
  const auto cls_b = conjugacy_classes_elements(b);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inv_a(n), inv_b(n);
  for (ElementId x = 0; x < n; ++x) {
    inv_a[x] = {a.element_order(x),
                static_cast<std::uint32_t>(cls_a.classes[cls_a.class_of[x]].size())};
    inv_b[x] = {b.element_order(x),
                static_cast<std::uint32_t>(cls_b.classes[cls_b.class_of[x]].size())};
  }
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> f(n, kUnset), finv(n, kUnset), dom;
  f[0] = 0;
  finv[0] = 0;
  dom.push_back(0);

  // Closes dom under products, propagating images; records assignments
  // for rollback.  Returns false on any inconsistency.
  auto close_map = [&](std::vector<std::uint32_t>& record) -> bool {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < dom.size(); ++i) {
        for (std::size_t j = 0; j < dom.size(); ++j) {
          const ElementId z = a.mul(dom[i], dom[j]);
          const ElementId fz = b.mul(f[dom[i]], f[dom[j]]);
          if (f[z] != kUnset) {
            if (f[z] != fz) return false;
            continue;
          }
          if (finv[fz] != kUnset) return false;
          f[z] = fz;
          finv[fz] = z;
          dom.push_back(z);
          record.push_back(z);
          grew = true;
        }
      }
    }
    return true;
  };

  auto rollback = [&](const std::vector<std::uint32_t>& record) {
    for (auto z : record) {
      finv[f[z]] = kUnset;
      f[z] = kUnset;
    }
    dom.resize(dom.size() - record.size());
  };

  auto search = [&](auto&& self, std::size_t gi) -> bool {
    if (gi == gens.size()) {
      assert(dom.size() == n);
      return true;
    }
    const ElementId g1 = gens[gi];
    for (ElementId c = 0; c < n; ++c) {
      if (finv[c] != kUnset || inv_b[c] != inv_a[g1]) continue;
      std::vector<std::uint32_t> record;
      f[g1] = c;
      finv[c] = g1;
      dom.push_back(g1);
      record.push_back(g1);
      if (close_map(record) && self(self, gi + 1)) return true;
      rollback(record);
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace detail

// Isomorphism test: exact generator-mapping search at order ≤ 256, and a
// fingerprint comparison (order, abelianness, element-order profile,
// conjugacy class sizes) above.  A fingerprint mismatch is a confident
// "false"; a fingerprint match above the exact bound is a low-confidence
// "true".
inline IsoVerdict bounded_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order != b.order) return {false, true};
  if (a.is_abelian() != b.is_abelian()) return {false, true};
  if (element_order_profile(a) != element_order_profile(b)) return {false, true};
  {
    auto sizes = [](const GroupTable& g) {
      const auto cls = conjugacy_classes_elements(g);
      std::vector<std::uint32_t> s;
      for (const auto& c : cls.classes) s.push_back(static_cast<std::uint32_t>(c.size()));
      std::sort(s.begin(), s.end());
      return s;
    };
    if (sizes(a) != sizes(b)) return {false, true};
  }
  if (a.order <= 256) return {detail::exact_isomorphic(a, b), true};
  return {true, false};
}

// Dense table for the subgroup h of g, re-indexed so h's members map to
// 0..|h|−1 in ascending id order (identity stays at 0).
inline GroupTable subgroup_table(const GroupTable& g, const Subgroup& h) {
  assert(h.owner == &g);
  const std::uint32_t n = h.order();
  GroupTable t;
  t.order = n;
  t.mul_table.assign(std::size_t(n) * n, 0);
  t.inv_table.assign(n, 0);
  std::vector<std::uint32_t> local(g.order, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) local[h.members[i]] = i;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const ElementId z = g.mul(h.members[i], h.members[j]);
      assert(local[z] != UINT32_MAX);
      t.mul_table[std::size_t(i) * n + j] = static_cast<std::uint16_t>(local[z]);
    }
    t.inv_table[i] = static_cast<std::uint16_t>(local[g.inv(h.members[i])]);
  }
  for (auto gen : detail::greedy_generators(g, h.members))
    t.generators.push_back(local[gen]);
  t.name = g.name + " subgroup of order " + std::to_string(n);
  detail::verify_structure(t);
  return t;
}

// Maps a subgroup of g into the local ids of sub = subgroup_table(g, h);
// inner must be contained in h.
inline Subgroup relocate_subgroup(const GroupTable& g, const Subgroup& h,
                                  const GroupTable& sub, const Subgroup& inner) {
  assert(detail::mask_subset(inner.mask, h.mask));
  std::vector<std::uint32_t> members;
  for (auto m : inner.members) {
    const auto it = std::lower_bound(h.members.begin(), h.members.end(), m);
    members.push_back(static_cast<std::uint32_t>(it - h.members.begin()));
  }
  return make_subgroup(sub, std::move(members));
}

}  // namespace perfcode
