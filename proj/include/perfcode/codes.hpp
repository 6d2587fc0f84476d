#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfcode/group.hpp"
#include "perfcode/lattice.hpp"

namespace perfcode {

enum class Ternary : std::uint8_t { yes, no, unknown };

// One representative per right coset of some H in G; when
// inverse_closed, the rep set equals its own image under inversion.
struct Transversal {
  std::vector<std::uint32_t> reps;
  bool inverse_closed = false;
};

// Connection set of a Cayley graph on G: inverse-closed and
// identity-free.  Vertices x, y are adjacent iff y·x⁻¹ ∈ S.
struct CayleyGraph {
  std::vector<std::uint32_t> connection_set;
  std::vector<std::uint64_t> set_mask;

  static CayleyGraph from_set(const GroupTable& g, std::vector<std::uint32_t> s) {
    CayleyGraph c;
    c.set_mask.assign(detail::mask_words(g.order), 0);
    for (auto x : s) {
      assert(x != 0);
      detail::mask_set(c.set_mask, x);
    }
    for (auto x : s) assert(detail::mask_test(c.set_mask, g.inv(x)));
    c.connection_set = std::move(s);
    std::sort(c.connection_set.begin(), c.connection_set.end());
    return c;
  }

  bool adjacent(const GroupTable& g, ElementId x, ElementId y) const {
    return detail::mask_test(set_mask, g.mul(y, g.inv(x)));
  }
};

// True when |H| or [G:H] is odd, which already certifies perfect-code
// status; unknown otherwise, never no.
inline Ternary fast_path_odd(const GroupTable& g, const Subgroup& h) {
  if (h.order() % 2 == 1) return Ternary::yes;
  if ((g.order / h.order()) % 2 == 1) return Ternary::yes;
  return Ternary::unknown;
}

// Full coset-involution criterion: H is a perfect code iff for every
// x ∈ G with x² ∈ H and |H|/|H ∩ H^x| odd, some y ∈ Hx has y² = 1.
inline bool is_perfect_code_criterion(const GroupTable& g, const Subgroup& h) {
  assert(h.owner == &g);
  for (ElementId x = 0; x < g.order; ++x) {
    if (h.contains(x)) continue;  // y = identity ∈ Hx works
    if (!h.contains(g.mul(x, x))) continue;
    std::uint32_t inter = 0;
    for (auto m : h.members)
      if (h.contains(g.conj(m, x))) ++inter;
    if ((h.order() / inter) % 2 == 0) continue;
    bool found = false;
    for (auto m : h.members) {
      const ElementId y = g.mul(m, x);
      if (g.mul(y, y) == 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace detail {

// Sylow p-subgroup of the subgroup with the given sorted members,
// returned as a subgroup of g; same normalizer-growth scheme as the
// whole-group version, restricted to the member set.
inline Subgroup sylow_within(const GroupTable& g, const std::vector<std::uint32_t>& members,
                             std::uint32_t p) {
  std::uint32_t target = 1;
  {
    std::uint64_t m = members.size();
    while (m % p == 0) {
      m /= p;
      target *= p;
    }
  }
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    const auto gens = greedy_generators(g, s.members);
    bool grown = false;
    for (auto x : members) {
      if (s.contains(x)) continue;
      bool normalizes = true;
      for (auto sg : gens) {
        if (!s.contains(g.conj(sg, x))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes || !s.contains(pow_element(g, x, p))) continue;
      auto grown_gens = gens;
      grown_gens.push_back(x);
      s = generated_subgroup(g, grown_gens);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("sylow growth stalled inside subgroup");
  }
  return s;
}

}  // namespace detail

// Reduction route: Q = Sylow-2 of H and P = Sylow-2 of N_G(Q) decide
// everything.  Every x ∈ P normalizes Q, so the criterion inside P
// needs no intersection-parity clause.
inline bool is_perfect_code_sylow_reduction(const GroupTable& g, const Subgroup& h) {
  assert(h.owner == &g);
  const Subgroup q = detail::sylow_within(g, h.members, 2);
  if (q.is_trivial()) return true;  // |H| odd
  const Subgroup n = normalizer(g, q);
  const Subgroup p = detail::sylow_within(g, n.members, 2);
  assert(detail::mask_subset(q.mask, p.mask));
  for (auto x : p.members) {
    if (!q.contains(g.mul(x, x))) continue;
    bool found = false;
    for (auto m : q.members) {
      const ElementId y = g.mul(m, x);
      if (g.mul(y, y) == 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Complete backtracking search for an inverse-closed right transversal.
// Cosets are picked fewest-candidates-first; committing a rep forces the
// rep of the coset holding its inverse.  A rep whose inverse lands in
// its own coset must be an involution (or the identity).  The rep of
// the coset H itself can be normalized to the identity without loss:
// any self-paired rep h ∈ H can be swapped for the identity.
inline std::optional<Transversal> find_inverse_closed_transversal(const GroupTable& g,
                                                                  const Subgroup& h,
                                                                  const Caps& caps = {}) {
  assert(h.owner == &g);
  const std::uint32_t r = g.order / h.order();
  if (r > caps.transversal_index)
    throw CapExceeded("coset index " + std::to_string(r) + " above the transversal cap of " +
                      std::to_string(caps.transversal_index));
  std::vector<std::uint32_t> coset_of(g.order, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> coset_members(r);
  {
    std::uint32_t next = 0;
    for (ElementId x = 0; x < g.order; ++x) {
      if (coset_of[x] != UINT32_MAX) continue;
      for (auto m : h.members) coset_of[g.mul(m, x)] = next;
      ++next;
    }
    assert(next == r);
    for (ElementId x = 0; x < g.order; ++x) coset_members[coset_of[x]].push_back(x);
  }
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> rep(r, kUnset);
  rep[coset_of[0]] = 0;  // identity represents H; safe normalization
  std::uint32_t unassigned = r - 1;

  // Recursive lambda: returns true when a full assignment is reached.
  auto solve = [&](auto&& self) -> bool {
    if (unassigned == 0) return true;
    // Fewest admissible candidates first.
    std::uint32_t best = kUnset;
    std::size_t best_count = SIZE_MAX;
    for (std::uint32_t c = 0; c < r; ++c) {
      if (rep[c] != kUnset) continue;
      std::size_t count = 0;
      for (auto y : coset_members[c]) {
        const ElementId yi = g.inv(y);
        const std::uint32_t ci = coset_of[yi];
        if (ci == c) {
          if (g.mul(y, y) == 0) ++count;
        } else if (rep[ci] == kUnset || rep[ci] == yi) {
          ++count;
        }
      }
      if (count == 0) return false;
      if (count < best_count) {
        best_count = count;
        best = c;
      }
    }
    const std::uint32_t c = best;
    for (auto y : coset_members[c]) {
      const ElementId yi = g.inv(y);
      const std::uint32_t ci = coset_of[yi];
      if (ci == c) {
        if (g.mul(y, y) != 0) continue;
        rep[c] = y;
        --unassigned;
        if (self(self)) return true;
        rep[c] = kUnset;
        ++unassigned;
      } else if (rep[ci] == kUnset) {
        rep[c] = y;
        rep[ci] = yi;
        unassigned -= 2;
        if (self(self)) return true;
        rep[c] = kUnset;
        rep[ci] = kUnset;
        unassigned += 2;
      } else if (rep[ci] == yi) {
        rep[c] = y;
        --unassigned;
        if (self(self)) return true;
        rep[c] = kUnset;
        ++unassigned;
      }
    }
    return false;
  };
  if (!solve(solve)) return std::nullopt;
  Transversal t;
  t.reps = rep;
  t.inverse_closed = true;
  return t;
}

// Checks a claimed transversal and verifies the perfect-code property
// inside the Cayley graph it induces.  The rep of the coset H is
// normalized to the identity first.
inline bool verify_in_cayley(const GroupTable& g, const Subgroup& h, Transversal t) {
  assert(h.owner == &g);
  const std::uint32_t r = g.order / h.order();
  if (t.reps.size() != r) throw NotATransversal("rep count differs from the coset index");
  std::vector<std::uint32_t> coset_of(g.order, UINT32_MAX);
  {
    std::uint32_t next = 0;
    for (ElementId x = 0; x < g.order; ++x) {
      if (coset_of[x] != UINT32_MAX) continue;
      for (auto m : h.members) coset_of[g.mul(m, x)] = next;
      ++next;
    }
  }
  std::vector<char> hit(r, 0);
  for (auto y : t.reps) {
    if (y >= g.order) throw NotATransversal("rep id out of range");
    if (hit[coset_of[y]]) throw NotATransversal("two reps of the same right coset");
    hit[coset_of[y]] = 1;
  }
  for (auto& y : t.reps)
    if (h.contains(y)) y = 0;
  std::vector<std::uint64_t> set(detail::mask_words(g.order), 0);
  for (auto y : t.reps) detail::mask_set(set, y);
  for (auto y : t.reps)
    if (!detail::mask_test(set, g.inv(y)))
      throw NotInverseClosed("rep set is not closed under inversion");
  std::vector<std::uint32_t> s;
  for (auto y : t.reps)
    if (y != 0) s.push_back(y);
  const CayleyGraph cay = CayleyGraph::from_set(g, std::move(s));
  // H must be independent, and every outside vertex must see exactly
  // one member of H.
  for (auto a : h.members)
    for (auto b : h.members)
      if (a != b && cay.adjacent(g, a, b)) return false;
  for (ElementId v = 0; v < g.order; ++v) {
    if (h.contains(v)) continue;
    std::uint32_t neighbors = 0;
    for (auto a : h.members)
      if (cay.adjacent(g, v, a)) ++neighbors;
    if (neighbors != 1) return false;
  }
  return true;
}

// Decision used everywhere downstream: fast parity path, then the full
// criterion.
inline bool is_perfect_code(const GroupTable& g, const Subgroup& h) {
  if (fast_path_odd(g, h) == Ternary::yes) return true;
  return is_perfect_code_criterion(g, h);
}

struct DeltaClassEntry {
  Subgroup representative;
  std::uint32_t class_size = 1;
  std::vector<std::string> routes;  // evidence routes that passed
};

struct DeltaReport {
  std::string group_name;
  std::uint32_t group_order = 1;
  std::vector<DeltaClassEntry> delta_classes;
  std::uint32_t delta_count = 0;
  std::uint32_t pi_count = 0;
};

// Δ(G): conjugacy classes of subgroups H with 1 < H < G that are
// perfect codes.  With audit set, each membership is re-derived through
// the transversal search plus the Cayley-graph check whenever the coset
// index is within the transversal cap.
inline DeltaReport delta(const GroupTable& g, const SubgroupClassSet& classes,
                         const Caps& caps, bool audit = false) {
  DeltaReport rep;
  rep.group_name = g.name;
  rep.group_order = g.order;
  rep.pi_count = prime_signature(g).pi_count();
  for (const auto& cls : classes.classes) {
    const Subgroup& h = cls.representative;
    if (h.is_trivial() || h.is_full()) continue;
    DeltaClassEntry entry;
    bool code;
    if (fast_path_odd(g, h) == Ternary::yes) {
      code = true;
      entry.routes.push_back("odd-order-or-index");
    } else {
      code = is_perfect_code_criterion(g, h);
      if (code) entry.routes.push_back("coset-involution-criterion");
    }
#ifndef NDEBUG
    // Code status is a class invariant; check every conjugate.
    for (const auto& conj : cls.conjugates)
      assert(is_perfect_code(g, conj) == code);
#endif
    if (!code) continue;
    if (audit && g.order / h.order() <= caps.transversal_index) {
      const auto t = find_inverse_closed_transversal(g, h, caps);
      if (!t || !verify_in_cayley(g, h, *t))
        throw InternalError("audit route contradicts the criterion route");
      entry.routes.push_back("transversal-cayley");
    }
    entry.representative = h;
    entry.class_size = cls.size();
    rep.delta_classes.push_back(std::move(entry));
  }
  rep.delta_count = static_cast<std::uint32_t>(rep.delta_classes.size());
  return rep;
}

inline DeltaReport delta(const GroupTable& g, const Caps& caps = {}, bool audit = false) {
  return delta(g, subgroup_classes(g, all_subgroups(g, caps)), caps, audit);
}

}  // namespace perfcode
