#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "perfcode/group.hpp"

namespace perfcode {

// One conjugacy class of subgroups.  `conjugates` is the whole class,
// representative included; the representative has the lexicographically
// least member list of the class.
struct SubgroupClass {
  Subgroup representative;
  std::vector<Subgroup> conjugates;

  std::uint32_t size() const { return static_cast<std::uint32_t>(conjugates.size()); }
  bool is_normal_class() const { return conjugates.size() == 1; }
};

struct SubgroupClassSet {
  std::vector<SubgroupClass> classes;
  std::uint32_t total_count = 0;  // = sum of class sizes = subgroup count
};

struct PrimeSignature {
  std::vector<std::uint32_t> primes;     // sorted prime divisors
  std::vector<std::uint32_t> exponents;  // matching multiplicities
  std::uint64_t odd_part = 1;
  bool odd_part_squarefree = true;

  std::uint32_t pi_count() const { return static_cast<std::uint32_t>(primes.size()); }
  std::uint32_t exponent_of(std::uint32_t p) const {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (primes[i] == p) return exponents[i];
    return 0;
  }
};

inline PrimeSignature prime_signature_of(std::uint64_t n) {
  assert(n >= 1);
  PrimeSignature sig;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    sig.primes.push_back(static_cast<std::uint32_t>(p));
    sig.exponents.push_back(e);
  }
  if (m > 1) {
    sig.primes.push_back(static_cast<std::uint32_t>(m));
    sig.exponents.push_back(1);
  }
  sig.odd_part = n;
  while (sig.odd_part % 2 == 0) sig.odd_part /= 2;
  for (std::size_t i = 0; i < sig.primes.size(); ++i)
    if (sig.primes[i] != 2 && sig.exponents[i] > 1) sig.odd_part_squarefree = false;
  return sig;
}

inline PrimeSignature prime_signature(const GroupTable& g) { return prime_signature_of(g.order); }

namespace detail {

// Greedy small generating set of a subgroup given by sorted members.
inline std::vector<std::uint32_t> greedy_generators(const GroupTable& g,
                                                    const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint64_t> have(mask_words(g.order), 0);
  mask_set(have, 0);
  std::uint32_t covered = 1;
  for (auto m : members) {
    if (mask_test(have, m)) continue;
    gens.push_back(m);
    const auto closed = close_subset(g, gens);
    std::fill(have.begin(), have.end(), 0);
    for (auto x : closed) mask_set(have, x);
    covered = static_cast<std::uint32_t>(closed.size());
    if (covered == members.size()) break;
  }
  assert(covered == members.size());
  return gens;
}

inline ElementId pow_element(const GroupTable& g, ElementId x, std::uint32_t e) {
  ElementId r = 0;
  for (std::uint32_t i = 0; i < e; ++i) r = g.mul(r, x);
  return r;
}

}  // namespace detail

inline Subgroup normalizer(const GroupTable& g, const Subgroup& h) {
  assert(h.owner == &g);
  const auto gens = detail::greedy_generators(g, h.members);
  std::vector<std::uint32_t> members;
  for (ElementId x = 0; x < g.order; ++x) {
    bool fixes = true;
    for (auto hg : gens) {
      if (!h.contains(g.conj(hg, x))) {
        fixes = false;
        break;
      }
    }
    if (fixes) members.push_back(x);
  }
  return make_subgroup(g, std::move(members));
}

// Complete subgroup lattice: seed with all cyclic subgroups, then close
// under joins with cyclic subgroups until fixpoint.  Joins are computed
// from small generator lists kept alongside each subgroup, so a join
// costs O(result · generators).
inline std::vector<Subgroup> all_subgroups(const GroupTable& g, const Caps& caps = {}) {
  if (g.order > caps.lattice_order)
    throw CapExceeded("subgroup lattice requested for order " + std::to_string(g.order) +
                      ", above the lattice cap of " + std::to_string(caps.lattice_order));
  std::vector<std::vector<std::uint32_t>> memberships;  // sorted member lists
  std::vector<std::vector<std::uint32_t>> genlists;
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, detail::MaskHash> index;

  auto add = [&](std::vector<std::uint32_t> members, std::vector<std::uint32_t> gens) {
    std::vector<std::uint64_t> mask(detail::mask_words(g.order), 0);
    for (auto m : members) detail::mask_set(mask, m);
    auto [it, inserted] = index.emplace(std::move(mask), static_cast<std::uint32_t>(memberships.size()));
    if (inserted) {
      memberships.push_back(std::move(members));
      genlists.push_back(std::move(gens));
    }
    return inserted;
  };

  add({0}, {});
  // One generator per distinct cyclic subgroup; the least generator wins.
  std::vector<std::uint32_t> cyclic_gens;
  for (ElementId x = 1; x < g.order; ++x) {
    auto members = close_subset(g, {x});
    if (add(std::move(members), {x})) cyclic_gens.push_back(x);
  }
  for (std::size_t i = 0; i < memberships.size(); ++i) {
    for (auto x : cyclic_gens) {
      if (std::binary_search(memberships[i].begin(), memberships[i].end(), x)) continue;
      auto joined_gens = genlists[i];
      joined_gens.push_back(x);
      auto members = close_subset(g, joined_gens);
      add(std::move(members), std::move(joined_gens));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(memberships.size());
  for (auto& members : memberships) out.push_back(make_subgroup(g, std::move(members)));
  return out;
}

inline SubgroupClassSet subgroup_classes(const GroupTable& g, const std::vector<Subgroup>& subs) {
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, detail::MaskHash> index;
  for (std::uint32_t i = 0; i < subs.size(); ++i) index.emplace(subs[i].mask, i);
  const auto actors = g.acting_set();
  std::vector<char> seen(subs.size(), 0);
  SubgroupClassSet out;
  out.total_count = static_cast<std::uint32_t>(subs.size());
  for (std::uint32_t i = 0; i < subs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> orbit{i};
    seen[i] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const auto& cur = subs[orbit[k]];
      for (auto x : actors) {
        std::vector<std::uint32_t> conj_members;
        conj_members.reserve(cur.members.size());
        for (auto m : cur.members) conj_members.push_back(g.conj(m, x));
        std::sort(conj_members.begin(), conj_members.end());
        std::vector<std::uint64_t> mask(detail::mask_words(g.order), 0);
        for (auto m : conj_members) detail::mask_set(mask, m);
        const auto it = index.find(mask);
        assert(it != index.end());
        if (!seen[it->second]) {
          seen[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    }
    SubgroupClass cls;
    std::uint32_t best = orbit.front();
    for (auto j : orbit)
      if (subs[j].members < subs[best].members) best = j;
    cls.representative = subs[best];
    for (auto j : orbit) cls.conjugates.push_back(subs[j]);
    assert(cls.conjugates.size() == g.order / normalizer(g, cls.representative).order());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

inline SubgroupClassSet subgroup_classes(const GroupTable& g, const Caps& caps = {}) {
  return subgroup_classes(g, all_subgroups(g, caps));
}

// Sylow p-subgroup by normalizer growth: while |S| is short of the full
// p-part, N_G(S)/S has order divisible by p, so some g ∈ N_G(S) ∖ S has
// g^p ∈ S and ⟨S, g⟩ is a p-subgroup p times larger.
inline Subgroup sylow(const GroupTable& g, std::uint32_t p) {
  const auto sig = prime_signature(g);
  std::uint32_t target = 1;
  for (std::uint32_t i = 0; i < sig.primes.size(); ++i)
    if (sig.primes[i] == p)
      for (std::uint32_t e = 0; e < sig.exponents[i]; ++e) target *= p;
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    const Subgroup n = normalizer(g, s);
    bool grown = false;
    for (auto x : n.members) {
      if (s.contains(x)) continue;
      if (!s.contains(detail::pow_element(g, x, p))) continue;
      auto gens = detail::greedy_generators(g, s.members);
      gens.push_back(x);
      s = generated_subgroup(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("sylow growth stalled below the full p-part");
  }
  return s;
}

// Largest normal 2-subgroup: the intersection of all conjugates of a
// Sylow 2-subgroup.
inline Subgroup core_o2(const GroupTable& g) {
  const Subgroup s = sylow(g, 2);
  std::vector<std::uint64_t> core = s.mask;
  std::vector<std::uint64_t> conj_mask(core.size());
  for (ElementId x = 1; x < g.order; ++x) {
    std::fill(conj_mask.begin(), conj_mask.end(), 0);
    for (auto m : s.members) detail::mask_set(conj_mask, g.conj(m, x));
    for (std::size_t w = 0; w < core.size(); ++w) core[w] &= conj_mask[w];
  }
  std::vector<std::uint32_t> members;
  for (ElementId x = 0; x < g.order; ++x)
    if (detail::mask_test(core, x)) members.push_back(x);
  Subgroup o2 = make_subgroup(g, std::move(members));
  assert((o2.order() & (o2.order() - 1)) == 0);
  for (auto x : g.acting_set())
    for (auto m : o2.members) assert(o2.contains(g.conj(m, x)));
  return o2;
}

// A Hall π-subgroup if the lattice holds one; empty when none exists,
// which is legitimate for non-solvable groups.
inline std::optional<Subgroup> hall_subgroup(const GroupTable& g,
                                             const std::vector<std::uint32_t>& pi,
                                             const Caps& caps = {}) {
  const auto sig = prime_signature(g);
  std::uint64_t target = 1;
  for (std::uint32_t i = 0; i < sig.primes.size(); ++i) {
    if (std::find(pi.begin(), pi.end(), sig.primes[i]) == pi.end()) continue;
    for (std::uint32_t e = 0; e < sig.exponents[i]; ++e) target *= sig.primes[i];
  }
  if (target == 1) return trivial_subgroup(g);
  if (target == g.order) return full_subgroup(g);
  auto subs = all_subgroups(g, caps);
  const Subgroup* best = nullptr;
  for (const auto& s : subs) {
    if (s.order() != target) continue;
    if (!best || s.members < best->members) best = &s;
  }
  if (!best) return std::nullopt;
  return *best;
}

// Classes of maximal proper subgroups.
inline SubgroupClassSet maximal_subgroups(const GroupTable& g, const Caps& caps = {}) {
  const auto subs = all_subgroups(g, caps);
  const auto classes = subgroup_classes(g, subs);
  SubgroupClassSet out;
  for (const auto& cls : classes.classes) {
    const Subgroup& s = cls.representative;
    if (s.is_full()) continue;
    bool maximal = true;
    for (const auto& t : subs) {
      if (t.order() <= s.order() || t.is_full()) continue;
      if (t.order() % s.order() != 0) continue;
      if (detail::mask_subset(s.mask, t.mask)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.classes.push_back(cls);
      out.total_count += cls.size();
    }
  }
  return out;
}

struct NormalsAndSocle {
  std::vector<Subgroup> normals;  // all normal subgroups, ascending order
  Subgroup socle;                 // join of the minimal normal subgroups
};

inline NormalsAndSocle normal_subgroups_and_socle(const GroupTable& g, const Caps& caps = {}) {
  const auto classes = subgroup_classes(g, all_subgroups(g, caps));
  NormalsAndSocle out;
  for (const auto& cls : classes.classes)
    if (cls.is_normal_class()) out.normals.push_back(cls.representative);
  std::sort(out.normals.begin(), out.normals.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.order() != b.order()) return a.order() < b.order();
              return a.members < b.members;
            });
  std::vector<std::uint32_t> socle_gens;
  for (const auto& n : out.normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const auto& m : out.normals) {
      if (m.is_trivial() || m.order() >= n.order()) continue;
      if (detail::mask_subset(m.mask, n.mask)) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      socle_gens.insert(socle_gens.end(), n.members.begin(), n.members.end());
  }
  out.socle = socle_gens.empty() ? trivial_subgroup(g) : generated_subgroup(g, socle_gens);
  return out;
}

}  // namespace perfcode
