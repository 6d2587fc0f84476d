#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfcode/catalog.hpp"
#include "perfcode/codes.hpp"

namespace perfcode {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline bool is_two_power_u64(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::uint64_t odd_part_u64(std::uint64_t n) {
  while (n && (n & 1) == 0) n >>= 1;
  return n;
}

// n = q^s for an odd prime q and s ≥ 1.
inline bool is_odd_prime_power(std::uint64_t n) {
  if (n < 3 || (n & 1) == 0) return false;
  std::uint64_t q = 0;
  for (std::uint64_t c = 3; c * c <= n; c += 2)
    if (n % c == 0) {
      q = c;
      break;
    }
  if (q == 0) return true;  // n itself prime
  while (n % q == 0) n /= q;
  return n == 1;
}

// n = q1·q2 for distinct primes q1 < q2.
inline bool is_product_of_two_distinct_primes(std::uint64_t n) {
  std::uint64_t q1 = 0;
  for (std::uint64_t c = 2; c * c <= n; ++c)
    if (n % c == 0) {
      q1 = c;
      break;
    }
  if (q1 == 0) return false;  // prime or 1
  const std::uint64_t rest = n / q1;
  return rest != q1 && rest % q1 != 0 && is_prime_u64(rest);
}

inline bool is_cyclic_table(const GroupTable& g) {
  for (ElementId x = 0; x < g.order; ++x)
    if (g.element_order(x) == g.order) return true;
  return false;
}

inline bool is_cyclic_subgroup(const GroupTable& g, const Subgroup& h) {
  for (auto m : h.members)
    if (g.element_order(m) == h.order()) return true;
  return false;
}

// Socle via normal closures of element conjugacy classes: every minimal
// normal subgroup is the closure of any of its nonidentity classes, so
// the minimal elements of the closure family are exactly the minimal
// normal subgroups.
inline Subgroup socle_fast(const GroupTable& g) {
  if (g.order == 1) return trivial_subgroup(g);
  const auto part = conjugacy_classes_elements(g);
  std::vector<std::vector<ElementId>> closures;
  std::vector<std::vector<std::uint64_t>> masks;
  for (const auto& cls : part.classes) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    auto members = close_subset(g, cls);
    std::vector<std::uint64_t> mask(mask_words(g.order), 0);
    for (auto m : members) mask_set(mask, m);
    bool dup = false;
    for (const auto& known : masks)
      if (known == mask) {
        dup = true;
        break;
      }
    if (!dup) {
      closures.push_back(std::move(members));
      masks.push_back(std::move(mask));
    }
  }
  std::vector<ElementId> seeds;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < closures.size(); ++j) {
      if (j == i || closures[j].size() >= closures[i].size()) continue;
      if (mask_subset(masks[j], masks[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      for (auto m : closures[i]) seeds.push_back(m);
  }
  if (seeds.empty()) return trivial_subgroup(g);
  return make_subgroup(g, close_subset(g, seeds));
}

inline std::optional<std::string> reference_quotient_spec(std::uint64_t order) {
  switch (order) {
    case 60: return "psl2:5";
    case 120: return "pgl2:5";
    case 336: return "pgl2:7";
    case 720: return "pgl2:9";
    case 2448: return "psl2:17";
    case 4896: return "pgl2:17";
    default: return std::nullopt;
  }
}

}  // namespace detail

// Per-group analysis shared by the theorem checkers and the reports.
struct GroupAnalysis {
  PrimeSignature sig;
  DeltaReport delta_report;
  bool solvable = true;
  ShapeTag group_shape;
  ShapeTag sylow2_shape;
  std::uint32_t o2_order = 1;
  std::uint32_t involution_classes = 0;
};

inline GroupAnalysis analyze_group(const GroupTable& g, const Caps& caps = {},
                                   bool audit = false) {
  GroupAnalysis a;
  a.sig = prime_signature(g);
  a.delta_report = delta(g, caps, audit);
  a.solvable = is_solvable(g);
  a.group_shape = recognize_shape(g);
  a.sylow2_shape = recognize_shape(subgroup_table(g, sylow(g, 2)));
  a.o2_order = core_o2(g).order();
  a.involution_classes = conjugacy_classes_elements(g).involution_class_count(g);
  return a;
}

// ---------------------------------------------------------------------------
// Empty delta: for composite order, Δ(G) = ∅ ⟺ G is a cyclic or
// generalized quaternion 2-group ⟺ G is a 2-group with a unique
// involution.

inline CheckResult check_empty_delta(const GroupTable& g, const GroupAnalysis& a,
                                     const Caps& = {}) {
  const std::string name = "empty-delta";
  if (g.order == 1 || detail::is_prime_u32(g.order))
    return check_na(name, "order " + std::to_string(g.order) +
                              " is 1 or prime; there are no nontrivial proper subgroups");
  const bool empty = a.delta_report.delta_count == 0;
  const bool two_group = a.sig.primes.size() == 1 && a.sig.primes[0] == 2;
  const bool shape_ok = two_group && (a.group_shape.is_cyclic() ||
                                      a.group_shape.is_generalized_quaternion());
  std::uint32_t involutions = 0;
  for (ElementId x = 1; x < g.order; ++x)
    if (g.mul(x, x) == 0) ++involutions;
  const bool unique_inv = two_group && involutions == 1;
  const std::string desc = "delta_count=" + std::to_string(a.delta_report.delta_count) +
                           " shape=" + a.group_shape.to_string() +
                           " involutions=" + std::to_string(involutions);
  if (empty == shape_ok && shape_ok == unique_inv) return check_pass(name, desc);
  return check_fail(name, g.name + ": " + desc,
                    "emptiness, shape, and unique-involution conditions disagree");
}

// ---------------------------------------------------------------------------
// Lower bound |Δ(G)| ≥ |π(G)| outside three exceptional families, with
// the equality case classified by six shapes.

namespace detail {

inline std::string equality_row_match(const GroupTable& g, const GroupAnalysis& a,
                                      const Caps& caps) {
  const auto& sig = a.sig;
  if (sig.primes.size() == 1 && sig.primes[0] >= 3 && sig.exponents[0] == 2 &&
      a.group_shape.is_cyclic())
    return "Z_{p^2}";
  if (sig.primes.size() == 2 && sig.primes[0] >= 3 && sig.exponents[0] == 1 &&
      sig.exponents[1] == 1)
    return "Z_q:Z_p";
  if (sig.primes.size() == 2 && sig.primes[0] == 2 && sig.exponents[1] == 1) {
    if (normalizer(g, sylow(g, sig.primes[1])).order() == g.order) {
      if (a.sylow2_shape.is_generalized_quaternion()) return "Z_p:Q_{2^n}";
      if (a.sylow2_shape.is_cyclic()) return "Z_p:Z_{2^n}";
    }
  }
  if (g.order == 24 && a.sylow2_shape.is_generalized_quaternion() &&
      normalizer(g, sylow(g, 2)).order() == 24)
    return "Q_8:Z_3";
  if (g.order == 48 && a.sylow2_shape.is_generalized_quaternion() &&
      a.sylow2_shape.order == 16) {
    const GroupTable ref = build("sl2:3", caps);
    for (const auto& s : all_subgroups(g, caps)) {
      if (s.order() != 24) continue;
      if (bounded_isomorphic(subgroup_table(g, s), ref).isomorphic) return "SL(2,3).Z_2";
    }
  }
  return "";
}

}  // namespace detail

inline CheckResult check_main_theorem(const GroupTable& g, const GroupAnalysis& a,
                                      const Caps& caps = {}) {
  const std::string name = "main-theorem";
  const std::uint32_t dn = a.delta_report.delta_count;
  const std::uint32_t pn = a.sig.pi_count();
  const bool two_group = a.sig.primes.size() == 1 && a.sig.primes[0] == 2;
  const bool exceptional =
      (g.order > 1 && detail::is_prime_u32(g.order)) ||
      (two_group && (a.group_shape.is_cyclic() || a.group_shape.is_generalized_quaternion()));
  if (dn < pn && !exceptional)
    return check_fail(name,
                      g.name + ": delta_count " + std::to_string(dn) + " < pi_count " +
                          std::to_string(pn),
                      "lower bound fails outside the three exceptional families");
  if (dn == pn && pn >= 1) {
    const std::string row = detail::equality_row_match(g, a, caps);
    if (row.empty())
      return check_fail(name, g.name + ": equality delta_count = pi_count = " +
                                  std::to_string(pn) + " without a classified shape",
                        "equality case must match one of the six classified rows");
    return check_pass(name, "equality via row " + row);
  }
  if (dn < pn) return check_pass(name, "exceptional family " + a.group_shape.to_string());
  return check_pass(name, "strict inequality " + std::to_string(dn) + " > " +
                              std::to_string(pn));
}

// ---------------------------------------------------------------------------
// Classification of |Δ(G)| = |π(G)| + 1.

inline CheckResult check_pi_plus_one(const GroupTable& g, const GroupAnalysis& a,
                                     const Caps& caps = {}) {
  const std::string name = "pi-plus-one";
  const std::uint32_t dn = a.delta_report.delta_count;
  const std::uint32_t pn = a.sig.pi_count();
  if (dn != pn + 1)
    return check_na(name, "delta_count " + std::to_string(dn) + " is not pi_count + 1");
  const Subgroup o2 = core_o2(g);
  if (!a.solvable) {
    std::string why;
    if (!a.sylow2_shape.is_generalized_quaternion())
      why = "Sylow 2-subgroup is " + a.sylow2_shape.to_string() +
            ", not generalized quaternion";
    else if (o2.order() <= 1)
      why = "maximal normal 2-subgroup is trivial";
    else if (!detail::is_cyclic_subgroup(g, o2))
      why = "maximal normal 2-subgroup is not cyclic";
    std::string note;
    if (why.empty()) {
      const auto qr = quotient(g, o2);
      static constexpr std::uint64_t allowed[] = {60,   120,  336,        720,
                                                  2448, 4896, 8487168ull, 16974336ull};
      bool order_ok = false;
      for (auto v : allowed) order_ok |= (qr.group.order == v);
      if (!order_ok) {
        why = "quotient order " + std::to_string(qr.group.order) +
              " is not a classified quotient order";
      } else {
        const auto ref_spec = detail::reference_quotient_spec(qr.group.order);
        if (qr.group.order <= 256) {
          assert(ref_spec);
          const GroupTable ref = build(*ref_spec, caps);
          if (!bounded_isomorphic(qr.group, ref).isomorphic)
            why = "quotient of order " + std::to_string(qr.group.order) +
                  " is not isomorphic to the classified quotient";
        } else if (ref_spec) {
          const GroupTable ref = build(*ref_spec, caps);
          const Subgroup soc = detail::socle_fast(qr.group);
          const GroupTable soc_tab = subgroup_table(qr.group, soc);
          const bool soc_simple = !soc_tab.is_abelian() &&
                                  detail::socle_fast(soc_tab).order() == soc_tab.order;
          if (!soc_simple)
            why = "socle of the quotient is not nonabelian simple";
          else if (!bounded_isomorphic(qr.group, ref).isomorphic)
            why = "quotient fingerprint differs from the classified quotient";
          else
            note = " (fingerprint confidence)";
        }
      }
    }
    if (!why.empty())
      return check_fail(name, g.name + ": " + why,
                        "non-solvable case requires quaternion Sylow 2-subgroup, nontrivial "
                        "cyclic maximal normal 2-subgroup, and a classified quotient");
    return check_pass(name, "non-solvable: quaternion Sylow 2-subgroup, cyclic maximal "
                            "normal 2-subgroup of order " +
                                std::to_string(o2.order()) + ", classified quotient" + note);
  }
  // Solvable shapes.
  if (a.sig.primes.size() == 1 && a.sig.primes[0] >= 3 && a.sig.exponents[0] == 3 &&
      a.group_shape.is_cyclic())
    return check_pass(name, "solvable shape Z_{p^3}, p = " + std::to_string(a.sig.primes[0]));
  if (a.sig.primes.size() == 1 && a.sig.primes[0] == 2) {
    const Subgroup ctr = center(g);
    if (detail::is_cyclic_subgroup(g, ctr) && a.involution_classes == 2)
      return check_pass(name, "solvable shape: 2-group with cyclic center and exactly two "
                              "involution classes");
    return check_fail(name,
                      g.name + ": 2-group with center order " + std::to_string(ctr.order()) +
                          " and " + std::to_string(a.involution_classes) +
                          " involution classes",
                      "2-group case requires a cyclic center and exactly two involution "
                      "classes");
  }
  if (a.sig.primes.size() == 2 && a.sig.primes[0] == 2 && a.sig.exponents[1] <= 2 &&
      a.involution_classes == 1) {
    const std::uint32_t p = a.sig.primes[1];
    const std::uint32_t rank = a.sig.exponents[1];
    const auto qr = quotient(g, o2);
    const GroupTable& qt = qr.group;
    const Subgroup sp = sylow(qt, p);
    std::uint32_t target = 1;
    for (std::uint32_t i = 0; i < rank; ++i) target *= p;
    bool ok = sp.order() == target && normalizer(qt, sp).order() == qt.order;
    if (ok)
      for (auto m : sp.members)
        if (detail::pow_element(qt, m, p) != 0) ok = false;
    if (ok && rank == 2 && !a.sylow2_shape.cyclic_or_quaternion()) ok = false;
    if (ok && qt.order / sp.order() <= 256) {
      // The complement is automatically the Sylow 2-image; verify the
      // isomorphism explicitly at small orders.
      const auto comp = quotient(qt, sp);
      const Subgroup p2 = sylow(g, 2);
      const GroupTable p2_tab = subgroup_table(g, p2);
      const Subgroup o2_in_p2 = relocate_subgroup(g, p2, p2_tab, o2);
      const auto p_quot = quotient(p2_tab, o2_in_p2);
      if (!bounded_isomorphic(comp.group, p_quot.group).isomorphic) ok = false;
    }
    if (ok)
      return check_pass(name, "solvable shape: quotient by the maximal normal 2-subgroup is "
                              "an elementary abelian rank-" +
                                  std::to_string(rank) + " Sylow " + std::to_string(p) +
                                  "-subgroup extended by the Sylow 2-image");
  }
  return check_fail(name, g.name + ": no solvable shape matches",
                    "solvable case must be Z_{p^3}, a two-involution-class 2-group with "
                    "cyclic center, or a 2^n p^a group with normal elementary abelian "
                    "Sylow p-image and a single involution class");
}

// ---------------------------------------------------------------------------
// Solvable lower bound |Δ(G)| ≥ 2^{|π(G)|} − 2 with classified equality.

inline CheckResult check_solvable_bound(const GroupTable& g, const GroupAnalysis& a,
                                        const Caps& = {}) {
  const std::string name = "solvable-bound";
  if (!a.solvable) return check_na(name, "group is not solvable");
  if (g.order == 1) return check_na(name, "trivial group has no nontrivial subgroups");
  const std::int64_t bound = (std::int64_t(1) << a.sig.pi_count()) - 2;
  const std::int64_t dn = a.delta_report.delta_count;
  if (dn < bound)
    return check_fail(name,
                      g.name + ": delta_count " + std::to_string(dn) + " < 2^pi - 2 = " +
                          std::to_string(bound),
                      "solvable lower bound violated");
  const bool equality = dn == bound;
  const bool shape_ok = a.sig.odd_part_squarefree && a.sylow2_shape.cyclic_or_quaternion();
  if (equality != shape_ok)
    return check_fail(name,
                      g.name + ": equality=" + (equality ? "yes" : "no") +
                          " but squarefree-odd-part with cyclic/quaternion Sylow 2 is " +
                          (shape_ok ? "present" : "absent"),
                      "equality must hold exactly for squarefree odd part with cyclic or "
                      "generalized quaternion Sylow 2-subgroup");
  return check_pass(name, equality ? "equality at 2^pi - 2 = " + std::to_string(bound)
                                   : "strict inequality " + std::to_string(dn) + " > " +
                                         std::to_string(bound));
}

// ---------------------------------------------------------------------------
// Small-delta screens: solvability forced below 4 classes, the
// five-prime non-solvable floor, and the socle catalogue for
// non-solvable groups with at most six classes.

namespace detail {

inline bool allowed_small_delta_socle_order(std::uint64_t s) {
  for (std::uint64_t v : {60ull, 168ull, 360ull, 2448ull, 29120ull})
    if (s == v) return true;
  for (std::uint64_t p = 3; p * (p * p - 1) / 2 <= s; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (p * (p * p - 1) / 2 == s &&
        is_product_of_two_distinct_primes(odd_part_u64(p * p - 1)))
      return true;
  }
  return false;
}

}  // namespace detail

inline CheckResult check_small_delta(const GroupTable& g, const GroupAnalysis& a,
                                     const Caps& = {}) {
  const std::string name = "small-delta";
  const std::uint32_t dn = a.delta_report.delta_count;
  const std::uint32_t pn = a.sig.pi_count();
  std::vector<std::string> triggered;
  std::string why;
  if (dn <= 3) {
    triggered.push_back("delta<=3");
    if (!a.solvable || pn > 2)
      why = "delta_count " + std::to_string(dn) + " forces solvable with pi_count <= 2, got " +
            (a.solvable ? "solvable" : "non-solvable") + " with pi_count " +
            std::to_string(pn);
  }
  if (why.empty() && !a.solvable && pn == 5) {
    triggered.push_back("five-primes");
    if (dn < 7)
      why = "non-solvable with five primes requires delta_count >= 7, got " +
            std::to_string(dn);
  }
  if (why.empty() && !a.solvable && dn <= 6) {
    triggered.push_back("nonsolvable-delta<=6");
    const auto qr = quotient(g, core_o2(g));
    const Subgroup soc = detail::socle_fast(qr.group);
    if (!detail::allowed_small_delta_socle_order(soc.order()))
      why = "socle of the quotient by the maximal normal 2-subgroup has order " +
            std::to_string(soc.order()) + ", outside the classified socle orders";
  }
  if (!why.empty()) return check_fail(name, g.name + ": " + why, "small-delta screen failed");
  if (triggered.empty()) return check_pass(name, "screens not triggered");
  std::string desc = "screens passed:";
  for (const auto& t : triggered) desc += " " + t;
  return check_pass(name, desc);
}

// ---------------------------------------------------------------------------
// Generalized quaternion normal structure: every nontrivial normal
// subgroup with noncyclic quotient is cyclic.

inline CheckResult check_observation_quaternion(std::uint32_t n_max, const Caps& caps = {}) {
  const std::string name = "quaternion-normal-structure";
  if (n_max < 3) throw InvalidRange("n_max must be at least 3");
  std::uint32_t scanned = 0;
  for (std::uint32_t n = 3; n <= n_max; ++n) {
    const GroupTable q = make_family("quaternion", {std::uint64_t(1) << n}, caps);
    for (const auto& s : all_subgroups(q, caps)) {
      if (s.order() <= 1) continue;
      if (normalizer(q, s).order() != q.order) continue;
      const auto qt = quotient(q, s);
      if (detail::is_cyclic_table(qt.group)) continue;
      if (!detail::is_cyclic_subgroup(q, s))
        return check_fail(name,
                          q.name + ": noncyclic normal subgroup of order " +
                              std::to_string(s.order()) + " with noncyclic quotient",
                          "normal subgroups with noncyclic quotient must be cyclic");
      ++scanned;
    }
  }
  return check_pass(name, "checked " + std::to_string(scanned) +
                              " normal subgroups with noncyclic quotient across orders 8..2^" +
                              std::to_string(n_max));
}

// ---------------------------------------------------------------------------
// Number-theoretic scans backing the classification's arithmetic steps.

inline std::array<CheckResult, 3> lemma_scans(std::uint32_t m_max, std::uint64_t p_max) {
  if (m_max < 2 || m_max > 62) throw InvalidRange("m_max must be in [2, 62]");
  if (p_max < 5 || p_max > 100000000ull) throw InvalidRange("p_max must be in [5, 10^8]");
  std::array<CheckResult, 3> out;
  {
    std::vector<std::uint32_t> sols;
    for (std::uint32_t m = 2; m <= m_max; ++m) {
      const std::uint64_t big = (std::uint64_t(1) << m) + 1;
      const std::uint64_t small = (std::uint64_t(1) << (m - 1)) + 1;
      if (detail::is_prime_u64(big) && detail::is_prime_u64(small)) sols.push_back(m);
    }
    std::string set = "{";
    for (std::size_t i = 0; i < sols.size(); ++i)
      set += (i ? "," : "") + std::to_string(sols[i]);
    set += "}";
    if (sols == std::vector<std::uint32_t>{2})
      out[0] = check_pass("adjacent-fermat-exponents",
                          "exponents with 2^m+1 and 2^{m-1}+1 both prime up to " +
                              std::to_string(m_max) + ": " + set);
    else
      out[0] = check_fail("adjacent-fermat-exponents", "solution set " + set,
                          "expected exactly {2}");
  }
  std::vector<char> sieve(p_max + 1, 1);
  sieve[0] = 0;
  if (p_max >= 1) sieve[1] = 0;
  for (std::uint64_t i = 2; i * i <= p_max; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j <= p_max; j += i) sieve[j] = 0;
  {
    std::vector<std::uint64_t> bad;
    for (std::uint64_t p = 5; p <= p_max; p += 2) {
      if (!sieve[p]) continue;
      const std::uint64_t sq = p * p;
      if (detail::is_two_power_u64(sq - 1) || detail::is_two_power_u64(sq + 1)) bad.push_back(p);
    }
    if (bad.empty())
      out[1] = check_pass("square-neighbor-two-powers",
                          "no prime p in [5, " + std::to_string(p_max) +
                              "] has p^2-1 or p^2+1 equal to a power of 2");
    else
      out[1] = check_fail("square-neighbor-two-powers",
                          "counterexample p = " + std::to_string(bad.front()),
                          "p^2±1 must never be a power of 2 for primes >= 5");
  }
  {
    std::vector<std::uint64_t> sols1, sols2;
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
      if (!sieve[p]) continue;
      if (detail::is_two_power_u64(p + 1) && detail::is_odd_prime_power((p - 1) / 2))
        sols1.push_back(p);
      if (detail::is_two_power_u64(p - 1) && detail::is_odd_prime_power((p + 1) / 2))
        sols2.push_back(p);
    }
    auto show = [](const std::vector<std::uint64_t>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "}";
    };
    if (sols1 == std::vector<std::uint64_t>{7} && sols2 == std::vector<std::uint64_t>{5, 17})
      out[2] = check_pass("near-two-power-primes",
                          "2-power neighbor with odd-prime-power half: " + show(sols1) +
                              " and " + show(sols2));
    else
      out[2] = check_fail("near-two-power-primes",
                          "solution sets " + show(sols1) + " and " + show(sols2),
                          "expected {7} and {5,17}");
  }
  return out;
}

// Spec-signature conveniences computing the analysis on demand.
inline CheckResult check_empty_delta(const GroupTable& g, const Caps& caps = {}) {
  return check_empty_delta(g, analyze_group(g, caps), caps);
}
inline CheckResult check_main_theorem(const GroupTable& g, const Caps& caps = {}) {
  return check_main_theorem(g, analyze_group(g, caps), caps);
}
inline CheckResult check_pi_plus_one(const GroupTable& g, const Caps& caps = {}) {
  return check_pi_plus_one(g, analyze_group(g, caps), caps);
}
inline CheckResult check_solvable_bound(const GroupTable& g, const Caps& caps = {}) {
  return check_solvable_bound(g, analyze_group(g, caps), caps);
}
inline CheckResult check_small_delta(const GroupTable& g, const Caps& caps = {}) {
  return check_small_delta(g, analyze_group(g, caps), caps);
}

}  // namespace perfcode
