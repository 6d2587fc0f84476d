#pragma once

// A large-group computation that does not fit the dense-table pipeline:
// the double cover 2.PGL(2,23) of order 24288 = 2^5 * 3 * 11 * 23.
//
// The group is realized inside SL(2, 529) as
//
//     G = < [[1,1],[0,1]], [[0,1],[-1,0]], diag(t^-1, t) >,
//
// where t is a square root of 5 in GF(529) (5 is a nonsquare mod 23, so
// t generates the quadratic extension).  The first two matrices generate
// SL(2,23) embedded via the prime field; the diagonal matrix D satisfies
// D^2 = diag(5^-1, 5) which lies in SL(2,23), so [G : SL(2,23)] = 2 and
// |G| = 2 * 12144 = 24288.  Scalars in G form Z(G) = {I, -I}: G/{±I} is
// the subgroup of PGL(2,529) generated by PSL(2,23) and the images of
// diag(t^-1,t) ~ diag(1,5) and [[0,1],[-1,0]], i.e. PGL(2,23) acting on
// the projective line over GF(23) (diag(1,5) is a nonsquare scalar twist).
//
// Every matrix in G has determinant 1, and the only involution in SL of
// any field of odd characteristic is -I; hence G has a unique involution,
// its Sylow 2-subgroups (order 32) are generalized quaternion, and the
// extension does not split (a direct factor Z_2 x PGL(2,23) would have
// more involutions).
//
// Because the Sylow 2-subgroup is generalized quaternion, a subgroup is a
// perfect code in some Cayley graph of G if and only if it has odd order
// or odd index (the cyclic/generalized-quaternion Sylow criterion, the
// same fact behind `sylow_code_criterion` in codes.hpp).  The class count
// is therefore computed from two restricted enumerations instead of the
// full subgroup lattice:
//
//   * odd-order subgroup classes: a join fixpoint over the odd-order
//     cyclic subgroups (every odd subgroup is generated by its odd cyclic
//     subgroups; joins that close to an even order or blow past the odd
//     part 759 are discarded by Lagrange);
//   * odd-index subgroup classes: a join fixpoint starting from one fixed
//     Sylow 2-subgroup P (every odd-index subgroup contains a conjugate
//     of P, and any proper overgroup chain P < ... < U can be climbed by
//     adjoining one odd-order element at a time: if a proper V < U with
//     P <= V contained every odd-order element of U, then the subgroup
//     generated by those elements would be normal in U with a 2-group
//     quotient, forcing U = <odd elements of U, P> <= V, a contradiction).
//     Proper odd-index orders divide 32 * 253, which caps the closures.
//
// Conjugacy de-duplication is exact: each discovered subgroup's full
// G-orbit under conjugation is enumerated and memoized.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "perfcode/catalog.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/lattice.hpp"

namespace perfcode {

namespace stretch_detail {

// Row-major 2x2 matrix with entries in GF(529), stored as field-element ids.
using Mat = std::array<std::uint16_t, 4>;

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto v : m) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// The group 2.PGL(2,23), with elements addressed by dense ids assigned in
// breadth-first discovery order (identity = 0).  No multiplication table
// is materialized; products go through the GF(529) field tables plus one
// hash lookup.
class DoubleCoverPGL223 {
 public:
  DoubleCoverPGL223() : f_(detail::make_field(529)) {
    const std::uint16_t one = 1;
    const std::uint16_t theta = 23;  // the polynomial x, a square root of 5
    if (f_.mul(theta, theta) != 5) throw InternalError("GF(529) generator is not a square root of 5");
    const Mat ident{one, 0, 0, one};
    const Mat unipotent{one, one, 0, one};
    const Mat weyl{0, one, static_cast<std::uint16_t>(f_.neg(one)), 0};
    const Mat torus{static_cast<std::uint16_t>(f_.inv(theta)), 0, 0, theta};
    for (const Mat& m : {unipotent, weyl, torus}) {
      if (det(m) != 1) throw InternalError("double-cover generator is not in SL(2,529)");
    }
    elems_.push_back(ident);
    index_.emplace(ident, 0);
    std::vector<std::uint32_t> frontier{0};
    const std::array<Mat, 3> gens{unipotent, weyl, torus};
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (const std::uint32_t a : frontier) {
        for (const Mat& gmat : gens) {
          const Mat prod = mat_mul(elems_[a], gmat);
          auto [it, inserted] = index_.emplace(prod, static_cast<std::uint32_t>(elems_.size()));
          if (inserted) {
            elems_.push_back(prod);
            next.push_back(it->second);
          }
        }
      }
      frontier = std::move(next);
    }
    if (elems_.size() != 24288) {
      throw InternalError("double cover of PGL(2,23) has order " + std::to_string(elems_.size()) +
                          ", expected 24288");
    }
    for (const Mat& gmat : gens) gen_ids_.push_back(index_.at(gmat));
  }

  std::uint32_t order() const { return static_cast<std::uint32_t>(elems_.size()); }
  const std::vector<std::uint32_t>& generators() const { return gen_ids_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return index_.at(mat_mul(elems_[a], elems_[b]));
  }

  // Determinant-1 inverse: adjugate.
  std::uint32_t inv(std::uint32_t a) const {
    const Mat& m = elems_[a];
    return index_.at(Mat{m[3], static_cast<std::uint16_t>(f_.neg(m[1])),
                         static_cast<std::uint16_t>(f_.neg(m[2])), m[0]});
  }

  // h conjugated by x: x^-1 h x.
  std::uint32_t conj(std::uint32_t h, std::uint32_t x) const { return mul(mul(inv(x), h), x); }

  std::uint32_t element_order(std::uint32_t a) const {
    std::uint32_t y = a, n = 1;
    while (y != 0) {
      y = mul(y, a);
      ++n;
      if (n > order()) throw InternalError("element order runaway in double cover");
    }
    return n;
  }

 private:
  detail::FieldTable f_;
  std::vector<Mat> elems_;
  std::unordered_map<Mat, std::uint32_t, MatHash> index_;
  std::vector<std::uint32_t> gen_ids_;

  Mat mat_mul(const Mat& x, const Mat& y) const {
    return Mat{
        static_cast<std::uint16_t>(f_.add(f_.mul(x[0], y[0]), f_.mul(x[1], y[2]))),
        static_cast<std::uint16_t>(f_.add(f_.mul(x[0], y[1]), f_.mul(x[1], y[3]))),
        static_cast<std::uint16_t>(f_.add(f_.mul(x[2], y[0]), f_.mul(x[3], y[2]))),
        static_cast<std::uint16_t>(f_.add(f_.mul(x[2], y[1]), f_.mul(x[3], y[3])))};
  }

  std::uint32_t det(const Mat& m) const {
    return f_.add(f_.mul(m[0], m[3]), f_.neg(f_.mul(m[1], m[2])));
  }
};

// Sorted member list of a subgroup, by element id.
using Members = std::vector<std::uint32_t>;

// Closure of `gens` under multiplication, aborted (nullopt) once the
// subgroup would exceed `cap` elements.
inline std::optional<Members> close_capped(const DoubleCoverPGL223& g,
                                           const std::vector<std::uint32_t>& gens,
                                           std::size_t cap) {
  std::set<std::uint32_t> seen{0};
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (const std::uint32_t a : frontier) {
      for (const std::uint32_t s : gens) {
        const std::uint32_t p = g.mul(a, s);
        if (seen.insert(p).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return Members(seen.begin(), seen.end());
}

// A subgroup together with a small generating set (kept small so that
// later joins stay cheap: closures cost |result| * |generators|).
struct TrackedSubgroup {
  Members members;
  std::vector<std::uint32_t> gens;
};

// Conjugacy-class registry with exact, orbit-based de-duplication: adding
// a subgroup walks its whole conjugation orbit under the group generators
// and memoizes every conjugate, so a later conjugate is recognized in one
// lookup.
class ClassRegistry {
 public:
  // Returns the class id, and whether the subgroup was new.
  std::pair<std::size_t, bool> add(const DoubleCoverPGL223& g, const TrackedSubgroup& sub) {
    if (const auto it = class_of_.find(sub.members); it != class_of_.end()) {
      return {it->second, false};
    }
    const std::size_t cls = reps_.size();
    reps_.push_back(sub);
    std::uint64_t orbit = 0;
    std::vector<Members> frontier{sub.members};
    class_of_.emplace(sub.members, cls);
    while (!frontier.empty()) {
      std::vector<Members> next;
      for (const Members& m : frontier) {
        ++orbit;
        for (const std::uint32_t x : g.generators()) {
          Members c;
          c.reserve(m.size());
          for (const std::uint32_t h : m) c.push_back(g.conj(h, x));
          std::sort(c.begin(), c.end());
          if (class_of_.emplace(c, cls).second) next.push_back(std::move(c));
        }
      }
      frontier = std::move(next);
    }
    orbit_sizes_.push_back(orbit);
    return {cls, true};
  }

  bool contains(const Members& m) const { return class_of_.count(m) != 0; }
  const std::vector<TrackedSubgroup>& reps() const { return reps_; }
  std::uint64_t orbit_size(std::size_t cls) const { return orbit_sizes_[cls]; }

 private:
  std::map<Members, std::size_t> class_of_;
  std::vector<TrackedSubgroup> reps_;
  std::vector<std::uint64_t> orbit_sizes_;
};

}  // namespace stretch_detail

// One conjugacy class of subgroup perfect codes of the double cover.
struct StretchClass {
  std::uint64_t order = 0;       // subgroup order
  std::uint64_t class_size = 0;  // number of conjugates
  std::string shape;             // e.g. "Z_23", "Q_32", "Z_23:Z_11"
  std::string route;             // "odd-order" or "odd-index"
};

struct StretchReport {
  std::string group_name = "2.PGL(2,23)";
  std::uint64_t group_order = 0;
  std::uint32_t pi_count = 0;
  std::uint32_t delta_count = 0;
  std::vector<StretchClass> classes;  // sorted by (order, shape)
};

namespace stretch_detail {

inline std::string shape_name(const DoubleCoverPGL223& g, const Members& m) {
  const std::uint64_t n = m.size();
  std::uint32_t involutions = 0;
  bool cyclic = false;
  std::uint32_t max_order = 1;
  for (const std::uint32_t h : m) {
    if (h == 0) continue;
    const std::uint32_t o = g.element_order(h);
    max_order = std::max(max_order, o);
    if (o == 2) ++involutions;
    if (o == n) cyclic = true;
  }
  if (cyclic) return "Z_" + std::to_string(n);
  if ((n & (n - 1)) == 0 && involutions == 1) return "Q_" + std::to_string(n);
  if (involutions == 1 && max_order == n / 2) return "dicyclic_" + std::to_string(n);
  const auto sig = prime_signature_of(n);
  if (sig.pi_count() == 2 && sig.exponents[0] == 1 && sig.exponents[1] == 1) {
    // Nonabelian pq: the larger prime's Sylow subgroup is normal.
    return "Z_" + std::to_string(sig.primes[1]) + ":Z_" + std::to_string(sig.primes[0]);
  }
  return "nonabelian_" + std::to_string(n);
}

}  // namespace stretch_detail

// Computes the perfect-code class count of 2.PGL(2,23) via the odd-order /
// odd-index restriction described at the top of this header.
inline StretchReport stretch_delta() {
  using namespace stretch_detail;
  const DoubleCoverPGL223 g;

  // The odd/odd-index restriction requires a cyclic or generalized
  // quaternion Sylow 2-subgroup; verify the unique involution directly.
  std::uint32_t involution = 0, involution_count = 0;
  std::vector<std::uint32_t> orders(g.order());
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    orders[a] = g.element_order(a);
    if (orders[a] == 2) {
      involution = a;
      ++involution_count;
    }
  }
  if (involution_count != 1) {
    throw InternalError("double cover has " + std::to_string(involution_count) +
                        " involutions, expected exactly 1");
  }
  (void)involution;

  // Odd part of |G| = 24288 is 759 = 3 * 11 * 23; proper odd-index orders
  // divide 32 * 253.
  constexpr std::size_t kOddCap = 759;
  constexpr std::size_t kOddIndexCap = 32 * 253;

  // --- Odd-order classes: fixpoint over odd cyclic subgroups. ---
  std::set<Members> odd_cyclic_set;
  for (std::uint32_t a = 1; a < g.order(); ++a) {
    if (orders[a] % 2 == 0) continue;
    Members m;
    std::uint32_t y = a;
    m.push_back(0);
    while (y != 0) {
      m.push_back(y);
      y = g.mul(y, a);
    }
    std::sort(m.begin(), m.end());
    odd_cyclic_set.insert(std::move(m));
  }
  std::vector<TrackedSubgroup> odd_cyclic;
  odd_cyclic.reserve(odd_cyclic_set.size());
  for (const Members& m : odd_cyclic_set) {
    // Any member of maximal order generates (members are cyclic groups).
    std::uint32_t best = m[0];
    for (const std::uint32_t h : m) {
      if (orders[h] == m.size()) {
        best = h;
        break;
      }
    }
    odd_cyclic.push_back(TrackedSubgroup{m, {best}});
  }

  ClassRegistry odd_classes;
  std::vector<std::size_t> worklist;
  for (const TrackedSubgroup& c : odd_cyclic) {
    if (const auto [cls, fresh] = odd_classes.add(g, c); fresh) worklist.push_back(cls);
  }
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    const TrackedSubgroup rep = odd_classes.reps()[worklist[i]];
    for (const TrackedSubgroup& c : odd_cyclic) {
      if (std::includes(rep.members.begin(), rep.members.end(), c.members.begin(),
                        c.members.end())) {
        continue;
      }
      std::vector<std::uint32_t> gens = rep.gens;
      gens.insert(gens.end(), c.gens.begin(), c.gens.end());
      const auto joined = close_capped(g, gens, kOddCap);
      if (!joined || joined->size() % 2 == 0) continue;  // Lagrange discard
      if (odd_classes.contains(*joined)) continue;
      const auto [cls, fresh] = odd_classes.add(g, TrackedSubgroup{*joined, gens});
      if (fresh) worklist.push_back(cls);
    }
  }

  // --- Odd-index classes: overgroups of one Sylow 2-subgroup. ---
  // Seed: a cyclic 2-subgroup of maximal order, grown to full order 32 by
  // adjoining a normalizing 2-element.
  std::uint32_t seed = 0, seed_order = 1;
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    const std::uint32_t o = orders[a];
    if ((o & (o - 1)) == 0 && o > seed_order) {
      seed = a;
      seed_order = o;
    }
  }
  Members cyc2{0};
  for (std::uint32_t y = seed; y != 0; y = g.mul(y, seed)) cyc2.push_back(y);
  std::sort(cyc2.begin(), cyc2.end());
  TrackedSubgroup sylow2{cyc2, {seed}};
  while (sylow2.members.size() < 32) {
    bool grew = false;
    for (std::uint32_t a = 1; a < g.order() && !grew; ++a) {
      const std::uint32_t o = orders[a];
      if ((o & (o - 1)) != 0) continue;  // need a 2-element
      if (std::binary_search(sylow2.members.begin(), sylow2.members.end(), a)) continue;
      // a normalizes <seed-part>? Check generator conjugates land inside.
      bool normalizes = true;
      for (const std::uint32_t s : sylow2.gens) {
        if (!std::binary_search(sylow2.members.begin(), sylow2.members.end(), g.conj(s, a))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      std::vector<std::uint32_t> gens = sylow2.gens;
      gens.push_back(a);
      const auto grown = close_capped(g, gens, 32);
      if (!grown) continue;  // would exceed the 2-part; not a 2-group path
      sylow2 = TrackedSubgroup{*grown, gens};
      grew = true;
    }
    if (!grew) throw InternalError("failed to grow a Sylow 2-subgroup of the double cover");
  }

  ClassRegistry odd_index_classes;
  std::vector<std::size_t> worklist2;
  {
    const auto [cls, fresh] = odd_index_classes.add(g, sylow2);
    if (fresh) worklist2.push_back(cls);
  }
  for (std::size_t i = 0; i < worklist2.size(); ++i) {
    const TrackedSubgroup rep = odd_index_classes.reps()[worklist2[i]];
    for (const TrackedSubgroup& c : odd_cyclic) {
      if (std::includes(rep.members.begin(), rep.members.end(), c.members.begin(),
                        c.members.end())) {
        continue;
      }
      std::vector<std::uint32_t> gens = rep.gens;
      gens.insert(gens.end(), c.gens.begin(), c.gens.end());
      const auto joined = close_capped(g, gens, kOddIndexCap);
      if (!joined) continue;  // only G itself exceeds 32 * 253
      if (odd_index_classes.contains(*joined)) continue;
      const auto [cls, fresh] = odd_index_classes.add(g, TrackedSubgroup{*joined, gens});
      if (fresh) worklist2.push_back(cls);
    }
  }

  // --- Assemble the report. ---
  StretchReport rep;
  rep.group_order = g.order();
  rep.pi_count = prime_signature_of(g.order()).pi_count();
  const auto collect = [&](const ClassRegistry& reg, const char* route) {
    for (std::size_t cls = 0; cls < reg.reps().size(); ++cls) {
      const Members& m = reg.reps()[cls].members;
      if (m.size() <= 1) continue;  // trivial subgroup is not counted
      StretchClass sc;
      sc.order = m.size();
      sc.class_size = reg.orbit_size(cls);
      sc.shape = shape_name(g, m);
      sc.route = route;
      rep.classes.push_back(std::move(sc));
    }
  };
  collect(odd_classes, "odd-order");
  collect(odd_index_classes, "odd-index");
  std::sort(rep.classes.begin(), rep.classes.end(), [](const StretchClass& a, const StretchClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.shape < b.shape;
  });
  rep.delta_count = static_cast<std::uint32_t>(rep.classes.size());
  return rep;
}

}  // namespace perfcode
