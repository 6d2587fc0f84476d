#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perfcode/group.hpp"
#include "perfcode/lattice.hpp"
#include "perfcode/shapes.hpp"

namespace perfcode {

namespace detail {

// Arithmetic tables for GF(q), q = p^k ≤ 31.  Elements are encoded as
// base-p digit strings (little-endian), so the prime subfield is 0..p−1.
// Non-prime fields use a fixed irreducible polynomial per q.
struct FieldTable {
  std::uint32_t q = 2, p = 2, k = 1;
  std::vector<std::uint16_t> mul_t, add_t;
  std::vector<std::uint16_t> neg_t, inv_t;
  std::uint32_t primitive = 1;

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_t[x * q + y]; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return mul_t[x * q + y]; }
  std::uint32_t neg(std::uint32_t x) const { return neg_t[x]; }
  std::uint32_t inv(std::uint32_t x) const { return inv_t[x]; }
};

inline FieldTable make_field(std::uint32_t q) {
  std::uint32_t p = 0, k = 0;
  for (std::uint32_t cand = 2; cand <= q; ++cand) {
    if (q % cand) continue;
    p = cand;
    std::uint32_t m = q;
    k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) throw InvalidParams("field size must be a prime power");
    break;
  }
  if (p == 0 || !is_prime_u32(p)) throw InvalidParams("field size must be a prime power");
  // Fixed irreducible polynomial x^k + c_{k-1} x^{k-1} + … + c_0 per
  // supported non-prime size.
  std::vector<std::uint32_t> poly;
  switch (q) {
    case 4: poly = {1, 1}; break;           // x² + x + 1
    case 8: poly = {1, 1, 0}; break;        // x³ + x + 1
    case 9: poly = {1, 0}; break;           // x² + 1
    case 16: poly = {1, 1, 0, 0}; break;    // x⁴ + x + 1
    case 25: poly = {3, 0}; break;          // x² + 3 = x² − 2
    case 27: poly = {1, 2, 0}; break;       // x³ + 2x + 1 = x³ − x + 1
    case 529: poly = {18, 0}; break;        // x² + 18 = x² − 5, 5 a nonsquare mod 23
    default:
      if (k != 1) throw InvalidParams("unsupported field size " + std::to_string(q));
  }
  FieldTable f;
  f.q = q;
  f.p = p;
  f.k = k;
  f.add_t.assign(std::size_t(q) * q, 0);
  f.mul_t.assign(std::size_t(q) * q, 0);
  f.neg_t.assign(q, 0);
  f.inv_t.assign(q, 0);
  auto digits = [&](std::uint32_t x) {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = x % p;
      x /= p;
    }
    return d;
  };
  auto undigits = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t x = 0;
    for (std::uint32_t i = k; i-- > 0;) x = x * p + d[i];
    return x;
  };
  for (std::uint32_t x = 0; x < q; ++x) {
    const auto dx = digits(x);
    {
      std::vector<std::uint32_t> dn(k);
      for (std::uint32_t i = 0; i < k; ++i) dn[i] = (p - dx[i]) % p;
      f.neg_t[x] = static_cast<std::uint16_t>(undigits(dn));
    }
    for (std::uint32_t y = 0; y < q; ++y) {
      const auto dy = digits(y);
      std::vector<std::uint32_t> ds(k);
      for (std::uint32_t i = 0; i < k; ++i) ds[i] = (dx[i] + dy[i]) % p;
      f.add_t[x * q + y] = static_cast<std::uint16_t>(undigits(ds));
      std::vector<std::uint32_t> prod(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p;
      for (std::uint32_t deg = 2 * k - 2; deg >= k && deg < prod.size(); --deg) {
        const std::uint32_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        // x^deg ≡ −x^{deg−k}·(c_{k−1}x^{k−1}+…+c_0)
        for (std::uint32_t j = 0; j < k; ++j)
          prod[deg - k + j] = (prod[deg - k + j] + (p - c % p) * poly[j]) % p;
      }
      prod.resize(k);
      f.mul_t[x * q + y] = static_cast<std::uint16_t>(undigits(prod));
    }
  }
  for (std::uint32_t x = 1; x < q; ++x) {
    for (std::uint32_t y = 1; y < q; ++y) {
      if (f.mul(x, y) == 1) {
        f.inv_t[x] = static_cast<std::uint16_t>(y);
        break;
      }
    }
    if (f.mul(x, f.inv_t[x]) != 1) throw InternalError("field element without inverse");
  }
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t cur = g, ord = 1;
    while (cur != 1) {
      cur = f.mul(cur, g);
      ++ord;
    }
    if (ord == q - 1) {
      f.primitive = g;
      break;
    }
  }
  return f;
}

// Table for the split (a, b) encoding with id = a + A·b; the caller
// supplies the multiplication on pairs.
template <class MulFn>
GroupTable table_from_formula(std::uint32_t order, MulFn mul_pair, std::uint32_t a_size,
                              std::vector<std::uint32_t> generators, std::string name) {
  GroupTable g;
  g.order = order;
  g.mul_table.assign(std::size_t(order) * order, 0);
  g.inv_table.assign(order, 0);
  for (std::uint32_t x = 0; x < order; ++x) {
    for (std::uint32_t y = 0; y < order; ++y) {
      const auto [ra, rb] = mul_pair(x % a_size, x / a_size, y % a_size, y / a_size);
      const std::uint32_t r = ra + a_size * rb;
      g.mul_table[std::size_t(x) * order + y] = static_cast<std::uint16_t>(r);
      if (r == 0) g.inv_table[x] = static_cast<std::uint16_t>(y);
    }
  }
  for (auto gen : generators)
    if (gen != 0) g.generators.push_back(gen);
  g.name = std::move(name);
  verify_structure(g);
  return g;
}

inline GroupTable cyclic_table(std::uint32_t n) {
  GroupTable g;
  g.order = n;
  g.mul_table.assign(std::size_t(n) * n, 0);
  g.inv_table.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b)
      g.mul_table[std::size_t(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
    g.inv_table[a] = static_cast<std::uint16_t>((n - a) % n);
  }
  if (n > 1) g.generators.push_back(1);
  g.name = "cyclic(" + std::to_string(n) + ")";
  verify_structure(g);
  return g;
}

// Dihedral group of order 2k as pairs x^a y^b with y² = 1, yxy = x⁻¹.
inline GroupTable dihedral_table(std::uint32_t k) {
  auto mul = [k](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    const std::uint32_t ra = b ? (a + k - c % k) % k : (a + c) % k;
    return std::pair<std::uint32_t, std::uint32_t>(ra, b ^ d);
  };
  std::vector<std::uint32_t> gens{1 % k, k};
  return table_from_formula(2 * k, mul, k, gens, "dihedral(" + std::to_string(2 * k) + ")");
}

// Generalized quaternion group of order 2M as pairs x^a y^b with
// y² = x^{M/2}, y⁻¹xy = x⁻¹.
inline GroupTable quaternion_table(std::uint32_t m) {
  const std::uint32_t half = m / 2;  // order of x
  auto mul = [half](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    std::uint32_t ra = b ? (a + half - c) % half : (a + c) % half;
    std::uint32_t rb = b ^ d;
    if (b && d) ra = (ra + half / 2) % half;
    return std::pair<std::uint32_t, std::uint32_t>(ra, rb);
  };
  std::vector<std::uint32_t> gens{1, half};
  return table_from_formula(m, mul, half, gens,
                            "generalized_quaternion(" + std::to_string(m) + ")");
}

inline GroupTable elemab_table(std::uint32_t p, std::uint32_t k, std::uint32_t order) {
  GroupTable g;
  g.order = order;
  g.mul_table.assign(std::size_t(order) * order, 0);
  g.inv_table.assign(order, 0);
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) {
      std::uint32_t x = a, y = b, r = 0, scale = 1;
      for (std::uint32_t i = 0; i < k; ++i) {
        r += ((x % p) + (y % p)) % p * scale;
        x /= p;
        y /= p;
        scale *= p;
      }
      g.mul_table[std::size_t(a) * order + b] = static_cast<std::uint16_t>(r);
      if (r == 0) g.inv_table[a] = static_cast<std::uint16_t>(b);
    }
  }
  for (std::uint32_t i = 0, unit = 1; i < k; ++i, unit *= p) g.generators.push_back(unit);
  g.name = "elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")";
  verify_structure(g);
  return g;
}

}  // namespace detail

inline GroupTable make_family(const std::string& kind, const std::vector<std::uint64_t>& params,
                              const Caps& caps = {}) {
  auto check_order = [&](std::uint64_t n) {
    if (n > caps.group_order)
      throw CapExceeded("requested order " + std::to_string(n) + " above the group cap of " +
                        std::to_string(caps.group_order));
  };
  if (kind == "cyclic") {
    if (params.size() != 1 || params[0] < 1) throw InvalidParams("cyclic needs one order ≥ 1");
    check_order(params[0]);
    return detail::cyclic_table(static_cast<std::uint32_t>(params[0]));
  }
  if (kind == "dihedral") {
    if (params.size() != 1 || params[0] < 2 || params[0] % 2 != 0)
      throw InvalidParams("dihedral needs one even order ≥ 2");
    check_order(params[0]);
    return detail::dihedral_table(static_cast<std::uint32_t>(params[0] / 2));
  }
  if (kind == "quaternion") {
    const std::uint64_t m = params.size() == 1 ? params[0] : 0;
    if (m < 8 || (m & (m - 1)) != 0)
      throw InvalidParams("quaternion needs one 2-power order ≥ 8");
    check_order(m);
    return detail::quaternion_table(static_cast<std::uint32_t>(m));
  }
  if (kind == "elemab") {
    if (params.size() != 2) throw InvalidParams("elemab needs a prime and a rank");
    const std::uint64_t p = params[0], k = params[1];
    if (p > 65535 || !detail::is_prime_u32(static_cast<std::uint32_t>(p)))
      throw InvalidParams("elemab base must be prime");
    if (k < 1) throw InvalidParams("elemab rank must be ≥ 1");
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      order *= p;
      if (order > caps.group_order)
        throw CapExceeded("elemab order exceeds the group cap");
    }
    return detail::elemab_table(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k),
                                static_cast<std::uint32_t>(order));
  }
  throw InvalidParams("unknown family '" + kind + "'");
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b, const Caps& caps = {}) {
  const std::uint64_t order = std::uint64_t(a.order) * b.order;
  if (order > caps.group_order) throw CapExceeded("product order exceeds the group cap");
  auto mul = [&](std::uint32_t xa, std::uint32_t xb, std::uint32_t ya, std::uint32_t yb) {
    return std::pair<std::uint32_t, std::uint32_t>(a.mul(xa, ya), b.mul(xb, yb));
  };
  std::vector<std::uint32_t> gens;
  for (auto g : a.generators) gens.push_back(g);
  for (auto g : b.generators) gens.push_back(g * a.order);
  return detail::table_from_formula(static_cast<std::uint32_t>(order), mul, a.order, gens,
                                    "product(" + a.name + "," + b.name + ")");
}

// Action of the acting group on the normal factor: a single automorphism
// α, applied by every construction generator of the acting group.  The
// exponent form (x ↦ x^e) requires a cyclic normal factor; the matrix
// form requires an elementary abelian one.
struct ActionDescriptor {
  bool is_exponent = true;
  std::uint64_t exponent = 1;
  std::vector<std::uint32_t> matrix;  // row-major k×k over F_p

  static ActionDescriptor trivial() { return ActionDescriptor{}; }
  static ActionDescriptor exp(std::uint64_t e) { return ActionDescriptor{true, e, {}}; }
  static ActionDescriptor mat(std::vector<std::uint32_t> m) {
    return ActionDescriptor{false, 1, std::move(m)};
  }
};

namespace detail {

// The automorphism α as a permutation of N's element ids, or
// InvalidAction if the descriptor does not define one.
inline std::vector<std::uint32_t> action_permutation(const GroupTable& n,
                                                     const ActionDescriptor& act) {
  std::vector<std::uint32_t> alpha(n.order);
  if (act.is_exponent) {
    ElementId gen0 = UINT32_MAX;
    for (ElementId x = 0; x < n.order; ++x) {
      if (n.element_order(x) == n.order) {
        gen0 = x;
        break;
      }
    }
    if (gen0 == UINT32_MAX && n.order > 1)
      throw InvalidParams("exponent action requires a cyclic normal factor");
    const std::uint32_t e = static_cast<std::uint32_t>(act.exponent % std::max(1u, n.order));
    for (ElementId x = 0; x < n.order; ++x) alpha[x] = pow_element(n, x, e);
  } else {
    const auto sig = prime_signature(n);
    if (sig.primes.size() != 1 && n.order != 1)
      throw InvalidParams("matrix action requires an elementary abelian normal factor");
    const std::uint32_t p = n.order == 1 ? 2 : sig.primes.front();
    const std::uint32_t k = n.order == 1 ? 0 : sig.exponents.front();
    if (!n.is_abelian()) throw InvalidParams("matrix action requires an abelian normal factor");
    for (ElementId x = 1; x < n.order; ++x)
      if (pow_element(n, x, p) != 0)
        throw InvalidParams("matrix action requires exponent-p normal factor");
    if (act.matrix.size() != std::size_t(k) * k)
      throw InvalidAction("action matrix must be " + std::to_string(k) + "x" + std::to_string(k));
    const auto basis = minimal_generating_sequence(n);
    assert(basis.size() == k);
    // Coordinates of every element in the chosen basis.
    std::vector<std::vector<std::uint32_t>> coords(n.order, std::vector<std::uint32_t>(k, 0));
    {
      std::vector<char> seen(n.order, 0);
      seen[0] = 1;
      std::vector<std::uint32_t> frontier{0};
      for (std::uint32_t bi = 0; bi < k; ++bi) {
        std::vector<std::uint32_t> grown = frontier;
        for (auto e0 : frontier) {
          ElementId cur = e0;
          for (std::uint32_t c = 1; c < p; ++c) {
            cur = n.mul(cur, basis[bi]);
            coords[cur] = coords[e0];
            coords[cur][bi] = c;
            if (!seen[cur]) {
              seen[cur] = 1;
              grown.push_back(cur);
            }
          }
        }
        frontier = std::move(grown);
      }
    }
    auto from_coords = [&](const std::vector<std::uint32_t>& c) {
      ElementId r = 0;
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t t = 0; t < c[i]; ++t) r = n.mul(r, basis[i]);
      return r;
    };
    for (ElementId x = 0; x < n.order; ++x) {
      std::vector<std::uint32_t> img(k, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
          img[j] = (img[j] + coords[x][i] * act.matrix[i * k + j]) % p;
      alpha[x] = from_coords(img);
    }
  }
  std::vector<char> hit(n.order, 0);
  for (auto v : alpha) {
    if (hit[v]) throw InvalidAction("action is not a bijection on the normal factor");
    hit[v] = 1;
  }
  for (ElementId x = 0; x < n.order; ++x)
    for (ElementId y = 0; y < n.order; ++y)
      if (alpha[n.mul(x, y)] != n.mul(alpha[x], alpha[y]))
        throw InvalidAction("action is not an automorphism of the normal factor");
  return alpha;
}

}  // namespace detail

inline GroupTable semidirect_product(const GroupTable& n, const GroupTable& q,
                                     const ActionDescriptor& act, const Caps& caps = {}) {
  const std::uint64_t order = std::uint64_t(n.order) * q.order;
  if (order > caps.group_order) throw CapExceeded("semidirect order exceeds the group cap");
  const auto alpha = detail::action_permutation(n, act);
  // Powers of α up to its order d.
  std::vector<std::vector<std::uint32_t>> pows;
  {
    std::vector<std::uint32_t> id(n.order);
    for (ElementId x = 0; x < n.order; ++x) id[x] = x;
    pows.push_back(id);
    std::vector<std::uint32_t> cur = alpha;
    while (cur != pows.front()) {
      pows.push_back(cur);
      std::vector<std::uint32_t> next(n.order);
      for (ElementId x = 0; x < n.order; ++x) next[x] = alpha[cur[x]];
      cur = std::move(next);
    }
  }
  const std::uint32_t d = static_cast<std::uint32_t>(pows.size());
  // Exponent labels: h(identity) = 0 and h(x·gen) = h(x) + 1 for every
  // construction generator, which is exactly "every generator acts as
  // α".  Conflicts mean the action cannot extend to a homomorphism.
  std::vector<std::uint32_t> label(q.order, UINT32_MAX);
  label[0] = 0;
  auto gens = q.generators;
  if (gens.empty() && q.order > 1) gens = detail::minimal_generating_sequence(q);
  {
    std::vector<std::uint32_t> work{0};
    for (std::size_t i = 0; i < work.size(); ++i) {
      for (auto g : gens) {
        const ElementId t = q.mul(work[i], g);
        const std::uint32_t want = (label[work[i]] + 1) % d;
        if (label[t] == UINT32_MAX) {
          label[t] = want;
          work.push_back(t);
        } else if (label[t] != want) {
          throw InvalidAction("action order does not divide the acting generator's relations");
        }
      }
    }
  }
  for (ElementId a = 0; a < q.order; ++a) {
    assert(label[a] != UINT32_MAX);
    for (ElementId b = 0; b < q.order; ++b)
      if (label[q.mul(a, b)] != (label[a] + label[b]) % d)
        throw InvalidAction("action labels do not respect the acting group's multiplication");
  }
  auto mul = [&](std::uint32_t n1, std::uint32_t q1, std::uint32_t n2, std::uint32_t q2) {
    return std::pair<std::uint32_t, std::uint32_t>(n.mul(n1, pows[label[q1]][n2]),
                                                   q.mul(q1, q2));
  };
  std::vector<std::uint32_t> out_gens;
  for (auto g : n.generators) out_gens.push_back(g);
  for (auto g : gens) out_gens.push_back(g * n.order);
  return detail::table_from_formula(static_cast<std::uint32_t>(order), mul, n.order, out_gens,
                                    "semidirect(" + n.name + "," + q.name + ")");
}

// ---------------------------------------------------------------------------
// Matrix group families over GF(q), q ≤ 31.

namespace detail {

inline bool is_prime_power_le(std::uint32_t q, std::uint32_t bound) {
  if (q < 2 || q > bound) return false;
  std::uint32_t p = 0;
  for (std::uint32_t c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  std::uint32_t m = q;
  while (m % p == 0) m /= p;
  return m == 1;
}

// Permutation action of a 2×2 matrix over GF(q) on the projective line
// (points 0..q−1 are the field, point q is ∞), as a Möbius map
// x ↦ (ax + b)/(cx + d).
inline Perm mobius_perm(const FieldTable& f, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                        std::uint32_t d) {
  const std::uint32_t q = f.q;
  Perm perm;
  perm.img.resize(q + 1);
  for (std::uint32_t x = 0; x <= q; ++x) {
    std::uint32_t num, den;
    if (x == q) {
      num = a;
      den = c;
    } else {
      num = f.add(f.mul(a, x), b);
      den = f.add(f.mul(c, x), d);
    }
    perm.img[x] = den == 0 ? q : f.mul(num, f.inv(den));
  }
  return perm;
}

// Permutation action of a 2×2 matrix on the q²−1 nonzero row vectors.
inline Perm vector_perm(const FieldTable& f, std::uint32_t m00, std::uint32_t m01,
                        std::uint32_t m10, std::uint32_t m11) {
  const std::uint32_t q = f.q;
  Perm perm;
  perm.img.resize(std::size_t(q) * q - 1);
  for (std::uint32_t v = 1; v < q * q; ++v) {
    const std::uint32_t a = v / q, b = v % q;
    const std::uint32_t ra = f.add(f.mul(a, m00), f.mul(b, m10));
    const std::uint32_t rb = f.add(f.mul(a, m01), f.mul(b, m11));
    perm.img[v - 1] = ra * q + rb - 1;
  }
  return perm;
}

}  // namespace detail

inline GroupTable matrix_group_family(const std::string& kind, std::uint32_t q,
                                      const Caps& caps = {}) {
  if (!detail::is_prime_power_le(q, 31))
    throw InvalidParams("field size must be a prime power ≤ 31");
  const auto f = detail::make_field(q);
  const std::uint64_t sl_order = std::uint64_t(q) * (std::uint64_t(q) * q - 1);
  const std::uint32_t theta = f.primitive;
  GroupTable g;
  std::uint64_t expected = 0;
  if (kind == "sl2") {
    expected = sl_order;
    if (f.k == 1) {
      // Prime field: matrix generators directly.
      std::vector<Mat2> gens;
      gens.push_back(Mat2{q, {1, 1, 0, 1}});
      gens.push_back(Mat2{q, {0, 1, (q - 1) % q, 0}});
      g = closure_from_generators(gens, caps);
    } else {
      // Extension field: permutations on the nonzero vectors, with a
      // torus generator diag(θ, θ⁻¹) to reach the whole field.
      std::vector<Perm> gens;
      gens.push_back(detail::vector_perm(f, 1, 1, 0, 1));
      gens.push_back(detail::vector_perm(f, 0, 1, f.neg(1), 0));
      gens.push_back(detail::vector_perm(f, theta, 0, 0, f.inv(theta)));
      g = closure_from_generators(gens, caps);
    }
  } else if (kind == "psl2" || kind == "pgl2") {
    expected = kind == "psl2" ? sl_order / (q % 2 == 0 ? 1 : 2) : sl_order;
    std::vector<Perm> gens;
    gens.push_back(detail::mobius_perm(f, 1, 1, 0, 1));              // x ↦ x+1
    gens.push_back(detail::mobius_perm(f, 0, 1, f.neg(1), 0));       // x ↦ −1/x
    gens.push_back(detail::mobius_perm(f, f.mul(theta, theta), 0, 0, 1));  // x ↦ θ²x
    if (kind == "pgl2") gens.push_back(detail::mobius_perm(f, theta, 0, 0, 1));
    g = closure_from_generators(gens, caps);
  } else {
    throw InvalidParams("unknown matrix family '" + kind + "'");
  }
  if (g.order != expected)
    throw InternalError("matrix family order " + std::to_string(g.order) +
                        " does not match the closed form " + std::to_string(expected));
  g.name = (kind == "sl2" ? "SL(2," : kind == "psl2" ? "PSL(2," : "PGL(2,") +
           std::to_string(q) + ")";
  return g;
}

// The order-48 double cover of S₄ with generalized quaternion Sylow
// 2-subgroup, realized as the unique-involution order-48 subgroup of
// SL(2,7).
inline GroupTable binary_octahedral(const Caps& caps = {}) {
  const GroupTable sl27 = matrix_group_family("sl2", 7, caps);
  const auto subs = all_subgroups(sl27, caps);
  const Subgroup* best = nullptr;
  for (const auto& s : subs) {
    if (s.order() != 48) continue;
    std::uint32_t involutions = 0;
    for (auto m : s.members)
      if (m != 0 && sl27.mul(m, m) == 0) ++involutions;
    if (involutions != 1) continue;
    if (!best || s.members < best->members) best = &s;
  }
  if (!best) throw InternalError("no unique-involution order-48 subgroup found in SL(2,7)");
  GroupTable g = subgroup_table(sl27, *best);
  g.name = "binary_octahedral";
  return g;
}

// ---------------------------------------------------------------------------
// Group-spec mini-language.
//
//   spec       := family | perm | matrix | product | semidirect | subgroup
//   family     := ("cyclic"|"dihedral"|"quaternion") ":" num
//               | "elemab" ":" num ":" num
//               | ("sl2"|"psl2"|"pgl2") ":" num
//               | "binary_octahedral"
//   perm       := "perm:" cycles (";" cycles)*
//   cycles     := ( "(" num ("," num)* ")" )+          — 1-based points
//   matrix     := "matrix:" num ":" entry4 (";" entry4)*
//   product    := "product:" spec "*" spec
//   semidirect := "semidirect:" spec ":" spec ":" action
//   action     := "exp=" num | "mat=" row (";" row)*
//   subgroup   := "subgroup:" spec ":" order ":" index

struct GroupSpec {
  enum class Node : std::uint8_t { family, perm, matrix, product, semidirect, subgroup_of };
  Node node = Node::family;
  std::string family_name;
  std::vector<std::uint64_t> params;
  std::vector<Perm> perms;
  std::uint32_t mod = 0;
  std::vector<Mat2> mats;
  std::vector<GroupSpec> children;
  ActionDescriptor action;
  std::uint32_t action_dim = 0;  // matrix action row count
  std::uint64_t sub_order = 0, sub_index = 0;
};

namespace detail {

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  bool try_consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint64_t number() {
    if (eof() || s[pos] < '0' || s[pos] > '9') fail("expected a number");
    std::uint64_t v = 0;
    while (!eof() && s[pos] >= '0' && s[pos] <= '9') {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000000000ull) fail("number too large");
      ++pos;
    }
    return v;
  }

  std::string word() {
    std::size_t start = pos;
    while (!eof() && ((s[pos] >= 'a' && s[pos] <= 'z') || s[pos] == '_' ||
                      (s[pos] >= '0' && s[pos] <= '9')))
      ++pos;
    if (pos == start) fail("expected a spec keyword");
    return s.substr(start, pos - start);
  }

  Perm parse_cycles() {
    std::vector<std::vector<std::uint64_t>> cycles;
    std::uint64_t max_point = 0;
    if (peek() != '(') fail("expected '('");
    while (try_consume('(')) {
      std::vector<std::uint64_t> cyc;
      cyc.push_back(number());
      while (try_consume(',')) cyc.push_back(number());
      expect(')');
      for (auto p : cyc) {
        if (p == 0) fail("points are 1-based");
        max_point = std::max(max_point, p);
      }
      cycles.push_back(std::move(cyc));
    }
    Perm perm;
    perm.img.resize(max_point);
    for (std::size_t i = 0; i < max_point; ++i) perm.img[i] = static_cast<std::uint32_t>(i);
    std::vector<char> moved(max_point, 0);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const std::uint64_t from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
        if (moved[from]) fail("point repeated across cycles");
        moved[from] = 1;
        perm.img[from] = static_cast<std::uint32_t>(to);
      }
    }
    return perm;
  }

  GroupSpec parse() {
    GroupSpec spec;
    const std::size_t word_pos = pos;
    const std::string name = word();
    auto family_params = [&](std::size_t arity) {
      for (std::size_t i = 0; i < arity; ++i) {
        expect(':');
        spec.params.push_back(number());
      }
    };
    if (name == "cyclic" || name == "dihedral" || name == "quaternion") {
      spec.node = GroupSpec::Node::family;
      spec.family_name = name;
      family_params(1);
    } else if (name == "elemab") {
      spec.node = GroupSpec::Node::family;
      spec.family_name = name;
      family_params(2);
    } else if (name == "sl2" || name == "psl2" || name == "pgl2") {
      spec.node = GroupSpec::Node::family;
      spec.family_name = name;
      family_params(1);
    } else if (name == "binary_octahedral") {
      spec.node = GroupSpec::Node::family;
      spec.family_name = name;
    } else if (name == "perm") {
      spec.node = GroupSpec::Node::perm;
      expect(':');
      spec.perms.push_back(parse_cycles());
      while (try_consume(';')) spec.perms.push_back(parse_cycles());
    } else if (name == "matrix") {
      spec.node = GroupSpec::Node::matrix;
      expect(':');
      const std::uint64_t p = number();
      if (p < 2 || p > 65535) fail("matrix modulus out of range");
      spec.mod = static_cast<std::uint32_t>(p);
      expect(':');
      do {
        Mat2 m;
        m.p = spec.mod;
        for (int i = 0; i < 4; ++i) {
          if (i) expect(',');
          m.a[i] = static_cast<std::uint32_t>(number() % spec.mod);
        }
        spec.mats.push_back(m);
      } while (try_consume(';'));
    } else if (name == "product") {
      spec.node = GroupSpec::Node::product;
      expect(':');
      spec.children.push_back(parse());
      expect('*');
      spec.children.push_back(parse());
    } else if (name == "semidirect") {
      spec.node = GroupSpec::Node::semidirect;
      expect(':');
      spec.children.push_back(parse());
      expect(':');
      spec.children.push_back(parse());
      expect(':');
      const std::string form = word();
      expect('=');
      if (form == "exp") {
        spec.action = ActionDescriptor::exp(number());
      } else if (form == "mat") {
        std::vector<std::uint32_t> flat;
        std::size_t rows = 0, row_len = 0;
        for (;;) {
          std::size_t len = 0;
          flat.push_back(static_cast<std::uint32_t>(number()));
          ++len;
          while (try_consume(',')) {
            flat.push_back(static_cast<std::uint32_t>(number()));
            ++len;
          }
          ++rows;
          if (row_len == 0)
            row_len = len;
          else if (row_len != len)
            fail("action matrix rows differ in length");
          if (!try_consume(';')) break;
        }
        if (rows != row_len) fail("action matrix must be square");
        spec.action = ActionDescriptor::mat(std::move(flat));
        spec.action_dim = static_cast<std::uint32_t>(rows);
      } else {
        pos = word_pos;
        fail("unknown action form '" + form + "'");
      }
    } else if (name == "subgroup") {
      spec.node = GroupSpec::Node::subgroup_of;
      expect(':');
      spec.children.push_back(parse());
      expect(':');
      spec.sub_order = number();
      expect(':');
      spec.sub_index = number();
    } else {
      pos = word_pos;
      fail("unknown spec keyword '" + name + "'");
    }
    return spec;
  }
};

inline std::string cycles_to_string(const Perm& p) {
  std::string out;
  std::vector<char> done(p.img.size(), 0);
  for (std::size_t start = 0; start < p.img.size(); ++start) {
    if (done[start] || p.img[start] == start) continue;
    out += '(';
    std::size_t cur = start;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(cur + 1);
      done[cur] = 1;
      cur = p.img[cur];
      first = false;
    } while (cur != start);
    out += ')';
  }
  if (out.empty()) out = "(1)";
  return out;
}

}  // namespace detail

inline std::string to_string(const GroupSpec& spec) {
  switch (spec.node) {
    case GroupSpec::Node::family: {
      std::string out = spec.family_name;
      for (auto p : spec.params) out += ":" + std::to_string(p);
      return out;
    }
    case GroupSpec::Node::perm: {
      std::string out = "perm:";
      for (std::size_t i = 0; i < spec.perms.size(); ++i) {
        if (i) out += ';';
        out += detail::cycles_to_string(spec.perms[i]);
      }
      return out;
    }
    case GroupSpec::Node::matrix: {
      std::string out = "matrix:" + std::to_string(spec.mod) + ":";
      for (std::size_t gi = 0; gi < spec.mats.size(); ++gi) {
        if (gi) out += ';';
        for (int i = 0; i < 4; ++i) {
          if (i) out += ',';
          out += std::to_string(spec.mats[gi].a[i]);
        }
      }
      return out;
    }
    case GroupSpec::Node::product:
      return "product:" + to_string(spec.children[0]) + "*" + to_string(spec.children[1]);
    case GroupSpec::Node::semidirect: {
      std::string out = "semidirect:" + to_string(spec.children[0]) + ":" +
                        to_string(spec.children[1]) + ":";
      if (spec.action.is_exponent) {
        out += "exp=" + std::to_string(spec.action.exponent);
      } else {
        out += "mat=";
        const std::uint32_t k = spec.action_dim;
        for (std::uint32_t r = 0; r < k; ++r) {
          if (r) out += ';';
          for (std::uint32_t c = 0; c < k; ++c) {
            if (c) out += ',';
            out += std::to_string(spec.action.matrix[r * k + c]);
          }
        }
      }
      return out;
    }
    case GroupSpec::Node::subgroup_of:
      return "subgroup:" + to_string(spec.children[0]) + ":" + std::to_string(spec.sub_order) +
             ":" + std::to_string(spec.sub_index);
  }
  return "";
}

inline GroupSpec parse_spec(const std::string& text) {
  detail::SpecParser parser{text};
  GroupSpec spec = parser.parse();
  if (!parser.eof()) parser.fail("trailing characters after the spec");
  return spec;
}

inline GroupTable build(const GroupSpec& spec, const Caps& caps = {}) {
  GroupTable g;
  switch (spec.node) {
    case GroupSpec::Node::family:
      if (spec.family_name == "sl2" || spec.family_name == "psl2" ||
          spec.family_name == "pgl2") {
        if (spec.params.size() != 1 || spec.params[0] > 31)
          throw InvalidParams("matrix families need a prime-power size ≤ 31");
        g = matrix_group_family(spec.family_name, static_cast<std::uint32_t>(spec.params[0]),
                                caps);
      } else if (spec.family_name == "binary_octahedral") {
        g = binary_octahedral(caps);
      } else {
        g = make_family(spec.family_name, spec.params, caps);
      }
      break;
    case GroupSpec::Node::perm:
      g = closure_from_generators(spec.perms, caps);
      break;
    case GroupSpec::Node::matrix:
      g = closure_from_generators(spec.mats, caps);
      break;
    case GroupSpec::Node::product: {
      const GroupTable a = build(spec.children[0], caps);
      const GroupTable b = build(spec.children[1], caps);
      g = direct_product(a, b, caps);
      break;
    }
    case GroupSpec::Node::semidirect: {
      const GroupTable n = build(spec.children[0], caps);
      const GroupTable q = build(spec.children[1], caps);
      g = semidirect_product(n, q, spec.action, caps);
      break;
    }
    case GroupSpec::Node::subgroup_of: {
      const GroupTable parent = build(spec.children[0], caps);
      const auto subs = all_subgroups(parent, caps);
      std::vector<const Subgroup*> matching;
      for (const auto& s : subs)
        if (s.order() == spec.sub_order) matching.push_back(&s);
      std::sort(matching.begin(), matching.end(),
                [](const Subgroup* a, const Subgroup* b) { return a->members < b->members; });
      if (spec.sub_index >= matching.size())
        throw InvalidParams("subgroup index " + std::to_string(spec.sub_index) +
                            " out of range: " + std::to_string(matching.size()) +
                            " subgroups of order " + std::to_string(spec.sub_order));
      g = subgroup_table(parent, *matching[spec.sub_index]);
      break;
    }
  }
  g.source = to_string(spec);
  return g;
}

inline GroupTable build(const std::string& text, const Caps& caps = {}) {
  return build(parse_spec(text), caps);
}

// ---------------------------------------------------------------------------
// Default sweep catalogue: (spec, order) pairs, orders ≤ 200.

struct CatalogEntry {
  std::string spec;
  std::uint32_t order;
};

inline std::vector<CatalogEntry> default_catalogue() {
  std::vector<CatalogEntry> base;
  auto add = [&](std::string spec, std::uint32_t order) {
    base.push_back({std::move(spec), order});
  };
  for (std::uint32_t n = 1; n <= 200; ++n) add("cyclic:" + std::to_string(n), n);
  for (std::uint32_t m = 4; m <= 200; m += 2) add("dihedral:" + std::to_string(m), m);
  for (std::uint32_t m = 8; m <= 200; m *= 2) add("quaternion:" + std::to_string(m), m);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    std::uint32_t order = p * p;
    for (std::uint32_t k = 2; order <= 200; ++k, order *= p)
      add("elemab:" + std::to_string(p) + ":" + std::to_string(k), order);
  }
  auto mult_order = [](std::uint32_t e, std::uint32_t mod) {
    std::uint32_t cur = e % mod, ord = 1;
    while (cur != 1) {
      cur = static_cast<std::uint32_t>(std::uint64_t(cur) * e % mod);
      ++ord;
    }
    return ord;
  };
  auto least_of_order = [&](std::uint32_t want, std::uint32_t mod) -> std::uint32_t {
    for (std::uint32_t e = 2; e < mod; ++e)
      if (mult_order(e, mod) == want) return e;
    return 0;
  };
  // Nonabelian Z_q : Z_p with p < q odd primes.
  for (std::uint32_t q = 3; q <= 66; ++q) {
    if (!detail::is_prime_u32(q)) continue;
    for (std::uint32_t p = 3; p < q; ++p) {
      if (!detail::is_prime_u32(p) || (q - 1) % p != 0 || p * q > 200) continue;
      const std::uint32_t e = least_of_order(p, q);
      add("semidirect:cyclic:" + std::to_string(q) + ":cyclic:" + std::to_string(p) +
              ":exp=" + std::to_string(e),
          p * q);
    }
  }
  // Z_p : Z_{2^n}, one instance per action-image size 2^j ≥ 2.
  for (std::uint32_t p = 3; p <= 97; p += 2) {
    if (!detail::is_prime_u32(p)) continue;
    for (std::uint32_t twon = 2; p * twon <= 200; twon *= 2) {
      for (std::uint32_t twoj = 2; twoj <= twon && (p - 1) % twoj == 0; twoj *= 2) {
        const std::uint32_t e = least_of_order(twoj, p);
        add("semidirect:cyclic:" + std::to_string(p) + ":cyclic:" + std::to_string(twon) +
                ":exp=" + std::to_string(e),
            p * twon);
      }
    }
  }
  // Z_p : Q_{2^n}; the only nontrivial action through a cyclic image is
  // inversion.
  for (std::uint32_t p = 3; p <= 23; p += 2) {
    if (!detail::is_prime_u32(p)) continue;
    for (std::uint32_t twon = 8; p * twon <= 200; twon *= 2)
      add("semidirect:cyclic:" + std::to_string(p) + ":quaternion:" + std::to_string(twon) +
              ":exp=" + std::to_string(p - 1),
          p * twon);
  }
  add("perm:(1,2,3);(2,3,4)", 12);            // A4
  add("perm:(1,2,3,4);(1,2)", 24);            // S4
  add("perm:(1,2,3,4,5);(1,2,3)", 60);        // A5
  add("perm:(1,2,3,4,5);(1,2)", 120);         // S5
  add("sl2:3", 24);
  add("sl2:5", 120);
  add("psl2:7", 168);
  add("binary_octahedral", 48);
  // One level of direct products of distinct-index base pairs.
  std::vector<CatalogEntry> out = base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i].order <= 1) continue;
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[j].order <= 1) continue;
      const std::uint64_t order = std::uint64_t(base[i].order) * base[j].order;
      if (order > 200) continue;
      out.push_back({"product:" + base[i].spec + "*" + base[j].spec,
                     static_cast<std::uint32_t>(order)});
    }
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.spec < b.spec;
  });
  return out;
}

}  // namespace perfcode
