#pragma once

// Brute-force reference implementations used only by the tests.  These
// deliberately avoid the library's algorithms: subgroups are found by
// scanning divisor-sized subsets, conjugacy by trying every conjugator,
// transversals by exhaustive choice, and perfect codes by enumerating
// entire connection sets.  Everything here is restricted to small groups.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "perfcode/group.hpp"

namespace oracle {

using perfcode::GroupTable;

// All subgroups of g as sorted member lists, found by checking every
// subset of divisor size that contains the identity.  Requires |g| <= 24.
inline std::vector<std::vector<std::uint32_t>> subgroups(const GroupTable& g) {
  const std::uint32_t n = g.order;
  if (n > 24) throw std::logic_error("oracle::subgroups needs order <= 24");
  std::vector<std::vector<std::uint32_t>> found;

  const auto closed = [&](std::uint32_t mask) {
    for (std::uint32_t a = 0; a < n; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (std::uint32_t b = 0; b < n; ++b) {
        if (!((mask >> b) & 1u)) continue;
        if (!((mask >> g.mul(a, b)) & 1u)) return false;
      }
    }
    return true;
  };

  // Enumerate subsets of {1..n-1} of size d-1 via lexicographic
  // combinations, for each divisor d of n.
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const std::uint32_t k = d - 1;
    if (k == 0) {
      found.push_back({0});
      continue;
    }
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
      std::uint32_t mask = 1u;  // identity
      for (const auto i : idx) mask |= (1u << i);
      if (closed(mask)) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t x = 0; x < n; ++x)
          if ((mask >> x) & 1u) members.push_back(x);
        found.push_back(std::move(members));
      }
      // next combination
      std::int32_t pos = static_cast<std::int32_t>(k) - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::uint32_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Whether x^{-1} A x = B for some x, trying every x in g.
inline bool conjugate_subsets(const GroupTable& g, const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::uint32_t x = 0; x < g.order; ++x) {
    std::vector<std::uint32_t> image;
    image.reserve(a.size());
    for (const auto h : a) image.push_back(g.conj(h, x));
    std::sort(image.begin(), image.end());
    if (image == b) return true;
  }
  return false;
}

// Partition of the given member lists into conjugacy classes (each class
// sorted, classes sorted by least representative).
inline std::vector<std::vector<std::vector<std::uint32_t>>> conjugacy_classes(
    const GroupTable& g, const std::vector<std::vector<std::uint32_t>>& subs) {
  std::vector<std::vector<std::vector<std::uint32_t>>> classes;
  std::vector<char> used(subs.size(), 0);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::vector<std::uint32_t>> cls{subs[i]};
    used[i] = 1;
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (!used[j] && conjugate_subsets(g, subs[i], subs[j])) {
        used[j] = 1;
        cls.push_back(subs[j]);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Whether the subgroup with the given members admits an inverse-closed
// left transversal, by exhaustive choice of one representative per coset.
// Work is |H|^(cosets-1); callers keep |g| <= 24.
inline bool transversal_exists(const GroupTable& g, const std::vector<std::uint32_t>& members) {
  const std::uint32_t n = g.order;
  const std::uint32_t hs = static_cast<std::uint32_t>(members.size());
  const std::uint32_t r = n / hs;
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> cosets;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    const std::uint32_t c = static_cast<std::uint32_t>(cosets.size());
    cosets.emplace_back();
    for (const auto h : members) {  // left coset xH
      const std::uint32_t y = g.mul(x, h);
      coset_of[y] = c;
      cosets[c].push_back(y);
    }
  }
  std::vector<std::uint32_t> pick(r, 0);
  while (true) {
    std::vector<char> chosen(n, 0);
    for (std::uint32_t c = 0; c < r; ++c) chosen[cosets[c][pick[c]]] = 1;
    bool ok = true;
    for (std::uint32_t c = 0; c < r && ok; ++c) {
      const std::uint32_t t = cosets[c][pick[c]];
      if (!chosen[g.inv(t)]) ok = false;
    }
    if (ok) return true;
    std::uint32_t pos = 0;
    while (pos < r && pick[pos] + 1 == hs) pick[pos++] = 0;
    if (pos == r) return false;
    ++pick[pos];
  }
}

// Inverse-closed "pair classes" of non-identity elements: {x, x^{-1}}.
inline std::vector<std::vector<std::uint32_t>> inverse_pairs(const GroupTable& g) {
  std::vector<std::vector<std::uint32_t>> pairs;
  std::vector<char> used(g.order, 0);
  for (std::uint32_t x = 1; x < g.order; ++x) {
    if (used[x]) continue;
    used[x] = 1;
    const std::uint32_t xi = g.inv(x);
    if (xi == x) {
      pairs.push_back({x});
    } else {
      used[xi] = 1;
      pairs.push_back({x, xi});
    }
  }
  return pairs;
}

// Whether the subgroup is a perfect code in some Cayley graph, by
// enumerating every inverse-closed connection set.  Only feasible when
// the number of pair classes is small; returns nullopt past 20 pairs.
inline std::optional<bool> perfect_code_by_cayley_scan(const GroupTable& g,
                                                       const std::vector<std::uint32_t>& members) {
  const auto pairs = inverse_pairs(g);
  if (pairs.size() > 20) return std::nullopt;
  std::vector<char> in_h(g.order, 0);
  for (const auto h : members) in_h[h] = 1;
  for (std::uint64_t sel = 0; sel < (std::uint64_t(1) << pairs.size()); ++sel) {
    std::vector<char> in_s(g.order, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((sel >> i) & 1u)
        for (const auto x : pairs[i]) in_s[x] = 1;
    // x, y adjacent iff x^{-1} y in S: check H independent and every
    // vertex outside H adjacent to exactly one member of H.
    bool good = true;
    for (std::uint32_t x = 0; x < g.order && good; ++x) {
      std::uint32_t hits = 0;
      for (const auto h : members)
        if (in_s[g.mul(g.inv(x), h)]) ++hits;
      if (in_h[x] ? hits != 0 : hits != 1) good = false;
    }
    if (good) return true;
  }
  return false;
}

}  // namespace oracle
