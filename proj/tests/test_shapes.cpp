#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "perfcode/catalog.hpp"
#include "perfcode/lattice.hpp"
#include "perfcode/shapes.hpp"

using namespace perfcode;

namespace {

ShapeTag shape_of(const std::string& spec) { return recognize_shape(build(spec)); }

Subgroup subgroup_of_order(const GroupTable& g, std::uint32_t n) {
  for (auto& s : all_subgroups(g))
    if (s.order() == n) return s;
  throw std::logic_error("no subgroup of the requested order");
}

}  // namespace

TEST_CASE("cyclic groups are recognized across the size range") {
  std::vector<std::uint32_t> ns;
  for (std::uint32_t n = 1; n <= 100; ++n) ns.push_back(n);
  for (std::uint32_t n : {127u, 128u, 196u, 243u, 255u, 256u, 257u, 343u, 511u, 512u})
    ns.push_back(n);
  for (std::uint32_t n : ns) {
    CAPTURE(n);
    const ShapeTag tag = shape_of("cyclic:" + std::to_string(n));
    CHECK(tag.is_cyclic());
    CHECK(tag.order == n);
  }
}

TEST_CASE("dihedral groups are recognized, with the small coincidences resolved") {
  for (std::uint32_t n : {6u, 8u, 10u, 12u, 16u, 20u, 24u, 48u, 100u, 254u, 256u, 512u}) {
    CAPTURE(n);
    const ShapeTag tag = shape_of("dihedral:" + std::to_string(n));
    CHECK(tag.is_dihedral());
    CHECK(tag.order == n);
  }
  CHECK(shape_of("dihedral:2").is_cyclic());  // one reflection only
  const ShapeTag v4 = shape_of("dihedral:4");
  CHECK(v4.is_elementary_abelian());
  CHECK(v4.p == 2);
  CHECK(v4.k == 2);
}

TEST_CASE("generalized quaternion groups are recognized") {
  for (std::uint32_t n : {8u, 16u, 32u, 64u, 128u, 256u, 512u}) {
    CAPTURE(n);
    const ShapeTag tag = shape_of("quaternion:" + std::to_string(n));
    CHECK(tag.is_generalized_quaternion());
    CHECK(tag.order == n);
    CHECK(tag.cyclic_or_quaternion());
  }
}

TEST_CASE("elementary abelian groups are recognized, rank one reported as cyclic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CHECK(shape_of("elemab:" + std::to_string(p) + ":1").is_cyclic());
    for (std::uint32_t k = 2; ; ++k) {
      std::uint64_t order = 1;
      for (std::uint32_t i = 0; i < k; ++i) order *= p;
      if (order > 512) break;
      CAPTURE(p);
      CAPTURE(k);
      const ShapeTag tag = shape_of("elemab:" + std::to_string(p) + ":" + std::to_string(k));
      CHECK(tag.is_elementary_abelian());
      CHECK(tag.p == p);
      CHECK(tag.k == k);
    }
  }
}

TEST_CASE("shape strings") {
  CHECK(shape_of("cyclic:12").to_string() == "cyclic(12)");
  CHECK(shape_of("dihedral:8").to_string() == "dihedral(8)");
  CHECK(shape_of("quaternion:16").to_string() == "generalized_quaternion(16)");
  CHECK(shape_of("elemab:2:3").to_string() == "elementary_abelian(2,3)");
  CHECK(shape_of("perm:(1,2,3);(2,3,4)").to_string() == "other");  // A4
  CHECK(shape_of("perm:(1,2,3);(1,2)").to_string() == "dihedral(6)");  // S3 is dihedral
  CHECK(shape_of("product:quaternion:8*cyclic:2").to_string() == "other");
}

TEST_CASE("isomorphism testing separates the order-8 zoo") {
  const std::vector<std::string> specs = {"cyclic:8", "quaternion:8", "dihedral:8",
                                          "product:cyclic:4*cyclic:2", "elemab:2:3"};
  std::vector<GroupTable> gs;
  for (const auto& s : specs) gs.push_back(build(s));
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = 0; j < gs.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      const IsoVerdict v = bounded_isomorphic(gs[i], gs[j]);
      CHECK(v.isomorphic == (i == j));
      CHECK(v.confident);
    }
  }
}

TEST_CASE("isomorphism positives across different constructions") {
  CHECK(bounded_isomorphic(build("cyclic:6"), build("product:cyclic:2*cyclic:3")).isomorphic);
  CHECK(bounded_isomorphic(build("dihedral:12"),
                           build("product:cyclic:2*dihedral:6")).isomorphic);
  CHECK(bounded_isomorphic(build("perm:(1,2,3);(1,2)"), build("dihedral:6")).isomorphic);
  CHECK(!bounded_isomorphic(build("cyclic:12"), build("product:cyclic:2*cyclic:6")).isomorphic);
  CHECK(!bounded_isomorphic(build("perm:(1,2,3);(2,3,4)"), build("dihedral:12")).isomorphic);

  const GroupTable sl23 = build("sl2:3");
  const GroupTable q = subgroup_table(sl23, sylow(sl23, 2));
  CHECK(bounded_isomorphic(q, build("quaternion:8")).isomorphic);
}

TEST_CASE("isomorphism above the exact bound degrades to a labelled fingerprint check") {
  const IsoVerdict same = bounded_isomorphic(build("cyclic:512"), build("cyclic:512"));
  CHECK(same.isomorphic);
  CHECK(!same.confident);
  const IsoVerdict diff =
      bounded_isomorphic(build("cyclic:512"), build("product:cyclic:256*cyclic:2"));
  CHECK(!diff.isomorphic);
  CHECK(diff.confident);
}

TEST_CASE("element order profiles") {
  using Profile = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  CHECK(element_order_profile(build("cyclic:12")) ==
        Profile{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}});
  CHECK(element_order_profile(build("perm:(1,2,3);(1,2)")) == Profile{{1, 1}, {2, 3}, {3, 2}});
  CHECK(element_order_profile(build("quaternion:8")) == Profile{{1, 1}, {2, 1}, {4, 6}});
}

TEST_CASE("greedy generating sequences are small and generate") {
  for (const char* spec : {"cyclic:12", "elemab:2:3", "quaternion:8", "perm:(1,2,3,4);(1,2)",
                           "sl2:3", "dihedral:20"}) {
    CAPTURE(spec);
    const GroupTable g = build(spec);
    const auto gens = detail::minimal_generating_sequence(g);
    CHECK(close_subset(g, gens).size() == g.order);
    std::uint32_t log2 = 0;
    for (std::uint32_t n = g.order; n > 1; n /= 2) ++log2;
    CHECK(gens.size() <= log2);  // each step at least doubles the closure
  }
  CHECK(detail::minimal_generating_sequence(build("cyclic:12")).size() == 1);
  CHECK(detail::minimal_generating_sequence(build("elemab:2:3")).size() == 3);
}

TEST_CASE("subgroup tables re-index members densely") {
  const GroupTable z12 = build("cyclic:12");
  const Subgroup h = subgroup_of_order(z12, 6);
  const GroupTable t = subgroup_table(z12, h);
  CHECK(t.order == 6);
  const ShapeTag tag = recognize_shape(t);
  CHECK(tag.is_cyclic());
  CHECK(tag.order == 6);
  CHECK(bounded_isomorphic(t, build("cyclic:6")).isomorphic);

  const GroupTable s4 = build("perm:(1,2,3,4);(1,2)");
  for (auto& s : all_subgroups(s4)) {
    if (s.order() != 8) continue;
    CHECK(recognize_shape(subgroup_table(s4, s)).is_dihedral());
  }
}

TEST_CASE("relocating a nested subgroup into local ids") {
  const GroupTable z12 = build("cyclic:12");
  const Subgroup h = subgroup_of_order(z12, 6);   // {0,2,4,6,8,10}
  const Subgroup inner = subgroup_of_order(z12, 3);  // {0,4,8}
  const GroupTable t = subgroup_table(z12, h);
  const Subgroup moved = relocate_subgroup(z12, h, t, inner);
  CHECK(moved.members == std::vector<std::uint32_t>{0, 2, 4});
  CHECK(recognize_shape(subgroup_table(t, moved)).is_cyclic());
}
