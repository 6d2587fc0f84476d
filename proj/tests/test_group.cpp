#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "perfcode/catalog.hpp"
#include "perfcode/group.hpp"
#include "perfcode/shapes.hpp"

using namespace perfcode;

TEST_CASE("cyclic table multiplies modulo n") {
  const GroupTable g = make_family("cyclic", {6});
  REQUIRE(g.order == 6);
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 6; ++b) CHECK(g.mul(a, b) == (a + b) % 6);
  CHECK(g.inv(0) == 0);
  CHECK(g.inv(1) == 5);
  CHECK(g.inv(4) == 2);
  CHECK(g.is_abelian());
}

TEST_CASE("element orders in a cyclic group") {
  const GroupTable g = make_family("cyclic", {12});
  std::vector<std::uint32_t> orders;
  for (std::uint32_t x = 0; x < 12; ++x) orders.push_back(g.element_order(x));
  CHECK(orders == std::vector<std::uint32_t>{1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12});
}

TEST_CASE("close_subset generates the expected subgroup") {
  const GroupTable g = make_family("cyclic", {12});
  CHECK(close_subset(g, {2}) == std::vector<std::uint32_t>{0, 2, 4, 6, 8, 10});
  CHECK(close_subset(g, {4, 6}) == std::vector<std::uint32_t>{0, 2, 4, 6, 8, 10});
  CHECK(close_subset(g, {}) == std::vector<std::uint32_t>{0});
  const auto capped = close_subset_capped(g, {1}, 5);
  CHECK(!capped.has_value());
}

TEST_CASE("permutation closure builds the symmetric group on 3 letters") {
  const GroupTable g = build("perm:(1,2,3);(1,2)");
  REQUIRE(g.order == 6);
  CHECK(!g.is_abelian());
  std::multiset<std::uint32_t> orders;
  for (std::uint32_t x = 0; x < 6; ++x) orders.insert(g.element_order(x));
  CHECK(orders == std::multiset<std::uint32_t>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("matrix closure builds SL(2,3)") {
  const GroupTable g = build("matrix:3:1,1,0,1;0,1,2,0");
  REQUIRE(g.order == 24);
  std::uint32_t involutions = 0;
  for (std::uint32_t x = 1; x < g.order; ++x)
    if (g.mul(x, x) == 0) ++involutions;
  CHECK(involutions == 1);  // -I is the only involution
}

TEST_CASE("invalid generators are rejected") {
  CHECK_THROWS_AS(build("matrix:4:1,1,0,1"), InvalidGenerator);  // modulus not prime
  CHECK_THROWS_AS(build("matrix:5:1,1,2,2"), InvalidGenerator);  // singular
  CHECK_THROWS_AS(build("perm:(1,2)(2,3)"), ParseError);         // point repeated
}

TEST_CASE("group caps stop runaway closures") {
  Caps tiny;
  tiny.group_order = 10;
  CHECK_THROWS_AS(build("perm:(1,2,3,4,5);(1,2,3)", tiny), CapExceeded);
  CHECK(build("cyclic:10", tiny).order == 10);
}

TEST_CASE("conjugacy classes of elements") {
  const GroupTable g = build("perm:(1,2,3);(1,2)");  // S3
  const auto classes = conjugacy_classes_elements(g);
  // {id}, three transpositions, two 3-cycles
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  CHECK(classes.involution_class_count(g) == 1);
}

TEST_CASE("center and commutator subgroup") {
  const GroupTable q8 = make_family("quaternion", {8});
  CHECK(center(q8).order() == 2);
  CHECK(commutator_subgroup(q8, full_subgroup(q8)).order() == 2);

  const GroupTable s3 = build("perm:(1,2,3);(1,2)");
  CHECK(center(s3).order() == 1);
  CHECK(commutator_subgroup(s3, full_subgroup(s3)).order() == 3);
}

TEST_CASE("solvability by derived series") {
  CHECK(is_solvable(build("perm:(1,2,3);(1,2)")));
  CHECK(is_solvable(make_family("quaternion", {16})));
  CHECK(is_solvable(build("perm:(1,2,3,4);(1,2)")));       // S4
  CHECK(!is_solvable(build("perm:(1,2,3,4,5);(1,2,3)")));  // A5
  CHECK(!is_solvable(build("sl2:5")));
}

TEST_CASE("quotient by a normal subgroup") {
  const GroupTable g = make_family("cyclic", {12});
  const Subgroup n = generated_subgroup(g, {4});  // order 3
  const QuotientResult q = quotient(g, n);
  CHECK(q.group.order == 4);
  CHECK(recognize_shape(q.group).is_cyclic());

  const GroupTable s3 = build("perm:(1,2,3);(1,2)");
  std::uint32_t three = 0;
  for (std::uint32_t x = 1; x < 6; ++x)
    if (s3.element_order(x) == 3) three = x;
  const QuotientResult q2 = quotient(s3, generated_subgroup(s3, {three}));
  CHECK(q2.group.order == 2);

  std::uint32_t two = 0;
  for (std::uint32_t x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) two = x;
  CHECK_THROWS_AS(quotient(s3, generated_subgroup(s3, {two})), NotNormal);
}

TEST_CASE("closure assigns breadth-first ids with identity zero") {
  const GroupTable g = build("perm:(1,2,3,4);(1,2)");
  REQUIRE(g.order == 24);
  CHECK(g.mul(0, 5) == 5);
  CHECK(g.mul(5, 0) == 5);
  for (std::uint32_t x = 0; x < g.order; ++x) {
    CHECK(g.mul(x, g.inv(x)) == 0);
    CHECK(g.mul(g.inv(x), x) == 0);
  }
}

TEST_CASE("generated subgroups satisfy Lagrange") {
  const GroupTable g = build("perm:(1,2,3,4);(1,2)");
  for (std::uint32_t x = 0; x < g.order; ++x) {
    const Subgroup s = generated_subgroup(g, {x});
    CHECK(g.order % s.order() == 0);
    CHECK(s.order() == g.element_order(x));
  }
}
