#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "perfcode/catalog.hpp"
#include "perfcode/lattice.hpp"
#include "perfcode/shapes.hpp"

using namespace perfcode;

namespace {

std::vector<std::vector<std::uint32_t>> member_lists(const std::vector<Subgroup>& subs) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const Subgroup& s : subs) out.push_back(s.members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("subgroup enumeration matches the subset oracle") {
  for (const char* spec : {"cyclic:12", "perm:(1,2,3);(1,2)", "quaternion:8", "elemab:2:3",
                           "perm:(1,2,3);(2,3,4)", "dihedral:12", "perm:(1,2,3,4);(1,2)",
                           "cyclic:24", "semidirect:cyclic:7:cyclic:3:exp=2"}) {
    CAPTURE(spec);
    const GroupTable g = build(spec);
    CHECK(member_lists(all_subgroups(g)) == oracle::subgroups(g));
  }
}

TEST_CASE("frozen subgroup counts") {
  CHECK(all_subgroups(build("cyclic:12")).size() == 6);           // one per divisor
  CHECK(all_subgroups(build("perm:(1,2,3);(1,2)")).size() == 6);  // S3
  CHECK(all_subgroups(build("quaternion:8")).size() == 6);
  CHECK(all_subgroups(build("elemab:2:3")).size() == 16);  // subspace counts 1+7+7+1
  CHECK(all_subgroups(build("perm:(1,2,3);(2,3,4)")).size() == 10);  // A4
}

TEST_CASE("conjugacy classes of subgroups match the oracle") {
  for (const char* spec :
       {"perm:(1,2,3);(1,2)", "perm:(1,2,3);(2,3,4)", "dihedral:8", "perm:(1,2,3,4);(1,2)"}) {
    CAPTURE(spec);
    const GroupTable g = build(spec);
    const SubgroupClassSet classes = subgroup_classes(g, all_subgroups(g));
    const auto expected = oracle::conjugacy_classes(g, oracle::subgroups(g));
    REQUIRE(classes.classes.size() == expected.size());
    // Compare as sorted sets of sorted classes of member lists.
    std::vector<std::vector<std::vector<std::uint32_t>>> got;
    for (const auto& cls : classes.classes) {
      std::vector<std::vector<std::uint32_t>> c;
      for (const auto& s : cls.conjugates) c.push_back(s.members);
      std::sort(c.begin(), c.end());
      got.push_back(std::move(c));
    }
    std::sort(got.begin(), got.end());
    auto want = expected;
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("class representatives are least and sizes divide the order") {
  const GroupTable g = build("perm:(1,2,3,4);(1,2)");
  for (const auto& cls : subgroup_classes(g, all_subgroups(g)).classes) {
    for (const auto& s : cls.conjugates) CHECK(cls.representative.members <= s.members);
    CHECK(g.order % cls.size() == 0);  // orbit-stabilizer
  }
}

TEST_CASE("sylow subgroups") {
  const GroupTable a4 = build("perm:(1,2,3);(2,3,4)");
  CHECK(sylow(a4, 2).order() == 4);
  CHECK(sylow(a4, 3).order() == 3);
  CHECK(sylow(a4, 5).order() == 1);

  const GroupTable sl23 = build("sl2:3");
  const Subgroup p2 = sylow(sl23, 2);
  CHECK(p2.order() == 8);
  CHECK(recognize_shape(subgroup_table(sl23, p2)).is_generalized_quaternion());

  const GroupTable z360 = build("cyclic:360");
  CHECK(sylow(z360, 2).order() == 8);
  CHECK(sylow(z360, 3).order() == 9);
  CHECK(sylow(z360, 5).order() == 5);
}

TEST_CASE("normalizer computations") {
  const GroupTable s3 = build("perm:(1,2,3);(1,2)");
  std::uint32_t two = 0, three = 0;
  for (std::uint32_t x = 1; x < 6; ++x) {
    if (s3.element_order(x) == 2 && !two) two = x;
    if (s3.element_order(x) == 3 && !three) three = x;
  }
  CHECK(normalizer(s3, generated_subgroup(s3, {two})).order() == 2);
  CHECK(normalizer(s3, generated_subgroup(s3, {three})).order() == 6);
}

TEST_CASE("2-core computations") {
  CHECK(core_o2(build("perm:(1,2,3);(2,3,4)")).order() == 4);   // A4
  CHECK(core_o2(build("perm:(1,2,3);(1,2)")).order() == 1);     // S3
  CHECK(core_o2(build("sl2:3")).order() == 8);
  CHECK(core_o2(build("sl2:5")).order() == 2);
  CHECK(core_o2(build("cyclic:24")).order() == 8);
}

TEST_CASE("hall subgroups exist for solvable groups and may not otherwise") {
  const GroupTable z30 = build("cyclic:30");
  const auto h35 = hall_subgroup(z30, {3, 5});
  REQUIRE(h35.has_value());
  CHECK(h35->order() == 15);

  const GroupTable a5 = build("perm:(1,2,3,4,5);(1,2,3)");
  CHECK(!hall_subgroup(a5, {2, 5}).has_value());  // would need order 20
  const auto h23 = hall_subgroup(a5, {2, 3});     // A4 has order 12
  REQUIRE(h23.has_value());
  CHECK(h23->order() == 12);
}

TEST_CASE("maximal subgroup classes of A4") {
  const GroupTable a4 = build("perm:(1,2,3);(2,3,4)");
  const SubgroupClassSet maxes = maximal_subgroups(a4);
  std::multiset<std::uint32_t> orders;
  for (const auto& cls : maxes.classes) orders.insert(cls.representative.order());
  CHECK(orders == std::multiset<std::uint32_t>{3, 4});
}

TEST_CASE("normal subgroups and socle") {
  const GroupTable a4 = build("perm:(1,2,3);(2,3,4)");
  const auto ns = normal_subgroups_and_socle(a4);
  std::vector<std::uint32_t> orders;
  for (const auto& n : ns.normals) orders.push_back(n.order());
  CHECK(orders == std::vector<std::uint32_t>{1, 4, 12});
  CHECK(ns.socle.order() == 4);

  CHECK(normal_subgroups_and_socle(build("perm:(1,2,3);(1,2)")).socle.order() == 3);
  CHECK(normal_subgroups_and_socle(build("quaternion:8")).socle.order() == 2);
  CHECK(normal_subgroups_and_socle(build("cyclic:12")).socle.order() == 6);
  CHECK(normal_subgroups_and_socle(build("perm:(1,2,3,4,5);(1,2,3)")).socle.order() == 60);
}

TEST_CASE("prime signatures") {
  const PrimeSignature sig = prime_signature_of(360);
  CHECK(sig.primes == std::vector<std::uint32_t>{2, 3, 5});
  CHECK(sig.exponents == std::vector<std::uint32_t>{3, 2, 1});
  CHECK(sig.pi_count() == 3);

  CHECK(prime_signature_of(1).pi_count() == 0);
  CHECK(prime_signature_of(2).pi_count() == 1);
  CHECK(prime_signature_of(30).odd_part_squarefree);
  CHECK(!prime_signature_of(90).odd_part_squarefree);
  CHECK(prime_signature_of(24).odd_part_squarefree);
}

TEST_CASE("lattice cap raises") {
  Caps tiny;
  tiny.lattice_order = 10;
  const GroupTable g = build("cyclic:12");
  CHECK_THROWS_AS(all_subgroups(g, tiny), CapExceeded);
}

TEST_CASE("pow_element matches repeated multiplication") {
  const GroupTable g = build("cyclic:15");
  for (std::uint32_t x = 0; x < 15; ++x)
    for (std::uint32_t e = 0; e < 20; ++e) CHECK(detail::pow_element(g, x, e) == (x * e) % 15);
}
