#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "perfcode/catalog.hpp"
#include "perfcode/codes.hpp"

using namespace perfcode;

namespace {

std::multiset<std::uint32_t> delta_orders(const std::string& spec) {
  const GroupTable g = build(spec);
  const DeltaReport r = delta(g);
  std::multiset<std::uint32_t> out;
  for (const auto& e : r.delta_classes) out.insert(e.representative.order());
  return out;
}

Subgroup subgroup_of_order(const GroupTable& g, std::uint32_t n) {
  for (auto& s : all_subgroups(g))
    if (s.order() == n) return s;
  throw std::logic_error("no subgroup of the requested order");
}

}  // namespace

TEST_CASE("frozen delta inventories for small groups") {
  CHECK(delta_orders("cyclic:12") == std::multiset<std::uint32_t>{3, 4});
  CHECK(delta_orders("perm:(1,2,3);(2,3,4)") == std::multiset<std::uint32_t>{2, 3, 4});  // A4
  CHECK(delta_orders("perm:(1,2,3);(1,2)") == std::multiset<std::uint32_t>{2, 3});       // S3
  CHECK(delta_orders("quaternion:8").empty());
  CHECK(delta_orders("cyclic:8").empty());
  CHECK(delta_orders("cyclic:9") == std::multiset<std::uint32_t>{3});
  CHECK(delta_orders("dihedral:8") == std::multiset<std::uint32_t>{2, 2, 4, 4, 4});
  CHECK(delta_orders("cyclic:20") == std::multiset<std::uint32_t>{4, 5});
  CHECK(delta_orders("cyclic:30") == std::multiset<std::uint32_t>{2, 3, 5, 6, 10, 15});
  CHECK(delta_orders("sl2:3") == std::multiset<std::uint32_t>{3, 8});
}

TEST_CASE("delta of SL(2,5)") {
  const DeltaReport r = delta(build("sl2:5"));
  CHECK(r.delta_count == 4);
  CHECK(r.pi_count == 3);
  std::multiset<std::uint32_t> orders;
  for (const auto& e : r.delta_classes) orders.insert(e.representative.order());
  CHECK(orders == std::multiset<std::uint32_t>{3, 5, 8, 24});
}

TEST_CASE("decision routes agree with each other and with the connection-set scan") {
  for (const char* spec : {"cyclic:12", "dihedral:8", "quaternion:8", "perm:(1,2,3);(2,3,4)",
                           "perm:(1,2,3);(1,2)", "cyclic:8", "cyclic:9", "sl2:3",
                           "dihedral:12", "elemab:2:3"}) {
    CAPTURE(spec);
    const GroupTable g = build(spec);
    for (const auto& cls : subgroup_classes(g).classes) {
      const Subgroup& h = cls.representative;
      CAPTURE(h.members);
      const bool by_criterion = is_perfect_code_criterion(g, h);
      CHECK(by_criterion == is_perfect_code_sylow_reduction(g, h));
      CHECK(by_criterion == is_perfect_code(g, h));
      const auto t = find_inverse_closed_transversal(g, h);
      CHECK(by_criterion == t.has_value());
      if (t.has_value()) {
        CHECK(t->inverse_closed);
        CHECK(t->reps.size() == h.index());
        CHECK(verify_in_cayley(g, h, *t));
      }
      CHECK(by_criterion == oracle::transversal_exists(g, h.members));
      const auto scanned = oracle::perfect_code_by_cayley_scan(g, h.members);
      REQUIRE(scanned.has_value());
      CHECK(by_criterion == *scanned);
    }
  }
}

TEST_CASE("perfect-code status is a property of the conjugacy class") {
  const GroupTable g = build("perm:(1,2,3,4);(1,2)");  // S4
  for (const auto& cls : subgroup_classes(g).classes) {
    const bool code = is_perfect_code(g, cls.representative);
    for (const auto& s : cls.conjugates) CHECK(is_perfect_code(g, s) == code);
  }
}

TEST_CASE("delta overloads agree") {
  const GroupTable g = build("perm:(1,2,3,4);(1,2)");
  const Caps caps;
  const DeltaReport a = delta(g, caps);
  const DeltaReport b = delta(g, subgroup_classes(g, all_subgroups(g, caps)), caps);
  REQUIRE(a.delta_count == b.delta_count);
  for (std::uint32_t i = 0; i < a.delta_count; ++i) {
    CHECK(a.delta_classes[i].representative.members == b.delta_classes[i].representative.members);
    CHECK(a.delta_classes[i].class_size == b.delta_classes[i].class_size);
  }
}

TEST_CASE("audit mode re-derives every membership through a Cayley graph") {
  for (const char* spec : {"cyclic:12", "perm:(1,2,3,4);(1,2)", "sl2:3"}) {
    CAPTURE(spec);
    const GroupTable g = build(spec);
    const Caps caps;
    const DeltaReport plain = delta(g, caps, false);
    const DeltaReport audited = delta(g, caps, true);
    CHECK(plain.delta_count == audited.delta_count);
    for (const auto& e : audited.delta_classes) {
      CAPTURE(e.representative.members);
      CHECK(std::find(e.routes.begin(), e.routes.end(), "transversal-cayley") != e.routes.end());
    }
  }
}

TEST_CASE("delta report metadata") {
  const DeltaReport r = delta(build("cyclic:30"));
  CHECK(r.group_order == 30);
  CHECK(r.pi_count == 3);
  CHECK(r.delta_count == r.delta_classes.size());
  for (const auto& e : r.delta_classes) {
    CHECK(!e.routes.empty());
    CHECK(e.class_size == 1);  // abelian: every class is a singleton
  }
}

TEST_CASE("cayley graph adjacency follows the right-division convention") {
  const GroupTable z6 = build("cyclic:6");
  const CayleyGraph c = CayleyGraph::from_set(z6, {1, 5});
  CHECK(c.adjacent(z6, 0, 1));
  CHECK(c.adjacent(z6, 1, 0));
  CHECK(c.adjacent(z6, 5, 0));
  CHECK(!c.adjacent(z6, 0, 2));
  CHECK(!c.adjacent(z6, 3, 3));
  for (ElementId x = 0; x < 6; ++x)
    for (ElementId y = 0; y < 6; ++y) CHECK(c.adjacent(z6, x, y) == c.adjacent(z6, y, x));

  const GroupTable s3 = build("perm:(1,2,3);(1,2)");
  std::vector<std::uint32_t> transpositions;
  for (ElementId x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) transpositions.push_back(x);
  REQUIRE(transpositions.size() == 3);
  const CayleyGraph cs = CayleyGraph::from_set(s3, transpositions);
  for (ElementId x = 0; x < 6; ++x)
    for (ElementId y = 0; y < 6; ++y) CHECK(cs.adjacent(s3, x, y) == cs.adjacent(s3, y, x));
}

TEST_CASE("odd order or odd index fast path") {
  const GroupTable z12 = build("cyclic:12");
  CHECK(fast_path_odd(z12, subgroup_of_order(z12, 3)) == Ternary::yes);
  CHECK(fast_path_odd(z12, subgroup_of_order(z12, 4)) == Ternary::yes);
  CHECK(fast_path_odd(z12, subgroup_of_order(z12, 2)) == Ternary::unknown);
  CHECK(fast_path_odd(z12, subgroup_of_order(z12, 6)) == Ternary::unknown);
}

TEST_CASE("transversal verification rejects malformed inputs") {
  const GroupTable z12 = build("cyclic:12");
  const Subgroup h = subgroup_of_order(z12, 4);  // {0, 3, 6, 9}, cosets of index 3
  Transversal good;
  good.reps = {0, 1, 11};
  CHECK(verify_in_cayley(z12, h, good));

  Transversal wrong_count;
  wrong_count.reps = {0, 1};
  CHECK_THROWS_AS(verify_in_cayley(z12, h, wrong_count), NotATransversal);

  Transversal duplicate_coset;
  duplicate_coset.reps = {0, 1, 4};  // 1 and 4 share the coset H+1
  CHECK_THROWS_AS(verify_in_cayley(z12, h, duplicate_coset), NotATransversal);

  Transversal out_of_range;
  out_of_range.reps = {0, 1, 99};
  CHECK_THROWS_AS(verify_in_cayley(z12, h, out_of_range), NotATransversal);

  Transversal not_symmetric;
  not_symmetric.reps = {0, 1, 2};  // inverse of 1 is 11, not a chosen rep
  CHECK_THROWS_AS(verify_in_cayley(z12, h, not_symmetric), NotInverseClosed);
}

TEST_CASE("transversal search respects the index cap") {
  const GroupTable z12 = build("cyclic:12");
  const Subgroup h = subgroup_of_order(z12, 2);  // index 6
  Caps tiny;
  tiny.transversal_index = 2;
  CHECK_THROWS_AS(find_inverse_closed_transversal(z12, h, tiny), CapExceeded);
}
