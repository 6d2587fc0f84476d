#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "perfcode/catalog.hpp"
#include "perfcode/shapes.hpp"

using namespace perfcode;

TEST_CASE("parsing then printing a canonical spec is the identity") {
  for (const char* spec : {
           "cyclic:12",
           "dihedral:8",
           "quaternion:16",
           "elemab:2:3",
           "sl2:5",
           "psl2:7",
           "pgl2:5",
           "binary_octahedral",
           "perm:(1,2,3);(1,2)",
           "perm:(1,2,3,4,5);(1,2,3)",
           "matrix:3:1,1,0,1;0,1,2,0",
           "product:cyclic:2*cyclic:3",
           "product:cyclic:2*product:cyclic:3*cyclic:5",
           "semidirect:cyclic:7:cyclic:3:exp=2",
           "semidirect:elemab:2:2:cyclic:3:mat=0,1;1,1",
           "semidirect:cyclic:5:quaternion:8:exp=4",
           "subgroup:perm:(1,2,3,4);(1,2):8:0",
           "product:semidirect:cyclic:3:cyclic:4:exp=2*cyclic:5",
       }) {
    CAPTURE(spec);
    CHECK(to_string(parse_spec(spec)) == spec);
  }
}

TEST_CASE("parse errors carry the offending byte position") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_spec(text);
    } catch (const ParseError& e) {
      return e.position;
    }
    return SIZE_MAX;
  };
  CHECK(position_of("nonsense:4") == 0);
  CHECK(position_of("cyclic") == 6);        // missing ':'
  CHECK(position_of("cyclic:") == 7);       // missing number
  CHECK(position_of("cyclic:5junk") == 8);  // trailing characters
  CHECK(position_of("perm:(1,2)(1,3)") < SIZE_MAX);  // repeated point
  CHECK(position_of("product:cyclic:2") == 16);      // missing '*'
  CHECK(position_of("semidirect:cyclic:3:cyclic:2:pow=2") < SIZE_MAX);
  CHECK(position_of("cyclic:99999999999999999999") < SIZE_MAX);  // number too large
}

TEST_CASE("matrix family orders over small fields") {
  CHECK(build("sl2:2").order == 6);
  CHECK(build("sl2:3").order == 24);
  CHECK(build("sl2:4").order == 60);
  CHECK(build("sl2:5").order == 120);
  CHECK(build("sl2:8").order == 504);
  CHECK(build("sl2:9").order == 720);
  CHECK(build("psl2:3").order == 12);
  CHECK(build("psl2:5").order == 60);
  CHECK(build("psl2:7").order == 168);
  CHECK(build("psl2:9").order == 360);
  CHECK(build("pgl2:3").order == 24);
  CHECK(build("pgl2:5").order == 120);
  CHECK_THROWS_AS(build("sl2:32"), InvalidParams);
  CHECK_THROWS_AS(build("sl2:6"), InvalidParams);
}

TEST_CASE("matrix family shapes") {
  CHECK(bounded_isomorphic(build("sl2:2"), build("dihedral:6")).isomorphic);
  CHECK(bounded_isomorphic(build("psl2:3"), build("perm:(1,2,3);(2,3,4)")).isomorphic);
  CHECK(bounded_isomorphic(build("psl2:4"), build("perm:(1,2,3,4,5);(1,2,3)")).isomorphic);
  CHECK(bounded_isomorphic(build("psl2:5"), build("perm:(1,2,3,4,5);(1,2,3)")).isomorphic);
  CHECK(bounded_isomorphic(build("pgl2:3"), build("perm:(1,2,3,4);(1,2)")).isomorphic);
}

TEST_CASE("semidirect products follow the action descriptor") {
  const GroupTable f21 = build("semidirect:cyclic:7:cyclic:3:exp=2");
  CHECK(f21.order == 21);
  CHECK(!f21.is_abelian());

  const GroupTable trivial_action = build("semidirect:cyclic:7:cyclic:3:exp=1");
  CHECK(trivial_action.order == 21);
  CHECK(trivial_action.is_abelian());
  CHECK(bounded_isomorphic(trivial_action, build("cyclic:21")).isomorphic);

  // x -> x² has multiplicative order 4 modulo 5; a Z3 top cannot act by it.
  CHECK_THROWS_AS(build("semidirect:cyclic:5:cyclic:3:exp=2"), InvalidAction);

  const GroupTable d10 = build("semidirect:cyclic:5:cyclic:2:exp=4");
  CHECK(bounded_isomorphic(d10, build("dihedral:10")).isomorphic);

  const GroupTable a4 = build("semidirect:elemab:2:2:cyclic:3:mat=0,1;1,1");
  CHECK(a4.order == 12);
  CHECK(bounded_isomorphic(a4, build("perm:(1,2,3);(2,3,4)")).isomorphic);
  CHECK_THROWS_AS(build("semidirect:elemab:2:2:cyclic:3:mat=1,0;0,1;1,1"), ParseError);
  // Singular action matrix: not a bijection.
  CHECK_THROWS_AS(build("semidirect:elemab:2:2:cyclic:2:mat=1,1;1,1"), InvalidAction);
}

TEST_CASE("matrix generator specs") {
  const GroupTable g = build("matrix:3:1,1,0,1;0,1,2,0");
  CHECK(g.order == 24);  // SL(2,3)
  CHECK(bounded_isomorphic(g, build("sl2:3")).isomorphic);
}

TEST_CASE("subgroup specs carve verified subgroups out of a parent") {
  // Order-8 subgroups of S4 are its Sylow-2s, all dihedral.
  const GroupTable d8 = build("subgroup:perm:(1,2,3,4);(1,2):8:0");
  CHECK(d8.order == 8);
  CHECK(recognize_shape(d8).is_dihedral());
  // Three of them, and the out-of-range index reports how many exist.
  CHECK(build("subgroup:perm:(1,2,3,4);(1,2):8:2").order == 8);
  CHECK_THROWS_AS(build("subgroup:perm:(1,2,3,4);(1,2):8:3"), InvalidParams);
  CHECK_THROWS_AS(build("subgroup:cyclic:12:5:0"), InvalidParams);  // no order-5 subgroup

  const GroupTable v4 = build("subgroup:perm:(1,2,3);(2,3,4):4:0");
  CHECK(recognize_shape(v4).is_elementary_abelian());
}

TEST_CASE("the binary octahedral group") {
  const GroupTable g = build("binary_octahedral");
  CHECK(g.order == 48);
  std::uint32_t involutions = 0;
  for (ElementId x = 1; x < g.order; ++x)
    if (g.mul(x, x) == 0) ++involutions;
  CHECK(involutions == 1);  // unique central involution
  const Subgroup syl = sylow(g, 2);
  CHECK(syl.order() == 16);
  CHECK(recognize_shape(subgroup_table(g, syl)).is_generalized_quaternion());
  // Its central quotient is S4.
  const GroupTable q = quotient(g, generated_subgroup(g, {center(g).members[1]})).group;
  CHECK(bounded_isomorphic(q, build("perm:(1,2,3,4);(1,2)")).isomorphic);
}

TEST_CASE("finite field tables satisfy the field axioms") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    CAPTURE(q);
    const detail::FieldTable f = detail::make_field(q);
    REQUIRE(f.q == q);
    for (std::uint32_t x = 0; x < q; ++x) {
      CHECK(f.add(x, 0) == x);
      CHECK(f.mul(x, 1) == x);
      CHECK(f.mul(x, 0) == 0);
      CHECK(f.add(x, f.neg(x)) == 0);
      if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      for (std::uint32_t y = 0; y < q; ++y) {
        CHECK(f.add(x, y) == f.add(y, x));
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (std::uint32_t z = 0; z < q; ++z) {
          CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
    // The recorded primitive element generates the multiplicative group.
    std::uint32_t cur = f.primitive, ord = 1;
    while (cur != 1) {
      cur = f.mul(cur, f.primitive);
      ++ord;
    }
    CHECK(ord == q - 1);
  }
}

TEST_CASE("the order-529 field used for the double cover") {
  const detail::FieldTable f = detail::make_field(529);
  CHECK(f.p == 23);
  CHECK(f.k == 2);
  CHECK(f.mul(23, 23) == f.neg(18));  // the adjoined root squares to 5
  for (std::uint32_t x = 1; x < 529; ++x) CHECK(f.mul(x, f.inv(x)) == 1);
  // Sampled associativity and distributivity.
  std::uint32_t s = 1;
  for (std::uint32_t t = 0; t < 20000; ++t) {
    s = s * 1664525u + 1013904223u;
    const std::uint32_t x = s % 529, y = (s >> 10) % 529, z = (s >> 20) % 529;
    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
    CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
  }
  std::uint32_t cur = f.primitive, ord = 1;
  while (cur != 1) {
    cur = f.mul(cur, f.primitive);
    ++ord;
  }
  CHECK(ord == 528);
  CHECK_THROWS_AS(detail::make_field(121), InvalidParams);  // unsupported non-prime size
  CHECK_THROWS_AS(detail::make_field(6), InvalidParams);
}

TEST_CASE("the default catalogue is sorted, duplicate-free, and honest about orders") {
  const auto cat = default_catalogue();
  REQUIRE(cat.size() > 400);
  std::set<std::string> specs;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (i) {
      const bool ordered = cat[i - 1].order < cat[i].order ||
                           (cat[i - 1].order == cat[i].order && cat[i - 1].spec < cat[i].spec);
      CHECK(ordered);
    }
    CHECK(specs.insert(cat[i].spec).second);
    CHECK(cat[i].order <= 200);
  }
  for (const char* wanted : {
           "cyclic:1", "cyclic:200", "cyclic:128", "quaternion:128", "dihedral:8",
           "elemab:2:2", "perm:(1,2,3);(2,3,4)", "perm:(1,2,3,4,5);(1,2)", "sl2:3", "sl2:5",
           "psl2:7", "binary_octahedral", "semidirect:cyclic:7:cyclic:3:exp=2",
           "semidirect:cyclic:11:cyclic:5:exp=3", "semidirect:cyclic:5:cyclic:8:exp=2",
           "semidirect:cyclic:5:quaternion:8:exp=4", "product:cyclic:5*cyclic:8",
           "product:cyclic:3*quaternion:8",
       }) {
    CAPTURE(wanted);
    CHECK(specs.count(wanted) == 1);
  }
}

TEST_CASE("every catalogue entry builds to its advertised order") {
  for (const auto& entry : default_catalogue()) {
    CAPTURE(entry.spec);
    const GroupTable g = build(entry.spec);
    CHECK(g.order == entry.order);
    CHECK(g.source == entry.spec);
  }
}
