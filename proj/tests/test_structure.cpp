#include <catch2/catch_amalgamated.hpp>

#include "derivant/constructors.hpp"
#include "derivant/structure.hpp"
#include "oracles.hpp"

using namespace derivant;

namespace {

// derived subgroup via the all-pairs commutator-closure oracle
bool derived_matches_oracle(const PermGroup &g) {
  auto elems = oracles::closure(g.degree(), g.generators());
  auto oracle = oracles::commutator_closure(g.degree(), elems);
  PermGroup d = derived_subgroup(g);
  if (d.order() != oracle.size())
    return false;
  for (const auto &im : oracle)
    if (!d.contains(Perm(im)))
      return false;
  return true;
}

} // namespace

TEST_CASE("derived subgroup of D8") {
  PermGroup d8 = dihedral(8);
  PermGroup d = derived_subgroup(d8);
  CHECK(d.order() == 2);
  CHECK(d.contains(parse_cycles("(1 3)(2 4)", 4)));
}

TEST_CASE("derived subgroup of abelian groups is trivial") {
  CHECK(derived_subgroup(cyclic(12)).is_trivial());
  CHECK(derived_subgroup(direct_product(cyclic(4), cyclic(6))).is_trivial());
}

TEST_CASE("derived subgroup matches the commutator-closure oracle") {
  // S4 explicitly (closing all 24^2 commutators), then a wider corpus
  CHECK(derived_matches_oracle(symmetric(4)));
  std::vector<PermGroup> corpus{
    dihedral(8),   quaternion8(),   alternating(4),
    metacyclic(7, 6, 3), agl(1, 7), direct_product(symmetric(3), cyclic(4)),
    wreath_imprimitive(dihedral(8), 2), asl(2, 3), central_product_d8_q8()};
  for (const PermGroup &g : corpus)
    CHECK(derived_matches_oracle(g));
}

TEST_CASE("derived series of S4") {
  DerivedSeries s = derived_series(symmetric(4));
  REQUIRE(s.terms.size() == 4);
  CHECK(s.terms[0].order() == 24);
  CHECK(s.terms[1].order() == 12);
  CHECK(s.terms[2].order() == 4);
  CHECK(s.terms[3].order() == 1);
  CHECK(is_solvable(symmetric(4)));
}

TEST_CASE("perfect cores") {
  CHECK(equals(perfect_core(alternating(5)), alternating(5)));
  CHECK(perfect_core(agl(1, 7)).is_trivial()); // series 7:6 > 7 > 1
  CHECK(is_perfect(alternating(5)));
  CHECK_FALSE(is_perfect(symmetric(4)));
}

TEST_CASE("normal closures in S4") {
  PermGroup s4 = symmetric(4);
  CHECK(normal_closure(s4, {parse_cycles("(1 2)", 4)}).order() == 24);
  CHECK(normal_closure(s4, {parse_cycles("(1 2)(3 4)", 4)}).order() == 4);
  CHECK(normal_closure(s4, {Perm(4)}).is_trivial());
  CHECK_THROWS_AS(normal_closure(dihedral(8), {parse_cycles("(1 2)", 4)}),
                  not_subgroup_error);
}

TEST_CASE("is_normal") {
  PermGroup s4 = symmetric(4);
  PermGroup v4(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  CHECK(is_normal(v4, s4));
  CHECK(is_normal(alternating(4), s4));
  PermGroup c2(4, {parse_cycles("(1 2)", 4)});
  CHECK_FALSE(is_normal(c2, s4));
}

TEST_CASE("centers") {
  PermGroup d8 = dihedral(8);
  PermGroup z = center(d8);
  CHECK(z.order() == 2);
  CHECK(z.contains(parse_cycles("(1 3)(2 4)", 4)));
  CHECK(center(symmetric(4)).is_trivial());
  CHECK(center(symmetric(5)).is_trivial());
  PermGroup c4(4, {parse_cycles("(1 2 3 4)", 4)});
  CHECK(equals(center(c4), c4));
}

TEST_CASE("center budget is loud") {
  CHECK_THROWS_AS(center(symmetric(9), 1000), budget_error);
}

TEST_CASE("minimal normal subgroups and socle") {
  auto mins = minimal_normal_subgroups(symmetric(4));
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);
  CHECK(socle(symmetric(4)).order() == 4);

  CHECK(equals(socle(alternating(5)), alternating(5)));

  PermGroup agl17 = agl(1, 7);
  auto m7 = minimal_normal_subgroups(agl17);
  REQUIRE(m7.size() == 1);
  CHECK(m7[0].order() == 7); // the translation subgroup

  // V4 has three minimal normal subgroups; socle is the whole group
  PermGroup v4(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  CHECK(minimal_normal_subgroups(v4).size() == 3);
  CHECK(equals(socle(v4), v4));
}

TEST_CASE("catalog 2-homogeneous groups have a unique minimal normal subgroup") {
  std::vector<PermGroup> catalog{agl1_squares(7), agl1_squares(11),
                                 agl1_squares(27), asl(2, 3), agl(2, 3),
                                 psl(2, 9)};
  for (const PermGroup &g : catalog)
    CHECK(minimal_normal_subgroups(g).size() == 1);
}

TEST_CASE("derived subgroup is normal with abelian quotient") {
  for (const PermGroup &g : {symmetric(4), dihedral(8), metacyclic(9, 6, 2)}) {
    PermGroup d = derived_subgroup(g);
    CHECK(is_normal(d, g));
    QuotientRep qr(g, d);
    CHECK(qr.quotient_group().is_abelian());
  }
}
