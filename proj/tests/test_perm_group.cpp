#include <catch2/catch_amalgamated.hpp>

#include "derivant/actions.hpp"
#include "derivant/constructors.hpp"
#include "derivant/perm_group.hpp"
#include "oracles.hpp"

using namespace derivant;

TEST_CASE("orders of standard groups") {
  CHECK(symmetric(4).order() == 24);
  CHECK(dihedral(8).order() == 8);
  CHECK(alternating(5).order() == 60);
  CHECK(agammal1(27).order() == 2106); // q(q-1)f = 27*26*3
}

TEST_CASE("membership agrees with closure enumeration") {
  // every strong generator passes, no non-member does; checked against the
  // explicit element sets for groups of order <= 10^4
  struct Case {
    PermGroup g;
  };
  std::vector<PermGroup> corpus{dihedral(8), symmetric(4), alternating(5),
                                quaternion8(), metacyclic(7, 6, 3),
                                wreath_imprimitive(dihedral(8), 2)};
  for (const PermGroup &g : corpus) {
    auto set = oracles::closure(g.degree(), g.generators());
    CHECK(g.order() == set.size());
    std::size_t checked = 0;
    for (const auto &im : set) {
      CHECK(g.contains(Perm(im)));
      if (++checked > 200)
        break;
    }
    // a couple of non-members
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
      std::vector<Point> img(g.degree());
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      Perm p(img);
      CHECK(g.contains(p) == (set.count(p.images()) > 0));
    }
  }
}

TEST_CASE("bsgs order invariant under generator permutation and redundancy") {
  PermGroup d8 = dihedral(8);
  std::vector<Perm> gens = d8.generators();
  std::reverse(gens.begin(), gens.end());
  PermGroup d8r(4, gens);
  CHECK(d8r.order() == 8);
  gens.push_back(parse_cycles("(1 3)(2 4)", 4)); // redundant r^2
  gens.push_back(Perm(4));                       // identity allowed
  PermGroup d8x(4, gens);
  CHECK(d8x.order() == 8);
  CHECK(equals(d8, d8x));
}

TEST_CASE("element enumeration yields each element exactly once") {
  PermGroup g = metacyclic(6, 4, 5);
  std::set<std::vector<Point>> seen;
  g.for_each_element([&](const Perm &p) { CHECK(seen.insert(p.images()).second); });
  CHECK(seen.size() == g.order());
}

TEST_CASE("random elements are members and roughly uniform") {
  PermGroup d8 = dihedral(8);
  std::mt19937_64 rng(20240801);
  std::map<std::vector<Point>, int> freq;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    Perm p = d8.random_element(rng);
    CHECK(d8.contains(p));
    freq[p.images()]++;
  }
  CHECK(freq.size() == 8);
  // each frequency within 5 sigma of draws/8
  double expect = draws / 8.0;
  double sigma = std::sqrt(draws * (1.0 / 8) * (7.0 / 8));
  for (auto &[k, v] : freq)
    CHECK(std::abs(v - expect) <= 5 * sigma);
}

TEST_CASE("k-subset orbits and homogeneity") {
  PermGroup c7 = cyclic(7);
  auto orbits = orbits_on_k_sets(c7, 2);
  CHECK(orbits.size() == 3);
  for (auto &orb : orbits)
    CHECK(orb.size() == 7);
  CHECK_FALSE(is_k_homogeneous(c7, 2));

  PermGroup g73 = agl1_squares(7); // 7:3, the squares-multiplier group
  CHECK(is_k_homogeneous(g73, 2));
  CHECK_FALSE(is_k_transitive(g73, 2));

  CHECK(is_k_transitive(symmetric(5), 2));
  CHECK(is_k_transitive(symmetric(5), 3));
  CHECK_THROWS_AS(orbits_on_k_sets(c7, 9), group_error);
}

TEST_CASE("k-transitive implies k-homogeneous on catalog groups") {
  std::vector<PermGroup> catalog{symmetric(5), alternating(5), psl(2, 7),
                                 agl(1, 7), asl(2, 3), agl1_squares(11)};
  for (const PermGroup &g : catalog)
    for (std::size_t k = 1; k <= 2; ++k)
      if (is_k_transitive(g, k))
        CHECK(is_k_homogeneous(g, k));
}

TEST_CASE("equality and containment") {
  PermGroup s4 = symmetric(4);
  CHECK(equals(s4, s4));
  CHECK(is_subgroup(alternating(4), s4));
  PermGroup c2(4, {parse_cycles("(1 2)", 4)});
  CHECK_FALSE(is_subgroup(c2, alternating(4))); // odd permutation
  CHECK(is_subgroup(c2, s4));
}

TEST_CASE("natural symmetric detection") {
  CHECK(symmetric(6).is_natural_symmetric());
  CHECK(symmetric(25).is_natural_symmetric());
  CHECK_FALSE(alternating(6).is_natural_symmetric());
  CHECK_FALSE(dihedral(8).is_natural_symmetric());
}

TEST_CASE("order strings for huge groups") {
  PermGroup s25 = symmetric(25);
  CHECK(s25.order_overflow());
  CHECK(s25.order_string() == "15511210043330985984000000");
  CHECK(symmetric(4).order_string() == "24");
}

TEST_CASE("cyclic p-group detection") {
  CHECK(cyclic(8).is_cyclic_p_group());
  CHECK(cyclic(7).is_cyclic_p_group());
  CHECK_FALSE(cyclic(6).is_cyclic_p_group());
  CHECK_FALSE(dihedral(8).is_cyclic_p_group());
  CHECK_FALSE(PermGroup::trivial(3).is_cyclic_p_group());
  // elementary abelian 2^2 is a p-group but not cyclic
  PermGroup v4(4, {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)});
  CHECK_FALSE(v4.is_cyclic_p_group());
}

TEST_CASE("regular factory rejects intransitive claims") {
  CHECK_THROWS_AS(PermGroup::regular(4, {parse_cycles("(1 2)", 4)}), group_error);
}

TEST_CASE("natural-base chains agree with default chains on random groups") {
  std::mt19937_64 rng(314159);
  for (unsigned n : {6u, 8u, 10u}) {
    PermGroup sn = symmetric(n);
    for (int t = 0; t < 60; ++t) {
      std::vector<Perm> gens;
      for (int i = 0; i < 1 + t % 3; ++i)
        gens.push_back(sn.random_element(rng));
      Bsgs dflt(n, gens);
      Bsgs natural(n, gens, /*natural_base=*/true);
      CHECK(dflt.order() == natural.order());
      // natural base points are strictly increasing and membership agrees
      Point last = 0;
      bool first = true;
      for (const auto &lvl : natural.levels()) {
        if (!first)
          CHECK(lvl.beta > last);
        last = lvl.beta;
        first = false;
      }
      for (int s = 0; s < 5; ++s) {
        Perm probe = sn.random_element(rng);
        CHECK(dflt.contains(probe) == natural.contains(probe));
      }
    }
  }
}

TEST_CASE("minimal coset representatives are canonical") {
  // min_coset_rep(N, n*g) == min_coset_rep(N, g) for any n in N, and the
  // representative lies in the coset
  std::mt19937_64 rng(2718);
  PermGroup n = alternating(4);
  Bsgs chain(4, n.generators(), /*natural_base=*/true);
  PermGroup s4 = symmetric(4);
  for (int t = 0; t < 100; ++t) {
    Perm g = s4.random_element(rng);
    Perm rep = min_coset_rep(chain, g);
    CHECK(n.contains(rep * g.inverse())); // rep in N*g
    Perm nn = n.random_element(rng);
    CHECK(min_coset_rep(chain, nn * g) == rep);
  }
}
