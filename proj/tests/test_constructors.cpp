#include <catch2/catch_amalgamated.hpp>

#include "derivant/actions.hpp"
#include "derivant/constructors.hpp"
#include "derivant/group_spec.hpp"
#include "derivant/subgroups.hpp"
#include "derivant/structure.hpp"

using namespace derivant;

#ifndef DERIVANT_DATA_DIR
#define DERIVANT_DATA_DIR "data"
#endif

TEST_CASE("field arithmetic") {
  for (unsigned q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u}) {
    Fq F = field_of(q);
    CHECK(F.q() == q);
    // multiplicative group cyclic of order q-1: witnessed by the generator
    unsigned z = F.primitive();
    unsigned x = z, ord = 1;
    while (x != 1) {
      x = F.mul(x, z);
      ++ord;
    }
    CHECK(ord == q - 1);
    // frobenius is additive and multiplicative
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      }
  }
  CHECK_THROWS_AS(Fq(4, 1), group_error);  // not prime
  CHECK_THROWS_AS(field_of(50), group_error);
}

TEST_CASE("matrix inverse and determinant") {
  Fq F(7, 1);
  Mat m(2);
  m.a = {2, 3, 1, 4}; // det = 8-3 = 5
  CHECK(mat_det(F, m) == 5);
  Mat mi = mat_inverse(F, m);
  CHECK(mat_mul(F, m, mi) == Mat::identity(2));
}

TEST_CASE("classical group orders match the formulas") {
  CHECK(gl(2, 3).order() == 48);     // (9-1)(9-3)
  CHECK(gl(2, 5).order() == 480);
  CHECK(gl(3, 3).order() == 11232);
  CHECK(sl(2, 3).order() == 24);
  CHECK(sl(2, 9).order() == 720);
  CHECK(psl(2, 9).order() == 360);   // q(q^2-1)/gcd(2,q-1)
  CHECK(psl(2, 9).degree() == 10);
  CHECK(psl(2, 7).order() == 168);
  CHECK(pgl(2, 7).order() == 336);
  CHECK(pgl(2, 9).order() == 720);
  CHECK(pgammal(2, 9).order() == 1440);
  CHECK(equals(derived_subgroup(pgammal(2, 9)), psl(2, 9)));
  CHECK(psl(2, 11).order() == 660);
  CHECK(psl(2, 11).degree() == 12);
  CHECK(psl(3, 7).degree() == 57);
  CHECK(psl(3, 7).order() == 1876896);
}

TEST_CASE("affine families") {
  CHECK(agl(1, 7).order() == 42);
  CHECK(asl(1, 7).order() == 7);
  CHECK(asl(1, 27).order() == 27); // translations are elementary abelian 3^3
  CHECK(agl(2, 3).order() == 432);
  CHECK(asl(2, 3).order() == 216);
  CHECK(agammal1(27).order() == 2106);
  PermGroup d = derived_subgroup(agammal1(27));
  CHECK(d.order() == 351); // 27 * 13
  CHECK(equals(derived_subgroup(d), asl(1, 27)));
  CHECK(holomorph_elementary(3, 2).order() == 432); // 9 * 48
  CHECK(holomorph_cyclic(8).order() == 32);         // 8 * phi(8)=4
  // subgroup chains, normal at each step
  CHECK(is_normal(asl(2, 3), agl(2, 3)));
  CHECK(is_normal(psl(2, 9), pgl(2, 9)));
  CHECK(is_normal(pgl(2, 9), pgammal(2, 9)));
  CHECK(is_normal(psl(2, 9), pgammal(2, 9)));
  CHECK(is_normal(asl(1, 27), agammal1(27)));
}

TEST_CASE("affine point labeling is the base-q digit order") {
  // translation by 1 on F_7 is the 7-cycle on points 1..7
  Fq F(7, 1);
  CHECK(format_cycles(translation_perm(F, 1, {1})) == "(1 2 3 4 5 6 7)");
  // multiplication by the primitive root 3 fixes 0
  Mat m(1);
  m.at(0, 0) = 3;
  CHECK(affine_perm_of_matrix(F, m)[0] == 0);
}

TEST_CASE("squares-multiplier group") {
  PermGroup g = agl1_squares(7);
  CHECK(g.order() == 21);
  CHECK(is_k_homogeneous(g, 2));
  CHECK_FALSE(is_k_transitive(g, 2));
  CHECK(agl1_squares(27).order() == 351);
  CHECK_THROWS_AS(agl1_squares(16), group_error);
}

TEST_CASE("wreath and direct products") {
  CHECK(wreath_imprimitive(dihedral(8), 2).order() == 128); // 8^2 * 2
  CHECK(wreath_imprimitive(cyclic(3), 3).order() == 162);   // 3^3 * 3!
  CHECK(direct_product(symmetric(4), cyclic(2)).order() == 48);
  PermGroup w = wreath_imprimitive(dihedral(8), 2);
  PermGroup wd = derived_subgroup(w);
  CHECK(wd.order() == 16);
  CHECK(fingerprint(wd) == fingerprint(direct_product(dihedral(8), cyclic(2))));
}

TEST_CASE("extraspecial 2-groups") {
  PermGroup minus = central_product_d8_q8();
  CHECK(minus.order() == 32);
  CHECK(center(minus).order() == 2);
  std::uint64_t expo = 1;
  std::size_t involutions = 0;
  for (const Perm &e : minus.elements()) {
    expo = std::lcm(expo, e.order());
    if (e.order() == 2)
      ++involutions;
  }
  CHECK(expo == 4);
  CHECK(involutions == 11); // minus type; plus type has 19

  PermGroup plus = extraspecial2(2, '+');
  CHECK(plus.order() == 32);
  std::size_t invp = 0;
  for (const Perm &e : plus.elements())
    if (e.order() == 2)
      ++invp;
  CHECK(invp == 19);

  CHECK(extraspecial2(1, '-').order() == 8);
  CHECK(extraspecial2(3, '-').order() == 128);
}

TEST_CASE("metacyclic groups") {
  CHECK(metacyclic(12, 5, 1).order() == 60);
  CHECK(metacyclic(12, 5, 1).is_abelian());
  PermGroup m = metacyclic(7, 6, 3);
  CHECK(m.order() == 42);
  CHECK(derived_subgroup(m).order() == 7);
  CHECK(m.metacyclic_tag.has_value());
  CHECK_THROWS_AS(metacyclic(7, 2, 3), group_error); // 3^2 = 2 != 1 mod 7
  // derived subgroup is <x^gcd(r-1, m)>
  PermGroup m2 = metacyclic(16, 4, 3);
  CHECK(derived_subgroup(m2).order() == 8); // gcd(2,16)=2 -> <x^2> order 8
}

TEST_CASE("out groups") {
  // p odd: derived = <delta^2>; p = 2: derived = <delta>
  PermGroup a = out_group(4, 2, 3);
  CHECK(a.order() == 16);
  Perm delta = a.generators()[0];
  CHECK(equals(derived_subgroup(a), PermGroup(a.degree(), {delta * delta})));
  PermGroup b = out_group(5, 4, 2); // 2^4 = 16 = 1 mod 5
  CHECK(b.order() == 40);
  Perm db = b.generators()[0];
  CHECK(equals(derived_subgroup(b), PermGroup(b.degree(), {db})));
  // d = 1 degenerates to C_f x C_2
  PermGroup c = out_group(1, 6, 3);
  CHECK(c.is_abelian());
  CHECK(derived_subgroup(c).is_trivial());
}

TEST_CASE("aut(psl3(7)) on points and lines") {
  PermGroup aut = aut_psl3_points_lines(7);
  CHECK(aut.degree() == 114);
  CHECK(aut.order() == 11261376); // 2 |PGL_3(7)| = 6 |PSL_3(7)|
  PermGroup socle = psl3_points_lines(7);
  CHECK(socle.order() == 1876896);
  CHECK(is_subgroup(socle, aut));
  // the index-2 subgroup preserves the point/line blocks
  PermGroup pgl_part = derived_subgroup(aut);
  CHECK(pgl_part.order() == 5630688);
  for (const Perm &g : pgl_part.generators())
    CHECK(g[0] < 57);
  CHECK(aut.is_transitive()); // the duality fuses the two blocks
}

TEST_CASE("matrix data files load and are checksummed") {
  MatrixGroupData q8 = load_matrix_group_file(std::string(DERIVANT_DATA_DIR) +
                                              "/q8_gl2_f3.dat");
  CHECK(q8.matrices.size() == 2);
  PermGroup tq8 = affine_group_from_data(q8);
  CHECK(tq8.order() == 72);
  CHECK(is_k_transitive(tq8, 2));

  // corrupting any byte must be caught
  std::string body = format_matrix_group_data(q8);
  std::string bad = body;
  bad[body.find('2')] = '1';
  CHECK_THROWS_AS(parse_matrix_group_data(bad), parse_error);
  // round trip
  MatrixGroupData again = parse_matrix_group_data(body);
  CHECK(again.matrices.size() == q8.matrices.size());
  CHECK(again.matrices[0] == q8.matrices[0]);
}

TEST_CASE("case-5 witness data") {
  std::string dir = DERIVANT_DATA_DIR;
  PermGroup h160 = affine_group_from_data(load_matrix_group_file(dir + "/e5_gl4_f3.dat"));
  PermGroup h320 = affine_group_from_data(load_matrix_group_file(dir + "/e5x2_gl4_f3.dat"));
  PermGroup h640 = affine_group_from_data(load_matrix_group_file(dir + "/e5x4_gl4_f3.dat"));
  CHECK(h160.order() == 81 * 160);
  CHECK(h320.order() == 81 * 320);
  CHECK(h640.order() == 81 * 640);
  PermGroup lin = linear_group_from_data(load_matrix_group_file(dir + "/e5_gl4_f3.dat"));
  CHECK(lin.is_transitive()); // transitive on the 80 nonzero vectors
  PermGroup t25 = affine_group_from_data(load_matrix_group_file(dir + "/nsl25_e_gl2_f5.dat"));
  CHECK(t25.order() == 600);
  CHECK(is_k_transitive(t25, 2));
}

TEST_CASE("group spec files") {
  GroupSpec s1 = parse_group_spec("degree 4\n(1 2 3 4)\n(1 3)\n");
  PermGroup g1 = build_group(s1, ".");
  CHECK(g1.order() == 8);
  GroupSpec s2 = parse_group_spec("family dihedral order=8\n");
  CHECK(build_group(s2, ".").order() == 8);
  GroupSpec s3 = parse_group_spec("family wreath base=dihedral:order=8 k=2\n");
  CHECK(build_group(s3, ".").order() == 128);
  CHECK_THROWS_AS(parse_group_spec(""), parse_error);
  CHECK_THROWS_AS(parse_group_spec("degree 4\nfamily cyclic n=2\n"), parse_error);
  CHECK_THROWS_AS(build_group(parse_group_spec("family nosuch x=1\n"), "."),
                  group_error);
  // generators before degree
  CHECK_THROWS_AS(parse_group_spec("(1 2)\ndegree 4\n"), parse_error);
}

TEST_CASE("catalog two-homogeneous entries pass their action properties") {
  // case tags: (1) not 2-transitive, 2-transitive otherwise
  CHECK(is_k_homogeneous(agl1_squares(11), 2));
  CHECK_FALSE(is_k_transitive(agl1_squares(11), 2));
  CHECK(is_k_transitive(asl(2, 3), 2));
  CHECK(is_k_transitive(psl(2, 9), 2));
  CHECK(is_k_transitive(psl(3, 7), 2));
}
