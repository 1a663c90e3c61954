#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <sstream>
#include <string>
#include <vector>

#include "derivant/catalog.hpp"
#include "derivant/group_spec.hpp"
#include "derivant/integrability.hpp"
#include "derivant/report.hpp"

namespace derivant {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string computed;
};

inline Check make_check(const std::string &name, const std::string &expected,
                        const std::string &computed) {
  return {name, expected == computed, expected, computed};
}

inline Check make_check(const std::string &name, std::uint64_t expected,
                        std::uint64_t computed) {
  return {name, expected == computed, std::to_string(expected),
          std::to_string(computed)};
}

inline Check make_check_bool(const std::string &name, bool ok,
                             const std::string &detail = "holds") {
  return {name, ok, detail, ok ? detail : "VIOLATED"};
}

/// Configuration shared by the verification suites.  The data directory
/// holds the shipped matrix generator files.
struct VerifyConfig {
  std::string data_dir = "data";
  Budgets budgets;
};

namespace suites {

// --- suite d8: the introductory example -----------------------------------

inline std::vector<Check> d8(const VerifyConfig &) {
  std::vector<Check> out;
  PermGroup u = dihedral(8);
  ClassifyReport rep = classify_integrable_subgroups(u, ClassifyScope::All);
  std::size_t order2 = 0, order2_integrable = 0;
  std::optional<std::size_t> integrable_node;
  for (const ClassifyEntry &e : rep.entries) {
    if (rep.lattice->nodes()[e.node].order != 2)
      continue;
    ++order2;
    if (e.integrable) {
      ++order2_integrable;
      integrable_node = e.node;
    }
  }
  out.push_back(make_check("d8.order2.subgroups", 5, order2));
  out.push_back(make_check("d8.order2.integrable", 1, order2_integrable));
  PermGroup dprime = derived_subgroup(u);
  bool is_derived =
    integrable_node &&
    equals(rep.lattice->to_group(rep.lattice->nodes()[*integrable_node]), dprime);
  out.push_back(make_check_bool("d8.integrable.equals.derived", is_derived));

  // per-subgroup pipeline verdicts with exhaustive certificates
  std::size_t not_integrable_exhaustive = 0;
  for (const ClassifyEntry &e : rep.entries) {
    if (rep.lattice->nodes()[e.node].order != 2)
      continue;
    PermGroup b = rep.lattice->to_group(rep.lattice->nodes()[e.node]);
    IntegrabilityVerdict v = integrable_within(b, u);
    if (v.status == Status::NotIntegrable && v.candidates_examined > 0)
      ++not_integrable_exhaustive;
    if (v.status == Status::Integrable && !equals(b, dprime))
      out.push_back(make_check_bool("d8.unexpected.integrable", false));
  }
  out.push_back(make_check("d8.order2.notintegrable.exhaustive", 4,
                           not_integrable_exhaustive));
  return out;
}

// --- suite wreath: the D8 wr C2 inventory ----------------------------------

inline std::vector<Check> wreath(const VerifyConfig &) {
  std::vector<Check> out;
  PermGroup u = wreath_imprimitive(dihedral(8), 2);
  out.push_back(make_check("wreath.order", 128, u.order()));
  PermGroup uprime = derived_subgroup(u);
  out.push_back(make_check("wreath.derived.order", 16, uprime.order()));
  Fingerprint expect_fp = fingerprint(direct_product(dihedral(8), cyclic(2)));
  out.push_back(
    make_check("wreath.derived.fingerprint", expect_fp.str(),
               fingerprint(uprime).str()));

  ClassifyReport rep =
    classify_integrable_subgroups(u, ClassifyScope::SubgroupsOfDerived);
  Fingerprint d8_fp = fingerprint(dihedral(8));
  Fingerprint v4_fp = fingerprint(direct_product(cyclic(2), cyclic(2)));
  std::size_t bad_d8 = 0, bad_v4 = 0, bad_other = 0;
  std::vector<std::size_t> bad_v4_nodes;
  for (const ClassifyEntry &e : rep.entries) {
    if (e.integrable)
      continue;
    if (e.fp == d8_fp)
      ++bad_d8;
    else if (e.fp == v4_fp) {
      ++bad_v4;
      bad_v4_nodes.push_back(e.node);
    } else
      ++bad_other;
  }
  out.push_back(make_check("wreath.notintegrable.d8_copies", 4, bad_d8));
  out.push_back(make_check("wreath.notintegrable.c2xc2_copies", 3, bad_v4));
  out.push_back(make_check("wreath.notintegrable.other", 0, bad_other));

  // each non-integrable C2 x C2 lies in exactly one maximal (order-8)
  // subgroup of U'
  const SubgroupLattice &lat = *rep.lattice;
  SubgroupLattice::Node uprime_node = lat.derived(lat.nodes().back());
  bool unique_maximal = true;
  for (std::size_t node : bad_v4_nodes) {
    std::size_t containers = 0;
    for (const auto &cand : lat.nodes()) {
      if (cand.order != 8 ||
          !SubgroupLattice::subset(cand.elems, uprime_node.elems))
        continue;
      if (SubgroupLattice::subset(lat.nodes()[node].elems, cand.elems))
        ++containers;
    }
    if (containers != 1)
      unique_maximal = false;
  }
  out.push_back(
    make_check_bool("wreath.c2xc2.unique.maximal.order8", unique_maximal));
  return out;
}

// --- suite metacyclic: the metacyclic law over the parameter grid ----------

inline std::vector<Check> metacyclic_suite(const VerifyConfig &) {
  std::vector<Check> out;
  std::size_t groups = 0, violations = 0;
  for (unsigned m = 1; m <= 30; ++m)
    for (unsigned n = 1; n <= 12; ++n)
      for (unsigned r = 1; r <= (m == 1 ? 1 : m - 1); ++r) {
        if (std::gcd(r, m) != 1u)
          continue;
        std::uint64_t rn = 1;
        for (unsigned i = 0; i < n; ++i)
          rn = (rn * r) % m;
        if (m > 1 && rn != 1)
          continue;
        ++groups;
        PermGroup a = metacyclic(m, n, r);
        // exhaustive direct search over the full lattice: every subgroup of
        // A is a candidate integral
        SubgroupLattice lat(a);
        std::set<SubgroupLattice::Bitset> derived_sets;
        for (const auto &node : lat.nodes())
          derived_sets.insert(lat.derived(node).elems);
        SubgroupLattice::Node aprime = lat.derived(lat.nodes().back());
        for (const auto &node : lat.nodes()) {
          bool integrable = derived_sets.count(node.elems) > 0;
          bool in_derived = SubgroupLattice::subset(node.elems, aprime.elems);
          if (integrable != in_derived)
            ++violations;
        }
      }
  out.push_back(make_check_bool("metacyclic.grid.size.about.1e3",
                                groups >= 700 && groups <= 3000,
                                "700<=groups<=3000 (got " +
                                  std::to_string(groups) + ")"));
  out.push_back(make_check("metacyclic.derived.law.violations", 0, violations));

  // spot check the constructive fast-path witnesses against direct search
  std::size_t fastpath_mismatch = 0;
  for (auto [m, n, r] : {std::array<unsigned, 3>{7, 6, 3},
                         std::array<unsigned, 3>{9, 6, 2},
                         std::array<unsigned, 3>{16, 4, 3},
                         std::array<unsigned, 3>{15, 4, 2}}) {
    PermGroup a = metacyclic(m, n, r);
    for (const PermGroup &b : all_subgroups(a)) {
      IntegrabilityVerdict fast = integrable_within(b, a);
      IntegrabilityOptions off;
      off.use_metacyclic = off.use_socle = off.use_perfect_core = false;
      IntegrabilityVerdict direct = integrable_within(b, a, off);
      if (fast.status != direct.status)
        ++fastpath_mismatch;
    }
  }
  out.push_back(make_check("metacyclic.fastpath.vs.direct", 0, fastpath_mismatch));
  return out;
}

// --- suite out-groups: section-3 derived subgroup shapes --------------------

inline std::vector<Check> out_groups(const VerifyConfig &) {
  std::vector<Check> out;
  std::size_t violations = 0;
  for (unsigned d = 1; d <= 12; ++d)
    for (unsigned f = 1; f <= 6; ++f)
      for (unsigned p : {2u, 3u, 5u, 7u}) {
        PermGroup a = out_group(d, f, p);
        Perm delta = a.generators()[0];
        PermGroup expected =
          p == 2 ? PermGroup(a.degree(), {delta})
                 : PermGroup(a.degree(), {delta * delta});
        if (!equals(derived_subgroup(a), expected))
          ++violations;
      }
  out.push_back(make_check("outgroups.derived.law.violations", 0, violations));

  // d = 1 degenerates to an abelian group
  PermGroup a1 = out_group(1, 4, 3);
  out.push_back(make_check_bool("outgroups.d1.abelian",
                                a1.is_abelian() &&
                                  derived_subgroup(a1).is_trivial()));

  // surrogate integrable-within layers: S4 x C2, S4 x C4, D8 x C3
  struct Surrogate {
    const char *name;
    PermGroup u;
  };
  std::vector<Surrogate> surrogates;
  surrogates.push_back({"s4xc2", direct_product(symmetric(4), cyclic(2))});
  surrogates.push_back({"s4xc4", direct_product(symmetric(4), cyclic(4))});
  surrogates.push_back({"d8xc3", direct_product(dihedral(8), cyclic(3))});
  for (const Surrogate &s : surrogates) {
    ClassifyReport rep = classify_integrable_subgroups(s.u, ClassifyScope::All);
    const SubgroupLattice &lat = *rep.lattice;
    SubgroupLattice::Node uprime = lat.derived(lat.nodes().back());
    std::size_t mismatches = 0;
    for (const ClassifyEntry &e : rep.entries) {
      bool in_derived =
        SubgroupLattice::subset(lat.nodes()[e.node].elems, uprime.elems);
      if (e.integrable != in_derived)
        ++mismatches;
    }
    out.push_back(make_check(std::string("outgroups.layer.") + s.name, 0,
                             mismatches));
  }

  // the section-3 witness shapes inside S4 x C2: V4 = A4', C3 = (S3)',
  // C2 = (D8)'
  {
    PermGroup u = direct_product(symmetric(4), cyclic(2));
    ClassifyReport rep = classify_integrable_subgroups(u, ClassifyScope::All);
    const SubgroupLattice &lat = *rep.lattice;
    Fingerprint a4fp = fingerprint(alternating(4));
    Fingerprint s3fp = fingerprint(symmetric(3));
    Fingerprint d8fp = fingerprint(dihedral(8));
    bool v4_from_a4 = false, c3_from_s3 = false, c2_from_d8 = false;
    SubgroupLattice::Node uprime = lat.derived(lat.nodes().back());
    for (const ClassifyEntry &e : rep.entries) {
      if (!e.integrable ||
          !SubgroupLattice::subset(lat.nodes()[e.node].elems, uprime.elems))
        continue;
      for (std::size_t w : e.witnesses) {
        Fingerprint wfp = lat.fingerprint(lat.nodes()[w]);
        if (lat.nodes()[e.node].order == 4 && wfp == a4fp)
          v4_from_a4 = true;
        if (lat.nodes()[e.node].order == 3 && wfp == s3fp)
          c3_from_s3 = true;
        if (lat.nodes()[e.node].order == 2 && wfp == d8fp)
          c2_from_d8 = true;
      }
    }
    out.push_back(make_check_bool("outgroups.witness.v4=a4'", v4_from_a4));
    out.push_back(make_check_bool("outgroups.witness.c3=(s3)'", c3_from_s3));
    out.push_back(make_check_bool("outgroups.witness.c2=(d8)'", c2_from_d8));
  }
  return out;
}

// --- suite remark45: the solvable exception table ---------------------------

inline std::vector<Check> remark45(const VerifyConfig &cfg) {
  std::vector<Check> out;

  Case5Witnesses shipped = case5_witnesses(cfg.data_dir);

  // (a) degree 9: 3^2:Q8 and ASL_2(3)
  PermGroup tq8 = shipped.tq8_deg9;
  PermGroup asl23 = asl(2, 3);
  out.push_back(make_check("remark45.tq8.order", 72, tq8.order()));
  out.push_back(make_check("remark45.asl23.order", 216, asl23.order()));
  PermGroup s9 = symmetric(9);
  IntegrabilityVerdict v1 = integrable_within(tq8, s9);
  IntegrabilityVerdict v2 = integrable_within(asl23, s9);
  out.push_back(make_check("remark45.tq8.status", "Integrable",
                           to_string(v1.status)));
  out.push_back(make_check("remark45.asl23.status", "Integrable",
                           to_string(v2.status)));
  out.push_back(make_check("remark45.tq8.provenance.first", "holomorph",
                           v1.normalizer_provenance.empty()
                             ? "none"
                             : to_string(v1.normalizer_provenance.front())));

  // holomorph normalizer cross-checked by the exact scan of S9
  PermGroup t9 = asl(1, 9); // the translation subgroup 3^2 on 9 points
  NormalizerResult nh = normalizer_in(s9, t9, NormalizerStrategy::Holomorph);
  NormalizerResult ns = normalizer_in(s9, t9, NormalizerStrategy::ExactScan);
  out.push_back(make_check_bool("remark45.holomorph.equals.scan",
                                equals(nh.group, ns.group)));
  out.push_back(make_check("remark45.normalizer.order", 432, nh.group.order()));

  // interval check at degree 9: both groups lie in [N'', N'] with N = AGL_2(3)
  PermGroup nprime = derived_subgroup(nh.group);
  PermGroup nsecond = derived_subgroup(nprime);
  out.push_back(make_check_bool(
    "remark45.tq8.interval",
    is_subgroup(nsecond, tq8) && is_subgroup(tq8, nprime)));
  out.push_back(make_check_bool(
    "remark45.asl23.interval",
    is_subgroup(nsecond, asl23) && is_subgroup(asl23, nprime)));

  // the only integrable groups among the 2-transitive solvable candidates
  // in AGL_2(3)
  {
    PermGroup agl23 = agl(2, 3);
    SubgroupLattice lat(agl23);
    std::size_t candidates = 0, integrable = 0;
    bool only_expected = true;
    for (const auto &node : lat.nodes()) {
      if (node.order < 9)
        continue;
      PermGroup h = lat.to_group(node);
      if (!is_k_transitive(h, 2) || !is_solvable(h))
        continue;
      ++candidates;
      IntegrabilityVerdict v = integrable_within_verdict(h, s9);
      if (v.status == Status::Integrable) {
        ++integrable;
        if (!equals(h, tq8) && !equals(h, asl23))
          only_expected = false;
      }
    }
    out.push_back(make_check_bool("remark45.candidates.nonempty", candidates >= 2,
                                  ">=2 candidates (got " +
                                    std::to_string(candidates) + ")"));
    out.push_back(make_check("remark45.integrable.count", 2, integrable));
    out.push_back(make_check_bool("remark45.integrable.only.expected",
                                  only_expected));
  }

  // (b) degree 25: 5^2:SL_2(3)
  PermGroup t25 = shipped.t25_deg25;
  out.push_back(make_check("remark45.t25.order", 600, t25.order()));
  PermGroup s25 = symmetric(25);
  IntegrabilityVerdict v25 = integrable_within(t25, s25);
  out.push_back(make_check("remark45.t25.status", "Integrable",
                           to_string(v25.status)));
  // witness derived-check: H = 5^2 : N_{GL_2(5)}(E), realized as the
  // normalizer of 5^2:E inside AGL_2(5)
  {
    MatrixGroupData data =
      load_matrix_group_file(cfg.data_dir + "/nsl25_e_gl2_f5.dat");
    // the first two shipped matrices generate E = Q8
    PermGroup te = affine_group(Fq(5, 1), 2, {data.matrices[0], data.matrices[1]});
    PermGroup agl25 = agl(2, 5);
    NormalizerResult h =
      normalizer_in(agl25, te, NormalizerStrategy::ExactScan, 20000);
    out.push_back(make_check_bool("remark45.t25.witness.derived",
                                  equals(derived_subgroup(h.group), t25)));
  }

  // (c) degree 81, witness direction only
  PermGroup h160 = shipped.e5_deg81;
  PermGroup h320 = shipped.e5x2_deg81;
  PermGroup h640 = shipped.e5x4_deg81;
  out.push_back(make_check("remark45.e5.order", 12960, h160.order()));
  out.push_back(make_check("remark45.e5x2.order", 25920, h320.order()));
  out.push_back(make_check("remark45.e5x4.order", 51840, h640.order()));
  out.push_back(make_check_bool("remark45.e5x2.derived.is.e5",
                                equals(derived_subgroup(h320), h160)));
  out.push_back(make_check_bool("remark45.e5x4.derived.is.e5",
                                equals(derived_subgroup(h640), h160)));
  out.push_back(make_check_bool("remark45.e5.2transitive",
                                is_k_transitive(h160, 2)));
  return out;
}

// --- suite case1: 2-homogeneous, not 2-transitive ---------------------------

inline std::vector<Check> case1(const VerifyConfig &) {
  std::vector<Check> out;
  for (unsigned q : {7u, 11u}) {
    PermGroup g = agl1_squares(q);
    std::string tag = "case1.q" + std::to_string(q);
    out.push_back(make_check_bool(tag + ".2homog", is_k_homogeneous(g, 2)));
    out.push_back(
      make_check_bool(tag + ".not.2trans", !is_k_transitive(g, 2)));
    IntegrabilityVerdict v = integrable_within(g, symmetric(q));
    out.push_back(
      make_check(tag + ".status", "NotIntegrable", to_string(v.status)));
  }

  // q = 27: 27:13 is integrable, with witness AGammaL_1(27)
  PermGroup g27 = agl1_squares(27);
  out.push_back(make_check("case1.q27.order", 351, g27.order()));
  out.push_back(make_check_bool("case1.q27.2homog", is_k_homogeneous(g27, 2)));
  out.push_back(
    make_check_bool("case1.q27.not.2trans", !is_k_transitive(g27, 2)));
  IntegrabilityVerdict v27 = integrable_within(g27, symmetric(27));
  out.push_back(
    make_check("case1.q27.status", "Integrable", to_string(v27.status)));
  PermGroup agamma = agammal1(27);
  bool witness_found = false;
  for (const PermGroup &w : v27.witnesses)
    if (equals(w, agamma))
      witness_found = true;
  out.push_back(make_check_bool("case1.q27.witness.agammal1", witness_found));
  PermGroup ag_derived = derived_subgroup(agamma);
  out.push_back(make_check_bool("case1.q27.agammal1.derived.is.g",
                                equals(ag_derived, g27)));
  out.push_back(make_check_bool(
    "case1.q27.second.derived.is.translations",
    equals(derived_subgroup(ag_derived), asl(1, 27))));
  return out;
}

// --- suite theorem-a: almost-simple instances (plus the degree-10 case) -----

inline std::vector<Check> theorem_a_entries(const VerifyConfig &) {
  std::vector<Check> out;
  for (const AutCatalogEntry &entry :
       {aut_entry_a5(), aut_entry_psl27(), aut_entry_psl211(), aut_entry_a6()}) {
    AlmostSimpleReport rep = almost_simple_check(entry);
    out.push_back(make_check_bool("thmA." + rep.name + ".consistent",
                                  rep.all_consistent));
    std::size_t integrable = 0;
    for (const AlmostSimpleRow &row : rep.rows)
      if (row.status == Status::Integrable)
        ++integrable;
    // in all four shipped instances the integrable layer is exactly {S}
    out.push_back(make_check("thmA." + rep.name + ".integrable.count", 1,
                             integrable));
  }
  return out;
}

// the projective-linear family at degree 10: among the five groups between A6 and
// PGammaL_2(9), exactly A6 is integrable within S10
inline std::vector<Check> case11_degree10(const VerifyConfig &cfg) {
  std::vector<Check> out;
  PermGroup s10 = symmetric(10);
  PermGroup a6 = psl(2, 9);
  PermGroup pgamma = pgammal(2, 9);
  NormalizerResult cat = normalizer_in(s10, a6, NormalizerStrategy::Catalog);
  out.push_back(make_check("thmA.deg10.norm.order", 1440, cat.group.order()));
  Budgets big = cfg.budgets;
  big.scan = 4000000; // the S10 scan needs |S10| = 3628800 > the default
  NormalizerResult scan =
    normalizer_in(s10, a6, NormalizerStrategy::ExactScan, big.scan);
  out.push_back(make_check_bool("thmA.deg10.catalog.equals.scan",
                                equals(cat.group, scan.group)));
  std::vector<PermGroup> layer = intermediate_subgroups(pgamma, a6);
  out.push_back(make_check("thmA.deg10.layer.count", 5, layer.size()));
  // the three index-2 members are S6, M10 and PGL_2(9), told apart by
  // involution count and exponent
  {
    std::multiset<std::pair<std::size_t, std::uint64_t>> shapes, expect{
      {75, 60}, {45, 120}, {81, 120}};
    for (const PermGroup &g : layer) {
      if (g.order() != 720)
        continue;
      std::size_t inv = 0;
      std::uint64_t expo = 1;
      for (const Perm &e : g.elements(2000)) {
        if (e.order() == 2)
          ++inv;
        expo = std::lcm(expo, e.order());
      }
      shapes.insert({inv, expo});
    }
    out.push_back(make_check_bool("thmA.deg10.s6.m10.pgl.shapes",
                                  shapes == expect));
  }
  std::size_t integrable = 0;
  bool only_a6 = true;
  for (const PermGroup &g : layer) {
    IntegrabilityVerdict v = integrable_within(g, s10);
    if (v.status == Status::Integrable) {
      ++integrable;
      if (!equals(g, a6))
        only_a6 = false;
    }
  }
  out.push_back(make_check("thmA.deg10.integrable.count", 1, integrable));
  out.push_back(make_check_bool("thmA.deg10.integrable.is.a6", only_a6));
  return out;
}

inline std::vector<Check> theorem_a(const VerifyConfig &cfg) {
  std::vector<Check> out = theorem_a_entries(cfg);
  std::vector<Check> deg10 = case11_degree10(cfg);
  out.insert(out.end(), deg10.begin(), deg10.end());
  return out;
}

// --- suite psl37: Example 4.6 in both directions ----------------------------

inline std::vector<Check> psl37(const VerifyConfig &) {
  std::vector<Check> out;
  PermGroup s57 = symmetric(57);
  PermGroup p = psl(3, 7);
  PermGroup pg = pgammal(3, 7);
  out.push_back(make_check("psl37.order", 1876896, p.order()));
  out.push_back(make_check("psl37.pgl.order", 5630688, pg.order()));

  // candidates between the socle and its catalog normalizer
  std::vector<PermGroup> candidates = intermediate_subgroups(pg, p);
  out.push_back(make_check("psl37.candidates.count", 2, candidates.size()));
  bool all_derived_psl = true;
  for (const PermGroup &h : candidates)
    if (!equals(derived_subgroup(h), p))
      all_derived_psl = false;
  out.push_back(
    make_check_bool("psl37.candidates.derived.all.psl", all_derived_psl));

  IntegrabilityVerdict v = integrable_within_verdict(pg, s57);
  out.push_back(make_check("psl37.pgl.status", "NotIntegrable",
                           to_string(v.status)));
  bool catalog_used = false;
  for (Provenance pr : v.normalizer_provenance)
    if (pr == Provenance::Catalog)
      catalog_used = true;
  out.push_back(make_check_bool("psl37.pgl.catalog.provenance", catalog_used));

  // Monte Carlo guard on the catalog normalizer
  {
    NormalizerResult n = normalizer_in(s57, p);
    std::mt19937_64 rng(20240817);
    std::size_t tested = catalog_normalizer_guard(s57, p, n.group, 10000, rng);
    out.push_back(make_check("psl37.mc.guard.tested", 10000, tested));
  }

  // the 114-point automorphism group and the abstract integrability of PGL
  PermGroup aut = aut_psl3_points_lines(7);
  out.push_back(make_check("psl37.aut114.order", 11261376, aut.order()));
  PermGroup autd = derived_subgroup(aut);
  out.push_back(make_check("psl37.aut114.derived.order", 5630688, autd.order()));
  AlmostSimpleReport rep = almost_simple_check(aut_entry_psl37());
  out.push_back(
    make_check_bool("psl37.aut114.thmA.consistent", rep.all_consistent));
  std::size_t integrable = 0;
  for (const AlmostSimpleRow &row : rep.rows)
    if (row.status == Status::Integrable)
      ++integrable;
  // {PSL_3(7), PGL_3(7)} = the subgroups of Aut' containing the socle
  out.push_back(make_check("psl37.aut114.integrable.count", 2, integrable));
  return out;
}

} // namespace suites

inline const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {
    "d8", "wreath", "metacyclic", "out-groups",
    "remark45", "case1", "theorem-a", "psl37"};
  return names;
}

inline std::vector<Check> run_suite(const std::string &name,
                                    const VerifyConfig &cfg) {
  if (name == "d8")
    return suites::d8(cfg);
  if (name == "wreath")
    return suites::wreath(cfg);
  if (name == "metacyclic")
    return suites::metacyclic_suite(cfg);
  if (name == "out-groups")
    return suites::out_groups(cfg);
  if (name == "remark45")
    return suites::remark45(cfg);
  if (name == "case1")
    return suites::case1(cfg);
  if (name == "theorem-a")
    return suites::theorem_a(cfg);
  if (name == "psl37")
    return suites::psl37(cfg);
  if (name == "all") {
    std::vector<Check> out;
    for (const std::string &n : suite_names()) {
      std::vector<Check> part = run_suite(n, cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw group_error("unknown verify suite: " + name);
}

/// Render a suite's checks as report records (fixed order, deterministic).
inline Report suite_report(const std::string &suite,
                           const std::vector<Check> &checks) {
  Report rep;
  std::size_t failures = 0;
  for (const Check &c : checks) {
    Record r;
    r.set("kind", "check");
    r.set("status", c.pass ? "pass" : "fail");
    r.set("suite", suite);
    r.set("name", c.name);
    r.set("expected", c.expected);
    r.set("computed", c.computed);
    if (!c.pass)
      ++failures;
    rep.records.push_back(std::move(r));
  }
  Record summary;
  summary.set("kind", "summary");
  summary.set("status", failures == 0 ? "pass" : "fail");
  summary.set("suite", suite);
  summary.set("checks", checks.size());
  summary.set("failures", failures);
  rep.records.push_back(std::move(summary));
  return rep;
}

} // namespace derivant
