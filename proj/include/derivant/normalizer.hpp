#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "derivant/constructors.hpp"
#include "derivant/perm.hpp"
#include "derivant/perm_group.hpp"
#include "derivant/structure.hpp"

namespace derivant {

enum class NormalizerStrategy { Auto, ExactScan, Holomorph, Catalog };

enum class Provenance { ExactScan, Holomorph, Catalog, Trivial, Normal };

inline const char *to_string(Provenance p) {
  switch (p) {
  case Provenance::ExactScan: return "exact-scan";
  case Provenance::Holomorph: return "holomorph";
  case Provenance::Catalog: return "catalog";
  case Provenance::Trivial: return "trivial";
  case Provenance::Normal: return "normal";
  }
  return "?";
}

struct NormalizerResult {
  PermGroup group;
  Provenance provenance;
};

namespace detail {

/// Full enumeration of U, testing each element for normalizing G.
inline PermGroup normalizer_by_scan(const PermGroup &u, const PermGroup &g,
                                    std::uint64_t scan_budget) {
  if (u.order_exceeds(scan_budget))
    throw budget_error("scan", "|U| exceeds the exact-scan budget " +
                                 std::to_string(scan_budget));
  g.cache_elements();
  const std::vector<Perm> &ggens = g.generators();
  PermGroup result = g; // N_U(G) always contains G
  u.for_each_element([&](const Perm &x) {
    Perm xi = x.inverse();
    for (const Perm &gen : ggens) {
      // g^x = x^-1 g x, cheapest-first rejection
      if (!g.contains(xi * gen * x))
        return;
    }
    if (!result.contains(x))
      result = extend(result, x);
  });
  return result;
}

/// N_{Sym(n)}(G) for a regular abelian G: the holomorph G : Aut(G), realized
/// on the given points through the orbit labeling of G.
inline std::optional<PermGroup> normalizer_by_holomorph(const PermGroup &u,
                                                        const PermGroup &g) {
  if (!u.is_natural_symmetric())
    return std::nullopt;
  if (!g.is_transitive() || g.order_overflow() || g.order() != g.degree() ||
      !g.is_abelian())
    return std::nullopt;
  std::size_t n = g.degree();

  // label points by the group elements reaching them from point 0
  std::vector<Perm> reach(n, Perm(n)); // point -> element mapping 0 to it
  {
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::vector<Point> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const Perm &gen : g.generators()) {
        Point y = gen[queue[k]];
        if (!seen[y]) {
          seen[y] = true;
          reach[y] = reach[queue[k]] * gen;
          queue.push_back(y);
        }
      }
    if (queue.size() != n)
      return std::nullopt;
  }

  // elementary abelian case: exponent p
  std::uint64_t expo = 1;
  for (const Perm &gen : g.generators())
    expo = std::lcm(expo, gen.order());
  bool elementary = expo > 1 && detail::smallest_prime_factor(expo) == expo &&
                    [&] {
                      std::uint64_t m = n, p = expo;
                      while (m % p == 0)
                        m /= p;
                      return m == 1;
                    }();

  std::vector<Perm> ngens = g.generators();
  if (elementary) {
    unsigned p = static_cast<unsigned>(expo);
    unsigned d = 0;
    for (std::size_t m = n; m > 1; m /= p)
      ++d;
    // choose an F_p-basis among the reach elements and coordinatize
    std::vector<Perm> basis;
    std::vector<std::vector<unsigned>> coords(n);
    std::vector<Point> labeled{0};
    std::vector<bool> have(n, false);
    have[0] = true;
    coords[0] = std::vector<unsigned>(d, 0);
    for (Point pt = 1; pt < n; ++pt) {
      if (have[pt])
        continue;
      // new basis vector: the element reaching pt
      std::size_t bi = basis.size();
      basis.push_back(reach[pt]);
      std::vector<Point> known = labeled;
      for (Point kp : known) {
        Perm acc = reach[kp];
        for (unsigned e = 1; e < p; ++e) {
          acc = acc * basis[bi];
          Point np = acc[0];
          if (!have[np]) {
            have[np] = true;
            coords[np] = coords[kp];
            coords[np].resize(d, 0);
            coords[np][bi] = e;
            labeled.push_back(np);
          }
        }
      }
      if (basis.size() > d)
        return std::nullopt;
    }
    if (labeled.size() != n)
      return std::nullopt;
    // point index in AGL coordinates
    Fq F(p, 1);
    std::vector<Point> to_std(n), from_std(n);
    for (std::size_t pt = 0; pt < n; ++pt) {
      unsigned idx = 0;
      for (unsigned i = d; i-- > 0;)
        idx = idx * p + coords[pt][i];
      to_std[pt] = static_cast<Point>(idx);
      from_std[idx] = static_cast<Point>(pt);
    }
    for (const Mat &m : gl_generator_matrices(F, d)) {
      if (m == Mat::identity(d))
        continue; // GL_1(2) has no nontrivial generator
      Perm std_perm = affine_perm_of_matrix(F, m);
      std::vector<Point> img(n);
      for (std::size_t pt = 0; pt < n; ++pt)
        img[pt] = from_std[std_perm[to_std[pt]]];
      ngens.push_back(Perm(std::move(img)));
    }
    return PermGroup(n, std::move(ngens));
  }

  // cyclic case: find a generator of full order
  std::optional<Perm> full;
  for (const Perm &e : g.elements(n))
    if (e.order() == n) {
      full = e;
      break;
    }
  if (!full)
    return std::nullopt; // abelian but neither elementary nor cyclic
  // label points by the discrete log along the cycle of point 0
  std::vector<std::size_t> log(n);
  {
    Point cur = 0;
    for (std::size_t k = 0; k < n; ++k) {
      log[cur] = k;
      cur = (*full)[cur];
    }
  }
  std::vector<Point> antilog(n);
  for (std::size_t pt = 0; pt < n; ++pt)
    antilog[log[pt]] = static_cast<Point>(pt);
  for (std::size_t umul = 2; umul < n; ++umul) {
    if (std::gcd(umul, n) != std::size_t{1})
      continue;
    std::vector<Point> img(n);
    for (std::size_t pt = 0; pt < n; ++pt)
      img[pt] = antilog[(log[pt] * umul) % n];
    ngens.push_back(Perm(std::move(img)));
  }
  return PermGroup(n, std::move(ngens));
}

/// Classification-family catalog for normalizers inside natural symmetric
/// groups.  An entry matches when G literally sandwiches between the shipped
/// standard socle copy and its shipped normalizer; the normalizer of G is
/// then the preimage of N_{N/S}(G/S), computed on coset representatives.
struct CatalogFamily {
  std::size_t degree;
  const char *name;
  PermGroup (*socle)();
  PermGroup (*norm)();
};

inline const std::vector<CatalogFamily> &catalog_families() {
  static const std::vector<CatalogFamily> families = {
    {57, "psl3(7)<=pgammal3(7)", [] { return psl(3, 7); }, [] { return pgammal(3, 7); }},
    {10, "psl2(9)<=pgammal2(9)", [] { return psl(2, 9); }, [] { return pgammal(2, 9); }},
    {114, "psl3(7)<=aut(psl3(7))", [] { return psl3_points_lines(7); },
     [] { return aut_psl3_points_lines(7); }},
  };
  return families;
}

inline std::optional<PermGroup> normalizer_by_catalog(const PermGroup &u,
                                                      const PermGroup &g) {
  if (!u.is_natural_symmetric())
    return std::nullopt;
  for (const CatalogFamily &fam : catalog_families()) {
    if (fam.degree != u.degree())
      continue;
    PermGroup s = fam.socle();
    if (!is_subgroup(s, g))
      continue;
    PermGroup n = fam.norm();
    if (!is_subgroup(g, n))
      continue;
    // cosets of S in N: reps from the quotient; a coset normalizes G iff its
    // representative does (G contains S, so the S-part is absorbed)
    QuotientRep qr(n, s);
    std::vector<Perm> ngens = s.generators();
    for (const Perm &rep : qr.transversal()) {
      bool normalizes = true;
      for (const Perm &gen : g.generators())
        if (!g.contains(conjugate(gen, rep))) {
          normalizes = false;
          break;
        }
      if (normalizes)
        ngens.push_back(rep);
    }
    return PermGroup(u.degree(), std::move(ngens));
  }
  return std::nullopt;
}

} // namespace detail

/// Exact normalizer N_U(G) with the strategy that applies: the catalog of
/// classification families, the holomorph shortcut for regular abelian G in
/// Sym(n), or the exact element scan.  Catalog and holomorph results are
/// labelled by provenance so reports can flag them.
inline NormalizerResult normalizer_in(const PermGroup &u, const PermGroup &g,
                                      NormalizerStrategy strategy = NormalizerStrategy::Auto,
                                      std::uint64_t scan_budget = 1000000) {
  if (u.degree() != g.degree())
    throw group_error("normalizer_in requires equal degrees");
  if (!is_subgroup(g, u))
    throw not_subgroup_error("normalizer_in requires G <= U");
  if (equals(g, u))
    return {u, Provenance::Trivial};
  if (strategy == NormalizerStrategy::Auto) {
    // G <| U makes the normalizer U itself; the generator-conjugation test
    // is exact and cheap at any order
    bool normal = true;
    for (const Perm &x : g.generators()) {
      for (const Perm &t : u.generators())
        if (!g.contains(conjugate(x, t))) {
          normal = false;
          break;
        }
      if (!normal)
        break;
    }
    if (normal)
      return {u, Provenance::Normal};
  }

  if (strategy == NormalizerStrategy::Auto || strategy == NormalizerStrategy::Catalog) {
    if (auto n = detail::normalizer_by_catalog(u, g))
      return {std::move(*n), Provenance::Catalog};
    if (strategy == NormalizerStrategy::Catalog)
      throw budget_error("catalog", "no catalog family matches G");
  }
  if (strategy == NormalizerStrategy::Auto || strategy == NormalizerStrategy::Holomorph) {
    if (auto n = detail::normalizer_by_holomorph(u, g))
      return {std::move(*n), Provenance::Holomorph};
    if (strategy == NormalizerStrategy::Holomorph)
      throw budget_error("holomorph", "holomorph shortcut requires U = Sym(n) "
                                      "and G regular abelian");
  }
  return {detail::normalizer_by_scan(u, g, scan_budget), Provenance::ExactScan};
}

/// Exact centralizer C_U(G) by element scan.
inline PermGroup centralizer_in(const PermGroup &u, const PermGroup &g,
                                std::uint64_t scan_budget = 1000000) {
  if (!is_subgroup(g, u))
    throw not_subgroup_error("centralizer_in requires G <= U");
  if (u.order_exceeds(scan_budget))
    throw budget_error("scan", "|U| exceeds the exact-scan budget " +
                                 std::to_string(scan_budget));
  PermGroup result = PermGroup::trivial(u.degree());
  u.for_each_element([&](const Perm &x) {
    for (const Perm &gen : g.generators())
      if (!commutator(x, gen).is_identity())
        return;
    if (!result.contains(x))
      result = extend(result, x);
  });
  return result;
}

/// Monte Carlo guard for catalog normalizers: random elements of U outside N
/// must fail to normalize G.  Returns the number of samples that actually
/// tested (misses, i.e. samples that landed inside N, are skipped).
inline std::size_t catalog_normalizer_guard(const PermGroup &u, const PermGroup &g,
                                            const PermGroup &n, std::size_t samples,
                                            std::mt19937_64 &rng) {
  std::size_t tested = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Perm x = u.random_element(rng);
    if (n.contains(x))
      continue;
    ++tested;
    bool normalizes = true;
    for (const Perm &gen : g.generators())
      if (!g.contains(conjugate(gen, x))) {
        normalizes = false;
        break;
      }
    if (normalizes)
      throw group_error("catalog normalizer guard violated: an element outside "
                        "the catalog normalizer normalizes G");
  }
  return tested;
}

} // namespace derivant
