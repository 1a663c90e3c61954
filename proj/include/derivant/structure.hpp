#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "derivant/perm.hpp"
#include "derivant/perm_group.hpp"

namespace derivant {

/// Smallest normal subgroup of G containing the seeds.
/// Seeds must be members of G.
inline PermGroup normal_closure(const PermGroup &g, std::vector<Perm> seeds) {
  for (const Perm &s : seeds)
    if (!g.contains(s))
      throw not_subgroup_error("normal closure seed is not a member of the group");
  std::vector<Perm> gens;
  for (Perm &s : seeds)
    if (!s.is_identity())
      gens.push_back(std::move(s));
  if (gens.empty())
    return PermGroup::trivial(g.degree());

  PermGroup n(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    // conjugate the current generators by the parent generators
    std::vector<Perm> cur = n.generators();
    for (const Perm &x : cur) {
      for (const Perm &t : g.generators()) {
        Perm c = conjugate(x, t);
        if (!n.contains(c)) {
          n = extend(n, c);
          changed = true;
        }
      }
    }
  }
  return n;
}

/// Derived subgroup: normal closure of the commutators of generator pairs.
inline PermGroup derived_subgroup(const PermGroup &g) {
  std::vector<Perm> seeds;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        seeds.push_back(std::move(c));
    }
  if (seeds.empty())
    return PermGroup::trivial(g.degree());
  return normal_closure(g, std::move(seeds));
}

/// Strictly descending derived series, from G down to the perfect core
/// (the first repeated term, which is omitted from the tail).
struct DerivedSeries {
  std::vector<PermGroup> terms;

  const PermGroup &perfect_core() const { return terms.back(); }
  std::size_t derived_length() const { return terms.size() - 1; }
};

inline DerivedSeries derived_series(const PermGroup &g) {
  DerivedSeries s;
  s.terms.push_back(g);
  for (;;) {
    PermGroup next = derived_subgroup(s.terms.back());
    if (equals(next, s.terms.back()))
      break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

/// Stable term of the derived series; trivial iff G is solvable.
inline PermGroup perfect_core(const PermGroup &g) {
  return derived_series(g).perfect_core();
}

inline bool is_solvable(const PermGroup &g) {
  return perfect_core(g).is_trivial();
}

inline bool is_perfect(const PermGroup &g) {
  return equals(derived_subgroup(g), g);
}

/// A <| B, checked by conjugating A's generators by B's.  Requires A <= B.
inline bool is_normal(const PermGroup &a, const PermGroup &b) {
  if (!is_subgroup(a, b))
    throw not_subgroup_error("is_normal requires A <= B");
  for (const Perm &x : a.generators())
    for (const Perm &t : b.generators())
      if (!a.contains(conjugate(x, t)))
        return false;
  return true;
}

/// Center of G, by scanning all elements.  Fails loudly beyond the element
/// budget (never a silent wrong answer).
inline PermGroup center(const PermGroup &g, std::uint64_t budget = 100000) {
  if (g.order_exceeds(budget))
    throw budget_error("elements", "center scan requires |G| <= " +
                                      std::to_string(budget));
  std::vector<Perm> central;
  g.for_each_element([&](const Perm &e) {
    for (const Perm &t : g.generators())
      if (!commutator(e, t).is_identity())
        return;
    if (!e.is_identity())
      central.push_back(e);
  });
  if (central.empty())
    return PermGroup::trivial(g.degree());
  std::sort(central.begin(), central.end());
  return PermGroup(g.degree(), std::move(central));
}

namespace detail {

inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return d;
  return n;
}

} // namespace detail

/// All minimal normal subgroups of G.
///
/// Seeds are elements of prime order, one per G-conjugacy class (conjugate
/// seeds give equal normal closures, so skipping the rest of a class is
/// lossless).  The closures are then reduced to the inclusion-minimal ones.
inline std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g,
                                                       std::uint64_t budget = 100000) {
  if (g.is_trivial())
    return {};
  std::vector<Perm> elems = g.elements(budget);

  std::unordered_set<Perm, PermHash> classed;
  std::vector<Perm> seeds;
  for (const Perm &e : elems) {
    if (e.is_identity() || classed.count(e))
      continue;
    std::uint64_t ord = e.order();
    if (ord != detail::smallest_prime_factor(ord))
      continue; // only prime-order elements seed minimal normal subgroups
    // mark the whole conjugacy class of e
    std::vector<Perm> orbit{e};
    classed.insert(e);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const Perm &t : g.generators()) {
        Perm c = conjugate(orbit[k], t);
        if (classed.insert(c).second)
          orbit.push_back(std::move(c));
      }
    seeds.push_back(e);
  }

  std::vector<PermGroup> closures;
  for (const Perm &s : seeds) {
    PermGroup n = normal_closure(g, {s});
    bool dup = false;
    for (const PermGroup &m : closures)
      if (equals(m, n)) {
        dup = true;
        break;
      }
    if (!dup)
      closures.push_back(std::move(n));
  }

  std::vector<PermGroup> minimal;
  for (const PermGroup &n : closures) {
    bool is_min = true;
    for (const PermGroup &m : closures)
      if (m.order() < n.order() && is_subgroup(m, n)) {
        is_min = false;
        break;
      }
    if (is_min)
      minimal.push_back(n);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const PermGroup &a, const PermGroup &b) {
              if (a.order() != b.order())
                return a.order() < b.order();
              return canonical_generators(a) < canonical_generators(b);
            });
  return minimal;
}

/// Product (join) of the minimal normal subgroups.
inline PermGroup socle(const PermGroup &g, std::uint64_t budget = 100000) {
  std::vector<PermGroup> mins = minimal_normal_subgroups(g, budget);
  if (mins.empty())
    return PermGroup::trivial(g.degree());
  std::vector<Perm> gens;
  for (const PermGroup &m : mins)
    for (const Perm &x : m.generators())
      gens.push_back(x);
  return PermGroup(g.degree(), std::move(gens));
}

} // namespace derivant
