#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derivant/normalizer.hpp"
#include "derivant/perm_group.hpp"
#include "derivant/quotient.hpp"
#include "derivant/structure.hpp"
#include "derivant/subgroups.hpp"

namespace derivant {

/// H is an integral of G (within their common ambient) iff H' = G, literal
/// subgroup equality.
inline bool check_integral(const PermGroup &h, const PermGroup &g) {
  if (h.degree() != g.degree())
    throw group_error("check_integral requires a common degree");
  return equals(derived_subgroup(h), g);
}

struct Budgets {
  std::uint64_t elements = 100000;  // element-enumeration budget
  std::uint64_t scan = 1000000;     // exact-scan normalizer budget |U|
  std::uint64_t index = 100000;     // quotient-representation index budget
  std::uint64_t candidates = 10000; // candidate-enumeration budget [N_U(G):G]
  std::uint64_t lattice = 2048;     // all_subgroups bound
  int depth = 4;                    // reduction recursion depth
};

struct IntegrabilityOptions {
  Budgets budgets;
  bool use_metacyclic = true;
  bool use_socle = true;
  bool use_perfect_core = true;
  NormalizerStrategy normalizer = NormalizerStrategy::Auto;
  /// Catalog-provided socle for groups too large for the element budget.
  std::optional<PermGroup> known_socle;
};

enum class Status { Integrable, NotIntegrable, Inconclusive };

inline const char *to_string(Status s) {
  switch (s) {
  case Status::Integrable: return "Integrable";
  case Status::NotIntegrable: return "NotIntegrable";
  case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

enum class Step { Trivial, Metacyclic, Socle, PerfectCore, DirectSearch };

inline const char *to_string(Step s) {
  switch (s) {
  case Step::Trivial: return "trivial";
  case Step::Metacyclic: return "metacyclic";
  case Step::Socle: return "socle";
  case Step::PerfectCore: return "perfect-core";
  case Step::DirectSearch: return "direct-search";
  }
  return "?";
}

struct IntegrabilityVerdict {
  Status status = Status::Inconclusive;
  /// All H <= U with H' = G when the search was exhaustive; at least one
  /// verified witness when Integrable was concluded by a shortcut.
  std::vector<PermGroup> witnesses;
  bool witnesses_complete = false;
  std::vector<Step> method_trace;
  std::vector<Provenance> normalizer_provenance;
  std::size_t candidates_examined = 0;
  std::string inconclusive_budget; // the violated budget, when Inconclusive

  std::string trace_string() const {
    std::string s;
    for (Step st : method_trace) {
      if (!s.empty())
        s += ",";
      s += to_string(st);
    }
    return s.empty() ? "none" : s;
  }

  std::string provenance_string() const {
    std::string s;
    for (Provenance p : normalizer_provenance) {
      if (!s.empty())
        s += ",";
      s += to_string(p);
    }
    return s.empty() ? "none" : s;
  }
};

namespace detail {

inline void sort_witnesses(std::vector<PermGroup> &ws) {
  std::sort(ws.begin(), ws.end(), [](const PermGroup &a, const PermGroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return canonical_generators(a) < canonical_generators(b);
  });
}

/// Soundness gate: every returned witness must actually satisfy H' = G and
/// H <= U.  Violations are engine bugs, not data errors.
inline void verify_witnesses(const std::vector<PermGroup> &ws, const PermGroup &g,
                             const PermGroup &u) {
  for (const PermGroup &h : ws) {
    if (!check_integral(h, g))
      throw group_error("internal: witness fails H' = G");
    if (!is_subgroup(h, u))
      throw group_error("internal: witness is not a subgroup of U");
  }
}

inline IntegrabilityVerdict integrable_within_impl(const PermGroup &g,
                                                   const PermGroup &u,
                                                   const IntegrabilityOptions &opt,
                                                   int depth);

/// Quotient reduction: recurse on (G/K within N_U(K)/K) and lift the
/// verdict back.  Exact in both directions: K is characteristic in any
/// integral's derived subgroup, so integrals of G and of G/K correspond.
inline IntegrabilityVerdict reduce_through(const PermGroup &g, const PermGroup &u,
                                           const PermGroup &k, Step step,
                                           const IntegrabilityOptions &opt,
                                           int depth) {
  IntegrabilityVerdict out;
  out.method_trace.push_back(step);
  NormalizerResult nk = normalizer_in(u, k, opt.normalizer, opt.budgets.scan);
  out.normalizer_provenance.push_back(nk.provenance);
  QuotientRep qr(nk.group, k, opt.budgets.index);
  IntegrabilityVerdict sub =
    integrable_within_impl(qr.project(g), qr.quotient_group(), opt, depth + 1);
  out.status = sub.status;
  out.candidates_examined = sub.candidates_examined;
  out.inconclusive_budget = sub.inconclusive_budget;
  for (Step st : sub.method_trace)
    out.method_trace.push_back(st);
  for (Provenance p : sub.normalizer_provenance)
    out.normalizer_provenance.push_back(p);
  out.witnesses_complete = sub.witnesses_complete;
  for (const PermGroup &wq : sub.witnesses)
    out.witnesses.push_back(qr.lift(wq));
  sort_witnesses(out.witnesses);
  verify_witnesses(out.witnesses, g, u);
  return out;
}

inline IntegrabilityVerdict integrable_within_impl(const PermGroup &g,
                                                   const PermGroup &u,
                                                   const IntegrabilityOptions &opt,
                                                   int depth) {
  IntegrabilityVerdict out;

  // base case: the trivial group is its own integral
  if (g.is_trivial()) {
    out.status = Status::Integrable;
    out.witnesses.push_back(PermGroup::trivial(g.degree()));
    out.witnesses_complete = false; // every abelian subgroup of U qualifies
    out.method_trace.push_back(Step::Trivial);
    verify_witnesses(out.witnesses, g, u);
    return out;
  }

  // metacyclic fast path: in a metacyclic group the integrable subgroups are
  // precisely the subgroups of the derived subgroup.
  if (opt.use_metacyclic && u.metacyclic_tag) {
    const MetacyclicTag &tag = *u.metacyclic_tag;
    PermGroup uprime = derived_subgroup(u);
    out.method_trace.push_back(Step::Metacyclic);
    if (!is_subgroup(g, uprime)) {
      out.status = Status::NotIntegrable; // certificate: the metacyclic law
      out.witnesses_complete = false;
      return out;
    }
    // constructive witness: [x^t, y] = x^{ct} with
    // c = r - 1, so C = <x^t, y> has C' = <x^{ct}>; solve ct = s (mod m)
    // where G = <x^s>, s the smallest positive exponent with x^s in G
    std::uint64_t s = tag.m;
    Perm xp = tag.x;
    for (std::uint64_t e = 1; e <= tag.m; ++e) {
      if (g.contains(xp)) {
        s = e;
        break;
      }
      xp = xp * tag.x;
    }
    std::uint64_t c = (tag.r + tag.m - 1) % tag.m;
    std::uint64_t g0 = std::gcd(c, tag.m);
    std::uint64_t t = s;
    if (g0 != 0 && s % g0 == 0) {
      // t = (s/g0) * (c/g0)^-1 mod (m/g0)
      std::uint64_t mm = tag.m / g0, cc = (c / g0) % mm, target = (s / g0) % mm;
      if (mm <= 1) {
        t = s / std::max<std::uint64_t>(g0, 1);
      } else {
        for (std::uint64_t cand = 0; cand < mm; ++cand)
          if ((cc * cand) % mm == target) {
            t = cand;
            break;
          }
      }
    }
    Perm xt(g.degree());
    for (std::uint64_t e = 0; e < t % tag.m; ++e)
      xt = xt * tag.x;
    PermGroup witness(g.degree(), {xt, tag.y});
    if (check_integral(witness, g)) {
      out.status = Status::Integrable;
      out.witnesses.push_back(std::move(witness));
      out.witnesses_complete = false;
      verify_witnesses(out.witnesses, g, u);
      return out;
    }
    // fall through to the direct search if the arithmetic witness failed
    out.method_trace.pop_back();
  }

  if (depth < opt.budgets.depth) {
    // reduction by a nontrivial characteristic perfect subgroup K
    if (opt.use_perfect_core) {
      PermGroup k = perfect_core(g);
      if (!k.is_trivial()) {
        if (equals(k, g)) {
          // perfect G is its own integral
          out.status = Status::Integrable;
          out.witnesses.push_back(g);
          out.witnesses_complete = false;
          out.method_trace.push_back(Step::PerfectCore);
          verify_witnesses(out.witnesses, g, u);
          return out;
        }
        return reduce_through(g, u, k, Step::PerfectCore, opt, depth);
      }
    }
    // reduction by the unique minimal normal subgroup, when G is not a
    // cyclic p-group (the lifting argument needs both hypotheses)
    if (opt.use_socle && !g.is_cyclic_p_group()) {
      std::optional<PermGroup> socle_hint;
      if (opt.known_socle && depth == 0) {
        socle_hint = opt.known_socle;
        if (!is_subgroup(*socle_hint, g) || !is_normal(*socle_hint, g))
          throw not_subgroup_error("known_socle is not a normal subgroup of G");
      } else if (!g.order_exceeds(opt.budgets.elements)) {
        std::vector<PermGroup> mins =
          minimal_normal_subgroups(g, opt.budgets.elements);
        if (mins.size() == 1 && !mins[0].is_trivial())
          socle_hint = mins[0];
      }
      if (socle_hint && !socle_hint->is_trivial() && !equals(*socle_hint, g))
        return reduce_through(g, u, *socle_hint, Step::Socle, opt, depth);
      if (socle_hint && equals(*socle_hint, g)) {
        // G is its unique minimal normal subgroup: characteristically simple
        // and not cyclic-p, hence nonabelian and perfect
        out.status = Status::Integrable;
        out.witnesses.push_back(g);
        out.witnesses_complete = false;
        out.method_trace.push_back(Step::Socle);
        verify_witnesses(out.witnesses, g, u);
        return out;
      }
    }
  }

  // direct search: all H with G <= H <= N_U(G), tested for H' = G
  out.method_trace.push_back(Step::DirectSearch);
  NormalizerResult nr = normalizer_in(u, g, opt.normalizer, opt.budgets.scan);
  out.normalizer_provenance.push_back(nr.provenance);
  if (nr.group.order_overflow())
    throw budget_error("candidates", "normalizer order exceeds 64 bits");
  std::uint64_t index = nr.group.order() / g.order();
  if (index > opt.budgets.candidates)
    throw budget_error("candidates", "[N_U(G):G] = " + std::to_string(index) +
                                       " exceeds " +
                                       std::to_string(opt.budgets.candidates));
  QuotientRep qr(nr.group, g, opt.budgets.index);
  std::vector<PermGroup> subs =
    all_subgroups(qr.quotient_group(), opt.budgets.lattice);
  out.candidates_examined = subs.size();
  for (const PermGroup &q : subs) {
    PermGroup h = qr.lift(q);
    if (check_integral(h, g))
      out.witnesses.push_back(std::move(h));
  }
  sort_witnesses(out.witnesses);
  out.status = out.witnesses.empty() ? Status::NotIntegrable : Status::Integrable;
  out.witnesses_complete = true;
  verify_witnesses(out.witnesses, g, u);
  return out;
}

} // namespace detail

/// Decide whether G is integrable within U (some H <= U with H' = G).
///
/// Pipeline: optional reductions (the metacyclic fast path, the
/// perfect-core quotient, the socle quotient), then the exhaustive direct
/// search over {H : G <= H <= N_U(G)}.  Budget exhaustion surfaces as a
/// budget_error carrying the violated budget; callers that want a verdict
/// object use integrable_within_verdict which maps it to Inconclusive.
inline IntegrabilityVerdict integrable_within(const PermGroup &g, const PermGroup &u,
                                              const IntegrabilityOptions &opt = {}) {
  if (g.degree() != u.degree())
    throw group_error("integrable_within requires equal degrees");
  if (!is_subgroup(g, u))
    throw not_subgroup_error("integrable_within requires G <= U");
  return detail::integrable_within_impl(g, u, opt, 0);
}

/// Same, but budget exhaustion yields an Inconclusive verdict naming the
/// violated budget instead of throwing.
inline IntegrabilityVerdict integrable_within_verdict(const PermGroup &g,
                                                      const PermGroup &u,
                                                      const IntegrabilityOptions &opt = {}) {
  try {
    return integrable_within(g, u, opt);
  } catch (const budget_error &e) {
    IntegrabilityVerdict v;
    v.status = Status::Inconclusive;
    v.inconclusive_budget = e.budget;
    return v;
  }
}

enum class ClassifyScope { SubgroupsOfDerived, All };

/// One subgroup's verdict within a full-lattice classification.
struct ClassifyEntry {
  std::size_t node;      // index into the lattice
  Fingerprint fp;
  bool integrable = false;
  std::vector<std::size_t> witnesses; // lattice indices of all H with H' = B
};

/// Classification of the subgroups of U (all, or only those inside U') by
/// integrability within U, via one pass over the full subgroup lattice:
/// every H <= U is a candidate integral, so the witness map is exhaustive.
struct ClassifyReport {
  std::shared_ptr<SubgroupLattice> lattice;
  std::vector<ClassifyEntry> entries; // scope-filtered, lattice order
  std::map<std::string, std::pair<std::size_t, std::size_t>>
    counts_by_fingerprint; // fp -> (integrable, not integrable)
};

inline ClassifyReport classify_integrable_subgroups(const PermGroup &u,
                                                    ClassifyScope scope,
                                                    std::uint64_t lattice_bound = 2048) {
  ClassifyReport rep;
  rep.lattice = std::make_shared<SubgroupLattice>(u, lattice_bound);
  const SubgroupLattice &lat = *rep.lattice;

  // derived subgroup of every lattice member, as a witness map
  std::map<SubgroupLattice::Bitset, std::vector<std::size_t>> derived_of;
  for (std::size_t i = 0; i < lat.nodes().size(); ++i) {
    SubgroupLattice::Node d = lat.derived(lat.nodes()[i]);
    derived_of[d.elems].push_back(i);
  }

  std::optional<SubgroupLattice::Bitset> scope_mask;
  if (scope == ClassifyScope::SubgroupsOfDerived) {
    SubgroupLattice::Node uprime = lat.derived(lat.nodes().back());
    scope_mask = uprime.elems;
  }

  for (std::size_t i = 0; i < lat.nodes().size(); ++i) {
    const auto &node = lat.nodes()[i];
    if (scope_mask && !SubgroupLattice::subset(node.elems, *scope_mask))
      continue;
    ClassifyEntry e;
    e.node = i;
    e.fp = lat.fingerprint(node);
    auto it = derived_of.find(node.elems);
    if (it != derived_of.end()) {
      e.integrable = true;
      e.witnesses = it->second;
    }
    auto &cnt = rep.counts_by_fingerprint[e.fp.str()];
    (e.integrable ? cnt.first : cnt.second) += 1;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

} // namespace derivant
