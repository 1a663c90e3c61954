#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "derivant/error.hpp"
#include "derivant/perm.hpp"

namespace derivant {

namespace detail {

/// Saturating multiply; sets the overflow flag instead of wrapping.
inline std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b, bool &overflow) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    overflow = true;
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

} // namespace detail

/// Base-and-strong-generating-set (stabilizer chain).
///
/// Deterministic construction: at every level the base point is the smallest
/// point moved by the level's generators, orbits are grown breadth-first with
/// generators in list order.  Transversals store full coset representatives
/// when the orbit is small enough, otherwise a Schreier vector.
class Bsgs {
public:
  struct Level {
    Point beta = 0;
    std::vector<Perm> gens;           // strong generators fixing base[0..i-1]
    std::vector<Point> orbit;          // BFS order; orbit[0] == beta
    std::vector<std::int32_t> pos;     // point -> index in orbit, or -1
    bool full_reps = false;
    std::vector<Perm> reps;            // reps[k] maps beta -> orbit[k]
    // Schreier vector: for orbit position k > 0, orbit[k] = parent^gens[g].
    std::vector<std::pair<std::int32_t, Point>> tree; // (gen index, parent)
    std::size_t max_tree_depth = 0;

    /// Coset representative mapping beta to orbit[k].
    Perm rep(std::size_t k, std::size_t degree) const {
      if (full_reps)
        return reps[k];
      Perm r(degree);
      apply_rep(k, r);
      return r;
    }

    /// u := u * rep(k).  Walks the Schreier tree when reps are not stored.
    void apply_rep(std::size_t k, Perm &u) const {
      if (full_reps) {
        u = u * reps[k];
        return;
      }
      // collect the generator word along the tree path root..orbit[k]
      std::vector<std::int32_t> word;
      std::size_t cur = k;
      while (cur != 0) {
        word.push_back(tree[cur].first);
        cur = static_cast<std::size_t>(pos[tree[cur].second]);
      }
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        u = u * gens[static_cast<std::size_t>(*it)];
    }

    /// u := u * rep(k)^-1.
    void apply_rep_inverse(std::size_t k, Perm &u) const {
      if (full_reps) {
        u = u * reps[k].inverse();
        return;
      }
      std::size_t cur = k;
      while (cur != 0) {
        u = u * gens[static_cast<std::size_t>(tree[cur].first)].inverse();
        cur = static_cast<std::size_t>(pos[tree[cur].second]);
      }
    }

    /// Visit (k, rep_k) for every orbit position, one product per element
    /// where the tree is shallow enough to keep the root path in memory.
    /// Stops (and touches no further state) once fn returns false, so a
    /// callback may invalidate the level as its final act.
    void for_each_rep(std::size_t degree,
                      const std::function<bool(std::size_t, const Perm &)> &fn) const {
      if (full_reps) {
        for (std::size_t k = 0; k < orbit.size(); ++k)
          if (!fn(k, reps[k]))
            return;
        return;
      }
      if (max_tree_depth > 256) {
        for (std::size_t k = 0; k < orbit.size(); ++k) {
          Perm r(degree);
          apply_rep(k, r);
          if (!fn(k, r))
            return;
        }
        return;
      }
      std::vector<std::vector<std::uint32_t>> kids(orbit.size());
      for (std::size_t k = 1; k < orbit.size(); ++k)
        kids[static_cast<std::size_t>(pos[tree[k].second])].push_back(
          static_cast<std::uint32_t>(k));
      struct Frame {
        std::uint32_t k;
        std::size_t next_child = 0;
      };
      std::vector<Frame> stack{{0, 0}};
      std::vector<Perm> path{Perm(degree)};
      if (!fn(0, path[0]))
        return;
      // snapshot of the generator list: fn must not see stale state, but the
      // tree topology referenced below is captured in kids/tree copies held
      // by value where mutation matters
      while (!stack.empty()) {
        Frame &f = stack.back();
        const auto &ch = kids[f.k];
        if (f.next_child == ch.size()) {
          stack.pop_back();
          path.pop_back();
          continue;
        }
        std::uint32_t c = ch[f.next_child++];
        Perm r = path.back() * gens[static_cast<std::size_t>(tree[c].first)];
        bool keep = fn(c, r);
        if (!keep)
          return;
        stack.push_back({c, 0});
        path.push_back(std::move(r));
      }
    }
  };

  /// `natural_base` keeps the base in ascending point order (levels sorted
  /// by base point, one per moved point of the corresponding stabilizer);
  /// required by the minimal-coset-representative computation.  The default
  /// picks the smallest point moved at each level as the chain is grown.
  /// Tag for actions known to be regular (transitive with trivial point
  /// stabilizers), where the whole chain is a single orbit level.  Used by
  /// the quotient machinery: the action of H/N on the right cosets of a
  /// verified-normal N is regular by construction, so the Schreier-Sims
  /// verification pass would only reconfirm |G| = degree.
  struct RegularTag {};

  Bsgs(RegularTag, std::size_t degree, const std::vector<Perm> &generators)
    : degree_(degree) {
    std::vector<Perm> gens;
    for (const Perm &g : generators) {
      if (g.degree() != degree_)
        throw group_error("generator degree mismatch");
      if (!g.is_identity())
        gens.push_back(g);
    }
    if (gens.empty()) {
      if (degree_ != 1)
        throw group_error("trivial generators cannot act regularly on >1 point");
      order_ = 1;
      return;
    }
    Level lvl;
    lvl.beta = 0;
    lvl.gens = std::move(gens);
    levels_.push_back(std::move(lvl));
    rebuild_orbit(levels_[0]);
    if (levels_[0].orbit.size() != degree_)
      throw group_error("claimed regular action is not transitive");
    order_ = degree_;
  }

  Bsgs(std::size_t degree, const std::vector<Perm> &generators,
       bool natural_base = false)
    : degree_(degree), natural_(natural_base) {
    std::size_t beta0 = degree_;
    for (const Perm &g : generators) {
      if (g.degree() != degree_)
        throw group_error("generator degree mismatch");
      beta0 = std::min(beta0, g.min_moved());
    }
    if (beta0 < degree_) {
      Level lvl;
      lvl.beta = static_cast<Point>(beta0);
      levels_.push_back(std::move(lvl));
      for (const Perm &g : generators)
        if (!g.is_identity()) {
          levels_[0].gens.push_back(g);
          if (natural_)
            natural_master_.push_back(g);
        }
    }
    complete();
    order_ = 1;
    order_overflow_ = false;
    for (const Level &lvl : levels_)
      order_ = detail::mul_sat(order_, lvl.orbit.size(), order_overflow_);
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Level> &levels() const { return levels_; }

  std::uint64_t order() const { return order_; }
  bool order_overflow() const { return order_overflow_; }

  std::vector<Perm> strong_generators() const {
    std::vector<Perm> out;
    for (const Perm &g : levels_.empty() ? std::vector<Perm>{} : levels_[0].gens)
      out.push_back(g);
    return out;
  }

  /// Sift u through the chain starting at `from`.  Returns the residue and
  /// the number of levels passed; u is a member of the stabilizer iff the
  /// residue is the identity and every level was passed.
  std::pair<Perm, std::size_t> sift(Perm u, std::size_t from = 0) const {
    std::size_t i = from;
    for (; i < levels_.size(); ++i) {
      const Level &lvl = levels_[i];
      Point x = u[lvl.beta];
      if (lvl.pos[x] < 0)
        return {std::move(u), i};
      lvl.apply_rep_inverse(static_cast<std::size_t>(lvl.pos[x]), u);
    }
    return {std::move(u), i};
  }

  bool contains(const Perm &u) const {
    if (u.degree() != degree_)
      return false;
    auto [res, lvl] = sift(u);
    return lvl == levels_.size() && res.is_identity();
  }

  /// Visit every group element exactly once (deterministic order).
  void for_each_element(const std::function<void(const Perm &)> &fn) const {
    Perm id(degree_);
    enumerate_rec(levels_.size(), id, fn);
  }

private:
  // element = t_{L-1} * ... * t_1 * t_0, innermost level first
  void enumerate_rec(std::size_t level, const Perm &suffix,
                     const std::function<void(const Perm &)> &fn) const {
    if (level == 0) {
      fn(suffix);
      return;
    }
    const Level &lvl = levels_[level - 1];
    lvl.for_each_rep(degree_, [&](std::size_t, const Perm &rep) {
      enumerate_rec(level - 1, suffix * rep, fn);
      return true;
    });
  }

  // Returns the index of the level holding the new generator.
  std::size_t insert_generator(std::size_t fail_level, const Perm &g) {
    if (!natural_) {
      if (fail_level == levels_.size()) {
        Level lvl;
        lvl.beta = static_cast<Point>(g.min_moved());
        levels_.push_back(std::move(lvl));
      }
      levels_[fail_level].gens.push_back(g);
      return fail_level;
    }
    // natural mode: generator sets are the filter of one master list,
    // S(l) = { g : g fixes every point below the level's base }, so that
    // the sets are nested and sifting certifies membership level by level.
    // The new generator's home level is that of its smallest moved point.
    natural_master_.push_back(g);
    Point beta = static_cast<Point>(g.min_moved());
    std::size_t idx = 0;
    while (idx < levels_.size() && levels_[idx].beta < beta)
      ++idx;
    if (idx == levels_.size() || levels_[idx].beta != beta) {
      Level lvl;
      lvl.beta = beta;
      levels_.insert(levels_.begin() + static_cast<std::ptrdiff_t>(idx),
                     std::move(lvl));
    }
    // re-filter every level up to and including the home level (deeper
    // levels' filters cannot match the new generator)
    for (std::size_t l = 0; l <= idx; ++l) {
      levels_[l].gens.clear();
      for (const Perm &m : natural_master_)
        if (m.min_moved() >= levels_[l].beta)
          levels_[l].gens.push_back(m);
      rebuild_orbit(levels_[l]);
    }
    return idx;
  }

  void rebuild_orbit(Level &lvl) {
    lvl.orbit.assign(1, lvl.beta);
    lvl.pos.assign(degree_, -1);
    lvl.pos[lvl.beta] = 0;
    lvl.tree.assign(1, {-1, lvl.beta});
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      Point x = lvl.orbit[k];
      for (std::size_t gi = 0; gi < lvl.gens.size(); ++gi) {
        Point y = lvl.gens[gi][x];
        if (lvl.pos[y] < 0) {
          lvl.pos[y] = static_cast<std::int32_t>(lvl.orbit.size());
          lvl.orbit.push_back(y);
          lvl.tree.push_back({static_cast<std::int32_t>(gi), x});
        }
      }
    }
    lvl.full_reps =
      lvl.orbit.size() * degree_ <= (std::size_t{1} << 22);
    lvl.reps.clear();
    if (lvl.full_reps) {
      lvl.reps.resize(lvl.orbit.size());
      lvl.reps[0] = Perm(degree_);
      for (std::size_t k = 1; k < lvl.orbit.size(); ++k) {
        std::size_t parent = static_cast<std::size_t>(lvl.pos[lvl.tree[k].second]);
        lvl.reps[k] =
          lvl.reps[parent] * lvl.gens[static_cast<std::size_t>(lvl.tree[k].first)];
      }
    }
    lvl.max_tree_depth = 0;
    std::vector<std::uint32_t> depth(lvl.orbit.size(), 0);
    for (std::size_t k = 1; k < lvl.orbit.size(); ++k) {
      depth[k] = depth[static_cast<std::size_t>(lvl.pos[lvl.tree[k].second])] + 1;
      lvl.max_tree_depth = std::max<std::size_t>(lvl.max_tree_depth, depth[k]);
    }
  }

  // Deterministic Schreier-Sims: verify levels bottom-up; whenever a Schreier
  // generator fails to sift, add the residue below and re-verify from there.
  void complete() {
    if (levels_.empty())
      return;
    rebuild_orbit(levels_[0]);
    std::size_t i = 0;
    while (true) {
      bool modified = false;
      const Level &lvl = levels_[i];
      // iterate coset representatives incrementally along the Schreier tree;
      // the callback invalidates the level (and stops the sweep) on mutation
      lvl.for_each_rep(degree_, [&](std::size_t k, const Perm &rep) {
        for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
          const Level &cur = levels_[i];
          Point y = cur.gens[gi][cur.orbit[k]];
          // Schreier generator rep(k) * g * rep(pos[y])^-1
          Perm s = rep * cur.gens[gi];
          cur.apply_rep_inverse(static_cast<std::size_t>(cur.pos[y]), s);
          if (s.is_identity())
            continue;
          auto [residue, reached] = sift(std::move(s), i + 1);
          if (residue.is_identity() && reached == levels_.size())
            continue;
          std::size_t target = insert_generator(reached, residue);
          if (!natural_) {
            // Holt-style: carry the residue through the intermediate levels
            // so the generator sets stay nested; sifting to the identity
            // certifies membership in the next level's group only under
            // that nesting.  (Natural mode re-filters inside
            // insert_generator instead.)
            rebuild_orbit(levels_[target]);
            for (std::size_t l = i + 1; l < target; ++l) {
              levels_[l].gens.push_back(residue);
              rebuild_orbit(levels_[l]);
            }
          }
          i = target;
          modified = true;
          return false; // level data may have moved; restart the sweep
        }
        return true;
      });
      if (modified)
        continue;
      if (i == 0)
        break;
      --i;
    }
  }

  std::size_t degree_;
  bool natural_ = false;
  std::vector<Level> levels_;
  std::vector<Perm> natural_master_; // filter source, natural mode only
  std::uint64_t order_ = 1;
  bool order_overflow_ = false;
};

/// Lexicographically minimal element of the right coset N*g, computed
/// greedily along a natural-base chain of N.  Canonical: depends only on
/// the coset, not on the chain's internals or N's generator list.
inline Perm min_coset_rep(const Bsgs &natural_chain, Perm g) {
  for (const Bsgs::Level &lvl : natural_chain.levels()) {
    // pick the orbit point of the base whose g-image is smallest
    std::size_t best = 0;
    for (std::size_t k = 1; k < lvl.orbit.size(); ++k)
      if (g[lvl.orbit[k]] < g[lvl.orbit[best]])
        best = k;
    if (best != 0) {
      Perm t(g.degree());
      lvl.apply_rep(best, t);
      g = t * g;
    }
  }
  return g;
}

/// Optional structural tag attached by the metacyclic constructor; the
/// metacyclic fast path of the integrability engine keys off it.
struct MetacyclicTag {
  std::uint64_t m = 0, n = 0, r = 0;
  Perm x; // generator of the designated normal cyclic subgroup
  Perm y;
};

/// A finite permutation group given by generators, with a lazily built
/// stabilizer chain.  Immutable after the chain is built; cheap to copy.
class PermGroup {
public:
  explicit PermGroup(std::size_t degree)
    : degree_(degree), gens_{Perm(degree)} {}

  PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
    if (gens_.empty())
      gens_.push_back(Perm(degree_));
    for (const Perm &g : gens_)
      if (g.degree() != degree_)
        throw group_error("all generators must share the group's degree");
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree); }

  /// A group whose action is known to be regular (the caller's obligation;
  /// the factory still verifies transitivity and throws if the orbit does
  /// not cover the points).  Skips the Schreier-Sims verification pass.
  static PermGroup regular(std::size_t degree, std::vector<Perm> generators) {
    PermGroup g(degree, std::move(generators));
    g.bsgs_ = std::make_shared<Bsgs>(Bsgs::RegularTag{}, degree, g.gens_);
    return g;
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }

  const Bsgs &bsgs() const {
    if (!bsgs_)
      bsgs_ = std::make_shared<Bsgs>(degree_, gens_);
    return *bsgs_;
  }

  std::uint64_t order() const {
    const Bsgs &b = bsgs();
    if (b.order_overflow())
      throw group_error("group order exceeds 64 bits; use order_exceeds/order_string");
    return b.order();
  }

  bool order_overflow() const { return bsgs().order_overflow(); }

  /// True when |G| > limit, overflow-safe.
  bool order_exceeds(std::uint64_t limit) const {
    const Bsgs &b = bsgs();
    return b.order_overflow() || b.order() > limit;
  }

  /// Exact decimal order, even when it does not fit in 64 bits.
  std::string order_string() const {
    // multiply the transversal sizes as a decimal bignum
    std::vector<std::uint32_t> digits{1}; // little-endian base 10^9
    for (const Bsgs::Level &lvl : bsgs().levels()) {
      std::uint64_t carry = 0;
      std::uint64_t f = lvl.orbit.size();
      for (auto &d : digits) {
        std::uint64_t v = d * f + carry;
        d = static_cast<std::uint32_t>(v % 1000000000ull);
        carry = v / 1000000000ull;
      }
      while (carry) {
        digits.push_back(static_cast<std::uint32_t>(carry % 1000000000ull));
        carry /= 1000000000ull;
      }
    }
    std::string out = std::to_string(digits.back());
    for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
      std::string part = std::to_string(*it);
      out += std::string(9 - part.size(), '0') + part;
    }
    return out;
  }

  bool is_trivial() const { return !order_overflow() && order() == 1; }

  bool contains(const Perm &p) const {
    if (p.degree() != degree_)
      return false;
    if (element_set_)
      return element_set_->count(p) > 0;
    return bsgs().contains(p);
  }

  /// Caches the full element set for fast repeated membership tests.
  /// Only sensible for small groups; no-op beyond the threshold.
  void cache_elements(std::uint64_t threshold = 4096) const {
    if (element_set_ || order_overflow() || order() > threshold)
      return;
    auto set = std::make_shared<std::unordered_set<Perm, PermHash>>();
    bsgs().for_each_element([&](const Perm &p) { set->insert(p); });
    element_set_ = std::move(set);
  }

  void for_each_element(const std::function<void(const Perm &)> &fn) const {
    bsgs().for_each_element(fn);
  }

  /// All elements, materialized; guarded by an element budget.
  std::vector<Perm> elements(std::uint64_t budget = 100000) const {
    if (order_exceeds(budget))
      throw budget_error("elements",
                         "group order exceeds " + std::to_string(budget));
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(order()));
    for_each_element([&](const Perm &p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Uniformly random element: u = t_{L-1} * ... * t_1 * t_0 with each t
  /// uniform over its transversal (the factorization is unique, so the
  /// product is uniform).  Only used for Monte Carlo sanity checks.
  Perm random_element(std::mt19937_64 &rng) const {
    Perm u(degree_);
    const auto &levels = bsgs().levels();
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
      std::uniform_int_distribution<std::size_t> d(0, it->orbit.size() - 1);
      it->apply_rep(d(rng), u);
    }
    return u;
  }

  /// Orbits of the natural action, each sorted, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<std::int32_t> id(degree_, -1);
    std::vector<std::vector<Point>> out;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (id[i] >= 0)
        continue;
      std::vector<Point> orb{static_cast<Point>(i)};
      id[i] = static_cast<std::int32_t>(out.size());
      for (std::size_t k = 0; k < orb.size(); ++k)
        for (const Perm &g : gens_) {
          Point y = g[orb[k]];
          if (id[y] < 0) {
            id[y] = id[i];
            orb.push_back(y);
          }
        }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  bool is_transitive() const { return orbits().size() == 1; }

  bool is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (!commutator(gens_[i], gens_[j]).is_identity())
          return false;
    return true;
  }

  /// Regular means transitive of order equal to the degree.
  bool is_regular() const {
    return is_transitive() && !order_overflow() && order() == degree_;
  }

  /// True iff this is the full symmetric group in its natural action,
  /// decided from the stabilizer chain's orbit sizes (no big arithmetic).
  bool is_natural_symmetric() const {
    if (degree_ == 1)
      return true;
    std::vector<std::size_t> sizes;
    for (const Bsgs::Level &lvl : bsgs().levels())
      sizes.push_back(lvl.orbit.size());
    std::sort(sizes.rbegin(), sizes.rend());
    if (sizes.size() != degree_ - 1)
      return false;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if (sizes[i] != degree_ - i)
        return false;
    return true;
  }

  /// Cyclic p-group test (exact): a cyclic p-group's every generating set
  /// contains an element of full order.
  bool is_cyclic_p_group() const {
    if (order_overflow())
      return false;
    std::uint64_t n = order();
    if (n == 1)
      return false;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        p = d;
        break;
      }
    if (p == 0)
      p = n;
    std::uint64_t m = n;
    while (m % p == 0)
      m /= p;
    if (m != 1)
      return false;
    if (!is_abelian())
      return false;
    for (const Perm &g : gens_)
      if (g.order() == n)
        return true;
    return false;
  }

  std::optional<MetacyclicTag> metacyclic_tag;

private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<Bsgs> bsgs_;
  mutable std::shared_ptr<std::unordered_set<Perm, PermHash>> element_set_;
};

/// Generator-membership containment test: every generator of A lies in B.
inline bool is_subgroup(const PermGroup &a, const PermGroup &b) {
  if (a.degree() != b.degree())
    throw group_error("degree mismatch in subgroup test");
  for (const Perm &g : a.generators())
    if (!b.contains(g))
      return false;
  return true;
}

/// Mutual-containment equality; compares orders first when both are exact.
inline bool equals(const PermGroup &a, const PermGroup &b) {
  if (a.degree() != b.degree())
    return false;
  if (!a.order_overflow() && !b.order_overflow()) {
    if (a.bsgs().order() != b.bsgs().order())
      return false;
    return is_subgroup(a, b);
  }
  return is_subgroup(a, b) && is_subgroup(b, a);
}

/// Adjoin one element (no-op if already contained).
inline PermGroup extend(const PermGroup &g, const Perm &p) {
  if (g.contains(p))
    return g;
  std::vector<Perm> gens = g.generators();
  gens.push_back(p);
  return PermGroup(g.degree(), std::move(gens));
}

/// Deterministic small generating set: greedily adjoin the lexicographically
/// smallest elements (for small groups) or strong generators until the whole
/// group is generated.
inline std::vector<Perm> canonical_generators(const PermGroup &g,
                                              std::uint64_t element_threshold = 4096) {
  std::vector<Perm> cands;
  if (!g.order_exceeds(element_threshold))
    cands = g.elements(element_threshold);
  else {
    cands = g.bsgs().strong_generators();
    std::sort(cands.begin(), cands.end());
  }
  std::vector<Perm> out;
  PermGroup k = PermGroup::trivial(g.degree());
  for (const Perm &c : cands) {
    if (c.is_identity() || k.contains(c))
      continue;
    out.push_back(c);
    k = PermGroup(g.degree(), out);
    if (!k.order_overflow() && !g.order_overflow() && k.order() == g.bsgs().order())
      break;
    if (equals(k, g))
      break;
  }
  if (out.empty())
    out.push_back(Perm(g.degree()));
  return out;
}

} // namespace derivant
