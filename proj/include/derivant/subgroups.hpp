#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "derivant/perm.hpp"
#include "derivant/perm_group.hpp"
#include "derivant/quotient.hpp"
#include "derivant/structure.hpp"

namespace derivant {

/// Heuristic isomorphism fingerprint used to group report entries.
/// Collisions are acceptable: verdicts never depend on it.
struct Fingerprint {
  std::uint64_t order = 1;
  bool abelian = true;
  std::uint64_t exponent = 1;
  std::size_t derived_length = 0;
  std::uint64_t center_order = 1;

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
  friend auto operator<=>(const Fingerprint &, const Fingerprint &) = default;

  std::string str() const {
    return std::to_string(order) + (abelian ? ":ab:" : ":nonab:") +
           "exp" + std::to_string(exponent) + ":dl" +
           std::to_string(derived_length) + ":z" + std::to_string(center_order);
  }
};

/// The complete subgroup lattice of a small group, over an explicit element
/// universe with a multiplication table.  Subgroups are element bitsets.
///
/// Enumeration works in layers: starting from the cyclic subgroups, every
/// layer joins known subgroups with one more cyclic subgroup and closes.
/// Every subgroup is the join of its cyclic subgroups, so the closure is
/// complete -- including non-solvable subgroups, which extension only by
/// normalizing prime-order elements would miss.  Deduplication is by
/// element-set fingerprint (hash of the bitset, full compare on collision).
class SubgroupLattice {
public:
  using Bitset = std::vector<std::uint64_t>;

  struct Node {
    Bitset elems;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> gens; // element indices, minimal-ish
  };

  explicit SubgroupLattice(const PermGroup &g, std::uint64_t bound = 2048)
    : group_(g) {
    if (g.order_exceeds(bound))
      throw budget_error("lattice", "|G| = " +
                           (g.order_overflow() ? g.order_string()
                                               : std::to_string(g.bsgs().order())) +
                           " exceeds the subgroup-enumeration bound " +
                           std::to_string(bound));
    elems_ = g.elements(bound);
    n_ = static_cast<std::uint32_t>(elems_.size());
    words_ = (n_ + 63) / 64;
    std::unordered_map<Perm, std::uint32_t, PermHash> index;
    for (std::uint32_t i = 0; i < n_; ++i)
      index.emplace(elems_[i], i);
    id_ = index.at(Perm(g.degree()));
    mul_.resize(std::size_t{n_} * n_);
    inv_.resize(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      inv_[i] = index.at(elems_[i].inverse());
      for (std::uint32_t j = 0; j < n_; ++j)
        mul_[std::size_t{i} * n_ + j] = index.at(elems_[i] * elems_[j]);
    }
    enumerate();
  }

  std::uint32_t universe_size() const { return n_; }
  const std::vector<Perm> &universe() const { return elems_; }
  const std::vector<Node> &nodes() const { return nodes_; }
  const PermGroup &group() const { return group_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[std::size_t{a} * n_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t identity_index() const { return id_; }

  std::uint32_t element_index(const Perm &p) const {
    auto it = std::find(elems_.begin(), elems_.end(), p);
    if (it == elems_.end())
      throw group_error("element not in lattice universe");
    return static_cast<std::uint32_t>(it - elems_.begin());
  }

  static bool bit(const Bitset &b, std::uint32_t i) {
    return (b[i >> 6] >> (i & 63)) & 1;
  }
  static void set_bit(Bitset &b, std::uint32_t i) {
    b[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  static bool subset(const Bitset &a, const Bitset &b) {
    for (std::size_t w = 0; w < a.size(); ++w)
      if (a[w] & ~b[w])
        return false;
    return true;
  }

  /// Closure of a set of element indices; returns the lattice node shape.
  Node close(std::vector<std::uint32_t> gens) const {
    Node node;
    node.elems.assign(words_, 0);
    set_bit(node.elems, id_);
    std::vector<std::uint32_t> frontier{id_};
    node.order = 1;
    // drop identity/duplicate generators
    std::vector<std::uint32_t> use;
    for (std::uint32_t x : gens)
      if (x != id_ && std::find(use.begin(), use.end(), x) == use.end())
        use.push_back(x);
    for (std::uint32_t x : use)
      if (!bit(node.elems, x)) {
        set_bit(node.elems, x);
        frontier.push_back(x);
        ++node.order;
      }
    for (std::size_t k = 0; k < frontier.size(); ++k)
      for (std::uint32_t x : use) {
        std::uint32_t y = mul(frontier[k], x);
        if (!bit(node.elems, y)) {
          set_bit(node.elems, y);
          frontier.push_back(y);
          ++node.order;
        }
      }
    node.gens = std::move(use);
    return node;
  }

  /// Derived subgroup of a node (commutators of generators, then normal
  /// closure within the node).
  Node derived(const Node &h) const {
    std::vector<std::uint32_t> seeds;
    for (std::size_t i = 0; i < h.gens.size(); ++i)
      for (std::size_t j = i + 1; j < h.gens.size(); ++j) {
        std::uint32_t a = h.gens[i], b = h.gens[j];
        std::uint32_t c = mul(mul(mul(inv(a), inv(b)), a), b);
        if (c != id_)
          seeds.push_back(c);
      }
    Node d = close(seeds);
    // normal closure under conjugation by h's generators
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint32_t> dgens = d.gens;
      for (std::uint32_t x : dgens)
        for (std::uint32_t t : h.gens) {
          std::uint32_t c = mul(mul(inv(t), x), t);
          if (!bit(d.elems, c)) {
            std::vector<std::uint32_t> g2 = d.gens;
            g2.push_back(c);
            d = close(g2);
            changed = true;
          }
        }
    }
    return d;
  }

  Fingerprint fingerprint(const Node &h) const {
    Fingerprint fp;
    fp.order = h.order;
    fp.abelian = true;
    for (std::size_t i = 0; i < h.gens.size() && fp.abelian; ++i)
      for (std::size_t j = i + 1; j < h.gens.size() && fp.abelian; ++j)
        if (mul(h.gens[i], h.gens[j]) != mul(h.gens[j], h.gens[i]))
          fp.abelian = false;
    fp.exponent = 1;
    std::uint64_t center = 0;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (!bit(h.elems, x))
        continue;
      fp.exponent = std::lcm(fp.exponent, elems_[x].order());
      bool central = true;
      for (std::uint32_t t : h.gens)
        if (mul(x, t) != mul(t, x)) {
          central = false;
          break;
        }
      if (central)
        ++center;
    }
    fp.center_order = center;
    Node d = h;
    while (true) {
      Node next = derived(d);
      if (next.order == d.order)
        break;
      d = std::move(next);
      ++fp.derived_length;
    }
    return fp;
  }

  PermGroup to_group(const Node &h) const {
    std::vector<Perm> gens;
    for (std::uint32_t x : h.gens)
      gens.push_back(elems_[x]);
    if (gens.empty())
      gens.push_back(Perm(group_.degree()));
    return PermGroup(group_.degree(), std::move(gens));
  }

  /// Index of the node equal to the given element set, if present.
  std::optional<std::size_t> find(const Bitset &elems) const {
    auto range = by_hash_.equal_range(hash_bits(elems));
    for (auto it = range.first; it != range.second; ++it)
      if (nodes_[it->second].elems == elems)
        return it->second;
    return std::nullopt;
  }

  /// Node index for an engine-level subgroup of G.
  std::size_t find_subgroup(const PermGroup &h) const {
    Bitset b(words_, 0);
    h.for_each_element([&](const Perm &p) { set_bit(b, element_index(p)); });
    auto idx = find(b);
    if (!idx)
      throw group_error("subgroup not found in lattice");
    return *idx;
  }

private:
  static std::uint64_t hash_bits(const Bitset &b) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : b) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  bool add_node(Node node) {
    std::uint64_t h = hash_bits(node.elems);
    auto range = by_hash_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (nodes_[it->second].elems == node.elems)
        return false;
    by_hash_.emplace(h, nodes_.size());
    nodes_.push_back(std::move(node));
    return true;
  }

  void enumerate() {
    // layer 0: trivial subgroup and all cyclic subgroups
    add_node(close({}));
    std::vector<std::uint32_t> cyclic_gens;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (x == id_)
        continue;
      Node c = close({x});
      if (add_node(std::move(c)))
        cyclic_gens.push_back(x);
    }
    // higher layers: join each known subgroup with each cyclic subgroup
    for (std::size_t k = 0; k < nodes_.size(); ++k)
      for (std::uint32_t x : cyclic_gens) {
        if (bit(nodes_[k].elems, x))
          continue;
        std::vector<std::uint32_t> gens = nodes_[k].gens;
        gens.push_back(x);
        add_node(close(std::move(gens)));
      }
    std::sort(nodes_.begin(), nodes_.end(), [](const Node &a, const Node &b) {
      if (a.order != b.order)
        return a.order < b.order;
      return a.elems < b.elems;
    });
    by_hash_.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      by_hash_.emplace(hash_bits(nodes_[i].elems), i);
  }

  PermGroup group_;
  std::vector<Perm> elems_;
  std::uint32_t n_ = 0;
  std::uint32_t id_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<Node> nodes_;
  std::unordered_multimap<std::uint64_t, std::size_t> by_hash_;
};

/// The complete list of subgroups of G, sorted by (order, element set).
inline std::vector<PermGroup> all_subgroups(const PermGroup &g,
                                            std::uint64_t bound = 2048) {
  SubgroupLattice lat(g, bound);
  std::vector<PermGroup> out;
  out.reserve(lat.nodes().size());
  for (const auto &node : lat.nodes())
    out.push_back(lat.to_group(node));
  return out;
}

/// All H with G <= H <= N_amb, computed as lifts of the subgroups of the
/// quotient N_amb/G.  Requires G <| N_amb.
inline std::vector<PermGroup> intermediate_subgroups(const PermGroup &n_amb,
                                                     const PermGroup &g,
                                                     std::uint64_t index_budget = 100000,
                                                     std::uint64_t lattice_bound = 2048) {
  QuotientRep qr(n_amb, g, index_budget);
  std::vector<PermGroup> subs = all_subgroups(qr.quotient_group(), lattice_bound);
  std::vector<PermGroup> out;
  out.reserve(subs.size());
  for (const PermGroup &q : subs)
    out.push_back(qr.lift(q));
  std::sort(out.begin(), out.end(), [](const PermGroup &a, const PermGroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return canonical_generators(a) < canonical_generators(b);
  });
  return out;
}

/// Fingerprint of an engine-level group (element scan; budget-guarded).
inline Fingerprint fingerprint(const PermGroup &g, std::uint64_t budget = 100000) {
  Fingerprint fp;
  fp.order = g.order();
  fp.abelian = g.is_abelian();
  fp.exponent = 1;
  for (const Perm &e : g.elements(budget))
    fp.exponent = std::lcm(fp.exponent, e.order());
  fp.derived_length = derived_series(g).derived_length();
  fp.center_order = center(g, budget).order();
  return fp;
}

} // namespace derivant
