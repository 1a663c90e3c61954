#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "derivant/perm.hpp"
#include "derivant/perm_group.hpp"

namespace derivant {

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// All k-subsets of {0..n-1} in colexicographic order, matching the colex
/// ranking formula rank(s) = sum_j C(s_j, j+1).
struct KSubsets {
  std::size_t n, k;
  std::vector<std::vector<Point>> sets;
  std::vector<std::uint64_t> choose;

  KSubsets(std::size_t n, std::size_t k) : n(n), k(k) {
    choose.assign((n + 1) * (k + 1), 0);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= k; ++j)
        choose[i * (k + 1) + j] =
          j == 0 ? 1 : (i == 0 ? 0 : choose[(i - 1) * (k + 1) + j] +
                                       choose[(i - 1) * (k + 1) + j - 1]);
    std::vector<Point> cur(k);
    std::iota(cur.begin(), cur.end(), Point{0});
    for (;;) {
      sets.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j)
        cur[j] = static_cast<Point>(cur[j - 1] + 1);
    }
    std::sort(sets.begin(), sets.end(),
              [](const std::vector<Point> &a, const std::vector<Point> &b) {
                return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                    b.rbegin(), b.rend());
              });
  }

  /// Colex rank of a sorted k-subset; sets[rank(s)] == s.
  std::size_t rank(const std::vector<Point> &s) const {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < k; ++j)
      r += choose[s[j] * (k + 1) + j + 1];
    return static_cast<std::size_t>(r);
  }
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace detail

/// Orbits of G on k-element subsets, by union-find over the explicit subset
/// enumeration.  Refuses when C(n, k) exceeds the subset budget.
inline std::vector<std::vector<std::vector<Point>>>
orbits_on_k_sets(const PermGroup &g, std::size_t k,
                 std::uint64_t budget = 10000000) {
  if (k < 1 || k > g.degree())
    throw group_error("k out of range for k-set orbits");
  std::uint64_t count = detail::binomial(g.degree(), k);
  if (count == 0 || count > budget)
    throw budget_error("ksubsets", "C(n,k) exceeds " + std::to_string(budget));

  detail::KSubsets ks(g.degree(), k);
  detail::UnionFind uf(ks.sets.size());
  std::vector<Point> img(k);
  for (std::size_t i = 0; i < ks.sets.size(); ++i)
    for (const Perm &gen : g.generators()) {
      for (std::size_t j = 0; j < k; ++j)
        img[j] = gen[ks.sets[i][j]];
      std::sort(img.begin(), img.end());
      uf.unite(i, ks.rank(img));
    }

  std::vector<std::vector<std::vector<Point>>> orbits;
  std::vector<std::int64_t> orbit_of(ks.sets.size(), -1);
  for (std::size_t i = 0; i < ks.sets.size(); ++i) {
    std::size_t root = uf.find(i);
    if (orbit_of[root] < 0) {
      orbit_of[root] = static_cast<std::int64_t>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(orbit_of[root])].push_back(ks.sets[i]);
  }
  return orbits;
}

/// Transitive on k-element subsets?
inline bool is_k_homogeneous(const PermGroup &g, std::size_t k,
                             std::uint64_t budget = 10000000) {
  return orbits_on_k_sets(g, k, budget).size() == 1;
}

/// Transitive on ordered k-tuples of distinct points?  Decided by the orbit
/// of (1, ..., k), whose size must reach n(n-1)...(n-k+1).
inline bool is_k_transitive(const PermGroup &g, std::size_t k,
                            std::uint64_t budget = 10000000) {
  if (k < 1 || k > g.degree())
    throw group_error("k out of range for k-transitivity");
  std::uint64_t target = 1;
  for (std::size_t i = 0; i < k; ++i)
    target *= g.degree() - i;
  if (target > budget)
    throw budget_error("ksubsets", "tuple count exceeds " + std::to_string(budget));

  std::vector<Point> start(k);
  std::iota(start.begin(), start.end(), Point{0});
  std::unordered_set<std::uint64_t> seen;
  auto key = [&](const std::vector<Point> &t) {
    std::uint64_t v = 0;
    for (Point p : t)
      v = v * g.degree() + p;
    return v;
  };
  std::vector<std::vector<Point>> queue{start};
  seen.insert(key(start));
  std::vector<Point> img(k);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm &gen : g.generators()) {
      for (std::size_t j = 0; j < k; ++j)
        img[j] = gen[queue[qi][j]];
      if (seen.insert(key(img)).second)
        queue.push_back(img);
    }
    if (queue.size() == target)
      return true;
  }
  return queue.size() == target;
}

} // namespace derivant
