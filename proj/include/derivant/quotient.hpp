#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "derivant/perm.hpp"
#include "derivant/perm_group.hpp"
#include "derivant/structure.hpp"

namespace derivant {

/// Faithful permutation representation of H/N for N <| H: the action of H on
/// the right cosets of N (the regular representation of the quotient).
/// Coset representatives are the lexicographically minimal coset elements and
/// cosets are numbered in sorted representative order, so the representation
/// is canonical for a fixed (H, N).
class QuotientRep {
public:
  /// Normality of N in H is always verified, never trusted from the caller.
  QuotientRep(PermGroup parent, PermGroup kernel,
              std::uint64_t index_budget = 100000)
    : parent_(std::move(parent)), kernel_(std::move(kernel)) {
    if (!is_subgroup(kernel_, parent_))
      throw not_subgroup_error("quotient kernel is not a subgroup of the parent");
    if (!is_normal(kernel_, parent_))
      throw not_subgroup_error("quotient kernel is not normal in the parent");
    if (parent_.order_overflow())
      throw budget_error("index", "parent order exceeds 64 bits");
    std::uint64_t index = parent_.order() / kernel_.order();
    if (index > index_budget)
      throw budget_error("index", "[H:N] = " + std::to_string(index) +
                                    " exceeds " + std::to_string(index_budget));
    if (index > max_degree)
      throw budget_error("index", "[H:N] exceeds the degree cap of 65535");

    chain_ = std::make_shared<Bsgs>(kernel_.degree(), kernel_.generators(),
                                    /*natural_base=*/true);
    // breadth-first closure over cosets, then canonical renumbering
    std::unordered_map<Perm, std::size_t, PermHash> id_of;
    std::vector<Perm> reps;
    reps.push_back(min_coset_rep(*chain_, Perm(parent_.degree())));
    id_of.emplace(reps[0], 0);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      for (const Perm &h : parent_.generators()) {
        Perm c = min_coset_rep(*chain_, reps[k] * h);
        if (id_of.emplace(c, reps.size()).second)
          reps.push_back(std::move(c));
      }
    }
    if (reps.size() != index)
      throw group_error("coset enumeration mismatch");
    std::sort(reps.begin(), reps.end());
    reps_ = std::move(reps);
    id_of_.clear();
    for (std::size_t i = 0; i < reps_.size(); ++i)
      id_of_.emplace(reps_[i], i);
    identity_coset_ = id_of_.at(min_coset_rep(*chain_, Perm(parent_.degree())));

    std::vector<Perm> qgens;
    for (const Perm &h : parent_.generators())
      qgens.push_back(project(h));
    // The action of H/N on the right cosets of a (verified) normal N is
    // regular: its kernel is exactly N, so the image order equals the
    // number of cosets.
    quotient_ = std::make_shared<PermGroup>(
      PermGroup::regular(reps_.size(), std::move(qgens)));
  }

  const PermGroup &parent() const { return parent_; }
  const PermGroup &kernel() const { return kernel_; }
  const PermGroup &quotient_group() const { return *quotient_; }
  const std::vector<Perm> &transversal() const { return reps_; }
  std::size_t index() const { return reps_.size(); }

  /// Image of an element of H in the quotient action.
  Perm project(const Perm &h) const {
    std::vector<Point> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i)
      img[i] = static_cast<Point>(coset_id(reps_[i] * h));
    return Perm(std::move(img));
  }

  /// Image of a subgroup K <= H.
  PermGroup project(const PermGroup &k) const {
    std::vector<Perm> gens;
    for (const Perm &x : k.generators())
      gens.push_back(project(x));
    return PermGroup(reps_.size(), std::move(gens));
  }

  /// A preimage of a quotient element (the stored coset representative).
  /// The quotient acts regularly, so q is recovered from the image of the
  /// identity coset alone.
  const Perm &preimage_rep(const Perm &q) const {
    return reps_[q[static_cast<Point>(identity_coset_)]];
  }

  /// Full preimage of a subgroup Q of the quotient group.
  PermGroup lift(const PermGroup &q) const {
    if (q.degree() != reps_.size())
      throw group_error("lift: subgroup degree does not match quotient degree");
    if (!is_subgroup(q, *quotient_))
      throw not_subgroup_error("lift: not a subgroup of the quotient group");
    std::vector<Perm> gens = kernel_.generators();
    for (const Perm &x : q.generators())
      gens.push_back(preimage_rep(x));
    PermGroup out(parent_.degree(), std::move(gens));
    if (out.order() != q.order() * kernel_.order())
      throw group_error("lift: order mismatch");
    return out;
  }

private:
  std::size_t coset_id(const Perm &x) const {
    return id_of_.at(min_coset_rep(*chain_, x));
  }

  PermGroup parent_;
  PermGroup kernel_;
  std::shared_ptr<Bsgs> chain_;
  std::vector<Perm> reps_;
  std::unordered_map<Perm, std::size_t, PermHash> id_of_;
  std::size_t identity_coset_ = 0;
  std::shared_ptr<PermGroup> quotient_;
};

} // namespace derivant
