#pragma once

#include "liptrop/lip.hpp"

namespace liptrop {

/// Membership of a vector in the monoid carriers: Mⁿ₊ (nonnegative, pairwise
/// gaps ≤ 1), Mⁿ (pairwise gaps ≤ 1), or neither. The strongest tag wins.
enum class StarMembership { in_mn_plus, in_mn, neither };

const char* star_membership_name(StarMembership membership);

struct RnVector {
  std::vector<Rational> values;

  friend bool operator==(const RnVector& a, const RnVector& b) { return a.values == b.values; }
  std::string str() const;
};

/// The carrier of (ℝⁿ, ⋆_G): a finite group whose identity sits at index 0,
/// so the monoid identity is the vector e = (0,1,...,1). A group with the
/// identity elsewhere is rejected, never silently reordered.
class StarContext {
 public:
  explicit StarContext(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int dimension() const { return group_->order(); }

  /// The discrete-metric context the identification i: Lip(G) -> ℝⁿ lands in.
  const Context& lip_context() const { return lip_; }

 private:
  GroupPtr group_;
  Context lip_;
};

/// x ⋆ y, the min-plus convolution along the group law. Shares the exact
/// kernel with lip-monoid's ⊕, so the two can never diverge.
RnVector star(const StarContext& ctx, const RnVector& x, const RnVector& y);

StarMembership membership(const StarContext& ctx, const RnVector& x);

RnVector identity_vector(const StarContext& ctx);      // e = (0,1,...,1)
RnVector delta_vector(const StarContext& ctx, int x);  // 0 at x, 1 elsewhere

LipFn to_lip(const StarContext& ctx, const RnVector& x);
RnVector from_lip(const LipFn& f);

/// The maximal subgroup of (ℝⁿ, ⋆_G) at e: the family {r + δ_x}. Carries the
/// δ basis, sampled group-law witnesses (r+δ_x)⋆(s+δ_y) = (r+s)+δ_{xy}, and
/// sampled membership cross-checks against the residuation oracle.
struct MaximalSubgroupDescription {
  std::vector<RnVector> deltas;

  struct LawWitness {
    int x = 0;
    Rational r;
    int y = 0;
    Rational s;
    bool law_holds = false;
  };
  std::vector<LawWitness> law_witnesses;

  struct MembershipSample {
    RnVector vector;
    bool in_family = false;    // structurally r + δ_x
    bool oracle_unit = false;  // residuation oracle verdict in Lip¹
    bool consistent = false;
  };
  std::vector<MembershipSample> membership_samples;
};

MaximalSubgroupDescription maximal_subgroup_at_e(const StarContext& ctx, std::uint64_t seed = 0,
                                                 int witness_samples = 16,
                                                 int order_cap = default_order_cap);

}  // namespace liptrop
