#include "liptrop/rn_star.hpp"

#include "liptrop/sampler.hpp"

namespace liptrop {

const char* star_membership_name(StarMembership membership) {
  switch (membership) {
    case StarMembership::in_mn_plus: return "IN_MNPLUS";
    case StarMembership::in_mn: return "IN_MN";
    case StarMembership::neither: return "NEITHER";
  }
  return "?";
}

std::string RnVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ", ";
    s += values[i].str();
  }
  return s + ")";
}

StarContext::StarContext(GroupPtr group)
    : group_(std::move(group)), lip_(Context::discrete(group_)) {
  if (group_->identity() != 0) {
    throw Error(Errc::identity_not_first,
                "star carrier needs the identity at index 0, found it at index " +
                    std::to_string(group_->identity()));
  }
}

namespace {

void require_dimension(const StarContext& ctx, const RnVector& x, const char* what) {
  if (static_cast<int>(x.values.size()) != ctx.dimension()) {
    throw Error(Errc::context_mismatch, std::string(what) + ": vector has " +
                                            std::to_string(x.values.size()) +
                                            " entries over dimension " +
                                            std::to_string(ctx.dimension()));
  }
}

}  // namespace

RnVector star(const StarContext& ctx, const RnVector& x, const RnVector& y) {
  require_dimension(ctx, x, "star");
  require_dimension(ctx, y, "star");
  return RnVector{min_plus_convolve(ctx.group(), x.values, y.values)};
}

StarMembership membership(const StarContext& ctx, const RnVector& x) {
  require_dimension(ctx, x, "membership");
  Rational lowest = x.values[0];
  Rational highest = x.values[0];
  for (const Rational& v : x.values) {
    lowest = min(lowest, v);
    highest = max(highest, v);
  }
  if (highest - lowest > Rational(1)) return StarMembership::neither;
  return lowest.is_negative() ? StarMembership::in_mn : StarMembership::in_mn_plus;
}

RnVector identity_vector(const StarContext& ctx) {
  std::vector<Rational> e(ctx.dimension(), Rational(1));
  e[0] = 0;
  return RnVector{std::move(e)};
}

RnVector delta_vector(const StarContext& ctx, int x) {
  return from_lip(delta(ctx.lip_context(), x));
}

LipFn to_lip(const StarContext& ctx, const RnVector& x) {
  require_dimension(ctx, x, "to_lip");
  return LipFn(ctx.lip_context(), x.values);
}

RnVector from_lip(const LipFn& f) { return RnVector{f.values()}; }

MaximalSubgroupDescription maximal_subgroup_at_e(const StarContext& ctx, std::uint64_t seed,
                                                 int witness_samples, int order_cap) {
  if (ctx.dimension() > order_cap) {
    throw Error(Errc::order_too_large, "dimension " + std::to_string(ctx.dimension()) +
                                           " above cap " + std::to_string(order_cap));
  }
  MaximalSubgroupDescription out;
  int n = ctx.dimension();
  for (int x = 0; x < n; ++x) out.deltas.push_back(delta_vector(ctx, x));

  Sampler sampler(seed);
  const FiniteGroup& group = ctx.group();
  for (int i = 0; i < witness_samples; ++i) {
    MaximalSubgroupDescription::LawWitness w;
    w.x = sampler.index(n);
    w.y = sampler.index(n);
    w.r = sampler.rational(Rational(-8), Rational(8));
    w.s = sampler.rational(Rational(-8), Rational(8));
    RnVector left{out.deltas[w.x].values};
    for (Rational& v : left.values) v += w.r;
    RnVector right{out.deltas[w.y].values};
    for (Rational& v : right.values) v += w.s;
    RnVector expected{out.deltas[group.op(w.x, w.y)].values};
    for (Rational& v : expected.values) v += w.r + w.s;
    w.law_holds = star(ctx, left, right) == expected;
    out.law_witnesses.push_back(std::move(w));
  }

  // Membership criterion: v belongs iff v ∈ Mⁿ, e ⋆ v = v and the residuation
  // oracle confirms a two-sided inverse. Half the samples are family members.
  for (int i = 0; i < witness_samples; ++i) {
    MaximalSubgroupDescription::MembershipSample sample;
    if (sampler.coin()) {
      int x = sampler.index(n);
      RnVector v{out.deltas[x].values};
      Rational r = sampler.rational(Rational(-8), Rational(8));
      for (Rational& value : v.values) value += r;
      sample.vector = std::move(v);
    } else {
      LipFn f = Sampler(sampler.next()).cone_fn(ctx.lip_context(), Cone::lip1);
      sample.vector = from_lip(f);
    }
    LipFn f = to_lip(ctx, sample.vector);
    LipFn rebased = f.plus(-f.min_value());
    sample.in_family = false;
    for (int x = 0; x < n && !sample.in_family; ++x) {
      sample.in_family = rebased == to_lip(ctx, out.deltas[x]);
    }
    bool in_mn = membership(ctx, sample.vector) != StarMembership::neither;
    bool fixed_by_e = star(ctx, identity_vector(ctx), sample.vector) == sample.vector;
    sample.oracle_unit = in_mn && fixed_by_e && is_unit(f, Cone::lip1).unit;
    sample.consistent = sample.in_family == sample.oracle_unit;
    out.membership_samples.push_back(std::move(sample));
  }
  return out;
}

}  // namespace liptrop
