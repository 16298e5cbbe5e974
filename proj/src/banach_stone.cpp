#include "liptrop/banach_stone.hpp"

#include <algorithm>

namespace liptrop {

CompositionIso::CompositionIso(Context source, Context target, GroupIso t)
    : source_(std::move(source)), target_(std::move(target)), t_(std::move(t)) {
  if (!t_.source->same_table(source_.group()) || !t_.target->same_table(target_.group())) {
    throw Error(Errc::carrier_mismatch, "carrier map does not connect the contexts");
  }
  if (!is_isomorphism(*t_.source, *t_.target, t_.map)) {
    throw Error(Errc::carrier_mismatch, "carrier map is not a group isomorphism");
  }
  t_inverse_ = t_.inverse_map();
}

CompositionIso CompositionIso::checked(Context source, Context target, GroupIso t) {
  CompositionIso phi(std::move(source), std::move(target), std::move(t));
  if (auto violation = isometry_violation(phi.t_, phi.source_.metric(), phi.target_.metric())) {
    throw Error(Errc::not_isometric, "carrier map distorts distance at pair (" +
                                         std::to_string(violation->first) + "," +
                                         std::to_string(violation->second) + ")");
  }
  return phi;
}

CompositionIso CompositionIso::unchecked(Context source, Context target, GroupIso t) {
  return CompositionIso(std::move(source), std::move(target), std::move(t));
}

LipFn CompositionIso::apply(const LipFn& f) const {
  if (!f.context().compatible_with(source_)) {
    throw Error(Errc::context_mismatch, "function lives over a different source carrier");
  }
  std::vector<Rational> out(f.size());
  for (int y = 0; y < f.size(); ++y) out[y] = f[t_inverse_[y]];
  return LipFn(target_, std::move(out));
}

LipFn phi_apply(const CompositionIso& phi, const LipFn& f) { return phi.apply(f); }

std::vector<CompositionIso> enumerate_isometric_monoid_isos(const Context& x, const Context& y,
                                                            int order_cap) {
  std::vector<CompositionIso> out;
  for (GroupIso& t : enumerate_isomorphisms(x.group_ptr(), y.group_ptr(), order_cap)) {
    if (is_isometric_iso(t, x.metric(), y.metric())) {
      out.push_back(CompositionIso::checked(x, y, std::move(t)));
    }
  }
  return out;
}

std::vector<CompositionIso> is_m_group(const Context& x, int order_cap) {
  return enumerate_isometric_monoid_isos(x, x, order_cap);
}

const char* iso_reason_name(IsoDecision::Reason reason) {
  switch (reason) {
    case IsoDecision::Reason::witness_found: return "witness-found";
    case IsoDecision::Reason::order_mismatch: return "order-mismatch";
    case IsoDecision::Reason::element_order_mismatch: return "element-order-multiset-mismatch";
    case IsoDecision::Reason::abelian_mismatch: return "abelian-mismatch";
    case IsoDecision::Reason::exhausted_search: return "exhausted-search";
  }
  return "?";
}

IsoDecision decide_monoid_iso(const GroupPtr& g, const GroupPtr& h, int order_cap) {
  IsoDecision decision;
  if (g->order() != h->order()) {
    decision.reason = IsoDecision::Reason::order_mismatch;
    decision.certificate =
        "order " + std::to_string(g->order()) + " vs " + std::to_string(h->order());
    return decision;
  }
  std::vector<GroupIso> isos = enumerate_isomorphisms(g, h, order_cap);
  if (!isos.empty()) {
    decision.isomorphic = true;
    decision.reason = IsoDecision::Reason::witness_found;
    decision.witness = isos.front();
    decision.phi =
        CompositionIso::checked(Context::discrete(g), Context::discrete(h), isos.front());
    return decision;
  }
  auto og = g->element_order_multiset();
  auto oh = h->element_order_multiset();
  if (og != oh) {
    decision.reason = IsoDecision::Reason::element_order_mismatch;
    decision.certificate = format_multiset(og) + " vs " + format_multiset(oh);
  } else if (g->abelian() != h->abelian()) {
    decision.reason = IsoDecision::Reason::abelian_mismatch;
    decision.certificate = g->abelian() ? "first abelian, second not" : "second abelian, first not";
  } else {
    decision.reason = IsoDecision::Reason::exhausted_search;
    decision.certificate = "backtracking search exhausted without a homomorphic bijection";
  }
  return decision;
}

LipFn noniso_morphism_apply(const LipFn& f) {
  if (!classify(f).lip1plus) {
    throw Error(Errc::cone_mismatch, "f = " + f.str() + " is not in LIP1PLUS");
  }
  return f.plus(f.min_value());
}

Report verify_noniso_example(const Context& ctx, Sampler& sampler, int samples) {
  Report report;
  CheckResult& morphism = report.add("noniso-morphism");
  CheckResult& injective = report.add("noniso-injective");
  CheckResult& surjective = report.add("noniso-surjective");
  CheckResult& order = report.add("noniso-order-preserving");
  for (int i = 0; i < samples; ++i) {
    LipFn f = sampler.cone_fn(ctx, Cone::lip1plus);
    LipFn g = sampler.cone_fn(ctx, Cone::lip1plus);
    ++morphism.samples;
    if (noniso_morphism_apply(inf_conv(f, g)) !=
        inf_conv(noniso_morphism_apply(f), noniso_morphism_apply(g))) {
      fail_check(morphism, "f=" + f.str() + " g=" + g.str());
    }
    ++injective.samples;
    if (f != g && noniso_morphism_apply(f) == noniso_morphism_apply(g)) {
      fail_check(injective, "f=" + f.str() + " g=" + g.str());
    }
    // Surjectivity: h has the explicit preimage h - (min h)/2 inside the cone.
    LipFn h = sampler.cone_fn(ctx, Cone::lip1plus);
    LipFn preimage = h.plus(-(h.min_value() / Rational(2)));
    ++surjective.samples;
    if (!classify(preimage).lip1plus || noniso_morphism_apply(preimage) != h) {
      fail_check(surjective, "h=" + h.str());
    }
    // Order preservation on a constructed comparable pair.
    LipFn low = pointwise_min(f, g);
    ++order.samples;
    if (!noniso_morphism_apply(low).leq(noniso_morphism_apply(f))) {
      fail_check(order, "low=" + low.str() + " f=" + f.str());
    }
  }
  CheckResult& violation = report.add("noniso-isometry-violation");
  violation.samples = 1;
  LipFn one = constant_fn(ctx, 1);
  LipFn zero = constant_fn(ctx, 0);
  Rational mapped = rho(noniso_morphism_apply(one), noniso_morphism_apply(zero));
  Rational original = rho(one, zero);
  if (mapped == Rational(2, 3) && original == Rational(1, 2) && mapped != original) {
    violation.witness = "rho(Phi(1),Phi(0)) = " + mapped.str() + " vs rho(1,0) = " + original.str();
  } else {
    fail_check(violation, "expected 2/3 vs 1/2, got " + mapped.str() + " vs " + original.str());
  }
  return report;
}

Report verify_lemma_suite(const CompositionIso& phi, Sampler& sampler, int samples) {
  Report report;
  const Context& src = phi.source();
  const Context& dst = phi.target();
  const GroupIso& t = phi.carrier_map();
  int n = src.order();

  CheckResult& carrier = report.add("carrier-isometry");
  carrier.samples = static_cast<std::int64_t>(n) * n;
  if (auto witness = isometry_violation(t, src.metric(), dst.metric())) {
    fail_check(carrier, "pair (" + std::to_string(witness->first) + "," +
                            std::to_string(witness->second) + "): d'(Tx,Ty) = " +
                            dst.metric().dist(t(witness->first), t(witness->second)).str() +
                            " vs d(x,y) = " +
                            src.metric().dist(witness->first, witness->second).str());
  }

  CheckResult& deltas = report.add("delta-translation");
  for (int x = 0; x < n; ++x) {
    Rational r = sampler.rational(Rational(0), Rational(4));
    ++deltas.samples;
    if (phi.apply(delta(src, x).plus(r)) != delta(dst, t(x)).plus(r)) {
      fail_check(deltas, "x=" + std::to_string(x) + " r=" + r.str());
    }
  }

  CheckResult& constants = report.add("constants-fixed");
  CheckResult& infs = report.add("inf-preservation");
  CheckResult& translation = report.add("translation");
  CheckResult& order = report.add("order-equivalence");
  CheckResult& mins = report.add("min-commutation");
  CheckResult& iso_rho = report.add("isometry-rho");
  CheckResult& iso_dinf = report.add("isometry-dinf");
  CheckResult& iso_theta = report.add("isometry-theta");
  CheckResult& cones = report.add("cone-preservation");
  CheckResult& morphism = report.add("morphism");

  for (int i = 0; i < samples; ++i) {
    Rational r = sampler.rational(Rational(0), Rational(4));
    ++constants.samples;
    if (phi.apply(constant_fn(src, r)) != constant_fn(dst, r)) {
      fail_check(constants, "r=" + r.str());
    }

    LipFn f = sampler.cone_fn(src, Cone::lip1plus);
    LipFn g = sampler.cone_fn(src, Cone::lip1plus);
    ++infs.samples;
    if (phi.apply(f).min_value() != f.min_value()) fail_check(infs, "f=" + f.str());

    ++translation.samples;
    if (phi.apply(f.plus(r)) != phi.apply(f).plus(r)) {
      fail_check(translation, "f=" + f.str() + " r=" + r.str());
    }

    ++order.samples;
    LipFn low = pointwise_min(f, g);
    bool forward = phi.apply(low).leq(phi.apply(f)) && phi.apply(low).leq(phi.apply(g));
    bool equivalence = f.leq(g) == phi.apply(f).leq(phi.apply(g));
    if (!forward || !equivalence) fail_check(order, "f=" + f.str() + " g=" + g.str());

    ++mins.samples;
    LipFn h = sampler.cone_fn(src, Cone::lip1plus);
    LipFn family_min = pointwise_min(pointwise_min(f, g), h);
    if (phi.apply(family_min) !=
        pointwise_min(pointwise_min(phi.apply(f), phi.apply(g)), phi.apply(h))) {
      fail_check(mins, "f=" + f.str() + " g=" + g.str() + " h=" + h.str());
    }

    ++iso_rho.samples;
    if (rho(phi.apply(f), phi.apply(g)) != rho(f, g)) {
      fail_check(iso_rho, "f=" + f.str() + " g=" + g.str());
    }
    ++iso_dinf.samples;
    if (d_inf(phi.apply(f), phi.apply(g)) != d_inf(f, g)) {
      fail_check(iso_dinf, "f=" + f.str() + " g=" + g.str());
    }
    ++iso_theta.samples;
    LipFn fl = sampler.cone_fn(src, Cone::lip1);
    LipFn gl = sampler.cone_fn(src, Cone::lip1);
    if (theta_inf(phi.apply(fl), phi.apply(gl)) != theta_inf(fl, gl)) {
      fail_check(iso_theta, "f=" + fl.str() + " g=" + gl.str());
    }

    ++cones.samples;
    ConeSet before = classify(f);
    ConeSet after = classify(phi.apply(f));
    ConeSet before_l = classify(fl);
    ConeSet after_l = classify(phi.apply(fl));
    if (before.lip1 != after.lip1 || before.lip1plus != after.lip1plus ||
        before.lip10 != after.lip10 || before_l.lip1 != after_l.lip1) {
      fail_check(cones, "f=" + f.str());
    }

    ++morphism.samples;
    if (phi.apply(inf_conv(f, g)) != inf_conv(phi.apply(f), phi.apply(g))) {
      fail_check(morphism, "f=" + f.str() + " g=" + g.str());
    }
  }
  return report;
}

}  // namespace liptrop
