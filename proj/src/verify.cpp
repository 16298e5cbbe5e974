#include "liptrop/verify.hpp"

#include <algorithm>

namespace liptrop {

namespace {

bool is_discrete(const InvariantMetric& metric) {
  int n = metric.group().order();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && metric.dist(i, j) != Rational(1)) return false;
    }
  }
  return true;
}

std::string pair_witness(const LipFn& f, const LipFn& g) {
  return "f=" + f.str() + " g=" + g.str();
}

bool is_some_delta(const LipFn& f) {
  const Context& ctx = f.context();
  for (int x = 0; x < ctx.order(); ++x) {
    if (f == delta(ctx, x)) return true;
  }
  return false;
}

}  // namespace

Report monoid_suite(const Context& ctx, const RunConfig& config) {
  Report report;
  Sampler sampler(config.seed);
  const FiniteGroup& group = ctx.group();
  int n = ctx.order();
  LipFn de = delta_e(ctx);

  for (Cone cone : {Cone::lip, Cone::lip1, Cone::lip1plus, Cone::lip10}) {
    CheckResult& assoc = report.add(std::string("assoc-") + cone_name(cone));
    CheckResult* identity = nullptr;
    CheckResult* closure = nullptr;
    if (cone != Cone::lip) {
      identity = &report.add(std::string("identity-") + cone_name(cone));
      closure = &report.add(std::string("closure-") + cone_name(cone));
    }
    for (int i = 0; i < config.samples; ++i) {
      LipFn f = sampler.cone_fn(ctx, cone);
      LipFn g = sampler.cone_fn(ctx, cone);
      LipFn h = sampler.cone_fn(ctx, cone);
      ++assoc.samples;
      if (inf_conv(inf_conv(f, g), h) != inf_conv(f, inf_conv(g, h))) {
        fail_check(assoc, pair_witness(f, g) + " h=" + h.str());
      }
      if (identity) {
        ++identity->samples;
        if (inf_conv(de, f) != f || inf_conv(f, de) != f) fail_check(*identity, "f=" + f.str());
        ++closure->samples;
        if (!classify(inf_conv(f, g)).contains(cone)) fail_check(*closure, pair_witness(f, g));
      }
    }
  }

  CheckResult& commutativity = report.add("commutativity-iff-abelian");
  if (group.abelian()) {
    for (int i = 0; i < config.samples; ++i) {
      LipFn f = sampler.cone_fn(ctx, Cone::lip);
      LipFn g = sampler.cone_fn(ctx, Cone::lip);
      ++commutativity.samples;
      if (inf_conv(f, g) != inf_conv(g, f)) fail_check(commutativity, pair_witness(f, g));
    }
  } else {
    // A nonabelian group must exhibit a noncommuting pair of deltas.
    bool found = false;
    for (int x = 0; x < n && !found; ++x) {
      for (int y = 0; y < n && !found; ++y) {
        if (group.op(x, y) != group.op(y, x)) {
          LipFn dx = delta(ctx, x);
          LipFn dy = delta(ctx, y);
          ++commutativity.samples;
          if (inf_conv(dx, dy) != inf_conv(dy, dx)) {
            found = true;
            commutativity.witness = "delta_" + std::to_string(x) + " vs delta_" +
                                    std::to_string(y) + " do not commute";
          }
        }
      }
    }
    if (!found) fail_check(commutativity, "no noncommuting witness pair found");
  }

  CheckResult& delta_law = report.add("delta-group-law");
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ++delta_law.samples;
      if (inf_conv(delta(ctx, x), delta(ctx, y)) != delta(ctx, group.op(x, y))) {
        fail_check(delta_law, "x=" + std::to_string(x) + " y=" + std::to_string(y));
      }
    }
  }

  CheckResult& inf_add = report.add("inf-additivity");
  CheckResult& rho_identity = report.add("rho-identity");
  CheckResult& theta_decomp = report.add("theta-decomposition");
  CheckResult& residuation = report.add("residuation-super-solution");
  for (int i = 0; i < config.samples; ++i) {
    LipFn f = sampler.cone_fn(ctx, Cone::lip);
    LipFn g = sampler.cone_fn(ctx, Cone::lip);
    ++inf_add.samples;
    if (inf_conv(f, g).min_value() != f.min_value() + g.min_value()) {
      fail_check(inf_add, pair_witness(f, g));
    }
    ++rho_identity.samples;
    Rational r = rho(f, g);
    Rational d = d_inf(f, g);
    if (r * (Rational(1) + d) != d || !(r < Rational(1))) fail_check(rho_identity, pair_witness(f, g));
    ++theta_decomp.samples;
    if (theta_inf(f, g) !=
        d_inf(f.plus(-f.min_value()), g.plus(-g.min_value())) + abs(f.min_value() - g.min_value())) {
      fail_check(theta_decomp, pair_witness(f, g));
    }
    ++residuation.samples;
    if (!de.leq(inf_conv(f, residual_inverse(f)))) fail_check(residuation, "f=" + f.str());
  }

  CheckResult& cap_identity = report.add("cap-identity");
  CheckResult& monotonic = report.add("monotonicity");
  CheckResult& mono_converse = report.add("monotonicity-cap-converse");
  CheckResult& min_dist = report.add("min-distributivity");
  for (int i = 0; i < config.samples; ++i) {
    LipFn f = sampler.cone_fn(ctx, Cone::lip1plus);
    int x = sampler.index(n);
    Rational a = f[x] + sampler.rational(Rational(0), Rational(3));
    ++cap_identity.samples;
    if (inf_conv(cap_with(ctx, a), f)[x] != f[x]) {
      fail_check(cap_identity, "f=" + f.str() + " x=" + std::to_string(x) + " a=" + a.str());
    }

    LipFn g = sampler.cone_fn(ctx, Cone::lip1plus);
    LipFn h = sampler.cone_fn(ctx, Cone::lip1plus);
    LipFn low = pointwise_min(f, g);
    ++monotonic.samples;
    if (!inf_conv(h, low).leq(inf_conv(h, f))) {
      fail_check(monotonic, "low=" + low.str() + " f=" + f.str() + " h=" + h.str());
    }
    // Converse route: the cap family recovers pointwise order from ⊕-order.
    ++mono_converse.samples;
    for (int z = 0; z < n; ++z) {
      LipFn cap = cap_with(ctx, max(f[z], g[z]));
      bool conv_le = !(inf_conv(cap, g)[z] < inf_conv(cap, f)[z]);
      if (conv_le != !(g[z] < f[z])) {
        fail_check(mono_converse, pair_witness(f, g) + " z=" + std::to_string(z));
        break;
      }
    }

    ++min_dist.samples;
    LipFn family_min = pointwise_min(pointwise_min(f, g), h);
    LipFn k = sampler.cone_fn(ctx, Cone::lip);
    if (inf_conv(family_min, k) !=
            pointwise_min(pointwise_min(inf_conv(f, k), inf_conv(g, k)), inf_conv(h, k)) ||
        inf_conv(k, family_min) !=
            pointwise_min(pointwise_min(inf_conv(k, f), inf_conv(k, g)), inf_conv(k, h))) {
      fail_check(min_dist, pair_witness(f, g) + " h=" + h.str() + " k=" + k.str());
    }
  }

  CheckResult& regularize = report.add("regularize-fixed-point");
  for (int i = 0; i < config.samples; ++i) {
    LipFn f = sampler.coin() ? sampler.cone_fn(ctx, Cone::lip)
                             : sampler.cone_fn(ctx, i % 2 == 0 ? Cone::lip1 : Cone::lip1plus);
    LipFn reg = lip_regularize(f);
    bool in_lip1 = classify(f).lip1;
    ++regularize.samples;
    if ((reg == f) != in_lip1 || !classify(reg).lip1 || !reg.leq(f)) {
      fail_check(regularize, "f=" + f.str());
    }
  }

  if (is_discrete(ctx.metric())) {
    CheckResult& osc_rule = report.add("osc-rule-discrete");
    for (int i = 0; i < config.samples; ++i) {
      LipFn f = sampler.cone_fn(ctx, Cone::lip);
      ++osc_rule.samples;
      if (classify(f).lip1 != !(Rational(1) < osc(f))) fail_check(osc_rule, "f=" + f.str());
    }
  }

  CheckResult& delta_compat = report.add("delta-compatibility");
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      ++delta_compat.samples;
      if (ctx.metric().dist(z, x) !=
          ctx.metric().dist(group.op(z, group.inverse(x)), group.identity())) {
        fail_check(delta_compat, "z=" + std::to_string(z) + " x=" + std::to_string(x));
      }
    }
  }

  if (group.identity() == 0 && is_discrete(ctx.metric())) {
    CheckResult& bridge = report.add("star-bridge");
    StarContext star_ctx(ctx.group_ptr());
    for (int i = 0; i < config.samples; ++i) {
      RnVector x{sampler.vector(n, Rational(-5), Rational(5))};
      RnVector y{sampler.vector(n, Rational(-5), Rational(5))};
      ++bridge.samples;
      if (star(star_ctx, x, y).values !=
          inf_conv(LipFn(ctx, x.values), LipFn(ctx, y.values)).values()) {
        fail_check(bridge, "x=" + x.str() + " y=" + y.str());
      }
    }
  }

  return report;
}

Report units_suite(const Context& ctx, const RunConfig& config) {
  Report report;
  Sampler sampler(config.seed + 1);
  const FiniteGroup& group = ctx.group();
  int n = ctx.order();

  for (Cone cone : {Cone::lip1plus, Cone::lip10}) {
    CheckResult& set = report.add(std::string("units-set-") + cone_name(cone));
    UnitsDescription description = units_of(ctx, cone, config.seed);
    set.samples = static_cast<std::int64_t>(description.deltas.size());
    if (static_cast<int>(description.deltas.size()) != n || description.parametric) {
      fail_check(set, "expected the " + std::to_string(n) + " delta functions");
    }
    for (int x = 0; x < n; ++x) {
      if (description.deltas[x] != delta(ctx, x)) {
        fail_check(set, "entry " + std::to_string(x) + " is not delta_" + std::to_string(x));
      }
      UnitCheck check = is_unit(description.deltas[x], cone);
      if (!check.unit || *check.inverse != delta(ctx, group.inverse(x))) {
        fail_check(set, "delta_" + std::to_string(x) + " lost its inverse");
      }
    }
  }

  CheckResult& group_iso = report.add("units-group-isomorphic-to-G");
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ++group_iso.samples;
      if (inf_conv(delta(ctx, x), delta(ctx, y)) != delta(ctx, group.op(x, y))) {
        fail_check(group_iso, "x=" + std::to_string(x) + " y=" + std::to_string(y));
      }
    }
    for (int y = x + 1; y < n; ++y) {
      if (delta(ctx, x) == delta(ctx, y)) {
        fail_check(group_iso, "delta map is not injective at " + std::to_string(x));
      }
    }
  }

  CheckResult& family = report.add("units-lip1-family");
  CheckResult& rejects = report.add("units-lip1-nonmembers-rejected");
  CheckResult& agreement = report.add("units-lip1plus-oracle-agreement");
  for (int i = 0; i < config.samples; ++i) {
    int x = sampler.index(n);
    Rational r = sampler.rational(Rational(-6), Rational(6));
    LipFn candidate = delta(ctx, x).plus(r);
    ++family.samples;
    UnitCheck check = is_unit(candidate, Cone::lip1);
    if (!check.unit || *check.inverse != delta(ctx, group.inverse(x)).plus(-r)) {
      fail_check(family, "x=" + std::to_string(x) + " r=" + r.str());
    }

    LipFn f = sampler.cone_fn(ctx, Cone::lip1);
    LipFn rebased = f.plus(-f.min_value());
    if (!is_some_delta(rebased)) {
      ++rejects.samples;
      if (is_unit(f, Cone::lip1).unit) fail_check(rejects, "f=" + f.str());
    }

    LipFn p = sampler.coin() ? sampler.cone_fn(ctx, Cone::lip1plus) : delta(ctx, sampler.index(n));
    ++agreement.samples;
    if (is_unit(p, Cone::lip1plus).unit != is_some_delta(p)) fail_check(agreement, "f=" + p.str());
  }

  if (n >= 2) {
    CheckResult& constant = report.add("constant-is-not-a-unit");
    for (const Rational& c : {Rational(0), Rational(1), Rational(5, 2)}) {
      ++constant.samples;
      if (is_unit(constant_fn(ctx, c), Cone::lip1plus).unit) {
        fail_check(constant, "constant " + c.str());
      }
    }
  }

  CheckResult& tau_round = report.add("tau-roundtrip");
  CheckResult& tau_morphism = report.add("tau-morphism");
  CheckResult& tau_isometry = report.add("tau-isometry");
  for (int i = 0; i < config.samples; ++i) {
    LipFn f = sampler.cone_fn(ctx, Cone::lip1);
    LipFn g = sampler.cone_fn(ctx, Cone::lip1);
    TauPair pf = tau(f);
    TauPair pg = tau(g);
    ++tau_round.samples;
    if (tau_inv(pf) != f || !classify(pf.base).lip10 || tau(tau_inv(pg)) != pg) {
      fail_check(tau_round, "f=" + f.str());
    }
    ++tau_morphism.samples;
    if (tau(inf_conv(f, g)) != tau_oplus(pf, pg)) fail_check(tau_morphism, pair_witness(f, g));
    ++tau_isometry.samples;
    if (theta_inf(f, g) != d_inf(pf.base, pg.base) + abs(pf.offset - pg.offset)) {
      fail_check(tau_isometry, pair_witness(f, g));
    }
  }

  if (group.identity() == 0 && is_discrete(ctx.metric())) {
    CheckResult& maximal = report.add("maximal-subgroup-at-e");
    StarContext star_ctx(ctx.group_ptr());
    MaximalSubgroupDescription description =
        maximal_subgroup_at_e(star_ctx, config.seed, std::max(16, config.samples / 8));
    maximal.samples = static_cast<std::int64_t>(description.law_witnesses.size() +
                                                description.membership_samples.size());
    for (const auto& w : description.law_witnesses) {
      if (!w.law_holds) {
        fail_check(maximal, "law failed at x=" + std::to_string(w.x) + " r=" + w.r.str() +
                                " y=" + std::to_string(w.y) + " s=" + w.s.str());
      }
    }
    for (const auto& sample : description.membership_samples) {
      if (!sample.consistent) fail_check(maximal, "membership mismatch at " + sample.vector.str());
    }
  }

  return report;
}

Report banachstone_suite(const Context& x, const Context& y, const RunConfig& config) {
  Report report;
  Sampler sampler(config.seed + 2);
  bool self = x.compatible_with(y);

  if (self) {
    std::vector<CompositionIso> ism = is_m_group(x, config.order_cap);
    std::vector<std::vector<int>> maps;
    maps.reserve(ism.size());
    for (const CompositionIso& phi : ism) maps.push_back(phi.carrier_map().map);

    CheckResult& structure = report.add("ism-group-structure");
    structure.samples = static_cast<std::int64_t>(ism.size());
    auto contains = [&](const std::vector<int>& map) {
      return std::find(maps.begin(), maps.end(), map) != maps.end();
    };
    if (!contains(identity_iso(x.group_ptr()).map)) fail_check(structure, "identity map missing");
    for (const CompositionIso& a : ism) {
      if (!contains(inverse(a.carrier_map()).map)) {
        fail_check(structure, "inverse missing for a member");
      }
      for (const CompositionIso& b : ism) {
        if (!contains(compose(a.carrier_map(), b.carrier_map()).map)) {
          fail_check(structure, "composition escapes the set");
        }
      }
    }

    CheckResult& cardinality = report.add(is_discrete(x.metric()) ? "ism-equals-aut-discrete"
                                                                  : "ism-subgroup-of-aut");
    std::vector<GroupIso> autos = enumerate_automorphisms(x.group_ptr(), config.order_cap);
    cardinality.samples = static_cast<std::int64_t>(autos.size());
    if (is_discrete(x.metric())) {
      if (ism.size() != autos.size()) {
        fail_check(cardinality, "|Is_m| = " + std::to_string(ism.size()) + " vs |Aut| = " +
                                    std::to_string(autos.size()));
      }
    } else {
      std::size_t isometric = 0;
      for (const GroupIso& t : autos) {
        if (is_isometric_iso(t, x.metric(), x.metric())) ++isometric;
      }
      if (ism.size() != isometric || ism.size() > autos.size()) {
        fail_check(cardinality, "|Is_m| = " + std::to_string(ism.size()) +
                                    " vs isometric autos = " + std::to_string(isometric));
      }
    }
  }

  CheckResult& consistency = report.add("enumeration-consistency");
  std::vector<CompositionIso> enumerated = enumerate_isometric_monoid_isos(x, y, config.order_cap);
  std::vector<GroupIso> isometric_isos;
  for (GroupIso& t : enumerate_isomorphisms(x.group_ptr(), y.group_ptr(), config.order_cap)) {
    if (is_isometric_iso(t, x.metric(), y.metric())) isometric_isos.push_back(std::move(t));
  }
  consistency.samples = static_cast<std::int64_t>(enumerated.size());
  if (enumerated.size() != isometric_isos.size()) {
    fail_check(consistency, "operator and group enumerations differ in size");
  } else {
    for (std::size_t i = 0; i < enumerated.size(); ++i) {
      if (enumerated[i].carrier_map().map != isometric_isos[i].map) {
        fail_check(consistency, "operator " + std::to_string(i) + " carries a different map");
      }
    }
  }

  CheckResult& decision = report.add("decision-consistency");
  decision.samples = 1;
  IsoDecision verdict = decide_monoid_iso(x.group_ptr(), y.group_ptr(), config.order_cap);
  bool group_isos_exist =
      !enumerate_isomorphisms(x.group_ptr(), y.group_ptr(), config.order_cap).empty();
  if (verdict.isomorphic != group_isos_exist) {
    fail_check(decision, "verdict disagrees with the group enumeration");
  } else if (verdict.isomorphic) {
    if (!verdict.witness ||
        !is_isomorphism(*x.group_ptr(), *y.group_ptr(), verdict.witness->map) || !verdict.phi) {
      fail_check(decision, "positive verdict lacks a valid witness");
    } else {
      decision.witness = "witness map found; reason " + std::string(iso_reason_name(verdict.reason));
    }
  } else {
    if (verdict.certificate.empty()) {
      fail_check(decision, "negative verdict lacks a certificate");
    } else {
      decision.witness = std::string(iso_reason_name(verdict.reason)) + ": " + verdict.certificate;
    }
  }

  report.merge(verify_noniso_example(x, sampler, config.samples));
  if (!self) report.merge(verify_noniso_example(y, sampler, config.samples), "y:");
  return report;
}

Report lemmas_suite(const Context& x, const Context& y, const RunConfig& config) {
  Report report;
  Sampler sampler(config.seed + 3);
  std::vector<CompositionIso> isos = enumerate_isometric_monoid_isos(x, y, config.order_cap);
  if (isos.empty()) {
    CheckResult& none = report.add("no-isometric-monoid-isomorphisms");
    none.samples = 0;
    none.witness = "enumeration is empty";
    return report;
  }
  for (std::size_t i = 0; i < isos.size(); ++i) {
    report.merge(verify_lemma_suite(isos[i], sampler, config.samples),
                 "phi" + std::to_string(i) + ":");
  }
  return report;
}

Report all_suite(const Context& x, const std::optional<Context>& y, const RunConfig& config) {
  Report report;
  report.merge(monoid_suite(x, config));
  report.merge(units_suite(x, config));
  if (y) {
    report.merge(monoid_suite(*y, config), "y:");
    report.merge(units_suite(*y, config), "y:");
  }
  report.merge(banachstone_suite(x, y ? *y : x, config));
  report.merge(lemmas_suite(x, y ? *y : x, config));
  return report;
}

}  // namespace liptrop
