#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "liptrop/banach_stone.hpp"
#include "liptrop/verify.hpp"
#include "oracles.hpp"

using namespace liptrop;

namespace {

LipFn fn(const Context& ctx, std::initializer_list<Rational> values) {
  return LipFn(ctx, std::vector<Rational>(values));
}

const CheckResult& check_named(const Report& report, const std::string& name) {
  for (const CheckResult& c : report.checks) {
    if (c.check == name) return c;
  }
  throw std::logic_error("missing check " + name);
}

}  // namespace

TEST_CASE("composition operators permute values along T inverse") {
  Context z3 = Context::discrete(cyclic_group(3));
  CompositionIso identity = CompositionIso::checked(z3, z3, identity_iso(z3.group_ptr()));
  LipFn f = fn(z3, {Rational(1, 4), Rational(1, 2), Rational(3, 4)});
  CHECK(phi_apply(identity, f) == f);

  // Inversion on Z3 swaps indices 1 and 2.
  GroupIso inversion{z3.group_ptr(), z3.group_ptr(), {0, 2, 1}};
  CompositionIso phi = CompositionIso::checked(z3, z3, inversion);
  CHECK(phi_apply(phi, f).values() ==
        std::vector<Rational>{Rational(1, 4), Rational(3, 4), Rational(1, 2)});

  for (int x = 0; x < 3; ++x) CHECK(phi_apply(phi, delta(z3, x)) == delta(z3, inversion(x)));
}

TEST_CASE("operator construction rejects broken carrier maps") {
  Context z4 = Context::discrete(cyclic_group(4));
  GroupPtr z4g = cyclic_group(4);
  LengthWeights w;
  w.weight[1] = Rational(1);
  w.weight[3] = Rational(1);
  Context word(word_metric(z4g, w));

  CHECK_THROWS_AS(CompositionIso::checked(word, z4, identity_iso(word.group_ptr())), Error);
  CHECK_NOTHROW(CompositionIso::unchecked(word, z4, identity_iso(word.group_ptr())));

  GroupIso not_a_morphism{z4.group_ptr(), z4.group_ptr(), {0, 2, 1, 3}};
  CHECK_THROWS_AS(CompositionIso::unchecked(z4, z4, not_a_morphism), Error);
}

TEST_CASE("enumeration of isometric monoid isomorphisms") {
  Context trivial = Context::discrete(validate_group({{0}}));
  CHECK(enumerate_isometric_monoid_isos(trivial, trivial).size() == 1);

  Context z4 = Context::discrete(cyclic_group(4));
  Context klein = Context::discrete(direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(enumerate_isometric_monoid_isos(z4, klein).empty());
  CHECK(enumerate_isometric_monoid_isos(z4, z4).size() == 2);
}

TEST_CASE("Is_m equals Aut for discrete metrics") {
  CHECK(is_m_group(Context::discrete(symmetric_group(3))).size() == 6);
  CHECK(is_m_group(Context::discrete(quaternion_group())).size() == 24);
  CHECK(is_m_group(Context::discrete(cyclic_group(6))).size() == 2);
}

TEST_CASE("Is_m can be a proper subgroup of Aut under a weighted metric") {
  // Weighting the three involutions of the Klein group differently kills
  // every nontrivial automorphism.
  GroupPtr klein = direct_product(cyclic_group(2), cyclic_group(2));
  LengthWeights w;
  w.weight[1] = Rational(1);
  w.weight[2] = Rational(2);
  w.weight[3] = Rational(3);
  Context ctx(word_metric(klein, w));
  CHECK(enumerate_automorphisms(klein).size() == 6);
  CHECK(is_m_group(ctx).size() == 1);

  // On Z4 the word metric keeps both automorphisms isometric.
  GroupPtr z4 = cyclic_group(4);
  LengthWeights wz;
  wz.weight[1] = Rational(1);
  wz.weight[3] = Rational(1);
  CHECK(is_m_group(Context(word_metric(z4, wz))).size() == 2);
}

TEST_CASE("Is_m is closed under composition and inverses") {
  Context ctx = Context::discrete(quaternion_group());
  std::vector<CompositionIso> ism = is_m_group(ctx);
  std::set<std::vector<int>> maps;
  for (const CompositionIso& phi : ism) maps.insert(phi.carrier_map().map);
  CHECK(maps.count(identity_iso(ctx.group_ptr()).map) == 1);
  for (const CompositionIso& a : ism) {
    CHECK(maps.count(inverse(a.carrier_map()).map) == 1);
    for (const CompositionIso& b : ism) {
      CHECK(maps.count(compose(a.carrier_map(), b.carrier_map()).map) == 1);
    }
  }
}

TEST_CASE("decide_monoid_iso") {
  GroupPtr z4 = cyclic_group(4);
  GroupPtr klein = direct_product(cyclic_group(2), cyclic_group(2));
  GroupPtr s3 = symmetric_group(3);
  GroupPtr z6 = cyclic_group(6);

  IsoDecision same = decide_monoid_iso(z4, z4);
  CHECK(same.isomorphic);
  REQUIRE(same.witness.has_value());
  CHECK(same.witness->map == std::vector<int>{0, 1, 2, 3});
  CHECK(same.phi.has_value());

  IsoDecision z4_vs_klein = decide_monoid_iso(z4, klein);
  CHECK_FALSE(z4_vs_klein.isomorphic);
  CHECK(z4_vs_klein.reason == IsoDecision::Reason::element_order_mismatch);
  CHECK(z4_vs_klein.certificate == "{1,2,4,4} vs {1,2,2,2}");

  IsoDecision s3_vs_z6 = decide_monoid_iso(s3, z6);
  CHECK_FALSE(s3_vs_z6.isomorphic);
  CHECK(s3_vs_z6.reason == IsoDecision::Reason::element_order_mismatch);
  CHECK(s3_vs_z6.certificate == "{1,2,2,2,3,3} vs {1,2,3,3,6,6}");

  IsoDecision different_orders = decide_monoid_iso(z4, z6);
  CHECK_FALSE(different_orders.isomorphic);
  CHECK(different_orders.reason == IsoDecision::Reason::order_mismatch);

  IsoDecision relabeled = decide_monoid_iso(s3, relabeled_copy(s3, {2, 4, 0, 5, 1, 3}));
  CHECK(relabeled.isomorphic);
  REQUIRE(relabeled.witness.has_value());
  CHECK(is_isomorphism(*s3, *relabeled.witness->target, relabeled.witness->map));

  // The positive witness count agrees with the all-bijections oracle.
  CHECK(oracles::all_bijection_isomorphisms(*z4, *klein).empty());
  CHECK_FALSE(oracles::all_bijection_isomorphisms(*s3, *dihedral_group(3)).empty());
}

TEST_CASE("non-isometric morphism f + inf f") {
  Context z2 = Context::discrete(cyclic_group(2));
  LipFn based = fn(z2, {0, Rational(2, 3)});
  CHECK(noniso_morphism_apply(based) == based);  // min 0 fixes the function

  LipFn one = constant_fn(z2, 1);
  LipFn zero = constant_fn(z2, 0);
  CHECK(noniso_morphism_apply(one) == constant_fn(z2, 2));
  CHECK(noniso_morphism_apply(zero) == zero);
  CHECK(rho(constant_fn(z2, 2), zero) == Rational(2, 3));
  CHECK(rho(one, zero) == Rational(1, 2));

  // The worked morphism sample over Z2.
  LipFn f = fn(z2, {Rational(1, 2), Rational(3, 10)});
  LipFn g = fn(z2, {Rational(1, 5), Rational(2, 5)});
  LipFn conv = inf_conv(f, g);
  CHECK(conv.values() == std::vector<Rational>{Rational(7, 10), Rational(1, 2)});
  CHECK(noniso_morphism_apply(conv).values() == std::vector<Rational>{Rational(6, 5), 1});
  CHECK(noniso_morphism_apply(f).values() == std::vector<Rational>{Rational(4, 5), Rational(3, 5)});
  CHECK(noniso_morphism_apply(g).values() == std::vector<Rational>{Rational(2, 5), Rational(3, 5)});
  CHECK(inf_conv(noniso_morphism_apply(f), noniso_morphism_apply(g)) == noniso_morphism_apply(conv));

  CHECK_THROWS_AS(noniso_morphism_apply(fn(z2, {-1, 0})), Error);

  Sampler sampler(61);
  Report report = verify_noniso_example(z2, sampler, 300);
  CHECK(report.all_pass());
  CHECK(check_named(report, "noniso-isometry-violation").witness ==
        "rho(Phi(1),Phi(0)) = 2/3 vs rho(1,0) = 1/2");

  Report s3_report = verify_noniso_example(Context::discrete(symmetric_group(3)), sampler, 300);
  CHECK(s3_report.all_pass());
}

TEST_CASE("lemma suite passes for genuine operators") {
  Sampler sampler(67);
  Context z3 = Context::discrete(cyclic_group(3));
  CompositionIso identity = CompositionIso::checked(z3, z3, identity_iso(z3.group_ptr()));
  CHECK(verify_lemma_suite(identity, sampler, 200).all_pass());

  GroupIso inversion{z3.group_ptr(), z3.group_ptr(), {0, 2, 1}};
  CompositionIso phi = CompositionIso::checked(z3, z3, inversion);
  Report report = verify_lemma_suite(phi, sampler, 200);
  CHECK(report.all_pass());

  // Min over the delta family commutes with the operator.
  LipFn family_min = pointwise_min(pointwise_min(delta(z3, 0), delta(z3, 1)), delta(z3, 2));
  LipFn mapped_min =
      pointwise_min(pointwise_min(phi_apply(phi, delta(z3, 0)), phi_apply(phi, delta(z3, 1))),
                    phi_apply(phi, delta(z3, 2)));
  CHECK(phi_apply(phi, family_min) == mapped_min);

  for (const CompositionIso& member : is_m_group(Context::discrete(symmetric_group(3)))) {
    CHECK(verify_lemma_suite(member, sampler, 60).all_pass());
  }
}

TEST_CASE("lemma suite flags a corrupted operator with a witness") {
  GroupPtr z4 = cyclic_group(4);
  LengthWeights w;
  w.weight[1] = Rational(1);
  w.weight[3] = Rational(1);
  Context word(word_metric(z4, w));
  Context disc = Context::discrete(z4);

  CompositionIso corrupted = CompositionIso::unchecked(word, disc, identity_iso(z4));
  Sampler sampler(71);
  Report report = verify_lemma_suite(corrupted, sampler, 100);
  CHECK_FALSE(report.all_pass());
  const CheckResult& carrier = check_named(report, "carrier-isometry");
  CHECK_FALSE(carrier.pass);
  CHECK(carrier.witness.find("pair (0,2)") != std::string::npos);
  CHECK_FALSE(check_named(report, "delta-translation").pass);
  CHECK_FALSE(check_named(report, "cone-preservation").pass);
  // The permutation-invariant checks still hold; the corruption is metric.
  CHECK(check_named(report, "morphism").pass);
  CHECK(check_named(report, "isometry-rho").pass);
}

TEST_CASE("theorem consistency between the two enumerations") {
  RunConfig config;
  config.samples = 50;
  Context z4 = Context::discrete(cyclic_group(4));
  Context klein = Context::discrete(direct_product(cyclic_group(2), cyclic_group(2)));
  Report report = banachstone_suite(z4, klein, config);
  CHECK(report.all_pass());
  CHECK(check_named(report, "enumeration-consistency").samples == 0);
  const CheckResult& decision = check_named(report, "decision-consistency");
  CHECK(decision.pass);
  CHECK(decision.witness.find("element-order-multiset-mismatch") != std::string::npos);

  Report self = banachstone_suite(z4, z4, config);
  CHECK(self.all_pass());
}
