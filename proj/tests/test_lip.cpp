#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "liptrop/lip.hpp"
#include "liptrop/sampler.hpp"
#include "oracles.hpp"

using namespace liptrop;

namespace {

Context discrete_ctx(int n) { return Context::discrete(cyclic_group(n)); }

LipFn fn(const Context& ctx, std::initializer_list<Rational> values) {
  return LipFn(ctx, std::vector<Rational>(values));
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

}  // namespace

TEST_CASE("classify against the cone chain") {
  Context z3 = discrete_ctx(3);
  ConeSet tags = classify(delta_e(z3));
  CHECK(tags.lip1);
  CHECK(tags.lip1plus);
  CHECK(tags.lip10);

  tags = classify(constant_fn(z3, 5));
  CHECK(tags.lip1);
  CHECK(tags.lip1plus);
  CHECK_FALSE(tags.lip10);

  Context z2 = discrete_ctx(2);
  tags = classify(fn(z2, {0, 2}));
  CHECK_FALSE(tags.lip1);
  CHECK_FALSE(tags.lip1plus);
  CHECK_FALSE(tags.lip10);
  CHECK(tags.contains(Cone::lip));
}

TEST_CASE("delta functions") {
  Context z3 = discrete_ctx(3);
  CHECK(delta(z3, 0).values() == std::vector<Rational>{0, 1, 1});
  CHECK(delta(z3, 1).values() == std::vector<Rational>{1, 0, 1});

  GroupPtr z4 = cyclic_group(4);
  LengthWeights w;
  w.weight[1] = Rational(1);
  w.weight[3] = Rational(1);
  Context word(word_metric(z4, w));
  CHECK(delta(word, 1).values() == std::vector<Rational>{1, 0, 1, 2});
  CHECK(classify(delta(word, 1)).lip10);
}

TEST_CASE("inf-convolution against the definitional oracle") {
  Context z2 = discrete_ctx(2);
  LipFn g = fn(z2, {Rational(3, 10), Rational(7, 10)});
  CHECK(inf_conv(delta_e(z2), g) == g);

  LipFn a = fn(z2, {Rational(1, 2), Rational(3, 10)});
  LipFn b = fn(z2, {Rational(1, 5), Rational(2, 5)});
  LipFn expected = fn(z2, {Rational(7, 10), Rational(1, 2)});
  CHECK(inf_conv(a, b) == expected);
  CHECK(inf_conv(a, b).values() ==
        oracles::definitional_inf_conv(z2.group(), a.values(), b.values()));

  // delta_a ⊕ delta_a = delta_{a·a} = delta_e on Z2.
  CHECK(inf_conv(delta(z2, 1), delta(z2, 1)) == delta_e(z2));

  Sampler sampler(3);
  for (const Context& ctx : {discrete_ctx(3), discrete_ctx(4), Context::discrete(symmetric_group(3))}) {
    for (int i = 0; i < 50; ++i) {
      LipFn f = sampler.raw_fn(ctx, Rational(-5), Rational(5));
      LipFn h = sampler.raw_fn(ctx, Rational(-5), Rational(5));
      CHECK(inf_conv(f, h).values() ==
            oracles::definitional_inf_conv(ctx.group(), f.values(), h.values()));
    }
  }
}

TEST_CASE("context mismatch is rejected") {
  Context z2 = discrete_ctx(2);
  Context z3 = discrete_ctx(3);
  CHECK(code_of([&] { inf_conv(delta_e(z2), delta_e(z3)); }) == Errc::context_mismatch);
  GroupPtr z4 = cyclic_group(4);
  LengthWeights w;
  w.weight[1] = Rational(1);
  w.weight[3] = Rational(1);
  Context word(word_metric(z4, w));
  Context disc = Context::discrete(z4);
  CHECK(code_of([&] { d_inf(delta_e(word), delta_e(disc)); }) == Errc::context_mismatch);
  // Structural equality counts as the same context even for distinct objects.
  Context disc2 = Context::discrete(cyclic_group(4));
  CHECK(inf_conv(delta_e(disc), delta_e(disc2)) == delta_e(disc));
}

TEST_CASE("metrics d_inf, rho, theta_inf") {
  Context z2 = discrete_ctx(2);
  LipFn f = fn(z2, {Rational(3, 2), Rational(2)});
  CHECK(d_inf(f, f) == Rational(0));
  CHECK(rho(f, f) == Rational(0));
  CHECK(theta_inf(f, f) == Rational(0));

  LipFn one = constant_fn(z2, 1);
  LipFn zero = constant_fn(z2, 0);
  CHECK(d_inf(one, zero) == Rational(1));
  CHECK(rho(one, zero) == Rational(1, 2));

  LipFn g = fn(z2, {Rational(0), Rational(1, 2)});
  CHECK(theta_inf(f, g) == Rational(3, 2));

  Sampler sampler(5);
  for (int i = 0; i < 200; ++i) {
    LipFn u = sampler.raw_fn(z2, Rational(-6), Rational(6));
    LipFn v = sampler.raw_fn(z2, Rational(-6), Rational(6));
    Rational d = d_inf(u, v);
    CHECK(rho(u, v) == d / (Rational(1) + d));
    CHECK(rho(u, v) < Rational(1));
  }
}

TEST_CASE("residual inverse is the least super-solution") {
  Context z2 = discrete_ctx(2);
  CHECK(residual_inverse(delta_e(z2)) == delta_e(z2));
  CHECK(residual_inverse(delta(z2, 1)) == delta(z2, 1));  // delta_a^{-1} = delta_{a^{-1}} = delta_a

  LipFn zero = constant_fn(z2, 0);
  LipFn residual = residual_inverse(zero);
  CHECK(residual.values() == std::vector<Rational>{1, 1});
  CHECK(inf_conv(zero, residual).values() == std::vector<Rational>{1, 1});
  CHECK(inf_conv(zero, residual) != delta_e(z2));

  // Super-solution property and minimality on sampled functions.
  Sampler sampler(17);
  for (const Context& ctx : {discrete_ctx(3), Context::discrete(symmetric_group(3))}) {
    LipFn de = delta_e(ctx);
    for (int i = 0; i < 100; ++i) {
      LipFn f = sampler.raw_fn(ctx, Rational(-4), Rational(4));
      LipFn g = residual_inverse(f);
      CHECK(de.leq(inf_conv(f, g)));
      // Any pointwise drop below g breaks the super-solution property.
      int z = sampler.index(ctx.order());
      std::vector<Rational> lowered = g.values();
      lowered[z] -= Rational(1, 7);
      CHECK_FALSE(de.leq(inf_conv(f, LipFn(ctx, lowered))));
    }
  }
}

TEST_CASE("units via the residuation oracle") {
  Context z3 = discrete_ctx(3);
  for (int x = 0; x < 3; ++x) {
    UnitCheck check = is_unit(delta(z3, x), Cone::lip1plus);
    CHECK(check.unit);
    CHECK(*check.inverse == delta(z3, z3.group().inverse(x)));
  }
  CHECK_FALSE(is_unit(constant_fn(z3, 0), Cone::lip1plus).unit);

  // r + delta_a on discrete Z2: (6,5) with inverse (-4,-5).
  Context z2 = discrete_ctx(2);
  LipFn unit = fn(z2, {6, 5});
  UnitCheck check = is_unit(unit, Cone::lip1);
  CHECK(check.unit);
  CHECK(check.inverse->values() == std::vector<Rational>{-4, -5});
  CHECK(inf_conv(unit, *check.inverse) == delta_e(z2));

  CHECK(code_of([&] { is_unit(fn(z2, {0, 2}), Cone::lip1); }) == Errc::cone_mismatch);
  CHECK(code_of([&] { is_unit(fn(z2, {-1, 0}), Cone::lip1plus); }) == Errc::cone_mismatch);
  CHECK(code_of([&] { is_unit(delta_e(z2), Cone::lip); }) == Errc::unsupported_cone);
}

TEST_CASE("units_of per cone") {
  Context z3 = discrete_ctx(3);
  UnitsDescription lip1plus_units = units_of(z3, Cone::lip1plus);
  REQUIRE(lip1plus_units.deltas.size() == 3);
  CHECK_FALSE(lip1plus_units.parametric);
  CHECK(lip1plus_units.deltas[0].values() == std::vector<Rational>{0, 1, 1});
  CHECK(lip1plus_units.deltas[1].values() == std::vector<Rational>{1, 0, 1});
  CHECK(lip1plus_units.deltas[2].values() == std::vector<Rational>{1, 1, 0});

  Context trivial = discrete_ctx(1);
  UnitsDescription trivial_units = units_of(trivial, Cone::lip10);
  REQUIRE(trivial_units.deltas.size() == 1);
  CHECK(trivial_units.deltas[0].values() == std::vector<Rational>{0});

  Context z2 = discrete_ctx(2);
  UnitsDescription family = units_of(z2, Cone::lip1, 9);
  CHECK(family.parametric);
  REQUIRE(family.witnesses.size() == 16);
  for (const auto& w : family.witnesses) CHECK(w.law_holds);
  // The sample (5,6)·(-5,-4) = delta_e from the family.
  CHECK(inf_conv(fn(z2, {5, 6}), fn(z2, {-5, -4})) == delta_e(z2));

  CHECK(code_of([&] { units_of(z2, Cone::lip); }) == Errc::unsupported_cone);
}

TEST_CASE("tau decomposition") {
  Context z2 = discrete_ctx(2);
  TauPair at_identity = tau(delta_e(z2));
  CHECK(at_identity.base == delta_e(z2));
  CHECK(at_identity.offset == Rational(0));

  LipFn f = fn(z2, {Rational(3, 2), Rational(2)});
  TauPair pair = tau(f);
  CHECK(pair.base.values() == std::vector<Rational>{0, Rational(1, 2)});
  CHECK(pair.offset == Rational(3, 2));
  CHECK(tau_inv(pair) == f);

  CHECK(code_of([&] { tau(fn(z2, {0, 2})); }) == Errc::not_lip1);

  Sampler sampler(23);
  for (int i = 0; i < 200; ++i) {
    LipFn u = sampler.cone_fn(z2, Cone::lip1);
    LipFn v = sampler.cone_fn(z2, Cone::lip1);
    CHECK(tau(inf_conv(u, v)) == tau_oplus(tau(u), tau(v)));
    CHECK(theta_inf(u, v) == d_inf(tau(u).base, tau(v).base) + abs(tau(u).offset - tau(v).offset));
  }
}

TEST_CASE("cap and regularization") {
  Context z2 = discrete_ctx(2);
  CHECK(lip_regularize(delta(z2, 1)) == delta(z2, 1));
  CHECK(lip_regularize(fn(z2, {0, 5})).values() == std::vector<Rational>{0, 1});

  Context z3 = discrete_ctx(3);
  CHECK(cap_with(z3, Rational(1, 2)).values() ==
        std::vector<Rational>{0, Rational(1, 2), Rational(1, 2)});
  CHECK(code_of([&] { cap_with(z3, Rational(-1)); }) == Errc::negative_cap);

  // Cap identity: a >= f(x) pins (min(delta_e, a) ⊕ f)(x) = f(x).
  Sampler sampler(29);
  for (const Context& ctx : {z2, z3, Context::discrete(quaternion_group())}) {
    for (int i = 0; i < 100; ++i) {
      LipFn f = sampler.cone_fn(ctx, Cone::lip1plus);
      int x = sampler.index(ctx.order());
      Rational a = f[x] + sampler.rational(Rational(0), Rational(2));
      CHECK(inf_conv(cap_with(ctx, a), f)[x] == f[x]);
    }
  }
}

TEST_CASE("oscillation") {
  Context z3 = discrete_ctx(3);
  CHECK(osc(constant_fn(z3, 9)) == Rational(0));
  CHECK(osc(fn(z3, {0, 1, 1})) == Rational(1));
  Context z2 = discrete_ctx(2);
  CHECK(osc(fn(z2, {0, 2})) == Rational(2));
  CHECK_FALSE(classify(fn(z2, {0, 2})).lip1);

  // Under the discrete metric, 1-Lipschitz is exactly oscillation <= 1.
  Sampler sampler(31);
  for (int i = 0; i < 200; ++i) {
    LipFn f = sampler.raw_fn(z3, Rational(-2), Rational(2));
    CHECK(classify(f).lip1 == !(Rational(1) < osc(f)));
  }
}

TEST_CASE("monoid laws on sampled triples") {
  Sampler sampler(37);
  GroupPtr klein = direct_product(cyclic_group(2), cyclic_group(2));
  for (const Context& ctx :
       {discrete_ctx(1), discrete_ctx(4), Context::discrete(klein), Context::discrete(symmetric_group(3))}) {
    LipFn de = delta_e(ctx);
    for (Cone cone : {Cone::lip, Cone::lip1, Cone::lip1plus, Cone::lip10}) {
      for (int i = 0; i < 60; ++i) {
        LipFn f = sampler.cone_fn(ctx, cone);
        LipFn g = sampler.cone_fn(ctx, cone);
        LipFn h = sampler.cone_fn(ctx, cone);
        CHECK(inf_conv(inf_conv(f, g), h) == inf_conv(f, inf_conv(g, h)));
        if (cone != Cone::lip) {
          CHECK(inf_conv(de, f) == f);
          CHECK(inf_conv(f, de) == f);
          CHECK(classify(inf_conv(f, g)).contains(cone));
        }
        CHECK(inf_conv(f, g).min_value() == f.min_value() + g.min_value());
      }
    }
  }
}

TEST_CASE("commutativity happens exactly for abelian groups") {
  Sampler sampler(41);
  Context z6 = discrete_ctx(6);
  for (int i = 0; i < 100; ++i) {
    LipFn f = sampler.cone_fn(z6, Cone::lip);
    LipFn g = sampler.cone_fn(z6, Cone::lip);
    CHECK(inf_conv(f, g) == inf_conv(g, f));
  }
  Context s3 = Context::discrete(symmetric_group(3));
  bool witness = false;
  for (int x = 0; x < 6 && !witness; ++x) {
    for (int y = 0; y < 6 && !witness; ++y) {
      witness = inf_conv(delta(s3, x), delta(s3, y)) != inf_conv(delta(s3, y), delta(s3, x));
    }
  }
  CHECK(witness);
}

TEST_CASE("delta group law holds exhaustively") {
  GroupPtr q8 = quaternion_group();
  Context ctx = Context::discrete(q8);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      CHECK(inf_conv(delta(ctx, x), delta(ctx, y)) == delta(ctx, q8->op(x, y)));
    }
  }
}

TEST_CASE("monotonicity and its cap converse") {
  Sampler sampler(43);
  Context ctx = Context::discrete(symmetric_group(3));
  for (int i = 0; i < 100; ++i) {
    LipFn g = sampler.cone_fn(ctx, Cone::lip1plus);
    LipFn f = pointwise_min(g, sampler.cone_fn(ctx, Cone::lip1plus));
    LipFn h = sampler.cone_fn(ctx, Cone::lip1plus);
    CHECK(f.leq(g));
    CHECK(inf_conv(h, f).leq(inf_conv(h, g)));
    // The cap family recovers the pointwise value, hence the order.
    for (int x = 0; x < ctx.order(); ++x) {
      LipFn cap = cap_with(ctx, max(f[x], g[x]));
      CHECK(inf_conv(cap, f)[x] == f[x]);
      CHECK(inf_conv(cap, g)[x] == g[x]);
    }
  }
}

TEST_CASE("convolution distributes over pointwise min") {
  Sampler sampler(47);
  Context ctx = discrete_ctx(4);
  for (int i = 0; i < 100; ++i) {
    LipFn f = sampler.cone_fn(ctx, Cone::lip);
    LipFn g = sampler.cone_fn(ctx, Cone::lip);
    LipFn h = sampler.cone_fn(ctx, Cone::lip);
    CHECK(inf_conv(pointwise_min(f, g), h) ==
          pointwise_min(inf_conv(f, h), inf_conv(g, h)));
    CHECK(inf_conv(h, pointwise_min(f, g)) ==
          pointwise_min(inf_conv(h, f), inf_conv(h, g)));
  }
}

TEST_CASE("trivial group degenerates to addition") {
  Context ctx = discrete_ctx(1);
  CHECK(delta_e(ctx).values() == std::vector<Rational>{0});
  LipFn a = fn(ctx, {Rational(5, 3)});
  LipFn b = fn(ctx, {Rational(-1, 2)});
  CHECK(inf_conv(a, b).values() == std::vector<Rational>{Rational(7, 6)});
  CHECK(is_unit(a, Cone::lip1).unit);
  CHECK(is_unit(fn(ctx, {0}), Cone::lip10).unit);
}

TEST_CASE("regularization is the identity exactly on Lip1") {
  Sampler sampler(53);
  Context ctx = discrete_ctx(4);
  for (int i = 0; i < 200; ++i) {
    LipFn f = sampler.coin() ? sampler.raw_fn(ctx, Rational(-3), Rational(3))
                             : sampler.cone_fn(ctx, Cone::lip1);
    LipFn reg = lip_regularize(f);
    CHECK(classify(reg).lip1);
    CHECK(reg.leq(f));
    CHECK((reg == f) == classify(f).lip1);
  }
}
