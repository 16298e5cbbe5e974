#include "liptrop/lip.hpp"

#include <algorithm>

#include "liptrop/sampler.hpp"

namespace liptrop {

const char* cone_name(Cone cone) {
  switch (cone) {
    case Cone::lip: return "LIP";
    case Cone::lip1: return "LIP1";
    case Cone::lip1plus: return "LIP1PLUS";
    case Cone::lip10: return "LIP10";
  }
  return "?";
}

std::optional<Cone> parse_cone(const std::string& text) {
  if (text == "lip") return Cone::lip;
  if (text == "lip1") return Cone::lip1;
  if (text == "lip1plus") return Cone::lip1plus;
  if (text == "lip10") return Cone::lip10;
  return std::nullopt;
}

LipFn::LipFn(Context ctx, std::vector<Rational> values)
    : ctx_(std::move(ctx)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != ctx_.order()) {
    throw Error(Errc::context_mismatch, "function has " + std::to_string(values_.size()) +
                                            " values over a group of order " +
                                            std::to_string(ctx_.order()));
  }
}

Rational LipFn::min_value() const {
  Rational m = values_[0];
  for (const Rational& v : values_) m = min(m, v);
  return m;
}

Rational LipFn::max_value() const {
  Rational m = values_[0];
  for (const Rational& v : values_) m = max(m, v);
  return m;
}

LipFn LipFn::plus(const Rational& r) const {
  std::vector<Rational> out(values_);
  for (Rational& v : out) v += r;
  return LipFn(ctx_, std::move(out));
}

bool LipFn::leq(const LipFn& other) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (other.values_[i] < values_[i]) return false;
  }
  return true;
}

std::string LipFn::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) s += ", ";
    s += values_[i].str();
  }
  return s + ")";
}

namespace {

void require_same_context(const LipFn& f, const LipFn& g, const char* what) {
  if (!f.context().compatible_with(g.context())) {
    throw Error(Errc::context_mismatch, std::string(what) + " over different carriers");
  }
}

}  // namespace

std::vector<Rational> min_plus_convolve(const FiniteGroup& group, const std::vector<Rational>& f,
                                        const std::vector<Rational>& g) {
  int n = group.order();
  std::vector<Rational> out(n);
  std::vector<char> touched(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int k = group.op(i, j);
      Rational sum = f[i] + g[j];
      if (!touched[k] || sum < out[k]) {
        out[k] = sum;
        touched[k] = 1;
      }
    }
  }
  return out;
}

ConeSet classify(const LipFn& f) {
  ConeSet tags;
  const InvariantMetric& metric = f.context().metric();
  int n = f.size();
  bool lip1 = true;
  for (int x = 0; x < n && lip1; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (abs(f[x] - f[y]) > metric.dist(x, y)) {
        lip1 = false;
        break;
      }
    }
  }
  if (lip1) {
    tags.lip1 = true;
    Rational lowest = f.min_value();
    tags.lip1plus = !lowest.is_negative();
    tags.lip10 = lowest.is_zero();
  }
  return tags;
}

LipFn inf_conv(const LipFn& f, const LipFn& g) {
  require_same_context(f, g, "inf_conv");
  return LipFn(f.context(), min_plus_convolve(f.context().group(), f.values(), g.values()));
}

LipFn delta(const Context& ctx, int x) {
  if (x < 0 || x >= ctx.order()) {
    throw Error(Errc::out_of_range_entry, "delta index " + std::to_string(x));
  }
  std::vector<Rational> values(ctx.order());
  for (int z = 0; z < ctx.order(); ++z) values[z] = ctx.metric().dist(z, x);
  return LipFn(ctx, std::move(values));
}

LipFn delta_e(const Context& ctx) { return delta(ctx, ctx.group().identity()); }

LipFn constant_fn(const Context& ctx, const Rational& value) {
  return LipFn(ctx, std::vector<Rational>(ctx.order(), value));
}

Rational d_inf(const LipFn& f, const LipFn& g) {
  require_same_context(f, g, "d_inf");
  Rational m = 0;
  for (int i = 0; i < f.size(); ++i) m = max(m, abs(f[i] - g[i]));
  return m;
}

Rational rho(const LipFn& f, const LipFn& g) {
  require_same_context(f, g, "rho");
  Rational m = 0;
  for (int i = 0; i < f.size(); ++i) {
    Rational gap = abs(f[i] - g[i]);
    m = max(m, gap / (Rational(1) + gap));
  }
  return m;
}

Rational theta_inf(const LipFn& f, const LipFn& g) {
  require_same_context(f, g, "theta_inf");
  Rational mf = f.min_value();
  Rational mg = g.min_value();
  return d_inf(f.plus(-mf), g.plus(-mg)) + abs(mf - mg);
}

LipFn residual_inverse(const LipFn& f) {
  const Context& ctx = f.context();
  const FiniteGroup& group = ctx.group();
  int n = f.size();
  LipFn de = delta_e(ctx);
  std::vector<Rational> out(n);
  for (int z = 0; z < n; ++z) {
    int zinv = group.inverse(z);
    Rational best = de[0] - f[group.op(0, zinv)];
    for (int x = 1; x < n; ++x) {
      best = max(best, de[x] - f[group.op(x, zinv)]);
    }
    out[z] = best;
  }
  return LipFn(ctx, std::move(out));
}

UnitCheck is_unit(const LipFn& f, Cone cone) {
  if (cone == Cone::lip) {
    throw Error(Errc::unsupported_cone, "Lip is only a semigroup; units need a monoid cone");
  }
  if (!classify(f).contains(cone)) {
    throw Error(Errc::cone_mismatch, "f = " + f.str() + " is not in " + cone_name(cone));
  }
  LipFn candidate = residual_inverse(f);
  LipFn de = delta_e(f.context());
  UnitCheck result;
  result.unit = inf_conv(f, candidate) == de && inf_conv(candidate, f) == de &&
                classify(candidate).contains(cone);
  if (result.unit) result.inverse = std::move(candidate);
  return result;
}

UnitsDescription units_of(const Context& ctx, Cone cone, std::uint64_t seed, int witness_samples) {
  if (cone == Cone::lip) {
    throw Error(Errc::unsupported_cone, "Lip is only a semigroup; units need a monoid cone");
  }
  UnitsDescription out;
  out.cone = cone;
  out.parametric = cone == Cone::lip1;
  int n = ctx.order();
  out.deltas.reserve(n);
  for (int x = 0; x < n; ++x) {
    LipFn dx = delta(ctx, x);
    UnitCheck check = is_unit(dx, cone);
    if (!check.unit || *check.inverse != delta(ctx, ctx.group().inverse(x))) {
      throw std::logic_error("delta_" + std::to_string(x) + " failed unit verification");
    }
    out.deltas.push_back(std::move(dx));
  }
  if (out.parametric) {
    Sampler sampler(seed);
    for (int i = 0; i < witness_samples; ++i) {
      UnitsDescription::Witness w;
      w.x = sampler.index(n);
      w.y = sampler.index(n);
      w.r = sampler.rational(Rational(-8), Rational(8));
      w.s = sampler.rational(Rational(-8), Rational(8));
      LipFn left = inf_conv(out.deltas[w.x].plus(w.r), out.deltas[w.y].plus(w.s));
      LipFn expected = out.deltas[ctx.group().op(w.x, w.y)].plus(w.r + w.s);
      w.law_holds = left == expected;
      out.witnesses.push_back(std::move(w));
    }
  }
  return out;
}

TauPair tau(const LipFn& f) {
  if (!classify(f).lip1) {
    throw Error(Errc::not_lip1, "tau needs a 1-Lipschitz function, got " + f.str());
  }
  Rational lowest = f.min_value();
  return TauPair{f.plus(-lowest), lowest};
}

LipFn tau_inv(const TauPair& p) { return p.base.plus(p.offset); }

TauPair tau_oplus(const TauPair& a, const TauPair& b) {
  return TauPair{inf_conv(a.base, b.base), a.offset + b.offset};
}

LipFn cap_with(const Context& ctx, const Rational& bound) {
  if (bound.is_negative()) {
    throw Error(Errc::negative_cap, "cap bound " + bound.str() + " is negative");
  }
  LipFn de = delta_e(ctx);
  std::vector<Rational> out(ctx.order());
  for (int z = 0; z < ctx.order(); ++z) out[z] = min(de[z], bound);
  return LipFn(ctx, std::move(out));
}

LipFn lip_regularize(const LipFn& f) { return inf_conv(delta_e(f.context()), f); }

Rational osc(const LipFn& f) { return f.max_value() - f.min_value(); }

LipFn pointwise_min(const LipFn& f, const LipFn& g) {
  require_same_context(f, g, "pointwise_min");
  std::vector<Rational> out(f.values());
  for (int i = 0; i < f.size(); ++i) out[i] = min(out[i], g[i]);
  return LipFn(f.context(), std::move(out));
}

}  // namespace liptrop
