#include "liptrop/sampler.hpp"

namespace liptrop {

std::uint64_t Sampler::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

Rational Sampler::rational(const Rational& lo, const Rational& hi, int max_den) {
  if (hi < lo) throw Error(Errc::parse_error, "empty sampling range");
  std::int64_t den = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max_den))) + 1;
  // Smallest and largest numerators p with lo <= p/den <= hi.
  auto ceil_div = [](std::int64_t a, std::int64_t b) { return a / b + (a % b != 0 && (a ^ b) >= 0); };
  auto floor_div = [](std::int64_t a, std::int64_t b) { return a / b - (a % b != 0 && (a ^ b) < 0); };
  std::int64_t p_lo = ceil_div(lo.num() * den, lo.den());
  std::int64_t p_hi = floor_div(hi.num() * den, hi.den());
  if (p_hi < p_lo) return lo;  // no multiple of 1/den in range; endpoints are admissible
  std::int64_t p = p_lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(p_hi - p_lo + 1)));
  return Rational(p, den);
}

std::vector<Rational> Sampler::vector(int n, const Rational& lo, const Rational& hi, int max_den) {
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i) out[i] = rational(lo, hi, max_den);
  return out;
}

LipFn Sampler::raw_fn(const Context& ctx, const Rational& lo, const Rational& hi) {
  return LipFn(ctx, vector(ctx.order(), lo, hi));
}

LipFn Sampler::cone_fn(const Context& ctx, Cone cone) {
  Rational hi = ctx.metric().diameter() + Rational(2);
  switch (cone) {
    case Cone::lip:
      return raw_fn(ctx, Rational(-4), Rational(4));
    case Cone::lip1plus:
      return lip_regularize(raw_fn(ctx, Rational(0), hi));
    case Cone::lip10: {
      LipFn f = lip_regularize(raw_fn(ctx, Rational(0), hi));
      return f.plus(-f.min_value());
    }
    case Cone::lip1: {
      LipFn f = lip_regularize(raw_fn(ctx, Rational(0), hi));
      return f.plus(rational(Rational(-4), Rational(4)) - f.min_value());
    }
  }
  throw Error(Errc::unsupported_cone, "unknown cone");
}

}  // namespace liptrop
