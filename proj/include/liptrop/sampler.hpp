#pragma once

#include <cstdint>

#include "liptrop/lip.hpp"

namespace liptrop {

/// Deterministic splitmix64 stream. Identical output across platforms for a
/// given seed, so seeded reports are byte-reproducible. Rationals are drawn
/// with denominators up to `max_den` (default 16).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), rejection-sampled
  int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }
  bool coin() { return (next() & 1) != 0; }

  Rational rational(const Rational& lo, const Rational& hi, int max_den = 16);
  std::vector<Rational> vector(int n, const Rational& lo, const Rational& hi, int max_den = 16);

  /// Arbitrary function on the carrier (a lip sample).
  LipFn raw_fn(const Context& ctx, const Rational& lo, const Rational& hi);

  /// A member of the requested cone. lip1plus samples are regularized
  /// nonnegative vectors, which reach every element of the cone; lip10
  /// re-bases them at min 0 and lip1 adds a signed offset.
  LipFn cone_fn(const Context& ctx, Cone cone);

 private:
  std::uint64_t state_;
};

}  // namespace liptrop
