#pragma once

#include <optional>

#include "liptrop/context.hpp"

namespace liptrop {

/// The function cones, ordered by inclusion:
///   lip10 (1-Lipschitz, min 0)  ⊂  lip1plus (1-Lipschitz, nonnegative)
///   ⊂  lip1 (1-Lipschitz)  ⊂  lip (every function on a finite carrier).
enum class Cone { lip, lip1, lip1plus, lip10 };

const char* cone_name(Cone cone);
std::optional<Cone> parse_cone(const std::string& text);

struct ConeSet {
  bool lip1 = false;
  bool lip1plus = false;
  bool lip10 = false;

  bool contains(Cone c) const {
    switch (c) {
      case Cone::lip: return true;
      case Cone::lip1: return lip1;
      case Cone::lip1plus: return lip1plus;
      case Cone::lip10: return lip10;
    }
    return false;
  }
};

/// A rational-valued function on the carrier group, values[i] = f(g_i).
/// Cone membership is a query (classify), never stored.
class LipFn {
 public:
  LipFn(Context ctx, std::vector<Rational> values);

  const Context& context() const { return ctx_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int i) const { return values_[i]; }
  const std::vector<Rational>& values() const { return values_; }

  Rational min_value() const;
  Rational max_value() const;
  LipFn plus(const Rational& r) const;
  bool leq(const LipFn& other) const;  // pointwise

  friend bool operator==(const LipFn& a, const LipFn& b) {
    return a.ctx_.compatible_with(b.ctx_) && a.values_ == b.values_;
  }
  friend bool operator!=(const LipFn& a, const LipFn& b) { return !(a == b); }

  std::string str() const;

 private:
  Context ctx_;
  std::vector<Rational> values_;
};

/// The min-plus convolution kernel shared by lip-monoid's ⊕ and rn-star's ⋆:
/// out[k] = min over table[i][j] = k of f[i] + g[j], one O(n^2) sweep.
std::vector<Rational> min_plus_convolve(const FiniteGroup& group, const std::vector<Rational>& f,
                                        const std::vector<Rational>& g);

ConeSet classify(const LipFn& f);
LipFn inf_conv(const LipFn& f, const LipFn& g);
LipFn delta(const Context& ctx, int x);
LipFn delta_e(const Context& ctx);
LipFn constant_fn(const Context& ctx, const Rational& value);

Rational d_inf(const LipFn& f, const LipFn& g);
Rational rho(const LipFn& f, const LipFn& g);
Rational theta_inf(const LipFn& f, const LipFn& g);

/// Least g with f ⊕ g ≥ δ_e pointwise (min-plus residuation):
/// g(z) = max over x of δ_e(x) - f(x z⁻¹). Defined for every finite f;
/// the inverse-existence oracle behind is_unit.
LipFn residual_inverse(const LipFn& f);

struct UnitCheck {
  bool unit = false;
  std::optional<LipFn> inverse;
};

/// f must lie in `cone` (one of lip10/lip1plus/lip1, else UnsupportedCone);
/// f is a unit iff the residual ǧ satisfies f⊕ǧ = ǧ⊕f = δ_e and ǧ stays in
/// the cone, in which case ǧ is returned as the inverse.
UnitCheck is_unit(const LipFn& f, Cone cone);

/// Explicit unit group. For lip10/lip1plus the finite set {δ_x}, each entry
/// certified by is_unit; for lip1 the parametric family {r + δ_x} with a
/// sampled group-law witness table (r+δ_x)⊕(s+δ_y) = (r+s)+δ_{xy}.
struct UnitsDescription {
  Cone cone = Cone::lip1plus;
  bool parametric = false;
  std::vector<LipFn> deltas;

  struct Witness {
    int x = 0;
    Rational r;
    int y = 0;
    Rational s;
    bool law_holds = false;
  };
  std::vector<Witness> witnesses;
};

UnitsDescription units_of(const Context& ctx, Cone cone, std::uint64_t seed = 0,
                          int witness_samples = 16);

struct TauPair {
  LipFn base;
  Rational offset;

  friend bool operator==(const TauPair& a, const TauPair& b) {
    return a.base == b.base && a.offset == b.offset;
  }
};

TauPair tau(const LipFn& f);      // (f - inf f, inf f); requires f in lip1
LipFn tau_inv(const TauPair& p);  // base + offset
TauPair tau_oplus(const TauPair& a, const TauPair& b);

/// min(δ_e, bound) pointwise; a bounded element of lip1plus.
LipFn cap_with(const Context& ctx, const Rational& bound);

/// δ_e ⊕ f: the largest 1-Lipschitz minorant of f. Result is 1-Lipschitz,
/// ≤ f, and equals f exactly when f already is 1-Lipschitz.
LipFn lip_regularize(const LipFn& f);

Rational osc(const LipFn& f);  // max f - min f

LipFn pointwise_min(const LipFn& f, const LipFn& g);

}  // namespace liptrop
