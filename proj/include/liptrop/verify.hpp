#pragma once

#include <optional>

#include "liptrop/banach_stone.hpp"
#include "liptrop/rn_star.hpp"

namespace liptrop {

/// Seeded sampling configuration: the seed fully determines every sampled
/// value of a run, so reports are byte-reproducible.
struct RunConfig {
  std::uint64_t seed = 0;
  int samples = 1000;
  int order_cap = default_order_cap;
};

/// Monoid laws, the δ-group law, metric identities, the cap lemma,
/// monotonicity, min-distributivity, regularization and the ⋆/⊕ bridge.
Report monoid_suite(const Context& ctx, const RunConfig& config);

/// Unit groups of the three cones via the residuation oracle, τ, and the
/// maximal subgroup of (ℝⁿ, ⋆).
Report units_suite(const Context& ctx, const RunConfig& config);

/// Is_m structure, enumeration/decision consistency, and the non-isometric
/// isomorphism example. Pass the same context twice for the self case.
Report banachstone_suite(const Context& x, const Context& y, const RunConfig& config);

/// The full lemma battery for every enumerated isometric monoid isomorphism.
Report lemmas_suite(const Context& x, const Context& y, const RunConfig& config);

Report all_suite(const Context& x, const std::optional<Context>& y, const RunConfig& config);

}  // namespace liptrop
