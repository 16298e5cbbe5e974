#pragma once

#include <map>
#include <optional>
#include <utility>

#include "liptrop/group.hpp"
#include "liptrop/rational.hpp"

namespace liptrop {

/// A bi-invariant metric on a finite group, stored as the full rational
/// distance matrix. Construction re-validates every axiom exhaustively:
/// zero diagonal, positivity, symmetry, the triangle inequality and
/// d(xy,xz) = d(yx,zx) = d(y,z); the first violation is reported with its
/// witness. Finite metric spaces are complete, so nothing more is needed.
class InvariantMetric {
 public:
  InvariantMetric(GroupPtr group, std::vector<Rational> distances, std::string name = "");

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::string& name() const { return name_; }
  const Rational& dist(int x, int y) const {
    return dist_[static_cast<std::size_t>(x) * group_->order() + y];
  }
  Rational diameter() const;
  bool same_matrix(const InvariantMetric& other) const;
  const std::vector<Rational>& flat_matrix() const { return dist_; }

 private:
  GroupPtr group_;
  std::string name_;
  std::vector<Rational> dist_;
};

using MetricPtr = std::shared_ptr<const InvariantMetric>;

/// Positive weights on a symmetric generating set, keyed by element index.
struct LengthWeights {
  std::map<int, Rational> weight;
};

MetricPtr discrete_metric(const GroupPtr& group);

/// Shortest weighted path in the right Cayley graph of the weighted set.
/// Left-invariant by construction; the result is re-validated and rejected
/// with NotBiInvariant if right-invariance fails (possible for weights that
/// are not conjugation-invariant on a nonabelian group).
MetricPtr word_metric(const GroupPtr& group, const LengthWeights& weights);

/// True iff dY(T x, T y) = dX(x, y) for all x, y.
bool is_isometric_iso(const GroupIso& iso, const InvariantMetric& dx, const InvariantMetric& dy);

/// Witness pair (x, y) with dY(T x, T y) != dX(x, y), or nullopt if isometric.
std::optional<std::pair<int, int>> isometry_violation(const GroupIso& iso,
                                                      const InvariantMetric& dx,
                                                      const InvariantMetric& dy);

}  // namespace liptrop
