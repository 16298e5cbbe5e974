#pragma once

#include "liptrop/metric.hpp"

namespace liptrop {

/// A finite invariant metric group: the carrier every function space in the
/// library lives over. Immutable and cheap to copy (two shared handles).
class Context {
 public:
  explicit Context(MetricPtr metric);
  Context(GroupPtr group, MetricPtr metric);

  static Context discrete(const GroupPtr& group) { return Context(discrete_metric(group)); }

  const FiniteGroup& group() const { return metric_->group(); }
  const InvariantMetric& metric() const { return *metric_; }
  const GroupPtr& group_ptr() const { return metric_->group_ptr(); }
  const MetricPtr& metric_ptr() const { return metric_; }
  int order() const { return group().order(); }

  /// Same carrier and same distances. Pointer identity is the fast path;
  /// structurally equal contexts loaded twice also compare compatible.
  bool compatible_with(const Context& other) const;

  std::string label() const;

 private:
  MetricPtr metric_;
};

}  // namespace liptrop
