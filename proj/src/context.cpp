#include "liptrop/context.hpp"

namespace liptrop {

Context::Context(MetricPtr metric) : metric_(std::move(metric)) {
  if (!metric_) throw Error(Errc::parse_error, "context requires a metric");
}

Context::Context(GroupPtr group, MetricPtr metric) : Context(std::move(metric)) {
  if (group && !group->same_table(metric_->group())) {
    throw Error(Errc::carrier_mismatch, "metric does not live on the given group");
  }
}

bool Context::compatible_with(const Context& other) const {
  if (metric_ == other.metric_) return true;
  return group().same_table(other.group()) && metric_->same_matrix(other.metric());
}

std::string Context::label() const {
  std::string g = group().name().empty() ? "order" + std::to_string(order()) : group().name();
  std::string m = metric_->name().empty() ? "metric" : metric_->name();
  return g + "/" + m;
}

}  // namespace liptrop
