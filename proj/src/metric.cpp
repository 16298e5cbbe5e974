#include "liptrop/metric.hpp"

#include <algorithm>

namespace liptrop {

namespace {

std::string triple(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

InvariantMetric::InvariantMetric(GroupPtr group, std::vector<Rational> distances, std::string name)
    : group_(std::move(group)), name_(std::move(name)), dist_(std::move(distances)) {
  int n = group_->order();
  if (dist_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(Errc::parse_error, "distance matrix is not " + std::to_string(n) + "x" +
                                       std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (!dist(i, i).is_zero()) {
      throw Error(Errc::invalid_metric, "d(" + std::to_string(i) + "," + std::to_string(i) +
                                            ") = " + dist(i, i).str() + " != 0");
    }
    for (int j = 0; j < n; ++j) {
      if (i != j && !(Rational(0) < dist(i, j))) {
        throw Error(Errc::invalid_metric, "d(" + std::to_string(i) + "," + std::to_string(j) +
                                              ") = " + dist(i, j).str() + " not positive");
      }
      if (dist(i, j) != dist(j, i)) {
        throw Error(Errc::invalid_metric, "d(" + std::to_string(i) + "," + std::to_string(j) +
                                              ") != d(" + std::to_string(j) + "," +
                                              std::to_string(i) + ")");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (dist(i, k) > dist(i, j) + dist(j, k)) {
          throw Error(Errc::invalid_metric, "triangle inequality fails at " + triple(i, j, k));
        }
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        const Rational& base = dist(y, z);
        if (dist(group_->op(x, y), group_->op(x, z)) != base ||
            dist(group_->op(y, x), group_->op(z, x)) != base) {
          throw Error(Errc::not_bi_invariant, "witness " + triple(x, y, z));
        }
      }
    }
  }
}

Rational InvariantMetric::diameter() const {
  Rational d = 0;
  for (const Rational& v : dist_) d = max(d, v);
  return d;
}

bool InvariantMetric::same_matrix(const InvariantMetric& other) const {
  return group_->order() == other.group_->order() && dist_ == other.dist_;
}

MetricPtr discrete_metric(const GroupPtr& group) {
  int n = group->order();
  std::vector<Rational> dist(static_cast<std::size_t>(n) * n, Rational(1));
  for (int i = 0; i < n; ++i) dist[static_cast<std::size_t>(i) * n + i] = 0;
  return std::make_shared<InvariantMetric>(group, std::move(dist), "disc");
}

MetricPtr word_metric(const GroupPtr& group, const LengthWeights& weights) {
  int n = group->order();
  if (weights.weight.empty()) throw Error(Errc::invalid_weights, "empty weight set");
  for (const auto& [s, w] : weights.weight) {
    if (s < 0 || s >= n) {
      throw Error(Errc::invalid_weights, "element index " + std::to_string(s) + " out of range");
    }
    if (s == group->identity()) {
      throw Error(Errc::invalid_weights, "identity cannot carry a generator weight");
    }
    if (!(Rational(0) < w)) {
      throw Error(Errc::invalid_weights, "weight of " + std::to_string(s) + " is " + w.str() +
                                             ", must be positive");
    }
    auto inv = weights.weight.find(group->inverse(s));
    if (inv == weights.weight.end() || inv->second != w) {
      throw Error(Errc::not_symmetric_weights, "weight(" + std::to_string(s) +
                                                   ") has no equal weight on inverse " +
                                                   std::to_string(group->inverse(s)));
    }
  }
  // Reachability from the identity decides the generating condition.
  std::vector<char> reached(n, 0);
  std::vector<int> queue{group->identity()};
  reached[group->identity()] = 1;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (const auto& [s, w] : weights.weight) {
      int y = group->op(x, s);
      if (!reached[y]) {
        reached[y] = 1;
        queue.push_back(y);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!reached[i]) {
      throw Error(Errc::not_generating,
                  "element " + std::to_string(i) + " is not a product of weighted generators");
    }
  }
  // All-pairs shortest paths; every distance is finite by the check above.
  std::vector<std::optional<Rational>> d(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> std::optional<Rational>& {
    return d[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) at(i, i) = Rational(0);
  for (int x = 0; x < n; ++x) {
    for (const auto& [s, w] : weights.weight) {
      int y = group->op(x, s);
      if (x == y) continue;
      auto& slot = at(x, y);
      if (!slot || w < *slot) slot = w;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!at(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (!at(k, j)) continue;
        Rational via = *at(i, k) + *at(k, j);
        auto& slot = at(i, j);
        if (!slot || via < *slot) slot = via;
      }
    }
  }
  std::vector<Rational> dist(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < d.size(); ++i) dist[i] = *d[i];
  return std::make_shared<InvariantMetric>(group, std::move(dist), "word");
}

std::optional<std::pair<int, int>> isometry_violation(const GroupIso& iso,
                                                      const InvariantMetric& dx,
                                                      const InvariantMetric& dy) {
  if (!iso.source->same_table(dx.group()) || !iso.target->same_table(dy.group())) {
    throw Error(Errc::carrier_mismatch, "isomorphism does not connect the metric carriers");
  }
  int n = dx.group().order();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (dy.dist(iso(x), iso(y)) != dx.dist(x, y)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool is_isometric_iso(const GroupIso& iso, const InvariantMetric& dx, const InvariantMetric& dy) {
  return !isometry_violation(iso, dx, dy).has_value();
}

}  // namespace liptrop
