#include "liptrop/group.hpp"

#include <algorithm>
#include <numeric>

namespace liptrop {

namespace {

std::string describe(const FiniteGroup& g) {
  return g.name().empty() ? "group of order " + std::to_string(g.order()) : g.name();
}

void check_cap(int order, int order_cap, const std::string& what) {
  if (order > order_cap) {
    throw Error(Errc::order_too_large, what + " has order " + std::to_string(order) +
                                           " above cap " + std::to_string(order_cap));
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<int> table, int order, std::string name,
                         std::optional<int> declared_identity)
    : name_(std::move(name)), n_(order), table_(std::move(table)) {
  if (n_ < 1 || table_.size() != static_cast<std::size_t>(n_) * n_) {
    throw Error(Errc::parse_error, "table is not a square of size " + std::to_string(n_));
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      int v = op(i, j);
      if (v < 0 || v >= n_) {
        throw Error(Errc::out_of_range_entry, "table[" + std::to_string(i) + "][" +
                                                  std::to_string(j) + "] = " + std::to_string(v));
      }
    }
  }
  auto is_identity = [&](int e) {
    for (int i = 0; i < n_; ++i) {
      if (op(e, i) != i || op(i, e) != i) return false;
    }
    return true;
  };
  if (declared_identity) {
    int e = *declared_identity;
    if (e < 0 || e >= n_ || !is_identity(e)) {
      throw Error(Errc::no_identity,
                  "declared identity " + std::to_string(e) + " is not a two-sided identity");
    }
    identity_ = e;
  } else {
    int found = -1;
    for (int e = 0; e < n_ && found < 0; ++e) {
      if (is_identity(e)) found = e;
    }
    if (found < 0) throw Error(Errc::no_identity, "no two-sided identity element");
    identity_ = found;
  }
  inverses_.assign(n_, -1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (op(i, j) == identity_ && op(j, i) == identity_) {
        inverses_[i] = j;
        break;
      }
    }
    if (inverses_[i] < 0) {
      throw Error(Errc::missing_inverse, "element " + std::to_string(i) + " has no inverse");
    }
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        if (op(op(i, j), k) != op(i, op(j, k))) {
          throw Error(Errc::not_associative, "(" + std::to_string(i) + "," + std::to_string(j) +
                                                 "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

int FiniteGroup::element_order(int a) const {
  int order = 1;
  int x = a;
  while (x != identity_) {
    x = op(x, a);
    ++order;
  }
  return order;
}

std::vector<int> FiniteGroup::element_order_multiset() const {
  std::vector<int> orders(n_);
  for (int i = 0; i < n_; ++i) orders[i] = element_order(i);
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool FiniteGroup::abelian() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (op(i, j) != op(j, i)) return false;
    }
  }
  return true;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return n_ == other.n_ && table_ == other.table_;
}

GroupPtr validate_group(const std::vector<std::vector<int>>& table, std::string name,
                        std::optional<int> declared_identity) {
  int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw Error(Errc::parse_error, "table row " + std::to_string(i) + " has length " +
                                         std::to_string(table[i].size()) + ", expected " +
                                         std::to_string(n));
    }
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  return std::make_shared<FiniteGroup>(std::move(flat), n, std::move(name), declared_identity);
}

GroupPtr cyclic_group(int n, int order_cap) {
  if (n < 1) throw Error(Errc::unsupported_family, "cyclic(" + std::to_string(n) + ")");
  check_cap(n, order_cap, "cyclic(" + std::to_string(n) + ")");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  }
  return std::make_shared<FiniteGroup>(std::move(table), n, "Z" + std::to_string(n));
}

GroupPtr dihedral_group(int n, int order_cap) {
  if (n < 1) throw Error(Errc::unsupported_family, "dihedral(" + std::to_string(n) + ")");
  check_cap(2 * n, order_cap, "dihedral(" + std::to_string(n) + ")");
  // Element a*n + i encodes s^a r^i; (s^a r^i)(s^b r^j) = s^(a+b) r^(i*(-1)^b + j).
  int order = 2 * n;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < 2; ++a) {
    for (int i = 0; i < n; ++i) {
      for (int b = 0; b < 2; ++b) {
        for (int j = 0; j < n; ++j) {
          int rot = ((b == 1 ? -i : i) + j) % n;
          if (rot < 0) rot += n;
          int lhs = a * n + i;
          int rhs = b * n + j;
          table[static_cast<std::size_t>(lhs) * order + rhs] = ((a + b) % 2) * n + rot;
        }
      }
    }
  }
  return std::make_shared<FiniteGroup>(std::move(table), order, "D" + std::to_string(n));
}

GroupPtr symmetric_group(int n, int order_cap) {
  if (n < 1) throw Error(Errc::unsupported_family, "symmetric(" + std::to_string(n) + ")");
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  check_cap(order, order_cap, "symmetric(" + std::to_string(n) + ")");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<int> prod(n);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      for (int x = 0; x < n; ++x) prod[x] = perms[i][perms[j][x]];
      table[static_cast<std::size_t>(i) * order + j] = index_of(prod);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(table), order, "S" + std::to_string(n));
}

GroupPtr quaternion_group(int order_cap) {
  check_cap(8, order_cap, "quaternion8");
  // Index 2k + s encodes (+/-)u_k for units u_0=1, u_1=i, u_2=j, u_3=k; s=1 is the minus sign.
  auto unit_mul = [](int a, int b, int& sign) {
    if (a == 0) return sign = 1, b;
    if (b == 0) return sign = 1, a;
    if (a == b) return sign = -1, 0;
    static const int other[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    // i*j=k, j*k=i, k*i=j are the positive products.
    bool positive = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    sign = positive ? 1 : -1;
    return other[a][b];
  };
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      int ua = x / 2, sa = x % 2 == 0 ? 1 : -1;
      int ub = y / 2, sb = y % 2 == 0 ? 1 : -1;
      int sign = 1;
      int u = unit_mul(ua, ub, sign);
      int s = sa * sb * sign;
      table[static_cast<std::size_t>(x) * 8 + y] = 2 * u + (s == 1 ? 0 : 1);
    }
  }
  return std::make_shared<FiniteGroup>(std::move(table), 8, "Q8");
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, int order_cap) {
  int order = g->order() * h->order();
  check_cap(order, order_cap, "direct product");
  int hn = h->order();
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int prod = g->op(a / hn, b / hn) * hn + h->op(a % hn, b % hn);
      table[static_cast<std::size_t>(a) * order + b] = prod;
    }
  }
  return std::make_shared<FiniteGroup>(std::move(table), order, g->name() + "x" + h->name());
}

GroupPtr builtin_group(const std::string& family, const std::vector<int>& params, int order_cap) {
  auto arg = [&](const char* what) {
    if (params.size() != 1) {
      throw Error(Errc::unsupported_family, std::string(what) + " expects one parameter");
    }
    return params[0];
  };
  if (family == "cyclic") return cyclic_group(arg("cyclic"), order_cap);
  if (family == "dihedral") return dihedral_group(arg("dihedral"), order_cap);
  if (family == "symmetric") return symmetric_group(arg("symmetric"), order_cap);
  if (family == "quaternion8") {
    if (!params.empty()) throw Error(Errc::unsupported_family, "quaternion8 takes no parameters");
    return quaternion_group(order_cap);
  }
  throw Error(Errc::unsupported_family, family);
}

GroupPtr relabeled_copy(const GroupPtr& g, const std::vector<int>& perm) {
  int n = g->order();
  if (static_cast<int>(perm.size()) != n) {
    throw Error(Errc::parse_error, "relabeling permutation has wrong length");
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(perm[i]) * n + perm[j]] = perm[g->op(i, j)];
    }
  }
  return std::make_shared<FiniteGroup>(std::move(table), n, g->name() + "-relabeled");
}

std::vector<int> GroupIso::inverse_map() const {
  std::vector<int> inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
  return inv;
}

bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& map) {
  int n = g.order();
  if (h.order() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    if (map[i] < 0 || map[i] >= n || hit[map[i]]) return false;
    hit[map[i]] = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (map[g.op(i, j)] != h.op(map[i], map[j])) return false;
    }
  }
  return true;
}

namespace {

/// Greedy generating chain: repeatedly adjoin the smallest element outside
/// the subgroup generated so far. At most log2(n) generators.
std::vector<int> generating_chain(const FiniteGroup& g) {
  int n = g.order();
  std::vector<char> in_span(n, 0);
  std::vector<int> span;
  auto close_with = [&](int x) {
    std::vector<int> queue;
    if (!in_span[x]) {
      in_span[x] = 1;
      span.push_back(x);
      queue.push_back(x);
    }
    while (!queue.empty()) {
      int t = queue.back();
      queue.pop_back();
      for (std::size_t s = 0; s < span.size(); ++s) {
        for (int prod : {g.op(t, span[s]), g.op(span[s], t)}) {
          if (!in_span[prod]) {
            in_span[prod] = 1;
            span.push_back(prod);
            queue.push_back(prod);
          }
        }
      }
    }
  };
  close_with(g.identity());
  std::vector<int> gens;
  for (int x = 0; x < n; ++x) {
    if (!in_span[x]) {
      gens.push_back(x);
      close_with(x);
    }
  }
  return gens;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<int> gens;
  std::vector<int> g_orders;
  std::vector<int> h_orders;
  std::vector<int> mapped;    // image per source element, -1 if unset
  std::vector<int> used;      // target element already an image
  std::vector<int> assigned;  // trail of source elements with images, in order
  std::vector<std::vector<int>> results;

  IsoSearch(const FiniteGroup& g_, const FiniteGroup& h_) : g(g_), h(h_) {
    int n = g.order();
    gens = generating_chain(g);
    g_orders.resize(n);
    h_orders.resize(n);
    for (int i = 0; i < n; ++i) {
      g_orders[i] = g.element_order(i);
      h_orders[i] = h.element_order(i);
    }
    mapped.assign(n, -1);
    used.assign(n, 0);
    assign(g.identity(), h.identity());
  }

  void assign(int x, int y) {
    mapped[x] = y;
    used[y] = 1;
    assigned.push_back(x);
  }

  void rollback(std::size_t mark) {
    while (assigned.size() > mark) {
      int x = assigned.back();
      assigned.pop_back();
      used[mapped[x]] = 0;
      mapped[x] = -1;
    }
  }

  /// Propagates map[a*b] = map[a]*map[b] over all pairs of assigned elements.
  /// Returns false on a conflict (value clash or image reuse).
  bool close() {
    for (std::size_t qi = 0; qi < assigned.size(); ++qi) {
      int a = assigned[qi];
      for (std::size_t sj = 0; sj < assigned.size(); ++sj) {
        int b = assigned[sj];
        for (auto [c, hc] : {std::pair{g.op(a, b), h.op(mapped[a], mapped[b])},
                             std::pair{g.op(b, a), h.op(mapped[b], mapped[a])}}) {
          if (mapped[c] == -1) {
            if (used[hc]) return false;
            assign(c, hc);
          } else if (mapped[c] != hc) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(std::size_t k) {
    if (k == gens.size()) {
      if (is_isomorphism(g, h, mapped)) results.push_back(mapped);
      return;
    }
    int gen = gens[k];
    if (mapped[gen] != -1) {
      search(k + 1);  // already forced by closure
      return;
    }
    for (int y = 0; y < h.order(); ++y) {
      if (used[y] || h_orders[y] != g_orders[gen]) continue;
      std::size_t mark = assigned.size();
      assign(gen, y);
      if (close()) search(k + 1);
      rollback(mark);
    }
  }
};

}  // namespace

std::vector<GroupIso> enumerate_isomorphisms(const GroupPtr& g, const GroupPtr& h, int order_cap) {
  check_cap(g->order(), order_cap, describe(*g));
  check_cap(h->order(), order_cap, describe(*h));
  std::vector<GroupIso> out;
  if (g->order() != h->order()) return out;
  if (g->element_order_multiset() != h->element_order_multiset()) return out;
  IsoSearch search(*g, *h);
  search.search(0);
  std::sort(search.results.begin(), search.results.end());
  out.reserve(search.results.size());
  for (auto& map : search.results) out.push_back(GroupIso{g, h, std::move(map)});
  return out;
}

std::vector<GroupIso> enumerate_automorphisms(const GroupPtr& g, int order_cap) {
  return enumerate_isomorphisms(g, g, order_cap);
}

GroupIso identity_iso(const GroupPtr& g) {
  std::vector<int> map(g->order());
  std::iota(map.begin(), map.end(), 0);
  return GroupIso{g, g, std::move(map)};
}

GroupIso compose(const GroupIso& outer, const GroupIso& inner) {
  if (!inner.target->same_table(*outer.source)) {
    throw Error(Errc::carrier_mismatch, "composition of isomorphisms over different carriers");
  }
  std::vector<int> map(inner.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = outer.map[inner.map[i]];
  return GroupIso{inner.source, outer.target, std::move(map)};
}

GroupIso inverse(const GroupIso& iso) {
  return GroupIso{iso.target, iso.source, iso.inverse_map()};
}

std::string format_multiset(const std::vector<int>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(values[i]);
  }
  return s + "}";
}

}  // namespace liptrop
