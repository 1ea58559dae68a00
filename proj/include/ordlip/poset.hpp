#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ordlip/context.hpp"

namespace ordlip {

using Matrix = std::vector<std::vector<double>>;

// ---------------------------------------------------------------------------
// Finite metric

struct FiniteMetric {
  int n = 0;
  Matrix dist;  // n x n, validated
  double at(int i, int j) const { return dist[i][j]; }
};

enum class MetricViolationKind {
  NonSquare,
  NegativeEntry,  // also covers zero off-diagonal entries
  NonZeroDiagonal,
  Asymmetric,
  TriangleViolation,
};

struct MetricViolation {
  MetricViolationKind kind;
  int i = -1, j = -1, k = -1;  // triangle: d(i,j) > d(i,k) + d(k,j)
  double lhs = 0.0, rhs = 0.0;
};

struct MetricValidation {
  std::optional<FiniteMetric> metric;
  std::vector<MetricViolation> violations;
  bool ok() const { return metric.has_value(); }
};

namespace detail {
inline constexpr int kMaxReportedViolations = 256;
}

inline MetricValidation validate_metric(const Matrix& dist, const Context& ctx = {}) {
  MetricValidation out;
  const int n = static_cast<int>(dist.size());
  if (n == 0) {
    out.violations.push_back({MetricViolationKind::NonSquare, -1, -1, -1, 0.0, 0.0});
    return out;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n) {
      out.violations.push_back(
          {MetricViolationKind::NonSquare, i, static_cast<int>(dist[i].size()), -1, 0.0, 0.0});
      return out;  // shape is broken; entry checks would index out of range
    }
  }
  auto push = [&](MetricViolation v) {
    if (static_cast<int>(out.violations.size()) < detail::kMaxReportedViolations)
      out.violations.push_back(v);
  };
  const double eps = ctx.epsilon;
  for (int i = 0; i < n; ++i) {
    if (std::abs(dist[i][i]) > eps)
      push({MetricViolationKind::NonZeroDiagonal, i, i, -1, dist[i][i], 0.0});
    for (int j = 0; j < n; ++j) {
      if (i != j && dist[i][j] <= eps)
        push({MetricViolationKind::NegativeEntry, i, j, -1, dist[i][j], 0.0});
      if (i < j && std::abs(dist[i][j] - dist[j][i]) > eps)
        push({MetricViolationKind::Asymmetric, i, j, -1, dist[i][j], dist[j][i]});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double lhs = dist[i][j];
        const double rhs = dist[i][k] + dist[k][j];
        if (lhs > rhs + eps) push({MetricViolationKind::TriangleViolation, i, j, k, lhs, rhs});
      }
  if (out.violations.empty()) out.metric = FiniteMetric{n, dist};
  return out;
}

// ---------------------------------------------------------------------------
// Partial order, stored as the full boolean matrix of x >= y

struct OrderRelation {
  int n = 0;
  std::vector<std::uint8_t> geq;  // row-major, geq[i*n+j] != 0 iff i >= j
  bool ge(int i, int j) const { return geq[static_cast<std::size_t>(i) * n + j] != 0; }
};

enum class OrderViolationKind { NonSquare, NotReflexive, NotAntisymmetric, NotTransitive };

struct OrderViolation {
  OrderViolationKind kind;
  int i = -1, j = -1, k = -1;
};

struct OrderValidation {
  std::optional<OrderRelation> order;
  std::vector<OrderViolation> violations;
  bool ok() const { return order.has_value(); }
};

// take_closure first closes the relation reflexively and transitively; the
// antisymmetry check then runs on the closed relation.
inline OrderValidation validate_order(std::vector<std::vector<bool>> geq, bool take_closure = false,
                                      const Context& = {}) {
  OrderValidation out;
  const int n = static_cast<int>(geq.size());
  if (n == 0) {
    out.violations.push_back({OrderViolationKind::NonSquare, -1, -1, -1});
    return out;
  }
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(geq[i].size()) != n) {
      out.violations.push_back({OrderViolationKind::NonSquare, i, static_cast<int>(geq[i].size()), -1});
      return out;
    }
  if (take_closure) {
    for (int i = 0; i < n; ++i) geq[i][i] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        if (!geq[i][k]) continue;
        for (int j = 0; j < n; ++j)
          if (geq[k][j]) geq[i][j] = true;
      }
  }
  auto push = [&](OrderViolation v) {
    if (static_cast<int>(out.violations.size()) < detail::kMaxReportedViolations)
      out.violations.push_back(v);
  };
  for (int i = 0; i < n; ++i)
    if (!geq[i][i]) push({OrderViolationKind::NotReflexive, i, -1, -1});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (geq[i][j] && geq[j][i]) push({OrderViolationKind::NotAntisymmetric, i, j, -1});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!geq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (geq[j][k] && !geq[i][k]) push({OrderViolationKind::NotTransitive, i, j, k});
    }
  if (!out.violations.empty()) return out;
  OrderRelation rel;
  rel.n = n;
  rel.geq.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (geq[i][j]) rel.geq[static_cast<std::size_t>(i) * n + j] = 1;
  out.order = std::move(rel);
  return out;
}

inline OrderValidation order_from_pairs(int n, const std::vector<std::pair<int, int>>& geq_pairs,
                                        bool take_closure = true, const Context& ctx = {}) {
  for (auto [i, j] : geq_pairs)
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw Error(Errc::IndexOutOfRange,
                  "order pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 0.." +
                      std::to_string(n - 1));
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) geq[i][i] = true;
  for (auto [i, j] : geq_pairs) geq[i][j] = true;
  return validate_order(std::move(geq), take_closure, ctx);
}

// x >=* y ("bullet"): not (y >= x). Irreflexive; equals the strict part on
// total orders, and additionally relates incomparable pairs in both directions.
inline std::vector<std::uint8_t> bullet_relation(const OrderRelation& ord) {
  const int n = ord.n;
  std::vector<std::uint8_t> b(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b[static_cast<std::size_t>(i) * n + j] = ord.ge(j, i) ? 0 : 1;
  return b;
}

// Strict part: x > y iff x >= y and x != y.
inline std::vector<std::uint8_t> strict_relation(const OrderRelation& ord) {
  const int n = ord.n;
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s[static_cast<std::size_t>(i) * n + j] = (i != j && ord.ge(i, j)) ? 1 : 0;
  return s;
}

// ---------------------------------------------------------------------------
// Carrier

struct MetricPoset {
  FiniteMetric metric;
  OrderRelation order;
  std::vector<std::string> labels;  // optional; empty or size n
  int size() const { return metric.n; }
  double d(int i, int j) const { return metric.dist[i][j]; }
  bool ge(int i, int j) const { return order.ge(i, j); }
};

inline MetricPoset make_metric_poset(FiniteMetric metric, OrderRelation order,
                                     std::vector<std::string> labels = {}) {
  if (metric.n != order.n)
    throw Error(Errc::SizeMismatch, "metric has " + std::to_string(metric.n) + " points, order has " +
                                        std::to_string(order.n));
  if (!labels.empty() && static_cast<int>(labels.size()) != metric.n)
    throw Error(Errc::SizeMismatch, "labels size does not match point count");
  return MetricPoset{std::move(metric), std::move(order), std::move(labels)};
}

// Sorted, duplicate-free set of point indices.
struct PointSet {
  std::vector<int> members;
  int size() const { return static_cast<int>(members.size()); }
  bool empty() const { return members.empty(); }
  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline PointSet make_point_set(std::vector<int> indices, int n = -1) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] == indices[i - 1])
      throw Error(Errc::DuplicatePoint, "point " + std::to_string(indices[i]) + " listed twice");
  if (n >= 0)
    for (int x : indices)
      if (x < 0 || x >= n)
        throw Error(Errc::IndexOutOfRange,
                    "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
  return PointSet{std::move(indices)};
}

struct PrincipalSets {
  PointSet down;  // { z : x >= z }
  PointSet up;    // { z : z >= x }
};

inline PrincipalSets principal_sets(const MetricPoset& poset, int x) {
  const int n = poset.size();
  if (x < 0 || x >= n)
    throw Error(Errc::IndexOutOfRange, "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
  PrincipalSets out;
  for (int z = 0; z < n; ++z) {
    if (poset.ge(x, z)) out.down.members.push_back(z);
    if (poset.ge(z, x)) out.up.members.push_back(z);
  }
  return out;
}

enum class ClosureDirection { Down, Up };

inline PointSet monotone_closure(const MetricPoset& poset, const PointSet& s, ClosureDirection dir) {
  const int n = poset.size();
  for (int x : s.members)
    if (x < 0 || x >= n)
      throw Error(Errc::IndexOutOfRange, "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
  std::vector<bool> in(n, false);
  for (int x : s.members)
    for (int z = 0; z < n; ++z) {
      const bool rel = dir == ClosureDirection::Down ? poset.ge(x, z) : poset.ge(z, x);
      if (rel) in[z] = true;
    }
  PointSet out;
  for (int z = 0; z < n; ++z)
    if (in[z]) out.members.push_back(z);
  return out;
}

// Induced sub-poset on s; point k of the result is s.members[k].
inline MetricPoset restrict_to(const MetricPoset& poset, const PointSet& s) {
  if (s.empty()) throw Error(Errc::EmptySubset, "cannot restrict to an empty subset");
  const int n = poset.size();
  for (int x : s.members)
    if (x < 0 || x >= n)
      throw Error(Errc::IndexOutOfRange, "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
  const int m = s.size();
  MetricPoset out;
  out.metric.n = m;
  out.metric.dist.assign(m, std::vector<double>(m, 0.0));
  out.order.n = m;
  out.order.geq.assign(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      out.metric.dist[a][b] = poset.d(s.members[a], s.members[b]);
      out.order.geq[static_cast<std::size_t>(a) * m + b] = poset.ge(s.members[a], s.members[b]) ? 1 : 0;
    }
  if (!poset.labels.empty()) {
    out.labels.reserve(m);
    for (int x : s.members) out.labels.push_back(poset.labels[x]);
  }
  return out;
}

inline double diameter(const MetricPoset& poset) {
  double d = 0.0;
  for (int i = 0; i < poset.size(); ++i)
    for (int j = i + 1; j < poset.size(); ++j) d = std::max(d, poset.d(i, j));
  return d;
}

}  // namespace ordlip
