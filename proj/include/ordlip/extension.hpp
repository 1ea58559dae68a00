#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ordlip/poset.hpp"

namespace ordlip {

// ---------------------------------------------------------------------------
// Partial functions f : S -> R^m with a Lipschitz budget K

struct PartialFunction {
  PointSet domain;                          // S, sorted
  std::vector<std::vector<double>> values;  // row k belongs to domain.members[k]
  double K = 1.0;
  int width() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }
};

inline PartialFunction make_partial_function(std::vector<int> domain,
                                             std::vector<std::vector<double>> values, double K) {
  if (domain.size() != values.size())
    throw Error(Errc::SizeMismatch, "domain and value row counts differ");
  std::vector<std::size_t> perm(domain.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
  PartialFunction f;
  f.K = K;
  f.domain.members.reserve(domain.size());
  f.values.reserve(values.size());
  for (std::size_t k : perm) {
    if (!f.domain.members.empty() && f.domain.members.back() == domain[k])
      throw Error(Errc::DuplicatePoint, "domain point " + std::to_string(domain[k]) + " listed twice");
    f.domain.members.push_back(domain[k]);
    f.values.push_back(std::move(values[k]));
  }
  return f;
}

// Scalar convenience: one value per domain point.
inline PartialFunction make_scalar_function(std::vector<int> domain, const std::vector<double>& values,
                                            double K) {
  std::vector<std::vector<double>> rows;
  rows.reserve(values.size());
  for (double v : values) rows.push_back({v});
  return make_partial_function(std::move(domain), std::move(rows), K);
}

enum class FunctionViolationKind { Monotonicity, Lipschitz };

struct FunctionViolation {
  FunctionViolationKind kind;
  int x = -1, y = -1, coord = 0;
  double lhs = 0.0, rhs = 0.0;  // Monotonicity: f(x)(t) < f(y)(t) though x >= y
  double ratio = 0.0;           // Lipschitz: |f(x)-f(y)| / (K d(x,y))
};

struct FunctionValidation {
  std::vector<FunctionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Structural defects (empty domain, negative K, ragged rows, bad indices)
// throw; order/Lipschitz defects are reported.
inline FunctionValidation validate_input_function(const MetricPoset& poset, const PartialFunction& f,
                                                  const Context& ctx = {}) {
  const int n = poset.size();
  if (f.domain.empty()) throw Error(Errc::EmptyDomain, "partial function has empty domain");
  if (f.K < 0) throw Error(Errc::NegativeK, "Lipschitz budget K = " + std::to_string(f.K));
  if (f.values.size() != f.domain.members.size())
    throw Error(Errc::WidthMismatch, "value row count does not match domain size");
  const int m = f.width();
  if (m == 0) throw Error(Errc::WidthMismatch, "value rows are empty");
  for (const auto& row : f.values)
    if (static_cast<int>(row.size()) != m)
      throw Error(Errc::WidthMismatch, "value rows have inconsistent widths");
  for (int x : f.domain.members)
    if (x < 0 || x >= n)
      throw Error(Errc::IndexOutOfRange, "domain point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));

  FunctionValidation out;
  const double eps = ctx.epsilon;
  const int s = f.domain.size();
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      if (a == b) continue;
      const int x = f.domain.members[a];
      const int y = f.domain.members[b];
      for (int t = 0; t < m; ++t) {
        if (poset.ge(x, y) && f.values[a][t] < f.values[b][t] - eps)
          out.violations.push_back({FunctionViolationKind::Monotonicity, x, y, t, f.values[a][t],
                                    f.values[b][t], 0.0});
        if (a < b) {
          const double gap = std::abs(f.values[a][t] - f.values[b][t]);
          const double budget = f.K * poset.d(x, y);
          if (gap > budget + eps)
            out.violations.push_back({FunctionViolationKind::Lipschitz, x, y, t, gap, budget,
                                      budget > 0 ? gap / budget : kInf});
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Admissible interval at a point, per coordinate

struct AdmissibleInterval {
  int point = -1, coord = 0;
  double a = -kInf;     // sup of f over S intersect (point down-set)
  double b = kInf;      // inf of f over S intersect (point up-set)
  double alpha = -kInf; // sup of f(z) - K d(point,z) over S
  double beta = kInf;   // inf of f(y) + K d(point,y) over S
  double lo() const { return std::max(a, alpha); }
  double hi() const { return std::min(b, beta); }
  bool empty(double eps) const { return lo() > hi() + eps; }
};

namespace detail {

// Core interval computation against an explicit working set. Rows of `values`
// are indexed by point, `active[p]` marks points currently carrying a value.
inline AdmissibleInterval interval_against(const MetricPoset& poset,
                                           const std::vector<std::vector<double>>& values,
                                           const std::vector<char>& active, double K, int x, int t) {
  AdmissibleInterval iv;
  iv.point = x;
  iv.coord = t;
  const int n = poset.size();
  for (int z = 0; z < n; ++z) {
    if (!active[z]) continue;
    const double v = values[z][t];
    if (poset.ge(x, z)) iv.a = std::max(iv.a, v);
    if (poset.ge(z, x)) iv.b = std::min(iv.b, v);
    iv.alpha = std::max(iv.alpha, v - K * poset.d(x, z));
    iv.beta = std::min(iv.beta, v + K * poset.d(x, z));
  }
  return iv;
}

}  // namespace detail

inline AdmissibleInterval admissible_interval(const MetricPoset& poset, const PartialFunction& f, int x,
                                              int t, const Context& ctx = {}) {
  (void)ctx;
  const int n = poset.size();
  if (x < 0 || x >= n)
    throw Error(Errc::IndexOutOfRange, "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
  if (f.domain.contains(x))
    throw Error(Errc::PointInDomain, "point " + std::to_string(x) + " already carries a value");
  if (t < 0 || t >= f.width())
    throw Error(Errc::IndexOutOfRange, "coordinate " + std::to_string(t) + " outside value width");
  std::vector<std::vector<double>> values(n);
  std::vector<char> active(n, 0);
  for (int k = 0; k < f.domain.size(); ++k) {
    values[f.domain.members[k]] = f.values[k];
    active[f.domain.members[k]] = 1;
  }
  return detail::interval_against(poset, values, active, f.K, x, t);
}

// ---------------------------------------------------------------------------
// Sequential one-point extension

enum class Selector { Min, Max, Mid };
enum class PointOrder { Ascending, Descending, Custom };

struct ExtensionPolicy {
  Selector selector = Selector::Min;
  PointOrder point_order = PointOrder::Ascending;
  std::vector<int> custom_order;  // permutation of all points, or of X minus S
};

enum class ExtensionStatus { Feasible, Infeasible };

struct ExtensionOutcome {
  ExtensionStatus status = ExtensionStatus::Feasible;
  std::vector<std::vector<double>> F;              // n x m; rows on S copied from f
  std::vector<std::pair<int, int>> infeasible_points;  // (point, coord) with empty interval
  ExtensionPolicy policy_used;
  std::vector<int> visit_order;  // realized order over X minus S
};

namespace detail {

inline double select_mid(double lo, double hi) {
  const bool lo_inf = lo == -kInf;
  const bool hi_inf = hi == kInf;
  if (lo_inf && hi_inf) return 0.0;
  if (lo_inf) return hi - 1.0;
  if (hi_inf) return lo + 1.0;
  return 0.5 * (lo + hi);
}

inline double select_theta(Selector sel, double lo, double hi) {
  switch (sel) {
    case Selector::Min: return lo != -kInf ? lo : select_mid(lo, hi);
    case Selector::Max: return hi != kInf ? hi : select_mid(lo, hi);
    case Selector::Mid: return select_mid(lo, hi);
  }
  return select_mid(lo, hi);
}

inline std::vector<int> visit_order_for(const ExtensionPolicy& policy, int n, const PointSet& domain) {
  std::vector<int> missing;
  for (int x = 0; x < n; ++x)
    if (!domain.contains(x)) missing.push_back(x);
  switch (policy.point_order) {
    case PointOrder::Ascending:
      return missing;
    case PointOrder::Descending:
      std::reverse(missing.begin(), missing.end());
      return missing;
    case PointOrder::Custom: {
      const auto& perm = policy.custom_order;
      auto is_perm_of = [](std::vector<int> v, const std::vector<int>& ref) {
        std::sort(v.begin(), v.end());
        return v == ref;
      };
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      std::vector<int> result;
      if (perm.size() == static_cast<std::size_t>(n) && is_perm_of(perm, all)) {
        for (int x : perm)
          if (!domain.contains(x)) result.push_back(x);
        return result;
      }
      if (perm.size() == missing.size() && is_perm_of(perm, missing)) return perm;
      throw Error(Errc::InvalidPolicy, "custom order must be a permutation of all points or of X minus S");
    }
  }
  return missing;
}

}  // namespace detail

// One-point-at-a-time extension: each visited point receives, per coordinate,
// a value from its admissible interval against the working domain, then joins
// that domain. An empty interval is recorded and bridged by the midpoint of
// the swapped endpoints so the sweep can continue.
inline ExtensionOutcome extend(const MetricPoset& poset, const PartialFunction& f,
                               const ExtensionPolicy& policy = {}, const Context& ctx = {}) {
  const auto validation = validate_input_function(poset, f, ctx);
  if (!validation.ok()) {
    std::ostringstream msg;
    msg << "input function invalid (" << validation.violations.size() << " violation(s); first: ";
    const auto& v = validation.violations.front();
    msg << (v.kind == FunctionViolationKind::Monotonicity ? "monotonicity" : "Lipschitz") << " at pair ("
        << v.x << "," << v.y << ") coord " << v.coord << ")";
    throw Error(Errc::InvalidPartialFunction, msg.str());
  }

  const int n = poset.size();
  const int m = f.width();
  ExtensionOutcome out;
  out.policy_used = policy;
  out.F.assign(n, std::vector<double>(m, 0.0));
  std::vector<char> active(n, 0);
  for (int k = 0; k < f.domain.size(); ++k) {
    out.F[f.domain.members[k]] = f.values[k];  // exact copy
    active[f.domain.members[k]] = 1;
  }
  out.visit_order = detail::visit_order_for(policy, n, f.domain);

  for (int x : out.visit_order) {
    for (int t = 0; t < m; ++t) {
      const auto iv = detail::interval_against(poset, out.F, active, f.K, x, t);
      double lo = iv.lo(), hi = iv.hi();
      if (lo > hi + ctx.epsilon) {
        out.status = ExtensionStatus::Infeasible;
        out.infeasible_points.emplace_back(x, t);
        out.F[x][t] = detail::select_mid(std::min(lo, hi), std::max(lo, hi));
      } else {
        out.F[x][t] = detail::select_theta(policy.selector, lo, hi);
      }
    }
    active[x] = 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Difference-constraint oracle

struct OracleSolution {
  bool feasible = false;
  std::vector<std::vector<double>> Fmin, Fmax;  // n x m envelopes
};

namespace detail {

// Arc weight u -> v bounds F(v) - F(u): zero when u >= v, else K d(u,v).
inline std::vector<std::vector<double>> constraint_shortest_paths(const MetricPoset& poset, double K) {
  const int n = poset.size();
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[i][j] = (i == j || poset.ge(i, j)) ? 0.0 : K * poset.d(i, j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double wik = w[i][k];
      for (int j = 0; j < n; ++j)
        if (wik + w[k][j] < w[i][j]) w[i][j] = wik + w[k][j];
    }
  return w;
}

}  // namespace detail

// Ground-truth solver: tightest monotone K-Lipschitz envelopes through the
// constraint graph. Feasible iff Fmin <= Fmax pointwise and both envelopes
// agree with f on S; on success the S rows are snapped to f exactly.
inline OracleSolution oracle_solve(const MetricPoset& poset, const PartialFunction& f,
                                   const Context& ctx = {}) {
  const auto validation = validate_input_function(poset, f, ctx);
  if (!validation.ok())
    throw Error(Errc::InvalidPartialFunction, "input function fails monotonicity/Lipschitz validation");

  const int n = poset.size();
  const int m = f.width();
  const auto sp = detail::constraint_shortest_paths(poset, f.K);
  OracleSolution sol;
  sol.Fmin.assign(n, std::vector<double>(m, -kInf));
  sol.Fmax.assign(n, std::vector<double>(m, kInf));
  for (int x = 0; x < n; ++x)
    for (int t = 0; t < m; ++t) {
      double lo = -kInf, hi = kInf;
      for (int k = 0; k < f.domain.size(); ++k) {
        const int s = f.domain.members[k];
        hi = std::min(hi, f.values[k][t] + sp[s][x]);
        lo = std::max(lo, f.values[k][t] - sp[x][s]);
      }
      sol.Fmin[x][t] = lo;
      sol.Fmax[x][t] = hi;
    }
  sol.feasible = true;
  for (int x = 0; x < n && sol.feasible; ++x)
    for (int t = 0; t < m; ++t)
      if (sol.Fmin[x][t] > sol.Fmax[x][t] + ctx.epsilon) {
        sol.feasible = false;
        break;
      }
  for (int k = 0; k < f.domain.size() && sol.feasible; ++k) {
    const int s = f.domain.members[k];
    for (int t = 0; t < m; ++t)
      if (std::abs(sol.Fmax[s][t] - f.values[k][t]) > ctx.epsilon ||
          std::abs(sol.Fmin[s][t] - f.values[k][t]) > ctx.epsilon) {
        sol.feasible = false;
        break;
      }
  }
  if (sol.feasible)
    for (int k = 0; k < f.domain.size(); ++k) {
      const int s = f.domain.members[k];
      sol.Fmin[s] = f.values[k];
      sol.Fmax[s] = f.values[k];
    }
  return sol;
}

// ---------------------------------------------------------------------------
// Range clamp: max{min{F, M}, m}. Preserves monotonicity and the budget.

inline std::vector<std::vector<double>> clamp_to_range(std::vector<std::vector<double>> values, double lo,
                                                       double hi) {
  if (lo > hi)
    throw Error(Errc::InvertedRange, "range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  for (auto& row : values)
    for (double& v : row) v = std::max(std::min(v, hi), lo);
  return values;
}

}  // namespace ordlip
