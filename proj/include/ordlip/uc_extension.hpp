#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ordlip/extension.hpp"
#include "ordlip/radiality.hpp"

namespace ordlip {

// Modulus of continuity of a scalar f on S, sampled at the distances realized
// anywhere in X (plus 0) so that phi(d(x,y)) later lands on stored knots.
struct ModulusSample {
  std::vector<double> breakpoints;  // sorted, breakpoints[0] == 0
  std::vector<double> omega;        // omega[k] = max |f(x)-f(y)| over S pairs with d <= breakpoints[k]
};

inline ModulusSample modulus_of_continuity(const MetricPoset& poset, const PartialFunction& f,
                                           const Context& ctx = {}) {
  validate_input_function(poset, f, ctx);  // structural throws only matter here
  if (f.width() != 1)
    throw Error(Errc::VectorNotSupported, "modulus of continuity is defined for scalar functions");
  if (f.domain.size() < 2)
    throw Error(Errc::TooFewPoints, "modulus needs at least two domain points");

  const int n = poset.size();
  ModulusSample ms;
  ms.breakpoints.push_back(0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ms.breakpoints.push_back(poset.d(i, j));
  std::sort(ms.breakpoints.begin(), ms.breakpoints.end());
  ms.breakpoints.erase(std::unique(ms.breakpoints.begin(), ms.breakpoints.end()), ms.breakpoints.end());

  // S pairs sorted by distance; sweep accumulates the running max gap.
  std::vector<std::pair<double, double>> pairs;  // (distance, |gap|)
  for (int a = 0; a < f.domain.size(); ++a)
    for (int b = a + 1; b < f.domain.size(); ++b)
      pairs.emplace_back(poset.d(f.domain.members[a], f.domain.members[b]),
                         std::abs(f.values[a][0] - f.values[b][0]));
  std::sort(pairs.begin(), pairs.end());

  ms.omega.assign(ms.breakpoints.size(), 0.0);
  double running = 0.0;
  std::size_t next = 0;
  for (std::size_t k = 0; k < ms.breakpoints.size(); ++k) {
    while (next < pairs.size() && pairs[next].first <= ms.breakpoints[k]) {
      running = std::max(running, pairs[next].second);
      ++next;
    }
    ms.omega[k] = running;
  }
  return ms;
}

// Least nondecreasing concave function through (0,0) dominating the sampled
// modulus: the upper concave hull of the sample points, continued past the
// last breakpoint with the final hull slope.
struct ConcaveMajorant {
  std::vector<std::pair<double, double>> vertices;  // (t, phi(t)), t strictly increasing from 0
  bool degenerate = false;                          // omega identically zero

  double value(double t) const {
    if (degenerate || vertices.size() < 2) return 0.0;
    if (t <= 0.0) return 0.0;
    std::size_t k = 1;
    while (k + 1 < vertices.size() && vertices[k].first < t) ++k;
    const auto& [t0, p0] = vertices[k - 1];
    const auto& [t1, p1] = vertices[k];
    const double slope = (p1 - p0) / (t1 - t0);
    if (t <= t1) return p0 + slope * (t - t0);
    return p1 + slope * (t - t1);  // past the last vertex: final slope
  }

  double final_slope() const {
    if (degenerate || vertices.size() < 2) return 0.0;
    const auto& [t0, p0] = vertices[vertices.size() - 2];
    const auto& [t1, p1] = vertices[vertices.size() - 1];
    return (p1 - p0) / (t1 - t0);
  }

  // Line a t + b through the last hull segment; by concavity it majorizes the
  // modulus everywhere, giving the large-distance constant K_delta = a + b/delta.
  std::pair<double, double> affine_majorant() const {
    if (degenerate || vertices.size() < 2) return {0.0, 0.0};
    const double a = final_slope();
    const auto& [t1, p1] = vertices.back();
    return {a, p1 - a * t1};
  }
};

inline ConcaveMajorant concave_affine_envelope(const ModulusSample& ms) {
  ConcaveMajorant phi;
  if (ms.breakpoints.size() != ms.omega.size() || ms.breakpoints.empty())
    throw Error(Errc::SizeMismatch, "modulus sample arrays disagree");
  double peak = 0.0;
  for (double w : ms.omega) peak = std::max(peak, w);
  if (peak <= 0.0) {
    phi.degenerate = true;
    phi.vertices = {{0.0, 0.0}};
    return phi;
  }
  std::vector<std::pair<double, double>> pts;
  if (ms.breakpoints.front() != 0.0) pts.emplace_back(0.0, 0.0);
  for (std::size_t k = 0; k < ms.breakpoints.size(); ++k)
    pts.emplace_back(ms.breakpoints[k], ms.omega[k]);
  // Upper hull over points with increasing t: pop the middle point whenever it
  // sits on or below the chord, so segment slopes strictly decrease.
  std::vector<std::pair<double, double>>& hull = phi.vertices;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& s2 = hull[hull.size() - 2];
      const auto& s1 = hull[hull.size() - 1];
      if ((s1.second - s2.second) * (p.first - s1.first) <=
          (p.second - s1.second) * (s1.first - s2.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return phi;
}

// D = phi o d. Positivity needs a nondegenerate majorant; order is untouched,
// so monotone-distance inequalities (hence radiality) survive, and concavity
// through the origin gives subadditivity for the triangle inequality.
inline MetricPoset remetrize(const MetricPoset& poset, const ConcaveMajorant& phi, const Context& ctx = {}) {
  if (phi.degenerate)
    throw Error(Errc::DegenerateMajorant, "cannot remetrize with an identically zero majorant");
  const int n = poset.size();
  Matrix D(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) D[i][j] = D[j][i] = phi.value(poset.d(i, j));
  auto validation = validate_metric(D, ctx);
  if (!validation.ok())
    throw Error(Errc::InvalidMetric, "remetrized matrix failed metric validation");
  MetricPoset out;
  out.metric = std::move(*validation.metric);
  out.order = poset.order;
  out.labels = poset.labels;
  return out;
}

struct ModulusCertificate {
  double max_violation = -kInf;  // max over pairs of |F(x)-F(y)| - phi(d(x,y))
  int x = -1, y = -1;
  bool holds = false;
};

struct UniformExtension {
  ExtensionOutcome outcome;
  ModulusSample modulus;
  ConcaveMajorant majorant;
  MetricPoset remetrized;
  ModulusCertificate certificate;
  bool constant_shortcircuit = false;
};

// Monotone extension with uniform-continuity control: remetrize by the concave
// majorant of the modulus, extend at budget 1 there, certify
// |F(x)-F(y)| <= phi(d(x,y)) on every pair of the original space.
inline UniformExtension extend_uniform(const MetricPoset& poset, const PartialFunction& f,
                                       const Context& ctx = {}) {
  if (f.width() != 1)
    throw Error(Errc::VectorNotSupported, "uniform extension is defined for scalar functions");
  {
    const auto report = check_radiality(poset, ctx, ScanOptions{1});
    if (!report.radial) throw Error(Errc::NotRadial, "extend_uniform requires a radial poset");
  }
  {
    // Monotonicity is required; no Lipschitz budget is assumed, so budget
    // violations against f.K are ignored here.
    const auto validation = validate_input_function(poset, f, ctx);
    for (const auto& v : validation.violations)
      if (v.kind == FunctionViolationKind::Monotonicity)
        throw Error(Errc::InvalidPartialFunction, "input function is not order-preserving on its domain");
  }

  UniformExtension out;
  bool constant = true;
  for (const auto& row : f.values)
    if (row[0] != f.values[0][0]) {
      constant = false;
      break;
    }
  if (constant) {
    out.constant_shortcircuit = true;
    const double c = f.values[0][0];
    out.outcome.status = ExtensionStatus::Feasible;
    out.outcome.F.assign(poset.size(), {c});
    for (int k = 0; k < f.domain.size(); ++k) out.outcome.F[f.domain.members[k]] = f.values[k];
    if (f.domain.size() >= 2) out.modulus = modulus_of_continuity(poset, f, ctx);
    else out.modulus = ModulusSample{{0.0}, {0.0}};
    out.majorant.degenerate = true;
    out.majorant.vertices = {{0.0, 0.0}};
    out.remetrized = poset;
    out.certificate = {0.0, -1, -1, true};
    return out;
  }

  out.modulus = modulus_of_continuity(poset, f, ctx);
  out.majorant = concave_affine_envelope(out.modulus);
  out.remetrized = remetrize(poset, out.majorant, ctx);

  PartialFunction unit = f;
  unit.K = 1.0;
  out.outcome = extend(out.remetrized, unit, ExtensionPolicy{}, ctx);

  out.certificate.max_violation = -kInf;
  for (int i = 0; i < poset.size(); ++i)
    for (int j = i + 1; j < poset.size(); ++j) {
      const double excess = std::abs(out.outcome.F[i][0] - out.outcome.F[j][0]) -
                            out.majorant.value(poset.d(i, j));
      if (excess > out.certificate.max_violation) {
        out.certificate.max_violation = excess;
        out.certificate.x = i;
        out.certificate.y = j;
      }
    }
  out.certificate.holds = out.outcome.status == ExtensionStatus::Feasible &&
                          out.certificate.max_violation <= ctx.epsilon;
  return out;
}

}  // namespace ordlip
