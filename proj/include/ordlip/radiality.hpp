#pragma once

#include <string>
#include <vector>

#include "ordlip/extension.hpp"
#include "ordlip/poset.hpp"

namespace ordlip {

enum class ViolationKind { RC, D1, D2 };

// A triple whose distance inequality fails: lhs < rhs - epsilon.
//   RC: x > y > z with d(x,z) < max{d(x,y), d(y,z)}
//   D1: x >=* y > z with d(x,z) < d(x,y)
//   D2: x > y >=* z with d(x,z) < d(y,z)
struct ViolationWitness {
  ViolationKind kind;
  int x = -1, y = -1, z = -1;
  double lhs = 0.0, rhs = 0.0;
};

struct ScanOptions {
  int max_witnesses = 100;  // flags keep scanning after the cap; only storage stops
};

struct RadialConvexityResult {
  bool holds = true;
  std::vector<ViolationWitness> violations;
};

inline RadialConvexityResult check_radial_convexity(const MetricPoset& poset, const Context& ctx = {},
                                                    const ScanOptions& opts = {}) {
  RadialConvexityResult out;
  const int n = poset.size();
  const auto strict = strict_relation(poset.order);
  auto st = [&](int i, int j) { return strict[static_cast<std::size_t>(i) * n + j] != 0; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!st(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!st(y, z)) continue;
        const double lhs = poset.d(x, z);
        const double rhs = std::max(poset.d(x, y), poset.d(y, z));
        if (lhs < rhs - ctx.epsilon) {
          out.holds = false;
          if (static_cast<int>(out.violations.size()) < opts.max_witnesses)
            out.violations.push_back({ViolationKind::RC, x, y, z, lhs, rhs});
        }
      }
    }
  return out;
}

struct RadialityReport {
  bool radially_convex = true;
  bool d1_holds = true;
  bool d2_holds = true;
  bool radial = true;  // d1 && d2
  std::vector<ViolationWitness> violations;
};

inline RadialityReport check_radiality(const MetricPoset& poset, const Context& ctx = {},
                                       const ScanOptions& opts = {}) {
  RadialityReport report;
  const int n = poset.size();
  const auto strict = strict_relation(poset.order);
  const auto bullet = bullet_relation(poset.order);
  auto st = [&](int i, int j) { return strict[static_cast<std::size_t>(i) * n + j] != 0; };
  auto bu = [&](int i, int j) { return bullet[static_cast<std::size_t>(i) * n + j] != 0; };
  auto witness = [&](ViolationWitness w) {
    if (static_cast<int>(report.violations.size()) < opts.max_witnesses) report.violations.push_back(w);
  };

  {
    auto rc = check_radial_convexity(poset, ctx, opts);
    report.radially_convex = rc.holds;
    for (const auto& w : rc.violations) witness(w);
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!bu(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!st(y, z)) continue;
        const double lhs = poset.d(x, z);
        const double rhs = poset.d(x, y);
        if (lhs < rhs - ctx.epsilon) {
          report.d1_holds = false;
          witness({ViolationKind::D1, x, y, z, lhs, rhs});
        }
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!st(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!bu(y, z)) continue;
        const double lhs = poset.d(x, z);
        const double rhs = poset.d(y, z);
        if (lhs < rhs - ctx.epsilon) {
          report.d2_holds = false;
          witness({ViolationKind::D2, x, y, z, lhs, rhs});
        }
      }
    }
  report.radial = report.d1_holds && report.d2_holds;
  return report;
}

struct InextensibleInstance {
  PointSet domain;
  PartialFunction f;  // increasing, 1-Lipschitz, yet with no monotone 1-Lipschitz extension
};

// Converts a D1/D2 witness into a two-point instance whose extension problem
// is infeasible: the Lipschitz cone from the high-value endpoint forces a
// positive value on z that the order then forbids.
inline InextensibleInstance inextensible_instance(const MetricPoset& poset, const ViolationWitness& w,
                                                  const Context& ctx = {}) {
  const int n = poset.size();
  auto in_range = [&](int p) { return p >= 0 && p < n; };
  if (!in_range(w.x) || !in_range(w.y) || !in_range(w.z))
    throw Error(Errc::IndexOutOfRange, "witness indices outside the poset");
  const auto strict = strict_relation(poset.order);
  const auto bullet = bullet_relation(poset.order);
  auto st = [&](int i, int j) { return strict[static_cast<std::size_t>(i) * n + j] != 0; };
  auto bu = [&](int i, int j) { return bullet[static_cast<std::size_t>(i) * n + j] != 0; };

  if (w.kind == ViolationKind::D1) {
    if (!(bu(w.x, w.y) && st(w.y, w.z) && poset.d(w.x, w.z) < poset.d(w.x, w.y) - ctx.epsilon))
      throw Error(Errc::NotAViolation, "triple does not violate (d1) on this poset");
    InextensibleInstance out;
    out.f = make_scalar_function({w.x, w.y}, {poset.d(w.x, w.y), 0.0}, 1.0);
    out.domain = out.f.domain;
    return out;
  }
  if (w.kind == ViolationKind::D2) {
    if (!(st(w.x, w.y) && bu(w.y, w.z) && poset.d(w.x, w.z) < poset.d(w.y, w.z) - ctx.epsilon))
      throw Error(Errc::NotAViolation, "triple does not violate (d2) on this poset");
    InextensibleInstance out;
    out.f = make_scalar_function({w.y, w.z}, {poset.d(w.y, w.z), 0.0}, 1.0);
    out.domain = out.f.domain;
    return out;
  }
  throw Error(Errc::NotAViolation, "only D1/D2 witnesses convert to inextensible instances");
}

}  // namespace ordlip
