#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <ordlip/ordlip.hpp>

namespace fx {

// Two points with 0 above 1 at distance 1.
inline ordlip::MetricPoset chain2() {
  auto mv = ordlip::validate_metric({{0.0, 1.0}, {1.0, 0.0}});
  auto ov = ordlip::order_from_pairs(2, {{0, 1}});
  return ordlip::make_metric_poset(std::move(*mv.metric), std::move(*ov.order), {"x", "y"});
}

// Chain 0 > 1 > 2 with unit steps.
inline ordlip::MetricPoset chain3() {
  auto mv = ordlip::validate_metric({{0.0, 1.0, 2.0}, {1.0, 0.0, 1.0}, {2.0, 1.0, 0.0}});
  auto ov = ordlip::order_from_pairs(3, {{0, 1}, {1, 2}});
  return ordlip::make_metric_poset(std::move(*mv.metric), std::move(*ov.order));
}

// Plane points under the coordinatewise order and Euclidean metric.
inline ordlip::MetricPoset plane(const std::vector<std::pair<double, double>>& pts) {
  const int n = static_cast<int>(pts.size());
  ordlip::Matrix dist(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dist[i][j] = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
      geq[i][j] = pts[i].first >= pts[j].first && pts[i].second >= pts[j].second;
    }
  auto mv = ordlip::validate_metric(dist);
  REQUIRE(mv.ok());
  auto ov = ordlip::validate_order(std::move(geq));
  REQUIRE(ov.ok());
  return ordlip::make_metric_poset(std::move(*mv.metric), std::move(*ov.order));
}

// The radially convex plane instance that is not radial: an incomparable
// high point, the origin, and a point strictly under the origin.
inline ordlip::MetricPoset r2_witness() { return plane({{1.0, -1.0}, {0.0, 0.0}, {0.0, -1.0}}); }

template <typename F>
inline ordlip::Errc code_of(F&& fn) {
  try {
    fn();
  } catch (const ordlip::Error& e) {
    return e.code();
  }
  FAIL("expected an ordlip::Error");
  return ordlip::Errc::ParseError;
}

}  // namespace fx
