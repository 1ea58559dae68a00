#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ordlip/extension.hpp"
#include "ordlip/radiality.hpp"

namespace ordlip {

struct MemberTag {
  bool derived = false;  // true when not generated from a bullet pair
  int x = -1, y = -1;
};

// Scalar 1-Lipschitz increasing functions on all of X; member k evaluates to
// members[k][point].
struct FunctionFamily {
  std::vector<std::vector<double>> members;
  std::vector<MemberTag> tags;
  int size() const { return static_cast<int>(members.size()); }
};

namespace detail {

inline void require_radial(const MetricPoset& poset, const Context& ctx, const char* who) {
  const auto report = check_radiality(poset, ctx, ScanOptions{1});
  if (!report.radial) throw Error(Errc::NotRadial, std::string(who) + " requires a radial poset");
}

// Bullet pairs in lexicographic (x, y) order; fixes the family enumeration.
inline std::vector<std::pair<int, int>> bullet_pairs(const OrderRelation& ord) {
  const auto bullet = bullet_relation(ord);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < ord.n; ++x)
    for (int y = 0; y < ord.n; ++y)
      if (bullet[static_cast<std::size_t>(x) * ord.n + y] != 0) pairs.emplace_back(x, y);
  return pairs;
}

}  // namespace detail

// One member per bullet pair (x, y): the Min-policy extension of the pair
// function f(x) = d(x,y), f(y) = 0 at budget 1. Jointly the members recover
// the order: x >= y iff every member weakly separates in x's favor.
inline FunctionFamily representing_family(const MetricPoset& poset, const Context& ctx = {}) {
  detail::require_radial(poset, ctx, "representing_family");
  FunctionFamily fam;
  for (auto [x, y] : detail::bullet_pairs(poset.order)) {
    auto f = make_scalar_function({x, y}, {poset.d(x, y), 0.0}, 1.0);
    ExtensionPolicy policy;  // Min, ascending
    const auto outcome = extend(poset, f, policy, ctx);
    if (outcome.status != ExtensionStatus::Feasible)
      throw Error(Errc::NotRadial, "pair extension infeasible on a poset that scanned radial");
    std::vector<double> member(poset.size());
    for (int p = 0; p < poset.size(); ++p) member[p] = outcome.F[p][0];
    fam.members.push_back(std::move(member));
    fam.tags.push_back({false, x, y});
  }
  return fam;
}

enum class RepresentationFailure {
  None,
  MemberDecreasesOnPair,        // x >= y but some member drops from x to y
  FamilyOrdersIncomparablePair  // not (x >= y) yet every member says F(x) >= F(y)
};

struct RepresentationCheck {
  bool represents = true;
  RepresentationFailure failure = RepresentationFailure::None;
  int x = -1, y = -1;
  int member = -1;  // offending member for MemberDecreasesOnPair
};

inline RepresentationCheck verify_representation(const MetricPoset& poset, const FunctionFamily& fam,
                                                 const Context& ctx = {}) {
  const int n = poset.size();
  for (const auto& member : fam.members)
    if (static_cast<int>(member.size()) != n)
      throw Error(Errc::SizeMismatch, "family member is not defined on all points");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool all_ge = true;
      int drop = -1;
      for (int k = 0; k < fam.size(); ++k)
        if (fam.members[k][x] < fam.members[k][y] - ctx.epsilon) {
          all_ge = false;
          drop = k;
          break;
        }
      if (poset.ge(x, y) && !all_ge)
        return {false, RepresentationFailure::MemberDecreasesOnPair, x, y, drop};
      if (!poset.ge(x, y) && all_ge)
        return {false, RepresentationFailure::FamilyOrdersIncomparablePair, x, y, -1};
    }
  return {};
}

// Recenters every member at the base point e. Equals K * ((F - F(e)) / K) for
// K = diam(X), so each output is still 1-Lipschitz, increasing, represents the
// same order, and has sup norm at most diam(X).
inline FunctionFamily normalize_family(const MetricPoset& poset, const FunctionFamily& fam, int e,
                                       const Context& = {}) {
  const int n = poset.size();
  if (e < 0 || e >= n)
    throw Error(Errc::IndexOutOfRange, "base point " + std::to_string(e) + " outside 0.." + std::to_string(n - 1));
  if (n < 2 || diameter(poset) <= 0.0)
    throw Error(Errc::DegenerateDiameter, "normalization needs at least two points at positive distance");
  FunctionFamily out;
  out.tags = fam.tags;
  out.members.reserve(fam.members.size());
  for (const auto& member : fam.members) {
    if (static_cast<int>(member.size()) != n)
      throw Error(Errc::SizeMismatch, "family member is not defined on all points");
    std::vector<double> shifted(n);
    for (int p = 0; p < n; ++p) shifted[p] = member[p] - member[e];
    out.members.push_back(std::move(shifted));
  }
  return out;
}

struct StrictMonotoneMap {
  std::vector<double> values;  // G = sum_k 2^{-k} F_k over the family enumeration
  // Guaranteed separation on strict pairs: min over x > y of 2^{-k(x,y)} d(x,y),
  // where k(x,y) indexes the member generated by that pair. Every other member
  // contributes nonnegatively, so G(x) - G(y) >= margin_bound in exact
  // arithmetic. +inf when the order has no strict pairs.
  double margin_bound = kInf;
  // min over strict pairs of the directly summed gap sum_k 2^{-k}(F_k(x)-F_k(y));
  // informational, subject to double rounding when the bound is tiny.
  double margin_observed = kInf;
};

inline StrictMonotoneMap strict_monotone_map(const MetricPoset& poset, const Context& ctx = {}) {
  detail::require_radial(poset, ctx, "strict_monotone_map");
  const auto pairs = detail::bullet_pairs(poset.order);
  const auto fam = representing_family(poset, ctx);
  const int n = poset.size();

  StrictMonotoneMap out;
  out.values.assign(n, 0.0);
  std::vector<double> weight(fam.size());
  double w = 1.0;
  for (int k = 0; k < fam.size(); ++k) {
    w *= 0.5;
    weight[k] = w;
    for (int p = 0; p < n; ++p) out.values[p] += w * fam.members[k][p];
  }

  const auto strict = strict_relation(poset.order);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (strict[static_cast<std::size_t>(x) * n + y] == 0) continue;
      double gap = 0.0;
      for (int k = 0; k < fam.size(); ++k) gap += weight[k] * (fam.members[k][x] - fam.members[k][y]);
      out.margin_observed = std::min(out.margin_observed, gap);
      for (int k = 0; k < fam.size(); ++k)
        if (!fam.tags[k].derived && fam.tags[k].x == x && fam.tags[k].y == y) {
          out.margin_bound = std::min(out.margin_bound, weight[k] * poset.d(x, y));
          break;
        }
    }
  return out;
}

}  // namespace ordlip
