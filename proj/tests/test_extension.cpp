#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include <ordlip/ordlip.hpp>

#include "fixtures.hpp"

using namespace ordlip;

TEST_CASE("partial function construction") {
  SECTION("domain is sorted together with its rows") {
    auto f = make_scalar_function({2, 0}, {5.0, 3.0}, 1.0);
    REQUIRE(f.domain.members == std::vector<int>{0, 2});
    REQUIRE(f.values[0][0] == 3.0);
    REQUIRE(f.values[1][0] == 5.0);
    REQUIRE(f.width() == 1);
  }
  SECTION("duplicates and mismatched rows throw") {
    REQUIRE(fx::code_of([] { make_scalar_function({1, 1}, {0.0, 0.0}, 1.0); }) == Errc::DuplicatePoint);
    REQUIRE(fx::code_of([] { make_scalar_function({0, 1}, {0.0}, 1.0); }) == Errc::SizeMismatch);
  }
}

TEST_CASE("input function validation") {
  auto poset = fx::chain2();

  SECTION("a decreasing pair is a monotonicity violation") {
    auto f = make_scalar_function({0, 1}, {0.0, 1.0}, 1.0);
    auto v = validate_input_function(poset, f);
    REQUIRE_FALSE(v.ok());
    REQUIRE(v.violations.size() == 1);
    REQUIRE(v.violations.front().kind == FunctionViolationKind::Monotonicity);
    REQUIRE(v.violations.front().x == 0);
    REQUIRE(v.violations.front().y == 1);
  }

  SECTION("budget overruns report the ratio") {
    auto f = make_scalar_function({0, 1}, {1.5, 0.0}, 1.0);
    auto v = validate_input_function(poset, f);
    REQUIRE_FALSE(v.ok());
    REQUIRE(v.violations.front().kind == FunctionViolationKind::Lipschitz);
    REQUIRE(v.violations.front().ratio == Catch::Approx(1.5));
  }

  SECTION("an increasing 1-Lipschitz function passes") {
    auto f = make_scalar_function({0, 1}, {1.0, 0.0}, 1.0);
    REQUIRE(validate_input_function(poset, f).ok());
  }

  SECTION("structural defects throw") {
    PartialFunction empty;
    REQUIRE(fx::code_of([&] { validate_input_function(poset, empty); }) == Errc::EmptyDomain);

    auto f = make_scalar_function({0}, {0.0}, -1.0);
    REQUIRE(fx::code_of([&] { validate_input_function(poset, f); }) == Errc::NegativeK);

    PartialFunction ragged;
    ragged.domain.members = {0, 1};
    ragged.values = {{1.0}, {0.0, 0.0}};
    REQUIRE(fx::code_of([&] { validate_input_function(poset, ragged); }) == Errc::WidthMismatch);

    auto outside = make_scalar_function({5}, {0.0}, 1.0);
    REQUIRE(fx::code_of([&] { validate_input_function(poset, outside); }) == Errc::IndexOutOfRange);
  }
}

TEST_CASE("admissible intervals") {
  auto poset = fx::chain2();

  SECTION("value below propagates as a floor") {
    auto f = make_scalar_function({1}, {0.0}, 1.0);
    auto iv = admissible_interval(poset, f, 0, 0);
    REQUIRE(iv.a == 0.0);
    REQUIRE(iv.b == kInf);
    REQUIRE(iv.alpha == -1.0);
    REQUIRE(iv.beta == 1.0);
    REQUIRE(iv.lo() == 0.0);
    REQUIRE(iv.hi() == 1.0);
    REQUIRE_FALSE(iv.empty(1e-9));
  }

  SECTION("value above propagates as a ceiling") {
    auto f = make_scalar_function({0}, {0.0}, 1.0);
    auto iv = admissible_interval(poset, f, 1, 0);
    REQUIRE(iv.a == -kInf);
    REQUIRE(iv.b == 0.0);
    REQUIRE(iv.lo() == -1.0);
    REQUIRE(iv.hi() == 0.0);
  }

  SECTION("equal values above and below squeeze the interval to a point") {
    auto chain = fx::chain3();
    auto f = make_scalar_function({0, 2}, {0.7, 0.7}, 1.0);
    auto iv = admissible_interval(chain, f, 1, 0);
    REQUIRE(iv.lo() == 0.7);
    REQUIRE(iv.hi() == 0.7);
  }

  SECTION("guards") {
    auto f = make_scalar_function({0}, {0.0}, 1.0);
    REQUIRE(fx::code_of([&] { admissible_interval(poset, f, 0, 0); }) == Errc::PointInDomain);
    REQUIRE(fx::code_of([&] { admissible_interval(poset, f, 1, 3); }) == Errc::IndexOutOfRange);
    REQUIRE(fx::code_of([&] { admissible_interval(poset, f, 7, 0); }) == Errc::IndexOutOfRange);
  }
}

TEST_CASE("midpoint selection at infinite endpoints") {
  REQUIRE(detail::select_mid(-kInf, kInf) == 0.0);
  REQUIRE(detail::select_mid(-kInf, 5.0) == 4.0);
  REQUIRE(detail::select_mid(5.0, kInf) == 6.0);
  REQUIRE(detail::select_mid(1.0, 2.0) == 1.5);
}

TEST_CASE("extension on the two-point chain") {
  auto poset = fx::chain2();
  auto f = make_scalar_function({1}, {0.0}, 1.0);

  auto lo = extend(poset, f, {Selector::Min});
  REQUIRE(lo.status == ExtensionStatus::Feasible);
  REQUIRE(lo.F[0][0] == 0.0);
  REQUIRE(lo.F[1][0] == 0.0);
  REQUIRE(lo.visit_order == std::vector<int>{0});

  auto hi = extend(poset, f, {Selector::Max});
  REQUIRE(hi.F[0][0] == 1.0);

  auto mid = extend(poset, f, {Selector::Mid});
  REQUIRE(mid.F[0][0] == 0.5);
}

TEST_CASE("a full domain passes through unchanged") {
  auto chain = fx::chain3();
  auto f = make_scalar_function({0, 1, 2}, {2.0, 1.0, 0.5}, 1.0);
  for (auto sel : {Selector::Min, Selector::Max, Selector::Mid}) {
    auto out = extend(chain, f, {sel});
    REQUIRE(out.status == ExtensionStatus::Feasible);
    REQUIRE(out.visit_order.empty());
    REQUIRE(out.F[0][0] == 2.0);
    REQUIRE(out.F[1][0] == 1.0);
    REQUIRE(out.F[2][0] == 0.5);
  }
}

TEST_CASE("domain rows are copied exactly") {
  auto poset = fx::chain2();
  const double v = 0.1 + 0.2;  // deliberately not a round binary value
  auto f = make_scalar_function({1}, {v}, 1.0);
  auto out = extend(poset, f, {Selector::Min});
  REQUIRE(out.F[1][0] == v);
  REQUIRE(out.F[0][0] == v);  // floor propagates the stored double unchanged
}

TEST_CASE("infeasible instance is reported and bridged") {
  auto poset = fx::r2_witness();
  auto report = check_radiality(poset);
  auto inst = inextensible_instance(poset, report.violations.front());

  auto out = extend(poset, inst.f);
  REQUIRE(out.status == ExtensionStatus::Infeasible);
  REQUIRE(out.infeasible_points == std::vector<std::pair<int, int>>{{2, 0}});
  for (const auto& row : out.F) REQUIRE(std::isfinite(row[0]));  // sweep continued past the gap
}

TEST_CASE("extension rejects invalid inputs") {
  auto poset = fx::chain2();
  auto decreasing = make_scalar_function({0, 1}, {0.0, 1.0}, 1.0);
  REQUIRE(fx::code_of([&] { extend(poset, decreasing); }) == Errc::InvalidPartialFunction);
  REQUIRE(fx::code_of([&] { oracle_solve(poset, decreasing); }) == Errc::InvalidPartialFunction);
}

TEST_CASE("oracle envelopes on the two-point chain") {
  auto poset = fx::chain2();
  auto f = make_scalar_function({1}, {0.0}, 1.0);
  auto sol = oracle_solve(poset, f);
  REQUIRE(sol.feasible);
  REQUIRE(sol.Fmin[0][0] == 0.0);
  REQUIRE(sol.Fmax[0][0] == 1.0);
  REQUIRE(sol.Fmin[1][0] == 0.0);
  REQUIRE(sol.Fmax[1][0] == 0.0);
}

TEST_CASE("custom visit orders") {
  auto poset = gen_example1(0.6, 0.3);
  auto f = make_scalar_function({0}, {1.0}, 1.0);

  SECTION("a permutation of all points filters to the missing ones") {
    ExtensionPolicy policy{Selector::Min, PointOrder::Custom, {3, 1, 0, 2}};
    auto out = extend(poset, f, policy);
    REQUIRE(out.visit_order == std::vector<int>{3, 1, 2});
  }
  SECTION("a permutation of the missing points is used as-is") {
    ExtensionPolicy policy{Selector::Min, PointOrder::Custom, {2, 3, 1}};
    auto out = extend(poset, f, policy);
    REQUIRE(out.visit_order == std::vector<int>{2, 3, 1});
  }
  SECTION("descending reverses ascending") {
    auto out = extend(poset, f, {Selector::Min, PointOrder::Descending});
    REQUIRE(out.visit_order == std::vector<int>{3, 2, 1});
  }
  SECTION("anything else is rejected") {
    ExtensionPolicy policy{Selector::Min, PointOrder::Custom, {1, 1, 2}};
    REQUIRE(fx::code_of([&] { extend(poset, f, policy); }) == Errc::InvalidPolicy);
  }
}

TEST_CASE("min and max sweeps match the oracle envelopes") {
  std::mt19937_64 rng(404);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto poset = random_discrete(4 + static_cast<int>(seed % 5), 0.35, seed);
    const double K = seed % 3 == 0 ? 0.5 : (seed % 3 == 1 ? 1.0 : 2.0);
    auto f = random_partial_function(poset, K, 1, 1 + static_cast<int>(seed) % poset.size(), seed * 31);
    auto sol = oracle_solve(poset, f);
    REQUIRE(sol.feasible);

    std::vector<int> shuffled(poset.size());
    std::iota(shuffled.begin(), shuffled.end(), 0);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    std::vector<ExtensionPolicy> policies = {
        {Selector::Min, PointOrder::Ascending, {}},
        {Selector::Min, PointOrder::Descending, {}},
        {Selector::Min, PointOrder::Custom, shuffled},
    };
    for (auto policy : policies) {
      auto out = extend(poset, f, policy);
      REQUIRE(out.status == ExtensionStatus::Feasible);
      for (int x = 0; x < poset.size(); ++x)
        REQUIRE(out.F[x][0] == Catch::Approx(sol.Fmin[x][0]).margin(1e-9));

      policy.selector = Selector::Max;
      auto top = extend(poset, f, policy);
      for (int x = 0; x < poset.size(); ++x)
        REQUIRE(top.F[x][0] == Catch::Approx(sol.Fmax[x][0]).margin(1e-9));

      policy.selector = Selector::Mid;
      auto mid = extend(poset, f, policy);
      for (int x = 0; x < poset.size(); ++x) {
        REQUIRE(mid.F[x][0] >= sol.Fmin[x][0] - 1e-9);
        REQUIRE(mid.F[x][0] <= sol.Fmax[x][0] + 1e-9);
      }
    }
  }
}

TEST_CASE("every feasible sweep yields a valid total function") {
  for (std::uint64_t seed = 50; seed < 62; ++seed) {
    auto trees = gen_example2({{0, 1}, {1, 2}, {1, 3}, {3, 4}}, 0);
    auto poset = seed % 2 ? trees.dt : random_discrete(7, 0.4, seed);
    auto f = random_partial_function(poset, 1.0, 2, 3, seed);
    auto out = extend(poset, f, {Selector::Mid});
    REQUIRE(out.status == ExtensionStatus::Feasible);
    auto total = make_partial_function(
        [&] {
          std::vector<int> all(poset.size());
          std::iota(all.begin(), all.end(), 0);
          return all;
        }(),
        out.F, 1.0);
    REQUIRE(validate_input_function(poset, total).ok());
    for (int k = 0; k < f.domain.size(); ++k) REQUIRE(out.F[f.domain.members[k]] == f.values[k]);
  }
}

TEST_CASE("doubling the budget scales the sweep exactly") {
  for (std::uint64_t seed : {7, 8, 9}) {
    auto poset = random_discrete(6, 0.4, seed);
    auto f = random_partial_function(poset, 2.0, 1, 2, seed);
    PartialFunction halved = f;
    halved.K = 1.0;
    for (auto& row : halved.values)
      for (double& v : row) v *= 0.5;

    auto out = extend(poset, f, {Selector::Min});
    auto half = extend(poset, halved, {Selector::Min});
    REQUIRE(out.status == ExtensionStatus::Feasible);
    for (int x = 0; x < poset.size(); ++x) REQUIRE(out.F[x][0] == 2.0 * half.F[x][0]);
  }
}

TEST_CASE("vector extension works coordinatewise") {
  auto poset = gen_example1(0.6, 0.3);
  auto f = random_partial_function(poset, 1.0, 3, 2, 99);
  auto out = extend(poset, f, {Selector::Min});
  REQUIRE(out.status == ExtensionStatus::Feasible);
  for (int t = 0; t < 3; ++t) {
    std::vector<double> column;
    for (int k = 0; k < f.domain.size(); ++k) column.push_back(f.values[k][t]);
    auto ft = make_scalar_function(f.domain.members, column, f.K);
    auto single = extend(poset, ft, {Selector::Min});
    for (int x = 0; x < poset.size(); ++x) REQUIRE(out.F[x][t] == single.F[x][0]);
  }
}

TEST_CASE("range clamp") {
  auto clamped = clamp_to_range({{-1.0}, {0.5}, {2.0}}, 0.0, 1.0);
  REQUIRE(clamped == std::vector<std::vector<double>>{{0.0}, {0.5}, {1.0}});

  SECTION("a clamped extension stays valid") {
    auto chain = fx::chain3();
    auto f = make_scalar_function({0, 1, 2}, {2.0, 0.5, -1.0}, 1.5);
    REQUIRE(validate_input_function(chain, f).ok());
    auto squeezed = clamp_to_range(f.values, 0.0, 1.0);
    auto g = make_partial_function({0, 1, 2}, squeezed, 1.5);
    REQUIRE(validate_input_function(chain, g).ok());
    REQUIRE(g.values[0][0] == 1.0);
    REQUIRE(g.values[1][0] == 0.5);
    REQUIRE(g.values[2][0] == 0.0);
  }

  REQUIRE(fx::code_of([] { clamp_to_range({{0.0}}, 1.0, 0.0); }) == Errc::InvertedRange);
}
