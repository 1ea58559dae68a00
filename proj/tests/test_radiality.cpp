#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include <ordlip/ordlip.hpp>

#include "fixtures.hpp"

using namespace ordlip;

TEST_CASE("an antichain is radial for any metric") {
  auto mv = validate_metric({{0.0, 2.0, 5.0}, {2.0, 0.0, 4.0}, {5.0, 4.0, 0.0}});
  auto ov = order_from_pairs(3, {});
  auto poset = make_metric_poset(std::move(*mv.metric), std::move(*ov.order));
  auto report = check_radiality(poset);
  REQUIRE(report.radially_convex);
  REQUIRE(report.d1_holds);
  REQUIRE(report.d2_holds);
  REQUIRE(report.radial);
  REQUIRE(report.violations.empty());
}

TEST_CASE("chains with increasing distances are radial") {
  REQUIRE(check_radiality(fx::chain3()).radial);
  REQUIRE(check_radial_convexity(fx::chain3()).holds);
}

TEST_CASE("parametric four-point regimes") {
  SECTION("balanced parameters give a radial space") {
    auto report = check_radiality(gen_example1(0.6, 0.3));
    REQUIRE(report.radial);
    REQUIRE(report.violations.empty());
  }

  SECTION("large a breaks (d1) but keeps (d2)") {
    auto report = check_radiality(gen_example1(0.7, 0.4));
    REQUIRE(report.radially_convex);
    REQUIRE_FALSE(report.d1_holds);
    REQUIRE(report.d2_holds);
    REQUIRE_FALSE(report.radial);
    const auto& w = report.violations.front();
    REQUIRE(w.kind == ViolationKind::D1);
    REQUIRE(w.x == 1);
    REQUIRE(w.y == 2);
    REQUIRE(w.z == 3);
    REQUIRE(w.lhs == Catch::Approx(0.3));
    REQUIRE(w.rhs == Catch::Approx(0.4));
  }

  SECTION("small a breaks (d2) but keeps (d1)") {
    auto report = check_radiality(gen_example1(0.3, 0.4));
    REQUIRE(report.radially_convex);
    REQUIRE(report.d1_holds);
    REQUIRE_FALSE(report.d2_holds);
    const auto& w = report.violations.front();
    REQUIRE(w.kind == ViolationKind::D2);
    REQUIRE(w.x == 0);
    REQUIRE(w.y == 1);
    REQUIRE(w.z == 2);
  }
}

TEST_CASE("plane sample that is radially convex but not radial") {
  auto poset = fx::r2_witness();
  auto report = check_radiality(poset);
  REQUIRE(report.radially_convex);
  REQUIRE_FALSE(report.d1_holds);
  REQUIRE(report.d2_holds);
  REQUIRE_FALSE(report.radial);

  const auto& w = report.violations.front();
  REQUIRE(w.kind == ViolationKind::D1);
  REQUIRE(w.x == 0);
  REQUIRE(w.y == 1);
  REQUIRE(w.z == 2);
  REQUIRE(w.lhs == Catch::Approx(1.0));
  REQUIRE(w.rhs == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("witness cap limits storage but not verdicts") {
  auto poset = gen_example1(0.7, 0.4);
  auto capped = check_radiality(poset, {}, ScanOptions{1});
  REQUIRE(capped.violations.size() == 1);
  REQUIRE_FALSE(capped.d1_holds);

  auto none = check_radiality(poset, {}, ScanOptions{0});
  REQUIRE(none.violations.empty());
  REQUIRE_FALSE(none.radial);
  REQUIRE_FALSE(none.d1_holds);
}

TEST_CASE("radial convexity failure on a short chain") {
  // 0 > 1 > 2 where the long hop is shorter than the first step.
  auto mv = validate_metric({{0.0, 1.0, 0.5}, {1.0, 0.0, 1.0}, {0.5, 1.0, 0.0}});
  REQUIRE(mv.ok());
  auto ov = order_from_pairs(3, {{0, 1}, {1, 2}});
  auto poset = make_metric_poset(std::move(*mv.metric), std::move(*ov.order));
  auto rc = check_radial_convexity(poset);
  REQUIRE_FALSE(rc.holds);
  const auto& w = rc.violations.front();
  REQUIRE(w.x == 0);
  REQUIRE(w.y == 1);
  REQUIRE(w.z == 2);
  REQUIRE(w.lhs == 0.5);
  REQUIRE(w.rhs == 1.0);

  auto report = check_radiality(poset);
  REQUIRE_FALSE(report.radially_convex);
  REQUIRE(report.violations.front().kind == ViolationKind::RC);
}

TEST_CASE("on total orders radiality and radial convexity coincide") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto poset = random_metric_loset(2 + static_cast<int>(seed % 7), seed);
    auto report = check_radiality(poset);
    auto rc = check_radial_convexity(poset);
    REQUIRE(report.radial == rc.holds);
    REQUIRE(report.radially_convex == rc.holds);
  }
}

TEST_CASE("witness conversion to an inextensible instance") {
  SECTION("(d1) witness from the plane sample") {
    auto poset = fx::r2_witness();
    auto report = check_radiality(poset);
    auto inst = inextensible_instance(poset, report.violations.front());

    REQUIRE(inst.domain.members == std::vector<int>{0, 1});
    REQUIRE(inst.f.K == 1.0);
    REQUIRE(validate_input_function(poset, inst.f).ok());

    auto sol = oracle_solve(poset, inst.f);
    REQUIRE_FALSE(sol.feasible);
  }

  SECTION("(d2) witness from the four-point family") {
    auto poset = gen_example1(0.3, 0.4);
    auto report = check_radiality(poset);
    REQUIRE(report.violations.front().kind == ViolationKind::D2);
    auto inst = inextensible_instance(poset, report.violations.front());

    REQUIRE(inst.domain.members == std::vector<int>{1, 2});
    REQUIRE(validate_input_function(poset, inst.f).ok());
    REQUIRE_FALSE(oracle_solve(poset, inst.f).feasible);
  }

  SECTION("every stored witness converts") {
    for (auto poset : {gen_example1(0.7, 0.4), gen_example1(0.3, 0.4)}) {
      auto report = check_radiality(poset);
      REQUIRE_FALSE(report.violations.empty());
      for (const auto& w : report.violations) {
        if (w.kind == ViolationKind::RC) continue;
        auto inst = inextensible_instance(poset, w);
        REQUIRE(validate_input_function(poset, inst.f).ok());
        REQUIRE_FALSE(oracle_solve(poset, inst.f).feasible);
      }
    }
  }

  SECTION("fabricated witnesses are rejected") {
    auto radial = fx::chain2();
    REQUIRE(fx::code_of([&] {
              inextensible_instance(radial, {ViolationKind::D1, 0, 1, 1, 0.0, 1.0});
            }) == Errc::NotAViolation);
    REQUIRE(fx::code_of([&] {
              inextensible_instance(radial, {ViolationKind::RC, 0, 1, 1, 0.0, 1.0});
            }) == Errc::NotAViolation);
    REQUIRE(fx::code_of([&] {
              inextensible_instance(radial, {ViolationKind::D1, 0, 1, 9, 0.0, 1.0});
            }) == Errc::IndexOutOfRange);
  }
}
