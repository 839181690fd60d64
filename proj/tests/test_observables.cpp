#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "lzbound/analytic.hpp"
#include "lzbound/errors.hpp"
#include "lzbound/model.hpp"
#include "lzbound/observables.hpp"
#include "reference_values.hpp"

using namespace lzbound;

TEST_SUITE("observables") {

TEST_CASE("infidelity equals one minus the ground-state overlap") {
  std::mt19937 rng(7070);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  for (int i = 0; i < 40; ++i) {
    ParamPoint p{box(rng), box(rng), box(rng)};
    if (p.r() < 0.05) continue;
    Cd w0(box(rng), box(rng)), w1(box(rng), box(rng));
    double n = std::sqrt(std::norm(w0) + std::norm(w1));
    if (n < 0.1) continue;
    AmplitudePair amp{w0 / n, w1 / n};

    EigenSystem es = eigensystem(p);
    Cd overlap = std::conj(es.ground.a) * amp.a0 +
                 std::conj(es.ground.b) * amp.a1;
    double want = 1.0 - std::norm(overlap);
    CHECK(std::abs(instantaneous_infidelity(p, amp) - want) < 1e-12);
  }
}

TEST_CASE("eigenstates give the extreme infidelities") {
  ParamPoint p{0.3, -0.2, 0.7};
  EigenSystem es = eigensystem(p);
  CHECK(instantaneous_infidelity(p, {es.ground.a, es.ground.b}) == 0.0);
  CHECK(instantaneous_infidelity(p, {es.excited.a, es.excited.b}) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("values are clamped into [0, 1] against rounding") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    ParamPoint p{box(rng), box(rng), box(rng)};
    if (p.r() < 0.05) continue;
    EigenSystem es = eigensystem(p);
    // tiny norm wobble around an eigenstate can push the raw value outside
    double eps = 1e-15 * box(rng);
    AmplitudePair amp{es.ground.a * (1.0 + eps), es.ground.b * (1.0 + eps)};
    double val = instantaneous_infidelity(p, amp);
    CHECK(val >= 0.0);
    CHECK(val <= 1.0);
  }
}

TEST_CASE("endpoint infidelity agrees between solvers") {
  for (PathVariant v : {PathVariant::A, PathVariant::B, PathVariant::C}) {
    PathSpec spec(v, 0.2, 0.5, 5.0);
    double exact = final_infidelity(spec);
    double ode = final_infidelity(spec, Solver::oracle);
    CHECK(std::abs(exact - ode) < 1e-9);
  }
  PathSpec spec(PathVariant::A, 0.2, 0.5, 5.0);
  CHECK(std::abs(final_infidelity(spec) - refval::kFinalInfidelityA) < 1e-12);
}

TEST_CASE("arc infidelity is an exact sinusoid") {
  PathSpec spec(PathVariant::C, 0.2, 0.5, 5.0);
  ArcInfidelity arc = arc_infidelity(spec);
  CHECK(arc.envelope ==
        doctest::Approx(refval::kArcEnvelopeT5).epsilon(1e-14));
  CHECK(arc.period == doctest::Approx(refval::kArcPeriodT5).epsilon(1e-14));

  PathCSolver solver(spec);
  for (int i = 0; i <= 100; ++i) {
    double t = 5.0 * i / 100;
    double direct = instantaneous_infidelity(path_point(spec, t),
                                             solver.at(t));
    CHECK(std::abs(arc.at(t) - direct) < 1e-12);
    CHECK(std::abs(path_c_closed_infidelity(spec, t) - arc.at(t)) < 1e-15);
  }
}

TEST_CASE("closed-form arc infidelity rejects the line sweeps") {
  PathSpec a(PathVariant::A, 0.2, 0.5, 5.0);
  CHECK_THROWS_AS(arc_infidelity(a), SolverMismatch);
  CHECK_THROWS_AS(path_c_closed_infidelity(a, 1.0), SolverMismatch);
}

TEST_CASE("arc zeros sit at multiples of the period") {
  PathSpec spec(PathVariant::C, 0.2, 0.5, 12.0);
  ZeroList zeros = find_infidelity_zeros(spec);
  REQUIRE(zeros.size() == 3);  // floor(T / tau) = 2, plus t = 0
  for (int k = 0; k < 3; ++k) {
    CHECK(zeros[k].t ==
          doctest::Approx(k * refval::kArcPeriodT12).epsilon(1e-13));
    CHECK(zeros[k].value < 1e-12);
  }
}

TEST_CASE("short arcs only return the trivial zero") {
  PathSpec spec(PathVariant::C, 0.2, 0.5, 4.0);  // T < tau
  ZeroList zeros = find_infidelity_zeros(spec);
  REQUIRE(zeros.size() == 1);
  CHECK(zeros[0].t == 0.0);
}

TEST_CASE("line-sweep dips near the end of a slow drive") {
  PathSpec spec(PathVariant::A, 0.2, 0.5, 95.0);
  ZeroList zeros = find_infidelity_zeros(spec, Solver::analytic, 1e-4);
  REQUIRE(zeros.size() >= 1);
  bool late_dip = false;
  for (const InfidelityPoint& zp : zeros) {
    CHECK(zp.value < 1e-4);
    // the report must be self-consistent with a fresh evaluation
    double fresh = instantaneous_infidelity(path_point(spec, zp.t),
                                            solve_path(spec, zp.t));
    CHECK(std::abs(fresh - zp.value) < 1e-12);
    if (zp.t > 0.8 * 95.0) late_dip = true;
  }
  CHECK(late_dip);
}

TEST_CASE("reported dips are local minima") {
  PathSpec spec(PathVariant::B, 0.2, 0.5, 95.0);
  ZeroList zeros = find_infidelity_zeros(spec, Solver::analytic, 1e-3);
  for (const InfidelityPoint& zp : zeros) {
    if (zp.t <= 0.0 || zp.t >= 95.0) continue;
    double dt = 0.05;
    auto value = [&](double t) {
      return instantaneous_infidelity(path_point(spec, t),
                                      solve_path(spec, t));
    };
    CHECK(value(zp.t - dt) >= zp.value - 1e-14);
    CHECK(value(zp.t + dt) >= zp.value - 1e-14);
  }
}

}  // TEST_SUITE
