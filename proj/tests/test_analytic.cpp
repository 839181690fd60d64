#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "lzbound/analytic.hpp"
#include "lzbound/errors.hpp"
#include "lzbound/model.hpp"
#include "lzbound/oracle.hpp"
#include "reference_values.hpp"
#include "support.hpp"

using namespace lzbound;

namespace {

double amp_dist(const AmplitudePair& u, const AmplitudePair& v) {
  return std::max(std::abs(u.a0 - v.a0), std::abs(u.a1 - v.a1));
}

AmplitudePair eval(const PathSpec& spec, double t) {
  return solve_path(spec, t);
}

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("initial state") {
  PathSpec spec(PathVariant::A, 0.2, 0.5, 5.0);
  AmplitudePair init = initial_state(spec);
  CHECK(init.a0.real() == doctest::Approx(refval::kInitA0).epsilon(1e-15));
  CHECK(init.a1.real() == doctest::Approx(refval::kInitA1).epsilon(1e-15));
  CHECK(init.a0.imag() == 0.0);
  CHECK(init.a1.imag() == 0.0);
  CHECK(init.norm2() == doctest::Approx(1.0).epsilon(1e-15));

  // must be the instantaneous ground state at the sweep start
  EigenSystem es = eigensystem(path_point(spec, 0.0));
  CHECK(std::abs(init.a0 - es.ground.a) < 1e-14);
  CHECK(std::abs(init.a1 - es.ground.b) < 1e-14);
}

TEST_CASE("pinned amplitudes on the linear sweep") {
  PathASolver solver(PathSpec(PathVariant::A, 0.2, 0.5, 5.0));
  for (const auto& row : refval::kPathARows) {
    AmplitudePair amp = solver.at(row.t);
    CHECK(std::abs(amp.a0 - row.a0) < 1e-12);
    CHECK(std::abs(amp.a1 - row.a1) < 1e-12);
  }
}

TEST_CASE("pinned amplitudes on the tangent sweep") {
  PathBSolver solver(PathSpec(PathVariant::B, 0.2, 0.5, 5.0));
  for (const auto& row : refval::kPathBRows) {
    AmplitudePair amp = solver.at(row.t);
    CHECK(std::abs(amp.a0 - row.a0) < 1e-12);
    CHECK(std::abs(amp.a1 - row.a1) < 1e-12);
  }
}

TEST_CASE("pinned amplitudes on the arc sweep") {
  PathCSolver solver(PathSpec(PathVariant::C, 0.2, 0.5, 5.0));
  for (const auto& row : refval::kPathCRows) {
    AmplitudePair amp = solver.at(row.t);
    CHECK(std::abs(amp.a0 - row.a0) < 1e-12);
    CHECK(std::abs(amp.a1 - row.a1) < 1e-12);
  }
  CHECK(solver.period() == doctest::Approx(refval::kArcPeriodT5).epsilon(1e-14));
}

TEST_CASE("all sweeps start exactly in the initial state") {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> box(0.08, 1.2);
  std::uniform_real_distribution<double> time(0.5, 20.0);
  for (int i = 0; i < 6; ++i) {
    double x0 = box(rng), z0 = box(rng), T = time(rng);
    for (PathVariant v : {PathVariant::A, PathVariant::B, PathVariant::C}) {
      PathSpec spec(v, x0, z0, T);
      CHECK(amp_dist(eval(spec, 0.0), initial_state(spec)) < 1e-10);
    }
  }
}

TEST_CASE("closed-form state stays normalized") {
  std::mt19937 rng(34);
  std::uniform_real_distribution<double> box(0.05, 1.2);
  std::uniform_real_distribution<double> time(0.5, 30.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    double x0 = box(rng), z0 = box(rng), T = time(rng);
    for (PathVariant v : {PathVariant::A, PathVariant::B, PathVariant::C}) {
      PathSpec spec(v, x0, z0, T);
      AmplitudePair amp = eval(spec, T * frac(rng));
      CHECK(std::abs(amp.norm2() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("closed forms satisfy the equation of motion") {
  // i d/dt psi = H(t) psi, checked by finite differences at interior times
  for (PathVariant v : {PathVariant::A, PathVariant::B, PathVariant::C}) {
    for (auto [x0, z0, T] : {std::array<double, 3>{0.2, 0.5, 5.0},
                             std::array<double, 3>{0.6, 0.15, 8.0}}) {
      PathSpec spec(v, x0, z0, T);
      for (double frac : {0.21, 0.52, 0.83}) {
        double t = frac * T;
        double h = 1e-4 * T;
        Cd i_unit(0.0, 1.0);
        auto a0_of = [&](double s) { return eval(spec, s).a0; };
        auto a1_of = [&](double s) { return eval(spec, s).a1; };
        Cd d0 = testsupport::fd_derivative(a0_of, t, h);
        Cd d1 = testsupport::fd_derivative(a1_of, t, h);
        AmplitudePair amp = eval(spec, t);
        Mat2c ham = hamiltonian(path_point(spec, t));
        Vec2c want = ham * Vec2c{amp.a0, amp.a1};
        CHECK(std::abs(i_unit * d0 - want.a) < 2e-7 * spec.r0());
        CHECK(std::abs(i_unit * d1 - want.b) < 2e-7 * spec.r0());
      }
    }
  }
}

TEST_CASE("closed forms track the adaptive integrator") {
  for (PathVariant v : {PathVariant::A, PathVariant::B, PathVariant::C}) {
    PathSpec spec(v, 0.35, 0.65, 7.0);
    EvolutionSeries exact = evolve_series(spec, 101, Solver::analytic);
    EvolutionSeries ode = evolve_series(spec, 101, Solver::oracle);
    CHECK(compare_series(exact, ode) < 1e-9);
  }
}

TEST_CASE("series structure") {
  PathSpec spec(PathVariant::B, 0.2, 0.5, 5.0);
  EvolutionSeries series = evolve_series(spec, 11);
  REQUIRE(series.t.size() == 11);
  REQUIRE(series.amplitudes.size() == 11);
  REQUIRE(series.infidelity.size() == 11);
  CHECK(series.t.front() == 0.0);
  CHECK(series.t.back() == 5.0);
  CHECK(series.t[3] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(series.infidelity[0] <= 1e-12);
  CHECK(series.solver == "analytic");
  CHECK(evolve_series(spec, 5, Solver::oracle).solver == "oracle");
}

TEST_CASE("one-shot evaluation matches the per-variant solvers") {
  PathSpec a(PathVariant::A, 0.3, 0.4, 6.0);
  PathSpec c(PathVariant::C, 0.3, 0.4, 6.0);
  CHECK(amp_dist(solve_path(a, 2.7), PathASolver(a).at(2.7)) == 0.0);
  CHECK(amp_dist(solve_path(c, 2.7), PathCSolver(c).at(2.7)) == 0.0);
}

TEST_CASE("solver and spec shape must agree") {
  PathSpec a(PathVariant::A, 0.2, 0.5, 5.0);
  PathSpec b(PathVariant::B, 0.2, 0.5, 5.0);
  CHECK_THROWS_AS(PathASolver{b}, SolverMismatch);
  CHECK_THROWS_AS(PathCSolver{b}, SolverMismatch);
  CHECK_THROWS_AS(PathBSolver{a}, SolverMismatch);
}

TEST_CASE("time domain is enforced") {
  PathSpec spec(PathVariant::A, 0.2, 0.5, 5.0);
  PathASolver solver(spec);
  CHECK_THROWS_AS(solver.at(-0.01), TimeOutOfRange);
  CHECK_THROWS_AS(solver.at(5.01), TimeOutOfRange);
  CHECK_THROWS_AS(evolve_series(spec, 1), InvalidParameter);
}

TEST_CASE("endpoint infidelity at pinned parameters") {
  auto final_I = [](PathVariant v) {
    PathSpec spec(v, 0.2, 0.5, 5.0);
    return evolve_series(spec, 2).infidelity.back();
  };
  CHECK(std::abs(final_I(PathVariant::A) - refval::kFinalInfidelityA) < 1e-12);
  CHECK(std::abs(final_I(PathVariant::B) - refval::kFinalInfidelityB) < 1e-12);
  CHECK(std::abs(final_I(PathVariant::C) - refval::kFinalInfidelityC) < 1e-12);
}

}  // TEST_SUITE
