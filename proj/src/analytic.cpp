#include "lzbound/analytic.hpp"

#include <cmath>
#include <functional>

#include "lzbound/errors.hpp"
#include "lzbound/observables.hpp"
#include "lzbound/oracle.hpp"
#include "lzbound/specfun.hpp"

namespace lzbound {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;
const Cd kI(0.0, 1.0);

void require_variant(const PathSpec& s, PathVariant v) {
  if (s.variant != v)
    throw SolverMismatch("solver does not match the path variant");
}

void require_time(const PathSpec& s, double t) {
  if (t < 0.0 || t > s.total_time) throw TimeOutOfRange("t outside [0, T]");
}

Cd hyp_f1(Cd a, double s, const SeriesControl& ctl) {
  return gauss_2f1(a, a, 0.5, s, ctl);
}

Cd hyp_f2(Cd a, double s, const SeriesControl& ctl) {
  return gauss_2f1(a + 0.5, a + 0.5, 1.5, s, ctl);
}

Cd hyp_df1(Cd a, double s, const SeriesControl& ctl) {
  return 2.0 * a * a * gauss_2f1(a + 1.0, a + 1.0, 1.5, s, ctl);
}

Cd hyp_df2(Cd a, double s, const SeriesControl& ctl) {
  return (a + 0.5) * (a + 0.5) / 1.5 *
         gauss_2f1(a + 1.5, a + 1.5, 2.5, s, ctl);
}

}  // namespace

AmplitudePair initial_state(const PathSpec& spec) {
  double r0 = spec.r0();
  return {std::sqrt((r0 - spec.z0) / (2.0 * r0)),
          std::sqrt((r0 + spec.z0) / (2.0 * r0))};
}

PathASolver::PathASolver(const PathSpec& spec, const SeriesControl& ctl)
    : spec_(spec), ctl_(ctl) {
  require_variant(spec, PathVariant::A);
  double T = spec.total_time;
  x_big_ = spec.x0 * std::sqrt(T / (2.0 * spec.z0));
  eta_ = kI * (0.5 * x_big_ * x_big_);
  z_off_ = -std::sqrt(0.5 * spec.z0 * T);
  const Cd w(1.0, -1.0);
  AmplitudePair init = initial_state(spec);
  Cd pref = gamma_complex(1.0 - eta_) / kSqrt2Pi;
  Cd cross = (1.0 + kI) / x_big_;
  coef_plus_ = pref * (pcf_d(eta_ - 1.0, -w * z_off_, ctl) * init.a0 +
                       cross * pcf_d(eta_, -w * z_off_, ctl) * init.a1);
  coef_minus_ = pref * (pcf_d(eta_ - 1.0, w * z_off_, ctl) * init.a0 -
                        cross * pcf_d(eta_, w * z_off_, ctl) * init.a1);
}

AmplitudePair PathASolver::at(double t) const {
  require_time(spec_, t);
  double zz = z_off_ * (1.0 - 2.0 * t / spec_.total_time);  // Z(t)
  const Cd w(1.0, -1.0);
  Cd a0 = coef_plus_ * pcf_d(eta_, w * zz, ctl_) +
          coef_minus_ * pcf_d(eta_, -w * zz, ctl_);
  Cd a1 = 0.5 * (1.0 - kI) * x_big_ *
          (coef_plus_ * pcf_d(eta_ - 1.0, w * zz, ctl_) -
           coef_minus_ * pcf_d(eta_ - 1.0, -w * zz, ctl_));
  return {a0, a1};
}

PathBSolver::PathBSolver(const PathSpec& spec, const SeriesControl& ctl)
    : spec_(spec), ctl_(ctl) {
  require_variant(spec, PathVariant::B);
  double r0 = spec.r0(), al0 = spec.alpha0(), T = spec.total_time;
  a_ = -kI * (spec.x0 * T / (4.0 * al0));
  double q0 = (spec.x0 / r0) * (spec.x0 / r0);
  double s0 = (spec.z0 / r0) * (spec.z0 / r0);  // 1 - q0 without cancellation
  double rs0 = std::sqrt(s0);
  AmplitudePair init = initial_state(spec);
  Cd u1 = hyp_f1(a_, s0, ctl);
  Cd u1p = -hyp_df1(a_, s0, ctl);
  Cd f2 = hyp_f2(a_, s0, ctl);
  Cd u2 = rs0 * f2;
  Cd u2p = -f2 / (2.0 * rs0) - rs0 * hyp_df2(a_, s0, ctl);
  Cd pref = spec.x0 * spec.z0 / (a_ * r0 * r0);
  Cd qa0 = std::exp(a_ * std::log(q0));
  b1_ = -2.0 * a_ * qa0 * (pref * u2p * init.a0 + u2 * init.a1);
  b2_ = -2.0 * a_ * qa0 * (pref * u1p * init.a0 + u1 * init.a1);
}

AmplitudePair PathBSolver::at(double t) const {
  require_time(spec_, t);
  double al0 = spec_.alpha0(), T = spec_.total_time;
  double al = al0 * (2.0 * t / T - 1.0);
  double sa = std::sin(al), ca = std::cos(al);
  double s = sa * sa, q = ca * ca;
  Cd w1 = hyp_f1(a_, s, ctl_);
  Cd f2 = hyp_f2(a_, s, ctl_);
  Cd w2 = sa * f2;
  double aldot = 2.0 * al0 / T;
  double qdot = -2.0 * ca * sa * aldot;
  Cd w1dot = -hyp_df1(a_, s, ctl_) * qdot;
  Cd w2dot = aldot * ca * (f2 + 2.0 * s * hyp_df2(a_, s, ctl_));
  Cd qa = std::exp(a_ * std::log(q));
  Cd a0 = qa * (b1_ * w1 + b2_ * w2);
  Cd a1 = -kI * qa / spec_.x0 * (b1_ * w1dot + b2_ * w2dot);
  return {a0, a1};
}

PathCSolver::PathCSolver(const PathSpec& spec) : spec_(spec) {
  require_variant(spec, PathVariant::C);
  double r0 = spec.r0(), al0 = spec.alpha0(), T = spec.total_time;
  tau_ = kPi / std::sqrt(r0 * r0 + (al0 / T) * (al0 / T));
  init_ = initial_state(spec);
}

AmplitudePair PathCSolver::at(double t) const {
  require_time(spec_, t);
  double r0 = spec_.r0(), al0 = spec_.alpha0(), T = spec_.total_time;
  double al = al0 * (2.0 * t / T - 1.0);
  double om = kPi / tau_;  // rotating-frame precession rate
  double ct = std::cos(om * t), st = std::sin(om * t);
  double ca = std::cos(0.5 * al), sa = std::sin(0.5 * al);
  double c = std::cos(0.5 * al0), s = std::sin(0.5 * al0);
  Cd aa = ct * ca + Cd(al0 / T, r0) / om * (st * sa);
  Cd bb = ct * sa - Cd(al0 / T, -r0) / om * (st * ca);
  Cd a0 = (aa * c - bb * s) * init_.a0 + (aa * s + bb * c) * init_.a1;
  Cd a1 = (-std::conj(aa) * s - std::conj(bb) * c) * init_.a0 +
          (std::conj(aa) * c - std::conj(bb) * s) * init_.a1;
  return {a0, a1};
}

AmplitudePair solve_path(const PathSpec& spec, double t,
                         const SeriesControl& ctl) {
  switch (spec.variant) {
    case PathVariant::A:
      return PathASolver(spec, ctl).at(t);
    case PathVariant::B:
      return PathBSolver(spec, ctl).at(t);
    default:
      return PathCSolver(spec).at(t);
  }
}

EvolutionSeries evolve_series(const PathSpec& spec, int n_samples,
                              Solver solver, const SeriesControl& series_ctl,
                              const IntegratorControl& ode_ctl) {
  if (n_samples < 2) throw InvalidParameter("need at least two samples");
  double T = spec.total_time;
  std::vector<double> grid(n_samples);
  for (int i = 0; i < n_samples; ++i) grid[i] = T * i / (n_samples - 1);
  grid.back() = T;
  if (solver == Solver::oracle)
    return propagate_series(as_general_path(spec), grid, ode_ctl);

  EvolutionSeries out;
  out.t = grid;
  out.solver = solver_name(solver);
  out.amplitudes.reserve(grid.size());
  out.infidelity.reserve(grid.size());
  auto fill = [&](const std::function<AmplitudePair(double)>& at) {
    for (double t : grid) {
      AmplitudePair amp = at(t);
      out.amplitudes.push_back(amp);
      out.infidelity.push_back(
          instantaneous_infidelity(path_point(spec, t), amp));
    }
  };
  switch (spec.variant) {
    case PathVariant::A: {
      PathASolver s(spec, series_ctl);
      fill([&](double t) { return s.at(t); });
      break;
    }
    case PathVariant::B: {
      PathBSolver s(spec, series_ctl);
      fill([&](double t) { return s.at(t); });
      break;
    }
    default: {
      PathCSolver s(spec);
      fill([&](double t) { return s.at(t); });
      break;
    }
  }
  return out;
}

}  // namespace lzbound
