#include "lzbound/observables.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>

#include "lzbound/analytic.hpp"
#include "lzbound/errors.hpp"
#include "lzbound/oracle.hpp"

namespace lzbound {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::function<double(double)> point_evaluator(const PathSpec& spec,
                                              Solver solver) {
  if (solver == Solver::oracle) {
    GeneralPath gp = as_general_path(spec);
    AmplitudePair start = initial_state(spec);
    return [spec, gp, start](double t) {
      AmplitudePair amp = propagate(gp, start, t, {});
      return instantaneous_infidelity(path_point(spec, t), amp);
    };
  }
  switch (spec.variant) {
    case PathVariant::A: {
      auto s = std::make_shared<PathASolver>(spec);
      return [spec, s](double t) {
        return instantaneous_infidelity(path_point(spec, t), s->at(t));
      };
    }
    case PathVariant::B: {
      auto s = std::make_shared<PathBSolver>(spec);
      return [spec, s](double t) {
        return instantaneous_infidelity(path_point(spec, t), s->at(t));
      };
    }
    default: {
      auto s = std::make_shared<PathCSolver>(spec);
      return [spec, s](double t) {
        return instantaneous_infidelity(path_point(spec, t), s->at(t));
      };
    }
  }
}

double golden_minimize(const std::function<double(double)>& f, double a,
                       double b, double width) {
  const double g = 0.6180339887498949;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > width) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double instantaneous_infidelity(const ParamPoint& p,
                                const AmplitudePair& amp) {
  double r = p.r();
  if (r == 0.0) throw DegeneratePoint("infidelity at the diabolic point");
  Cd cross = Cd(p.x, p.y) * amp.a0 * std::conj(amp.a1);
  double v = (r - p.z * (1.0 - 2.0 * std::norm(amp.a1)) - 2.0 * cross.real()) /
             (2.0 * r);
  if (v < 0.0 && v > -1e-12) return 0.0;
  if (v > 1.0 && v < 1.0 + 1e-12) return 1.0;
  return v;
}

double final_infidelity(const PathSpec& spec, Solver solver,
                        const SeriesControl& series_ctl,
                        const IntegratorControl& ode_ctl) {
  double T = spec.total_time;
  AmplitudePair amp =
      solver == Solver::analytic
          ? solve_path(spec, T, series_ctl)
          : propagate(as_general_path(spec), initial_state(spec), T, ode_ctl);
  return instantaneous_infidelity(path_point(spec, T), amp);
}

double ArcInfidelity::at(double t) const {
  double s = std::sin(kPi * t / period);
  return envelope * s * s;
}

ArcInfidelity arc_infidelity(const PathSpec& spec) {
  if (spec.variant != PathVariant::C)
    throw SolverMismatch("closed-form infidelity exists only on the arc");
  double r0 = spec.r0(), al0 = spec.alpha0(), T = spec.total_time;
  double w = al0 / T;
  return {al0 * al0 / (r0 * r0 * T * T + al0 * al0),
          kPi / std::sqrt(r0 * r0 + w * w)};
}

double path_c_closed_infidelity(const PathSpec& spec, double t) {
  return arc_infidelity(spec).at(t);
}

ZeroList find_infidelity_zeros(const PathSpec& spec, Solver solver,
                               double zero_tol) {
  double tol = zero_tol > 0.0
                   ? zero_tol
                   : (solver == Solver::analytic ? 1e-10 : 1e-8);
  double T = spec.total_time;
  auto eval = point_evaluator(spec, solver);
  ZeroList out;

  if (spec.variant == PathVariant::C) {
    double tau = arc_infidelity(spec).period;
    int kmax = int(std::floor(T / tau + 1e-9));
    for (int k = 0; k <= kmax; ++k) {
      double tk = std::min(k * tau, T);
      double v = eval(tk);
      if (v < tol) out.push_back({tk, v});
    }
    return out;
  }

  // oscillation period proxy: the arc period at the same endpoints
  PathSpec arc(PathVariant::C, spec.x0, spec.z0, T);
  int n = std::max(1000, int(20.0 * T / arc_infidelity(arc).period) + 1);
  EvolutionSeries series = evolve_series(spec, n + 1, solver);
  const std::vector<double>& iv = series.infidelity;
  for (int i = 1; i + 1 < int(iv.size()); ++i) {
    if (iv[i] <= iv[i - 1] && iv[i] <= iv[i + 1]) {
      double tm = golden_minimize(eval, series.t[i - 1], series.t[i + 1],
                                  1e-9 * T);
      double v = eval(tm);
      if (v < tol) out.push_back({tm, v});
    }
  }
  return out;
}

}  // namespace lzbound
