#pragma once

#include "lzbound/model.hpp"
#include "lzbound/types.hpp"

namespace lzbound {

// Ground state amplitudes at t = 0 in the fixed basis,
// ( sqrt(r0 - z0), sqrt(r0 + z0) ) / sqrt(2 r0), both entries real positive.
AmplitudePair initial_state(const PathSpec& spec);

// Closed-form propagators for the three sweep shapes. Each solver
// precomputes the path constants once; evaluation at a time is then cheap.

// Linear sweep: parabolic cylinder functions of pure imaginary order.
class PathASolver {
 public:
  PathASolver(const PathSpec& spec, const SeriesControl& ctl = {});
  AmplitudePair at(double t) const;

 private:
  PathSpec spec_;
  SeriesControl ctl_;
  Cd eta_;         // i X0^2 / 2
  double x_big_;   // X0 = x0 sqrt(T / 2 z0)
  double z_off_;   // Z(0) = -sqrt(z0 T / 2)
  Cd coef_plus_, coef_minus_;
};

// Tangent sweep at constant x: hypergeometric functions in s = sin^2 alpha.
class PathBSolver {
 public:
  PathBSolver(const PathSpec& spec, const SeriesControl& ctl = {});
  AmplitudePair at(double t) const;

 private:
  PathSpec spec_;
  SeriesControl ctl_;
  Cd a_;           // -i x0 T / (4 alpha0)
  Cd b1_, b2_;
};

// Constant-radius arc: the rotating-frame propagator is elementary.
class PathCSolver {
 public:
  explicit PathCSolver(const PathSpec& spec);
  AmplitudePair at(double t) const;

  double period() const { return tau_; }

 private:
  PathSpec spec_;
  double tau_;     // pi / sqrt(r0^2 + alpha0^2 / T^2)
  AmplitudePair init_;
};

// One-shot evaluation at time t.
AmplitudePair solve_path(const PathSpec& spec, double t,
                         const SeriesControl& ctl = {});

// Amplitudes and infidelity on a uniform grid of n_samples points spanning
// [0, T] (endpoints included), with the requested solver backend.
EvolutionSeries evolve_series(const PathSpec& spec, int n_samples,
                              Solver solver = Solver::analytic,
                              const SeriesControl& series_ctl = {},
                              const IntegratorControl& ode_ctl = {});

}  // namespace lzbound
