#pragma once

#include <complex>
#include <string>
#include <vector>

namespace lzbound {

using Cd = std::complex<double>;

// State in the instantaneous-at-start basis: psi = (a0, a1)^T.
struct AmplitudePair {
  Cd a0;
  Cd a1;

  double norm2() const { return std::norm(a0) + std::norm(a1); }
};

enum class Solver { analytic, oracle };

inline const char* solver_name(Solver s) {
  return s == Solver::analytic ? "analytic" : "oracle";
}

// Termination policy for the special-function series.
struct SeriesControl {
  int max_terms = 100000;       // hard cap; exceeding it throws NoConvergence
  double rel_tol = 1e-14;       // two consecutive terms below rel_tol*|sum| stop a series
  double regime_radius = 6.0;   // |xi| switch point between power series and asymptotics
};

// Adaptive Runge-Kutta policy.
struct IntegratorControl {
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  double max_step = 0.0;        // 0: no cap
  double h_init = 0.0;          // 0: choose automatically
  double h_min = 0.0;           // 0: 1e-14 * max(1, T)
  long max_steps = 5000000;
  bool dense_output = false;    // true: sample grid from the step interpolant
};

// Sampled evolution on a uniform time grid.
struct EvolutionSeries {
  std::vector<double> t;
  std::vector<AmplitudePair> amplitudes;
  std::vector<double> infidelity;
  std::string solver;
};

}  // namespace lzbound
