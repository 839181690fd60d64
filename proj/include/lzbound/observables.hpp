#pragma once

#include <vector>

#include "lzbound/model.hpp"
#include "lzbound/types.hpp"

namespace lzbound {

// Excited-state population of the state (a0, a1) at parameter point p.
double instantaneous_infidelity(const ParamPoint& p, const AmplitudePair& amp);

// Infidelity at the endpoint of the sweep.
double final_infidelity(const PathSpec& spec, Solver solver = Solver::analytic,
                        const SeriesControl& series_ctl = {},
                        const IntegratorControl& ode_ctl = {});

// On the arc the infidelity is exactly sinusoidal:
// I(t) = envelope * sin^2(pi t / period).
struct ArcInfidelity {
  double envelope;  // alpha0^2 / (r0^2 T^2 + alpha0^2)
  double period;    // tau = pi / sqrt(r0^2 + alpha0^2 / T^2)

  double at(double t) const;
};

ArcInfidelity arc_infidelity(const PathSpec& spec);

// The closed form above evaluated at t; arc sweeps only.
double path_c_closed_infidelity(const PathSpec& spec, double t);

struct InfidelityPoint {
  double t;
  double value;
};

using ZeroList = std::vector<InfidelityPoint>;

// Times where the infidelity returns to zero. On the arc these are the
// exact multiples of the period; on the line sweeps a dense scan brackets
// each local dip and a bracketed minimization polishes it. Only dips below
// zero_tol are reported; zero_tol = 0 picks 1e-10 (analytic) or 1e-8
// (oracle).
ZeroList find_infidelity_zeros(const PathSpec& spec,
                               Solver solver = Solver::analytic,
                               double zero_tol = 0.0);

}  // namespace lzbound
