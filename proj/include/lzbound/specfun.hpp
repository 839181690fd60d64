#pragma once

#include "lzbound/types.hpp"

namespace lzbound {

// Gamma for complex argument (Lanczos, reflection for Re z < 1/2).
Cd gamma_complex(Cd z);

// 1/Gamma; zero at the poles instead of throwing.
Cd reciprocal_gamma(Cd z);

// Weber parabolic cylinder function D_eta(xi) for complex order and argument.
// Evaluation regime is chosen from |xi|, arg xi and the conditioning of the
// power series: Maclaurin series inside ctl.regime_radius, an optimally
// truncated asymptotic series outside it, a connection formula for
// |arg xi| > pi/2, and a Taylor continuation of the defining ODE along the
// ray from 0 when neither series is trustworthy.
Cd pcf_d(Cd eta, Cd xi, const SeriesControl& ctl = {});

// d/dxi D_eta(xi) = eta D_{eta-1}(xi) - (xi/2) D_eta(xi).
Cd pcf_d_derivative(Cd eta, Cd xi, const SeriesControl& ctl = {});

// Gauss hypergeometric 2F1(a, b; c; z) for complex parameters and real
// z in [0, 1). Summed in compensated double-double arithmetic so that the
// strongly cancelling large-|a| regime stays accurate.
Cd gauss_2f1(Cd a, Cd b, Cd c, double z, const SeriesControl& ctl = {});

// d/dz 2F1(a, b; c; z) = (a b / c) 2F1(a+1, b+1; c+1; z).
Cd gauss_2f1_dz(Cd a, Cd b, Cd c, double z, const SeriesControl& ctl = {});

// Lower real branch W_{-1} on [-1/e, 0).
double lambert_w_m1(double a);

}  // namespace lzbound
