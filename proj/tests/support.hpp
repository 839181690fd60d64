#pragma once

// Slow, independent re-implementations used only to cross-check the library:
// Stirling-series gamma and term-by-term 2F1 in extended precision, a
// bisection Lambert W, and finite-difference derivative stencils. None of
// this shares code with src/.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>

namespace testsupport {

using Cd = std::complex<double>;
using Cld = std::complex<long double>;

inline Cld stirling_log_gamma(Cld z) {
  Cld shift{0.0L, 0.0L};
  while (z.real() < 16.0L) {
    shift -= std::log(z);
    z += 1.0L;
  }
  // B_{2k} / (2k (2k-1)) for k = 1..7
  const long double coef[] = {
      1.0L / 12.0L,           -1.0L / 360.0L,  1.0L / 1260.0L,
      -1.0L / 1680.0L,        1.0L / 1188.0L,  -691.0L / 360360.0L,
      1.0L / 156.0L,
  };
  const long double half_log_2pi = 0.91893853320467274178032973640561764L;
  Cld s = (z - 0.5L) * std::log(z) - z + half_log_2pi;
  Cld zp = z;
  Cld z2 = z * z;
  for (long double c : coef) {
    s += c / zp;
    zp *= z2;
  }
  return s + shift;
}

inline Cd slow_gamma(Cd zin) {
  Cld z(zin.real(), zin.imag());
  if (z.real() < 0.5L) {
    const long double pi = 3.14159265358979323846264338327950288L;
    Cld val = pi / (std::sin(pi * z) * std::exp(stirling_log_gamma(1.0L - z)));
    return Cd(double(val.real()), double(val.imag()));
  }
  Cld val = std::exp(stirling_log_gamma(z));
  return Cd(double(val.real()), double(val.imag()));
}

inline Cd slow_2f1(Cd a_in, Cd b_in, Cd c_in, double z) {
  Cld a(a_in.real(), a_in.imag());
  Cld b(b_in.real(), b_in.imag());
  Cld c(c_in.real(), c_in.imag());
  Cld term{1.0L, 0.0L};
  Cld sum = term;
  for (int n = 0; n < 400000; ++n) {
    long double nn = n;
    term *= (a + nn) * (b + nn) * (long double)(z) / ((c + nn) * (nn + 1.0L));
    sum += term;
    if (std::abs(term) < 1e-24L * std::abs(sum) && n > 4) break;
  }
  return Cd(double(sum.real()), double(sum.imag()));
}

// w e^w = a on the lower branch, bisected to machine precision.
inline double bisect_w_m1(double a) {
  auto g = [](double w) { return w * std::exp(w); };
  double lo = -750.0, hi = -1.0;
  for (int i = 0; i < 400; ++i) {
    double mid = 0.5 * (lo + hi);
    // g decreases from -1/e at w = -1 toward 0- as w -> -inf
    if (g(mid) > a)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-18 * std::abs(hi)) break;
  }
  return 0.5 * (lo + hi);
}

// Fourth-order central difference along the real direction.
inline Cd fd_derivative(const std::function<Cd(double)>& f, double x,
                        double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) /
         (12.0 * h);
}

inline double fd_derivative_real(const std::function<double(double)>& f,
                                 double x, double h) {
  return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) /
         (12.0 * h);
}

}  // namespace testsupport
