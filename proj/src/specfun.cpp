#include "lzbound/specfun.hpp"

#include <cmath>
#include <complex>

#include "lzbound/errors.hpp"

namespace lzbound {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrtPi = 1.77245385090551602730;
constexpr double kSqrt2Pi = 2.50662827463100050242;

void check_control(const SeriesControl& ctl) {
  if (ctl.max_terms < 1 || !(ctl.rel_tol > 0.0) || !(ctl.rel_tol < 1.0))
    throw InvalidParameter("bad series control");
}

bool nonpositive_integer(Cd z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// ---------------------------------------------------------------------------
// complex gamma: Lanczos (g = 607/128, 15 terms), reflection in log domain

constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

// requires Re z >= 1/2
Cd log_gamma_half_plane(Cd z) {
  Cd zz = z - 1.0;
  Cd x = kLanczos[0];
  for (int i = 1; i < 15; ++i) x += kLanczos[i] / (zz + double(i));
  Cd t = zz + (kLanczosG + 0.5);
  return (zz + 0.5) * std::log(t) - t + std::log(kSqrt2Pi * x);
}

// log sin(pi z) for Im z >= 0 without overflowing sinh at large |Im z|:
// sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| <= 1.
Cd log_sin_pi_upper(Cd z) {
  Cd e = std::exp(Cd(0.0, 2.0 * kPi) * z);
  return Cd(-kLn2, 0.5 * kPi) - Cd(0.0, kPi) * z + std::log(1.0 - e);
}

// any branch may be off by 2 pi i; callers only ever exponentiate
Cd log_gamma(Cd z) {
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return log_gamma_half_plane(z);
  Cd lg1mz = log_gamma(1.0 - z);  // Im(1-z) <= 0, Re(1-z) > 1/2
  return std::log(Cd(kPi)) - log_sin_pi_upper(z) - lg1mz;
}

double real_gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  long long n = static_cast<long long>(std::floor(x));
  return (n % 2 == 0) ? 1.0 : -1.0;
}

// ---------------------------------------------------------------------------
// double-double compensated arithmetic for the strongly cancelling 2F1 sums

struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd dd_add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline Dd dd_neg(Dd a) { return {-a.hi, -a.lo}; }

inline Dd dd_sub(Dd a, Dd b) { return dd_add(a, dd_neg(b)); }

inline Dd dd_mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline Dd dd_scale(Dd a, double b) {
  Dd p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline Dd dd_div(Dd a, Dd b) {
  double q1 = a.hi / b.hi;
  Dd r = dd_sub(a, dd_scale(b, q1));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_scale(b, q2));
  double q3 = r.hi / b.hi;
  Dd q = quick_two_sum(q1, q2);
  return dd_add(q, {q3, 0.0});
}

struct Ddc {
  Dd re, im;
};

inline Ddc ddc_from(Cd z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline Cd ddc_to(Ddc z) { return {z.re.hi + z.re.lo, z.im.hi + z.im.lo}; }

inline Ddc ddc_add(Ddc a, Ddc b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline Ddc ddc_mul(Ddc a, Ddc b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline Ddc ddc_scale(Ddc a, double b) {
  return {dd_scale(a.re, b), dd_scale(a.im, b)};
}

inline Ddc ddc_div(Ddc a, Ddc b) {
  Dd n = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
  Dd re = dd_add(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
  Dd im = dd_sub(dd_mul(a.im, b.re), dd_mul(a.re, b.im));
  return {dd_div(re, n), dd_div(im, n)};
}

inline double ddc_mag(Ddc a) { return std::hypot(a.re.hi, a.im.hi); }

// ---------------------------------------------------------------------------
// parabolic cylinder D_eta(xi)

Cd pcf_at_zero(Cd eta) {
  return kSqrtPi * std::exp(0.5 * eta * kLn2) *
         reciprocal_gamma(0.5 * (1.0 - eta));
}

Cd pcf_deriv_at_zero(Cd eta) {
  return -kSqrtPi * std::exp(0.5 * (eta + 1.0) * kLn2) *
         reciprocal_gamma(-0.5 * eta);
}

// even/odd Kummer pair about xi = 0
Cd pcf_maclaurin(Cd eta, Cd xi, const SeriesControl& ctl) {
  Cd x2 = 0.5 * xi * xi;
  Cd ae = -0.5 * eta, ao = 0.5 * (1.0 - eta);
  Cd se = 1.0, te = 1.0, so = 1.0, to = 1.0;
  int calm = 0, k = 0;
  for (; k < ctl.max_terms; ++k) {
    double kk = k;
    te *= (ae + kk) * x2 / ((0.5 + kk) * (kk + 1.0));
    to *= (ao + kk) * x2 / ((1.5 + kk) * (kk + 1.0));
    se += te;
    so += to;
    if (std::abs(te) <= ctl.rel_tol * std::abs(se) &&
        std::abs(to) <= ctl.rel_tol * std::abs(so)) {
      if (++calm >= 2) break;
    } else {
      calm = 0;
    }
  }
  if (k >= ctl.max_terms)
    throw NoConvergence("parabolic cylinder power series exceeded term cap");
  Cd pref = kSqrtPi * std::exp(0.5 * eta * kLn2 - 0.25 * xi * xi);
  return pref * (reciprocal_gamma(0.5 * (1.0 - eta)) * se -
                 kSqrt2 * xi * reciprocal_gamma(-0.5 * eta) * so);
}

// Taylor continuation of the Weber equation along the ray from 0 to xi.
// With xi = s u (|u| = 1) the equation reads f'' = p(s) f where
// p(s) = u^4 s^2/4 - u^2 (eta + 1/2) is an exact quadratic, so each step
// closes a three-term Taylor recurrence. Neutral (no exponential growth)
// on near-anti-Stokes rays arg xi = +-pi/4, which is exactly where the
// asymptotic series is weakest; those are also the production rays.
Cd pcf_march(Cd eta, Cd xi, const SeriesControl& ctl) {
  constexpr int kOrder = 30;
  constexpr double kBudget = 1.6;  // max phase advance omega*h per step
  double send = std::abs(xi);
  Cd u = xi / send;
  Cd w2 = u * u, w4 = w2 * w2;
  Cd ep = eta + 0.5;
  auto omega = [&](double s) {
    return std::sqrt(
        std::max(std::abs(w4 * (0.25 * s * s) - w2 * ep), 0.25));
  };
  Cd f = pcf_at_zero(eta);
  Cd fp = u * pcf_deriv_at_zero(eta);
  double s = 0.0;
  long steps = 0;
  while (s < send) {
    if (++steps > ctl.max_terms)
      throw NoConvergence("parabolic cylinder continuation stalled");
    double h = kBudget / omega(s);
    h = kBudget / std::max(omega(s), omega(std::min(s + h, send)));
    if (s + h >= send) h = send - s;
    Cd p0 = w4 * (0.25 * s * s) - w2 * ep;
    Cd p1 = w4 * (0.5 * s);
    Cd p2 = 0.25 * w4;
    Cd c[kOrder + 1];
    c[0] = f;
    c[1] = fp;
    for (int k = 0; k + 2 <= kOrder; ++k) {
      Cd rhs = p0 * c[k];
      if (k >= 1) rhs += p1 * c[k - 1];
      if (k >= 2) rhs += p2 * c[k - 2];
      c[k + 2] = rhs / double((k + 1) * (k + 2));
    }
    Cd nf = c[kOrder];
    for (int k = kOrder - 1; k >= 0; --k) nf = nf * h + c[k];
    Cd nfp = double(kOrder) * c[kOrder];
    for (int k = kOrder - 1; k >= 1; --k) nfp = nfp * h + double(k) * c[k];
    f = nf;
    fp = nfp;
    s += h;
  }
  return f;
}

struct AsymptoticTry {
  Cd value;
  double rel_err;
};

// fixed-order expansion in inverse powers of xi^2, optimally truncated
AsymptoticTry pcf_asymptotic(Cd eta, Cd xi) {
  Cd a = -0.5 * eta, b = 0.5 * (1.0 - eta);
  Cd zm = -2.0 / (xi * xi);
  Cd sum = 1.0, term = 1.0;
  double best = 1.0;
  for (int k = 0; k < 300; ++k) {
    Cd next = term * (a + double(k)) * (b + double(k)) * zm / double(k + 1);
    if (std::abs(next) >= std::abs(term)) break;  // divergent tail reached
    term = next;
    sum += term;
    best = std::abs(term);
    if (best <= 1e-16 * std::abs(sum)) break;
  }
  Cd pref = std::exp(eta * std::log(xi) - 0.25 * xi * xi);
  double denom = std::abs(sum);
  return {pref * sum, denom > 0.0 ? best / denom : 1.0};
}

// Re xi >= 0
Cd pcf_direct(Cd eta, Cd xi, const SeriesControl& ctl) {
  double axi = std::abs(xi);
  if (axi == 0.0) return pcf_at_zero(eta);
  if (axi <= ctl.regime_radius) {
    // the Maclaurin pair cancels once |xi| sqrt(|eta|) grows; switch to the
    // marched ODE which carries no such cancellation
    if (axi * std::sqrt(std::max(std::abs(eta), 1.0)) <= 12.0)
      return pcf_maclaurin(eta, xi, ctl);
    return pcf_march(eta, xi, ctl);
  }
  AsymptoticTry at = pcf_asymptotic(eta, xi);
  if (at.rel_err <= std::max(ctl.rel_tol, 1e-13)) return at.value;
  return pcf_march(eta, xi, ctl);
}

}  // namespace

Cd gamma_complex(Cd z) {
  if (nonpositive_integer(z)) throw PoleOfGamma("gamma pole");
  Cd g;
  if (z.imag() == 0.0) {
    g = std::tgamma(z.real());
  } else {
    g = std::exp(log_gamma(z));
  }
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
    throw OutOfDomain("gamma overflow");
  return g;
}

Cd reciprocal_gamma(Cd z) {
  if (nonpositive_integer(z)) return 0.0;
  Cd g;
  if (z.imag() == 0.0) {
    double x = z.real();
    g = real_gamma_sign(x) * std::exp(-std::lgamma(x));
  } else {
    g = std::exp(-log_gamma(z));
  }
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag()))
    throw OutOfDomain("reciprocal gamma overflow");
  return g;
}

Cd pcf_d(Cd eta, Cd xi, const SeriesControl& ctl) {
  check_control(ctl);
  if (xi.real() >= 0.0) return pcf_direct(eta, xi, ctl);
  if (xi.imag() < 0.0)
    return std::conj(pcf_d(std::conj(eta), std::conj(xi), ctl));
  // arg xi in (pi/2, pi]: connect to the right half plane
  Cd dm = pcf_direct(eta, -xi, ctl);
  Cd di = pcf_direct(-eta - 1.0, Cd(0.0, -1.0) * xi, ctl);
  const Cd ipi(0.0, kPi);
  return std::exp(eta * ipi) * dm +
         kSqrt2Pi * reciprocal_gamma(-eta) *
             std::exp(0.5 * (eta + 1.0) * ipi) * di;
}

Cd pcf_d_derivative(Cd eta, Cd xi, const SeriesControl& ctl) {
  return eta * pcf_d(eta - 1.0, xi, ctl) - 0.5 * xi * pcf_d(eta, xi, ctl);
}

Cd gauss_2f1(Cd a, Cd b, Cd c, double z, const SeriesControl& ctl) {
  check_control(ctl);
  if (!(z >= 0.0) || z >= 1.0)
    throw InvalidParameter("hypergeometric argument outside [0,1)");
  if (nonpositive_integer(c))
    throw InvalidParameter("hypergeometric lower parameter at a pole");
  if (z == 0.0) return 1.0;
  Ddc sum = ddc_from(1.0), term = ddc_from(1.0);
  double peak = 1.0;
  int calm = 0, k = 0;
  for (; k < ctl.max_terms; ++k) {
    double kk = k;
    Ddc num = ddc_mul(ddc_add(ddc_from(a), ddc_from(kk)),
                      ddc_add(ddc_from(b), ddc_from(kk)));
    Ddc den = ddc_scale(ddc_add(ddc_from(c), ddc_from(kk)), kk + 1.0);
    term = ddc_div(ddc_scale(ddc_mul(term, num), z), den);
    sum = ddc_add(sum, term);
    double tm = ddc_mag(term);
    peak = std::max(peak, tm);
    double sm = std::max(ddc_mag(sum), 1e-300);
    if (tm <= ctl.rel_tol * sm) {
      if (++calm >= 2) break;
    } else {
      calm = 0;
    }
  }
  if (k >= ctl.max_terms)
    throw NoConvergence("hypergeometric series exceeded term cap");
  double mag = std::max(ddc_mag(sum), 1e-300);
  // the series is summed in ~31-digit arithmetic; when the terms tower this
  // far above the result, the digits left are no longer trustworthy
  if (peak * 1e-31 > mag * 1e-8)
    throw ToleranceNotMet("hypergeometric cancellation exhausted precision");
  return ddc_to(sum);
}

Cd gauss_2f1_dz(Cd a, Cd b, Cd c, double z, const SeriesControl& ctl) {
  return a * b / c * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z, ctl);
}

double lambert_w_m1(double a) {
  const double neg_inv_e = -std::exp(-1.0);
  if (!(a < 0.0) || a < neg_inv_e * (1.0 + 4e-16))
    throw OutOfDomain("lambert argument outside [-1/e, 0)");
  double s = 2.0 * (1.0 + a * std::exp(1.0));
  if (s <= 0.0) return -1.0;  // at (or within rounding of) the branch point
  double p = -std::sqrt(s);
  double w;
  if (s < 0.5) {
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else {
    double l1 = std::log(-a);
    w = l1 - std::log(-l1);
  }
  for (int i = 0; i < 100; ++i) {
    double ew = std::exp(w);
    double f = w * ew - a;
    double f1 = ew * (w + 1.0);
    double denom = f1 - f * (w + 2.0) / (2.0 * (w + 1.0));
    if (denom == 0.0) break;
    double dw = f / denom;
    w -= dw;
    if (std::abs(dw) <= 1e-16 * std::abs(w)) break;
  }
  return w;
}

}  // namespace lzbound
