#include "lzbound/quadrature.hpp"

#include <cmath>

#include "lzbound/errors.hpp"

namespace lzbound {

namespace {

// Kronrod 15-point nodes on [0,1] side (abscissae are symmetric) with the
// embedded Gauss 7-point rule on the odd-indexed nodes.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWeightK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWeightG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double kronrod;
  double err;
};

Panel rule(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double gauss = kWeightG[3] * fc;
  double kron = kWeightK[7] * fc;
  for (int i = 0; i < 7; ++i) {
    double pair = f(c - h * kNodes[i]) + f(c + h * kNodes[i]);
    kron += kWeightK[i] * pair;
    if (i % 2 == 1) gauss += kWeightG[i / 2] * pair;
  }
  return {kron * h, std::abs(kron - gauss) * h};
}

double refine(const std::function<double(double)>& f, double a, double b,
              double tol, int depth, int max_depth) {
  Panel p = rule(f, a, b);
  if (p.err <= tol || b - a <= 1e-15 * (std::abs(a) + std::abs(b)))
    return p.kronrod;
  if (depth >= max_depth)
    throw ToleranceNotMet("quadrature did not converge");
  double c = 0.5 * (a + b);
  return refine(f, a, c, 0.5 * tol, depth + 1, max_depth) +
         refine(f, c, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_depth) {
  if (a == b) return 0.0;
  Panel whole = rule(f, a, b);
  double scale = std::abs(whole.kronrod);
  double tol = rel_tol * (scale > 1e-300 ? scale : 1e-300);
  return refine(f, a, b, tol, 0, max_depth);
}

}  // namespace lzbound
