#include "lzbound/approx.hpp"

#include <cmath>

#include "lzbound/errors.hpp"
#include "lzbound/quadrature.hpp"
#include "lzbound/specfun.hpp"

namespace lzbound {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
constexpr double kSqrt2 = 1.41421356237309504880;

Cd bra_op_ket(const Vec2c& bra, const Mat2c& op, const Vec2c& ket) {
  Cd k0 = op.m00 * ket.a + op.m01 * ket.b;
  Cd k1 = op.m10 * ket.a + op.m11 * ket.b;
  return std::conj(bra.a) * k0 + std::conj(bra.b) * k1;
}

// sum_mu mu_dot <E0|dH/dmu|E1>, divided by the squared gap
Cd coupling_over_gap2(const PathSpec& s, double t) {
  ParamPoint p = path_point(s, t);
  Vec3 v = path_velocity(s, t);
  EigenSystem es = eigensystem(p);
  const Mat2c dx{0.0, -1.0, -1.0, 0.0};
  const Mat2c dy{0.0, Cd(0.0, 1.0), Cd(0.0, -1.0), 0.0};
  const Mat2c dz{-1.0, 0.0, 0.0, 1.0};
  Cd me = v.x * bra_op_ket(es.ground, dx, es.excited) +
          v.y * bra_op_ket(es.ground, dy, es.excited) +
          v.z * bra_op_ket(es.ground, dz, es.excited);
  double gap = p.gap();
  return me / (gap * gap);
}

// stable log((r0+z0)/(r0-z0)) using (r0-z0)(r0+z0) = x0^2
double gap_log(const PathSpec& s) {
  return 2.0 * std::log((s.r0() + s.z0) / s.x0);
}

}  // namespace

double lz_final_infidelity(const PathSpec& spec) {
  if (spec.variant != PathVariant::A)
    throw SolverMismatch("the exponential holds only for the linear sweep");
  return std::exp(-kPi * spec.x0 * spec.x0 * spec.total_time /
                  (2.0 * spec.z0));
}

std::optional<LZWindow> lz_validity_window(double x0, double z0) {
  if (!(x0 > 0.0) || !(z0 > 0.0))
    throw InvalidParameter("endpoints must be positive");
  double x2 = x0 * x0, z2 = z0 * z0;
  double disc = 1.0 - x2 * x2 / (4.0 * z2 * z2);
  if (disc <= 0.0) return std::nullopt;  // open-interval convention
  double scale = 8.0 * z0 * z2 / (x2 * x2);
  double root = std::sqrt(disc);
  return LZWindow{scale * (1.0 - root), scale * (1.0 + root)};
}

double diabatic_limit(const PathSpec& spec) {
  double r0 = spec.r0();
  return (spec.z0 / r0) * (spec.z0 / r0);
}

double apt_envelope(const PathSpec& spec) {
  double r0 = spec.r0(), T = spec.total_time;
  if (spec.variant == PathVariant::A) {
    double num = spec.x0 * spec.z0 / (r0 * r0 * r0);
    return num * num / (T * T);
  }
  double al0 = spec.alpha0();
  return al0 * al0 / (r0 * r0 * T * T);
}

double apt_phase(const PathSpec& spec) {
  double r0 = spec.r0(), T = spec.total_time;
  switch (spec.variant) {
    case PathVariant::A:
      return 0.5 * T *
             (r0 + spec.x0 * spec.x0 / (2.0 * spec.z0) * gap_log(spec));
    case PathVariant::B:
      return 0.5 * T * (spec.x0 / spec.alpha0()) * gap_log(spec);
    default:
      return T * r0;
  }
}

double apt_final_infidelity(const PathSpec& spec) {
  double s = std::sin(apt_phase(spec));
  return apt_envelope(spec) * s * s;
}

double apt_general_second_order(const PathSpec& spec) {
  Cd c0 = coupling_over_gap2(spec, 0.0);
  Cd cT = coupling_over_gap2(spec, spec.total_time);
  double dphi;
  if (spec.variant == PathVariant::B) {
    dphi = integrate(
        [&spec](double t) { return path_point(spec, t).gap(); }, 0.0,
        spec.total_time);
  } else {
    dphi = 2.0 * apt_phase(spec);
  }
  return std::norm(cT - std::exp(Cd(0.0, -dphi)) * c0);
}

std::optional<double> crossover_time(double x0, double z0) {
  if (!(x0 > 0.0) || !(z0 > 0.0))
    throw InvalidParameter("endpoints must be positive");
  double r0 = std::hypot(x0, z0);
  double cube = (x0 / r0) * (x0 / r0) * (x0 / r0);
  double arg = -kPi * cube / (4.0 * kSqrt2);
  if (arg < -std::exp(-1.0) * (1.0 + 4e-16)) return std::nullopt;
  return -(4.0 * z0 / (kPi * x0 * x0)) * lambert_w_m1(arg);
}

double crossover_threshold_ratio() {
  double u = std::cbrt(kPi * kE / (4.0 * kSqrt2));  // sqrt(1 + ratio^2)
  return std::sqrt(u * u - 1.0);
}

ApproximationReport approximation_report(const PathSpec& spec) {
  ApproximationReport rep{};
  rep.diabatic = diabatic_limit(spec);
  rep.apt_value = apt_final_infidelity(spec);
  rep.apt_env = apt_envelope(spec);
  if (spec.variant == PathVariant::A) {
    rep.lz_value = lz_final_infidelity(spec);
    rep.lz_window = lz_validity_window(spec.x0, spec.z0);
    rep.t_cross = crossover_time(spec.x0, spec.z0);
  }
  return rep;
}

}  // namespace lzbound
