#include "lzbound/model.hpp"

#include <cmath>

#include "lzbound/errors.hpp"
#include "lzbound/quadrature.hpp"

namespace lzbound {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double ParamPoint::r() const { return std::sqrt(x * x + y * y + z * z); }

double ParamPoint::theta() const {
  if (x == 0.0 && y == 0.0 && z == 0.0)
    throw DegeneratePoint("direction undefined at the origin");
  return std::atan2(std::hypot(x, y), z);
}

double ParamPoint::phi() const {
  if (x == 0.0 && y == 0.0) return 0.0;
  double p = std::atan2(y, x);
  return p < 0.0 ? p + 2.0 * kPi : p;
}

ParamPoint ParamPoint::from_spherical(double r, double theta, double phi) {
  return {r * std::sin(theta) * std::cos(phi),
          r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
}

PathSpec::PathSpec(PathVariant v, double x0_, double z0_, double T)
    : variant(v), x0(x0_), z0(z0_), total_time(T) {
  if (!(x0 > 0.0)) throw InvalidParameter("x0 must be positive");
  if (!(z0 > 0.0)) throw InvalidParameter("z0 must be positive");
  if (!(T > 0.0)) throw InvalidParameter("total time must be positive");
}

double PathSpec::r0() const { return std::hypot(x0, z0); }

double PathSpec::alpha0() const { return std::atan2(z0, x0); }

Mat2c hamiltonian(const ParamPoint& p) {
  return {{-p.z, 0.0}, {-p.x, p.y}, {-p.x, -p.y}, {p.z, 0.0}};
}

EigenSystem eigensystem(const ParamPoint& p) {
  double r = p.r();
  if (r == 0.0) throw DegeneratePoint("eigensystem at the diabolic point");
  double th = p.theta();
  Cd eip = std::polar(1.0, p.phi());
  double ch = std::cos(0.5 * th), sh = std::sin(0.5 * th);
  return {-r, r, {ch, eip * sh}, {-sh / eip, ch}};
}

ParamPoint path_point(const PathSpec& s, double t) {
  if (t < 0.0 || t > s.total_time)
    throw TimeOutOfRange("t outside [0, T]");
  double frac = 2.0 * t / s.total_time - 1.0;
  switch (s.variant) {
    case PathVariant::A:
      return {s.x0, 0.0, s.z0 * frac};
    case PathVariant::B:
      return {s.x0, 0.0, s.x0 * std::tan(s.alpha0() * frac)};
    default: {
      double al = s.alpha0() * frac;
      return {s.r0() * std::cos(al), 0.0, s.r0() * std::sin(al)};
    }
  }
}

Vec3 path_velocity(const PathSpec& s, double t) {
  if (t < 0.0 || t > s.total_time)
    throw TimeOutOfRange("t outside [0, T]");
  double T = s.total_time;
  double rate = 2.0 * s.alpha0() / T;
  double al = s.alpha0() * (2.0 * t / T - 1.0);
  switch (s.variant) {
    case PathVariant::A:
      return {0.0, 0.0, 2.0 * s.z0 / T};
    case PathVariant::B: {
      double c = std::cos(al);
      return {0.0, 0.0, s.x0 * rate / (c * c)};
    }
    default:
      return {-s.r0() * std::sin(al) * rate, 0.0, s.r0() * std::cos(al) * rate};
  }
}

double plain_speed(const PathSpec& s, double t) {
  Vec3 v = path_velocity(s, t);
  return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

Mat3 metric_tensor(const ParamPoint& p) {
  double st = std::sin(p.theta());
  return {{{0.0, 0.0, 0.0},
           {0.0, 0.25, 0.0},
           {0.0, 0.0, 0.25 * st * st}}};
}

// The induced speed only sees the angular part of the motion: project the
// velocity onto the direction of r, remove it, and scale the remainder by
// 1/(2r). Equivalent to sqrt(g_mn dmu dnu) in spherical components.
double metric_speed(const PathSpec& s, double t) {
  ParamPoint p = path_point(s, t);
  Vec3 v = path_velocity(s, t);
  double r = p.r();
  if (r == 0.0) throw DegeneratePoint("metric speed at the diabolic point");
  double radial = (v.x * p.x + v.y * p.y + v.z * p.z) / r;
  double v2 = v.x * v.x + v.y * v.y + v.z * v.z;
  double perp2 = v2 - radial * radial;
  return std::sqrt(perp2 > 0.0 ? perp2 : 0.0) / (2.0 * r);
}

double metric_length(const PathSpec& s) {
  double T = s.total_time;
  auto f = [&s](double t) { return metric_speed(s, t); };
  // the path-A integrand peaks sharply at the gap minimum t = T/2
  return integrate(f, 0.0, 0.5 * T) + integrate(f, 0.5 * T, T);
}

}  // namespace lzbound
