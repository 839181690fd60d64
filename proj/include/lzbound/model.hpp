#pragma once

#include <array>

#include "lzbound/types.hpp"

namespace lzbound {

struct Vec2c {
  Cd a;
  Cd b;
};

struct Mat2c {
  Cd m00, m01, m10, m11;

  Vec2c operator*(const Vec2c& v) const {
    return {m00 * v.a + m01 * v.b, m10 * v.a + m11 * v.b};
  }
};

struct Vec3 {
  double x, y, z;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

// Point in the driving-parameter ball. Spherical accessors use the physics
// convention: theta from the +z axis, phi from the +x axis in [0, 2pi).
struct ParamPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double r() const;
  double theta() const;  // throws DegeneratePoint at r=0
  double phi() const;    // 0 when x=y=0
  double gap() const { return 2.0 * r(); }

  static ParamPoint from_spherical(double r, double theta, double phi);
};

enum class PathVariant { A, B, C };

inline const char* variant_name(PathVariant v) {
  switch (v) {
    case PathVariant::A: return "A";
    case PathVariant::B: return "B";
    default: return "C";
  }
}

// One of the three sweep protocols between (x0, 0, -z0) and (x0, 0, +z0):
//   A: vertical line, constant sweep rate dz/dt
//   B: vertical line, constant angular rate of the ray to the origin
//   C: arc at constant radius, constant angular rate
struct PathSpec {
  PathVariant variant;
  double x0;
  double z0;
  double total_time;

  PathSpec(PathVariant v, double x0_, double z0_, double T);

  double r0() const;
  double alpha0() const;  // arctan(z0/x0), half-opening angle of the sweep
};

Mat2c hamiltonian(const ParamPoint& p);

// Instantaneous eigenpairs; e0 = -r, e1 = +r. The ground state's first
// component is real and nonnegative.
struct EigenSystem {
  double e0;
  double e1;
  Vec2c ground;
  Vec2c excited;
};

EigenSystem eigensystem(const ParamPoint& p);

ParamPoint path_point(const PathSpec& s, double t);
Vec3 path_velocity(const PathSpec& s, double t);

// Euclidean speed |dr/dt| in parameter space.
double plain_speed(const PathSpec& s, double t);

// Ground-state manifold metric in spherical components (r, theta, phi):
// diag(0, 1/4, sin^2(theta)/4).
Mat3 metric_tensor(const ParamPoint& p);

// Speed induced by the manifold metric; constant alpha0/T on paths B and C.
double metric_speed(const PathSpec& s, double t);

// Metric length of the full sweep; equals alpha0 for all three variants.
double metric_length(const PathSpec& s);

}  // namespace lzbound
