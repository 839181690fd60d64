#include "lzbound/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "lzbound/errors.hpp"
#include "lzbound/observables.hpp"

namespace lzbound {

namespace {

struct State {
  Cd a0, a1;
};

inline State operator+(State a, State b) { return {a.a0 + b.a0, a.a1 + b.a1}; }

inline State operator*(double c, State a) { return {c * a.a0, c * a.a1}; }

// i dpsi/dt = H psi
State rhs(const GeneralPath& path, double t, const State& y) {
  Mat2c h = hamiltonian(path.at(t));
  const Cd mi(0.0, -1.0);
  return {mi * (h.m00 * y.a0 + h.m01 * y.a1),
          mi * (h.m10 * y.a0 + h.m11 * y.a1)};
}

// Dormand-Prince 5(4) tableau
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
     -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kE[7] = {71.0 / 57600,      0.0,
                          -71.0 / 16695,     71.0 / 1920,
                          -17253.0 / 339200, 22.0 / 525,
                          -1.0 / 40};
// dense-output quartic
constexpr double kD[7] = {-12715105075.0 / 11282082432,
                          0.0,
                          87487479700.0 / 32700410799,
                          -10690763975.0 / 1880347072,
                          701980252875.0 / 199316789632,
                          -1453857185.0 / 822651844,
                          69997945.0 / 29380423};

struct StepResult {
  State y;
  State k_last;  // FSAL: stage 7 becomes stage 1 of the next step
  double err;    // scaled local error estimate
  State k[7];
};

StepResult try_step(const GeneralPath& path, double t, double h,
                    const State& y, const State& k1,
                    const IntegratorControl& ctl) {
  StepResult r;
  r.k[0] = k1;
  for (int i = 1; i < 7; ++i) {
    State acc = y;
    for (int j = 0; j < i; ++j)
      if (kA[i][j] != 0.0) acc = acc + (h * kA[i][j]) * r.k[j];
    r.k[i] = rhs(path, t + kC[i] * h, acc);
  }
  // stage 7 is evaluated at the 5th-order solution itself
  State acc = y;
  for (int j = 0; j < 6; ++j)
    if (kA[6][j] != 0.0) acc = acc + (h * kA[6][j]) * r.k[j];
  r.y = acc;
  r.k_last = r.k[6] = rhs(path, t + h, acc);
  Cd e0{}, e1{};
  for (int i = 0; i < 7; ++i) {
    e0 += (h * kE[i]) * r.k[i].a0;
    e1 += (h * kE[i]) * r.k[i].a1;
  }
  auto comp = [&](double e, double ya, double yb) {
    double sk = ctl.abs_tol +
                ctl.rel_tol * std::max(std::abs(ya), std::abs(yb));
    return (e / sk) * (e / sk);
  };
  double s = comp(e0.real(), y.a0.real(), r.y.a0.real()) +
             comp(e0.imag(), y.a0.imag(), r.y.a0.imag()) +
             comp(e1.real(), y.a1.real(), r.y.a1.real()) +
             comp(e1.imag(), y.a1.imag(), r.y.a1.imag());
  r.err = std::sqrt(0.25 * s);
  return r;
}

// Hairer-style quartic interpolant over an accepted step
State dense_eval(const State& y0, const State& y1, const StepResult& sr,
                 double h, double theta) {
  State r2 = y1 + (-1.0) * y0;
  State r3 = h * sr.k[0] + (-1.0) * r2;
  State r4 = r2 + (-1.0) * (h * sr.k[6]) + (-1.0) * r3;
  State r5{};
  for (int i = 0; i < 7; ++i)
    if (kD[i] != 0.0) r5 = r5 + (h * kD[i]) * sr.k[i];
  double t1 = 1.0 - theta;
  State acc = r4 + t1 * r5;
  acc = r3 + theta * acc;
  acc = r2 + t1 * acc;
  return y0 + theta * acc;
}

void check_integrator(const IntegratorControl& ctl) {
  if (!(ctl.rel_tol > 0.0) || ctl.rel_tol > 1e-2 || !(ctl.abs_tol > 0.0) ||
      ctl.abs_tol > 1e-2)
    throw InvalidParameter("integrator tolerances must lie in (0, 1e-2]");
  if (ctl.max_steps < 1) throw InvalidParameter("bad step budget");
}

}  // namespace

Rotation::Rotation(const Mat3& m) : m_(m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += m[i][k] * m[j][k];
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > 1e-12)
        throw InvalidParameter("rotation matrix is not orthogonal");
    }
  }
  double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (std::abs(det - 1.0) > 1e-12)
    throw InvalidParameter("rotation matrix must have determinant +1");
}

ParamPoint Rotation::apply(const ParamPoint& p) const {
  return {m_[0][0] * p.x + m_[0][1] * p.y + m_[0][2] * p.z,
          m_[1][0] * p.x + m_[1][1] * p.y + m_[1][2] * p.z,
          m_[2][0] * p.x + m_[2][1] * p.y + m_[2][2] * p.z};
}

Rotation Rotation::about_axis(const Vec3& axis, double angle) {
  double n = std::sqrt(axis.x * axis.x + axis.y * axis.y + axis.z * axis.z);
  if (n == 0.0) throw InvalidParameter("rotation axis must be nonzero");
  double ux = axis.x / n, uy = axis.y / n, uz = axis.z / n;
  double c = std::cos(angle), s = std::sin(angle), v = 1.0 - c;
  return Rotation(Mat3{{{c + ux * ux * v, ux * uy * v - uz * s,
                         ux * uz * v + uy * s},
                        {uy * ux * v + uz * s, c + uy * uy * v,
                         uy * uz * v - ux * s},
                        {uz * ux * v - uy * s, uz * uy * v + ux * s,
                         c + uz * uz * v}}});
}

Rotation Rotation::identity() {
  return Rotation(Mat3{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}});
}

ParamPoint GeneralPath::at(double t) const {
  ParamPoint p = point(t);
  return frame ? frame->apply(p) : p;
}

GeneralPath as_general_path(const PathSpec& spec) {
  return {[spec](double t) { return path_point(spec, t); }, spec.total_time,
          std::nullopt};
}

std::vector<AmplitudePair> propagate_grid(const GeneralPath& path,
                                          const AmplitudePair& start,
                                          const std::vector<double>& times,
                                          const IntegratorControl& ctl) {
  check_integrator(ctl);
  if (times.empty()) return {};
  for (size_t i = 0; i + 1 < times.size(); ++i)
    if (!(times[i] < times[i + 1]))
      throw InvalidParameter("time grid must be strictly increasing");
  if (times.front() < 0.0 || times.back() > path.total_time)
    throw TimeOutOfRange("grid outside [0, T]");

  std::vector<AmplitudePair> out;
  out.reserve(times.size());
  double t = times.front();
  State y{start.a0, start.a1};
  out.push_back(start);
  size_t next = 1;
  if (next >= times.size()) return out;

  double span = times.back() - t;
  double h_min = ctl.h_min > 0.0 ? ctl.h_min
                                 : 1e-14 * std::max(1.0, path.total_time);
  double h = ctl.h_init > 0.0 ? ctl.h_init : 0.01 * span;
  if (ctl.max_step > 0.0) h = std::min(h, ctl.max_step);
  State k1 = rhs(path, t, y);
  long steps = 0;

  while (next < times.size()) {
    if (++steps > ctl.max_steps)
      throw ToleranceNotMet("integrator exceeded its step budget");
    if (!ctl.dense_output) h = std::min(h, times[next] - t);
    h = std::min(h, times.back() - t);
    if (h < h_min) throw StepSizeUnderflow("step size underflow");
    StepResult sr = try_step(path, t, h, y, k1, ctl);
    double fac = 0.9 * std::pow(std::max(sr.err, 1e-50), -0.2);
    fac = std::clamp(fac, 0.2, 5.0);
    if (sr.err <= 1.0) {
      double t_new = t + h;
      if (ctl.dense_output) {
        while (next < times.size() && times[next] <= t_new + 1e-14 * t_new) {
          double theta = (times[next] - t) / h;
          State yi = theta >= 1.0 ? sr.y : dense_eval(y, sr.y, sr, h, theta);
          out.push_back({yi.a0, yi.a1});
          ++next;
        }
      } else if (times[next] - t_new <= 1e-14 * std::max(1.0, t_new)) {
        t_new = times[next];
        out.push_back({sr.y.a0, sr.y.a1});
        ++next;
      }
      t = t_new;
      y = sr.y;
      k1 = sr.k_last;
    }
    h *= fac;
    if (ctl.max_step > 0.0) h = std::min(h, ctl.max_step);
  }
  return out;
}

AmplitudePair propagate(const GeneralPath& path, const AmplitudePair& start,
                        double t, const IntegratorControl& ctl) {
  if (t == 0.0) return start;
  std::vector<AmplitudePair> out =
      propagate_grid(path, start, {0.0, t}, ctl);
  return out.back();
}

EvolutionSeries propagate_series(const GeneralPath& path,
                                 const std::vector<double>& times,
                                 const IntegratorControl& ctl) {
  if (times.empty()) throw InvalidParameter("empty time grid");
  AmplitudePair start;
  {
    EigenSystem es = eigensystem(path.at(times.front()));
    start = {es.ground.a, es.ground.b};
  }
  std::vector<AmplitudePair> amps = propagate_grid(path, start, times, ctl);
  EvolutionSeries out;
  out.t = times;
  out.solver = solver_name(Solver::oracle);
  out.amplitudes = std::move(amps);
  out.infidelity.reserve(times.size());
  for (size_t i = 0; i < times.size(); ++i)
    out.infidelity.push_back(
        instantaneous_infidelity(path.at(times[i]), out.amplitudes[i]));
  return out;
}

double compare_series(const EvolutionSeries& lhs, const EvolutionSeries& rhs) {
  if (lhs.t.size() != rhs.t.size())
    throw GridMismatch("series sampled on different grids");
  double worst = 0.0;
  for (size_t i = 0; i < lhs.t.size(); ++i) {
    if (lhs.t[i] != rhs.t[i])
      throw GridMismatch("series sampled on different grids");
    worst = std::max(worst, std::abs(lhs.infidelity[i] - rhs.infidelity[i]));
  }
  return worst;
}

}  // namespace lzbound
