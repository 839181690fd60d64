#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lzbound/model.hpp"
#include "lzbound/types.hpp"

namespace lzbound {

// Proper rotation acting on parameter space. Checked at construction:
// orthogonal to 1e-12 and det = +1.
class Rotation {
 public:
  explicit Rotation(const Mat3& m);

  ParamPoint apply(const ParamPoint& p) const;
  static Rotation about_axis(const Vec3& axis, double angle);
  static Rotation identity();

  const Mat3& matrix() const { return m_; }

 private:
  Mat3 m_;
};

// Arbitrary parameter-space trajectory for the integrator. The three named
// sweeps are a special case; rotated copies of them exercise basis
// independence.
struct GeneralPath {
  std::function<ParamPoint(double)> point;
  double total_time = 0.0;
  std::optional<Rotation> frame;  // applied to point(t) when present

  ParamPoint at(double t) const;
};

GeneralPath as_general_path(const PathSpec& spec);

// Schrodinger integration with an embedded Dormand-Prince 5(4) pair.
// Steps are clipped to the requested grid unless ctl.dense_output is set,
// in which case the quartic interpolant supplies off-step values.
AmplitudePair propagate(const GeneralPath& path, const AmplitudePair& start,
                        double t, const IntegratorControl& ctl = {});

std::vector<AmplitudePair> propagate_grid(const GeneralPath& path,
                                          const AmplitudePair& start,
                                          const std::vector<double>& times,
                                          const IntegratorControl& ctl = {});

// Full series on a grid, starting from the instantaneous ground state at
// path.at(times.front()). Amplitudes are never renormalized; norm drift is
// the integrator's health metric.
EvolutionSeries propagate_series(const GeneralPath& path,
                                 const std::vector<double>& times,
                                 const IntegratorControl& ctl = {});

// Max over the (shared) grid of the infidelity discrepancy.
double compare_series(const EvolutionSeries& lhs, const EvolutionSeries& rhs);

}  // namespace lzbound
