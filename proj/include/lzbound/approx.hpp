#pragma once

#include <optional>

#include "lzbound/model.hpp"
#include "lzbound/types.hpp"

namespace lzbound {

// Landau-Zener exponential for the linear sweep,
// I = exp(-pi x0^2 T / (2 z0)). Line-sweep only.
double lz_final_infidelity(const PathSpec& spec);

// Sweep-time window where the exponential tracks the true infidelity.
// Exists only for z0/x0 > 1/sqrt(2); the boundary case reports absent.
struct LZWindow {
  double t_minus;
  double t_plus;
};

std::optional<LZWindow> lz_validity_window(double x0, double z0);

// Sudden limit T -> 0: the state has no time to move, so the infidelity
// is the overlap mismatch z0^2 / r0^2. Same for all three sweeps.
double diabatic_limit(const PathSpec& spec);

// Leading adiabatic tail I(T) ~ envelope * sin^2(phase):
//   A: envelope = x0^2 z0^2 / (r0^6 T^2)
//   B, C: envelope = alpha0^2 / (r0^2 T^2)
double apt_envelope(const PathSpec& spec);
double apt_phase(const PathSpec& spec);
double apt_final_infidelity(const PathSpec& spec);

// Second-order adiabatic estimate assembled from endpoint data alone:
// coupling-weighted sweep speeds at the two ends interfere through the
// accumulated gap phase. Shape-agnostic; reduces to apt_final_infidelity
// for the three named sweeps.
double apt_general_second_order(const PathSpec& spec);

// Sweep time where the Landau-Zener exponential crosses the adiabatic
// envelope, from the lower Lambert branch. Exists only when z0/x0 is
// above a threshold near 0.562.
std::optional<double> crossover_time(double x0, double z0);

// Smallest ratio z0/x0 for which the crossover exists.
double crossover_threshold_ratio();

// Every approximation the comparison table needs for one sweep.
struct ApproximationReport {
  std::optional<double> lz_value;        // line sweep only
  std::optional<LZWindow> lz_window;     // line sweep only
  double diabatic;
  double apt_value;
  double apt_env;
  std::optional<double> t_cross;         // line sweep only
};

ApproximationReport approximation_report(const PathSpec& spec);

}  // namespace lzbound
