#pragma once

#include <functional>

namespace lzbound {

// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, int max_depth = 40);

}  // namespace lzbound
