#pragma once

#include <functional>

namespace cosserat1d {

/// Adaptive Gauss-Kronrod (G7, K15) quadrature with interval bisection.
/// Splits until the local error estimate drops below the absolute tolerance
/// share of the interval; depth is capped.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 48);

}  // namespace cosserat1d
