#pragma once

#include <vector>

#include "cosserat1d/grid_field.hpp"
#include "cosserat1d/params.hpp"

namespace cosserat1d {

// W(z, alpha) = mu/2 (sin(a) z - 4 sin^2(a/2))^2 + mu_c/2 (cos(a) z - 2 sin(a))^2
double potential_w(double z, double alpha, const MaterialParams& p);

// Third-order expansion of W:
// mu/2 [a(a - z)]^2 + mu_c/2 ((2 - a^2)/2 z - (6a - a^3)/3)^2
double potential_w_reduced(double z, double alpha, const MaterialParams& p);

// Q(z, alpha) = mu/2 z^2 + W(z, alpha)
double q_density(double z, double alpha, const MaterialParams& p);

// Shifted energies of the rescaled functional.
double v1(double z, const MaterialParams& p);
double v2(double z, double alpha, const MaterialParams& p);

// Partial derivatives of W with respect to z and alpha.
void potential_w_derivatives(double z, double alpha, const MaterialParams& p,
                             double& wz, double& wa);

// Value and both partial derivatives in one evaluation.
void potential_w_value_derivatives(double z, double alpha, const MaterialParams& p,
                                   double& w, double& wz, double& wa);

struct EnergyBreakdown {
    double curvature = 0.0;  // eps^2 |alpha'|^2 part
    double shear = 0.0;      // mu/2 |u'|^2 part
    double coupling = 0.0;   // W part
    double total = 0.0;
};

/// Discrete E_eps: derivatives by forward differences per cell, potential
/// terms at cell midpoints of the linear interpolants. Rejects n < 2.
EnergyBreakdown energy_eps(const GridField& f, const MaterialParams& p);

/// As energy_eps under the discrete volume constraint mean(alpha) = theta.
/// Throws ConstraintViolation (carrying the achieved mean) otherwise.
EnergyBreakdown energy_eps_theta(const GridField& f, const MaterialParams& p,
                                 double tol_vc = 1e-8);

/// Rescaled energy (1/eps) * int eps^2|alpha'|^2 + V1(u') + V2(u', alpha).
/// Rejects eps = 0.
double energy_rescaled(const GridField& f, const MaterialParams& p);

// Analytic gradient of the discrete E_eps with respect to all nodal values.
void energy_eps_gradient(const GridField& f, const MaterialParams& p,
                         std::vector<double>& du, std::vector<double>& dalpha);

}  // namespace cosserat1d
