#pragma once

#include <vector>

#include "cosserat1d/params.hpp"

namespace cosserat1d {

struct Regime {
    RegimeTag tag;
    double mu_c_crit;
};

/// Minimizing micro-rotations of W(z, .) together with the minimal energies.
/// angles holds one entry in the single-well regimes and two (increasing)
/// in the double-well regimes.
struct WellSet {
    std::vector<double> angles;
    double minimal_energy;  // e_min(z)
    double minimal_w;       // e_min(z) - mu/2 z^2
};

double mu_c_critical(double mu, double gamma);

Regime classify(double mu, double mu_c, double gamma);
Regime classify(const MaterialParams& p);

// Minimal energy of the homogeneous state u' = z in the given regime.
double minimal_energy(double z, double mu, double mu_c, RegimeTag tag);

// f(z) = sqrt((z^2+4)(mu - mu_c)^2 - 4 mu^2). Throws NegativeDiscriminant
// when the radicand is negative.
double f_discriminant(double z, const MaterialParams& p);

WellSet well_set(double z, const MaterialParams& p);

// eta(alpha) = 4 sin^2(alpha/2) / sin(alpha) on (0, 2*pi), poles excluded.
double eta(double alpha);

// Inverse of eta by safeguarded bisection; defined for g in [0, 2*pi).
double eta_inverse(double g);

// Energy density of the homogeneous state u' = z after eliminating alpha
// by pointwise minimization.
double e_opt(double z, const MaterialParams& p);

}  // namespace cosserat1d
