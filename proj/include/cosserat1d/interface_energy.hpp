#pragma once

#include <vector>

#include "cosserat1d/params.hpp"

namespace cosserat1d {

/// Surface energy 2 |int_{a-}^{a+} V2(gamma, s)^(1/2) ds| by adaptive
/// quadrature. Symmetric in its arguments. Throws NegativeV2 if the shifted
/// potential is sampled below -1e-10.
double surface_energy(double alpha_minus, double alpha_plus, const MaterialParams& p);

/// Closed form sqrt(2 mu) [gamma (1 - cos a+) + 2 sin a+ - 2 a+] with
/// a+ from the well set. Requires mu_c = 0, throws WrongRegime otherwise.
double surface_energy_closed_zero_couple(const MaterialParams& p);

/// Surface energy of the reduced potential: V2 replaced by
/// potential_w_reduced(gamma, .) minus its minimum over alpha.
double surface_energy_reduced(double alpha_minus, double alpha_plus,
                              const MaterialParams& p);

/// Sampled heteroclinic solution of a' = V2(gamma, a)^(1/2), a(0) midway
/// between the wells, clamped once within tol_tail of either well.
struct TransitionProfile {
    std::vector<double> y;
    std::vector<double> alpha;
    double alpha_minus = 0.0;
    double alpha_plus = 0.0;
};

inline constexpr double profile_tol_tail = 1e-8;

TransitionProfile optimal_profile(double alpha_minus, double alpha_plus,
                                  const MaterialParams& p,
                                  double half_width, double step);

// Default half width: doubled from 8 until STALLED clears.
TransitionProfile optimal_profile_auto(double alpha_minus, double alpha_plus,
                                       const MaterialParams& p,
                                       double step = 1e-3);

// int |a'|^2 + V2(gamma, a) dy along the sampled profile.
double profile_path_energy(const TransitionProfile& prof, const MaterialParams& p);

/// Piecewise constant micro-rotation: breakpoints strictly increasing in
/// (0, 1), one value per interval, adjacent values distinct.
struct PiecewiseConstantRotation {
    std::vector<double> breakpoints;
    std::vector<double> values;

    PiecewiseConstantRotation(std::vector<double> breakpoints,
                              std::vector<double> values);
};

/// First-order limit functional: sum of surface energies over the jump set
/// when u is homogeneous and all values lie in the well set; +infinity
/// (as a value, not a fault) otherwise.
double f0(const PiecewiseConstantRotation& alpha, bool u_is_homogeneous,
          const MaterialParams& p, double well_tol = 1e-8);

}  // namespace cosserat1d
