#pragma once

namespace cosserat1d {

inline constexpr double two_pi = 6.28318530717958647692528676655900577;

// Parameter regimes of the shear problem, selected by mu, mu_c and gamma.
enum class RegimeTag { EqualModuli, ZeroCouple, AboveCritical, DoubleWell };

const char* to_string(RegimeTag tag);

/// Material and loading parameters of the 1D Cosserat shear problem.
///
/// Construction validates all ranges and caches the regime together with
/// the minimal bulk energy e_min and minimal potential value w_min at the
/// boundary shear, so that the shifted potential V2 never has to rerun the
/// regime logic per quadrature point.
struct MaterialParams {
    double mu;     // elastic shear modulus, > 0
    double mu_c;   // Cosserat couple modulus, >= 0
    double gamma;  // boundary shear amount, in (0, 2)
    double theta;  // prescribed mean micro-rotation, in [0, 2*pi]
    double eps;    // internal length scale parameter, >= 0

    // cached at construction
    RegimeTag regime_tag;
    double mu_c_crit;  // mu * (1 - 2/sqrt(gamma^2 + 4))
    double e_min;      // minimal energy of the homogeneous state at z = gamma
    double w_min;      // e_min - mu/2 gamma^2, the minimum of W(gamma, .)

    MaterialParams(double mu, double mu_c, double gamma,
                   double theta = 0.0, double eps = 0.0);
};

}  // namespace cosserat1d
