#include "cosserat1d/params.hpp"

#include <stdexcept>

#include "cosserat1d/closed_form.hpp"

namespace cosserat1d {

const char* to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::EqualModuli:   return "EQUAL_MODULI";
        case RegimeTag::ZeroCouple:    return "ZERO_COUPLE";
        case RegimeTag::AboveCritical: return "ABOVE_CRITICAL";
        case RegimeTag::DoubleWell:    return "DOUBLE_WELL";
    }
    return "UNKNOWN";
}

MaterialParams::MaterialParams(double mu_, double mu_c_, double gamma_,
                               double theta_, double eps_)
    : mu(mu_), mu_c(mu_c_), gamma(gamma_), theta(theta_), eps(eps_) {
    if (!(mu > 0.0))
        throw std::invalid_argument("mu must be positive");
    if (!(mu_c >= 0.0))
        throw std::invalid_argument("mu_c must be non-negative");
    if (!(gamma > 0.0 && gamma < 2.0))
        throw std::invalid_argument("gamma must lie in (0, 2)");
    if (!(theta >= 0.0 && theta <= two_pi))
        throw std::invalid_argument("theta must lie in [0, 2*pi]");
    if (!(eps >= 0.0))
        throw std::invalid_argument("eps must be non-negative");

    const Regime r = classify(mu, mu_c, gamma);
    regime_tag = r.tag;
    mu_c_crit = r.mu_c_crit;
    e_min = minimal_energy(gamma, mu, mu_c, regime_tag);
    w_min = e_min - 0.5 * mu * gamma * gamma;
}

}  // namespace cosserat1d
