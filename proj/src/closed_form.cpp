#include "cosserat1d/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "cosserat1d/errors.hpp"

namespace cosserat1d {

namespace {
constexpr double pi = 3.14159265358979323846264338327950288;
}

double mu_c_critical(double mu, double gamma) {
    return mu * (1.0 - 2.0 / std::sqrt(gamma * gamma + 4.0));
}

Regime classify(double mu, double mu_c, double gamma) {
    // Row order of the parameter table: exact equality first, then the
    // zero-couple row, then the comparison against the critical value.
    const double crit = mu_c_critical(mu, gamma);
    if (mu == mu_c) return {RegimeTag::EqualModuli, crit};
    if (mu_c == 0.0) return {RegimeTag::ZeroCouple, crit};
    if (mu_c > crit) return {RegimeTag::AboveCritical, crit};
    return {RegimeTag::DoubleWell, crit};
}

Regime classify(const MaterialParams& p) {
    return {p.regime_tag, p.mu_c_crit};
}

double minimal_energy(double z, double mu, double mu_c, RegimeTag tag) {
    switch (tag) {
        case RegimeTag::EqualModuli:
        case RegimeTag::AboveCritical:
            return mu * (z * z + 4.0 - 2.0 * std::sqrt(z * z + 4.0));
        case RegimeTag::ZeroCouple:
            return 0.5 * mu * z * z;
        case RegimeTag::DoubleWell:
            return 0.5 * (mu + mu_c) * z * z - 2.0 * mu_c * mu_c / (mu - mu_c);
    }
    return 0.0;
}

double f_discriminant(double z, const MaterialParams& p) {
    const double d = p.mu - p.mu_c;
    const double radicand = (z * z + 4.0) * d * d - 4.0 * p.mu * p.mu;
    if (radicand < 0.0) throw NegativeDiscriminant(z, radicand);
    return std::sqrt(radicand);
}

WellSet well_set(double z, const MaterialParams& p) {
    if (!(z > 0.0)) throw std::invalid_argument("well_set: z must be positive");

    WellSet ws;
    switch (p.regime_tag) {
        case RegimeTag::EqualModuli:
        case RegimeTag::AboveCritical:
            ws.angles = {std::atan(0.5 * z)};
            break;
        case RegimeTag::ZeroCouple:
            // atan2 keeps the angle in [0, pi) when 4 - z^2 <= 0
            ws.angles = {0.0, std::atan2(4.0 * z, 4.0 - z * z)};
            break;
        case RegimeTag::DoubleWell: {
            const double f = f_discriminant(z, p);
            const double lo = std::atan2(z * p.mu - f, 2.0 * p.mu + 0.5 * z * f);
            const double hi = std::atan2(z * p.mu + f, 2.0 * p.mu - 0.5 * z * f);
            ws.angles = {lo, hi};
            break;
        }
    }
    ws.minimal_energy = minimal_energy(z, p.mu, p.mu_c, p.regime_tag);
    ws.minimal_w = ws.minimal_energy - 0.5 * p.mu * z * z;
    return ws;
}

double eta(double alpha) {
    if (!(alpha > 0.0 && alpha < two_pi))
        throw std::domain_error("eta: alpha must lie in (0, 2*pi)");
    const double s = std::sin(alpha);
    if (s == 0.0) throw std::domain_error("eta: sin(alpha) = 0");
    const double half = std::sin(0.5 * alpha);
    return 4.0 * half * half / s;
}

double eta_inverse(double g) {
    if (!(g >= 0.0 && g < two_pi))
        throw std::domain_error("eta_inverse: g must lie in [0, 2*pi)");
    if (g == 0.0) return 0.0;  // limit value

    // eta is strictly increasing on (0, pi) with range (0, +inf)
    double lo = 1e-12;
    double hi = pi - 1e-12;
    if (g <= eta(lo)) return lo;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (eta(mid) < g)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12) return 0.5 * (lo + hi);
    }
    throw NoConvergence("eta_inverse: bisection did not converge");
}

double e_opt(double z, const MaterialParams& p) {
    return minimal_energy(z, p.mu, p.mu_c, p.regime_tag);
}

}  // namespace cosserat1d
