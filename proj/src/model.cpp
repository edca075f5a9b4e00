#include "cosserat1d/model.hpp"

#include <cmath>
#include <stdexcept>

#include "cosserat1d/errors.hpp"

namespace cosserat1d {

double potential_w(double z, double alpha, const MaterialParams& p) {
    const double sa = std::sin(alpha);
    const double sh = std::sin(0.5 * alpha);
    const double a = sa * z - 4.0 * sh * sh;
    const double b = std::cos(alpha) * z - 2.0 * sa;
    return 0.5 * p.mu * a * a + 0.5 * p.mu_c * b * b;
}

double potential_w_reduced(double z, double alpha, const MaterialParams& p) {
    const double a = alpha * (alpha - z);
    const double b = 0.5 * (2.0 - alpha * alpha) * z
                   - (6.0 * alpha - alpha * alpha * alpha) / 3.0;
    return 0.5 * p.mu * a * a + 0.5 * p.mu_c * b * b;
}

double q_density(double z, double alpha, const MaterialParams& p) {
    return 0.5 * p.mu * z * z + potential_w(z, alpha, p);
}

double v1(double z, const MaterialParams& p) {
    return 0.5 * p.mu * std::abs(z * z - p.gamma * p.gamma);
}

double v2(double z, double alpha, const MaterialParams& p) {
    return potential_w(z, alpha, p) - p.w_min;
}

void potential_w_derivatives(double z, double alpha, const MaterialParams& p,
                             double& wz, double& wa) {
    const double sa = std::sin(alpha);
    const double ca = std::cos(alpha);
    const double sh = std::sin(0.5 * alpha);
    const double a = sa * z - 4.0 * sh * sh;
    const double b = ca * z - 2.0 * sa;  // b = dA/dalpha
    wz = p.mu * a * sa + p.mu_c * b * ca;
    wa = b * (p.mu * a - p.mu_c * (z * sa + 2.0 * ca));
}

void potential_w_value_derivatives(double z, double alpha, const MaterialParams& p,
                                   double& w, double& wz, double& wa) {
    const double sa = std::sin(alpha);
    const double ca = std::cos(alpha);
    const double sh = std::sin(0.5 * alpha);
    const double a = sa * z - 4.0 * sh * sh;
    const double b = ca * z - 2.0 * sa;
    w = 0.5 * p.mu * a * a + 0.5 * p.mu_c * b * b;
    wz = p.mu * a * sa + p.mu_c * b * ca;
    wa = b * (p.mu * a - p.mu_c * (z * sa + 2.0 * ca));
}

namespace {

void check_field(const GridField& f) {
    if (f.n < 2) throw std::invalid_argument("energy: need at least 2 grid cells");
    if (f.u.size() != f.n + 1 || f.alpha.size() != f.n + 1)
        throw std::invalid_argument("energy: field arrays must hold n+1 nodes");
}

}  // namespace

EnergyBreakdown energy_eps(const GridField& f, const MaterialParams& p) {
    check_field(f);
    const double h = f.h();
    const double e2 = p.eps * p.eps;

    EnergyBreakdown out;
    for (std::size_t i = 0; i < f.n; ++i) {
        const double z = (f.u[i + 1] - f.u[i]) / h;
        const double da = (f.alpha[i + 1] - f.alpha[i]) / h;
        const double am = 0.5 * (f.alpha[i] + f.alpha[i + 1]);
        out.curvature += h * e2 * da * da;
        out.shear += h * 0.5 * p.mu * z * z;
        out.coupling += h * potential_w(z, am, p);
    }
    out.total = out.curvature + out.shear + out.coupling;
    return out;
}

EnergyBreakdown energy_eps_theta(const GridField& f, const MaterialParams& p,
                                 double tol_vc) {
    check_field(f);
    const double mean = discrete_mean_alpha(f);
    if (std::abs(mean - p.theta) > tol_vc) throw ConstraintViolation(mean, p.theta);
    return energy_eps(f, p);
}

double energy_rescaled(const GridField& f, const MaterialParams& p) {
    check_field(f);
    if (p.eps == 0.0)
        throw std::invalid_argument("energy_rescaled: eps = 0 (division by zero scale)");
    const double h = f.h();
    const double e2 = p.eps * p.eps;

    double total = 0.0;
    for (std::size_t i = 0; i < f.n; ++i) {
        const double z = (f.u[i + 1] - f.u[i]) / h;
        const double da = (f.alpha[i + 1] - f.alpha[i]) / h;
        const double am = 0.5 * (f.alpha[i] + f.alpha[i + 1]);
        total += h * (e2 * da * da + v1(z, p) + v2(z, am, p));
    }
    return total / p.eps;
}

void energy_eps_gradient(const GridField& f, const MaterialParams& p,
                         std::vector<double>& du, std::vector<double>& dalpha) {
    check_field(f);
    const double h = f.h();
    const double e2 = p.eps * p.eps;
    du.assign(f.n + 1, 0.0);
    dalpha.assign(f.n + 1, 0.0);

    for (std::size_t i = 0; i < f.n; ++i) {
        const double z = (f.u[i + 1] - f.u[i]) / h;
        const double da = (f.alpha[i + 1] - f.alpha[i]) / h;
        const double am = 0.5 * (f.alpha[i] + f.alpha[i + 1]);
        double wz, wa;
        potential_w_derivatives(z, am, p, wz, wa);

        const double gz = p.mu * z + wz;
        du[i + 1] += gz;
        du[i] -= gz;

        dalpha[i + 1] += 2.0 * e2 * da + 0.5 * h * wa;
        dalpha[i] += -2.0 * e2 * da + 0.5 * h * wa;
    }
}

}  // namespace cosserat1d
