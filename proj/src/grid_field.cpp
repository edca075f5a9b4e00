#include "cosserat1d/grid_field.hpp"

#include <cmath>
#include <stdexcept>

#include "cosserat1d/params.hpp"

namespace cosserat1d {

GridField GridField::homogeneous(std::size_t n, double gamma, double alpha_const) {
    if (n < 2) throw std::invalid_argument("GridField: need at least 2 cells");
    GridField f;
    f.n = n;
    f.u.resize(n + 1);
    f.alpha.assign(n + 1, alpha_const);
    for (std::size_t i = 0; i <= n; ++i) f.u[i] = gamma * f.x(i);
    f.u[n] = gamma;
    return f;
}

double discrete_mean_alpha(const GridField& f) {
    const double h = f.h();
    double s = 0.5 * (f.alpha.front() + f.alpha.back());
    for (std::size_t i = 1; i < f.n; ++i) s += f.alpha[i];
    return s * h;
}

bool is_admissible(const GridField& f, const MaterialParams& p, double tol) {
    if (f.n < 2 || f.u.size() != f.n + 1 || f.alpha.size() != f.n + 1) return false;
    if (std::abs(f.u.front()) > tol) return false;
    if (std::abs(f.u.back() - p.gamma) > tol) return false;
    if (std::abs(f.alpha.front() - f.alpha.back()) > tol) return false;
    for (double a : f.alpha)
        if (a < -tol || a > two_pi + tol) return false;
    return true;
}

}  // namespace cosserat1d
