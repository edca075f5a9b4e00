#pragma once

#include <cstddef>
#include <vector>

namespace cosserat1d {

struct MaterialParams;

/// Nodal samples of the pair (u, alpha) on a uniform grid of [0, 1].
/// n cells, n+1 nodes, spacing h = 1/n. An admissible field carries
/// u[0] = 0, u[n] = gamma, alpha[0] = alpha[n] and alpha in [0, 2*pi].
struct GridField {
    std::size_t n = 0;
    std::vector<double> u;
    std::vector<double> alpha;

    double h() const { return 1.0 / static_cast<double>(n); }
    double x(std::size_t i) const { return static_cast<double>(i) / static_cast<double>(n); }

    // u = gamma * x, alpha constant
    static GridField homogeneous(std::size_t n, double gamma, double alpha_const);
};

// Trapezoid-weight mean of alpha, consistent with the energy quadrature.
double discrete_mean_alpha(const GridField& f);

bool is_admissible(const GridField& f, const MaterialParams& p, double tol = 1e-12);

}  // namespace cosserat1d
