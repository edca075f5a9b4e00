#pragma once

#include <cstddef>
#include <vector>

#include "cosserat1d/grid_field.hpp"
#include "cosserat1d/params.hpp"

namespace cosserat1d {

struct SolverConfig {
    std::size_t n = 256;            // grid cells, >= 8
    std::size_t max_iters = 40000;  // inner iteration budget per start and level
    double grad_tol = 1e-6;         // sup norm of the projected gradient
    std::size_t restarts = 4;       // multi-start over well assignments
    double penalty_weight = 100.0;  // initial augmented-Lagrangian weight
    double tol_vc = 1e-8;           // volume-constraint tolerance
    std::size_t max_outer = 30;     // multiplier updates
    double armijo_c = 1e-4;
    double backtrack = 0.5;
};

struct SolveResult {
    GridField field;
    double energy = 0.0;
    double constraint_residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Local minimization of the discrete E_eps^theta over fields with
/// u(0) = 0, u(1) = gamma, alpha(0) = alpha(1), alpha in [0, 2*pi] and
/// mean(alpha) = theta. Projected gradient with Barzilai-Borwein steps and
/// Armijo backtracking; the volume constraint enters through an augmented
/// Lagrangian. Best result over the multi-start initializations.
SolveResult minimize_eps_theta(const MaterialParams& p, const SolverConfig& cfg);

/// Same machinery applied to the relaxed functional E_0^theta.
SolveResult minimize_relaxed(const MaterialParams& p, const SolverConfig& cfg);

struct SweepRow {
    double eps;
    double energy_eps;      // min E_eps^theta
    double energy_relaxed;  // min E_0^theta
    double gap;
    std::size_t iterations;
    bool converged;
};

/// One constrained solve per eps plus a single relaxed solve;
/// gap = min E_eps^theta - min E_0^theta.
std::vector<SweepRow> gamma_sweep(const MaterialParams& p,
                                  const std::vector<double>& eps_list,
                                  const SolverConfig& cfg);

/// Recovery field: u homogeneous, alpha equal to the wells outside the
/// layer around x_bar and the rescaled optimal profile inside it.
/// half_width <= 0 selects the adaptive default.
GridField recovery_sequence(double alpha_minus, double alpha_plus, double x_bar,
                            const MaterialParams& p, double half_width,
                            const SolverConfig& cfg);

}  // namespace cosserat1d
