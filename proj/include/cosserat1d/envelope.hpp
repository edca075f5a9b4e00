#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cosserat1d/grid_field.hpp"
#include "cosserat1d/params.hpp"

namespace cosserat1d {

enum class BranchTag { ConvexRegion, FlatBridge, LinearTail };

const char* to_string(BranchTag tag);

/// One branch of the convex envelope of alpha -> Q(z, alpha) at fixed z.
/// Branches for a fixed z partition [0, 2*pi).
struct EnvelopeBranch {
    BranchTag tag;
    double alpha_lo;
    double alpha_hi;
    std::function<double(double)> value_at;
};

std::vector<EnvelopeBranch> envelope_branches(double z, const MaterialParams& p);

/// Closed-form convex envelope Q**(z, alpha) for z > 0, alpha in [0, 2*pi].
double q_envelope(double z, double alpha, const MaterialParams& p);

// Partial derivatives of the envelope; the z-derivative on the linear tail
// falls back to central differences of the tail formula.
void q_envelope_derivatives(double z, double alpha, const MaterialParams& p,
                            double& dz, double& dalpha);

// Envelope of the sampled graph of alpha -> W(z, alpha) on [0, 2*pi]:
// lower convex hull by monotone chain, evaluated back on the sample grid.
struct SampledEnvelope {
    std::vector<double> alpha;
    std::vector<double> value;
};

SampledEnvelope envelope_bruteforce(double z, const MaterialParams& p,
                                    std::size_t n_samples);

/// Discrete relaxed energy int Q**(u', alpha) dx with the model quadrature.
/// With constrained set, enforces the theta mean as in energy_eps_theta.
double energy_relaxed(const GridField& f, const MaterialParams& p,
                      bool constrained, double tol_vc = 1e-8);

}  // namespace cosserat1d
