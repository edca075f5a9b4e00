#include "cosserat1d/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosserat1d/closed_form.hpp"
#include "cosserat1d/errors.hpp"
#include "cosserat1d/model.hpp"

namespace cosserat1d {

const char* to_string(BranchTag tag) {
    switch (tag) {
        case BranchTag::ConvexRegion: return "CONVEX_REGION";
        case BranchTag::FlatBridge:   return "FLAT_BRIDGE";
        case BranchTag::LinearTail:   return "LINEAR_TAIL";
    }
    return "UNKNOWN";
}

namespace {

struct EnvelopeData {
    // breakpoints of the piecewise structure; lo == hi in single-well regimes
    double lo = 0.0;       // left edge of the flat bridge
    double hi = 0.0;       // start of the linear tail
    double e_min = 0.0;    // minimal energy at this z
    double top = 0.0;      // Q(z, 2*pi) = (mu + mu_c)/2 z^2, symbolic endpoint
};

EnvelopeData envelope_data(double z, const MaterialParams& p) {
    EnvelopeData d;
    d.top = 0.5 * (p.mu + p.mu_c) * z * z;
    switch (p.regime_tag) {
        case RegimeTag::ZeroCouple:
            d.e_min = 0.5 * p.mu * z * z;
            break;
        case RegimeTag::EqualModuli:
        case RegimeTag::AboveCritical:
            d.lo = d.hi = std::atan(0.5 * z);
            d.e_min = minimal_energy(z, p.mu, p.mu_c, p.regime_tag);
            break;
        case RegimeTag::DoubleWell: {
            const WellSet ws = well_set(z, p);
            d.lo = ws.angles[0];
            d.hi = ws.angles[1];
            d.e_min = ws.minimal_energy;
            break;
        }
    }
    return d;
}

}  // namespace

double q_envelope(double z, double alpha, const MaterialParams& p) {
    if (!(z > 0.0)) throw std::invalid_argument("q_envelope: z must be positive");
    if (!(alpha >= 0.0 && alpha <= two_pi))
        throw std::invalid_argument("q_envelope: alpha must lie in [0, 2*pi]");

    if (p.regime_tag == RegimeTag::ZeroCouple) return 0.5 * p.mu * z * z;

    const EnvelopeData d = envelope_data(z, p);
    if (alpha < d.lo) return q_density(z, alpha, p);
    if (alpha < d.hi) return d.e_min;
    return (d.top - d.e_min) * (alpha - d.hi) / (two_pi - d.hi) + d.e_min;
}

void q_envelope_derivatives(double z, double alpha, const MaterialParams& p,
                            double& dz, double& dalpha) {
    if (p.regime_tag == RegimeTag::ZeroCouple) {
        dz = p.mu * z;
        dalpha = 0.0;
        return;
    }

    const EnvelopeData d = envelope_data(z, p);
    if (alpha < d.lo) {
        double wz, wa;
        potential_w_derivatives(z, alpha, p, wz, wa);
        dz = p.mu * z + wz;
        dalpha = wa;
        return;
    }
    if (alpha < d.hi) {
        // double-well bridge: e_min(z) = (mu + mu_c)/2 z^2 - const
        dz = (p.mu + p.mu_c) * z;
        dalpha = 0.0;
        return;
    }

    dalpha = (d.top - d.e_min) / (two_pi - d.hi);
    auto tail = [&](double zz) {
        const EnvelopeData dd = envelope_data(zz, p);
        return (dd.top - dd.e_min) * (alpha - dd.hi) / (two_pi - dd.hi) + dd.e_min;
    };
    const double hstep = 1e-6 * std::max(1.0, std::abs(z));
    try {
        dz = (tail(z + hstep) - tail(z - hstep)) / (2.0 * hstep);
    } catch (const NegativeDiscriminant&) {
        dz = (tail(z + hstep) - tail(z)) / hstep;
    }
}

std::vector<EnvelopeBranch> envelope_branches(double z, const MaterialParams& p) {
    if (!(z > 0.0)) throw std::invalid_argument("envelope_branches: z must be positive");

    std::vector<EnvelopeBranch> br;
    const MaterialParams pv = p;
    const EnvelopeData d = envelope_data(z, p);

    if (p.regime_tag == RegimeTag::ZeroCouple) {
        const double v = d.e_min;
        br.push_back({BranchTag::FlatBridge, 0.0, two_pi,
                      [v](double) { return v; }});
        return br;
    }

    if (d.lo > 0.0)
        br.push_back({BranchTag::ConvexRegion, 0.0, d.lo,
                      [z, pv](double a) { return q_density(z, a, pv); }});
    if (d.hi > d.lo)
        br.push_back({BranchTag::FlatBridge, d.lo, d.hi,
                      [d](double) { return d.e_min; }});
    br.push_back({BranchTag::LinearTail, d.hi, two_pi, [d](double a) {
                      return (d.top - d.e_min) * (a - d.hi) / (two_pi - d.hi) + d.e_min;
                  }});
    return br;
}

namespace {

// Golden-section refinement of a bracketed minimum of alpha -> W(z, alpha).
double golden_min(double z, const MaterialParams& p, double a, double b) {
    constexpr double invphi = 0.6180339887498948482;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = potential_w(z, c, p);
    double fd = potential_w(z, d, p);
    for (int it = 0; it < 120 && (b - a) > 1e-13; ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = potential_w(z, c, p);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = potential_w(z, d, p);
        }
    }
    return 0.5 * (a + b);
}

double cross(double ox, double oy, double ax, double ay, double bx, double by) {
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

}  // namespace

SampledEnvelope envelope_bruteforce(double z, const MaterialParams& p,
                                    std::size_t n_samples) {
    if (n_samples < 16)
        throw std::invalid_argument("envelope_bruteforce: need at least 16 samples");

    // uniform grid: both boundary samples 0 and 2*pi exact
    std::vector<double> xs(n_samples + 1), ys(n_samples + 1);
    for (std::size_t i = 0; i <= n_samples; ++i) {
        xs[i] = two_pi * static_cast<double>(i) / static_cast<double>(n_samples);
        ys[i] = potential_w(z, xs[i], p);
    }

    // refine interior local minima so the hull touches the true wells
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n_samples + 8);
    for (std::size_t i = 0; i <= n_samples; ++i) pts.emplace_back(xs[i], ys[i]);
    for (std::size_t i = 1; i < n_samples; ++i) {
        if (ys[i] <= ys[i - 1] && ys[i] <= ys[i + 1]) {
            const double am = golden_min(z, p, xs[i - 1], xs[i + 1]);
            pts.emplace_back(am, potential_w(z, am, p));
        }
    }
    std::sort(pts.begin(), pts.end());

    // lower convex hull, monotone chain
    std::vector<std::pair<double, double>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2].first, hull[hull.size() - 2].second,
                     hull.back().first, hull.back().second, pt.first, pt.second) <= 0.0)
            hull.pop_back();
        hull.push_back(pt);
    }

    // evaluate the hull back on the uniform sample grid
    SampledEnvelope env;
    env.alpha = xs;
    env.value.resize(xs.size());
    std::size_t seg = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (seg + 1 < hull.size() - 1 && hull[seg + 1].first <= xs[i]) ++seg;
        const auto& [x0, y0] = hull[seg];
        const auto& [x1, y1] = hull[seg + 1];
        const double t = (xs[i] - x0) / (x1 - x0);
        env.value[i] = y0 + t * (y1 - y0);
    }
    env.value.front() = hull.front().second;
    env.value.back() = hull.back().second;
    return env;
}

double energy_relaxed(const GridField& f, const MaterialParams& p,
                      bool constrained, double tol_vc) {
    if (f.n < 2) throw std::invalid_argument("energy_relaxed: need at least 2 grid cells");
    if (f.u.size() != f.n + 1 || f.alpha.size() != f.n + 1)
        throw std::invalid_argument("energy_relaxed: field arrays must hold n+1 nodes");
    if (constrained) {
        const double mean = discrete_mean_alpha(f);
        if (std::abs(mean - p.theta) > tol_vc) throw ConstraintViolation(mean, p.theta);
    }

    const double h = f.h();
    double total = 0.0;
    for (std::size_t i = 0; i < f.n; ++i) {
        const double z = (f.u[i + 1] - f.u[i]) / h;
        const double am = 0.5 * (f.alpha[i] + f.alpha[i + 1]);
        total += h * q_envelope(z, am, p);
    }
    return total;
}

}  // namespace cosserat1d
