#include "cosserat1d/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "cosserat1d/closed_form.hpp"
#include "cosserat1d/envelope.hpp"
#include "cosserat1d/errors.hpp"
#include "cosserat1d/interface_energy.hpp"
#include "cosserat1d/model.hpp"

namespace cosserat1d {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZFloor = 1e-9;  // the relaxed integrand needs z > 0

// Discrete objective over the packed unknowns: u[1..n-1] interior nodes and
// alpha[0..n-1] with the periodic trace alpha[n] = alpha[0]. The volume
// constraint enters through an augmented-Lagrangian term.
struct Problem {
    const MaterialParams& p;
    std::size_t n;
    double h;
    bool relaxed;
    double lambda = 0.0;
    double rho = 0.0;

    // augmented value; raw energy reported separately; gradients optional
    double eval(const std::vector<double>& u, const std::vector<double>& a,
                double& raw, std::vector<double>* gu, std::vector<double>* ga) const {
        const double e2 = p.eps * p.eps;
        if (gu) {
            gu->assign(n - 1, 0.0);
            ga->assign(n, 0.0);
        }

        double energy = 0.0;
        double asum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ai = a[i];
            const double aj = (i + 1 == n) ? a[0] : a[i + 1];
            const double z = (u[i + 1] - u[i]) / h;
            const double da = (aj - ai) / h;
            const double am = 0.5 * (ai + aj);
            asum += ai;

            double cell, gz = 0.0, gam = 0.0;
            if (relaxed) {
                if (z <= kZFloor) {
                    raw = kInf;
                    return kInf;
                }
                try {
                    cell = q_envelope(z, am, p);
                    if (gu) q_envelope_derivatives(z, am, p, gz, gam);
                } catch (const NegativeDiscriminant&) {
                    // outside the double-well validity range at this z
                    raw = kInf;
                    return kInf;
                }
            } else {
                double w, wz, wa;
                if (gu) {
                    potential_w_value_derivatives(z, am, p, w, wz, wa);
                    gz = p.mu * z + wz;
                    gam = wa;
                    const double gda = 2.0 * e2 * da;
                    if (i + 1 < n) (*ga)[i + 1] += gda;
                    else (*ga)[0] += gda;
                    (*ga)[i] -= gda;
                } else {
                    w = potential_w(z, am, p);
                }
                cell = e2 * da * da + 0.5 * p.mu * z * z + w;
            }
            energy += h * cell;

            if (gu) {
                if (i + 1 < n) (*gu)[i] += gz;  // d/du[i+1]
                if (i > 0) (*gu)[i - 1] -= gz;  // d/du[i]
                const double half = 0.5 * h * gam;
                (*ga)[i] += half;
                if (i + 1 < n) (*ga)[i + 1] += half;
                else (*ga)[0] += half;
            }
        }

        raw = energy;
        const double c = asum / static_cast<double>(n) - p.theta;
        const double aug = energy + lambda * c + 0.5 * rho * c * c;
        if (ga) {
            const double gc = (lambda + rho * c) / static_cast<double>(n);
            for (double& g : *ga) g += gc;
        }
        return aug;
    }

    double constraint(const std::vector<double>& a) const {
        double s = 0.0;
        for (double v : a) s += v;
        return s / static_cast<double>(n) - p.theta;
    }
};

struct InnerResult {
    double aug = kInf;
    double pg = kInf;  // sup norm of the projected gradient
    std::size_t iters = 0;
};

// Monotone projected gradient with Barzilai-Borwein steps and Armijo
// backtracking on the box alpha in [0, 2*pi]; u is unconstrained.
InnerResult inner_minimize(const Problem& prob, std::vector<double>& u,
                           std::vector<double>& a, const SolverConfig& cfg,
                           std::size_t budget) {
    const std::size_t n = prob.n;
    std::vector<double> gu, ga, gun, gan;
    std::vector<double> un(u), an(a);

    double raw;
    double L = prob.eval(u, a, raw, &gu, &ga);
    double step = 1e-2;

    InnerResult res;
    auto proj_grad_norm = [&](const std::vector<double>& gu_,
                              const std::vector<double>& ga_) {
        double pg = 0.0;
        for (double g : gu_) pg = std::max(pg, std::abs(g));
        for (std::size_t i = 0; i < n; ++i) {
            const double moved = a[i] - std::clamp(a[i] - ga_[i], 0.0, two_pi);
            pg = std::max(pg, std::abs(moved));
        }
        return pg;
    };

    res.pg = proj_grad_norm(gu, ga);
    if (res.pg <= cfg.grad_tol) {
        res.aug = L;
        return res;
    }

    auto candidate = [&](double s) {
        for (std::size_t i = 0; i + 1 < n; ++i) un[i + 1] = u[i + 1] - s * gu[i];
        for (std::size_t i = 0; i < n; ++i)
            an[i] = std::clamp(a[i] - s * ga[i], 0.0, two_pi);
        double dec = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) dec += gu[i] * (u[i + 1] - un[i + 1]);
        for (std::size_t i = 0; i < n; ++i) dec += ga[i] * (a[i] - an[i]);
        return dec;
    };

    for (std::size_t it = 0; it < budget; ++it) {
        ++res.iters;

        // first candidate evaluated with its gradient, backtracks value-only
        double dec = candidate(step);
        double rawn;
        double Ln = prob.eval(un, an, rawn, &gun, &gan);
        bool have_grad = true;
        int bt = 0;
        while (!(Ln <= L - cfg.armijo_c * dec) && dec > 0.0 && bt < 60) {
            step *= cfg.backtrack;
            ++bt;
            dec = candidate(step);
            Ln = prob.eval(un, an, rawn, nullptr, nullptr);
            have_grad = false;
        }
        if (!(Ln < L)) break;  // stationary up to roundoff
        if (Ln > L + 1e-10 * (1.0 + std::abs(L)))
            throw std::logic_error("solver: accepted step increased the objective");
        if (!have_grad) Ln = prob.eval(un, an, rawn, &gun, &gan);

        // BB step length from the accepted move
        double sy = 0.0, ss = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double s = un[i + 1] - u[i + 1];
            sy += s * (gun[i] - gu[i]);
            ss += s * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double s = an[i] - a[i];
            sy += s * (gan[i] - ga[i]);
            ss += s * s;
        }

        u.swap(un);
        a.swap(an);
        gu.swap(gun);
        ga.swap(gan);
        L = Ln;
        step = (sy > 1e-16) ? std::clamp(ss / sy, 1e-9, 1e6) : step * 2.0;

        res.pg = proj_grad_norm(gu, ga);
        if (res.pg <= cfg.grad_tol) break;
    }
    res.aug = L;
    return res;
}

struct StartResult {
    GridField field;
    double energy = kInf;
    double residual = kInf;
    std::size_t iterations = 0;
    bool converged = false;
};

// Full multiplier loop at one grid resolution.
void solve_level(Problem& prob, std::vector<double>& u, std::vector<double>& a,
                 const SolverConfig& cfg, StartResult& out, bool final_level) {
    std::size_t left = cfg.max_iters;
    double c_prev = kInf;
    for (std::size_t outer = 0; outer < cfg.max_outer && left > 0; ++outer) {
        const InnerResult ir = inner_minimize(prob, u, a, cfg, left);
        left -= std::min(left, ir.iters);
        out.iterations += ir.iters;

        const double c = prob.constraint(a);
        if (std::abs(c) <= cfg.tol_vc && ir.pg <= cfg.grad_tol) {
            if (final_level) out.converged = true;
            break;
        }
        prob.lambda += prob.rho * c;
        if (std::abs(c) > 0.25 * std::abs(c_prev)) prob.rho = std::min(prob.rho * 10.0, 1e12);
        c_prev = c;
    }
}

// Coarse-to-fine: locate the basin cheaply, then polish at full resolution.
StartResult solve_from(const MaterialParams& p, const SolverConfig& cfg,
                       bool relaxed, const std::function<double(double)>& a_init) {
    std::vector<std::size_t> levels{cfg.n};
    while (levels.front() >= 4 * 128) levels.insert(levels.begin(), levels.front() / 4);

    StartResult out;
    std::vector<double> u, a;
    double lambda = 0.0, rho = cfg.penalty_weight;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const std::size_t n = levels[li];
        if (li == 0) {
            u.resize(n + 1);
            a.resize(n);
            for (std::size_t i = 0; i <= n; ++i) u[i] = p.gamma * static_cast<double>(i) / n;
            for (std::size_t i = 0; i < n; ++i)
                a[i] = std::clamp(a_init(static_cast<double>(i) / n), 0.0, two_pi);
        } else {
            // linear prolongation from the previous level
            const std::size_t nc = levels[li - 1];
            std::vector<double> uf(n + 1), af(n);
            for (std::size_t i = 0; i <= n; ++i) {
                const double x = static_cast<double>(i) * nc / n;
                const std::size_t k = std::min(static_cast<std::size_t>(x), nc - 1);
                const double t = x - static_cast<double>(k);
                uf[i] = u[k] + t * (u[k + 1] - u[k]);
            }
            uf[0] = 0.0;
            uf[n] = p.gamma;
            for (std::size_t i = 0; i < n; ++i) {
                const double x = static_cast<double>(i) * nc / n;
                const std::size_t k = std::min(static_cast<std::size_t>(x), nc - 1);
                const double t = x - static_cast<double>(k);
                const double right = (k + 1 == nc) ? a[0] : a[k + 1];
                af[i] = a[k] + t * (right - a[k]);
            }
            u.swap(uf);
            a.swap(af);
        }

        Problem prob{p, n, 1.0 / static_cast<double>(n), relaxed, lambda, rho};
        solve_level(prob, u, a, cfg, out, li + 1 == levels.size());
        lambda = prob.lambda;
        rho = prob.rho;
    }

    const std::size_t n = cfg.n;
    out.field.n = n;
    out.field.u = u;
    out.field.alpha = a;
    out.field.alpha.push_back(a[0]);
    Problem plain{p, n, 1.0 / static_cast<double>(n), relaxed};
    double raw;
    plain.eval(u, a, raw, nullptr, nullptr);
    out.energy = raw;
    out.residual = std::abs(plain.constraint(a));
    return out;
}

std::vector<std::function<double(double)>> build_starts(const MaterialParams& p,
                                                        const SolverConfig& cfg,
                                                        bool relaxed) {
    const WellSet ws = well_set(p.gamma, p);

    std::vector<std::function<double(double)>> starts;
    for (double w : ws.angles)
        starts.push_back([w](double) { return w; });
    const double theta = p.theta;
    starts.push_back([theta](double) { return theta; });
    if (!relaxed && ws.angles.size() == 2) {
        // single-layer ansatz at x_bar = 1/2
        const double lo = ws.angles[0], hi = ws.angles[1];
        starts.push_back([lo, hi](double x) { return x < 0.5 ? lo : hi; });
    }
    if (starts.size() > cfg.restarts && cfg.restarts > 0) starts.resize(cfg.restarts);
    return starts;
}

SolveResult run(const MaterialParams& p, const SolverConfig& cfg, bool relaxed) {
    if (cfg.n < 8) throw std::invalid_argument("SolverConfig: n must be at least 8");
    if (!(cfg.grad_tol > 0.0)) throw std::invalid_argument("SolverConfig: grad_tol must be positive");
    if (!(cfg.penalty_weight >= 0.0))
        throw std::invalid_argument("SolverConfig: penalty_weight must be non-negative");
    if (!relaxed && !(p.eps > 0.0))
        throw std::invalid_argument("minimize_eps_theta: eps must be positive");

    SolveResult best;
    best.energy = kInf;
    bool first = true;
    for (const auto& start : build_starts(p, cfg, relaxed)) {
        StartResult r = solve_from(p, cfg, relaxed, start);
        // strict comparison: on ties the earlier (constant) start wins
        if (first || r.energy < best.energy) {
            best.field = std::move(r.field);
            best.energy = r.energy;
            best.constraint_residual = r.residual;
            best.converged = r.converged;
            first = false;
        }
        best.iterations += r.iterations;
    }
    return best;
}

}  // namespace

SolveResult minimize_eps_theta(const MaterialParams& p, const SolverConfig& cfg) {
    return run(p, cfg, false);
}

SolveResult minimize_relaxed(const MaterialParams& p, const SolverConfig& cfg) {
    return run(p, cfg, true);
}

std::vector<SweepRow> gamma_sweep(const MaterialParams& p,
                                  const std::vector<double>& eps_list,
                                  const SolverConfig& cfg) {
    if (eps_list.empty())
        throw std::invalid_argument("gamma_sweep: eps list must not be empty");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0))
            throw std::invalid_argument("gamma_sweep: eps values must be positive");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument("gamma_sweep: eps list must be strictly decreasing");
    }

    const SolveResult relaxed = minimize_relaxed(p, cfg);

    std::vector<SweepRow> rows;
    rows.reserve(eps_list.size());
    for (double eps : eps_list) {
        const MaterialParams pe(p.mu, p.mu_c, p.gamma, p.theta, eps);
        const SolveResult r = minimize_eps_theta(pe, cfg);
        rows.push_back({eps, r.energy, relaxed.energy, r.energy - relaxed.energy,
                        r.iterations, r.converged && relaxed.converged});
    }
    return rows;
}

GridField recovery_sequence(double alpha_minus, double alpha_plus, double x_bar,
                            const MaterialParams& p, double half_width,
                            const SolverConfig& cfg) {
    if (!(p.eps > 0.0))
        throw std::invalid_argument("recovery_sequence: eps must be positive");
    if (!(x_bar > 0.0 && x_bar < 1.0))
        throw std::invalid_argument("recovery_sequence: x_bar must lie in (0, 1)");

    const std::size_t n = cfg.n;
    const double h = 1.0 / static_cast<double>(n);
    // profile step fine enough for the stretched grid spacing h/eps
    const double step = std::min(1e-3, 0.25 * h / p.eps);
    const TransitionProfile prof =
        (half_width > 0.0) ? optimal_profile(alpha_minus, alpha_plus, p, half_width, step)
                           : optimal_profile_auto(alpha_minus, alpha_plus, p, step);

    GridField f = GridField::homogeneous(n, p.gamma, alpha_minus);
    for (std::size_t i = 0; i <= n; ++i) {
        const double y = (f.x(i) - x_bar) / p.eps;
        if (y <= prof.y.front()) {
            f.alpha[i] = alpha_minus;
        } else if (y >= prof.y.back()) {
            f.alpha[i] = alpha_plus;
        } else {
            const auto it = std::upper_bound(prof.y.begin(), prof.y.end(), y);
            const std::size_t k = static_cast<std::size_t>(it - prof.y.begin()) - 1;
            const double t = (y - prof.y[k]) / (prof.y[k + 1] - prof.y[k]);
            f.alpha[i] = prof.alpha[k] + t * (prof.alpha[k + 1] - prof.alpha[k]);
        }
    }
    return f;
}

}  // namespace cosserat1d
