#include "cosserat1d/interface_energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cosserat1d/closed_form.hpp"
#include "cosserat1d/errors.hpp"
#include "cosserat1d/model.hpp"
#include "cosserat1d/quadrature.hpp"

namespace cosserat1d {

namespace {

constexpr double kVanishTol = 1e-12;  // potential value treated as a zero endpoint
constexpr double kQuadTol = 1e-10;

// 2 |int_lo^hi sqrt(pot) ds| with pot >= 0 up to roundoff. Segments whose
// endpoint is a zero of pot get the s = endpoint +- t^2 substitution to tame
// the square-root kink there.
double sqrt_integral(const std::function<double(double)>& pot, double lo, double hi,
                     const std::vector<double>& interior_zeros) {
    auto g = [&pot](double s) {
        const double v = pot(s);
        if (v < -1e-10) throw NegativeV2(v, s);
        return std::sqrt(std::max(v, 0.0));
    };

    std::vector<double> cuts{lo};
    for (double s : interior_zeros)
        if (s > lo + 1e-14 && s < hi - 1e-14) cuts.push_back(s);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());

    double total = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        double a = cuts[k], b = cuts[k + 1];
        const bool a_zero = pot(a) <= kVanishTol;
        const bool b_zero = pot(b) <= kVanishTol;
        if (a_zero && b_zero) {
            const double mid = 0.5 * (a + b);
            const double ra = std::sqrt(mid - a);
            const double rb = std::sqrt(b - mid);
            total += integrate([&](double t) { return 2.0 * t * g(a + t * t); }, 0.0, ra, kQuadTol);
            total += integrate([&](double t) { return 2.0 * t * g(b - t * t); }, 0.0, rb, kQuadTol);
        } else if (a_zero) {
            const double r = std::sqrt(b - a);
            total += integrate([&](double t) { return 2.0 * t * g(a + t * t); }, 0.0, r, kQuadTol);
        } else if (b_zero) {
            const double r = std::sqrt(b - a);
            total += integrate([&](double t) { return 2.0 * t * g(b - t * t); }, 0.0, r, kQuadTol);
        } else {
            total += integrate(g, a, b, kQuadTol);
        }
    }
    return 2.0 * total;
}

}  // namespace

double surface_energy(double alpha_minus, double alpha_plus, const MaterialParams& p) {
    if (!(alpha_minus >= 0.0 && alpha_minus <= two_pi &&
          alpha_plus >= 0.0 && alpha_plus <= two_pi))
        throw std::invalid_argument("surface_energy: angles must lie in [0, 2*pi]");
    if (alpha_minus == alpha_plus) return 0.0;

    const double lo = std::min(alpha_minus, alpha_plus);
    const double hi = std::max(alpha_minus, alpha_plus);
    const WellSet ws = well_set(p.gamma, p);
    return sqrt_integral([&p](double s) { return v2(p.gamma, s, p); }, lo, hi, ws.angles);
}

double surface_energy_closed_zero_couple(const MaterialParams& p) {
    if (p.mu_c != 0.0)
        throw WrongRegime("closed-form surface energy requires mu_c = 0");
    const double a = well_set(p.gamma, p).angles[1];
    return std::sqrt(2.0 * p.mu) *
           (p.gamma * (1.0 - std::cos(a)) + 2.0 * std::sin(a) - 2.0 * a);
}

double surface_energy_reduced(double alpha_minus, double alpha_plus,
                              const MaterialParams& p) {
    if (!(alpha_minus >= 0.0 && alpha_minus <= two_pi &&
          alpha_plus >= 0.0 && alpha_plus <= two_pi))
        throw std::invalid_argument("surface_energy_reduced: angles must lie in [0, 2*pi]");
    if (alpha_minus == alpha_plus) return 0.0;

    auto what = [&p](double a) { return potential_w_reduced(p.gamma, a, p); };

    // minimum of the reduced potential over [0, 2*pi] at z = gamma:
    // coarse scan plus golden-section polish
    const int nscan = 8192;
    double best_a = 0.0, best_v = what(0.0);
    for (int i = 1; i <= nscan; ++i) {
        const double a = two_pi * i / nscan;
        const double v = what(a);
        if (v < best_v) { best_v = v; best_a = a; }
    }
    {
        constexpr double invphi = 0.6180339887498948482;
        double a = std::max(0.0, best_a - two_pi / nscan);
        double b = std::min(two_pi, best_a + two_pi / nscan);
        double c = b - invphi * (b - a), d = a + invphi * (b - a);
        double fc = what(c), fd = what(d);
        while (b - a > 1e-13) {
            if (fc < fd) { b = d; d = c; fd = fc; c = b - invphi * (b - a); fc = what(c); }
            else { a = c; c = d; fc = fd; d = a + invphi * (b - a); fd = what(d); }
        }
        best_v = std::min(best_v, what(0.5 * (a + b)));
    }
    const double vmin = best_v;

    const double lo = std::min(alpha_minus, alpha_plus);
    const double hi = std::max(alpha_minus, alpha_plus);
    return sqrt_integral([&](double s) { return what(s) - vmin; }, lo, hi, {});
}

TransitionProfile optimal_profile(double alpha_minus, double alpha_plus,
                                  const MaterialParams& p,
                                  double half_width, double step) {
    if (!(alpha_minus < alpha_plus))
        throw std::invalid_argument("optimal_profile: need alpha_minus < alpha_plus");
    if (!(half_width > 0.0) || !(step > 0.0))
        throw std::invalid_argument("optimal_profile: half_width and step must be positive");
    if (v2(p.gamma, alpha_minus, p) > 1e-8 || v2(p.gamma, alpha_plus, p) > 1e-8)
        throw std::invalid_argument("optimal_profile: endpoints must be wells of V2");

    auto rhs = [&p](double a) { return std::sqrt(std::max(v2(p.gamma, a, p), 0.0)); };
    const double mid = 0.5 * (alpha_minus + alpha_plus);

    // forward branch toward alpha_plus
    std::vector<double> yf{0.0}, af{mid};
    {
        double y = 0.0, a = mid;
        bool reached = false;
        while (y < half_width) {
            const double k1 = rhs(a);
            const double k2 = rhs(std::min(a + 0.5 * step * k1, alpha_plus));
            const double k3 = rhs(std::min(a + 0.5 * step * k2, alpha_plus));
            const double k4 = rhs(std::min(a + step * k3, alpha_plus));
            a += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            y += step;
            if (a >= alpha_plus - profile_tol_tail) {
                yf.push_back(y);
                af.push_back(alpha_plus);  // clamp once within tol_tail
                reached = true;
                break;
            }
            yf.push_back(y);
            af.push_back(a);
        }
        if (!reached) throw Stalled(half_width);
    }

    // backward branch toward alpha_minus
    std::vector<double> yb, ab;
    {
        double y = 0.0, a = mid;
        bool reached = false;
        while (y > -half_width) {
            const double k1 = rhs(a);
            const double k2 = rhs(std::max(a - 0.5 * step * k1, alpha_minus));
            const double k3 = rhs(std::max(a - 0.5 * step * k2, alpha_minus));
            const double k4 = rhs(std::max(a - step * k3, alpha_minus));
            a -= step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            y -= step;
            if (a <= alpha_minus + profile_tol_tail) {
                yb.push_back(y);
                ab.push_back(alpha_minus);
                reached = true;
                break;
            }
            yb.push_back(y);
            ab.push_back(a);
        }
        if (!reached) throw Stalled(half_width);
    }

    TransitionProfile prof;
    prof.alpha_minus = alpha_minus;
    prof.alpha_plus = alpha_plus;
    prof.y.reserve(yb.size() + yf.size());
    prof.alpha.reserve(yb.size() + yf.size());
    for (std::size_t i = yb.size(); i-- > 0;) {
        prof.y.push_back(yb[i]);
        prof.alpha.push_back(ab[i]);
    }
    prof.y.insert(prof.y.end(), yf.begin(), yf.end());
    prof.alpha.insert(prof.alpha.end(), af.begin(), af.end());
    return prof;
}

TransitionProfile optimal_profile_auto(double alpha_minus, double alpha_plus,
                                       const MaterialParams& p, double step) {
    double hw = 8.0;
    for (int k = 0; k < 10; ++k, hw *= 2.0) {
        try {
            return optimal_profile(alpha_minus, alpha_plus, p, hw, step);
        } catch (const Stalled&) {
            if (k == 9) throw;
        }
    }
    throw Stalled(hw);
}

double profile_path_energy(const TransitionProfile& prof, const MaterialParams& p) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < prof.y.size(); ++i) {
        const double dy = prof.y[i + 1] - prof.y[i];
        const double da = (prof.alpha[i + 1] - prof.alpha[i]) / dy;
        const double am = 0.5 * (prof.alpha[i] + prof.alpha[i + 1]);
        total += dy * (da * da + std::max(v2(p.gamma, am, p), 0.0));
    }
    return total;
}

PiecewiseConstantRotation::PiecewiseConstantRotation(std::vector<double> breakpoints_,
                                                     std::vector<double> values_)
    : breakpoints(std::move(breakpoints_)), values(std::move(values_)) {
    if (values.size() != breakpoints.size() + 1)
        throw std::invalid_argument("PiecewiseConstantRotation: need one value per interval");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > 0.0 && breakpoints[i] < 1.0))
            throw std::invalid_argument("PiecewiseConstantRotation: breakpoints must lie in (0, 1)");
        if (i > 0 && !(breakpoints[i] > breakpoints[i - 1]))
            throw std::invalid_argument("PiecewiseConstantRotation: breakpoints must increase");
    }
    for (double v : values)
        if (!(v >= 0.0 && v <= two_pi))
            throw std::invalid_argument("PiecewiseConstantRotation: values must lie in [0, 2*pi]");
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] == values[i + 1])
            throw std::invalid_argument("PiecewiseConstantRotation: adjacent values must differ");
}

double f0(const PiecewiseConstantRotation& alpha, bool u_is_homogeneous,
          const MaterialParams& p, double well_tol) {
    const double inf = std::numeric_limits<double>::infinity();
    if (!u_is_homogeneous) return inf;

    const WellSet ws = well_set(p.gamma, p);
    for (double v : alpha.values) {
        double dist = inf;
        for (double w : ws.angles) dist = std::min(dist, std::abs(v - w));
        if (dist > well_tol) return inf;
    }

    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < alpha.values.size(); ++i)
        sum += surface_energy(alpha.values[i], alpha.values[i + 1], p);
    return sum;
}

}  // namespace cosserat1d
