#include <doctest.h>

#include <cmath>
#include <random>

#include "cosserat1d/closed_form.hpp"
#include "cosserat1d/errors.hpp"
#include "cosserat1d/model.hpp"

using namespace cosserat1d;

namespace {

// Smooth random admissible field: u = gamma x plus interior bumps, alpha a
// periodic trig mix kept inside the box.
GridField random_smooth_field(std::size_t n, const MaterialParams& p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(-0.2, 0.2);
    GridField f = GridField::homogeneous(n, p.gamma, 0.0);
    const double a1 = amp(rng), a2 = amp(rng), b1 = amp(rng), b2 = amp(rng);
    const double base = 1.0 + 0.5 * std::abs(amp(rng));
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = f.x(i);
        f.u[i] += a1 * std::sin(M_PI * x) + a2 * std::sin(2.0 * M_PI * x);
        f.alpha[i] = base + b1 * std::sin(2.0 * M_PI * x) + b2 * std::cos(4.0 * M_PI * x)
                   - (b1 * 0.0 + b2);  // alpha(0) = alpha(1) by periodicity of the modes
    }
    f.alpha[n] = f.alpha[0];
    return f;
}

}  // namespace

TEST_CASE("potential W: wells and closed values") {
    const MaterialParams p10(1.0, 0.0, 0.6);
    CHECK(potential_w(0.6, 0.0, p10) == doctest::Approx(0.0).epsilon(1e-14));

    // alpha = 0 leaves only the couple term (mu_c/2) z^2
    const MaterialParams p(1.0, 0.1, 0.6);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> zd(-2.0, 2.0);
    for (int k = 0; k < 50; ++k) {
        const double z = zd(rng);
        CHECK(potential_w(z, 0.0, p) == doctest::Approx(0.05 * z * z).epsilon(1e-13));
    }

    // unique minimal value at alpha_2 for mu_c = 0.1 > crit
    const double a2 = well_set(0.6, p).angles[0];
    CHECK(a2 == doctest::Approx(0.2915).epsilon(2e-4));
    CHECK(potential_w(0.6, a2, p) == doctest::Approx(0.003877).epsilon(2e-4));
    CHECK(potential_w(0.6, 0.2915, p) == doctest::Approx(0.003877396).epsilon(1e-6));
}

TEST_CASE("potential W: 2*pi periodicity and nonnegativity") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> zd(-2.0, 2.0), ad(0.0, two_pi);
    std::uniform_real_distribution<double> mud(0.2, 3.0), mcd(0.0, 3.0), gd(0.1, 1.9);
    for (int k = 0; k < 30; ++k) {
        const MaterialParams p(mud(rng), mcd(rng), gd(rng));
        for (int j = 0; j < 40; ++j) {
            const double z = zd(rng), a = ad(rng);
            CHECK(potential_w(z, a + two_pi, p) ==
                  doctest::Approx(potential_w(z, a, p)).epsilon(1e-11));
            CHECK(potential_w(z, a, p) >= 0.0);
        }
    }
}

TEST_CASE("reduced potential") {
    const MaterialParams p(1.0, 0.0, 0.6);
    CHECK(potential_w_reduced(0.6, 0.0, p) == doctest::Approx(0.0));
    CHECK(potential_w_reduced(0.6, 0.6, p) == doctest::Approx(0.0).epsilon(1e-14));
    // 0.5 * (0.3 * (0.3 - 0.6))^2
    CHECK(potential_w_reduced(0.6, 0.3, p) == doctest::Approx(0.00405).epsilon(1e-12));
}

TEST_CASE("q density") {
    const MaterialParams p0(1.0, 0.0, 0.6);
    CHECK(q_density(0.0, 0.0, p0) == doctest::Approx(0.0));
    CHECK(q_density(0.6, 0.0, p0) == doctest::Approx(0.18).epsilon(1e-14));

    // grid scan over alpha locates the minimum of q(0.6, .) at the cached well
    const MaterialParams p(1.0, 0.1, 0.6);
    double best = 1e30, best_a = 0.0;
    for (int i = 0; i <= 200000; ++i) {
        const double a = two_pi * i / 200000.0;
        const double v = q_density(0.6, a, p);
        if (v < best) { best = v; best_a = a; }
    }
    CHECK(best_a == doctest::Approx(0.2915).epsilon(1e-3));
    CHECK(q_density(0.6, 0.2915, p) == doctest::Approx(0.18 + 0.003877396).epsilon(1e-7));
    CHECK(best == doctest::Approx(0.1838774).epsilon(1e-6));
}

TEST_CASE("shifted energies V1 and V2") {
    const MaterialParams p(2.0, 0.0, 0.6);
    CHECK(v1(0.6, p) == doctest::Approx(0.0));
    CHECK(v1(-0.6, p) == doctest::Approx(0.0));
    CHECK(v1(0.0, p) == doctest::Approx(0.36).epsilon(1e-14));

    // wells of V2 at z = gamma
    CHECK(v2(0.6, 0.58291, p) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::abs(v2(0.6, 0.5829135889557342, p)) <= 1e-12);
    CHECK(v2(0.6, 0.3, p) == doctest::Approx(potential_w(0.6, 0.3, p)).epsilon(1e-14));

    const MaterialParams pe(1.0, 1.0, 0.6);
    const double a2 = well_set(0.6, pe).angles[0];
    CHECK(std::abs(v2(0.6, a2, pe)) <= 1e-12);

    // V2(gamma, .) >= 0 on a dense grid for randomized parameters
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> mud(0.2, 3.0), gd(0.1, 1.9), ud(0.0, 1.0);
    for (int k = 0; k < 25; ++k) {
        const double mu = mud(rng), g = gd(rng);
        const double mc = ud(rng) < 0.3 ? 0.0 : ud(rng) * mu;
        const MaterialParams pr(mu, mc, g);
        for (int i = 0; i <= 2000; ++i) {
            const double a = two_pi * i / 2000.0;
            CHECK(v2(g, a, pr) >= -1e-12);
        }
    }
}

TEST_CASE("energy_eps on reference fields") {
    // constant alpha = 0 kills curvature and W when mu_c = 0
    const MaterialParams p0(1.0, 0.0, 0.6, 0.0, 0.7);
    const GridField f0 = GridField::homogeneous(64, 0.6, 0.0);
    const EnergyBreakdown e0 = energy_eps(f0, p0);
    CHECK(e0.curvature == doctest::Approx(0.0));
    CHECK(e0.coupling == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(e0.total == doctest::Approx(0.18).epsilon(1e-13));

    // homogeneous state at the equal-moduli well
    const MaterialParams pe(1.0, 1.0, 0.6, 0.0, 0.0);
    const double a2 = well_set(0.6, pe).angles[0];
    const GridField fe = GridField::homogeneous(64, 0.6, a2);
    CHECK(energy_eps(fe, pe).total == doctest::Approx(0.1838773964).epsilon(1e-9));
    CHECK(energy_eps(fe, pe).total == doctest::Approx(pe.e_min).epsilon(1e-12));

    // eps = 0 drops the curvature part and nothing else
    const MaterialParams pa(1.3, 0.4, 0.9, 0.0, 0.0);
    const MaterialParams pb(1.3, 0.4, 0.9, 0.0, 0.25);
    const GridField f = random_smooth_field(128, pa, 21);
    const EnergyBreakdown ea = energy_eps(f, pa);
    const EnergyBreakdown eb = energy_eps(f, pb);
    CHECK(ea.curvature == 0.0);
    CHECK(ea.total == doctest::Approx(eb.shear + eb.coupling).epsilon(1e-13));
}

TEST_CASE("energy_eps properties") {
    const MaterialParams pa(1.0, 0.3, 0.8, 0.0, 0.1);
    const MaterialParams pb(1.0, 0.3, 0.8, 0.0, 0.2);
    const GridField f = random_smooth_field(96, pa, 5);

    const EnergyBreakdown ea = energy_eps(f, pa);
    const EnergyBreakdown eb = energy_eps(f, pb);
    // curvature scales exactly as eps^2
    CHECK(eb.curvature == doctest::Approx(4.0 * ea.curvature).epsilon(1e-12));
    // and the energy dominates the curvature-free value
    CHECK(ea.total >= ea.shear + ea.coupling);

    // breakdown consistency
    CHECK(ea.total == doctest::Approx(ea.curvature + ea.shear + ea.coupling).epsilon(1e-12));

    GridField bad = f;
    bad.n = 1;
    CHECK_THROWS_AS(energy_eps(bad, pa), std::invalid_argument);
}

TEST_CASE("grid field admissibility and trapezoid mean") {
    const MaterialParams p(1.0, 0.0, 0.6);
    GridField f = GridField::homogeneous(16, 0.6, 0.4);
    CHECK(is_admissible(f, p));
    CHECK(discrete_mean_alpha(f) == doctest::Approx(0.4).epsilon(1e-14));

    // trapezoid weights: endpoint nodes count half
    f.alpha[0] = f.alpha[16] = 0.0;
    CHECK(discrete_mean_alpha(f) == doctest::Approx(0.4 * 15.0 / 16.0).epsilon(1e-13));
    CHECK(is_admissible(f, p));

    f.alpha[16] = 0.1;  // trace mismatch
    CHECK(!is_admissible(f, p));
    f.alpha[16] = 0.0;
    f.u[16] = 0.7;  // wrong boundary displacement
    CHECK(!is_admissible(f, p));
    f.u[16] = 0.6;
    f.alpha[3] = -0.2;  // outside the box
    CHECK(!is_admissible(f, p));
}

TEST_CASE("energy_eps_theta constraint branch") {
    const double theta = 0.4;
    const MaterialParams p(1.0, 0.5, 0.6, theta, 0.1);
    const GridField ok = GridField::homogeneous(32, 0.6, theta);
    CHECK(energy_eps_theta(ok, p).total > 0.0);

    const GridField off = GridField::homogeneous(32, 0.6, theta + 0.5);
    CHECK_THROWS_AS(energy_eps_theta(off, p), ConstraintViolation);
    try {
        energy_eps_theta(off, p);
    } catch (const ConstraintViolation& e) {
        CHECK(e.achieved_mean == doctest::Approx(theta + 0.5).epsilon(1e-12));
        CHECK(e.target == doctest::Approx(theta));
    }
}

TEST_CASE("energy_rescaled") {
    const MaterialParams p(2.0, 0.0, 0.6, 0.0, 0.1);
    const WellSet ws = well_set(0.6, p);

    // homogeneous state at a well: every integrand vanishes
    for (double w : ws.angles) {
        const GridField f = GridField::homogeneous(32, 0.6, w);
        CHECK(energy_rescaled(f, p) == doctest::Approx(0.0).epsilon(1e-12));
    }

    // constant non-well alpha: V2(gamma, c) / eps
    const double c = 0.3;
    const GridField fc = GridField::homogeneous(32, 0.6, c);
    CHECK(energy_rescaled(fc, p) ==
          doctest::Approx(v2(0.6, c, p) / 0.1).epsilon(1e-12));

    // identity with energy_eps on u = ubar
    const MaterialParams pr(1.4, 0.3, 0.7, 0.0, 0.2);
    GridField f = GridField::homogeneous(100, 0.7, 0.0);
    for (std::size_t i = 0; i <= f.n; ++i)
        f.alpha[i] = 1.0 + 0.3 * std::sin(two_pi * f.x(i));
    f.alpha[f.n] = f.alpha[0];
    const double lhs = energy_rescaled(f, pr);
    const double rhs = (energy_eps(f, pr).total - 0.5 * pr.mu * pr.gamma * pr.gamma - pr.w_min) / pr.eps;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));

    const MaterialParams pz(2.0, 0.0, 0.6, 0.0, 0.0);
    CHECK_THROWS_AS(energy_rescaled(fc, pz), std::invalid_argument);
}

TEST_CASE("rescaled identity holds exactly iff u' >= gamma pointwise") {
    const MaterialParams p(1.4, 0.3, 0.7, 0.0, 0.2);
    auto shifted = [&p](const GridField& f) {
        return (energy_eps(f, p).total - 0.5 * p.mu * p.gamma * p.gamma - p.w_min) / p.eps;
    };

    // u' = gamma + positive bump: |u'|^2 - gamma^2 loses its modulus
    GridField up = GridField::homogeneous(80, 0.7, 0.9);
    for (std::size_t i = 0; i <= up.n; ++i) {
        const double x = up.x(i);
        up.u[i] += 0.05 * (x - 0.5 * x * x);  // u' = gamma + 0.05 (1 - x) >= gamma
        up.alpha[i] = 0.9 + 0.2 * std::sin(two_pi * x);
    }
    up.alpha[up.n] = up.alpha[0];
    CHECK(energy_rescaled(up, p) == doctest::Approx(shifted(up)).epsilon(1e-11));

    // u' dips below gamma somewhere: V1 rectifies and the identity becomes >=
    GridField dn = up;
    for (std::size_t i = 0; i <= dn.n; ++i)
        dn.u[i] = 0.7 * dn.x(i) - 0.1 * std::sin(two_pi * dn.x(i)) / two_pi;
    dn.u[dn.n] = 0.7;
    CHECK(energy_rescaled(dn, p) > shifted(dn) + 1e-6);
}

TEST_CASE("analytic gradient of energy_eps matches central differences") {
    std::mt19937 rng(40);
    for (int trial = 0; trial < 6; ++trial) {
        const MaterialParams p(1.0 + 0.2 * trial, 0.1 * trial, 0.6 + 0.05 * trial,
                               0.0, 0.05 + 0.02 * trial);
        GridField f = random_smooth_field(48, p, 100 + trial);

        std::vector<double> du, da;
        energy_eps_gradient(f, p, du, da);

        const double h = 1e-6;
        double max_rel = 0.0;
        double gnorm = 0.0;
        for (std::size_t i = 1; i < f.n; ++i) {
            GridField fp = f, fm = f;
            fp.u[i] += h;
            fm.u[i] -= h;
            const double fd = (energy_eps(fp, p).total - energy_eps(fm, p).total) / (2.0 * h);
            max_rel = std::max(max_rel, std::abs(du[i] - fd));
            gnorm = std::max(gnorm, std::abs(fd));

            fp = f; fm = f;
            fp.alpha[i] += h;
            fm.alpha[i] -= h;
            const double fda = (energy_eps(fp, p).total - energy_eps(fm, p).total) / (2.0 * h);
            max_rel = std::max(max_rel, std::abs(da[i] - fda));
            gnorm = std::max(gnorm, std::abs(fda));
        }
        CHECK(max_rel / std::max(gnorm, 1e-12) <= 1e-5);
    }
}
