#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosserat1d/closed_form.hpp"
#include "cosserat1d/envelope.hpp"
#include "cosserat1d/errors.hpp"
#include "cosserat1d/interface_energy.hpp"
#include "cosserat1d/model.hpp"
#include "cosserat1d/solver.hpp"

using nlohmann::json;
using namespace cosserat1d;

namespace {

// CSV numbers at 6 significant digits, JSON at full precision
std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Output {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + path);
        out << text;
    }
};

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("cannot parse number: " + tok);
        vals.push_back(v);
    }
    return vals;
}

std::string field_csv(const GridField& f) {
    std::string s = "x,u,alpha\n";
    for (std::size_t i = 0; i <= f.n; ++i)
        s += fmt6(f.x(i)) + "," + fmt6(f.u[i]) + "," + fmt6(f.alpha[i]) + "\n";
    return s;
}

GridField read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open field file: " + path);
    GridField f;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.find("x") != std::string::npos && line.find("alpha") != std::string::npos)
                continue;  // skip header row
        }
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
        if (row.size() != 3) throw std::invalid_argument("field rows must be x,u,alpha");
        f.u.push_back(row[1]);
        f.alpha.push_back(row[2]);
    }
    if (f.u.size() < 3) throw std::invalid_argument("field file too short");
    f.n = f.u.size() - 1;
    return f;
}

json wells_json(const WellSet& ws) {
    json j;
    j["angles"] = ws.angles;
    j["minimal_energy"] = ws.minimal_energy;
    j["minimal_w"] = ws.minimal_w;
    return j;
}

int cmd_regime(const MaterialParams& p, const Output& out) {
    const Regime r = classify(p);
    const WellSet ws = well_set(p.gamma, p);
    json j;
    j["regime"] = to_string(r.tag);
    j["mu_c_crit"] = r.mu_c_crit;
    j["wells"] = wells_json(ws);
    out.write(j.dump(2) + "\n");
    return 0;
}

int cmd_table2(double mu, const std::vector<double>& gammas, const Output& out,
               const std::string& format) {
    struct Row { double gamma, a1p, c0, c0_red; };
    std::vector<Row> rows;
    for (double g : gammas) {
        const MaterialParams p(mu, 0.0, g);
        const WellSet ws = well_set(g, p);
        Row r;
        r.gamma = g;
        r.a1p = ws.angles[1];
        r.c0 = surface_energy(ws.angles[0], ws.angles[1], p);
        r.c0_red = surface_energy_reduced(0.0, g, p);
        rows.push_back(r);
    }
    if (format == "json") {
        json j = json::array();
        for (const Row& r : rows)
            j.push_back({{"gamma", r.gamma}, {"alpha1_plus", r.a1p},
                         {"c0", r.c0}, {"c0_reduced", r.c0_red}});
        out.write(j.dump(2) + "\n");
    } else {
        std::string s = "gamma,alpha1_plus,c0,c0_reduced\n";
        for (const Row& r : rows)
            s += fmt6(r.gamma) + "," + fmt6(r.a1p) + "," + fmt6(r.c0) + "," +
                 fmt6(r.c0_red) + "\n";
        out.write(s);
    }
    return 0;
}

int cmd_envelope(const MaterialParams& p, double z, std::size_t samples,
                 const Output& out) {
    SampledEnvelope env = envelope_bruteforce(z, p, samples);
    std::string s = "alpha,W,Wss,Q,Qss\n";
    for (std::size_t i = 0; i < env.alpha.size(); ++i) {
        const double a = env.alpha[i];
        s += fmt6(a) + "," + fmt6(potential_w(z, a, p)) + "," + fmt6(env.value[i]) +
             "," + fmt6(q_density(z, a, p)) + "," + fmt6(q_envelope(z, a, p)) + "\n";
    }
    out.write(s);
    return 0;
}

int cmd_energy(const MaterialParams& p, std::size_t n, double alpha_const,
               const std::string& in_path, const Output& out) {
    const GridField f = in_path.empty()
                            ? GridField::homogeneous(n, p.gamma, alpha_const)
                            : read_field_csv(in_path);
    const EnergyBreakdown e = energy_eps(f, p);
    const double mean = discrete_mean_alpha(f);
    json j;
    j["curvature"] = e.curvature;
    j["shear"] = e.shear;
    j["coupling"] = e.coupling;
    j["total"] = e.total;
    j["mean_alpha"] = mean;
    j["constraint_satisfied"] = std::abs(mean - p.theta) <= 1e-8;
    if (p.eps > 0.0) j["rescaled"] = energy_rescaled(f, p);
    out.write(j.dump(2) + "\n");
    return 0;
}

int cmd_surface(const MaterialParams& p, const Output& out) {
    const WellSet ws = well_set(p.gamma, p);
    if (ws.angles.size() < 2)
        throw WrongRegime("surface: the selected regime has a single well, no transition");
    const double c0 = surface_energy(ws.angles[0], ws.angles[1], p);
    const double c0_red = (p.mu_c == 0.0)
                              ? surface_energy_reduced(0.0, p.gamma, p)
                              : std::numeric_limits<double>::quiet_NaN();
    std::string s = "gamma,alpha1_plus,c0,c0_reduced\n";
    s += fmt6(p.gamma) + "," + fmt6(ws.angles[1]) + "," + fmt6(c0) + "," +
         fmt6(c0_red) + "\n";
    out.write(s);
    return 0;
}

int cmd_profile(const MaterialParams& p, double am, double ap, double half_width,
                double step, const Output& out) {
    const TransitionProfile prof =
        (half_width > 0.0) ? optimal_profile(am, ap, p, half_width, step)
                           : optimal_profile_auto(am, ap, p, step);
    std::string s = "y,alpha\n";
    for (std::size_t i = 0; i < prof.y.size(); ++i)
        s += fmt6(prof.y[i]) + "," + fmt6(prof.alpha[i]) + "\n";
    out.write(s);
    return 0;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string s = "eps,energy,relaxed,gap,iterations,converged\n";
    for (const SweepRow& r : rows)
        s += fmt6(r.eps) + "," + fmt6(r.energy_eps) + "," + fmt6(r.energy_relaxed) +
             "," + fmt6(r.gap) + "," + std::to_string(r.iterations) + "," +
             (r.converged ? "1" : "0") + "\n";
    return s;
}

int cmd_relax(const MaterialParams& p, const SolverConfig& cfg,
              const std::string& dump_path, const Output& out) {
    const SolveResult relaxed = minimize_relaxed(p, cfg);
    const SolveResult full = minimize_eps_theta(p, cfg);
    std::vector<SweepRow> rows{{p.eps, full.energy, relaxed.energy,
                                full.energy - relaxed.energy,
                                full.iterations + relaxed.iterations,
                                full.converged && relaxed.converged}};
    out.write(sweep_csv(rows));
    if (!dump_path.empty()) {
        std::ofstream df(dump_path, std::ios::binary);
        df << field_csv(full.field);
    }
    return (full.converged && relaxed.converged) ? 0 : 4;
}

int cmd_gamma_sweep(const MaterialParams& p, const std::vector<double>& eps_list,
                    const SolverConfig& cfg, const std::string& dump_prefix,
                    const Output& out) {
    const std::vector<SweepRow> rows = gamma_sweep(p, eps_list, cfg);
    out.write(sweep_csv(rows));
    if (!dump_prefix.empty()) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const MaterialParams pe(p.mu, p.mu_c, p.gamma, p.theta, rows[i].eps);
            const SolveResult r = minimize_eps_theta(pe, cfg);
            std::ofstream df(dump_prefix + "_" + fmt6(rows[i].eps) + ".csv",
                             std::ios::binary);
            df << field_csv(r.field);
        }
    }
    for (const SweepRow& r : rows)
        if (!r.converged) return 4;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D Cosserat simple-shear energy toolkit"};
    app.require_subcommand(1);

    double mu = 1.0, mu_c = 0.0, gamma = 0.6, theta = 0.0, eps = 0.0;
    std::size_t n = 256;
    std::string out_path, format = "csv";

    auto add_common = [&](CLI::App* sub, bool with_eps_theta = true) {
        sub->add_option("--mu", mu, "shear modulus, > 0");
        sub->add_option("--mu-c", mu_c, "couple modulus, >= 0");
        sub->add_option("--gamma", gamma, "boundary shear, in (0, 2)");
        if (with_eps_theta) {
            sub->add_option("--eps", eps, "internal length parameter, >= 0");
            sub->add_option("--theta", theta, "mean micro-rotation constraint");
        }
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* regime = app.add_subcommand("regime", "regime, critical couple modulus and wells");
    add_common(regime);

    CLI::App* table2 = app.add_subcommand("table2", "surface energies over a gamma list (mu_c = 0)");
    std::string gamma_list = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0";
    table2->add_option("--mu", mu, "shear modulus");
    table2->add_option("--gamma-list", gamma_list, "comma-separated gamma values");
    table2->add_option("--out", out_path, "output file");
    table2->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* envelope = app.add_subcommand("envelope", "W, Q and their convex envelopes on an alpha grid");
    double env_z = 0.6;
    std::size_t env_samples = 1024;
    add_common(envelope);
    envelope->add_option("--z", env_z, "shear strain value z = u'");
    envelope->add_option("--samples", env_samples, "alpha samples");

    CLI::App* energy = app.add_subcommand("energy", "evaluate the discrete energies of a field");
    double alpha_const = -1.0;
    std::string in_path;
    add_common(energy);
    energy->add_option("--n", n, "grid cells");
    energy->add_option("--alpha-const", alpha_const, "constant micro-rotation (default: theta)");
    energy->add_option("--in", in_path, "read the field from a CSV of x,u,alpha rows");

    CLI::App* surface = app.add_subcommand("surface", "surface energy between the two wells");
    add_common(surface);

    CLI::App* profile = app.add_subcommand("profile", "optimal transition profile samples");
    double half_width = 0.0, prof_step = 1e-3, prof_am = -1.0, prof_ap = -1.0;
    add_common(profile);
    profile->add_option("--half-width", half_width, "profile half width (0 = adaptive)");
    profile->add_option("--step", prof_step, "integration step");
    profile->add_option("--alpha-minus", prof_am, "lower well (default: from the regime)");
    profile->add_option("--alpha-plus", prof_ap, "upper well (default: from the regime)");

    SolverConfig cfg;
    std::string dump_path, eps_list_str = "0.2,0.1,0.05,0.025";

    CLI::App* relax = app.add_subcommand("relax", "minimize E_eps^theta and its relaxation");
    add_common(relax);
    relax->add_option("--n", cfg.n, "grid cells");
    relax->add_option("--grad-tol", cfg.grad_tol, "projected-gradient tolerance");
    relax->add_option("--max-iters", cfg.max_iters, "iteration budget per start");
    relax->add_option("--restarts", cfg.restarts, "multi-start count");
    relax->add_option("--dump-field", dump_path, "write the minimizing field as CSV");

    CLI::App* sweep = app.add_subcommand("gamma-sweep", "convergence of minima as eps -> 0");
    add_common(sweep);
    sweep->add_option("--n", cfg.n, "grid cells");
    sweep->add_option("--eps-list", eps_list_str, "strictly decreasing eps values");
    sweep->add_option("--grad-tol", cfg.grad_tol, "projected-gradient tolerance");
    sweep->add_option("--max-iters", cfg.max_iters, "iteration budget per start");
    sweep->add_option("--restarts", cfg.restarts, "multi-start count");
    sweep->add_option("--dump-prefix", dump_path, "per-eps field dump prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const Output out{out_path};
    try {
        if (app.got_subcommand(regime)) {
            return cmd_regime(MaterialParams(mu, mu_c, gamma, theta, eps), out);
        }
        if (app.got_subcommand(table2)) {
            std::vector<double> gs = parse_list(gamma_list);
            return cmd_table2(mu, gs, out, format);
        }
        if (app.got_subcommand(envelope)) {
            return cmd_envelope(MaterialParams(mu, mu_c, gamma, theta, eps), env_z,
                                env_samples, out);
        }
        if (app.got_subcommand(energy)) {
            const MaterialParams p(mu, mu_c, gamma, theta, eps);
            const double ac = alpha_const < 0.0 ? theta : alpha_const;
            return cmd_energy(p, n, ac, in_path, out);
        }
        if (app.got_subcommand(surface)) {
            return cmd_surface(MaterialParams(mu, mu_c, gamma, theta, eps), out);
        }
        if (app.got_subcommand(profile)) {
            const MaterialParams p(mu, mu_c, gamma, theta, eps);
            double am = prof_am, ap = prof_ap;
            if (am < 0.0 || ap < 0.0) {
                const WellSet ws = well_set(p.gamma, p);
                if (ws.angles.size() < 2)
                    throw WrongRegime("profile: the selected regime has a single well");
                am = ws.angles[0];
                ap = ws.angles[1];
            }
            return cmd_profile(p, am, ap, half_width, prof_step, out);
        }
        if (app.got_subcommand(relax)) {
            if (!(eps > 0.0)) throw std::invalid_argument("relax: eps must be positive");
            return cmd_relax(MaterialParams(mu, mu_c, gamma, theta, eps), cfg,
                             dump_path, out);
        }
        if (app.got_subcommand(sweep)) {
            const std::vector<double> eps_list = parse_list(eps_list_str);
            return cmd_gamma_sweep(MaterialParams(mu, mu_c, gamma, theta, eps),
                                   eps_list, cfg, dump_path, out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
