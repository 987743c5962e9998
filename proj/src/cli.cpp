#include "biharm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "biharm/bounds.hpp"
#include "biharm/config.hpp"
#include "biharm/kernels.hpp"
#include "biharm/landau.hpp"
#include "biharm/lipschitz.hpp"
#include "biharm/report.hpp"
#include "biharm/solver.hpp"

namespace biharm::cli {

namespace {

struct CommonOpts {
    quad::DiskRuleParams rule;
    std::string output = "text";
    bool serial = false;

    Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
};

void add_rule_flags(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--angular-nodes", o.rule.angular, "angular trapezoid nodes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--radial-panels", o.rule.radial_panels, "radial Gauss-Legendre panels")
        ->check(CLI::PositiveNumber);
    sub->add_option("--panel-order", o.rule.panel_order, "Gauss-Legendre order per panel")
        ->check(CLI::PositiveNumber);
    sub->add_option("--grading-levels", o.rule.grading_levels,
                    "dyadic subdivisions of the innermost panel")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--serial", o.serial, "run the serial reference paths");
}

void add_output_flag(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--output", o.output, "report format: text|csv|structured");
}

Complex parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw DomainError("point '" + text + "' must be re,im");
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
        const double x = std::stod(re, &u1);
        const double y = std::stod(im, &u2);
        if (u1 != re.size() || u2 != im.size()) throw std::invalid_argument(text);
        return {x, y};
    } catch (const std::exception&) {
        throw DomainError("point '" + text + "' must be re,im");
    }
}

void parse_grid(const std::string& text, int& radial, int& angular) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos)
        throw DomainError("grid '" + text + "' must be RADIALxANGULAR, e.g. 20x48");
    try {
        radial = std::stoi(text.substr(0, x));
        angular = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        throw DomainError("grid '" + text + "' must be RADIALxANGULAR, e.g. 20x48");
    }
    if (radial < 1 || angular < 1) throw DomainError("grid dimensions must be positive");
}

bounds::BoundId parse_bound_id(const std::string& name) {
    for (const auto id :
         {bounds::BoundId::thm1, bounds::BoundId::thm3, bounds::BoundId::heinz,
          bounds::BoundId::pavlovic, bounds::BoundId::colonna, bounds::BoundId::green_mass,
          bounds::BoundId::grad_green_mass, bounds::BoundId::boundary_schwarz})
        if (name == bounds::bound_name(id)) return id;
    throw DomainError("unknown bound '" + name +
                      "' (thm1|thm3|heinz|pavlovic|colonna|green-mass|grad-green-mass)");
}

lipschitz::Majorant parse_majorant(const std::string& text) {
    if (text == "arctan") return lipschitz::Majorant::arctan();
    if (text.rfind("linear:", 0) == 0) {
        try {
            return lipschitz::Majorant::linear(std::stod(text.substr(7)));
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            throw DomainError("majorant '" + text + "': bad slope");
        }
    }
    if (text.rfind("table:", 0) == 0) {
        const std::string path = text.substr(6);
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open majorant table '" + path + "'");
        std::vector<double> ts, vs;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            double t = 0.0, v = 0.0;
            if (!(ls >> t)) continue;
            if (!(ls >> v)) throw ParseError("majorant rows are: <t> <value>", line_no);
            std::string extra;
            if (ls >> extra) throw ParseError("majorant rows are: <t> <value>", line_no);
            ts.push_back(t);
            vs.push_back(v);
        }
        return lipschitz::Majorant::table(std::move(ts), std::move(vs));
    }
    throw DomainError("majorant '" + text + "' must be linear:<slope>, arctan, or table:<file>");
}

// Doubles the rule until the value settles within tol; mirrors the library's
// refinement loop for the full solution value (Fourier part included, which
// is exact at every level, so the difference tracks the volume quadrature).
Complex solve_refined(const ProblemSpec& spec, Complex z, const quad::DiskRule& rule, double tol,
                      Exec exec) {
    return quad::refine_until(
               rule, [&](const quad::DiskRule& r) { return solver::solve_eval(spec, z, r, exec); },
               tol)
        .value;
}

solver::GradResult grad_refined(const ProblemSpec& spec, Complex z, const quad::DiskRule& rule,
                                double tol, Exec exec) {
    if (!(tol > 0.0)) throw DomainError("refinement tolerance must be positive");
    quad::DiskRule r = rule;
    solver::GradResult prev = solver::solve_gradient(spec, z, r, exec);
    double est = 0.0;
    for (int level = 1; level <= defaults::max_doublings; ++level) {
        r = r.doubled();
        const solver::GradResult cur = solver::solve_gradient(spec, z, r, exec);
        est = std::abs(cur.f_z - prev.f_z) + std::abs(cur.f_zbar - prev.f_zbar);
        if (est < tol) return cur;
        prev = cur;
    }
    throw ConvergenceError("gradient refinement did not reach the requested tolerance",
                           prev.f_z, est);
}

int run_selftest(const CommonOpts& common, std::ostream& out) {
    const quad::DiskRule rule = quad::DiskRule::make(common.rule);
    const Exec exec = common.exec();
    bool all_ok = true;
    auto line = [&](const char* name, bool ok, double value, const char* what) {
        all_ok = all_ok && ok;
        out << (ok ? "ok   " : "FAIL ") << name << "  (" << what << " " << report::number(value)
            << ")\n";
    };

    // Deterministic interior sample points.
    std::mt19937_64 engine(20240817u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto draw = [&]() {
        const double r = 0.95 * std::sqrt(unit(engine));
        const double t = two_pi * unit(engine);
        return Complex{r * std::cos(t), r * std::sin(t)};
    };

    {
        double worst_sym = 0.0, worst_sign = 0.0;
        for (int i = 0; i < 64; ++i) {
            const Complex z = draw(), w = draw();
            const double g1 = kernels::green(z, w);
            const double g2 = kernels::green(w, z);
            worst_sym = std::max(worst_sym, std::abs(g1 - g2));
            worst_sign = std::max(worst_sign, g1);
        }
        line("kernel-symmetry", worst_sym <= 1e-13, worst_sym, "max asymmetry");
        line("kernel-sign", worst_sign <= 0.0, worst_sign, "max value");
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 32; ++i) {
            const Complex z = draw(), zeta = 0.9 * draw();
            const Complex w = (z - zeta) / (1.0 - std::conj(z) * zeta);
            worst = std::max(worst,
                             std::abs(kernels::green_pullback(z, zeta) - kernels::green(z, w)));
        }
        line("pullback-consistency", worst <= 1e-12, worst, "max deviation");
    }
    {
        const Complex z{0.3, -0.2}, w{-0.4, 0.35};
        const kernels::KernelGradient an = kernels::green_gradient(z, w);
        const double h = 1e-5;
        const Complex fx = (kernels::green(z + h, w) - kernels::green(z - h, w)) / (2.0 * h);
        const Complex fy =
            (kernels::green(z + Complex{0.0, h}, w) - kernels::green(z - Complex{0.0, h}, w)) /
            (2.0 * h);
        const Complex fd_z = 0.5 * (fx - Complex{0.0, 1.0} * fy);
        const Complex fd_zbar = 0.5 * (fx + Complex{0.0, 1.0} * fy);
        const double dev = std::abs(an.d_z - fd_z) + std::abs(an.d_zbar - fd_zbar);
        line("gradient-stencil", dev <= 1e-7, dev, "deviation");
    }
    {
        const kernels::SeriesIntegralResult sr = kernels::kernel_series_integral(2.0, 0.5, 512);
        const double dev = std::abs(sr.quadrature - sr.series);
        line("angular-moment-series", sr.series_converged && dev <= 1e-10, dev, "deviation");
    }
    {
        double worst = 0.0;
        for (const Complex z : {Complex{0.0, 0.0}, Complex{0.5, 0.25}}) {
            const bounds::MassCheck mc = bounds::green_mass_identity(z, rule, exec);
            worst = std::max(worst, std::abs(mc.numeric - mc.closed_form));
        }
        line("kernel-mass-identity", worst <= 1e-8, worst, "max deviation");
    }
    out << (all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES above\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"biharmonic Dirichlet solver and bound verifier for the unit disk"};
    app.require_subcommand(1);
    app.footer("Thread count follows OMP_NUM_THREADS; --serial forces the reference paths.");

    CommonOpts common;
    std::string spec_path, grid_text, bound_text;
    std::vector<std::string> z_texts;
    double r_max = defaults::grid_r_max;
    double tol = 0.0;
    double eta_angle = 0.0;
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, landau_tol = 1e-15, aa_m = 0.0;
    bool aa_mode = false;
    std::string majorant_text = "linear:1";
    int pairs = defaults::interior_pair_count;
    std::uint64_t seed = 1;

    CLI::App* solve = app.add_subcommand("solve", "evaluate the solution at points or on a grid");
    solve->add_option("--spec", spec_path, "problem file")->required();
    solve->add_option("--z", z_texts, "evaluation point re,im (repeatable)");
    solve->add_option("--grid", grid_text, "polar grid RADIALxANGULAR");
    solve->add_option("--r-max", r_max, "grid radius");
    solve->add_option("--tol", tol, "refine the rule until values settle within this");
    add_rule_flags(solve, common);
    add_output_flag(solve, common);

    CLI::App* grad = app.add_subcommand("grad", "evaluate Wirtinger derivatives of the solution");
    grad->add_option("--spec", spec_path, "problem file")->required();
    grad->add_option("--z", z_texts, "evaluation point re,im (repeatable)");
    grad->add_option("--grid", grid_text, "polar grid RADIALxANGULAR");
    grad->add_option("--r-max", r_max, "grid radius");
    grad->add_option("--tol", tol, "refine the rule until derivatives settle within this");
    add_rule_flags(grad, common);
    add_output_flag(grad, common);

    CLI::App* selftest =
        app.add_subcommand("kernels-selftest", "cross-check the kernel closed forms");
    add_rule_flags(selftest, common);

    CLI::App* check = app.add_subcommand("check-bounds", "sweep a bound over a polar grid");
    check->add_option("--bound", bound_text,
                      "thm1|thm3|heinz|pavlovic|colonna|green-mass|grad-green-mass")
        ->required();
    check->add_option("--spec", spec_path, "problem file (not needed for the kernel-mass bounds)");
    check->add_option("--grid", grid_text, "polar grid RADIALxANGULAR");
    check->add_option("--r-max", r_max, "grid radius");
    add_rule_flags(check, common);
    add_output_flag(check, common);

    CLI::App* schwarz =
        app.add_subcommand("boundary-schwarz", "radial lower-bound estimate at a boundary point");
    schwarz->add_option("--spec", spec_path, "problem file")->required();
    schwarz->add_option("--eta", eta_angle, "boundary point angle in radians")->required();
    add_rule_flags(schwarz, common);
    add_output_flag(schwarz, common);

    CLI::App* landau_cmd =
        app.add_subcommand("landau", "univalence radius and covered disk for a norm family");
    landau_cmd->add_option("--m1", m1, "solution sup-norm bound");
    landau_cmd->add_option("--m2", m2, "normal-derivative data bound");
    landau_cmd->add_option("--m3", m3, "inhomogeneity bound");
    landau_cmd->add_option("--tol", landau_tol, "bisection tolerance");
    landau_cmd->add_flag("--aa", aa_mode, "solve the auxiliary normalizations instead");
    landau_cmd->add_option("--m", aa_m, "map scale for --aa");
    add_output_flag(landau_cmd, common);

    CLI::App* lip = app.add_subcommand("lipschitz", "sampled distance-ratio bound");
    lip->add_option("--spec", spec_path, "problem file (vanishing boundary values required)")
        ->required();
    lip->add_option("--majorant", majorant_text, "linear:<slope> | arctan | table:<file>");
    lip->add_option("--pairs", pairs, "interior sample pairs")->check(CLI::PositiveNumber);
    lip->add_option("--seed", seed, "sampling seed");
    add_rule_flags(lip, common);
    add_output_flag(lip, common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        const report::Format fmt = report::parse_format(common.output);
        const Exec exec = common.exec();
        int grid_radial = defaults::grid_radial, grid_angular = defaults::grid_angular;
        if (!grid_text.empty()) parse_grid(grid_text, grid_radial, grid_angular);
        const quad::DiskRule rule = quad::DiskRule::make(common.rule);

        auto eval_points = [&]() {
            std::vector<Complex> pts;
            if (!z_texts.empty()) {
                for (const auto& t : z_texts) pts.push_back(parse_point(t));
            } else {
                for (int i = 0; i < grid_radial; ++i) {
                    const double r = grid_radial > 1 ? r_max * i / (grid_radial - 1) : r_max;
                    for (int k = 0; k < grid_angular; ++k) {
                        const double t = two_pi * static_cast<double>(k) / grid_angular;
                        pts.push_back(Complex{r * std::cos(t), r * std::sin(t)});
                    }
                }
            }
            return pts;
        };

        if (app.got_subcommand(solve)) {
            const ProblemSpec spec = io::load_problem(spec_path);
            std::vector<report::SolveSample> rows;
            for (const Complex z : eval_points())
                rows.push_back({z, tol > 0.0 ? solve_refined(spec, z, rule, tol, exec)
                                             : solver::solve_eval(spec, z, rule, exec)});
            report::emit(rows, fmt, out);
            return 0;
        }
        if (app.got_subcommand(grad)) {
            const ProblemSpec spec = io::load_problem(spec_path);
            std::vector<report::GradSample> rows;
            for (const Complex z : eval_points())
                rows.push_back({z, tol > 0.0 ? grad_refined(spec, z, rule, tol, exec)
                                             : solver::solve_gradient(spec, z, rule, exec)});
            report::emit(rows, fmt, out);
            return 0;
        }
        if (app.got_subcommand(selftest)) return run_selftest(common, out);
        if (app.got_subcommand(check)) {
            const bounds::BoundId id = parse_bound_id(bound_text);
            ProblemSpec spec;
            const bool have_spec = !spec_path.empty();
            if (have_spec) spec = io::load_problem(spec_path);
            const bounds::BoundReport rep = bounds::grid_verify(
                id, have_spec ? &spec : nullptr, grid_radial, grid_angular, r_max, rule, exec);
            report::emit(rep, fmt, out);
            if (rep.violated) {
                err << "bound violated: min margin " << report::number(rep.min_margin) << '\n';
                return 1;
            }
            return 0;
        }
        if (app.got_subcommand(schwarz)) {
            const ProblemSpec spec = io::load_problem(spec_path);
            const Complex eta{std::cos(eta_angle), std::sin(eta_angle)};
            const bounds::SchwarzReport rep = bounds::boundary_schwarz_estimate(
                spec, eta, bounds::default_schwarz_r_list(), rule, exec);
            report::emit(rep, fmt, out);
            if (rep.violated) {
                err << "bound violated: margin " << report::number(rep.margin) << '\n';
                return 1;
            }
            return 0;
        }
        if (app.got_subcommand(landau_cmd)) {
            if (aa_mode) {
                if (!(aa_m > 0.0)) throw DomainError("--aa needs a positive --m");
                report::emit(landau::aa_radii(aa_m), fmt, out);
            } else {
                if (landau_cmd->count("--m1") == 0)
                    throw DomainError("landau needs --m1 (and optionally --m2/--m3), or --aa --m");
                report::emit(landau::landau_solve({m1, m2, m3}, landau_tol), fmt, out);
            }
            return 0;
        }
        if (app.got_subcommand(lip)) {
            const ProblemSpec spec = io::load_problem(spec_path);
            const lipschitz::Majorant omega = parse_majorant(majorant_text);
            const lipschitz::LipschitzReport rep =
                lipschitz::modulus_estimate(spec, omega, pairs, seed, rule, exec);
            report::emit(rep, fmt, out);
            if (!rep.pass) {
                err << "bound violated: margin " << report::number(rep.margin) << '\n';
                return 1;
            }
            return 0;
        }
        err << "no subcommand selected\n";
        return 2;
    } catch (const HypothesisError& e) {
        err << "hypothesis gate '" << e.gate() << "' failed: " << e.what() << '\n';
        return 1;
    } catch (const ConvergenceError& e) {
        err << "quadrature did not converge: " << e.what()
            << " (best value " << report::number(e.best().real()) << " + "
            << report::number(e.best().imag()) << "i, est error "
            << report::number(e.est_error()) << ")\n";
        return 3;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const SingularityError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace biharm::cli
