// qorw — quantum walk on a line: kernels, distributions, asymptotics.
//
// Subcommands: validate, classical-check, evolve, moments, pdf, simulate,
// stochastic. Output is CSV (header row, 17 significant digits, LF endings),
// written atomically when --out is given, otherwise to stdout. Every run
// prints a one-line residual summary to stderr and fails with exit 4 when the
// kernel diagonal or a distribution normalization drifts beyond 1e-9.
//
// Exit codes: 0 ok, 2 parse, 3 validation, 4 numeric, 5 resource caps.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qorw/asymptotic_sim.hpp"
#include "qorw/csv.hpp"
#include "qorw/distribution.hpp"
#include "qorw/errors.hpp"
#include "qorw/kernel.hpp"
#include "qorw/oracle.hpp"
#include "qorw/walk_model.hpp"

namespace {

using namespace qorw;

struct ModelArgs {
    std::string source = "example_ii";
    double q = 0.5;
    double gt = 0.3;
    double gtau = 0.5;
};

void add_model_options(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("--model", args.source,
                    "builtin name (example_i..example_iv, v3) or model JSON file");
    cmd->add_option("--q", args.q, "coin-diagonal weight for example_i/iii/iv");
    cmd->add_option("--gt", args.gt, "entry damping for example_iii");
    cmd->add_option("--gtau", args.gtau, "intermediate damping for example_iii");
}

WalkModel load_model(const ModelArgs& args) {
    if (std::filesystem::exists(args.source)) {
        std::ifstream f(args.source);
        if (!f) throw usage_error("cannot open model file: " + args.source);
        std::stringstream buf;
        buf << f.rdbuf();
        return model_from_json(buf.str());
    }
    return builtin(args.source, args.q, args.gt, args.gtau);
}

// Residual summary every command emits; exceeding 1e-9 fails the run.
struct Residuals {
    double kernel_diag = 0.0;
    double normalization = 0.0;
};

double kernel_diag_residual(const WalkModel& model) {
    double worst = 0.0;
    for (int a = 0; a < 64; ++a) {
        const double phi = 2.0 * M_PI * a / 64.0;
        worst = std::max(worst, std::abs(kernel_at(model, phi, phi) - Cx{1.0}));
    }
    return worst;
}

int finish(const Residuals& r) {
    std::fprintf(stderr, "residuals: kernel_diag=%.3e normalization=%.3e\n",
                 r.kernel_diag, r.normalization);
    return (r.kernel_diag > 1e-9 || r.normalization > 1e-9) ? 4 : 0;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

int cmd_validate(const ModelArgs& margs) {
    WalkModel model = load_model(margs);
    model.validate();
    Residuals r{kernel_diag_residual(model), 0.0};
    std::cout << "label: " << (model.label.empty() ? "(unnamed)" : model.label) << "\n"
              << "k: " << model.k << "\n"
              << "u_quantized: " << (model.is_u_quantized() ? "yes" : "no") << "\n"
              << "entry_channel: " << (model.entry_channel ? "yes" : "no") << "\n";
    return finish(r);
}

int cmd_classical_check(const ModelArgs& margs, int grid, double tolerance) {
    WalkModel model = load_model(margs);
    model.validate();
    if (grid == 0) grid = 4 * model.k + 2;
    auto report = classicality_test(model, grid, tolerance);
    std::cout << (report.classical ? "classical" : "non-classical")
              << " (max phi_plus variation " << format_double(report.max_phi_plus_variation)
              << ")\n";
    return finish({kernel_diag_residual(model), 0.0});
}

int cmd_evolve(const ModelArgs& margs, int n, int init_site, bool oracle,
               const std::string& out_path) {
    WalkModel model = load_model(margs);
    model.validate();
    auto init = WalkerInit::site(init_site);
    PositionDistribution dist = oracle ? oracle_run(model, init, n)
                                       : probabilities(model, init, n);
    emit(out_path, distribution_csv(dist));
    return finish({kernel_diag_residual(model), std::abs(dist.total() - 1.0)});
}

int cmd_moments(const ModelArgs& margs, int n, int s_max, int init_site,
                const std::string& out_path) {
    WalkModel model = load_model(margs);
    model.validate();
    auto init = WalkerInit::site(init_site);
    std::vector<MomentRow> rows;
    for (int s = 1; s <= s_max; ++s) rows.push_back({n, s, moment(model, init, n, s)});
    emit(out_path, moments_csv(rows));
    const double norm = std::abs(probabilities(model, init, n).total() - 1.0);
    return finish({kernel_diag_residual(model), norm});
}

int cmd_pdf(const ModelArgs& margs, int bins, long long nodes, int init_site,
            bool monte_carlo, std::uint64_t seed, const std::string& out_path) {
    WalkModel model = load_model(margs);
    model.validate();
    auto h = asymptotic_pdf(model, WalkerInit::site(init_site), bins, nodes,
                            monte_carlo ? PdfMode::MonteCarlo : PdfMode::Quadrature, seed);
    emit(out_path, histogram_csv(h));
    double total = 0.0;
    for (double m : h.masses) total += m;
    return finish({kernel_diag_residual(model), std::abs(total - 1.0)});
}

int cmd_simulate(const ModelArgs& margs, int s_max, int init_site,
                 const std::string& out_path) {
    WalkModel model = load_model(margs);
    model.validate();
    auto init = WalkerInit::site(init_site);
    std::vector<MomentTableRow> rows;
    for (int s = 1; s <= s_max; ++s) {
        SimulatorSpec spec(model, s, init);
        const double quad = asymptotic_moment(model, init, s) / std::pow(model.k, s);
        rows.push_back({s, simulated_moment(spec), quad});
    }
    emit(out_path, moment_table_csv(rows));
    return finish({kernel_diag_residual(model), 0.0});
}

int cmd_stochastic(const ModelArgs& margs, int s, long long samples, std::uint64_t seed,
                   int init_site, const std::string& out_path) {
    WalkModel model = load_model(margs);
    model.validate();
    SimulatorSpec spec(model, s, WalkerInit::site(init_site));
    const CMat reference = eps_bar_s(spec);
    std::vector<ConvergenceRow> rows;
    for (long long count : {samples / 100, samples / 10, samples}) {
        if (count < 10) continue;
        auto est = stochastic_estimate(spec, count, seed);
        double sigma = 0.0;
        for (int i = 0; i < est.standard_error.rows(); ++i)
            for (int j = 0; j < est.standard_error.cols(); ++j)
                sigma = std::max({sigma, est.standard_error(i, j).real(),
                                  est.standard_error(i, j).imag()});
        rows.push_back({count, max_abs(est.mean - reference), sigma});
    }
    emit(out_path, convergence_csv(rows));
    return finish({kernel_diag_residual(model), 0.0});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum walk on a line: kernels, distributions, asymptotics"};
    app.require_subcommand(1);

    ModelArgs margs;
    std::string out_path;
    int n = 1, s = 1, bins = 100, init_site = 0, grid = 0;
    long long nodes = 10000, samples = 10000;
    std::uint64_t seed = 0;
    bool monte_carlo = false, use_oracle = false;
    double tolerance = 1e-10;
    std::string preset;

    auto* validate = app.add_subcommand("validate", "check model structure and channels");
    add_model_options(validate, margs);

    auto* classical = app.add_subcommand("classical-check",
                                         "test whether the kernel is classical");
    add_model_options(classical, margs);
    classical->add_option("--grid", grid, "grid size (default 4k+2)");
    classical->add_option("--tol", tolerance, "variation tolerance");

    auto* evolve = app.add_subcommand("evolve", "n-step position distribution");
    add_model_options(evolve, margs);
    evolve->add_option("--n", n, "walk steps")->required();
    evolve->add_option("--init-site", init_site, "initial walker site");
    evolve->add_flag("--oracle", use_oracle, "use the direct state-evolution engine");
    evolve->add_option("--out", out_path, "output CSV path");

    auto* moments = app.add_subcommand("moments", "finite-n position moments");
    add_model_options(moments, margs);
    moments->add_option("--n", n, "walk steps")->required();
    moments->add_option("--s", s, "highest moment order")->required();
    moments->add_option("--init-site", init_site, "initial walker site");
    moments->add_option("--out", out_path, "output CSV path");

    auto* pdf = app.add_subcommand("pdf", "asymptotic pdf histogram of L/n");
    add_model_options(pdf, margs);
    pdf->add_option("--bins", bins, "histogram bins");
    pdf->add_option("--nodes", nodes, "quadrature nodes / MC samples");
    pdf->add_option("--init-site", init_site, "initial walker site");
    pdf->add_flag("--mc", monte_carlo, "Monte Carlo instead of quadrature");
    pdf->add_option("--seed", seed, "RNG seed (MC mode)");
    pdf->add_option("--preset", preset, "figure recipe: fig1a, fig1b, fig2");
    pdf->add_option("--out", out_path, "output CSV path");

    auto* simulate = app.add_subcommand("simulate",
                                        "asymptotic moments via the coin-channel average");
    add_model_options(simulate, margs);
    simulate->add_option("--s", s, "highest moment order");
    simulate->add_option("--init-site", init_site, "initial walker site");
    simulate->add_option("--out", out_path, "output CSV path");

    auto* stochastic = app.add_subcommand("stochastic",
                                          "Monte Carlo channel-average convergence table");
    add_model_options(stochastic, margs);
    stochastic->add_option("--s", s, "tensor order");
    stochastic->add_option("--samples", samples, "sample count (largest row)");
    stochastic->add_option("--seed", seed, "RNG seed")->required();
    stochastic->add_option("--init-site", init_site, "initial walker site");
    stochastic->add_option("--out", out_path, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*pdf && !preset.empty()) {
            if (preset == "fig1a") {
                margs.source = "example_ii";
            } else if (preset == "fig1b") {
                margs.source = "v3";
            } else if (preset == "fig2") {
                margs.source = "example_iv";
                margs.q = 0.0;
            } else {
                throw usage_error("unknown preset: " + preset);
            }
            bins = 200;
            nodes = 200000;
            monte_carlo = false;
        }
        if (*validate) return cmd_validate(margs);
        if (*classical) return cmd_classical_check(margs, grid, tolerance);
        if (*evolve) return cmd_evolve(margs, n, init_site, use_oracle, out_path);
        if (*moments) return cmd_moments(margs, n, s, init_site, out_path);
        if (*pdf) return cmd_pdf(margs, bins, nodes, init_site, monte_carlo, seed, out_path);
        if (*simulate) return cmd_simulate(margs, s, init_site, out_path);
        if (*stochastic)
            return cmd_stochastic(margs, s, samples, seed, init_site, out_path);
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
