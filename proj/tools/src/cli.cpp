#include "lrq/cli.hpp"

#include "commands.hpp"

#include "lrq/numeric.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <stdexcept>

#ifndef LRQ_VERSION
#define LRQ_VERSION "unknown"
#endif

namespace lrq::cli {

namespace fs = std::filesystem;

std::string version_string() { return std::string("lrq ") + LRQ_VERSION; }

namespace {

unsigned resolve_threads(unsigned from_flag) {
    const char* env = std::getenv("LRQ_THREADS");
    if (env == nullptr || *env == '\0') return from_flag;
    try {
        std::size_t used = 0;
        const long value = std::stol(env, &used);
        if (used != std::string(env).size() || value <= 0) throw std::invalid_argument("");
        return static_cast<unsigned>(value);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("LRQ_THREADS must be a positive integer, got '") + env + "'");
    }
}

void prepare_parent(const fs::path& out) {
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
}

}  // namespace

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Long-range quench dynamics, spectra and recurrence times", "lrq"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads_flag = 0;
    std::uint64_t seed = 0;
    app.add_option("--threads", threads_flag, "worker threads (0 = automatic)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "master seed for random ensembles");

    SpectrumOptions spec_o;
    std::string spec_out;
    auto* spectrum = app.add_subcommand("spectrum", "Fourier coefficients of the power-law couplings");
    spectrum->add_option("--alpha", spec_o.alpha, "decay exponent")->required();
    spectrum->add_option("--size", spec_o.size, "chain length N (lattice side L for d > 1)");
    spectrum->add_option("--d", spec_o.dim, "spatial dimension")->check(CLI::Range(1, 3));
    spectrum->add_option("--n-max", spec_o.n_max, "largest mode index")->required();
    spectrum->add_flag("--limit", spec_o.limit, "thermodynamic-limit coefficients");
    spectrum->add_option("--out", spec_out, "output CSV")->required();

    KitaevOptions kit_o;
    std::string kit_out;
    auto* kitaev = app.add_subcommand("kitaev", "Quench of the long-range Kitaev chain");
    kitaev->add_option("--alpha", kit_o.alpha, "decay exponent")->required();
    kitaev->add_option("--size", kit_o.size, "chain length N")->required();
    kitaev->add_option("--h-initial", kit_o.h_initial, "pre-quench field");
    kitaev->add_option("--h-final", kit_o.h_final, "post-quench field");
    kitaev->add_option("--t-max", kit_o.t_max, "final time");
    kitaev->add_option("--dt", kit_o.dt, "time step");
    kitaev->add_option("--out", kit_out, "output CSV")->required();

    SphericalOptions sph_o;
    std::string sph_out;
    double sph_alpha = 0.0;
    double sph_disorder = 0.0;
    double sph_g = 0.0;
    auto* spherical = app.add_subcommand("spherical", "Quench of the quantum spherical model");
    auto* sph_alpha_opt = spherical->add_option("--alpha", sph_alpha, "power-law coupling exponent");
    spherical->add_flag("--flat", sph_o.flat, "uniform all-to-all coupling (alpha = 0)");
    auto* sph_dis_opt = spherical->add_option("--disorder", sph_disorder, "random-coupling strength J");
    spherical->add_option("--size", sph_o.size, "number of spins (0 with --flat: infinite)");
    spherical->add_option("--j0", sph_o.j0, "uniform coupling scale J0");
    auto* sph_g_opt = spherical->add_option("--g", sph_g, "quantum coupling (default: A(0) = 1)");
    spherical->add_option("--mu-initial-factor", sph_o.mu_initial_factor, "mu_0 / mu_c");
    spherical->add_option("--mu-final-factor", sph_o.mu_final_factor, "mu_f / mu_c");
    spherical->add_option("--t-max", sph_o.t_max, "final time");
    spherical->add_option("--dt", sph_o.dt, "time step");
    spherical->add_option("--samples", sph_o.samples, "finite-N disorder realisations");
    spherical->add_option("--out", sph_out, "output CSV")->required();

    RecurrenceOptions rec_o;
    std::string rec_out;
    double rec_alpha = 0.0;
    double rec_dt = 0.0;
    double rec_t_min = 0.0;
    auto* recurrence = app.add_subcommand("recurrence", "Fidelity and Poincare recurrence times");
    auto* rec_alpha_opt = recurrence->add_option("--alpha", rec_alpha, "Kitaev decay exponent (< 1)");
    recurrence->set_help_flag("--help", "Print this help message and exit");
    recurrence->add_option("--h", rec_o.h, "Kitaev field");
    recurrence->add_option("--levels", rec_o.levels, "number of levels M");
    recurrence->add_option("--energies-file", rec_o.energies_file, "one energy per line");
    recurrence->add_option("--epsilon", rec_o.epsilon, "recurrence threshold");
    recurrence->add_option("--t-max", rec_o.t_max, "scan horizon")->required();
    auto* rec_dt_opt = recurrence->add_option("--dt", rec_dt, "scan step");
    auto* rec_t_min_opt = recurrence->add_option("--t-min", rec_t_min, "earliest admissible recurrence");
    recurrence->add_option("--out", rec_out, "output CSV (the tau table goes to <stem>_tau.csv)")->required();

    std::string figure_name;
    std::string figure_dir;
    auto* sweep = app.add_subcommand("sweep", "Predefined parameter sweeps");
    sweep->require_subcommand(1);
    auto* figure = sweep->add_subcommand("figure", "Write the CSV bundle of a figure");
    figure->add_option("name", figure_name, "figure recipe")->required()->check(CLI::IsMember(figure_names()));
    figure->add_option("--out", figure_dir, "output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "lrq: error: " << e.what() << '\n';
        return 2;
    }

    try {
        RunContext ctx{resolve_threads(threads_flag), seed};
        if (*spectrum) {
            auto cfg = base_config("spectrum");
            const auto table = spectrum_table(spec_o, ctx, cfg);
            prepare_parent(spec_out);
            write_table(spec_out, table, cfg);
        } else if (*kitaev) {
            auto cfg = base_config("kitaev");
            const auto series = kitaev_series(kit_o, ctx, cfg);
            prepare_parent(kit_out);
            write_table(kit_out, time_table(series, "m_x"), cfg);
        } else if (*spherical) {
            if (*sph_alpha_opt) sph_o.alpha = sph_alpha;
            if (*sph_dis_opt) sph_o.disorder = sph_disorder;
            if (*sph_g_opt) sph_o.g = sph_g;
            auto cfg = base_config("spherical");
            const auto r = spherical_run(sph_o, ctx, cfg);
            CsvTable table = r.standard_error.empty() ? time_table(r.A, "A") : CsvTable({"t", "A", "A_stderr"});
            if (!r.standard_error.empty()) {
                for (std::size_t i = 0; i < r.A.size(); ++i) {
                    table.add_row({num(r.A.time(i)), num(r.A.values[i]), num(r.standard_error[i])});
                }
            }
            prepare_parent(sph_out);
            write_table(sph_out, table, cfg);
        } else if (*recurrence) {
            if (*rec_alpha_opt) rec_o.alpha = rec_alpha;
            if (*rec_dt_opt) rec_o.dt = rec_dt;
            if (*rec_t_min_opt) rec_o.t_min = rec_t_min;
            auto cfg = base_config("recurrence");
            const auto tables = recurrence_run(rec_o, ctx, cfg);
            prepare_parent(rec_out);
            write_table(rec_out, tables.series, cfg);
            write_table(tau_path(rec_out), tables.tau, cfg);
        } else if (*sweep) {
            run_figure(figure_name, figure_dir, ctx);
        }
    } catch (const NumericalError& e) {
        std::cerr << "lrq: numerical failure in " << e.operation() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lrq: error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "lrq: error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "lrq: error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lrq: failure: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace lrq::cli
