#include "commands.hpp"

#include "lrq/kitaev.hpp"
#include "lrq/spectra.hpp"
#include "lrq/spherical.hpp"

#include <cmath>
#include <stdexcept>

namespace lrq::cli {

namespace {

namespace fs = std::filesystem;

const std::vector<std::int64_t> size_ladder{128, 512, 2048, 8192};
constexpr double quench_h_initial = 20.0;
constexpr double quench_h_final = 0.4;
constexpr double quench_t_max = 100.0;
constexpr double quench_dt = 0.05;
constexpr double disorder_j0 = 2.0;
constexpr double disorder_t_max = 200.0;
constexpr double disorder_dt = 0.01;

Config figure_config(const std::string& name) {
    auto cfg = base_config("sweep");
    cfg.push_back({"figure", name});
    return cfg;
}

void fig2(const fs::path& dir, std::vector<fs::path>& files) {
    const std::vector<double> fields{20.0, 1.0, 0.4};
    {
        const double alpha = 1.75;
        const std::int64_t N = 1024;
        const spectra::CouplingSpec spec{alpha, 1, N, 1.0};
        const auto tab = spectra::coefficient_table(spec);
        CsvTable t({"alpha", "N", "h", "n", "k", "theta"});
        for (const double h : fields) {
            for (std::int64_t idx = 0; idx <= N / 2; ++idx) {
                const std::int64_t n = idx == N / 2 ? -N / 2 : idx;
                const double theta = kitaev::bogolyubov_angle(h, tab.hopping[idx], tab.pairing[idx]).theta;
                t.add_row({num(alpha), num(N), num(h), num(n), num(spectra::momentum(n, N)), num(theta)});
            }
        }
        auto cfg = figure_config("fig2");
        cfg.push_back({"alpha", num(alpha)});
        cfg.push_back({"size", num(N)});
        cfg.push_back({"coefficients", "finite"});
        files.push_back(dir / "fig2_alpha1.75_N1024.csv");
        write_table(files.back(), t, cfg);
    }
    {
        const double alpha = 0.5;
        const std::int64_t n_max = 200;
        CsvTable t({"alpha", "N", "h", "n", "k", "theta"});
        std::vector<std::pair<double, double>> coeff;
        for (std::int64_t n = 0; n <= n_max; ++n) {
            coeff.emplace_back(spectra::hopping_coeff_limit(alpha, n), spectra::pairing_coeff_limit(alpha, n));
        }
        for (const double h : fields) {
            for (std::int64_t n = 0; n <= n_max; ++n) {
                const double theta = kitaev::bogolyubov_angle(h, coeff[n].first, coeff[n].second).theta;
                t.add_row({num(alpha), "inf", num(h), num(n), "nan", num(theta)});
            }
        }
        auto cfg = figure_config("fig2");
        cfg.push_back({"alpha", num(alpha)});
        cfg.push_back({"size", "inf"});
        cfg.push_back({"coefficients", "limit"});
        cfg.push_back({"n_max", num(n_max)});
        files.push_back(dir / "fig2_alpha0.5_limit.csv");
        write_table(files.back(), t, cfg);
    }
}

void kitaev_ladder(const std::string& name, const std::vector<double>& alphas, const fs::path& dir,
                   const RunContext& ctx, std::vector<fs::path>& files) {
    for (const double alpha : alphas) {
        for (const auto N : size_ladder) {
            KitaevOptions o;
            o.alpha = alpha;
            o.size = N;
            o.h_initial = quench_h_initial;
            o.h_final = quench_h_final;
            o.t_max = quench_t_max;
            o.dt = quench_dt;
            auto cfg = figure_config(name);
            const auto s = kitaev_series(o, ctx, cfg);
            CsvTable t({"alpha", "N", "h_i", "h_f", "t", "m_x"});
            for (std::size_t i = 0; i < s.size(); ++i) {
                t.add_row({num(alpha), num(N), num(o.h_initial), num(o.h_final), num(s.time(i)), num(s.values[i])});
            }
            files.push_back(dir / (name + "_alpha" + label(alpha) + "_N" + std::to_string(N) + ".csv"));
            write_table(files.back(), t, cfg);
        }
    }
}

void fig4(const fs::path& dir, const RunContext& ctx, std::vector<fs::path>& files) {
    for (const double alpha : {0.4, 0.95}) {
        for (const auto N : size_ladder) {
            SphericalOptions o;
            o.alpha = alpha;
            o.size = N;
            o.t_max = quench_t_max;
            o.dt = quench_dt;
            auto cfg = figure_config("fig4");
            const auto r = spherical_run(o, ctx, cfg);
            files.push_back(dir / ("fig4_alpha" + label(alpha) + "_N" + std::to_string(N) + ".csv"));
            write_table(files.back(), time_table(r.A, "A"), cfg);
        }
    }
}

struct DisorderRun {
    TimeSeries A;
    TimeSeries qa;
    Config cfg;
};

DisorderRun disorder_run(const std::string& name, double J, const RunContext& ctx) {
    SphericalOptions o;
    o.disorder = J;
    o.j0 = disorder_j0;
    o.t_max = disorder_t_max;
    o.dt = disorder_dt;
    DisorderRun r;
    r.cfg = figure_config(name);
    r.A = spherical_run(o, ctx, r.cfg).A;
    r.qa = spherical::fluctuation_curve(r.A);
    return r;
}

void fig5(const fs::path& dir, const RunContext& ctx, std::vector<fs::path>& files) {
    {
        SphericalOptions o;
        o.flat = true;
        o.t_max = disorder_t_max;
        o.dt = disorder_dt;
        auto cfg = figure_config("fig5");
        const auto r = spherical_run(o, ctx, cfg);
        files.push_back(dir / "fig5b_clean_A.csv");
        write_table(files.back(), time_table(r.A, "A"), cfg);
        files.push_back(dir / "fig5b_clean_QA.csv");
        write_table(files.back(), fluctuation_table(spherical::fluctuation_curve(r.A)), cfg);
    }
    for (const double two_j : {0.2, 0.6, 1.0, 1.4, 2.0}) {
        const auto r = disorder_run("fig5", 0.5 * two_j, ctx);
        files.push_back(dir / ("fig5a_2J" + label(two_j) + "_A.csv"));
        write_table(files.back(), time_table(r.A, "A"), r.cfg);
        files.push_back(dir / ("fig5a_2J" + label(two_j) + "_QA.csv"));
        write_table(files.back(), fluctuation_table(r.qa), r.cfg);
    }
}

void s1(const fs::path& dir, const RunContext& ctx, std::vector<fs::path>& files) {
    CsvTable t({"alpha", "N", "g_c"});
    for (const double alpha : {0.15, 0.35, 0.55, 0.75, 0.95}) {
        for (int p = 8; p <= 14; ++p) {
            const std::int64_t N = std::int64_t{1} << p;
            const double gc = spherical::critical_coupling(spherical::dos_powerlaw({alpha, 1, N, 1.0}, ctx.threads));
            t.add_row({num(alpha), num(N), num(gc)});
        }
    }
    auto cfg = figure_config("s1");
    cfg.push_back({"j0", num(1.0)});
    files.push_back(dir / "s1_gc.csv");
    write_table(files.back(), t, cfg);
}

void s3(const fs::path& dir, const RunContext& ctx, std::vector<fs::path>& files) {
    CsvTable tau({"J", "tau_eq", "R", "residual"});
    for (int i = 1; i <= 10; ++i) {
        const double two_j = i / 5.0;
        const double J = i / 10.0;
        const auto r = disorder_run("s3", J, ctx);
        files.push_back(dir / ("s3_QA_2J" + label(two_j) + ".csv"));
        write_table(files.back(), fluctuation_table(r.qa), r.cfg);
        const auto fit = spherical::fit_equilibration_time(r.qa);
        if (fit) {
            tau.add_row({num(J), num(fit->tau_eq), num(fit->amplitude), num(fit->residual)});
        } else {
            tau.add_row({num(J), "nan", "nan", "nan"});
        }
    }
    auto cfg = figure_config("s3");
    cfg.push_back({"coupling", "disorder_semicircle"});
    cfg.push_back({"j0", num(disorder_j0)});
    cfg.push_back({"t_max", num(disorder_t_max)});
    cfg.push_back({"dt", num(disorder_dt)});
    files.push_back(dir / "s3_tau.csv");
    write_table(files.back(), tau, cfg);
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names{"fig2", "fig0", "fig1", "fig4", "fig5", "s1", "s3"};
    return names;
}

std::vector<fs::path> run_figure(const std::string& name, const fs::path& dir, const RunContext& ctx) {
    std::vector<fs::path> files;
    fs::create_directories(dir);
    if (name == "fig2") {
        fig2(dir, files);
    } else if (name == "fig0") {
        kitaev_ladder(name, {12.0, 1.75}, dir, ctx, files);
    } else if (name == "fig1") {
        kitaev_ladder(name, {0.4}, dir, ctx, files);
    } else if (name == "fig4") {
        fig4(dir, ctx, files);
    } else if (name == "fig5") {
        fig5(dir, ctx, files);
    } else if (name == "s1") {
        s1(dir, ctx, files);
    } else if (name == "s3") {
        s3(dir, ctx, files);
    } else {
        throw std::invalid_argument("unknown figure '" + name + "'");
    }
    return files;
}

}  // namespace lrq::cli
