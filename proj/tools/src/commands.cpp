#include "commands.hpp"

#include "lrq/kitaev.hpp"
#include "lrq/recurrence.hpp"
#include "lrq/spectra.hpp"
#include "lrq/cli.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lrq::cli {

Config base_config(const std::string& subcommand) {
    return {{"version", version_string()}, {"subcommand", subcommand}};
}

CsvTable spectrum_table(const SpectrumOptions& o, const RunContext& ctx, Config& cfg) {
    cfg.push_back({"alpha", num(o.alpha)});
    cfg.push_back({"dim", std::to_string(o.dim)});
    cfg.push_back({"size", o.limit ? "inf" : num(o.size)});
    cfg.push_back({"n_max", num(o.n_max)});
    cfg.push_back({"limit", o.limit ? "true" : "false"});
    if (o.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");

    CsvTable table({"alpha", "d", "N", "n", "t_tilde", "delta_tilde"});
    const std::string a = num(o.alpha);
    const std::string d = std::to_string(o.dim);
    if (o.limit) {
        if (o.dim != 1) throw std::invalid_argument("--limit is available for d = 1 only");
        for (std::int64_t n = 0; n <= o.n_max; ++n) {
            table.add_row({a, d, "inf", num(n), num(spectra::hopping_coeff_limit(o.alpha, n)),
                           num(spectra::pairing_coeff_limit(o.alpha, n))});
        }
        return table;
    }
    const spectra::CouplingSpec spec{o.alpha, o.dim, o.size, 1.0};
    spec.validate();
    if (o.dim == 1) {
        if (o.n_max >= o.size / 2) throw std::invalid_argument("--n-max must be below N/2");
        const auto tab = spectra::coefficient_table(spec, ctx.threads);
        for (std::int64_t n = 0; n <= o.n_max; ++n) {
            table.add_row({a, d, num(o.size), num(n), num(tab.hopping[n]), num(tab.pairing[n])});
        }
        return table;
    }
    if (o.n_max > o.size / 2) throw std::invalid_argument("--n-max must be at most L/2");
    for (std::int64_t n = 0; n <= o.n_max; ++n) {
        std::array<std::int64_t, 3> k{n, 0, 0};
        const double c = spectra::lattice_coeff_ddim(spec, std::span(k.data(), static_cast<std::size_t>(o.dim)));
        table.add_row({a, d, num(o.size), num(n), num(c), num(0.0)});
    }
    return table;
}

TimeSeries kitaev_series(const KitaevOptions& o, const RunContext& ctx, Config& cfg) {
    cfg.push_back({"alpha", num(o.alpha)});
    cfg.push_back({"size", num(o.size)});
    cfg.push_back({"h_initial", num(o.h_initial)});
    cfg.push_back({"h_final", num(o.h_final)});
    cfg.push_back({"t_max", num(o.t_max)});
    cfg.push_back({"dt", num(o.dt)});
    kitaev::QuenchProtocol p;
    p.spec = {o.alpha, 1, o.size, 1.0};
    p.h_initial = o.h_initial;
    p.h_final = o.h_final;
    p.t_max = o.t_max;
    p.dt = o.dt;
    return kitaev::run_quench(p, ctx.threads);
}

SphericalResult spherical_run(const SphericalOptions& o, const RunContext& ctx, Config& cfg) {
    const int modes = static_cast<int>(o.alpha.has_value()) + static_cast<int>(o.flat) +
                      static_cast<int>(o.disorder.has_value());
    if (modes != 1) throw std::invalid_argument("choose exactly one of --alpha, --flat, --disorder");

    SphericalResult result;
    std::optional<spherical::DensityOfStates> dos;
    if (o.alpha) {
        cfg.push_back({"coupling", "powerlaw"});
        cfg.push_back({"alpha", num(*o.alpha)});
        cfg.push_back({"size", num(o.size)});
        dos = spherical::dos_powerlaw({*o.alpha, 1, o.size, o.j0}, ctx.threads);
    } else if (o.flat) {
        cfg.push_back({"coupling", "flat"});
        cfg.push_back({"size", o.size == 0 ? "inf" : num(o.size)});
        dos = spherical::dos_flat(o.size, o.j0);
    } else {
        cfg.push_back({"coupling", o.samples > 0 ? "disorder_ensemble" : "disorder_semicircle"});
        cfg.push_back({"J", num(*o.disorder)});
        cfg.push_back({"size", o.samples > 0 ? num(o.size) : "inf"});
        if (o.samples == 0) dos = spherical::dos_semicircle(*o.disorder, o.j0);
    }
    cfg.push_back({"j0", num(o.j0)});
    cfg.push_back({"mu_initial_factor", num(o.mu_initial_factor)});
    cfg.push_back({"mu_final_factor", num(o.mu_final_factor)});
    cfg.push_back({"t_max", num(o.t_max)});
    cfg.push_back({"dt", num(o.dt)});

    if (!dos) {
        if (o.g) throw std::invalid_argument("--g is not supported for disorder ensembles");
        if (o.samples < 2) throw std::invalid_argument("--samples must be at least 2");
        cfg.push_back({"g", "constraint"});
        cfg.push_back({"samples", std::to_string(o.samples)});
        cfg.push_back({"seed", std::to_string(ctx.seed)});
        auto ens = spherical::ensemble_quench(o.size, *o.disorder, o.j0, o.samples, ctx.seed, o.t_max,
                                              o.dt, o.mu_initial_factor, o.mu_final_factor, ctx.threads);
        result.A = std::move(ens.mean);
        result.standard_error = std::move(ens.standard_error);
        return result;
    }
    const auto q = spherical::make_lift_quench(*dos, o.t_max, o.dt, o.mu_initial_factor,
                                               o.mu_final_factor, o.g);
    cfg.push_back({"g", num(q.g)});
    cfg.push_back({"mu_initial", num(q.mu_initial)});
    cfg.push_back({"mu_final", num(q.mu_final)});
    result.A = spherical::quench_observable(q, ctx.threads);
    return result;
}

CsvTable time_table(const TimeSeries& s, const std::string& name) {
    CsvTable table({"t", name});
    for (std::size_t i = 0; i < s.size(); ++i) table.add_row({num(s.time(i)), num(s.values[i])});
    return table;
}

CsvTable fluctuation_table(const TimeSeries& qa) {
    CsvTable table({"T", "Q_A"});
    for (std::size_t i = 0; i < qa.size(); ++i) table.add_row({num(qa.time(i)), num(qa.values[i])});
    return table;
}

namespace {

std::vector<double> read_energies(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read energies file " + path);
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream is(line);
        is.imbue(std::locale::classic());
        double e = 0.0;
        std::string rest;
        if (!(is >> e) || (is >> rest) || !std::isfinite(e)) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": not a decimal energy");
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace

RecurrenceTables recurrence_run(const RecurrenceOptions& o, const RunContext&, Config& cfg) {
    std::vector<double> energies;
    if (o.alpha) {
        if (!o.energies_file.empty()) throw std::invalid_argument("--alpha and --energies-file are exclusive");
        if (o.levels < 2) throw std::invalid_argument("--levels must be at least 2");
        cfg.push_back({"source", "kitaev_bridge"});
        cfg.push_back({"alpha", num(*o.alpha)});
        cfg.push_back({"h", num(o.h)});
        cfg.push_back({"levels", std::to_string(o.levels)});
        energies = recurrence::kitaev_recurrence_bridge({*o.alpha, 1, 4, 1.0}, o.h, o.levels).energies;
    } else {
        if (o.energies_file.empty()) throw std::invalid_argument("give --alpha/--h/--levels or --energies-file");
        energies = read_energies(o.energies_file);
        if (energies.size() < 2) throw std::invalid_argument("energies file needs at least two levels");
        cfg.push_back({"source", "energies_file"});
        cfg.push_back({"energies_file", o.energies_file});
        cfg.push_back({"levels", std::to_string(energies.size())});
    }
    if (!(o.epsilon > 0.0 && o.epsilon < 1.0)) throw std::invalid_argument("--epsilon must lie in (0, 1)");
    const double dt = o.dt.value_or(recurrence::default_scan_step(energies));
    const double t_min = o.t_min.value_or(dt);
    if (!(o.t_max > 0.0)) throw std::invalid_argument("--t-max must be positive");
    cfg.push_back({"epsilon", num(o.epsilon)});
    cfg.push_back({"t_max", num(o.t_max)});
    cfg.push_back({"dt", num(dt)});
    cfg.push_back({"t_min", num(t_min)});

    RecurrenceTables out;
    const auto points = grid_points(o.t_max, dt);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) * dt;
        out.series.add_row({num(t), num(recurrence::uniform_Q(energies, t))});
    }
    const std::string est = energies.size() >= 3
                                ? num(recurrence::recurrence_estimate(energies, o.epsilon).tau)
                                : std::string("nan");
    const auto scan = recurrence::first_recurrence_scan(energies, o.epsilon, t_min, o.t_max, dt);
    out.tau.add_row({std::to_string(energies.size()), num(o.epsilon), est, scan ? num(*scan) : "nan"});
    return out;
}

std::filesystem::path tau_path(const std::filesystem::path& out) {
    auto p = out;
    p.replace_filename(out.stem().string() + "_tau" + out.extension().string());
    if (!out.has_extension()) p += ".csv";
    return p;
}

}  // namespace lrq::cli
