#pragma once

#include "csv.hpp"

#include "lrq/spherical.hpp"
#include "lrq/timeseries.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lrq::cli {

struct RunContext {
    unsigned threads = 0;
    std::uint64_t seed = 0;
};

Config base_config(const std::string& subcommand);

struct SpectrumOptions {
    double alpha = 0.0;
    std::int64_t size = 0;
    int dim = 1;
    std::int64_t n_max = 0;
    bool limit = false;
};
CsvTable spectrum_table(const SpectrumOptions& o, const RunContext& ctx, Config& cfg);

struct KitaevOptions {
    double alpha = 0.0;
    std::int64_t size = 0;
    double h_initial = 20.0;
    double h_final = 0.4;
    double t_max = 100.0;
    double dt = 0.05;
};
TimeSeries kitaev_series(const KitaevOptions& o, const RunContext& ctx, Config& cfg);

struct SphericalOptions {
    std::optional<double> alpha;
    bool flat = false;
    std::optional<double> disorder;
    std::int64_t size = 0;
    double j0 = 1.0;
    std::optional<double> g;
    double mu_initial_factor = 2.0;
    double mu_final_factor = 1.0;
    double t_max = 100.0;
    double dt = 0.05;
    std::size_t samples = 0;
};
struct SphericalResult {
    TimeSeries A;
    std::vector<double> standard_error;  ///< empty unless an ensemble was run
};
SphericalResult spherical_run(const SphericalOptions& o, const RunContext& ctx, Config& cfg);

CsvTable time_table(const TimeSeries& s, const std::string& name);
CsvTable fluctuation_table(const TimeSeries& qa);

struct RecurrenceOptions {
    std::optional<double> alpha;
    double h = 0.4;
    int levels = 0;
    std::string energies_file;
    double epsilon = 0.1;
    double t_max = 0.0;
    std::optional<double> dt;
    std::optional<double> t_min;
};
struct RecurrenceTables {
    CsvTable series{{"t", "Q"}};
    CsvTable tau{{"M", "epsilon", "tau_estimate", "tau_scan"}};
};
RecurrenceTables recurrence_run(const RecurrenceOptions& o, const RunContext& ctx, Config& cfg);

std::filesystem::path tau_path(const std::filesystem::path& out);

/// Writes the CSV bundle of a named figure into `dir`; returns the files written.
std::vector<std::filesystem::path> run_figure(const std::string& name, const std::filesystem::path& dir,
                                              const RunContext& ctx);

const std::vector<std::string>& figure_names();

}  // namespace lrq::cli
