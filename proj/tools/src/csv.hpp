#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace lrq::cli {

/// Ordered key/value pairs echoed as "# key=value" header lines.
using Config = std::vector<std::pair<std::string, std::string>>;

std::string num(double x);        // shortest round-trip form
std::string num(std::int64_t x);
std::string label(double x);      // same form, used in file names

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const noexcept { return rows_.size(); }
    std::string render(const Config& config) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

/// Writes through a temporary sibling file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

void write_table(const std::filesystem::path& path, const CsvTable& table, const Config& config);

}  // namespace lrq::cli
