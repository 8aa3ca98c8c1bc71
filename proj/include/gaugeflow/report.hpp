#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace gaugeflow {

/// Shortest double form that round-trips; byte-stable across runs.
std::string format_double(double x);

/// CSV table with a fixed header; all numbers through format_double.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(const std::vector<double>& values);
    void add_row_mixed(const std::vector<std::string>& values);
    std::string to_string() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::string> rows_;
};

/// FNV-1a over the bytes, for config fingerprints in manifests.
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t value);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& value);

}  // namespace gaugeflow
