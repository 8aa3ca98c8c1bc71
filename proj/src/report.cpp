#include "gaugeflow/report.hpp"

#include <charconv>
#include <fstream>

#include "gaugeflow/errors.hpp"

namespace gaugeflow {

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(const std::vector<double>& values) {
    if (values.size() != header_.size())
        throw config_error("CsvTable: row width mismatch");
    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) row += ',';
        row += format_double(values[i]);
    }
    rows_.push_back(std::move(row));
}

void CsvTable::add_row_mixed(const std::vector<std::string>& values) {
    if (values.size() != header_.size())
        throw config_error("CsvTable: row width mismatch");
    std::string row;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) row += ',';
        row += values[i];
    }
    rows_.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const std::string& row : rows_) {
        out += row;
        out += '\n';
    }
    return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
    write_text(path, to_string());
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw numeric_error("write_text: cannot open " + path.string());
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os) throw numeric_error("write_text: write failed for " + path.string());
}

void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
    write_text(path, value.dump(2) + "\n");
}

}  // namespace gaugeflow
