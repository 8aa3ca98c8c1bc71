#include "gaugeflow/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gaugeflow {

namespace {

static_assert(sizeof(double) == 8);

// Stored format is little-endian regardless of host order.
void write_doubles(std::ostream& os, const std::vector<double>& v) {
    for (double x : v) {
        std::uint64_t bits;
        std::memcpy(&bits, &x, 8);
        if constexpr (std::endian::native == std::endian::big)
            bits = __builtin_bswap64(bits);
        char raw[8];
        std::memcpy(raw, &bits, 8);
        os.write(raw, 8);
    }
}

void read_doubles(std::istream& is, std::vector<double>& v) {
    for (double& x : v) {
        char raw[8];
        is.read(raw, 8);
        std::uint64_t bits;
        std::memcpy(&bits, raw, 8);
        if constexpr (std::endian::native == std::endian::big)
            bits = __builtin_bswap64(bits);
        std::memcpy(&x, &bits, 8);
    }
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
    std::filesystem::path p = path;
    p += ".json";
    return p;
}

}  // namespace

void save_field(const std::filesystem::path& path, const MultiField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw numeric_error("save_field: cannot open " + path.string());
    for (const auto& ch : f.channel) write_doubles(os, ch.v);
    if (!os) throw numeric_error("save_field: write failed for " + path.string());

    nlohmann::json meta;
    meta["nx"] = f.grid().nx;
    meta["ny"] = f.grid().ny;
    meta["channels"] = f.channels();
    std::ofstream ms(sidecar_path(path));
    ms << meta.dump() << "\n";
}

void save_field(const std::filesystem::path& path, const ScalarField& f) {
    MultiField m;
    m.channel.push_back(f);
    save_field(path, m);
}

MultiField load_field(const std::filesystem::path& path) {
    std::ifstream ms(sidecar_path(path));
    if (!ms) throw numeric_error("load_field: missing sidecar for " + path.string());
    nlohmann::json meta = nlohmann::json::parse(ms);
    const Grid grid(meta.at("nx").get<int>(), meta.at("ny").get<int>());
    const int channels = meta.at("channels").get<int>();

    std::ifstream is(path, std::ios::binary);
    if (!is) throw numeric_error("load_field: cannot open " + path.string());
    MultiField out(grid, channels);
    for (auto& ch : out.channel) read_doubles(is, ch.v);
    if (!is) throw numeric_error("load_field: truncated file " + path.string());
    return out;
}

ScalarField load_scalar_field(const std::filesystem::path& path) {
    MultiField m = load_field(path);
    if (m.channels() != 1)
        throw numeric_error("load_scalar_field: expected 1 channel in " + path.string());
    return m.channel[0];
}

void save_field_csv(const std::filesystem::path& path, const MultiField& f) {
    std::ofstream os(path);
    if (!os) throw numeric_error("save_field_csv: cannot open " + path.string());
    os << "ix,iy";
    for (int c = 0; c < f.channels(); ++c) os << ",c" << c;
    os << "\n";
    const Grid& g = f.grid();
    char buf[40];
    for (int iy = 0; iy < g.ny; ++iy) {
        for (int ix = 0; ix < g.nx; ++ix) {
            os << ix << "," << iy;
            for (int c = 0; c < f.channels(); ++c) {
                std::snprintf(buf, sizeof buf, "%.17g", f.channel[c].v[g.index(ix, iy)]);
                os << "," << buf;
            }
            os << "\n";
        }
    }
}

MultiField load_field_csv(const std::filesystem::path& path, const Grid& grid,
                          int channels) {
    std::ifstream is(path);
    if (!is) throw numeric_error("load_field_csv: cannot open " + path.string());
    MultiField out(grid, channels);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        std::getline(ss, tok, ',');
        const int ix = std::stoi(tok);
        std::getline(ss, tok, ',');
        const int iy = std::stoi(tok);
        for (int c = 0; c < channels; ++c) {
            std::getline(ss, tok, ',');
            out.channel[c].v[grid.index_wrap(ix, iy)] = std::stod(tok);
        }
    }
    return out;
}

}  // namespace gaugeflow
