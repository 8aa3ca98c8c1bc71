#pragma once

#include <filesystem>
#include <string>

#include "gaugeflow/fields.hpp"

namespace gaugeflow {

/// Binary field format: little-endian float64, row-major, channels
/// concatenated, with a JSON sidecar "<path>.json" holding
/// {"nx":..,"ny":..,"channels":..}.
void save_field(const std::filesystem::path& path, const MultiField& f);
void save_field(const std::filesystem::path& path, const ScalarField& f);
MultiField load_field(const std::filesystem::path& path);
ScalarField load_scalar_field(const std::filesystem::path& path);

/// CSV debugging format, one row per cell: ix,iy,c0[,c1,...].
void save_field_csv(const std::filesystem::path& path, const MultiField& f);
MultiField load_field_csv(const std::filesystem::path& path, const Grid& grid,
                          int channels);

}  // namespace gaugeflow
