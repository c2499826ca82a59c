#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "obia/classes.hpp"

namespace obia {

// Band roles carried by a raster. Blue/Green/Red/NIR are the four roles the
// classification rules need; Gray is used for single-band exports such as
// segment-id planes and label maps.
enum class BandRole { Blue, Green, Red, NIR, Gray };

const char* band_role_name(BandRole role);
std::optional<BandRole> band_role_from_name(const std::string& name);

// A width x height pixel grid with one float32 plane per band, row-major.
// Values are scaled reflectance / digital numbers in [0, 10000]; computations
// are done in double, storage stays float32 so file round-trips are
// bit-exact.
struct MultibandRaster {
  int width = 0;
  int height = 0;
  double pixel_size_m = 1.0;
  std::optional<float> nodata;
  std::vector<BandRole> roles;
  std::vector<std::vector<float>> bands;

  int64_t pixel_count() const {
    return static_cast<int64_t>(width) * height;
  }
  int band_count() const { return static_cast<int>(bands.size()); }

  float at(int band, int row, int col) const {
    return bands[band][static_cast<size_t>(row) * width + col];
  }
  float& at(int band, int row, int col) {
    return bands[band][static_cast<size_t>(row) * width + col];
  }

  // Index of the band with the given role, -1 if absent.
  int find_band(BandRole role) const;
  bool has_classification_bands() const;  // Blue, Green, Red and NIR present

  // Throws ValidationError when any type invariant is broken.
  void validate() const;

  bool operator==(const MultibandRaster& other) const;
};

MultibandRaster make_raster(int width, int height,
                            const std::vector<BandRole>& roles,
                            double pixel_size_m = 1.0);

// Integer class-id plane plus a legend mapping every nonzero id to a name.
struct LabelRaster {
  int width = 0;
  int height = 0;
  std::vector<int32_t> labels;
  std::map<int, std::string> legend;

  int32_t at(int row, int col) const {
    return labels[static_cast<size_t>(row) * width + col];
  }
  int32_t& at(int row, int col) {
    return labels[static_cast<size_t>(row) * width + col];
  }

  void validate() const;
  bool operator==(const LabelRaster& other) const = default;
};

LabelRaster make_labels(int width, int height);

// Flat-binary raster I/O. `path` may name the ".hdr" file, the ".bin" file
// or the common stem; the pair <stem>.hdr / <stem>.bin is always used.
// Header: UTF-8 text, one "key=value" per line (width, height, bands, dtype,
// interleave, pixel_size_m, byteorder, optional nodata). Payload:
// bands x height x width little-endian float32, band-sequential.
MultibandRaster read_raster(const std::string& path);
void write_raster(const MultibandRaster& raster, const std::string& path);

// Label maps ride the same format as a single Gray band of float32 ids.
// The legend is rebuilt from canonical class names on read.
LabelRaster read_labels(const std::string& path);
void write_labels(const LabelRaster& labels, const std::string& path,
                  double pixel_size_m = 1.0);

}  // namespace obia
