#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "obia/raster.hpp"

namespace obia {

// Minimal 8-bit RGB PNG encoder (zlib deflate, filter 0 on every scanline).
std::vector<uint8_t> encode_png_rgb(int width, int height,
                                    const std::vector<uint8_t>& rgb);

// Render a label map to PNG bytes. Every nonzero label present in the map
// must have a palette entry; label 0 defaults to black unless overridden.
std::vector<uint8_t> render_class_map(const LabelRaster& labels,
                                      const std::map<int, Rgb>& palette);

// Convenience: canonical palette for all ids present in the legend.
std::map<int, Rgb> default_palette(const LabelRaster& labels);

void write_png(const std::string& path, const std::vector<uint8_t>& bytes);

}  // namespace obia
