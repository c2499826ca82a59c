#include "obia/png.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include "obia/common.hpp"

namespace obia {

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void put_chunk(std::vector<uint8_t>& out, const char type[4],
               const std::vector<uint8_t>& payload) {
  put_u32(out, static_cast<uint32_t>(payload.size()));
  const size_t start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), payload.begin(), payload.end());
  const uint32_t crc = static_cast<uint32_t>(
      crc32(0L, out.data() + start, static_cast<uInt>(out.size() - start)));
  put_u32(out, crc);
}

}  // namespace

std::vector<uint8_t> encode_png_rgb(int width, int height,
                                    const std::vector<uint8_t>& rgb) {
  if (width <= 0 || height <= 0)
    throw ValidationError("png dimensions must be positive");
  if (rgb.size() != static_cast<size_t>(width) * height * 3)
    throw ValidationError("rgb buffer size does not match dimensions");

  // Raw stream: one filter byte (0 = none) per scanline.
  const size_t stride = static_cast<size_t>(width) * 3;
  std::vector<uint8_t> raw;
  raw.reserve((stride + 1) * height);
  for (int y = 0; y < height; ++y) {
    raw.push_back(0);
    raw.insert(raw.end(), rgb.begin() + y * stride, rgb.begin() + (y + 1) * stride);
  }

  uLongf comp_size = compressBound(static_cast<uLong>(raw.size()));
  std::vector<uint8_t> comp(comp_size);
  if (compress2(comp.data(), &comp_size, raw.data(),
                static_cast<uLong>(raw.size()), 6) != Z_OK)
    throw IoError("zlib compression failed");
  comp.resize(comp_size);

  std::vector<uint8_t> out = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  std::vector<uint8_t> ihdr;
  put_u32(ihdr, static_cast<uint32_t>(width));
  put_u32(ihdr, static_cast<uint32_t>(height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // color type: truecolor RGB
  ihdr.push_back(0);  // compression
  ihdr.push_back(0);  // filter method
  ihdr.push_back(0);  // no interlace
  put_chunk(out, "IHDR", ihdr);
  put_chunk(out, "IDAT", comp);
  put_chunk(out, "IEND", {});
  return out;
}

std::vector<uint8_t> render_class_map(const LabelRaster& labels,
                                      const std::map<int, Rgb>& palette) {
  labels.validate();
  std::vector<uint8_t> rgb(labels.labels.size() * 3);
  for (size_t i = 0; i < labels.labels.size(); ++i) {
    const int id = labels.labels[i];
    Rgb color{0, 0, 0};
    auto it = palette.find(id);
    if (it != palette.end()) {
      color = it->second;
    } else if (id != kUnclassified) {
      throw ValidationError("no palette entry for label id " +
                            std::to_string(id));
    }
    rgb[i * 3 + 0] = color[0];
    rgb[i * 3 + 1] = color[1];
    rgb[i * 3 + 2] = color[2];
  }
  return encode_png_rgb(labels.width, labels.height, rgb);
}

std::map<int, Rgb> default_palette(const LabelRaster& labels) {
  std::map<int, Rgb> p;
  p[kUnclassified] = class_color(kUnclassified);
  for (const auto& [id, name] : labels.legend) p[id] = class_color(id);
  return p;
}

void write_png(const std::string& path, const std::vector<uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace obia
