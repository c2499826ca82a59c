#include "obia/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "obia/common.hpp"

namespace obia {

const char* band_role_name(BandRole role) {
  switch (role) {
    case BandRole::Blue: return "Blue";
    case BandRole::Green: return "Green";
    case BandRole::Red: return "Red";
    case BandRole::NIR: return "NIR";
    case BandRole::Gray: return "Gray";
  }
  return "?";
}

std::optional<BandRole> band_role_from_name(const std::string& name) {
  if (name == "Blue") return BandRole::Blue;
  if (name == "Green") return BandRole::Green;
  if (name == "Red") return BandRole::Red;
  if (name == "NIR") return BandRole::NIR;
  if (name == "Gray") return BandRole::Gray;
  return std::nullopt;
}

int MultibandRaster::find_band(BandRole role) const {
  for (size_t i = 0; i < roles.size(); ++i)
    if (roles[i] == role) return static_cast<int>(i);
  return -1;
}

bool MultibandRaster::has_classification_bands() const {
  return find_band(BandRole::Blue) >= 0 && find_band(BandRole::Green) >= 0 &&
         find_band(BandRole::Red) >= 0 && find_band(BandRole::NIR) >= 0;
}

void MultibandRaster::validate() const {
  if (width <= 0 || height <= 0)
    throw ValidationError("raster dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  if (pixel_size_m <= 0.0)
    throw ValidationError("pixel_size_m must be positive");
  if (bands.empty()) throw ValidationError("raster must carry at least one band");
  if (roles.size() != bands.size())
    throw ValidationError("band role list does not match band planes");
  std::set<BandRole> seen;
  for (BandRole r : roles) {
    if (r != BandRole::Gray && !seen.insert(r).second)
      throw ValidationError(std::string("duplicate band role ") +
                            band_role_name(r));
  }
  const size_t expect = static_cast<size_t>(width) * height;
  for (size_t b = 0; b < bands.size(); ++b) {
    if (bands[b].size() != expect)
      throw ValidationError("band " + std::to_string(b) + " has " +
                            std::to_string(bands[b].size()) + " values, expected " +
                            std::to_string(expect));
    for (float v : bands[b]) {
      if (!std::isfinite(v) || v < 0.0f)
        throw ValidationError("band " + std::to_string(b) +
                              " holds a negative or non-finite value");
    }
  }
}

bool MultibandRaster::operator==(const MultibandRaster& other) const {
  if (width != other.width || height != other.height ||
      pixel_size_m != other.pixel_size_m || roles != other.roles)
    return false;
  if (nodata.has_value() != other.nodata.has_value()) return false;
  if (nodata && std::memcmp(&*nodata, &*other.nodata, sizeof(float)) != 0)
    return false;
  return bands == other.bands;
}

MultibandRaster make_raster(int width, int height,
                            const std::vector<BandRole>& roles,
                            double pixel_size_m) {
  MultibandRaster r;
  r.width = width;
  r.height = height;
  r.pixel_size_m = pixel_size_m;
  r.roles = roles;
  if (width <= 0 || height <= 0)
    throw ValidationError("raster dimensions must be positive");
  r.bands.assign(roles.size(),
                 std::vector<float>(static_cast<size_t>(width) * height, 0.0f));
  return r;
}

void LabelRaster::validate() const {
  if (width <= 0 || height <= 0)
    throw ValidationError("label raster dimensions must be positive");
  if (labels.size() != static_cast<size_t>(width) * height)
    throw ValidationError("label plane size does not match dimensions");
  for (int32_t v : labels) {
    if (v < 0) throw ValidationError("label ids must be non-negative");
    if (v != 0 && legend.find(v) == legend.end())
      throw ValidationError("label id " + std::to_string(v) +
                            " missing from legend");
  }
}

LabelRaster make_labels(int width, int height) {
  LabelRaster l;
  l.width = width;
  l.height = height;
  l.labels.assign(static_cast<size_t>(width) * height, 0);
  return l;
}

namespace {

std::string strip_suffix(const std::string& path) {
  if (path.size() > 4) {
    const std::string tail = path.substr(path.size() - 4);
    if (tail == ".hdr" || tail == ".bin") return path.substr(0, path.size() - 4);
  }
  return path;
}

struct HeaderLine {
  std::string key, value;
  int line_no;
};

std::vector<HeaderLine> read_header_lines(const std::string& hdr_path) {
  std::ifstream in(hdr_path);
  if (!in) throw IoError("cannot open header file " + hdr_path);
  std::vector<HeaderLine> lines;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(hdr_path + ":" + std::to_string(no) +
                       ": malformed header line (expected key=value): " + line);
    lines.push_back({line.substr(0, eq), line.substr(eq + 1), no});
  }
  return lines;
}

long long parse_int_field(const HeaderLine& l, const std::string& hdr_path) {
  char* end = nullptr;
  const long long v = std::strtoll(l.value.c_str(), &end, 10);
  if (end == l.value.c_str() || *end != '\0')
    throw ParseError(hdr_path + ":" + std::to_string(l.line_no) + ": field '" +
                     l.key + "' is not an integer: " + l.value);
  return v;
}

double parse_real_field(const HeaderLine& l, const std::string& hdr_path) {
  char* end = nullptr;
  const double v = std::strtod(l.value.c_str(), &end);
  if (end == l.value.c_str() || *end != '\0')
    throw ParseError(hdr_path + ":" + std::to_string(l.line_no) + ": field '" +
                     l.key + "' is not a number: " + l.value);
  return v;
}

}  // namespace

MultibandRaster read_raster(const std::string& path) {
  const std::string stem = strip_suffix(path);
  const std::string hdr_path = stem + ".hdr";
  const std::string bin_path = stem + ".bin";

  MultibandRaster r;
  bool have_width = false, have_height = false, have_bands = false;
  for (const HeaderLine& l : read_header_lines(hdr_path)) {
    if (l.key == "width") {
      const long long w = parse_int_field(l, hdr_path);
      if (w <= 0)
        throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                         ": field 'width' must be positive");
      r.width = static_cast<int>(w);
      have_width = true;
    } else if (l.key == "height") {
      const long long h = parse_int_field(l, hdr_path);
      if (h <= 0)
        throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                         ": field 'height' must be positive");
      r.height = static_cast<int>(h);
      have_height = true;
    } else if (l.key == "bands") {
      std::stringstream ss(l.value);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto role = band_role_from_name(tok);
        if (!role)
          throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                           ": field 'bands': unknown band role '" + tok + "'");
        r.roles.push_back(*role);
      }
      have_bands = true;
    } else if (l.key == "dtype") {
      if (l.value != "float32")
        throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                         ": field 'dtype': unsupported dtype '" + l.value + "'");
    } else if (l.key == "interleave") {
      if (l.value != "BSQ")
        throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                         ": field 'interleave': unsupported interleave '" +
                         l.value + "'");
    } else if (l.key == "pixel_size_m") {
      r.pixel_size_m = parse_real_field(l, hdr_path);
      if (r.pixel_size_m <= 0.0)
        throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                         ": field 'pixel_size_m' must be positive");
    } else if (l.key == "byteorder") {
      if (l.value != "LE")
        throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                         ": field 'byteorder': unsupported byte order '" +
                         l.value + "'");
    } else if (l.key == "nodata") {
      r.nodata = static_cast<float>(parse_real_field(l, hdr_path));
    } else {
      throw ParseError(hdr_path + ":" + std::to_string(l.line_no) +
                       ": unknown header field '" + l.key + "'");
    }
  }
  if (!have_width || !have_height || !have_bands)
    throw ParseError(hdr_path + ": missing required header field (width, height, bands)");
  if (r.roles.empty())
    throw ParseError(hdr_path + ": field 'bands' lists no bands");

  std::ifstream bin(bin_path, std::ios::binary);
  if (!bin) throw IoError("cannot open payload file " + bin_path);
  bin.seekg(0, std::ios::end);
  const int64_t file_size = bin.tellg();
  bin.seekg(0, std::ios::beg);

  const int64_t plane = static_cast<int64_t>(r.width) * r.height;
  const int64_t expect = plane * static_cast<int64_t>(r.roles.size()) * 4;
  if (file_size != expect)
    throw ParseError(bin_path + ": payload holds " + std::to_string(file_size) +
                     " bytes but header declares " + std::to_string(expect) +
                     " (" + std::to_string(r.roles.size()) + " band(s) of " +
                     std::to_string(r.width) + "x" + std::to_string(r.height) +
                     " float32)");

  r.bands.assign(r.roles.size(), std::vector<float>(plane));
  for (auto& b : r.bands) {
    bin.read(reinterpret_cast<char*>(b.data()), plane * 4);
    if (!bin) throw IoError(bin_path + ": short read");
  }
  return r;
}

void write_raster(const MultibandRaster& raster, const std::string& path) {
  raster.validate();
  const std::string stem = strip_suffix(path);
  const std::string hdr_path = stem + ".hdr";
  const std::string bin_path = stem + ".bin";

  std::ofstream hdr(hdr_path);
  if (!hdr) throw IoError("cannot write header file " + hdr_path);
  hdr << "width=" << raster.width << "\n";
  hdr << "height=" << raster.height << "\n";
  hdr << "bands=";
  for (size_t i = 0; i < raster.roles.size(); ++i)
    hdr << (i ? "," : "") << band_role_name(raster.roles[i]);
  hdr << "\n";
  hdr << "dtype=float32\n";
  hdr << "interleave=BSQ\n";
  hdr << "pixel_size_m=" << format_double(raster.pixel_size_m) << "\n";
  hdr << "byteorder=LE\n";
  if (raster.nodata)
    hdr << "nodata=" << format_double(*raster.nodata) << "\n";
  hdr.close();
  if (!hdr) throw IoError("failed writing header file " + hdr_path);

  std::ofstream bin(bin_path, std::ios::binary);
  if (!bin) throw IoError("cannot write payload file " + bin_path);
  for (const auto& b : raster.bands)
    bin.write(reinterpret_cast<const char*>(b.data()),
              static_cast<std::streamsize>(b.size() * 4));
  bin.close();
  if (!bin) throw IoError("failed writing payload file " + bin_path);
}

LabelRaster read_labels(const std::string& path) {
  const MultibandRaster r = read_raster(path);
  if (r.band_count() != 1)
    throw ParseError(path + ": label raster must hold exactly one band");
  LabelRaster l = make_labels(r.width, r.height);
  for (size_t i = 0; i < r.bands[0].size(); ++i) {
    const float v = r.bands[0][i];
    const int32_t id = static_cast<int32_t>(std::lround(v));
    if (id < 0 || std::abs(v - id) > 1e-3f)
      throw ParseError(path + ": plane value " + std::to_string(v) +
                       " is not a non-negative integer label");
    l.labels[i] = id;
    if (id != 0 && !l.legend.count(id)) l.legend[id] = class_name(id);
  }
  l.validate();
  return l;
}

void write_labels(const LabelRaster& labels, const std::string& path,
                  double pixel_size_m) {
  labels.validate();
  MultibandRaster r = make_raster(labels.width, labels.height,
                                  {BandRole::Gray}, pixel_size_m);
  for (size_t i = 0; i < labels.labels.size(); ++i)
    r.bands[0][i] = static_cast<float>(labels.labels[i]);
  write_raster(r, path);
}

}  // namespace obia
