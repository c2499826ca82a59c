#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "obia/raster.hpp"

namespace obia {

// Per-class spectral signature: mean digital number per band (Blue, Green,
// Red, NIR order) plus one standard deviation shared by the four bands.
struct ClassSignature {
  std::array<double, 4> mean{};
  double stddev = 0.0;
};

struct SceneGeometry {
  int building_min_side = 14;
  int building_max_side = 42;
  double building_rotated_fraction = 0.3;
  double blue_roof_fraction = 0.15;
  int road_width_min = 5;
  int road_width_max = 8;
  int water_blob_count = 6;
  int bare_blob_count = 9;
  double vegetation_patch_scale = 24.0;  // blob radius when vegetation is painted
  int vehicle_count = 14;
};

// Deterministic synthetic GF-2-like scene description. generate_scene is a
// pure function of this struct; the same spec (seed included) always yields
// bit-identical outputs.
struct SceneSpec {
  int width = 512;
  int height = 512;
  double pixel_size_m = 1.0;
  uint64_t seed = 42;
  double noise_level = 1.0;  // multiplies each signature stddev; 0 = noise-free
  std::map<std::string, double> mixture;          // class name -> target fraction
  std::map<std::string, ClassSignature> signatures;
  ClassSignature blue_roof;  // building sub-type triggering the Mean Blue rule
  ClassSignature vehicle;    // small bright objects on roads
  SceneGeometry geometry;

  void validate() const;  // invariants + rule-set separability contract
};

SceneSpec default_scene_spec();

// Serialization in the toolkit's structured-text format.
SceneSpec parse_scene_spec(const std::string& text);
std::string serialize_scene_spec(const SceneSpec& spec);

std::pair<MultibandRaster, LabelRaster> generate_scene(const SceneSpec& spec);

}  // namespace obia
