#include "obia/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "obia/common.hpp"
#include "obia/features.hpp"
#include "obia/rng.hpp"
#include "obia/stext.hpp"

namespace obia {

namespace {

constexpr int kVeg = 1, kWater = 2, kRoad = 3, kBare = 4, kBuilding = 5;

// Painted sub-types that keep their own spectra but inherit the truth label
// of their class (blue roofs are Building, vehicles sit on Road).
constexpr uint8_t kSubNone = 0, kSubBlueRoof = 1, kSubVehicle = 2;

double sig_brightness(const ClassSignature& s) {
  return (s.mean[0] + s.mean[1] + s.mean[2] + s.mean[3]) / 4.0;
}

bool water_rule(const ClassSignature& s) {
  return ndwi(s.mean[1], s.mean[3]) >= -0.085 && s.mean[3] < 1100.0;
}

}  // namespace

SceneSpec default_scene_spec() {
  SceneSpec s;
  s.mixture = {{"Vegetation", 0.36},
               {"Building", 0.30},
               {"Water", 0.12},
               {"Bare Land", 0.12},
               {"Road", 0.10}};
  s.signatures["Vegetation"] = {{500, 900, 600, 3000}, 220};
  s.signatures["Water"] = {{800, 700, 500, 400}, 130};
  s.signatures["Road"] = {{1300, 1300, 1300, 1300}, 240};
  s.signatures["Bare Land"] = {{1000, 1200, 1600, 1900}, 240};
  s.signatures["Building"] = {{1600, 1500, 1400, 1200}, 240};
  s.blue_roof = {{1800, 1400, 900, 1500}, 240};
  s.vehicle = {{2100, 2100, 2100, 2100}, 160};
  return s;
}

void SceneSpec::validate() const {
  if (width <= 0 || height <= 0)
    throw ValidationError("scene dimensions must be positive");
  if (pixel_size_m <= 0) throw ValidationError("pixel_size_m must be positive");
  if (noise_level < 0) throw ValidationError("noise_level must be non-negative");

  double sum = 0.0;
  for (const std::string& cls : canonical_classes()) {
    auto it = mixture.find(cls);
    if (it == mixture.end())
      throw ValidationError("mixture missing class '" + cls + "'");
    if (it->second < 0)
      throw ValidationError("mixture fraction for '" + cls + "' is negative");
    sum += it->second;
    if (!signatures.count(cls))
      throw ValidationError("signature missing for class '" + cls + "'");
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ValidationError("mixture fractions must sum to 1, got " +
                          format_double(sum));
  for (const auto& [cls, sig] : signatures) {
    if (sig.stddev < 0)
      throw ValidationError("signature stddev for '" + cls + "' is negative");
    for (double m : sig.mean)
      if (!(m >= 0) || !std::isfinite(m))
        throw ValidationError("signature mean for '" + cls +
                              "' must be finite and non-negative");
  }

  const SceneGeometry& g = geometry;
  const int min_dim = std::min(width, height);
  if (g.road_width_min < 2 || g.road_width_max < g.road_width_min)
    throw ValidationError("infeasible geometry: bad road width range");
  if (mixture.at("Road") > 0 && g.road_width_max * 4.8 >= min_dim)
    throw ValidationError(
        "infeasible geometry: road width exceeds scene dimension (strips "
        "would not satisfy length/width > 4.8)");
  if (g.building_min_side < 2 || g.building_max_side < g.building_min_side ||
      g.building_max_side > min_dim)
    throw ValidationError("infeasible geometry: bad building side range");
  if (g.water_blob_count < 1 || g.bare_blob_count < 1)
    throw ValidationError("infeasible geometry: blob counts must be positive");
  if (g.blue_roof_fraction < 0 || g.blue_roof_fraction > 1 ||
      g.building_rotated_fraction < 0 || g.building_rotated_fraction > 1)
    throw ValidationError("geometry fractions must lie in [0,1]");
  if (g.vehicle_count < 0)
    throw ValidationError("vehicle_count must be non-negative");

  // Separability contract: each class signature must land on its own side of
  // the built-in rule thresholds, otherwise the ground truth cannot be
  // recovered even from a noise-free scene.
  const ClassSignature& veg = signatures.at("Vegetation");
  const ClassSignature& wat = signatures.at("Water");
  const ClassSignature& road = signatures.at("Road");
  const ClassSignature& bare = signatures.at("Bare Land");
  const ClassSignature& bld = signatures.at("Building");

  if (!(ndvi(veg.mean[3], veg.mean[2]) > 0.22))
    throw ValidationError("separability: vegetation NDVI must exceed 0.22");
  if (veg.mean[0] > 1250)
    throw ValidationError("separability: vegetation Mean Blue must be <= 1250");
  if (!water_rule(wat))
    throw ValidationError(
        "separability: water needs NDWI >= -0.085 and Mean NIR < 1100");
  if (!(ndvi(wat.mean[3], wat.mean[2]) < 0.16))
    throw ValidationError("separability: water NDVI must stay below 0.16");
  if (!(ndvi(road.mean[3], road.mean[2]) < 0.16))
    throw ValidationError("separability: road NDVI must stay below 0.16");
  if (water_rule(road))
    throw ValidationError("separability: road signature matches the water rule");
  if (road.mean[0] > 1450)
    throw ValidationError("separability: road Mean Blue must be <= 1450");
  if (road.mean[3] > 1930 && road.mean[0] < 1200)
    throw ValidationError("separability: road signature matches building3 removal");
  if (!(ndvi(bare.mean[3], bare.mean[2]) < 0.16))
    throw ValidationError("separability: bare-land NDVI must stay below 0.16");
  if (water_rule(bare))
    throw ValidationError("separability: bare-land signature matches the water rule");
  if (!(sig_brightness(bare) >= 1150 && bare.mean[2] >= 1340 &&
        bare.mean[3] >= 1590))
    throw ValidationError(
        "separability: bare-land needs Brightness >= 1150, Mean Red >= 1340 "
        "and Mean NIR >= 1590 (membership >= 0.5)");
  if (!(ndvi(bld.mean[3], bld.mean[2]) < 0.16))
    throw ValidationError("separability: building NDVI must stay below 0.16");
  if (water_rule(bld))
    throw ValidationError("separability: building signature matches the water rule");
  if (sig_brightness(bld) >= 1150 && bld.mean[2] >= 1340 && bld.mean[3] >= 1590)
    throw ValidationError(
        "separability: building signature falls inside the bare-land ranges");
  if (g.blue_roof_fraction > 0) {
    if (!(ndvi(blue_roof.mean[3], blue_roof.mean[2]) >= 0.22 &&
          blue_roof.mean[0] > 1250))
      throw ValidationError(
          "separability: blue-roof signature must trigger the vegetation rule "
          "and the Mean Blue > 1250 removal");
    if (water_rule(blue_roof))
      throw ValidationError("separability: blue-roof signature matches the water rule");
  }
}

namespace {

struct Painter {
  int w, h;
  std::vector<int32_t> labels;
  std::vector<uint8_t> subtype;
  std::array<int64_t, 6> counts{};

  Painter(int width, int height, int background)
      : w(width), h(height),
        labels(static_cast<size_t>(width) * height, background),
        subtype(static_cast<size_t>(width) * height, kSubNone) {
    counts[background] = static_cast<int64_t>(width) * height;
  }

  void set(int r, int c, int cls, uint8_t sub = kSubNone) {
    const size_t idx = static_cast<size_t>(r) * w + c;
    --counts[labels[idx]];
    labels[idx] = cls;
    ++counts[cls];
    subtype[idx] = sub;
  }

  int32_t get(int r, int c) const {
    return labels[static_cast<size_t>(r) * w + c];
  }

  double fraction(int cls) const {
    return static_cast<double>(counts[cls]) / (static_cast<double>(w) * h);
  }
};

struct Disc {
  double cy, cx, r;
};

void paint_discs(Painter& p, const std::vector<Disc>& discs, int cls) {
  double min_r = 1e18, min_c = 1e18, max_r = -1e18, max_c = -1e18;
  for (const Disc& d : discs) {
    min_r = std::min(min_r, d.cy - d.r);
    max_r = std::max(max_r, d.cy + d.r);
    min_c = std::min(min_c, d.cx - d.r);
    max_c = std::max(max_c, d.cx + d.r);
  }
  const int r0 = std::max(0, static_cast<int>(std::floor(min_r)));
  const int r1 = std::min(p.h - 1, static_cast<int>(std::ceil(max_r)));
  const int c0 = std::max(0, static_cast<int>(std::floor(min_c)));
  const int c1 = std::min(p.w - 1, static_cast<int>(std::ceil(max_c)));
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c)
      for (const Disc& d : discs) {
        const double dy = r - d.cy, dx = c - d.cx;
        if (dy * dy + dx * dx <= d.r * d.r) {
          p.set(r, c, cls);
          break;
        }
      }
}

// Irregular patch: one main disc plus a few satellites.
std::vector<Disc> make_blob(Rng& rng, double cy, double cx, double r) {
  std::vector<Disc> discs{{cy, cx, r}};
  const int satellites = 3;
  for (int i = 0; i < satellites; ++i) {
    const double ang = rng.uniform(0, 2 * M_PI);
    const double off = rng.uniform(0.3, 0.55) * r;
    discs.push_back({cy + off * std::sin(ang), cx + off * std::cos(ang),
                     r * rng.uniform(0.5, 0.8)});
  }
  return discs;
}

void paint_ellipse(Painter& p, double cy, double cx, double a, double b,
                   double angle, int cls) {
  const double ext = std::max(a, b);
  const int r0 = std::max(0, static_cast<int>(std::floor(cy - ext)));
  const int r1 = std::min(p.h - 1, static_cast<int>(std::ceil(cy + ext)));
  const int c0 = std::max(0, static_cast<int>(std::floor(cx - ext)));
  const int c1 = std::min(p.w - 1, static_cast<int>(std::ceil(cx + ext)));
  const double ca = std::cos(angle), sa = std::sin(angle);
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) {
      const double dy = r - cy, dx = c - cx;
      const double u = dx * ca + dy * sa, v = -dx * sa + dy * ca;
      if ((u * u) / (a * a) + (v * v) / (b * b) <= 1.0) p.set(r, c, cls);
    }
}

void paint_rect(Painter& p, double cy, double cx, double hw, double hh,
                double angle, int cls, uint8_t sub) {
  const double ext = std::hypot(hw, hh);
  const int r0 = std::max(0, static_cast<int>(std::floor(cy - ext)));
  const int r1 = std::min(p.h - 1, static_cast<int>(std::ceil(cy + ext)));
  const int c0 = std::max(0, static_cast<int>(std::floor(cx - ext)));
  const int c1 = std::min(p.w - 1, static_cast<int>(std::ceil(cx + ext)));
  const double ca = std::cos(angle), sa = std::sin(angle);
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) {
      const double dy = r - cy, dx = c - cx;
      const double u = dx * ca + dy * sa, v = -dx * sa + dy * ca;
      if (std::abs(u) <= hw && std::abs(v) <= hh) p.set(r, c, cls, sub);
    }
}

bool region_contains(const Painter& p, int r0, int c0, int r1, int c1, int cls) {
  r0 = std::max(r0, 0);
  c0 = std::max(c0, 0);
  r1 = std::min(r1, p.h - 1);
  c1 = std::min(c1, p.w - 1);
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c)
      if (p.get(r, c) == cls) return true;
  return false;
}

struct RoadPlan {
  bool horizontal = true;
  struct Strip {
    int pos, width;  // rows [pos, pos+width) or cols, spanning the scene
  };
  std::vector<Strip> strips;

  bool intersects(int lo, int hi) const {  // inclusive band in road axis
    for (const Strip& s : strips)
      if (lo <= s.pos + s.width - 1 && hi >= s.pos) return true;
    return false;
  }
};

}  // namespace

std::pair<MultibandRaster, LabelRaster> generate_scene(const SceneSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  const int W = spec.width, H = spec.height;
  const double total = static_cast<double>(W) * H;
  const SceneGeometry& g = spec.geometry;

  const auto target = [&](const std::string& cls) { return spec.mixture.at(cls); };

  // Background = class with the largest mixture share (canonical order breaks
  // ties); everything else is painted on top of it.
  int background = kVeg;
  double best = -1.0;
  for (int id = 1; id <= 5; ++id) {
    const double t = target(class_name(id));
    if (t > best + 1e-12) {
      best = t;
      background = id;
    }
  }

  Painter paint(W, H, background);

  // Roads are planned first so compact-shape classes can stay clear of them;
  // the strips themselves are painted last so they remain unbroken.
  RoadPlan roads;
  roads.horizontal = rng.chance(0.5);
  if (background != kRoad && target("Road") > 0) {
    const int axis_dim = roads.horizontal ? H : W;
    const int64_t goal = static_cast<int64_t>(target("Road") * total);
    const int64_t span = roads.horizontal ? W : H;
    int64_t painted = 0;
    int failures = 0;
    while (painted < goal && failures < 200) {
      const int w = rng.range_int(g.road_width_min, g.road_width_max);
      if (w >= axis_dim) break;
      const int pos = static_cast<int>(rng.below(axis_dim - w));
      if (roads.intersects(pos - 3, pos + w + 2)) {
        ++failures;
        continue;
      }
      roads.strips.push_back({pos, w});
      painted += static_cast<int64_t>(w) * span;
    }
  }
  const auto road_band = [&](int r0, int c0, int r1, int c1) {
    return roads.horizontal ? roads.intersects(r0, r1) : roads.intersects(c0, c1);
  };

  // Vegetation patches (only when vegetation is not the background).
  if (background != kVeg && target("Vegetation") > 0) {
    const double future = target("Water") + target("Bare Land") +
                          target("Building") + target("Road");
    const double goal = std::min(0.97, target("Vegetation") / std::max(0.05, 1.0 - future));
    int failures = 0;
    while (paint.fraction(kVeg) < goal && failures < 4000) {
      const double r = std::max(5.0, g.vegetation_patch_scale * rng.uniform(0.6, 1.4));
      const double cy = rng.uniform(0, H), cx = rng.uniform(0, W);
      paint_discs(paint, make_blob(rng, cy, cx, r), kVeg);
      ++failures;
    }
  }

  // Water blobs.
  if (background != kWater && target("Water") > 0) {
    const double future = target("Building") + target("Road") +
                          (background == kBare ? 0.0 : target("Bare Land"));
    const double goal = std::min(0.97, target("Water") / std::max(0.05, 1.0 - future));
    const double base_r =
        std::sqrt(goal * total / (M_PI * g.water_blob_count));
    int failures = 0;
    while (paint.fraction(kWater) < goal && failures < 4000) {
      const double r = std::max(6.0, base_r * rng.uniform(0.7, 1.3));
      const double cy = rng.uniform(0, H), cx = rng.uniform(0, W);
      paint_discs(paint, make_blob(rng, cy, cx, r), kWater);
      ++failures;
    }
  }

  // Bare land: compact elliptical patches kept clear of roads, the scene
  // border and each other, so the objects stay compact (the bare-land rule
  // gates on asymmetry).
  if (background != kBare && target("Bare Land") > 0) {
    const double goal = std::min(0.97, target("Bare Land"));
    const double base_r =
        std::sqrt(goal * total / (M_PI * g.bare_blob_count));
    int failures = 0;
    while (paint.fraction(kBare) < goal && failures < 4000) {
      const double stretch = rng.uniform(1.0, 1.15);
      const double r = std::max(6.0, base_r * rng.uniform(0.75, 1.25));
      const double a = r * stretch, b = r / stretch;
      const double ext = std::max(a, b) + 2.0;
      if (2 * ext >= H || 2 * ext >= W) {
        ++failures;
        continue;
      }
      const double cy = rng.uniform(ext, H - ext), cx = rng.uniform(ext, W - ext);
      const double angle = rng.uniform(0, M_PI);
      const int r0 = static_cast<int>(cy - ext), r1 = static_cast<int>(cy + ext);
      const int c0 = static_cast<int>(cx - ext), c1 = static_cast<int>(cx + ext);
      if (road_band(r0, c0, r1, c1) || region_contains(paint, r0, c0, r1, c1, kBare)) {
        ++failures;
        continue;
      }
      paint_ellipse(paint, cy, cx, a, b, angle, kBare);
    }
  }

  // Building blocks: axis-aligned and rotated rectangles. Placements that
  // would bite into a bare-land patch are rejected to preserve patch shape.
  if (background != kBuilding && target("Building") > 0) {
    const double goal =
        std::min(0.97, target("Building") / std::max(0.05, 1.0 - target("Road")));
    int failures = 0;
    while (paint.fraction(kBuilding) < goal && failures < 6000) {
      const double side_a = rng.range_int(g.building_min_side, g.building_max_side);
      const double side_b = rng.range_int(g.building_min_side, g.building_max_side);
      const double hw = side_a / 2.0, hh = side_b / 2.0;
      const double angle =
          rng.chance(g.building_rotated_fraction) ? rng.uniform(0, M_PI) : 0.0;
      const double cy = rng.uniform(0, H), cx = rng.uniform(0, W);
      const double ext = std::hypot(hw, hh) + 1.0;
      const int r0 = static_cast<int>(cy - ext), r1 = static_cast<int>(cy + ext);
      const int c0 = static_cast<int>(cx - ext), c1 = static_cast<int>(cx + ext);
      if (region_contains(paint, r0, c0, r1, c1, kBare)) {
        ++failures;
        continue;
      }
      const uint8_t sub =
          rng.chance(g.blue_roof_fraction) ? kSubBlueRoof : kSubNone;
      paint_rect(paint, cy, cx, hw, hh, angle, kBuilding, sub);
    }
  }

  // Roads and the vehicles sitting on them.
  if (background != kRoad) {
    for (const RoadPlan::Strip& s : roads.strips) {
      if (roads.horizontal) {
        for (int r = s.pos; r < s.pos + s.width; ++r)
          for (int c = 0; c < W; ++c) paint.set(r, c, kRoad);
      } else {
        for (int c = s.pos; c < s.pos + s.width; ++c)
          for (int r = 0; r < H; ++r) paint.set(r, c, kRoad);
      }
    }
    if (!roads.strips.empty()) {
      const int span = roads.horizontal ? W : H;
      for (int v = 0; v < g.vehicle_count; ++v) {
        const RoadPlan::Strip& s =
            roads.strips[rng.below(roads.strips.size())];
        if (s.width < 4 || span < 12) continue;
        const int across = s.pos + 1 + static_cast<int>(rng.below(s.width - 3));
        const int along = 2 + static_cast<int>(rng.below(span - 10));
        for (int da = 0; da < 2; ++da)
          for (int dl = 0; dl < 5; ++dl) {
            const int r = roads.horizontal ? across + da : along + dl;
            const int c = roads.horizontal ? along + dl : across + da;
            paint.set(r, c, kRoad, kSubVehicle);
          }
      }
    }
  }

  // Spectral rendering: per-pixel Gaussian noise around the class signature,
  // clamped at zero.
  MultibandRaster raster = make_raster(
      W, H, {BandRole::Blue, BandRole::Green, BandRole::Red, BandRole::NIR},
      spec.pixel_size_m);
  LabelRaster truth = make_labels(W, H);
  for (int id = 1; id <= 5; ++id) truth.legend[id] = class_name(id);

  for (int r = 0; r < H; ++r)
    for (int c = 0; c < W; ++c) {
      const size_t idx = static_cast<size_t>(r) * W + c;
      const int cls = paint.labels[idx];
      const uint8_t sub = paint.subtype[idx];
      const ClassSignature& sig = sub == kSubBlueRoof ? spec.blue_roof
                                  : sub == kSubVehicle ? spec.vehicle
                                  : spec.signatures.at(class_name(cls));
      truth.labels[idx] = cls;
      const double sd = spec.noise_level * sig.stddev;
      for (int b = 0; b < 4; ++b) {
        double v = sig.mean[b];
        if (sd > 0) v += sd * rng.normal();
        raster.bands[b][idx] = static_cast<float>(std::max(0.0, v));
      }
    }

  return {std::move(raster), std::move(truth)};
}

std::string serialize_scene_spec(const SceneSpec& spec) {
  stext::Node root;
  root.name = "scene";
  root.set("width", stext::Value::num(spec.width));
  root.set("height", stext::Value::num(spec.height));
  root.set("pixel_size_m", stext::Value::num(spec.pixel_size_m));
  root.set("seed", stext::Value::text(std::to_string(spec.seed)));
  root.set("noise_level", stext::Value::num(spec.noise_level));
  for (const std::string& cls : canonical_classes()) {
    stext::Node c;
    c.name = "class";
    const ClassSignature& sig = spec.signatures.at(cls);
    c.set("name", stext::Value::text(cls));
    c.set("fraction", stext::Value::num(spec.mixture.at(cls)));
    c.set("mean", stext::Value::num_array(
                      {sig.mean[0], sig.mean[1], sig.mean[2], sig.mean[3]}));
    c.set("stddev", stext::Value::num(sig.stddev));
    root.children.push_back(std::move(c));
  }
  const auto sig_node = [](const char* name, const ClassSignature& sig) {
    stext::Node n;
    n.name = name;
    n.set("mean", stext::Value::num_array(
                      {sig.mean[0], sig.mean[1], sig.mean[2], sig.mean[3]}));
    n.set("stddev", stext::Value::num(sig.stddev));
    return n;
  };
  root.children.push_back(sig_node("blue_roof", spec.blue_roof));
  root.children.push_back(sig_node("vehicle", spec.vehicle));

  stext::Node geo;
  geo.name = "geometry";
  const SceneGeometry& g = spec.geometry;
  geo.set("building_min_side", stext::Value::num(g.building_min_side));
  geo.set("building_max_side", stext::Value::num(g.building_max_side));
  geo.set("building_rotated_fraction", stext::Value::num(g.building_rotated_fraction));
  geo.set("blue_roof_fraction", stext::Value::num(g.blue_roof_fraction));
  geo.set("road_width_min", stext::Value::num(g.road_width_min));
  geo.set("road_width_max", stext::Value::num(g.road_width_max));
  geo.set("water_blob_count", stext::Value::num(g.water_blob_count));
  geo.set("bare_blob_count", stext::Value::num(g.bare_blob_count));
  geo.set("vegetation_patch_scale", stext::Value::num(g.vegetation_patch_scale));
  geo.set("vehicle_count", stext::Value::num(g.vehicle_count));
  root.children.push_back(std::move(geo));
  return stext::write(root);
}

SceneSpec parse_scene_spec(const std::string& text) {
  const stext::Node root = stext::parse(text);
  if (root.name != "scene")
    throw ParseError("expected root block 'scene', got '" + root.name + "'");
  SceneSpec spec = default_scene_spec();
  spec.mixture.clear();
  spec.signatures.clear();
  spec.width = static_cast<int>(root.get_number("width"));
  spec.height = static_cast<int>(root.get_number("height"));
  spec.pixel_size_m = root.get_number_or("pixel_size_m", 1.0);
  spec.noise_level = root.get_number_or("noise_level", 1.0);
  spec.seed = std::strtoull(root.get_string_or("seed", "42").c_str(), nullptr, 10);

  const auto read_sig = [](const stext::Node& n) {
    ClassSignature sig;
    const auto mean = n.get_numbers("mean");
    if (mean.size() != 4)
      throw ParseError("block '" + n.name + "': 'mean' must list 4 band values");
    std::copy(mean.begin(), mean.end(), sig.mean.begin());
    sig.stddev = n.get_number("stddev");
    return sig;
  };

  for (const stext::Node* c : root.find_children("class")) {
    const std::string& name = c->get_string("name");
    spec.mixture[name] = c->get_number("fraction");
    spec.signatures[name] = read_sig(*c);
  }
  if (const stext::Node* n = root.find_child("blue_roof")) spec.blue_roof = read_sig(*n);
  if (const stext::Node* n = root.find_child("vehicle")) spec.vehicle = read_sig(*n);
  if (const stext::Node* n = root.find_child("geometry")) {
    SceneGeometry& g = spec.geometry;
    g.building_min_side = static_cast<int>(n->get_number_or("building_min_side", g.building_min_side));
    g.building_max_side = static_cast<int>(n->get_number_or("building_max_side", g.building_max_side));
    g.building_rotated_fraction = n->get_number_or("building_rotated_fraction", g.building_rotated_fraction);
    g.blue_roof_fraction = n->get_number_or("blue_roof_fraction", g.blue_roof_fraction);
    g.road_width_min = static_cast<int>(n->get_number_or("road_width_min", g.road_width_min));
    g.road_width_max = static_cast<int>(n->get_number_or("road_width_max", g.road_width_max));
    g.water_blob_count = static_cast<int>(n->get_number_or("water_blob_count", g.water_blob_count));
    g.bare_blob_count = static_cast<int>(n->get_number_or("bare_blob_count", g.bare_blob_count));
    g.vegetation_patch_scale = n->get_number_or("vegetation_patch_scale", g.vegetation_patch_scale);
    g.vehicle_count = static_cast<int>(n->get_number_or("vehicle_count", g.vehicle_count));
  }
  spec.validate();
  return spec;
}

}  // namespace obia
