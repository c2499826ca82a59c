#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace obia {

// Canonical land-cover classes. Label id 0 is reserved for Unclassified.
inline constexpr int kUnclassified = 0;

inline const std::vector<std::string>& canonical_classes() {
  static const std::vector<std::string> k = {"Vegetation", "Water", "Road",
                                             "Bare Land", "Building"};
  return k;
}

// Canonical id for a class name: 1..5 for the classes above, 0 for
// "Unclassified", -1 for anything else.
inline int class_id(const std::string& name) {
  if (name == "Unclassified") return kUnclassified;
  const auto& k = canonical_classes();
  for (size_t i = 0; i < k.size(); ++i)
    if (k[i] == name) return static_cast<int>(i) + 1;
  return -1;
}

inline std::string class_name(int id) {
  if (id == kUnclassified) return "Unclassified";
  const auto& k = canonical_classes();
  if (id >= 1 && id <= static_cast<int>(k.size())) return k[id - 1];
  return "class_" + std::to_string(id);
}

using Rgb = std::array<uint8_t, 3>;

// Default map palette; Unclassified renders black.
inline Rgb class_color(int id) {
  switch (id) {
    case 1: return {34, 139, 34};    // Vegetation
    case 2: return {30, 105, 220};   // Water
    case 3: return {128, 128, 128};  // Road
    case 4: return {214, 181, 92};   // Bare Land
    case 5: return {200, 63, 58};    // Building
    default: return {0, 0, 0};
  }
}

}  // namespace obia
