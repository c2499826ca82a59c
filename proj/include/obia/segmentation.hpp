#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "obia/raster.hpp"

namespace obia {

struct SegParams {
  double scale = 100.0;              // merge admissible iff cost < scale^2
  double shape_weight = 0.2;         // weight of shape vs color heterogeneity
  double compactness_weight = 0.6;   // weight of compactness vs smoothness
  std::vector<double> band_weights;  // empty = all 1

  void validate(int band_count) const;
  std::vector<double> effective_weights(int band_count) const;
};

struct SegmentStats {
  int64_t n = 0;
  std::vector<double> sum;    // per band
  std::vector<double> sumsq;  // per band
  int64_t perimeter = 0;      // pixel edges on the segment boundary
  int min_row = 0, min_col = 0, max_row = 0, max_col = 0;

  double mean(int band) const { return sum[band] / static_cast<double>(n); }
  // Population standard deviation (divide by n).
  double stddev(int band) const;
};

struct MergeRecord {
  // Working segment ids: the lowest member pixel index at merge time (the
  // surviving segment keeps id a). Final dense ids are assigned afterwards.
  int64_t a = 0, b = 0;
  double cost = 0.0;
};

// Partition of a raster into 4-connected segments with dense ids 1..K.
struct Segmentation {
  int width = 0, height = 0;
  std::vector<int32_t> ids;          // one id per pixel
  std::vector<SegmentStats> stats;   // stats[k] describes segment id k+1
  std::vector<MergeRecord> merge_log;

  int count() const { return static_cast<int>(stats.size()); }
  int32_t id_at(int row, int col) const {
    return ids[static_cast<size_t>(row) * width + col];
  }
};

// Bottom-up region merging: every pixel starts as a segment; a segment merges
// with its 4-neighbor only when each is the other's lowest-cost neighbor and
// the heterogeneity increase stays below scale^2. Deterministic: segments are
// visited in ascending lowest-pixel-index order and cost ties go to the
// lowest neighbor id.
Segmentation segment(const MultibandRaster& raster, const SegParams& params);

// Rebuild a Segmentation (stats, no merge log) from an id plane, e.g. one
// loaded back from disk. Ids are densified preserving first-appearance order.
Segmentation segmentation_from_ids(const MultibandRaster& raster,
                                   const std::vector<int32_t>& ids);

struct EspEntry {
  double scale = 0.0;
  double mean_local_variance = 0.0;
  double rate_of_change = 0.0;  // percent vs previous scale; first entry 0
};

// Scale scan: segments the raster at each scale and reports the mean over
// segments of the band-weight-averaged per-segment standard deviation.
std::vector<EspEntry> esp_scan(const MultibandRaster& raster,
                               const std::vector<double>& scales,
                               const SegParams& params);

struct AuditReport {
  bool pass = true;
  std::string first_violation;
};

// Recomputes every per-segment statistic from scratch and verifies the
// partition, 4-connectivity and the merge-log cost bound.
AuditReport audit_segmentation(const MultibandRaster& raster,
                               const Segmentation& seg, const SegParams& params);

void write_segment_ids(const Segmentation& seg, const std::string& path,
                       double pixel_size_m = 1.0);
std::vector<int32_t> read_segment_ids(const std::string& path, int* width,
                                      int* height);
void write_merge_log_csv(const Segmentation& seg, const std::string& path);

}  // namespace obia
