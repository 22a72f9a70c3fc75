#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metacloud/cloud_lab.hpp"
#include "metacloud/partitions.hpp"
#include "metacloud/star_sets.hpp"

namespace metacloud {

struct SvgOptions {
    int width = 720;
    std::uint64_t max_points = 50'000;
    std::uint64_t subsample_seed = 1;
    bool color_regions = false;   // tint partition blocks by C/D/O label
    double view_half_width = 0.0; // 0: derive from data
};

// Scatter of a bivariate cloud with star-set boundary polylines and block
// partition lines; axis-equal SVG 1.1. Points beyond max_points are
// subsampled by a seed-shuffled stride.
std::string render_svg(const SampleCloud* cloud,
                       const std::vector<const StarSet*>& overlays,
                       const DiagonalCross* cross, const BlockPartition* partition,
                       const SvgOptions& opts = {});

}  // namespace metacloud
