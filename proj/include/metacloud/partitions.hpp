#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metacloud/marginals.hpp"
#include "metacloud/meta_map.hpp"

namespace metacloud {

// One ring of a block partition. Ring n covers the annulus between the cube
// of radius s_{n-1} and the cube of radius s_n (ring 1 is the central cube).
// Division points are stored as logs so that radii like n^{n^{sqrt n}} stay
// representable. log_div holds log s_{nj}, j = 1..m_n with the last entry
// equal to log_radius; log_fine holds extra subdivision points of the
// central cell after biregular refinement (may contain -inf for the zero
// point).
struct Ring {
    double log_radius;
    std::vector<double> log_div;
    std::vector<double> log_fine;
};

struct BlockPartition {
    int d = 2;
    std::string rule;          // how it was built
    bool biregular = false;
    std::vector<Ring> rings;   // rings[k] is ring index n = k+1

    int max_ring() const { return static_cast<int>(rings.size()); }
    double log_radius(int n) const { return rings.at(n - 1).log_radius; }
    // log s_{n1}: the innermost division point of ring n.
    double log_first_div(int n) const { return rings.at(n - 1).log_div.front(); }
};

// A block: ring index plus one signed cell index per coordinate. Cell
// indices refer to the ring's full one-dimensional point set (division
// points, the inner radius, fine points); 0 is the cell containing zero,
// +k / -k count outward. The central block is {ring 1, all zeros}.
struct BlockId {
    int ring = 0;
    std::array<int, 4> cell{};  // up to d = 4
    bool operator==(const BlockId&) const = default;
};

// Quantile-based partition per the tail-matching rule
//   1 - F0(s_n) = p_n = exp(-sqrt n),  1 - F0(s_{nj}) = n p_n / j,  m_n = n.
BlockPartition build_quantile_partition(const Marginal& m, int max_ring);

// Equal-spacing toy partition with s_n = n and n equal cells per ring.
BlockPartition build_linear_partition(int max_ring);

// Partition with cube radii given directly in log-space; each ring keeps a
// single division point at the radius (m_n = 1).
BlockPartition partition_from_log_radii(int d, const std::vector<double>& log_radii,
                                        const std::string& rule);

// Per-ring regularity diagnostics over a ring window.
struct RegularityRow {
    int ring;
    double radius_ratio;     // s_{n+1} / s_n
    double max_increment;    // Delta_n / s_n
};

struct RegularityReport {
    std::vector<RegularityRow> rows;
    bool radius_trending = false;     // ratios decrease toward 1 past midpoint
    bool increment_trending = false;  // Delta/s decreases past midpoint
    bool regular_trending() const { return radius_trending && increment_trending; }
};

RegularityReport regularity_report(const BlockPartition& p, int ring_lo, int ring_hi);

// Subdivide the central cell of each ring n >= 2 into 2n congruent cells
// (division points k s_{n1}/n); bivariate only.
BlockPartition biregular_refine(const BlockPartition& p);

// Map all radii and division points through K0 in log space.
BlockPartition image_under_k(const BlockPartition& p, const MetaMap& map);

// Region labels of the bivariate classification.
enum class RegionLabel { C_E, C_N, C_W, C_S, D_NE, D_SE, D_SW, D_NW, O };

std::string region_label_name(RegionLabel r);

// Classification parameters: the C region starts at ring n0; D blocks sit
// beyond division index j_n = floor(sqrt n).
struct RegionOptions {
    int n0 = 10;
};

RegionLabel classify_block(const BlockPartition& p, const BlockId& id,
                           const RegionOptions& opts = {});

// Locate the block containing a point whose coordinates are given directly
// (not in log space); points on division planes fall to the lower index.
BlockId locate(const BlockPartition& p, std::span<const double> x);

// Same, but the point is scaled by exp(log_scale); allows looking up
// astronomically large z-space points given as logs of |coordinates| plus
// signs.
BlockId locate_log(const BlockPartition& p, std::span<const double> log_abs,
                   std::span<const int> signs);

// The box of a block: per-coordinate [lo, hi] in log-space absolute value
// with signs; used by the region classifier and tests.
struct BlockBox {
    std::vector<double> log_lo, log_hi;  // absolute values, -inf for zero
    std::vector<int> sign;               // sign of the cell (0 for the center cell)
};
BlockBox block_box(const BlockPartition& p, const BlockId& id);

// log t_n for the doubly exponential sequence t_n = n^{n^{n^{1-eps}}}; the
// s-side is obtained by mapping through K0^{-1} in log space when a map is
// given.
struct Prs4Sequence {
    std::vector<double> log_t;  // index n-1
    std::vector<double> s;      // empty unless a map was supplied
};
Prs4Sequence prs4_sequence(double eps, int max_n, const MetaMap* map = nullptr);

// log s_n for the sequence s_n = n^{sqrt n} log n (with t_n = exp(s_n)).
std::vector<double> fig1_log_radii(int max_n);

// Plain-text dump, one line per ring: ring index, log s_n, division points.
std::string dump_partition(const BlockPartition& p);

}  // namespace metacloud
