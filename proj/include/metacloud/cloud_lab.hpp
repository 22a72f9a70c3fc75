#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metacloud/meta_map.hpp"
#include "metacloud/numeric.hpp"
#include "metacloud/sampler.hpp"
#include "metacloud/star_sets.hpp"

namespace metacloud {

// A scaled sample cloud: n iid points divided by the scaling constant.
struct SampleCloud {
    std::vector<double> pts;  // row-major n x d
    std::uint64_t n = 0;
    int d = 0;
    double scale = 1.0;
    std::uint64_t seed = 0;
    std::string model_id;
    std::string space;  // "z" or "x"

    std::span<const double> point(std::uint64_t i) const {
        return {pts.data() + i * d, static_cast<std::size_t>(d)};
    }
};

// Draw n points from the sampler, divide by scale. Work is split into fixed
// chunks with independent RNG streams, so the result is identical for any
// thread count.
SampleCloud generate_cloud(const Sampler& model, std::uint64_t n, double scale,
                           std::uint64_t seed, int threads = 1,
                           const std::string& space = "z");

// Streamed exceedance extraction: sample n_total points and keep those with
// coordinate `axis` above the threshold (unscaled). Deterministic in the
// same chunked sense.
SampleCloud generate_exceedances(const Sampler& model, std::uint64_t n_total, int axis,
                                 double threshold, std::uint64_t seed, int threads = 1);

// Convergence target: a positive-volume star set (gauge metric), the
// diagonal cross (distance metric), or their union.
struct OntoTarget {
    const StarSet* set = nullptr;
    const DiagonalCross* cross = nullptr;

    bool inside(std::span<const double> p, double eps) const;
    std::string name() const;
};

struct CoverageCell {
    std::vector<double> point;
    std::vector<std::uint64_t> counts;  // one per epsilon
};

struct OntoSetReport {
    std::vector<double> eps;
    std::vector<double> outside_fraction;          // per epsilon
    std::vector<std::uint64_t> min_coverage;       // per epsilon, over grid points
    std::vector<CoverageCell> coverage;            // per grid point
};

// Coverage points: boundary_point over `directions` equispaced directions
// (half-step phase offset so symmetry axes are not sampled exactly) plus
// interior points at half gauge; for the cross, the points r*delta,
// r in {0.5, 1}. d = 2 for direction grids.
OntoSetReport onto_set_report(const SampleCloud& cloud, const OntoTarget& target,
                              const std::vector<double>& eps_grid, int directions = 64);

struct IntensityBin {
    double r_lo, r_hi;
    int sector;
    double observed, expected;
    double chi2_term;
};

struct IntensityReport {
    std::vector<IntensityBin> bins;
    double chi2 = 0.0;
    int dof = 0;
    double p_value = 1.0;
    double kappa = 1.0;  // fitted overall normalization
};

// Binned comparison of a scaled heavy cloud against the limit intensity
// h = gauge^{-(lambda+d)}: radial annuli (geometric edges) crossed with
// angular sectors, bins with expected count below 5 merged into neighbors.
// The overall normalization is fitted from the total count.
IntensityReport intensity_report(const SampleCloud& cloud, const StarSet& shape,
                                 double lambda, const std::vector<double>& r_edges,
                                 int sectors);

struct MaximaReport {
    bool commute_exact = true;       // K(max X) == max K(X) in every repetition
    bool ranks_equal = true;         // maxima copulas identical across spaces
    KsResult frechet_fit;            // z maxima / c_n against fitted Frechet
    KsResult gumbel_fit;             // (x maxima - b_n)/a(b_n) against fitted Gumbel
};

// Componentwise maxima over `reps` independent clouds of n z-points each;
// x-side preimages via the inverse map.
MaximaReport coordinatewise_maxima(const Sampler& z_model, const MetaMap& map,
                                   std::uint64_t n, int reps, double c_n, double b_n,
                                   double a_bn, std::uint64_t seed);

struct HighRiskSample {
    double threshold = 0.0;
    double scale = 1.0;            // a(t)
    std::vector<double> u, v;      // normalized exceedance coordinates
};

// Keep points with y >= t (y = last coordinate) and map by the inverse of
// alpha_t(u,v) = (t u, t + a(t) v); bivariate.
HighRiskSample extract_high_risk(const SampleCloud& raw, double t, const LightMarginal& g0,
                                 std::size_t min_exceedances = 500);

struct SpectralWeights {
    double p_minus, p_zero, p_plus;
    double se_minus, se_zero, se_plus;
    std::uint64_t count;
};

// Directional weights of z-space exceedances over {y >= t}: classify by
// x < -delta y, |x| <= delta y, x > delta y.
SpectralWeights spectral_weights(const SampleCloud& z_cloud, double t, double delta = 0.05);

// Mass of the u-sample within `window` of each of -1, +1 and of 0.
struct UWindowMass {
    double at_minus, at_plus, at_zero;
    double se;  // binomial scale 1/sqrt(n)
    std::uint64_t count;
};
UWindowMass u_window_mass(const HighRiskSample& hr, double window_pm = 0.1,
                          double window_zero = 0.05);

// Probability-weighted-moment fits (location/scale); shape fitted on the
// log scale for Frechet.
struct GumbelFit {
    double location, scale;
};
GumbelFit fit_gumbel_pwm(std::vector<double> sample);
KsResult ks_vs_gumbel(const std::vector<double>& sample, const GumbelFit& fit);
KsResult ks_vs_frechet(const std::vector<double>& sample);
KsResult ks_vs_exponential(const std::vector<double>& sample);

// Little-endian binary dump: 8-byte magic "MCLOUD01", uint32 d, uint32 n,
// then float64 row-major points.
void write_cloud_binary(const SampleCloud& cloud, const std::string& path);
SampleCloud read_cloud_binary(const std::string& path);

}  // namespace metacloud
