#pragma once

#include <atomic>
#include <memory>
#include <vector>

#include "metacloud/homothetic.hpp"
#include "metacloud/meta_map.hpp"
#include "metacloud/partitions.hpp"
#include "metacloud/sampler.hpp"

namespace metacloud {

using SamplerPtr = std::shared_ptr<const Sampler>;

// Base model conditioned off the ring blocks that meet the coordinate
// planes: within ring n (n >= 2) every point with min_i |z_i| <= s_{n1} is
// removed; the central block is kept and the lost mass is absorbed by
// conditional resampling. density() reports the unnormalized edited density
// (equal to the base off the deleted set, zero on it).
class DeleteAxisBlocksModel final : public Sampler {
  public:
    DeleteAxisBlocksModel(HomotheticPtr base, std::shared_ptr<const BlockPartition> partition);
    int dim() const override { return base_->dim(); }
    std::string id() const override { return "axis_deleted(" + base_->id() + ")"; }
    void sample(RngStream& rng, std::span<double> out) const override;
    bool deleted(std::span<const double> z) const;
    double density(std::span<const double> z) const;
    const HomotheticDensity& base() const { return *base_; }

  private:
    HomotheticPtr base_;
    std::shared_ptr<const BlockPartition> partition_;
};

// The diagonal law: |t| drawn from the doubled tail of a symmetric
// marginal, placed at t * delta on a main diagonal. With both_diagonals the
// point lands on (1,..,1) or (1,-1,..) style diagonals with equal
// probability, charging all orthants; marginals stay exactly the given law.
class DiagonalLawModel final : public Sampler {
  public:
    DiagonalLawModel(MarginalPtr marginal, int d, bool both_diagonals);
    int dim() const override { return d_; }
    std::string id() const override { return "diagonal(" + marginal_->name() + ")"; }
    void sample(RngStream& rng, std::span<double> out) const override;

  private:
    MarginalPtr marginal_;
    int d_;
    bool both_;
};

// Glued construction: the base density off the diagonal cube union
// U = union_n [t_{n-1} e, t_{n+1} e] (reflected to every orthant), the
// diagonal law on U. Window radii are logs of t_n (e.g. from
// prs4_sequence); cubes beyond the representable range are unreachable by
// double-precision samples and roll over to the base (counted).
class DiagonalGlueModel final : public Sampler {
  public:
    DiagonalGlueModel(HomotheticPtr base, std::vector<double> log_window,
                      bool both_diagonals = true, std::uint64_t pilot_seed = 0x9e11eull,
                      std::uint64_t pilot_n = 200'000);
    int dim() const override { return base_->dim(); }
    std::string id() const override { return "diag_glue(" + base_->id() + ")"; }
    void sample(RngStream& rng, std::span<double> out) const override;
    bool in_union(std::span<const double> z) const;
    // Unnormalized edited density: base off U, zero on U (the glued diagonal
    // part is singular).
    double density(std::span<const double> z) const;
    double diag_weight() const { return w_diag_; }
    std::uint64_t overflow_rollovers() const { return rollover_.load(); }

  private:
    HomotheticPtr base_;
    std::vector<double> log_window_;
    bool both_;
    double w_diag_ = 0.0, w_base_ = 1.0;
    double log_tail_lo_ = 0.0, tail_lo_ = 0.0, tail_hi_ = 0.0;
    mutable std::atomic<std::uint64_t> rollover_{0};
};

// z-model pushed to x-space through K^{-1} (meta cloud sampler), or an
// x-model pushed forward to z-space.
class MetaSampler final : public Sampler {
  public:
    MetaSampler(SamplerPtr inner, MetaMap map, MapDirection dir);
    int dim() const override { return inner_->dim(); }
    std::string id() const override;
    void sample(RngStream& rng, std::span<double> out) const override;

  private:
    SamplerPtr inner_;
    MetaMap map_;
    MapDirection dir_;
};

// Sum-style mixture in x-space: the base sampler plus a homothetic
// component g_o = g_*(n_A) restricted to {n_A >= core_gauge} with total
// added mass `added_mass`; compensated by thinning the base inside the
// centered box of half-width comp_box so tails keep full base weight.
class LightMixtureModel final : public Sampler {
  public:
    LightMixtureModel(SamplerPtr base_x, HomotheticPtr a_component, double added_mass,
                      double core_gauge, double comp_box,
                      std::uint64_t pilot_seed = 0x3a1bull,
                      std::uint64_t pilot_n = 200'000);
    int dim() const override { return base_->dim(); }
    std::string id() const override { return "light_mix(" + base_->id() + ")"; }
    void sample(RngStream& rng, std::span<double> out) const override;
    double thinning_factor() const { return kappa_; }

  private:
    SamplerPtr base_;
    HomotheticPtr a_;
    double added_mass_, core_gauge_, comp_box_, kappa_;
    double ell0_;  // -log tail of the radial law at the core gauge
};

struct TailRatioRow {
    double level;           // probability level of the reference quantile
    int coord;
    double ratio;           // empirical exceedance fraction / (1 - level)
    double std_error;
    std::uint64_t count;    // tail samples observed
    bool wide_ci;           // fewer than 100 tail samples
};

std::vector<TailRatioRow> marginal_tail_ratio_check(const Sampler& model,
                                                    const Marginal& reference,
                                                    const std::vector<double>& levels,
                                                    std::uint64_t n, std::uint64_t seed);

}  // namespace metacloud
