#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "metacloud/marginals.hpp"

namespace metacloud {

// Componentwise monotone map between x-space (light marginals G0) and
// z-space (heavy marginals F0): K0 = F0^{-1} o G0. All components are equal.
// Large arguments route through log tails so the composition stays accurate
// far beyond representable probabilities.
class MetaMap {
  public:
    // Meta transformation built from the pair of marginals; a closed form
    // can be registered and is then used for evaluation.
    static MetaMap from_marginals(MarginalPtr heavy, MarginalPtr light, int dim,
                                  std::function<double(double)> closed_forward = nullptr,
                                  std::function<double(double)> closed_inverse = nullptr);

    // The exponent-measure link map u -> exp(u/lambda) per coordinate. Not
    // odd; acts on exponent-measure coordinates, not data space.
    static MetaMap exp_link(double lambda, int dim);

    int dim() const { return dim_; }
    bool is_link() const { return link_; }

    double forward(double s) const;        // x -> z
    double inverse(double t) const;        // z -> x
    double forward_log(double s) const;    // log of forward(s), s >= 0 path
    double inverse_from_log(double log_t) const;

    // Numeric (marginal-composition) evaluation even when a closed form is
    // registered; used for cross-checking.
    double forward_numeric(double s) const;

    const Marginal* heavy_marginal() const { return heavy_.get(); }
    const Marginal* light_marginal() const { return light_.get(); }
    std::string describe() const;

  private:
    MetaMap() = default;
    MarginalPtr heavy_, light_;
    std::function<double(double)> closed_fwd_, closed_inv_;
    std::function<double(double)> link_fwd_, link_inv_, link_fwd_log_;
    int dim_ = 0;
    bool link_ = false;
};

enum class MapDirection { forward, inverse };

// Componentwise application to a flat row-major cloud of n points.
void push_cloud(const MetaMap& map, std::span<double> pts, int dim, MapDirection dir);

// Componentwise quantile transform: target_quantile(achieved_cdf(x)) per
// coordinate; achieved[k] is the current marginal of coordinate k.
void standardize_marginals(std::span<double> pts, int dim,
                           const std::vector<MarginalPtr>& achieved,
                           const Marginal& target);

}  // namespace metacloud
