#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "metacloud/marginals.hpp"
#include "metacloud/numeric.hpp"
#include "metacloud/sampler.hpp"
#include "metacloud/star_sets.hpp"

namespace metacloud {

// Radial profile of a homothetic density; unnormalized.
class RadialGenerator {
  public:
    virtual ~RadialGenerator() = default;
    virtual std::string name() const = 0;
    virtual double eval(double r) const = 0;
    virtual double log_eval(double r) const = 0;
    virtual bool heavy() const = 0;
    virtual double tail_index() const = 0;  // lambda for heavy; NaN for light
};

using GeneratorPtr = std::shared_ptr<const RadialGenerator>;

// f_*(r) = (1+r)^{-(lambda+d)}.
class HeavyPowerGenerator final : public RadialGenerator {
  public:
    HeavyPowerGenerator(double lambda, int d);
    std::string name() const override { return "heavy_power"; }
    double eval(double r) const override;
    double log_eval(double r) const override;
    bool heavy() const override { return true; }
    double tail_index() const override { return lambda_; }

  private:
    double lambda_;
    int d_;
};

// g_*(r) = r^kappa * psi'(r)^m * exp(-psi(r)), truncated once exp(-psi)
// underflows; kappa and m are the marginal-matching adjustments (square
// level sets need kappa = -(d-1), diamonds need m = 1).
class LightGenerator final : public RadialGenerator {
  public:
    LightGenerator(LightPtr psi_source, int kappa = 0, int hazard_pow = 0);
    std::string name() const override { return "light_vm"; }
    double eval(double r) const override;
    double log_eval(double r) const override;
    bool heavy() const override { return false; }
    double tail_index() const override { return std::numeric_limits<double>::quiet_NaN(); }
    const LightMarginal& psi_source() const { return *psi_; }

  private:
    LightPtr psi_;
    int kappa_, m_;
};

// Law of the gauge radius: density proportional to r^{d-1} generator(r).
// Tabulated by numeric integration; inverse stored against the exponential
// variable l = -log(tail) so deep draws stay accurate.
class RadialLaw {
  public:
    RadialLaw(GeneratorPtr gen, int d);

    double cdf(double r) const;
    double total_mass() const { return total_; }  // integral of r^{d-1} gen(r)
    double sample(RngStream& rng) const { return from_exponential(rng.exponential()); }
    double from_exponential(double ell) const;    // quantile at tail exp(-ell)
    double log_tail(double r) const;
    double support_end() const { return r_grid_.back(); }
    // log of the constant A with tail(r) ~ A r^{-lambda} (heavy only).
    double log_tail_power_const() const;

  private:
    GeneratorPtr gen_;
    int d_;
    double total_;
    std::vector<double> r_grid_, cum_;
    InterpTable inv_;          // l -> r
    double ell_end_, slope_end_;
    bool heavy_;
    double lambda_;
};

// Density z -> generator(gauge(z)) / Z with star-shaped level sets.
class HomotheticDensity final : public Sampler {
  public:
    HomotheticDensity(GeneratorPtr gen, StarSetPtr shape);

    int dim() const override { return shape_->dim(); }
    std::string id() const override;

    double density(std::span<const double> x) const;
    double log_density(std::span<const double> x) const;
    double normalization() const { return z_; }

    // Exact sampler: uniform direction on the boundary via the cone measure
    // (uniform point in the shape rescaled to gauge one), radius from the
    // radial law.
    void sample(RngStream& rng, std::span<double> out) const override;

    // Marginal density along one axis by numeric integration over the
    // complementary coordinates (d = 2 or 3).
    double numeric_marginal(int axis, double t, double rel_tol = 1e-6) const;

    // The exact marginal as a tail-tabulated heavy marginal (heavy
    // generators, d = 2 or 3). Built once and cached.
    HeavyPtr marginal() const;

    const StarSet& shape() const { return *shape_; }
    const RadialGenerator& generator() const { return *gen_; }
    const RadialLaw& radial_law() const { return radial_; }
    double shape_volume() const { return shape_volume_; }

  private:
    GeneratorPtr gen_;
    StarSetPtr shape_;
    RadialLaw radial_;
    double shape_volume_;
    double z_;
    mutable HeavyPtr marginal_cache_;
};

using HomotheticPtr = std::shared_ptr<const HomotheticDensity>;

// Limit intensity h(w) = 1 / gauge(w)^{lambda+d}; pole at the origin.
double limit_intensity_h(double lambda, int d, const StarSet& shape,
                         std::span<const double> w);

}  // namespace metacloud
