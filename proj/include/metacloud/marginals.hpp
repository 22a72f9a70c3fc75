#pragma once

#include <memory>
#include <string>
#include <vector>

#include "metacloud/numeric.hpp"

namespace metacloud {

// A univariate law. All built-ins are symmetric about zero. Tail work is
// routed through log_tail / quantile_from_log_tail so that levels far beyond
// double-precision probabilities stay representable.
class Marginal {
  public:
    virtual ~Marginal() = default;

    virtual std::string name() const = 0;
    virtual double cdf(double t) const = 0;
    virtual double density(double t) const = 0;

    // log(1 - F(t)); valid for every finite t.
    virtual double log_tail(double t) const;

    virtual double quantile(double p) const;

    // t with log(1 - F(t)) = lt, lt < 0.
    virtual double quantile_from_log_tail(double lt) const;

    // log t for the same equation; usable when t itself overflows.
    virtual double log_quantile_from_log_tail(double lt) const;

    // log(1 - F(exp(log_t))) without forming exp(log_t).
    virtual double log_tail_from_log_value(double log_t) const;

  protected:
    void check_finite(double t) const;
};

using MarginalPtr = std::shared_ptr<const Marginal>;

class HeavyMarginal : public Marginal {
  public:
    virtual double tail_index() const = 0;  // lambda
};

class LightMarginal : public Marginal {
  public:
    virtual double theta() const = 0;           // regular-variation exponent of psi
    virtual double psi(double s) const = 0;     // increasing exponent function
    virtual double psi_prime(double s) const = 0;
    double scale(double s) const;               // a(s) = 1 / psi'(s)
    double scale_prime(double s) const;         // numeric a'(s)
};

using HeavyPtr = std::shared_ptr<const HeavyMarginal>;
using LightPtr = std::shared_ptr<const LightMarginal>;

// Symmetric Pareto-type: 1 - F(t) = (1/2)(1+t)^{-lambda} for t >= 0.
class ParetoMarginal final : public HeavyMarginal {
  public:
    explicit ParetoMarginal(double lambda);
    std::string name() const override;
    double cdf(double t) const override;
    double density(double t) const override;
    double log_tail(double t) const override;
    double quantile(double p) const override;
    double quantile_from_log_tail(double lt) const override;
    double log_quantile_from_log_tail(double lt) const override;
    double log_tail_from_log_value(double log_t) const override;
    double tail_index() const override { return lambda_; }

  private:
    double lambda_;
};

// Student t with nu degrees of freedom; cdf by numeric integration, far tail
// by the asymptotic power series.
class StudentTMarginal final : public HeavyMarginal {
  public:
    explicit StudentTMarginal(double nu);
    std::string name() const override;
    double cdf(double t) const override;
    double density(double t) const override;
    double log_tail(double t) const override;
    double tail_index() const override { return nu_; }

  private:
    double nu_;
    double log_norm_;  // log of the density normalizing constant
};

// Exponential-power: 1 - G(s) = (1/2) exp(-s^theta) for s >= 0.
// theta = 1 is the Laplace-type marginal.
class ExpPowerMarginal final : public LightMarginal {
  public:
    explicit ExpPowerMarginal(double theta);
    std::string name() const override;
    double cdf(double t) const override;
    double density(double t) const override;
    double log_tail(double t) const override;
    double quantile(double p) const override;
    double quantile_from_log_tail(double lt) const override;
    double log_quantile_from_log_tail(double lt) const override;
    double log_tail_from_log_value(double log_t) const override;
    double theta() const override { return theta_; }
    double psi(double s) const override;
    double psi_prime(double s) const override;

  private:
    double theta_;
};

// Standard normal. psi(s) = s^2/2, scale a(s) = 1/s.
class GaussianMarginal final : public LightMarginal {
  public:
    std::string name() const override;
    double cdf(double t) const override;
    double density(double t) const override;
    double log_tail(double t) const override;
    double theta() const override { return 2.0; }
    double psi(double s) const override { return 0.5 * s * s; }
    double psi_prime(double s) const override { return s; }
};

// Exponent function spliced at an anchor quantile: steep power below the
// anchor, exactly linear above it. Above the anchor the tail is a pure
// exponential in the scale a(t0), which pins high-risk normalizations at the
// anchor threshold instead of only in the limit.
//   psi(s) = L * (eps*(s/t0) + (1-eps)*(s/t0)^k)   for s <= t0
//   psi(s) = L + L*(eps + (1-eps)*k)*(s/t0 - 1)    for s >  t0
// with L = -log(2*level) so that 1 - G(t0) = level.
class SplicedExpMarginal final : public LightMarginal {
  public:
    SplicedExpMarginal(double steepness, double anchor, double level, double eps = 0.05);
    std::string name() const override;
    double cdf(double t) const override;
    double density(double t) const override;
    double log_tail(double t) const override;
    double quantile_from_log_tail(double lt) const override;
    double theta() const override { return 1.0; }  // psi is linear at infinity
    double psi(double s) const override;
    double psi_prime(double s) const override;
    double anchor() const { return t0_; }

  private:
    double phi(double x) const;
    double phi_prime(double x) const;
    double k_, t0_, level_, eps_, big_l_, slope_;  // slope = psi'(t0+) * t0 / L
    InterpTable phi_inv_;                          // seed for the Newton inverse
};

// Light marginal defined by psi1 = psi_base + b with b tabulated on a grid.
// Produced by build_lighter_marginal.
class GridPsiMarginal final : public LightMarginal {
  public:
    GridPsiMarginal(LightPtr base, std::vector<double> grid, std::vector<double> b,
                    double gamma);
    std::string name() const override;
    double cdf(double t) const override;
    double density(double t) const override;
    double log_tail(double t) const override;
    double theta() const override { return base_->theta(); }
    double psi(double s) const override;
    double psi_prime(double s) const override;
    double b_at(double s) const;  // the additive correction, gamma * M*(s)

  private:
    void build_cdf_table();
    LightPtr base_;
    InterpTable b_table_;
    double gamma_;
    double log_half_norm_;      // log of 1/(2 * integral over [0,inf))
    InterpTable tail_table_;    // s -> log tail, for cdf/quantile
};

// Heavy marginal backed by a log-log tail table plus an exact power
// asymptote; used for the marginals of homothetic densities.
class TabulatedHeavyMarginal final : public HeavyMarginal {
  public:
    // table maps y = log1p(t) -> log(1 - F(t)) for t >= 0; beyond the table
    // the tail is tail_const * t^{-lambda}.
    TabulatedHeavyMarginal(std::string name, double lambda, InterpTable table,
                           double log_tail_const,
                           std::function<double(double)> density_fn);
    std::string name() const override;
    double cdf(double t) const override;
    double density(double t) const override;
    double log_tail(double t) const override;
    double quantile_from_log_tail(double lt) const override;
    double log_quantile_from_log_tail(double lt) const override;
    double log_tail_from_log_value(double log_t) const override;
    double tail_index() const override { return lambda_; }

  private:
    std::string name_;
    double lambda_;
    InterpTable table_;          // y = log1p(t) -> log tail
    double log_tail_const_;
    std::function<double(double)> density_fn_;
};

// Scaling constants for sample clouds.
enum class ScalingKind {
    heavy,       // 1 - F0(c_n) = 1/n
    light_exact, // -log(1 - G0(r_n)) = log n
    light_psi,   // psi(r_n) = log n
};

struct ScalingSchedule {
    ScalingKind kind;
    std::vector<std::pair<std::uint64_t, double>> values;  // (n, scale)

    double at(std::uint64_t n) const;
};

ScalingSchedule scaling_constants(const Marginal& m, const std::vector<std::uint64_t>& ns,
                                  ScalingKind kind);

// Scale function a(s) = 1/psi'(s); throws if psi' <= 0.
double scale_function_at(const LightMarginal& m, double s);

// The lighter-marginal construction: psi1 = psi + gamma * M*(s), where M* is
// assembled from the running minima of M_n(s) = psi(s) - psi(s - s/n) on
// level bands {M_n* in [n, n+1]}. gamma = 1/2 reproduces the reference
// construction; smaller gamma gives a milder correction.
GridPsiMarginal build_lighter_marginal(const LightPtr& m, const std::vector<double>& grid,
                                       double gamma = 0.5);

// M_n(s) = psi(s) - psi(s - s/n); exposed for tests.
double increment_m_n(const LightMarginal& m, double s, int n);

}  // namespace metacloud
