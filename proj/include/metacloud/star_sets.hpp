#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metacloud/rng.hpp"

namespace metacloud {

// A bounded star-shaped set given by its gauge function n_D: positively
// homogeneous of degree 1, positive away from the origin, with
// D = {n_D < 1} bounded and containing the origin.
class StarSet {
  public:
    virtual ~StarSet() = default;
    virtual std::string name() const = 0;
    virtual int dim() const = 0;
    virtual double gauge(std::span<const double> x) const = 0;
    // Euclidean radius R with D inside R*B.
    virtual double bounding_radius() const = 0;
    // Sup-norm bound (box half-width) used by rejection samplers; defaults
    // to the Euclidean bound.
    virtual double box_radius() const { return bounding_radius(); }
    virtual std::optional<double> exact_volume() const { return std::nullopt; }
};

using StarSetPtr = std::shared_ptr<const StarSet>;

class BallSet final : public StarSet {
  public:
    BallSet(int d, double radius = 1.0);
    std::string name() const override { return "ball"; }
    int dim() const override { return d_; }
    double gauge(std::span<const double> x) const override;
    double bounding_radius() const override { return radius_; }
    std::optional<double> exact_volume() const override;

  private:
    int d_;
    double radius_;
};

class CubeSet final : public StarSet {
  public:
    CubeSet(int d, double half_width = 1.0);
    std::string name() const override { return "cube"; }
    int dim() const override { return d_; }
    double gauge(std::span<const double> x) const override;
    double bounding_radius() const override;
    double box_radius() const override { return half_width_; }
    std::optional<double> exact_volume() const override;

  private:
    int d_;
    double half_width_;
};

class DiamondSet final : public StarSet {
  public:
    DiamondSet(int d, double radius = 1.0);
    std::string name() const override { return "diamond"; }
    int dim() const override { return d_; }
    double gauge(std::span<const double> x) const override;
    double bounding_radius() const override { return radius_; }
    double box_radius() const override { return radius_; }
    std::optional<double> exact_volume() const override;

  private:
    int d_;
    double radius_;
};

// Axis-aligned ellipse/ellipsoid, optionally rotated in the (x0,x1) plane.
class EllipseSet final : public StarSet {
  public:
    explicit EllipseSet(std::vector<double> semi_axes, double rot2d = 0.0);
    std::string name() const override { return "ellipse"; }
    int dim() const override { return static_cast<int>(axes_.size()); }
    double gauge(std::span<const double> x) const override;
    double bounding_radius() const override;
    std::optional<double> exact_volume() const override;

  private:
    std::vector<double> axes_;
    double c_, s_;  // rotation applied to the first two coordinates
};

// Unit ball modulated by a 4-fold bump toward the diagonals:
// boundary radius 1 + beta * prod(sqrt(d)|omega_i|) along direction omega.
// Used to give heavy models extra spectral mass near the diagonals.
class DiagonalBumpSet final : public StarSet {
  public:
    DiagonalBumpSet(int d, double beta);
    std::string name() const override { return "diag_bump"; }
    int dim() const override { return d_; }
    double gauge(std::span<const double> x) const override;
    double bounding_radius() const override { return 1.0 + beta_; }

  private:
    int d_;
    double beta_;
};

// The limit set E_{lambda,theta}: membership by the defining inequality
//   |u_1|^theta + ... + |u_d|^theta + lambda >= (lambda+d) max|u_i|^theta,
// gauge by bisection along rays (tolerance 1e-12, max 200 iterations).
class LimitSet final : public StarSet {
  public:
    LimitSet(double lambda, double theta, int d);
    std::string name() const override { return "limit_set"; }
    int dim() const override { return d_; }
    double gauge(std::span<const double> x) const override;
    double bounding_radius() const override { return std::sqrt(static_cast<double>(d_)); }
    double box_radius() const override { return 1.0; }
    bool member(std::span<const double> x) const;
    double lambda() const { return lambda_; }
    double theta() const { return theta_; }

  private:
    double lambda_, theta_;
    int d_;
};

// Union of two positive-volume star sets: gauge is the pointwise minimum.
class UnionSet final : public StarSet {
  public:
    UnionSet(StarSetPtr a, StarSetPtr b);
    std::string name() const override;
    int dim() const override { return a_->dim(); }
    double gauge(std::span<const double> x) const override;
    double bounding_radius() const override;
    double box_radius() const override;

  private:
    StarSetPtr a_, b_;
};

// The diagonal cross: union of the 2^d segments from the origin to the cube
// vertices. Zero volume, so it carries a distance evaluator instead of a
// gauge.
class DiagonalCross {
  public:
    explicit DiagonalCross(int d);
    int dim() const { return d_; }
    double distance(std::span<const double> x) const;
    // Reference evaluator minimizing over all 2^d segments explicitly.
    double distance_bruteforce(std::span<const double> x) const;

  private:
    int d_;
};

// The unique boundary point on the ray through dir: dir / gauge(dir).
std::vector<double> boundary_point(const StarSet& s, std::span<const double> dir);

struct VolumeEstimate {
    double fraction;   // |S| / (2R)^d with R the box radius
    double std_error;
    double volume;     // fraction * (2R)^d
};

VolumeEstimate mc_volume_fraction(const StarSet& s, std::uint64_t n, std::uint64_t seed);

// Statistical sanity check of the gauge: homogeneity, positivity and
// boundedness on random rays. Throws on violation.
void validate_star_set(const StarSet& s, int samples, std::uint64_t seed);

}  // namespace metacloud
