#pragma once

#include <functional>
#include <vector>

namespace metacloud {

// Adaptive Simpson quadrature on [a,b] with relative tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-9, int max_depth = 40);

// Bisection for the root of a monotone function on [lo,hi]; f(lo), f(hi) must
// bracket zero. Returns the midpoint after max_iter halvings or when the
// interval is below tol (relative on the interval width).
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-13, int max_iter = 200);

// Piecewise-linear interpolation table over a strictly increasing abscissa.
class InterpTable {
  public:
    InterpTable() = default;
    InterpTable(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;        // clamped at the ends
    double inverse(double y) const;           // requires y strictly monotone
    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    double y_front() const { return y_.front(); }
    double y_back() const { return y_.back(); }
    bool empty() const { return x_.empty(); }

  private:
    std::vector<double> x_, y_;
    bool y_increasing_ = true;
};

// Upper regularized incomplete gamma Q(a,x); chi-square survival is
// Q(k/2, x/2).
double gamma_q(double a, double x);

double chi2_survival(double stat, int dof);

// Kolmogorov distribution tail Q(lambda) = 2 sum (-1)^{k-1} exp(-2 k^2 l^2).
double kolmogorov_tail(double lambda);

// One-sample KS against a cdf evaluator; returns {statistic, p_value}.
struct KsResult {
    double statistic;
    double p_value;
};
KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf);
KsResult ks_test_two_sample(std::vector<double> a, std::vector<double> b);

// log(1 - Phi(x)) for the standard normal, stable for large x.
double norm_log_tail(double x);
double norm_cdf(double x);
double norm_quantile(double p);

struct MeanStderr {
    double mean;
    double stderr_;
};

}  // namespace metacloud
