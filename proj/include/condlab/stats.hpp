#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace condlab {

// Two-sided 99% normal quantile used by every statistical gate in the suite.
inline constexpr double kZ99 = 2.5758293035489004;

// Neumaier compensated accumulator.
class CompensatedSum {
  public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Streaming mean/variance (Welford); mergeable for deterministic parallel
// reductions.
class RunningStats {
  public:
    void add(double v);
    void merge(const RunningStats& o);
    std::size_t count() const { return n_; }
    double mean() const { return mean_; }
    double variance() const;  // unbiased; 0 when n < 2
    double stderr_mean() const;

  private:
    std::size_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

double normal_cdf(double x);

// Regularized incomplete gamma Q(s, x); used for chi-square tails.
double gammq(double s, double x);

// Upper tail of the chi-square distribution with k dof.
double chi2_sf(double x, double k);

// One-sample chi-square test against expected cell probabilities;
// returns the p-value.
double chi2_test_p(const std::vector<long>& counts, const std::vector<double>& probs);

// Two-sample chi-square homogeneity test for equal-size samples over the
// same categories.
double chi2_two_sample_p(const std::vector<long>& c1, const std::vector<long>& c2);

// Kolmogorov distribution tail Q(x) via the Jacobi theta expansion.
double kolmogorov_sf(double x);

// One-sample KS test against the exponential(rate) law; returns the p-value.
double ks_test_exponential_p(std::vector<double> samples, double rate);

}  // namespace condlab
