#include "condlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace condlab {

void RunningStats::add(double v) {
    ++n_;
    const double d = v - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (v - mean_);
}

void RunningStats::merge(const RunningStats& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
        *this = o;
        return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(o.n_);
    const double d = o.mean_ - mean_;
    const double n = na + nb;
    mean_ += d * nb / n;
    m2_ += o.m2_ + d * d * na * nb / n;
    n_ += o.n_;
}

double RunningStats::variance() const {
    return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
}

double RunningStats::stderr_mean() const {
    return n_ < 1 ? 0.0 : std::sqrt(variance() / static_cast<double>(n_));
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

// Lanczos log-gamma.
double gammln(double x) {
    static const double c[6] = {76.18009172947146,  -86.50532032941677, 24.01409824083091,
                                -1.231739572450155, 0.1208650973866179e-2, -0.5395239384953e-5};
    double y = x;
    double tmp = x + 5.5;
    tmp -= (x + 0.5) * std::log(tmp);
    double ser = 1.000000000190015;
    for (int j = 0; j < 6; ++j) ser += c[j] / ++y;
    return -tmp + std::log(2.5066282746310005 * ser / x);
}

double gser(double s, double x) {
    double ap = s;
    double sum = 1.0 / s;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + s * std::log(x) - gammln(s));
}

double gcf(double s, double x) {
    const double eps = 1e-16;
    const double fpmin = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return std::exp(-x + s * std::log(x) - gammln(s)) * h;
}

}  // namespace

double gammq(double s, double x) {
    if (x < 0.0 || s <= 0.0) throw std::invalid_argument("gammq domain");
    if (x == 0.0) return 1.0;
    if (x < s + 1.0) return 1.0 - gser(s, x);
    return gcf(s, x);
}

double chi2_sf(double x, double k) {
    return gammq(k / 2.0, x / 2.0);
}

double chi2_test_p(const std::vector<long>& counts, const std::vector<double>& probs) {
    if (counts.size() != probs.size() || counts.empty())
        throw std::invalid_argument("chi2_test_p: size mismatch");
    long total = 0;
    for (long c : counts) total += c;
    double stat = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double e = probs[i] * static_cast<double>(total);
        const double d = static_cast<double>(counts[i]) - e;
        stat += d * d / e;
    }
    return chi2_sf(stat, static_cast<double>(counts.size() - 1));
}

double chi2_two_sample_p(const std::vector<long>& c1, const std::vector<long>& c2) {
    if (c1.size() != c2.size() || c1.empty())
        throw std::invalid_argument("chi2_two_sample_p: size mismatch");
    double stat = 0.0;
    std::size_t dof = 0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        const double n = static_cast<double>(c1[i] + c2[i]);
        if (n == 0.0) continue;
        const double d = static_cast<double>(c1[i] - c2[i]);
        stat += d * d / n;
        ++dof;
    }
    if (dof <= 1) return 1.0;
    return chi2_sf(stat, static_cast<double>(dof - 1));
}

double kolmogorov_sf(double x) {
    if (x <= 0.0) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * x * x);
        sum += (k % 2 == 1 ? term : -term);
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double ks_test_exponential_p(std::vector<double> samples, double rate) {
    if (samples.empty()) throw std::invalid_argument("ks test: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = 1.0 - std::exp(-rate * samples[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::abs(cdf - lo), std::abs(hi - cdf)));
    }
    const double sn = std::sqrt(n);
    return kolmogorov_sf((sn + 0.12 + 0.11 / sn) * d);
}

}  // namespace condlab
