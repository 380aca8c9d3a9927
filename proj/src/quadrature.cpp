#include "condlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace condlab {

QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature needs at least one node");
    QuadRule rule;
    rule.x.resize(static_cast<std::size_t>(n));
    rule.w.resize(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[static_cast<std::size_t>(i)] = -x;
        rule.x[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.w[static_cast<std::size_t>(i)] = w;
        rule.w[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

QuadRule scale_rule(const QuadRule& rule, double lo, double hi) {
    QuadRule out;
    const double mid = 0.5 * (lo + hi);
    const double rad = 0.5 * (hi - lo);
    out.x.reserve(rule.x.size());
    out.w.reserve(rule.w.size());
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
        out.x.push_back(mid + rad * rule.x[i]);
        out.w.push_back(rad * rule.w[i]);
    }
    return out;
}

} // namespace condlab
