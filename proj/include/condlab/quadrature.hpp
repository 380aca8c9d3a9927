#pragma once

#include <vector>

namespace condlab {

// Nodes and weights on [-1, 1].
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};

QuadRule gauss_legendre(int n);

// Affine image of the rule on [lo, hi].
QuadRule scale_rule(const QuadRule& rule, double lo, double hi);

} // namespace condlab
