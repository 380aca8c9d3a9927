#pragma once

#include <cstdint>
#include <vector>

namespace condlab {

// Continuous-time chain on n states given by nonnegative off-diagonal
// rates; the diagonal is implied. Symmetric rates make the chain
// reversible for the counting measure.
struct FiniteChain {
    int n = 0;
    std::vector<double> rates; // n*n row-major, diagonal ignored

    double rate(int i, int j) const {
        return rates[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(j)];
    }
    bool symmetric(double tol = 0.0) const;
};

FiniteChain two_state_chain(double r01, double r10);
FiniteChain ring_chain(int n, double r);
FiniteChain random_symmetric_chain(int n, std::uint64_t seed);

std::vector<double> chain_generator(const FiniteChain& chain);

// exp(t Q) via scaling and squaring.
std::vector<double> transition_matrix(const FiniteChain& chain, double t);

// E_x prod_j f_j(X_{t_j}) for every start x, via backward recursion.
std::vector<double> path_expectation(const FiniteChain& chain,
                                     const std::vector<double>& times,
                                     const std::vector<std::vector<double>>& factors);

// | sum_x (E_x F)^2  -  sum_x f_m(x) E_x F_hat |, where F_hat runs the
// factor list backwards and forwards again over the doubled time span.
// Zero (to solver precision) exactly when the chain is reversible for the
// counting measure.
double reversal_residual(const FiniteChain& chain, const std::vector<double>& times,
                         const std::vector<std::vector<double>>& factors);

} // namespace condlab
