#include "condlab/chain.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "condlab/errors.hpp"
#include "condlab/rng.hpp"

namespace condlab {

bool FiniteChain::symmetric(double tol) const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(rate(i, j) - rate(j, i)) > tol) return false;
    return true;
}

FiniteChain two_state_chain(double r01, double r10) {
    FiniteChain c;
    c.n = 2;
    c.rates = {0.0, r01, r10, 0.0};
    return c;
}

FiniteChain ring_chain(int n, double r) {
    if (n < 3) throw std::invalid_argument("ring needs at least three states");
    FiniteChain c;
    c.n = n;
    c.rates.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    auto at = [&](int i, int j) -> double& {
        return c.rates[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        at(i, j) = r;
        at(j, i) = r;
    }
    return c;
}

FiniteChain random_symmetric_chain(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("chain needs at least two states");
    FiniteChain c;
    c.n = n;
    c.rates.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    CounterRng rng(seed, StreamPurpose::generic, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double r = 0.1 + rng.next_double();
            c.rates[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)] = r;
            c.rates[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(i)] = r;
        }
    return c;
}

std::vector<double> chain_generator(const FiniteChain& chain) {
    const int n = chain.n;
    std::vector<double> q(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double r = chain.rate(i, j);
            if (r < 0.0) throw std::invalid_argument("negative jump rate");
            q[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(j)] = r;
            total += r;
        }
        q[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(i)] = -total;
    }
    return q;
}

namespace {

std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b,
                           int n) {
    std::vector<double> c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<std::size_t>(i) * n + j] +=
                    aik * b[static_cast<std::size_t>(k) * n + j];
        }
    return c;
}

} // namespace

std::vector<double> transition_matrix(const FiniteChain& chain, double t) {
    if (t < 0.0) throw std::invalid_argument("transition time must be nonnegative");
    const int n = chain.n;
    std::vector<double> q = chain_generator(chain);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::abs(q[static_cast<std::size_t>(i) * n + j]);
        norm = std::max(norm, row);
    }
    int squarings = 0;
    double scale = t;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    std::vector<double> acc(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i) * n + i] = 1.0;
    std::vector<double> term = acc;
    for (int k = 1; k <= 40; ++k) {
        term = matmul(term, q, n);
        const double f = scale / static_cast<double>(k);
        double largest = 0.0;
        for (std::size_t idx = 0; idx < term.size(); ++idx) {
            term[idx] *= f;
            acc[idx] += term[idx];
            largest = std::max(largest, std::abs(term[idx]));
        }
        if (largest < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) acc = matmul(acc, acc, n);
    return acc;
}

std::vector<double> path_expectation(const FiniteChain& chain,
                                     const std::vector<double>& times,
                                     const std::vector<std::vector<double>>& factors) {
    const int n = chain.n;
    if (times.empty() || times.size() != factors.size())
        throw std::invalid_argument("need one factor per time");
    double prev = 0.0;
    for (double t : times) {
        if (!(t > prev)) throw std::invalid_argument("times must be strictly increasing");
        prev = t;
    }
    for (const auto& f : factors)
        if (f.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("factor length must match the state count");

    const std::size_t m = times.size();
    std::vector<double> g = factors[m - 1];
    for (std::size_t j = m - 1; j-- > 0;) {
        const std::vector<double> p = transition_matrix(chain, times[j + 1] - times[j]);
        std::vector<double> pg(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                pg[static_cast<std::size_t>(i)] +=
                    p[static_cast<std::size_t>(i) * n + k] * g[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i)
            g[static_cast<std::size_t>(i)] = factors[j][static_cast<std::size_t>(i)] *
                                             pg[static_cast<std::size_t>(i)];
    }
    const std::vector<double> p = transition_matrix(chain, times[0]);
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            out[static_cast<std::size_t>(i)] +=
                p[static_cast<std::size_t>(i) * n + k] * g[static_cast<std::size_t>(k)];
    return out;
}

double reversal_residual(const FiniteChain& chain, const std::vector<double>& times,
                         const std::vector<std::vector<double>>& factors) {
    const int n = chain.n;
    const std::size_t m = times.size();
    const std::vector<double> pf = path_expectation(chain, times, factors);
    double lhs = 0.0;
    for (double v : pf) lhs += v * v;

    const double tm = times[m - 1];
    std::vector<double> rtimes;
    std::vector<std::vector<double>> rfactors;
    for (std::size_t j = 1; j < m; ++j) {
        rtimes.push_back(tm - times[m - 1 - j]);
        rfactors.push_back(factors[m - 1 - j]);
    }
    for (std::size_t j = 0; j < m; ++j) {
        rtimes.push_back(tm + times[j]);
        rfactors.push_back(factors[j]);
    }
    const std::vector<double> phat = path_expectation(chain, rtimes, rfactors);
    double rhs = 0.0;
    for (int i = 0; i < n; ++i)
        rhs += factors[m - 1][static_cast<std::size_t>(i)] * phat[static_cast<std::size_t>(i)];
    return std::abs(lhs - rhs);
}

} // namespace condlab
