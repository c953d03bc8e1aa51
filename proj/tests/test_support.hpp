#pragma once

// Shared helpers for the test suites. The naive permanent/determinant here
// are independent oracles: plain n!-term permutation sums via
// std::next_permutation, kept deliberately separate from the library kernels
// they are used to check.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qspace/fock.hpp"
#include "qspace/products.hpp"

namespace qtest {

inline int parity_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) {
                sign = -sign;
            }
        }
    }
    return sign;
}

inline double naive_permanent(const qspace::MatchMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    double total = n == 0 ? 1.0 : 0.0;
    if (n == 0) {
        return total;
    }
    do {
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            prod *= m.at(i, cols[i]);
        }
        total += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

inline double naive_determinant(const qspace::MatchMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    double total = n == 0 ? 1.0 : 0.0;
    if (n == 0) {
        return total;
    }
    do {
        double prod = parity_sign(cols);
        for (std::size_t i = 0; i < n; ++i) {
            prod *= m.at(i, cols[i]);
        }
        total += prod;
    } while (std::next_permutation(cols.begin(), cols.end()));
    return total;
}

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
    double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
    double signed_unit() { return 2.0 * unit() - 1.0; }
    qspace::Amplitude amplitude() { return {signed_unit(), signed_unit()}; }
};

inline qspace::MatchMatrix random_01_matrix(Rng& rng, std::size_t n) {
    std::vector<int> entries(n * n);
    for (int& e : entries) {
        e = rng.below(2) == 0 ? 0 : 1;
    }
    return qspace::MatchMatrix(n, std::move(entries));
}

inline std::vector<qspace::Mode> random_modes(Rng& rng, qspace::Statistics stats, std::size_t n,
                                              std::size_t dim) {
    std::vector<qspace::Mode> modes;
    if (stats == qspace::Statistics::Fermi) {
        std::vector<qspace::Mode> pool(dim);
        std::iota(pool.begin(), pool.end(), 0u);
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(pool[k], pool[k + rng.below(dim - k)]);
            modes.push_back(pool[k]);
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            modes.push_back(static_cast<qspace::Mode>(rng.below(dim)));
        }
    }
    return modes;
}

inline qspace::StateVector random_state(Rng& rng, qspace::Statistics stats, std::size_t dim,
                                        std::size_t max_particles, std::size_t max_terms = 4) {
    qspace::StateBuilder b(stats, static_cast<qspace::Mode>(dim));
    const std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t cap =
            stats == qspace::Statistics::Fermi ? std::min(max_particles, dim) : max_particles;
        const std::size_t n = rng.below(cap + 1);
        b.add_term(random_modes(rng, stats, n, dim), rng.amplitude());
    }
    return b.build();
}

inline bool close(qspace::Amplitude a, qspace::Amplitude b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

}  // namespace qtest
