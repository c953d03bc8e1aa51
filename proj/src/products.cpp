#include "qspace/products.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace qspace {

MatchMatrix::MatchMatrix(const BasisKet& x, const BasisKet& y) : n_(x.particle_count()) {
    if (x.particle_count() != y.particle_count()) {
        throw std::domain_error("MatchMatrix: particle counts differ");
    }
    entries_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            entries_[a * n_ + b] = x.modes()[a] == y.modes()[b] ? 1 : 0;
        }
    }
}

MatchMatrix::MatchMatrix(std::size_t n, std::vector<int> entries)
    : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
        throw std::domain_error("MatchMatrix: entry count does not match size");
    }
    for (int e : entries_) {
        if (e != 0 && e != 1) {
            throw std::domain_error("MatchMatrix: entries must be 0 or 1");
        }
    }
}

double permanent(const MatchMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1.0;
    }
    if (n >= 63) {
        throw std::domain_error("permanent: matrix too large for subset enumeration");
    }
    // Ryser: per(A) = (-1)^n sum over non-empty column subsets S of
    // (-1)^|S| prod_i sum_{j in S} a_ij. Subsets walk in Gray-code order so
    // each step updates the row sums by a single column.
    std::vector<double> row_sums(n, 0.0);
    double total = 0.0;
    const std::uint64_t subset_count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subset_count; ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const unsigned toggled = static_cast<unsigned>(std::countr_zero(k));
        const double direction = (gray >> toggled) & 1u ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            row_sums[i] += direction * m.at(i, toggled);
        }
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            prod *= row_sums[i];
        }
        total += (std::popcount(gray) & 1u ? -1.0 : 1.0) * prod;
    }
    return (n % 2 == 0) ? total : -total;
}

namespace {

double det_permutation_sum(const MatchMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    // Heap's algorithm; each step is a single transposition, so the sign just
    // alternates.
    std::vector<std::size_t> c(n, 0);
    double sign = 1.0;
    double total = 0.0;
    auto term = [&]() {
        double prod = sign;
        for (std::size_t i = 0; i < n && prod != 0.0; ++i) {
            prod *= m.at(i, perm[i]);
        }
        total += prod;
    };
    term();
    std::size_t i = 0;
    while (i < n) {
        if (c[i] < i) {
            std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
            sign = -sign;
            term();
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return total;
}

double det_bareiss(const MatchMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::int64_t> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = m.at(i, j);
        }
    }
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot * n + k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0.0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[k * n + j], a[pivot * n + j]);
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact integer division in the fraction-free recurrence.
                a[i * n + j] = (a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = a[k * n + k];
    }
    return static_cast<double>(sign * a[n * n - 1]);
}

}  // namespace

double determinant(const MatchMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) {
        return 1.0;
    }
    return n <= 7 ? det_permutation_sum(m) : det_bareiss(m);
}

Amplitude ket_inner(const BasisKet& x, const BasisKet& y) {
    if (x.stats() != y.stats()) {
        throw std::domain_error("ket_inner: statistics mismatch");
    }
    if (x.particle_count() != y.particle_count()) {
        return Amplitude{};
    }
    MatchMatrix m(x, y);
    const double value = x.stats() == Statistics::Bose ? permanent(m) : determinant(m);
    return Amplitude{value, 0.0};
}

Amplitude inner(const StateVector& x, const StateVector& y) {
    if (x.stats() != y.stats()) {
        throw std::domain_error("inner: statistics mismatch");
    }
    if (x.dim() != y.dim()) {
        throw std::domain_error("inner: dimension mismatch");
    }
    Amplitude total{};
    for (const auto& [xket, xamp] : x.terms()) {
        for (const auto& [yket, yamp] : y.terms()) {
            if (xket.particle_count() != yket.particle_count()) {
                continue;
            }
            total += std::conj(xamp) * yamp * ket_inner(xket, yket);
        }
    }
    return total;
}

double norm(const StateVector& x) {
    const Amplitude self = inner(x, x);
    if (std::abs(self.imag()) > kDefaultTol) {
        throw std::logic_error("norm: self inner product has imaginary part " +
                               std::to_string(self.imag()));
    }
    return std::sqrt(std::max(self.real(), 0.0));
}

StateVector normalize(const StateVector& x) {
    const double n = norm(x);
    if (n <= kDefaultTol) {
        throw std::domain_error("normalize: zero-norm state");
    }
    return scale(Amplitude{1.0 / n, 0.0}, x);
}

bool is_similar(const StateVector& x, const StateVector& y, double tol) {
    return norm(add(x, scale(Amplitude{-1.0, 0.0}, y))) <= tol;
}

}  // namespace qspace
