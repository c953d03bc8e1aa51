#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qspace/fock.hpp"
#include "qspace/ladder.hpp"

namespace qspace {

/// D x D complex coefficient matrix t of a one-body operator
/// sum_{ab} t[a][b] adag_a a_b.
class OneBodyCoeffs {
public:
    explicit OneBodyCoeffs(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
    /// entries row-major, size dim*dim.
    OneBodyCoeffs(std::size_t dim, std::vector<Amplitude> entries);

    std::size_t dim() const noexcept { return dim_; }
    Amplitude& at(std::size_t a, std::size_t b) { return entries_[a * dim_ + b]; }
    const Amplitude& at(std::size_t a, std::size_t b) const { return entries_[a * dim_ + b]; }

    bool is_hermitian(double tol = kDefaultTol) const;

private:
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

/// Rank-4 complex coefficient tensor V[a][b][c][d] of a two-body operator.
class TwoBodyCoeffs {
public:
    explicit TwoBodyCoeffs(std::size_t dim) : dim_(dim), entries_(dim * dim * dim * dim) {}

    std::size_t dim() const noexcept { return dim_; }
    Amplitude& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return entries_[((a * dim_ + b) * dim_ + c) * dim_ + d];
    }
    const Amplitude& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return entries_[((a * dim_ + b) * dim_ + c) * dim_ + d];
    }

private:
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

/// Spatial direction in spherical angles, theta in [0, pi], phi in [0, 2pi).
struct Direction {
    double theta = 0.0;
    double phi = 0.0;
};

/// sum_{ab} t[a][b] adag_a a_b, skipping exact-zero coefficients.
OperatorExpr build_one_body(const OneBodyCoeffs& t, Statistics stats);

/// Reassembles t[a][b] = sum_k U[a][k] lambda_k conj(U[b][k]) from a spectral
/// decomposition with orthonormal eigenvector columns U (checked to 1e-10).
/// Hermitian by construction.
OneBodyCoeffs one_body_from_spectral(std::span<const double> eigvals, const OneBodyCoeffs& eigvecs);

/// (1/2) sum_{abcd} V[a][b][c][d] adag_a adag_b a_d a_c, skipping exact zeros.
OperatorExpr build_two_body(const TwoBodyCoeffs& v, Statistics stats);

/// Coefficients of the symmetrized pair correlation of one-body observables A
/// and B: V[a][b][c][d] = (A[a][c] B[b][d] + B[a][c] A[b][d]) / 2. Through
/// build_two_body this acts on two-particle states as the first-quantized
/// (A (x) B + B (x) A) / 2.
TwoBodyCoeffs correlation_coeffs(const OneBodyCoeffs& a, const OneBodyCoeffs& b);

/// Spin-1/2 component along direction n: the 2x2 matrix
/// [[cos t, e^{-i phi} sin t], [e^{i phi} sin t, -cos t]]. Hermitian with
/// eigenvalues +-1.
OneBodyCoeffs sigma_n(const Direction& d);

/// diag(1, -1): sigma_n at theta = 0.
OneBodyCoeffs sigma_z();

/// <x|A|x> / <x|x>. Throws std::domain_error when norm(x) <= 1e-12.
Amplitude expectation(const OperatorExpr& a, const StateVector& x);

/// The fermionic two-particle state with one particle in mode 0 (up) and one
/// in mode 1 (down), unit amplitude; D = 2.
StateVector up_down_pair_state();

struct CorrelationSample {
    double theta = 0.0;
    double phi = 0.0;
    double value = 0.0;
};

/// Expectation of the pair correlation of sigma_z with sigma_n(theta, phi) on
/// pair_state, over a theta_steps x phi_steps grid covering [0, pi] x [0, 2pi).
/// Rows are ordered by grid index (theta major).
std::vector<CorrelationSample> spin_correlation_scan(const StateVector& pair_state,
                                                     std::size_t theta_steps,
                                                     std::size_t phi_steps);

}  // namespace qspace
