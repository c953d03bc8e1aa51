#pragma once

#include <cstddef>
#include <vector>

#include "qspace/fock.hpp"

namespace qspace {

/// The 0/1 matrix of Kronecker deltas between two equal-length mode sequences:
/// entry (a, b) = 1 iff the a-th mode of the bra sequence equals the b-th mode
/// of the ket sequence. Its permanent (bosons) or determinant (fermions) is
/// the basis-ket inner product.
class MatchMatrix {
public:
    /// Requires equal particle counts.
    MatchMatrix(const BasisKet& x, const BasisKet& y);
    /// entries row-major, values restricted to {0, 1}.
    MatchMatrix(std::size_t n, std::vector<int> entries);

    std::size_t size() const noexcept { return n_; }
    int at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

private:
    std::size_t n_;
    std::vector<int> entries_;
};

/// Permanent by Ryser's inclusion-exclusion formula with Gray-code subset
/// iteration, O(2^n * n). Exact for 0/1 entries at the sizes handled here.
/// The 0x0 permanent is 1.
double permanent(const MatchMatrix& m);

/// Determinant: signed permutation sum for n <= 7, fraction-free integer
/// elimination above. The 0x0 determinant is 1.
double determinant(const MatchMatrix& m);

/// Inner product of two canonical basis kets: 0 when particle numbers differ,
/// else the permanent (Bose) or determinant (Fermi) of the match matrix.
/// Requires matching statistics.
Amplitude ket_inner(const BasisKet& x, const BasisKet& y);

/// Sesquilinear extension of ket_inner, conjugate-linear in the first
/// argument. Requires matching statistics and dimension.
Amplitude inner(const StateVector& x, const StateVector& y);

/// sqrt of the real part of inner(x, x). Throws std::logic_error if the
/// self-inner-product has imaginary part beyond 1e-12 (internal defect).
double norm(const StateVector& x);

/// x / norm(x). Throws std::domain_error when norm(x) <= 1e-12.
StateVector normalize(const StateVector& x);

/// True iff x and y differ by at most tol in norm. Null-norm fermionic kets
/// are quotiented away at canonicalization, so this is canonical-form equality
/// within tolerance.
bool is_similar(const StateVector& x, const StateVector& y, double tol = kDefaultTol);

}  // namespace qspace
