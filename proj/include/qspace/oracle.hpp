#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qspace/fock.hpp"
#include "qspace/observables.hpp"

namespace qspace {

/// Reference-side state: a dense element of the n-fold labeled tensor product
/// of a D-dimensional single-particle space, indexed by slot tuples
/// (i_1, ..., i_n). Desk-scale only: D^n is capped at 2^16.
class LabeledVector {
public:
    LabeledVector(std::size_t particles, std::size_t dim);

    std::size_t particle_count() const noexcept { return particles_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    Amplitude& at(std::span<const Mode> tuple) { return amplitudes_[flat_index(tuple)]; }
    const Amplitude& at(std::span<const Mode> tuple) const { return amplitudes_[flat_index(tuple)]; }

    std::vector<Amplitude>& amplitudes() noexcept { return amplitudes_; }
    const std::vector<Amplitude>& amplitudes() const noexcept { return amplitudes_; }

    std::size_t flat_index(std::span<const Mode> tuple) const;

private:
    std::size_t particles_;
    std::size_t dim_;
    std::vector<Amplitude> amplitudes_;
};

/// Symmetrized (Bose) or antisymmetrized (Fermi) sum over all slot
/// permutations of the mode sequence, unnormalized: the inner product of two
/// embeddings divided by n! equals the occupation-basis ket_inner exactly.
/// A fermionic repeated mode antisymmetrizes to the zero vector.
LabeledVector embed_sequence(Statistics stats, std::span<const Mode> modes, std::size_t dim);

LabeledVector embed(const BasisKet& ket, std::size_t dim);

/// Linear extension of embed; all terms must share one particle count.
LabeledVector embed_state(const StateVector& x);

/// Plain dense inner product, conjugate-linear in the first argument.
/// Requires matching particle count and dimension.
Amplitude labeled_inner(const LabeledVector& u, const LabeledVector& v);

/// A first-quantized operator applied densely slot-by-slot: either
/// sum_i t(slot i), or the symmetric pair form (1/2) sum_{i != j} A(i) B(j).
class LabeledOperator {
public:
    LabeledVector apply(const LabeledVector& u) const;
    /// <u|Op|u> / <u|u>. Throws std::domain_error on a zero vector.
    Amplitude expectation(const LabeledVector& u) const;

    friend LabeledOperator first_quantized_one_body(const OneBodyCoeffs& t, std::size_t particles);
    friend LabeledOperator first_quantized_two_body(const OneBodyCoeffs& a, const OneBodyCoeffs& b,
                                                    std::size_t particles);

private:
    LabeledOperator() = default;
    std::size_t particles_ = 0;
    std::vector<OneBodyCoeffs> factors_;  // one entry: one-body; two entries: pair form
};

/// sum_{i=1..n} (identity (x) ... (x) t at slot i (x) ... (x) identity).
LabeledOperator first_quantized_one_body(const OneBodyCoeffs& t, std::size_t particles);

/// (1/2) sum over ordered slot pairs i != j of A at slot i times B at slot j;
/// for n = 2 this is exactly (A (x) B + B (x) A) / 2. Requires n >= 2.
LabeledOperator first_quantized_two_body(const OneBodyCoeffs& a, const OneBodyCoeffs& b,
                                         std::size_t particles);

struct ComparisonReport {
    std::size_t trials = 0;
    std::size_t checks = 0;
    double max_error = 0.0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Randomized cross-validation of the occupation-number formalism against the
/// labeled tensor-product one: exact n! * ket_inner agreement of embeddings,
/// and one-/two-body expectation agreement within 1e-10, over random states
/// and operators with n <= 3, D <= 3, both statistics. Deterministic per seed.
ComparisonReport compare_formulations(std::uint64_t seed, std::size_t trials);

}  // namespace qspace
