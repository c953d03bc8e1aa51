#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qspace {

/// Index of a single-particle level. Valid indices are < the dimension D of
/// the declared single-particle basis.
using Mode = std::uint32_t;

using Amplitude = std::complex<double>;

/// Exchange statistics. Every ket, state and inner product carries exactly
/// one tag; mixed-tag operations are domain errors.
enum class Statistics { Bose, Fermi };

const char* to_string(Statistics stats);

/// Tolerance used for approximate comparisons (norms, similarity, Hermiticity).
/// Exact-zero pruning of amplitudes is separate and happens at construction.
inline constexpr double kDefaultTol = 1e-12;

/// An occupation-number basis ket: a statistics tag plus a canonical sequence
/// of occupied mode indices. Canonical means sorted non-decreasing for bosons
/// and strictly increasing for fermions; the multiplicity of a mode in the
/// sequence is its occupation number. Construct through canonicalize() unless
/// the sequence is already canonical.
class BasisKet {
public:
    BasisKet(Statistics stats, std::vector<Mode> modes);

    static BasisKet vacuum_ket(Statistics stats) { return BasisKet(stats, {}); }

    Statistics stats() const noexcept { return stats_; }
    const std::vector<Mode>& modes() const noexcept { return modes_; }
    std::size_t particle_count() const noexcept { return modes_.size(); }

    static bool is_canonical(Statistics stats, std::span<const Mode> modes) noexcept;

    bool operator==(const BasisKet& other) const = default;
    /// Orders by particle count, then lexicographically by modes.
    bool operator<(const BasisKet& other) const noexcept;

private:
    Statistics stats_;
    std::vector<Mode> modes_;
};

std::string format_ket(const BasisKet& ket);

/// Result of bringing a mode sequence to canonical form. A fermionic sequence
/// with a repeated mode has no canonical ket (it is a null-norm vector,
/// quotiented to zero); ket is empty and phase is +1 in that case.
struct Canonical {
    std::optional<BasisKet> ket;
    int phase = 1;  // +1 or -1; sorting-permutation parity for fermions
};

/// Sorts a mode sequence into canonical form. Bosonic phase is always +1;
/// fermionic phase is the parity sign of the sorting permutation. Throws
/// std::domain_error if any mode index is >= dim. Idempotent on canonical input.
Canonical canonicalize(Statistics stats, std::span<const Mode> modes, Mode dim);

/// A finite complex linear combination of canonical basis kets over a declared
/// single-particle basis of dimension D. Immutable after construction; all
/// stored amplitudes are finite and non-zero, all keys canonical and share the
/// statistics tag. The default-constructed-per-space state (no terms) is the
/// zero vector.
class StateVector {
public:
    StateVector(Statistics stats, Mode dim) : stats_(stats), dim_(dim) {}

    Statistics stats() const noexcept { return stats_; }
    Mode dim() const noexcept { return dim_; }
    const std::map<BasisKet, Amplitude>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Amplitude of a canonical ket; zero if the ket is not present.
    Amplitude amplitude(const BasisKet& ket) const;

    bool operator==(const StateVector& other) const = default;

private:
    friend class StateBuilder;
    Statistics stats_;
    Mode dim_;
    std::map<BasisKet, Amplitude> terms_;
};

/// Accumulates terms into a StateVector. Input mode sequences need not be
/// canonical: they are canonicalized with the fermionic phase folded into the
/// amplitude, and fermionic repeated-mode terms are dropped (the null-norm
/// quotient). Exact-zero amplitudes are pruned at build().
class StateBuilder {
public:
    StateBuilder(Statistics stats, Mode dim) : state_(stats, dim) {}

    StateBuilder& add_term(std::span<const Mode> modes, Amplitude amp);
    StateBuilder& add_ket(const BasisKet& ket, Amplitude amp);

    StateVector build();

private:
    StateVector state_;
};

/// The vacuum: the single empty-modes ket with amplitude 1.
StateVector vacuum(Statistics stats, Mode dim);

/// Term-wise sum. Requires matching statistics and dimension.
StateVector add(const StateVector& x, const StateVector& y);

/// Scalar multiple; g = 0 yields the zero state. g must be finite.
StateVector scale(Amplitude g, const StateVector& x);

/// Occupation numbers of a ket: mode -> multiplicity. Counts sum to the
/// particle number.
std::map<Mode, std::size_t> occupation(const BasisKet& ket);

}  // namespace qspace
