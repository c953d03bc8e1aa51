#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qspace/fock.hpp"

namespace qspace {

enum class LadderKind { Create, Annihilate };

struct LadderOp {
    LadderKind kind;
    Mode mode;

    bool operator==(const LadderOp&) const = default;
};

/// A coefficient-weighted ordered product of ladder operators. ops is stored
/// in written order; application is rightmost-first, matching how operator
/// products act on kets.
struct LadderString {
    Amplitude coeff;
    std::vector<LadderOp> ops;
};

/// A finite sum of ladder strings interpreted under one statistics tag.
class OperatorExpr {
public:
    explicit OperatorExpr(Statistics stats, std::vector<LadderString> strings = {})
        : stats_(stats), strings_(std::move(strings)) {}

    Statistics stats() const noexcept { return stats_; }
    const std::vector<LadderString>& strings() const noexcept { return strings_; }
    bool empty() const noexcept { return strings_.empty(); }

private:
    Statistics stats_;
    std::vector<LadderString> strings_;
};

/// Creation: prepend mode k to each term's sequence and canonicalize, folding
/// the fermionic phase; a fermionic term already containing k is annihilated
/// (null-norm quotient).
StateVector apply_create(Mode k, const StateVector& x);

/// Annihilation: for each term, sum over the positions holding mode k of the
/// ket with that position removed, with sign (-1)^position for fermions and
/// +1 for bosons. Adjoint to apply_create under inner().
StateVector apply_annihilate(Mode k, const StateVector& x);

/// coeff times the composition of the string's ladder operators, rightmost
/// applied first.
StateVector apply_string(const LadderString& s, const StateVector& x);

/// Sum of apply_string over the expression. Requires matching statistics.
StateVector apply_expr(const OperatorExpr& expr, const StateVector& x);

struct RelationViolation {
    Mode i = 0;
    Mode j = 0;
    std::size_t trial = 0;
    std::string relation;
    double residual = 0.0;
};

struct RelationReport {
    std::size_t checks = 0;
    double max_residual = 0.0;
    std::vector<RelationViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks [a_i, a_j^dag] = delta_ij, [a_i, a_j] = 0 and [a_i^dag, a_j^dag] = 0
/// on every trial state, for all mode pairs (i, j) below dim. Trials must be
/// bosonic. Violations are residual norms above tol.
RelationReport check_ccr(Mode dim, std::span<const StateVector> trials, double tol = kDefaultTol);

/// Fermionic counterpart: {c_i, c_j^dag} = delta_ij, {c_i, c_j} = 0,
/// {c_i^dag, c_j^dag} = 0.
RelationReport check_car(Mode dim, std::span<const StateVector> trials, double tol = kDefaultTol);

/// All canonical kets with at most max_particles particles over dim modes,
/// each as a unit-amplitude state, ordered by particle count then
/// lexicographically. For fermions the particle count also caps at dim.
std::vector<StateVector> basis_states(Statistics stats, Mode dim, std::size_t max_particles);

}  // namespace qspace
