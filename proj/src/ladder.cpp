#include "qspace/ladder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qspace/products.hpp"

namespace qspace {

namespace {

void require_mode(Mode k, Mode dim, const char* what) {
    if (k >= dim) {
        throw std::domain_error(std::string(what) + ": mode " + std::to_string(k) +
                                " outside basis of dimension " + std::to_string(dim));
    }
}

}  // namespace

StateVector apply_create(Mode k, const StateVector& x) {
    require_mode(k, x.dim(), "apply_create");
    StateBuilder out(x.stats(), x.dim());
    std::vector<Mode> scratch;
    for (const auto& [ket, amp] : x.terms()) {
        scratch.clear();
        scratch.push_back(k);
        scratch.insert(scratch.end(), ket.modes().begin(), ket.modes().end());
        out.add_term(scratch, amp);
    }
    return out.build();
}

StateVector apply_annihilate(Mode k, const StateVector& x) {
    require_mode(k, x.dim(), "apply_annihilate");
    StateBuilder out(x.stats(), x.dim());
    const bool fermi = x.stats() == Statistics::Fermi;
    std::vector<Mode> scratch;
    for (const auto& [ket, amp] : x.terms()) {
        const auto& modes = ket.modes();
        for (std::size_t pos = 0; pos < modes.size(); ++pos) {
            if (modes[pos] != k) {
                continue;
            }
            scratch.assign(modes.begin(), modes.end());
            scratch.erase(scratch.begin() + static_cast<std::ptrdiff_t>(pos));
            const double sign = fermi && (pos % 2 == 1) ? -1.0 : 1.0;
            out.add_term(scratch, amp * sign);
        }
    }
    return out.build();
}

StateVector apply_string(const LadderString& s, const StateVector& x) {
    StateVector current = x;
    for (auto it = s.ops.rbegin(); it != s.ops.rend(); ++it) {
        current = it->kind == LadderKind::Create ? apply_create(it->mode, current)
                                                 : apply_annihilate(it->mode, current);
        if (current.is_zero()) {
            break;
        }
    }
    return scale(s.coeff, current);
}

StateVector apply_expr(const OperatorExpr& expr, const StateVector& x) {
    if (expr.stats() != x.stats()) {
        throw std::domain_error("apply_expr: statistics mismatch");
    }
    StateVector total(x.stats(), x.dim());
    for (const LadderString& s : expr.strings()) {
        total = add(total, apply_string(s, x));
    }
    return total;
}

namespace {

// Residual of ([a_i, b_j] - delta) x or ({a_i, b_j} - delta) x where the two
// single-mode operations are passed in as callables.
template <typename OpI, typename OpJ>
StateVector bracket_residual(OpI&& op_i, OpJ&& op_j, double combine_sign, double delta,
                             const StateVector& x) {
    StateVector first = op_i(op_j(x));
    StateVector second = op_j(op_i(x));
    StateVector bracket = add(first, scale(Amplitude{combine_sign, 0.0}, second));
    if (delta != 0.0) {
        bracket = add(bracket, scale(Amplitude{-delta, 0.0}, x));
    }
    return bracket;
}

RelationReport check_relations(Mode dim, std::span<const StateVector> trials, double tol,
                               Statistics expected_stats, double combine_sign,
                               const char* pair_name, const char* lower_name,
                               const char* raise_name) {
    RelationReport report;
    for (std::size_t t = 0; t < trials.size(); ++t) {
        if (trials[t].stats() != expected_stats) {
            throw std::domain_error("relation check: trial state has wrong statistics");
        }
    }
    for (Mode i = 0; i < dim; ++i) {
        for (Mode j = 0; j < dim; ++j) {
            const double delta = i == j ? 1.0 : 0.0;
            for (std::size_t t = 0; t < trials.size(); ++t) {
                const StateVector& x = trials[t];
                auto lower_i = [i](const StateVector& s) { return apply_annihilate(i, s); };
                auto lower_j = [j](const StateVector& s) { return apply_annihilate(j, s); };
                auto raise_i = [i](const StateVector& s) { return apply_create(i, s); };
                auto raise_j = [j](const StateVector& s) { return apply_create(j, s); };

                const double r1 = norm(bracket_residual(lower_i, raise_j, combine_sign, delta, x));
                const double r2 = norm(bracket_residual(lower_i, lower_j, combine_sign, 0.0, x));
                const double r3 = norm(bracket_residual(raise_i, raise_j, combine_sign, 0.0, x));

                report.checks += 3;
                report.max_residual = std::max({report.max_residual, r1, r2, r3});
                if (r1 > tol) {
                    report.violations.push_back({i, j, t, pair_name, r1});
                }
                if (r2 > tol) {
                    report.violations.push_back({i, j, t, lower_name, r2});
                }
                if (r3 > tol) {
                    report.violations.push_back({i, j, t, raise_name, r3});
                }
            }
        }
    }
    return report;
}

}  // namespace

RelationReport check_ccr(Mode dim, std::span<const StateVector> trials, double tol) {
    return check_relations(dim, trials, tol, Statistics::Bose, -1.0, "[a_i, adag_j] - delta_ij",
                           "[a_i, a_j]", "[adag_i, adag_j]");
}

RelationReport check_car(Mode dim, std::span<const StateVector> trials, double tol) {
    return check_relations(dim, trials, tol, Statistics::Fermi, 1.0, "{c_i, cdag_j} - delta_ij",
                           "{c_i, c_j}", "{cdag_i, cdag_j}");
}

namespace {

void enumerate_kets(Statistics stats, Mode dim, std::size_t remaining, Mode next_min,
                    std::vector<Mode>& current, std::vector<StateVector>& out) {
    {
        StateBuilder b(stats, dim);
        b.add_term(current, Amplitude{1.0, 0.0});
        out.push_back(b.build());
    }
    if (remaining == 0) {
        return;
    }
    for (Mode m = next_min; m < dim; ++m) {
        current.push_back(m);
        const Mode following = stats == Statistics::Fermi ? m + 1 : m;
        enumerate_kets(stats, dim, remaining - 1, following, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<StateVector> basis_states(Statistics stats, Mode dim, std::size_t max_particles) {
    std::vector<StateVector> out;
    std::vector<Mode> current;
    enumerate_kets(stats, dim, max_particles, 0, current, out);
    // enumerate_kets emits depth-first; reorder by particle count then modes.
    std::sort(out.begin(), out.end(), [](const StateVector& a, const StateVector& b) {
        return a.terms().begin()->first < b.terms().begin()->first;
    });
    return out;
}

}  // namespace qspace
