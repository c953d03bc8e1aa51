#include "qspace/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qspace/products.hpp"

namespace qspace {

OneBodyCoeffs::OneBodyCoeffs(std::size_t dim, std::vector<Amplitude> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw std::domain_error("OneBodyCoeffs: entry count does not match dimension");
    }
}

bool OneBodyCoeffs::is_hermitian(double tol) const {
    for (std::size_t a = 0; a < dim_; ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            if (std::abs(at(a, b) - std::conj(at(b, a))) > tol) {
                return false;
            }
        }
    }
    return true;
}

OperatorExpr build_one_body(const OneBodyCoeffs& t, Statistics stats) {
    std::vector<LadderString> strings;
    for (std::size_t a = 0; a < t.dim(); ++a) {
        for (std::size_t b = 0; b < t.dim(); ++b) {
            const Amplitude coeff = t.at(a, b);
            if (coeff == Amplitude{}) {
                continue;
            }
            strings.push_back({coeff,
                               {{LadderKind::Create, static_cast<Mode>(a)},
                                {LadderKind::Annihilate, static_cast<Mode>(b)}}});
        }
    }
    return OperatorExpr(stats, std::move(strings));
}

OneBodyCoeffs one_body_from_spectral(std::span<const double> eigvals,
                                     const OneBodyCoeffs& eigvecs) {
    const std::size_t dim = eigvecs.dim();
    if (eigvals.size() != dim) {
        throw std::domain_error("one_body_from_spectral: eigenvalue count does not match dimension");
    }
    // Columns must be orthonormal.
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t l = 0; l < dim; ++l) {
            Amplitude dot{};
            for (std::size_t a = 0; a < dim; ++a) {
                dot += std::conj(eigvecs.at(a, k)) * eigvecs.at(a, l);
            }
            const Amplitude expected = k == l ? Amplitude{1.0, 0.0} : Amplitude{};
            if (std::abs(dot - expected) > 1e-10) {
                throw std::domain_error("one_body_from_spectral: eigenvector columns not orthonormal");
            }
        }
    }
    OneBodyCoeffs t(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            Amplitude sum{};
            for (std::size_t k = 0; k < dim; ++k) {
                sum += eigvecs.at(a, k) * eigvals[k] * std::conj(eigvecs.at(b, k));
            }
            t.at(a, b) = sum;
        }
    }
    return t;
}

OperatorExpr build_two_body(const TwoBodyCoeffs& v, Statistics stats) {
    std::vector<LadderString> strings;
    for (std::size_t a = 0; a < v.dim(); ++a) {
        for (std::size_t b = 0; b < v.dim(); ++b) {
            for (std::size_t c = 0; c < v.dim(); ++c) {
                for (std::size_t d = 0; d < v.dim(); ++d) {
                    const Amplitude coeff = v.at(a, b, c, d);
                    if (coeff == Amplitude{}) {
                        continue;
                    }
                    // adag_a adag_b a_d a_c, rightmost applied first.
                    strings.push_back({coeff * 0.5,
                                       {{LadderKind::Create, static_cast<Mode>(a)},
                                        {LadderKind::Create, static_cast<Mode>(b)},
                                        {LadderKind::Annihilate, static_cast<Mode>(d)},
                                        {LadderKind::Annihilate, static_cast<Mode>(c)}}});
                }
            }
        }
    }
    return OperatorExpr(stats, std::move(strings));
}

TwoBodyCoeffs correlation_coeffs(const OneBodyCoeffs& a, const OneBodyCoeffs& b) {
    if (a.dim() != b.dim()) {
        throw std::domain_error("correlation_coeffs: dimension mismatch");
    }
    const std::size_t dim = a.dim();
    TwoBodyCoeffs v(dim);
    for (std::size_t p = 0; p < dim; ++p) {
        for (std::size_t q = 0; q < dim; ++q) {
            for (std::size_t r = 0; r < dim; ++r) {
                for (std::size_t s = 0; s < dim; ++s) {
                    v.at(p, q, r, s) = 0.5 * (a.at(p, r) * b.at(q, s) + b.at(p, r) * a.at(q, s));
                }
            }
        }
    }
    return v;
}

OneBodyCoeffs sigma_n(const Direction& d) {
    if (!(d.theta >= 0.0 && d.theta <= std::numbers::pi)) {
        throw std::domain_error("sigma_n: theta outside [0, pi]");
    }
    if (!(d.phi >= 0.0 && d.phi < 2.0 * std::numbers::pi)) {
        throw std::domain_error("sigma_n: phi outside [0, 2pi)");
    }
    const double ct = std::cos(d.theta);
    const double st = std::sin(d.theta);
    OneBodyCoeffs t(2);
    t.at(0, 0) = Amplitude{ct, 0.0};
    t.at(0, 1) = std::polar(st, -d.phi);
    t.at(1, 0) = std::polar(st, d.phi);
    t.at(1, 1) = Amplitude{-ct, 0.0};
    return t;
}

OneBodyCoeffs sigma_z() {
    OneBodyCoeffs t(2);
    t.at(0, 0) = Amplitude{1.0, 0.0};
    t.at(1, 1) = Amplitude{-1.0, 0.0};
    return t;
}

Amplitude expectation(const OperatorExpr& a, const StateVector& x) {
    const Amplitude self = inner(x, x);
    if (std::sqrt(std::max(self.real(), 0.0)) <= kDefaultTol) {
        throw std::domain_error("expectation: zero-norm state");
    }
    return inner(x, apply_expr(a, x)) / self.real();
}

StateVector up_down_pair_state() {
    StateBuilder b(Statistics::Fermi, 2);
    b.add_term(std::vector<Mode>{0, 1}, Amplitude{1.0, 0.0});
    return b.build();
}

std::vector<CorrelationSample> spin_correlation_scan(const StateVector& pair_state,
                                                     std::size_t theta_steps,
                                                     std::size_t phi_steps) {
    if (theta_steps < 1 || phi_steps < 1) {
        throw std::domain_error("spin_correlation_scan: grid steps must be >= 1");
    }
    if (pair_state.dim() != 2) {
        throw std::domain_error("spin_correlation_scan: state must live in a 2-mode basis");
    }
    const OneBodyCoeffs z = sigma_z();
    std::vector<CorrelationSample> samples;
    samples.reserve(theta_steps * phi_steps);
    for (std::size_t ti = 0; ti < theta_steps; ++ti) {
        const double theta =
            theta_steps == 1 ? 0.0
                             : std::numbers::pi * static_cast<double>(ti) /
                                   static_cast<double>(theta_steps - 1);
        for (std::size_t pj = 0; pj < phi_steps; ++pj) {
            const double phi =
                2.0 * std::numbers::pi * static_cast<double>(pj) / static_cast<double>(phi_steps);
            const OneBodyCoeffs n = sigma_n({theta, phi});
            const OperatorExpr corr =
                build_two_body(correlation_coeffs(z, n), pair_state.stats());
            samples.push_back({theta, phi, expectation(corr, pair_state).real()});
        }
    }
    return samples;
}

}  // namespace qspace
