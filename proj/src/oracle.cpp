#include "qspace/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qspace/ladder.hpp"
#include "qspace/products.hpp"

namespace qspace {

namespace {

constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 16;
constexpr std::size_t kMaxEmbedParticles = 10;  // n! permutation enumeration

std::size_t dense_size(std::size_t particles, std::size_t dim) {
    std::size_t size = 1;
    for (std::size_t s = 0; s < particles; ++s) {
        if (dim == 0 || size > kMaxAmplitudes / dim) {
            throw std::domain_error("LabeledVector: D^n exceeds the dense-representation cap");
        }
        size *= dim;
    }
    return size;
}

// Visits every permutation of 0..n-1 with its parity sign (Heap's algorithm).
template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    std::vector<std::size_t> c(n, 0);
    int sign = 1;
    visit(perm, sign);
    std::size_t i = 0;
    while (i < n) {
        if (c[i] < i) {
            std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
            sign = -sign;
            visit(perm, sign);
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
}

}  // namespace

LabeledVector::LabeledVector(std::size_t particles, std::size_t dim)
    : particles_(particles), dim_(dim), amplitudes_(dense_size(particles, dim)) {}

std::size_t LabeledVector::flat_index(std::span<const Mode> tuple) const {
    if (tuple.size() != particles_) {
        throw std::domain_error("LabeledVector: tuple length does not match particle count");
    }
    std::size_t flat = 0;
    for (Mode m : tuple) {
        if (m >= dim_) {
            throw std::domain_error("LabeledVector: tuple entry outside basis");
        }
        flat = flat * dim_ + m;
    }
    return flat;
}

LabeledVector embed_sequence(Statistics stats, std::span<const Mode> modes, std::size_t dim) {
    const std::size_t n = modes.size();
    if (n > kMaxEmbedParticles) {
        throw std::domain_error("embed: too many particles for permutation enumeration");
    }
    LabeledVector out(n, dim);
    std::vector<Mode> tuple(n);
    for_each_permutation(n, [&](const std::vector<std::size_t>& perm, int sign) {
        for (std::size_t s = 0; s < n; ++s) {
            tuple[s] = modes[perm[s]];
        }
        out.at(tuple) += stats == Statistics::Fermi ? static_cast<double>(sign) : 1.0;
    });
    return out;
}

LabeledVector embed(const BasisKet& ket, std::size_t dim) {
    return embed_sequence(ket.stats(), ket.modes(), dim);
}

LabeledVector embed_state(const StateVector& x) {
    if (x.is_zero()) {
        return LabeledVector(0, x.dim());
    }
    const std::size_t n = x.terms().begin()->first.particle_count();
    LabeledVector out(n, x.dim());
    for (const auto& [ket, amp] : x.terms()) {
        if (ket.particle_count() != n) {
            throw std::domain_error("embed_state: terms mix particle counts");
        }
        LabeledVector part = embed(ket, x.dim());
        for (std::size_t f = 0; f < out.size(); ++f) {
            out.amplitudes()[f] += amp * part.amplitudes()[f];
        }
    }
    return out;
}

Amplitude labeled_inner(const LabeledVector& u, const LabeledVector& v) {
    if (u.particle_count() != v.particle_count() || u.dim() != v.dim()) {
        throw std::domain_error("labeled_inner: shape mismatch");
    }
    Amplitude total{};
    for (std::size_t f = 0; f < u.size(); ++f) {
        total += std::conj(u.amplitudes()[f]) * v.amplitudes()[f];
    }
    return total;
}

namespace {

// Applies a one-body matrix at a single slot of the dense representation.
LabeledVector apply_at_slot(const OneBodyCoeffs& t, std::size_t slot, const LabeledVector& u) {
    LabeledVector out(u.particle_count(), u.dim());
    const std::size_t dim = u.dim();
    std::size_t stride = 1;
    for (std::size_t s = slot + 1; s < u.particle_count(); ++s) {
        stride *= dim;
    }
    for (std::size_t f = 0; f < u.size(); ++f) {
        const std::size_t digit = (f / stride) % dim;
        const std::size_t base = f - digit * stride;
        Amplitude sum{};
        for (std::size_t j = 0; j < dim; ++j) {
            sum += t.at(digit, j) * u.amplitudes()[base + j * stride];
        }
        out.amplitudes()[f] = sum;
    }
    return out;
}

}  // namespace

LabeledVector LabeledOperator::apply(const LabeledVector& u) const {
    if (u.particle_count() != particles_) {
        throw std::domain_error("LabeledOperator: particle count mismatch");
    }
    LabeledVector out(u.particle_count(), u.dim());
    if (factors_.size() == 1) {
        for (std::size_t s = 0; s < particles_; ++s) {
            LabeledVector term = apply_at_slot(factors_[0], s, u);
            for (std::size_t f = 0; f < out.size(); ++f) {
                out.amplitudes()[f] += term.amplitudes()[f];
            }
        }
        return out;
    }
    for (std::size_t i = 0; i < particles_; ++i) {
        for (std::size_t j = 0; j < particles_; ++j) {
            if (i == j) {
                continue;
            }
            LabeledVector term = apply_at_slot(factors_[0], i, apply_at_slot(factors_[1], j, u));
            for (std::size_t f = 0; f < out.size(); ++f) {
                out.amplitudes()[f] += 0.5 * term.amplitudes()[f];
            }
        }
    }
    return out;
}

Amplitude LabeledOperator::expectation(const LabeledVector& u) const {
    const Amplitude self = labeled_inner(u, u);
    if (self.real() <= kDefaultTol * kDefaultTol) {
        throw std::domain_error("LabeledOperator::expectation: zero vector");
    }
    return labeled_inner(u, apply(u)) / self.real();
}

LabeledOperator first_quantized_one_body(const OneBodyCoeffs& t, std::size_t particles) {
    if (particles < 1) {
        throw std::domain_error("first_quantized_one_body: need at least one particle");
    }
    LabeledOperator op;
    op.particles_ = particles;
    op.factors_ = {t};
    return op;
}

LabeledOperator first_quantized_two_body(const OneBodyCoeffs& a, const OneBodyCoeffs& b,
                                         std::size_t particles) {
    if (particles < 2) {
        throw std::domain_error("first_quantized_two_body: need at least two particles");
    }
    if (a.dim() != b.dim()) {
        throw std::domain_error("first_quantized_two_body: dimension mismatch");
    }
    LabeledOperator op;
    op.particles_ = particles;
    op.factors_ = {a, b};
    return op;
}

namespace {

struct TrialRng {
    std::mt19937_64 engine;

    explicit TrialRng(std::uint64_t seed) : engine(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine() % n); }
    double unit() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
    double signed_unit() { return 2.0 * unit() - 1.0; }
    Amplitude amplitude() { return {signed_unit(), signed_unit()}; }
    // Small Gaussian integer, exactly representable through conjugation and
    // products: keeps the embedding comparison an integer identity.
    Amplitude integer_amplitude() {
        return {static_cast<double>(engine() % 7) - 3.0, static_cast<double>(engine() % 7) - 3.0};
    }
};

BasisKet random_ket(TrialRng& rng, Statistics stats, std::size_t n, std::size_t dim) {
    std::vector<Mode> modes;
    if (stats == Statistics::Fermi) {
        std::vector<Mode> pool(dim);
        for (std::size_t m = 0; m < dim; ++m) {
            pool[m] = static_cast<Mode>(m);
        }
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t pick = k + rng.below(dim - k);
            std::swap(pool[k], pool[pick]);
            modes.push_back(pool[k]);
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            modes.push_back(static_cast<Mode>(rng.below(dim)));
        }
    }
    std::sort(modes.begin(), modes.end());
    return BasisKet(stats, std::move(modes));
}

StateVector random_state(TrialRng& rng, Statistics stats, std::size_t n, std::size_t dim) {
    StateBuilder b(stats, static_cast<Mode>(dim));
    const std::size_t term_count = 1 + rng.below(3);
    for (std::size_t t = 0; t < term_count; ++t) {
        b.add_ket(random_ket(rng, stats, n, dim), rng.amplitude());
    }
    return b.build();
}

OneBodyCoeffs random_hermitian(TrialRng& rng, std::size_t dim) {
    OneBodyCoeffs t(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        t.at(a, a) = Amplitude{rng.signed_unit(), 0.0};
        for (std::size_t b = a + 1; b < dim; ++b) {
            t.at(a, b) = rng.amplitude();
            t.at(b, a) = std::conj(t.at(a, b));
        }
    }
    return t;
}

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t k = 2; k <= n; ++k) {
        f *= static_cast<double>(k);
    }
    return f;
}

}  // namespace

ComparisonReport compare_formulations(std::uint64_t seed, std::size_t trials) {
    ComparisonReport report;
    TrialRng rng(seed);
    report.trials = trials;

    auto record = [&](double err, std::size_t trial, const std::string& what) {
        report.checks += 1;
        report.max_error = std::max(report.max_error, err);
        if (err > 1e-10) {
            std::ostringstream msg;
            msg << "trial " << trial << ": " << what << " error " << err;
            report.failures.push_back(msg.str());
        }
    };

    // Zero-state edge: an empty state embeds to the zero vector and both
    // formulations give inner product 0.
    {
        const StateVector zero(Statistics::Fermi, 2);
        const LabeledVector u = embed_state(zero);
        const double err = std::abs(labeled_inner(u, u) - inner(zero, zero));
        record(err, 0, "zero-state inner product");
    }

    for (std::size_t trial = 1; trial <= trials; ++trial) {
        const Statistics stats = rng.below(2) == 0 ? Statistics::Bose : Statistics::Fermi;
        const std::size_t dim = 1 + rng.below(3);

        // Exact integer identity on basis kets: <embed x, embed y> = n! <x, y>.
        {
            const std::size_t max_n = stats == Statistics::Fermi ? std::min<std::size_t>(3, dim) : 3;
            const std::size_t n = rng.below(max_n + 1);
            const BasisKet x = random_ket(rng, stats, n, dim);
            const BasisKet y = random_ket(rng, stats, n, dim);
            const Amplitude lhs = labeled_inner(embed(x, dim), embed(y, dim));
            const Amplitude rhs = factorial(n) * ket_inner(x, y);
            if (lhs != rhs) {
                std::ostringstream msg;
                msg << "trial " << trial << ": embedding inner product not exactly " << rhs.real()
                    << " (got " << lhs.real() << ") for " << format_ket(x) << ", " << format_ket(y);
                report.failures.push_back(msg.str());
            }
            report.checks += 1;

            // Same identity, extended to integer-amplitude combinations: both
            // routes stay in integer arithmetic, so equality is exact.
            StateBuilder bx(stats, static_cast<Mode>(dim));
            StateBuilder by(stats, static_cast<Mode>(dim));
            bx.add_ket(x, rng.integer_amplitude());
            bx.add_ket(random_ket(rng, stats, n, dim), rng.integer_amplitude());
            by.add_ket(y, rng.integer_amplitude());
            const StateVector sx = bx.build();
            const StateVector sy = by.build();
            if (!sx.is_zero() && !sy.is_zero()) {
                const Amplitude state_lhs = labeled_inner(embed_state(sx), embed_state(sy));
                const Amplitude state_rhs = factorial(n) * inner(sx, sy);
                if (state_lhs != state_rhs) {
                    std::ostringstream msg;
                    msg << "trial " << trial << ": integer-amplitude inner product mismatch ("
                        << state_lhs.real() << " vs " << state_rhs.real() << ")";
                    report.failures.push_back(msg.str());
                }
                report.checks += 1;
            }
        }

        // One-body expectation agreement.
        {
            const std::size_t max_n = stats == Statistics::Fermi ? std::min<std::size_t>(3, dim) : 3;
            if (max_n >= 1) {
                const std::size_t n = 1 + rng.below(max_n);
                const StateVector x = random_state(rng, stats, n, dim);
                if (norm(x) > kDefaultTol) {
                    const OneBodyCoeffs t = random_hermitian(rng, dim);
                    const Amplitude q = expectation(build_one_body(t, stats), x);
                    const Amplitude ref =
                        first_quantized_one_body(t, n).expectation(embed_state(x));
                    record(std::abs(q - ref), trial, "one-body expectation");
                }
            }
        }

        // Two-body (pair correlation) expectation agreement.
        {
            const std::size_t max_n = stats == Statistics::Fermi ? std::min<std::size_t>(3, dim) : 3;
            if (max_n >= 2) {
                const std::size_t n = 2 + rng.below(max_n - 1);
                const StateVector x = random_state(rng, stats, n, dim);
                if (norm(x) > kDefaultTol) {
                    const OneBodyCoeffs a = random_hermitian(rng, dim);
                    const OneBodyCoeffs b = random_hermitian(rng, dim);
                    const Amplitude q =
                        expectation(build_two_body(correlation_coeffs(a, b), stats), x);
                    const Amplitude ref =
                        first_quantized_two_body(a, b, n).expectation(embed_state(x));
                    record(std::abs(q - ref), trial, "two-body expectation");
                }
            }
        }
    }
    return report;
}

}  // namespace qspace
