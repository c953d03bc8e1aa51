#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "qspace/fock.hpp"
#include "qspace/products.hpp"
#include "test_support.hpp"

using namespace qspace;

namespace {

StateVector single(Statistics stats, Mode dim, std::vector<Mode> modes, Amplitude amp) {
    StateBuilder b(stats, dim);
    b.add_term(modes, amp);
    return b.build();
}

}  // namespace

TEST_CASE("canonicalize sorts and tracks the fermionic parity") {
    const Canonical swapped = canonicalize(Statistics::Fermi, std::vector<Mode>{1, 0}, 2);
    REQUIRE(swapped.ket.has_value());
    CHECK(swapped.ket->modes() == std::vector<Mode>{0, 1});
    CHECK(swapped.phase == -1);

    const Canonical repeated = canonicalize(Statistics::Fermi, std::vector<Mode>{0, 0}, 2);
    CHECK(!repeated.ket.has_value());
    CHECK(repeated.phase == 1);

    const Canonical bose = canonicalize(Statistics::Bose, std::vector<Mode>{2, 0, 2}, 3);
    REQUIRE(bose.ket.has_value());
    CHECK(bose.ket->modes() == std::vector<Mode>{0, 2, 2});
    CHECK(bose.phase == 1);
}

TEST_CASE("canonicalize rejects out-of-range modes and is idempotent") {
    CHECK_THROWS_AS(canonicalize(Statistics::Bose, std::vector<Mode>{3}, 3), std::domain_error);

    qtest::Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        const Statistics stats = round % 2 == 0 ? Statistics::Bose : Statistics::Fermi;
        const std::size_t dim = 1 + rng.below(5);
        const std::size_t cap = stats == Statistics::Fermi ? dim : 5;
        const auto modes = qtest::random_modes(rng, stats, rng.below(cap + 1), dim);
        const Canonical first = canonicalize(stats, modes, static_cast<Mode>(dim));
        if (!first.ket) {
            continue;
        }
        const Canonical again = canonicalize(stats, first.ket->modes(), static_cast<Mode>(dim));
        REQUIRE(again.ket.has_value());
        CHECK(*again.ket == *first.ket);
        CHECK(again.phase == 1);
    }
}

TEST_CASE("canonical kets are permutation invariant up to the parity phase") {
    qtest::Rng rng(11);
    for (int round = 0; round < 500; ++round) {
        const Statistics stats = round % 2 == 0 ? Statistics::Bose : Statistics::Fermi;
        const std::size_t dim = 1 + rng.below(5);
        const std::size_t cap = stats == Statistics::Fermi ? dim : 6;
        const auto modes = qtest::random_modes(rng, stats, rng.below(cap + 1), dim);

        std::vector<std::size_t> perm(modes.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t k = perm.size(); k > 1; --k) {
            std::swap(perm[k - 1], perm[rng.below(k)]);
        }
        std::vector<Mode> shuffled(modes.size());
        for (std::size_t s = 0; s < modes.size(); ++s) {
            shuffled[s] = modes[perm[s]];
        }

        const Canonical base = canonicalize(stats, modes, static_cast<Mode>(dim));
        const Canonical other = canonicalize(stats, shuffled, static_cast<Mode>(dim));
        REQUIRE(base.ket.has_value() == other.ket.has_value());
        if (!base.ket) {
            continue;
        }
        CHECK(*base.ket == *other.ket);
        if (stats == Statistics::Fermi) {
            CHECK(other.phase == base.phase * qtest::parity_sign(perm));
        } else {
            CHECK(other.phase == 1);
        }
    }
}

TEST_CASE("vacuum is the unit-amplitude empty ket") {
    for (Statistics stats : {Statistics::Bose, Statistics::Fermi}) {
        const StateVector v = vacuum(stats, 3);
        REQUIRE(v.size() == 1);
        CHECK(v.amplitude(BasisKet::vacuum_ket(stats)) == Amplitude{1.0, 0.0});
        CHECK(inner(v, v) == Amplitude{1.0, 0.0});
    }
}

TEST_CASE("add combines term-wise and prunes exact zeros") {
    const StateVector plus_minus = single(Statistics::Fermi, 2, {0, 1}, {1.0, 0.0});
    const StateVector negated = single(Statistics::Fermi, 2, {0, 1}, {-1.0, 0.0});
    CHECK(add(plus_minus, negated).is_zero());

    const StateVector a = single(Statistics::Fermi, 3, {0}, {1.0, 0.0});
    const StateVector b = single(Statistics::Fermi, 3, {1}, {0.0, 2.0});
    const StateVector sum = add(a, b);
    CHECK(sum.size() == 2);
    CHECK(sum.amplitude(BasisKet(Statistics::Fermi, {0})) == Amplitude{1.0, 0.0});
    CHECK(sum.amplitude(BasisKet(Statistics::Fermi, {1})) == Amplitude{0.0, 2.0});

    const StateVector bose(Statistics::Bose, 3);
    CHECK_THROWS_AS(add(a, bose), std::domain_error);
    const StateVector wrong_dim(Statistics::Fermi, 2);
    CHECK_THROWS_AS(add(a, wrong_dim), std::domain_error);
}

TEST_CASE("add does not re-canonicalize already-canonical keys") {
    // Callers fold phases at construction; adding |+-) and the canonicalized
    // form of [1, 0] (phase -1) cancels.
    StateBuilder b(Statistics::Fermi, 2);
    b.add_term(std::vector<Mode>{0, 1}, {1.0, 0.0});
    b.add_term(std::vector<Mode>{1, 0}, {1.0, 0.0});
    CHECK(b.build().is_zero());
}

TEST_CASE("scale multiplies amplitudes and annihilates at zero") {
    const StateVector x = single(Statistics::Fermi, 2, {0, 1}, {1.0, -1.0});
    CHECK(scale(Amplitude{}, x).is_zero());
    CHECK(scale(Amplitude{1.0, 0.0}, x) == x);
    const StateVector rotated = scale(Amplitude{0.0, 1.0}, x);
    CHECK(rotated.amplitude(BasisKet(Statistics::Fermi, {0, 1})) == Amplitude{1.0, 1.0});
    CHECK_THROWS_AS(scale(Amplitude{1.0 / 0.0, 0.0}, x), std::domain_error);
}

TEST_CASE("occupation counts multiplicities") {
    const BasisKet bose(Statistics::Bose, {0, 0, 2});
    const auto counts = occupation(bose);
    REQUIRE(counts.size() == 2);
    CHECK(counts.at(0) == 2);
    CHECK(counts.at(2) == 1);

    const auto fermi = occupation(BasisKet(Statistics::Fermi, {0, 1}));
    CHECK(fermi.at(0) == 1);
    CHECK(fermi.at(1) == 1);

    CHECK(occupation(BasisKet::vacuum_ket(Statistics::Bose)).empty());
}

TEST_CASE("basis kets require canonical sequences") {
    CHECK_THROWS_AS(BasisKet(Statistics::Fermi, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(BasisKet(Statistics::Fermi, {0, 0}), std::domain_error);
    CHECK_NOTHROW(BasisKet(Statistics::Bose, {0, 0}));
}

TEST_CASE("state space axioms hold on random states") {
    qtest::Rng rng(23);
    for (int round = 0; round < 100; ++round) {
        const Statistics stats = round % 2 == 0 ? Statistics::Bose : Statistics::Fermi;
        const std::size_t dim = 1 + rng.below(4);
        const StateVector x = qtest::random_state(rng, stats, dim, 3);
        const StateVector y = qtest::random_state(rng, stats, dim, 3);
        const StateVector z = qtest::random_state(rng, stats, dim, 3);
        const Amplitude g = rng.amplitude();
        const Amplitude h = rng.amplitude();

        // Commutativity is order-identical term-wise, so exact.
        CHECK(add(x, y) == add(y, x));
        // Associativity and distributivity regroup floating sums: tolerance.
        CHECK(is_similar(add(add(x, y), z), add(x, add(y, z))));
        CHECK(is_similar(scale(g, add(x, y)), add(scale(g, x), scale(g, y))));
        CHECK(is_similar(scale(g + h, x), add(scale(g, x), scale(h, x))));
        CHECK(is_similar(scale(g, scale(h, x)), scale(g * h, x)));

        // Identity and inverse are exact.
        CHECK(scale(Amplitude{1.0, 0.0}, x) == x);
        CHECK(add(x, StateVector(stats, static_cast<Mode>(dim))) == x);
        CHECK(add(x, scale(Amplitude{-1.0, 0.0}, x)).is_zero());
    }
}
