#include <doctest.h>

#include <json.hpp>

#include "qspace/products.hpp"
#include "qspace/state_json.hpp"
#include "test_support.hpp"

using namespace qspace;
using nlohmann::json;

TEST_CASE("state round trip preserves canonical terms") {
    qtest::Rng rng(71);
    for (int round = 0; round < 50; ++round) {
        const Statistics stats = round % 2 == 0 ? Statistics::Bose : Statistics::Fermi;
        const StateVector x = qtest::random_state(rng, stats, 3, 3);
        const LoadedState reloaded = state_from_json(state_to_json(x));
        CHECK(reloaded.state == x);
        CHECK(reloaded.notes.empty());
    }
}

TEST_CASE("non-canonical input folds the phase and reports a note") {
    const json j = {{"stats", "fermi"},
                    {"dim", 2},
                    {"terms", json::array({{{"modes", {1, 0}}, {"re", 1.0}, {"im", 0.0}}})}};
    const LoadedState loaded = state_from_json(j);
    CHECK(loaded.state.amplitude(BasisKet(Statistics::Fermi, {0, 1})) == Amplitude{-1.0, 0.0});
    REQUIRE(loaded.notes.size() == 1);
    CHECK(loaded.notes[0].find("phase -1") != std::string::npos);
}

TEST_CASE("repeated-mode fermionic terms are dropped with a note") {
    const json j = {{"stats", "fermi"},
                    {"dim", 2},
                    {"terms", json::array({{{"modes", {1, 1}}, {"re", 1.0}, {"im", 0.0}},
                                           {{"modes", {0, 1}}, {"re", 0.5}, {"im", 0.0}}})}};
    const LoadedState loaded = state_from_json(j);
    CHECK(loaded.state.size() == 1);
    REQUIRE(loaded.notes.size() == 1);
    CHECK(loaded.notes[0].find("null norm") != std::string::npos);
}

TEST_CASE("schema violations raise FormatError") {
    CHECK_THROWS_AS(state_from_json(json::array()), FormatError);
    CHECK_THROWS_AS(state_from_json({{"stats", "anyon"}, {"dim", 2}, {"terms", json::array()}}),
                    FormatError);
    CHECK_THROWS_AS(state_from_json({{"stats", "bose"}, {"terms", json::array()}}), FormatError);
    CHECK_THROWS_AS(state_from_json({{"stats", "bose"}, {"dim", 2}}), FormatError);
    // Mode outside the declared basis.
    CHECK_THROWS_AS(
        state_from_json({{"stats", "bose"},
                         {"dim", 2},
                         {"terms", json::array({{{"modes", {2}}, {"re", 1.0}, {"im", 0.0}}})}}),
        FormatError);
    // Non-finite amplitude.
    CHECK_THROWS_AS(
        state_from_json({{"stats", "bose"},
                         {"dim", 2},
                         {"terms", json::array({{{"modes", {0}},
                                                 {"re", std::numeric_limits<double>::infinity()},
                                                 {"im", 0.0}}})}}),
        FormatError);
}

TEST_CASE("operator expressions round trip") {
    const json j = {{"stats", "fermi"},
                    {"dim", 2},
                    {"strings", json::array({{{"re", 1.0},
                                              {"im", 0.0},
                                              {"ops", json::array({{{"kind", "create"}, {"mode", 0}},
                                                                   {{"kind", "annihilate"}, {"mode", 0}}})}},
                                             {{"re", -1.0},
                                              {"im", 0.0},
                                              {"ops", json::array({{{"kind", "create"}, {"mode", 1}},
                                                                   {{"kind", "annihilate"}, {"mode", 1}}})}}})}};
    const LoadedOperator op = operator_from_json(j);
    CHECK(op.dim == 2);
    REQUIRE(op.expr.strings().size() == 2);
    CHECK(op.expr.strings()[0].ops[0].kind == LadderKind::Create);

    const LoadedOperator reloaded = operator_from_json(operator_to_json(op.expr, op.dim));
    REQUIRE(reloaded.expr.strings().size() == 2);
    CHECK(reloaded.expr.strings()[1].coeff == Amplitude{-1.0, 0.0});
    CHECK(reloaded.expr.strings()[1].ops == op.expr.strings()[1].ops);

    // This is the sigma_z expression: check it acts correctly after parsing.
    StateBuilder b(Statistics::Fermi, 2);
    b.add_term(std::vector<Mode>{1}, {1.0, 0.0});
    const StateVector down = b.build();
    CHECK(apply_expr(reloaded.expr, down) == scale(Amplitude{-1.0, 0.0}, down));
}

TEST_CASE("operator schema violations raise FormatError") {
    CHECK_THROWS_AS(operator_from_json({{"stats", "fermi"}, {"dim", 2}}), FormatError);
    CHECK_THROWS_AS(
        operator_from_json({{"stats", "fermi"},
                            {"dim", 2},
                            {"strings", json::array({{{"re", 1.0},
                                                      {"im", 0.0},
                                                      {"ops", json::array({{{"kind", "destroy"},
                                                                            {"mode", 0}}})}}})}}),
        FormatError);
    CHECK_THROWS_AS(
        operator_from_json({{"stats", "fermi"},
                            {"dim", 2},
                            {"strings", json::array({{{"re", 1.0},
                                                      {"im", 0.0},
                                                      {"ops", json::array({{{"kind", "create"},
                                                                            {"mode", 5}}})}}})}}),
        FormatError);
}
