#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qspace/fock.hpp"
#include "qspace/ladder.hpp"

namespace qspace {

/// Malformed or schema-violating input (missing fields, bad statistics tag,
/// out-of-range modes, non-finite numbers).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedState {
    StateVector state;
    /// One human-readable note per input term that was re-canonicalized or
    /// dropped (fermionic repeated mode).
    std::vector<std::string> notes;
};

/// State schema:
///   {"stats":"fermi"|"bose","dim":D,"terms":[{"modes":[...],"re":x,"im":y},...]}
/// Non-canonical mode sequences are accepted and canonicalized with the phase
/// folded into the amplitude.
LoadedState state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const StateVector& x);

LoadedState load_state_file(const std::filesystem::path& path);
void save_state_file(const std::filesystem::path& path, const StateVector& x);

struct LoadedOperator {
    OperatorExpr expr;
    Mode dim = 0;
};

/// Operator schema:
///   {"stats":"fermi"|"bose","dim":D,
///    "strings":[{"re":x,"im":y,"ops":[{"kind":"create"|"annihilate","mode":k},...]},...]}
/// ops are written left-to-right and applied rightmost-first.
LoadedOperator operator_from_json(const nlohmann::json& j);
nlohmann::json operator_to_json(const OperatorExpr& expr, Mode dim);

LoadedOperator load_operator_file(const std::filesystem::path& path);

}  // namespace qspace
