#include "qspace/state_json.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace qspace {

namespace {

Statistics parse_stats(const nlohmann::json& j) {
    if (!j.contains("stats") || !j["stats"].is_string()) {
        throw FormatError("missing or non-string \"stats\" field");
    }
    const std::string tag = j["stats"].get<std::string>();
    if (tag == "bose") {
        return Statistics::Bose;
    }
    if (tag == "fermi") {
        return Statistics::Fermi;
    }
    throw FormatError("unknown statistics tag \"" + tag + "\" (expected \"bose\" or \"fermi\")");
}

bool is_nonnegative_integer(const nlohmann::json& j) {
    return j.is_number_unsigned() ||
           (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

Mode parse_dim(const nlohmann::json& j) {
    if (!j.contains("dim") || !is_nonnegative_integer(j["dim"])) {
        throw FormatError("missing or invalid \"dim\" field (non-negative integer required)");
    }
    const auto dim = j["dim"].get<std::uint64_t>();
    if (dim > std::numeric_limits<Mode>::max()) {
        throw FormatError("\"dim\" out of range");
    }
    return static_cast<Mode>(dim);
}

double parse_finite(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number()) {
        throw FormatError(std::string("missing or non-numeric \"") + field + "\" field");
    }
    const double value = j[field].get<double>();
    if (!std::isfinite(value)) {
        throw FormatError(std::string("non-finite \"") + field + "\" value");
    }
    return value;
}

std::vector<Mode> parse_modes(const nlohmann::json& j, Mode dim) {
    if (!j.contains("modes") || !j["modes"].is_array()) {
        throw FormatError("term missing \"modes\" array");
    }
    std::vector<Mode> modes;
    for (const auto& entry : j["modes"]) {
        if (!is_nonnegative_integer(entry)) {
            throw FormatError("mode indices must be non-negative integers");
        }
        const auto m = entry.get<std::uint64_t>();
        if (m >= dim) {
            throw FormatError("mode index " + std::to_string(m) + " outside basis of dimension " +
                              std::to_string(dim));
        }
        modes.push_back(static_cast<Mode>(m));
    }
    return modes;
}

std::string format_modes(const std::vector<Mode>& modes) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << modes[i];
    }
    out << ']';
    return out.str();
}

}  // namespace

LoadedState state_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw FormatError("state document must be a JSON object");
    }
    const Statistics stats = parse_stats(j);
    const Mode dim = parse_dim(j);
    if (!j.contains("terms") || !j["terms"].is_array()) {
        throw FormatError("missing \"terms\" array");
    }
    StateBuilder builder(stats, dim);
    std::vector<std::string> notes;
    for (const auto& term : j["terms"]) {
        const std::vector<Mode> modes = parse_modes(term, dim);
        const Amplitude amp{parse_finite(term, "re"), parse_finite(term, "im")};
        const Canonical c = canonicalize(stats, modes, dim);
        if (!c.ket) {
            notes.push_back("dropped repeated-mode fermionic term " + format_modes(modes) +
                            " (null norm)");
            continue;
        }
        if (c.ket->modes() != modes) {
            notes.push_back("canonicalized " + format_modes(modes) + " to " +
                            format_ket(*c.ket) + " with phase " +
                            (c.phase > 0 ? std::string("+1") : std::string("-1")));
        }
        builder.add_term(modes, amp);
    }
    return {builder.build(), std::move(notes)};
}

nlohmann::json state_to_json(const StateVector& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ket, amp] : x.terms()) {
        terms.push_back({{"modes", ket.modes()}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return {{"stats", to_string(x.stats())}, {"dim", x.dim()}, {"terms", std::move(terms)}};
}

LoadedState load_state_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    try {
        return state_from_json(j);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void save_state_file(const std::filesystem::path& path, const StateVector& x) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot open " + path.string() + " for writing");
    }
    out << state_to_json(x).dump(2) << '\n';
}

LoadedOperator operator_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw FormatError("operator document must be a JSON object");
    }
    const Statistics stats = parse_stats(j);
    const Mode dim = parse_dim(j);
    if (!j.contains("strings") || !j["strings"].is_array()) {
        throw FormatError("missing \"strings\" array");
    }
    std::vector<LadderString> strings;
    for (const auto& s : j["strings"]) {
        LadderString parsed;
        parsed.coeff = Amplitude{parse_finite(s, "re"), parse_finite(s, "im")};
        if (!s.contains("ops") || !s["ops"].is_array()) {
            throw FormatError("ladder string missing \"ops\" array");
        }
        for (const auto& op : s["ops"]) {
            if (!op.contains("kind") || !op["kind"].is_string()) {
                throw FormatError("ladder op missing \"kind\"");
            }
            const std::string kind = op["kind"].get<std::string>();
            LadderKind parsed_kind;
            if (kind == "create") {
                parsed_kind = LadderKind::Create;
            } else if (kind == "annihilate") {
                parsed_kind = LadderKind::Annihilate;
            } else {
                throw FormatError("unknown ladder op kind \"" + kind + "\"");
            }
            if (!op.contains("mode") || !is_nonnegative_integer(op["mode"])) {
                throw FormatError("ladder op missing non-negative \"mode\"");
            }
            const auto m = op["mode"].get<std::uint64_t>();
            if (m >= dim) {
                throw FormatError("ladder op mode " + std::to_string(m) +
                                  " outside basis of dimension " + std::to_string(dim));
            }
            parsed.ops.push_back({parsed_kind, static_cast<Mode>(m)});
        }
        strings.push_back(std::move(parsed));
    }
    return {OperatorExpr(stats, std::move(strings)), dim};
}

nlohmann::json operator_to_json(const OperatorExpr& expr, Mode dim) {
    nlohmann::json strings = nlohmann::json::array();
    for (const LadderString& s : expr.strings()) {
        nlohmann::json ops = nlohmann::json::array();
        for (const LadderOp& op : s.ops) {
            ops.push_back({{"kind", op.kind == LadderKind::Create ? "create" : "annihilate"},
                           {"mode", op.mode}});
        }
        strings.push_back({{"re", s.coeff.real()}, {"im", s.coeff.imag()}, {"ops", std::move(ops)}});
    }
    return {{"stats", to_string(expr.stats())}, {"dim", dim}, {"strings", std::move(strings)}};
}

LoadedOperator load_operator_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
    try {
        return operator_from_json(j);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

}  // namespace qspace
