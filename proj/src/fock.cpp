#include "qspace/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qspace {

const char* to_string(Statistics stats) {
    return stats == Statistics::Bose ? "bose" : "fermi";
}

namespace {

bool finite(Amplitude a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

void require_same_space(const StateVector& x, const StateVector& y, const char* what) {
    if (x.stats() != y.stats()) {
        throw std::domain_error(std::string(what) + ": statistics mismatch (" +
                                to_string(x.stats()) + " vs " + to_string(y.stats()) + ")");
    }
    if (x.dim() != y.dim()) {
        throw std::domain_error(std::string(what) + ": dimension mismatch (" +
                                std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")");
    }
}

}  // namespace

BasisKet::BasisKet(Statistics stats, std::vector<Mode> modes)
    : stats_(stats), modes_(std::move(modes)) {
    if (!is_canonical(stats_, modes_)) {
        throw std::domain_error("BasisKet: mode sequence is not canonical; use canonicalize()");
    }
}

bool BasisKet::is_canonical(Statistics stats, std::span<const Mode> modes) noexcept {
    for (std::size_t i = 1; i < modes.size(); ++i) {
        if (stats == Statistics::Fermi ? modes[i - 1] >= modes[i] : modes[i - 1] > modes[i]) {
            return false;
        }
    }
    return true;
}

bool BasisKet::operator<(const BasisKet& other) const noexcept {
    if (stats_ != other.stats_) {
        return stats_ < other.stats_;
    }
    if (modes_.size() != other.modes_.size()) {
        return modes_.size() < other.modes_.size();
    }
    return modes_ < other.modes_;
}

std::string format_ket(const BasisKet& ket) {
    std::ostringstream out;
    out << '|';
    for (std::size_t i = 0; i < ket.modes().size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << ket.modes()[i];
    }
    out << ')';
    return out.str();
}

Canonical canonicalize(Statistics stats, std::span<const Mode> modes, Mode dim) {
    for (Mode m : modes) {
        if (m >= dim) {
            throw std::domain_error("canonicalize: mode " + std::to_string(m) +
                                    " outside basis of dimension " + std::to_string(dim));
        }
    }
    std::vector<Mode> sorted(modes.begin(), modes.end());
    // Insertion sort, counting transpositions for the fermionic parity.
    std::size_t swaps = 0;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        Mode value = sorted[i];
        std::size_t j = i;
        while (j > 0 && sorted[j - 1] > value) {
            sorted[j] = sorted[j - 1];
            --j;
            ++swaps;
        }
        sorted[j] = value;
    }
    if (stats == Statistics::Fermi) {
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return {std::nullopt, 1};  // repeated mode: null norm, quotiented to zero
        }
        return {BasisKet(stats, std::move(sorted)), swaps % 2 == 0 ? 1 : -1};
    }
    return {BasisKet(stats, std::move(sorted)), 1};
}

Amplitude StateVector::amplitude(const BasisKet& ket) const {
    auto it = terms_.find(ket);
    return it == terms_.end() ? Amplitude{} : it->second;
}

StateBuilder& StateBuilder::add_term(std::span<const Mode> modes, Amplitude amp) {
    if (!finite(amp)) {
        throw std::domain_error("StateBuilder: non-finite amplitude");
    }
    Canonical c = canonicalize(state_.stats(), modes, state_.dim());
    if (c.ket) {
        state_.terms_[*c.ket] += amp * static_cast<double>(c.phase);
    }
    return *this;
}

StateBuilder& StateBuilder::add_ket(const BasisKet& ket, Amplitude amp) {
    if (ket.stats() != state_.stats()) {
        throw std::domain_error("StateBuilder: statistics mismatch");
    }
    return add_term(ket.modes(), amp);
}

StateVector StateBuilder::build() {
    std::erase_if(state_.terms_, [](const auto& term) { return term.second == Amplitude{}; });
    for (const auto& [ket, amp] : state_.terms_) {
        if (!finite(amp)) {
            throw std::domain_error("StateBuilder: accumulated non-finite amplitude at " +
                                    format_ket(ket));
        }
    }
    return std::move(state_);
}

StateVector vacuum(Statistics stats, Mode dim) {
    StateBuilder b(stats, dim);
    b.add_term({}, Amplitude{1.0, 0.0});
    return b.build();
}

StateVector add(const StateVector& x, const StateVector& y) {
    require_same_space(x, y, "add");
    StateBuilder b(x.stats(), x.dim());
    for (const auto& [ket, amp] : x.terms()) {
        b.add_ket(ket, amp);
    }
    for (const auto& [ket, amp] : y.terms()) {
        b.add_ket(ket, amp);
    }
    return b.build();
}

StateVector scale(Amplitude g, const StateVector& x) {
    if (!finite(g)) {
        throw std::domain_error("scale: non-finite scalar");
    }
    StateBuilder b(x.stats(), x.dim());
    if (g == Amplitude{}) {
        return b.build();
    }
    for (const auto& [ket, amp] : x.terms()) {
        b.add_ket(ket, g * amp);
    }
    return b.build();
}

std::map<Mode, std::size_t> occupation(const BasisKet& ket) {
    std::map<Mode, std::size_t> counts;
    for (Mode m : ket.modes()) {
        ++counts[m];
    }
    return counts;
}

}  // namespace qspace
