#include "setupprob/model.hpp"

#include <unordered_set>

namespace setupprob {

std::optional<std::size_t> Scenario::find(std::string_view label) const {
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i].label == label) return i;
    return std::nullopt;
}

std::string_view to_string(Frame f) noexcept {
    switch (f) {
        case Frame::Trial: return "trial";
        case Frame::Observation: return "observation";
    }
    return "?";
}

std::optional<Frame> frame_from_string(std::string_view text) noexcept {
    if (text == "trial") return Frame::Trial;
    if (text == "obs" || text == "observation") return Frame::Observation;
    return std::nullopt;
}

Token make_token(const OutcomeSpec& o, std::uint32_t i) {
    Token t{o.label, i, std::nullopt};
    if (o.tags && i < o.tags->size()) t.tag = (*o.tags)[i];
    return t;
}

std::vector<Token> tokens_of(const OutcomeSpec& o) {
    std::vector<Token> out;
    out.reserve(o.weight);
    for (std::uint32_t i = 0; i < o.weight; ++i) out.push_back(make_token(o, i));
    return out;
}

bool is_identifier(std::string_view text) noexcept {
    if (text.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!alpha(text.front())) return false;
    for (char c : text.substr(1))
        if (!alpha(c) && !(c >= '0' && c <= '9') && c != '-' && c != '.') return false;
    return true;
}

std::string_view to_string(ValidationCode c) noexcept {
    switch (c) {
        case ValidationCode::EmptyScenario: return "EmptyScenario";
        case ValidationCode::InvalidIdentifier: return "InvalidIdentifier";
        case ValidationCode::DuplicateLabel: return "DuplicateLabel";
        case ValidationCode::ProbOutOfRange: return "ProbOutOfRange";
        case ValidationCode::TagArityMismatch: return "TagArityMismatch";
        case ValidationCode::ProbSumNotOne: return "ProbSumNotOne";
    }
    return "?";
}

std::optional<ValidationError> validate_scenario(const Scenario& s) {
    using C = ValidationCode;
    if (!is_identifier(s.name))
        return ValidationError{C::InvalidIdentifier, std::nullopt,
                               "scenario name '" + s.name + "' is not an identifier"};
    if (s.outcomes.empty())
        return ValidationError{C::EmptyScenario, std::nullopt, "scenario has no outcomes"};

    std::unordered_set<std::string_view> seen;
    Rational total;
    for (std::size_t i = 0; i < s.outcomes.size(); ++i) {
        const auto& o = s.outcomes[i];
        if (!is_identifier(o.label))
            return ValidationError{C::InvalidIdentifier, i,
                                   "outcome label '" + o.label + "' is not an identifier"};
        if (!seen.insert(o.label).second)
            return ValidationError{C::DuplicateLabel, i, "duplicate outcome label '" + o.label + "'"};
        if (o.prob < Rational(0) || o.prob > Rational(1))
            return ValidationError{C::ProbOutOfRange, i,
                                   "probability " + o.prob.to_string() + " of '" + o.label +
                                       "' is outside [0,1]"};
        if (o.tags) {
            if (o.tags->size() != o.weight)
                return ValidationError{C::TagArityMismatch, i,
                                       "outcome '" + o.label + "' has weight " +
                                           std::to_string(o.weight) + " but " +
                                           std::to_string(o.tags->size()) + " tags"};
            for (const auto& tag : *o.tags)
                if (!is_identifier(tag))
                    return ValidationError{C::InvalidIdentifier, i,
                                           "tag '" + tag + "' is not an identifier"};
        }
        total += o.prob;
    }
    if (total != Rational(1))
        return ValidationError{C::ProbSumNotOne, std::nullopt,
                               "probabilities sum to " + total.to_string() + ", not 1"};
    return std::nullopt;
}

ScenarioError::ScenarioError(ValidationError e)
    : std::invalid_argument(std::string(to_string(e.code)) + ": " + e.message), error_(std::move(e)) {}

void require_valid(const Scenario& s) {
    if (auto err = validate_scenario(s)) throw ScenarioError(std::move(*err));
}

}  // namespace setupprob
