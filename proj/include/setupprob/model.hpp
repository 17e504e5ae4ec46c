#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "setupprob/rational.hpp"

namespace setupprob {

/// One branch of the root experiment. Each time it occurs it emits `weight`
/// observation tokens into the box.
struct OutcomeSpec {
    std::string label;
    Rational prob;
    std::uint32_t weight = 0;
    std::optional<std::vector<std::string>> tags;  // one per token when present

    friend bool operator==(const OutcomeSpec&, const OutcomeSpec&) = default;
};

struct Scenario {
    std::string name;
    std::vector<OutcomeSpec> outcomes;

    friend bool operator==(const Scenario&, const Scenario&) = default;

    // Index of the outcome with this label, if any.
    std::optional<std::size_t> find(std::string_view label) const;
};

/// A single observation: one ball in the box, one awakening.
struct Token {
    std::string outcome;
    std::uint32_t index = 0;
    std::optional<std::string> tag;

    friend bool operator==(const Token&, const Token&) = default;
};

/// The setup that individuates an event.
enum class Frame {
    Trial,        // one sample per run of the experiment
    Observation,  // one sample per token drawn from the box
};

std::string_view to_string(Frame f) noexcept;
std::optional<Frame> frame_from_string(std::string_view text) noexcept;

// `i`th token emitted by outcome `o`. Precondition: i < o.weight.
Token make_token(const OutcomeSpec& o, std::uint32_t i);

// All tokens one occurrence of `o` puts in the box.
std::vector<Token> tokens_of(const OutcomeSpec& o);

// [A-Za-z_][A-Za-z0-9_.-]*
bool is_identifier(std::string_view text) noexcept;

enum class ValidationCode {
    EmptyScenario,
    InvalidIdentifier,
    DuplicateLabel,
    ProbOutOfRange,
    TagArityMismatch,
    ProbSumNotOne,
};

std::string_view to_string(ValidationCode c) noexcept;

struct ValidationError {
    ValidationCode code;
    std::optional<std::size_t> outcome;  // offending outcome, when there is one
    std::string message;
};

// First violated invariant, or nullopt when the scenario is well formed.
// Per-outcome checks run in outcome order; the probability sum is checked last.
std::optional<ValidationError> validate_scenario(const Scenario& s);

class ScenarioError : public std::invalid_argument {
public:
    explicit ScenarioError(ValidationError e);
    const ValidationError& error() const noexcept { return error_; }

private:
    ValidationError error_;
};

// Throws ScenarioError if validate_scenario reports a problem.
void require_valid(const Scenario& s);

}  // namespace setupprob
