#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace setupprob {

enum class EngineErrc {
    IllegalTrialQuery,  // trial-frame query inspects token structure
    NoObservations,     // expected token count is zero; observation measure undefined
    ConditionOnNull,    // conditioning event has observation probability zero
    EmptyBox,           // estimator or draw on a box with no tokens
};

std::string_view to_string(EngineErrc c) noexcept;

class EngineError : public std::runtime_error {
public:
    EngineError(EngineErrc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    EngineErrc code() const noexcept { return code_; }

private:
    EngineErrc code_;
};

}  // namespace setupprob
