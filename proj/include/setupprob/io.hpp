#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "setupprob/betting.hpp"
#include "setupprob/exact.hpp"
#include "setupprob/model.hpp"
#include "setupprob/montecarlo.hpp"
#include "setupprob/query.hpp"

namespace setupprob {

/*
 * Scenario files, one directive per line:
 *
 *   scenario IDENT
 *   outcome IDENT p=RATIONAL w=UINT [tags=IDENT(,IDENT)*]
 *
 * RATIONAL is INT/UINT or UINT. '#' starts a comment; blank lines are
 * ignored. Files written by render_scenario start with a
 * "# format-version: 1" comment.
 */
inline constexpr int kScenarioFormatVersion = 1;

class ParseError : public std::runtime_error {
public:
    // A grammar violation, when `validation` is empty; otherwise the parsed
    // scenario broke the named invariant.
    ParseError(std::size_t line, std::size_t col, std::string message,
               std::optional<ValidationCode> validation = std::nullopt);

    std::size_t line() const noexcept { return line_; }  // 1-based
    std::size_t col() const noexcept { return col_; }    // 1-based
    bool is_syntax() const noexcept { return !validation_; }
    std::optional<ValidationCode> validation() const noexcept { return validation_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t col_;
    std::string message_;
    std::optional<ValidationCode> validation_;
};

Scenario parse_scenario(std::string_view text);
std::string render_scenario(const Scenario& s);

// Query grammar: outcome==IDENT | index==UINT | tag==IDENT | true, combined
// with ! > && > || and parentheses. Errors report line 1 and the column.
Query parse_query(std::string_view text);

enum class Format { Json, Table };

std::string render_report(const ExactResult& r, Format f);
std::string render_report(const SimReport& r, Format f);
std::string render_report(const BetReport& r, Format f);

// Several exact results as one table (or a JSON array), e.g. both frames.
std::string render_report(const std::vector<ExactResult>& rows, Format f);

// Inverses of the JSON renderings. Throw ParseError on malformed input.
ExactResult parse_exact_result_json(std::string_view text);
SimReport parse_sim_report_json(std::string_view text);
BetReport parse_bet_report_json(std::string_view text);

}  // namespace setupprob
