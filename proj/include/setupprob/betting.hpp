#pragma once

#include <cstdint>

#include "setupprob/montecarlo.hpp"
#include "setupprob/rational.hpp"

namespace setupprob {

/// Outcome of buying one unit-payoff bet on `q` at every question (token).
struct BetReport {
    Rational price;
    std::uint64_t questions = 0;
    std::uint64_t wins = 0;
    double avg_profit_per_question = 0.0;
    double total_profit = 0.0;

    // Exact (wins - price * questions) / questions.
    Rational avg_profit_exact() const;

    friend bool operator==(const BetReport&, const BetReport&) = default;
};

/// Stake at which the expected profit per question is zero: the
/// observation-frame probability of q. Throws EngineError(NoObservations).
Rational fair_price(const Scenario& s, const Query& q);

/// Exact expected profit per question at `price`: P_obs(q) - price.
Rational expected_profit_per_question(const Scenario& s, const Query& q, const Rational& price);

/// Runs n trials; at each token the agent pays `price` and collects 1 when q
/// holds. Requires 0 <= price <= 1 (std::invalid_argument otherwise); throws
/// EngineError(EmptyBox) if the run produced no questions.
BetReport simulate_betting(const Scenario& s, const Query& q, const Rational& price, std::uint64_t n,
                           std::uint64_t seed, RunOptions opts = {});

// Settles bets against an existing box.
BetReport settle_bets(const Box& box, const Query& q, const Rational& price);

// Normal-approximation standard error of avg_profit_per_question; equals the
// standard error of the win fraction since profit is wins/questions - price.
double profit_std_error(const BetReport& r);

}  // namespace setupprob
