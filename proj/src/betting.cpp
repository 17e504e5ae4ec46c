#include "setupprob/betting.hpp"

#include <cmath>
#include <stdexcept>

#include "setupprob/exact.hpp"

namespace setupprob {

namespace {

Rational to_rational(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("count exceeds int64");
    return Rational(static_cast<std::int64_t>(v));
}

}  // namespace

Rational BetReport::avg_profit_exact() const {
    return (to_rational(wins) - price * to_rational(questions)) / to_rational(questions);
}

Rational fair_price(const Scenario& s, const Query& q) { return observation_probability(s, q); }

Rational expected_profit_per_question(const Scenario& s, const Query& q, const Rational& price) {
    return observation_probability(s, q) - price;
}

BetReport settle_bets(const Box& box, const Query& q, const Rational& price) {
    if (price < Rational(0) || price > Rational(1))
        throw std::invalid_argument("price " + price.to_string() + " is outside [0,1]");
    SimReport counts = estimate_observation(box, q);
    BetReport r;
    r.price = price;
    r.questions = counts.total;
    r.wins = counts.hits;
    Rational total = to_rational(r.wins) - price * to_rational(r.questions);
    r.total_profit = total.to_double();
    r.avg_profit_per_question = (total / to_rational(r.questions)).to_double();
    return r;
}

BetReport simulate_betting(const Scenario& s, const Query& q, const Rational& price, std::uint64_t n,
                           std::uint64_t seed, RunOptions opts) {
    if (price < Rational(0) || price > Rational(1))
        throw std::invalid_argument("price " + price.to_string() + " is outside [0,1]");
    return settle_bets(run_trials(s, n, seed, opts), q, price);
}

double profit_std_error(const BetReport& r) {
    double p = static_cast<double>(r.wins) / static_cast<double>(r.questions);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(r.questions));
}

}  // namespace setupprob
