#pragma once

// Fixtures, random generators and a brute-force oracle shared by the tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "setupprob/model.hpp"
#include "setupprob/query.hpp"
#include "setupprob/rational.hpp"

namespace setupprob::test {

inline Scenario sleeping_beauty() {
    return Scenario{"sb", {{"heads", Rational(1, 2), 1, std::nullopt}, {"tails", Rational(1, 2), 2, std::nullopt}}};
}

inline Scenario sleeping_beauty_tagged() {
    return Scenario{"sb",
                    {{"heads", Rational(1, 2), 1, std::vector<std::string>{"monday"}},
                     {"tails", Rational(1, 2), 2, std::vector<std::string>{"monday", "tuesday"}}}};
}

inline Scenario new_year() {
    return Scenario{"ny", {{"heads", Rational(1, 2), 1, std::nullopt}, {"tails", Rational(1, 2), 365, std::nullopt}}};
}

// {a 1/6 w=3, b 1/3 w=0, c 1/2 w=1}
inline Scenario three_way() {
    return Scenario{"three",
                    {{"a", Rational(1, 6), 3, std::nullopt},
                     {"b", Rational(1, 3), 0, std::nullopt},
                     {"c", Rational(1, 2), 1, std::nullopt}}};
}

inline const std::vector<std::string>& tag_pool() {
    static const std::vector<std::string> pool{"monday", "tuesday", "red", "green"};
    return pool;
}

struct GenLimits {
    std::size_t max_outcomes = 5;
    std::uint32_t max_weight = 6;
    bool allow_zero_weight = true;
    bool allow_zero_prob = true;
    bool tags = true;
};

// Valid scenario; probabilities are integer shares over their sum.
inline Scenario random_scenario(std::mt19937_64& rng, GenLimits lim = {}) {
    std::uniform_int_distribution<std::size_t> count(1, lim.max_outcomes);
    std::uniform_int_distribution<std::uint32_t> weight(lim.allow_zero_weight ? 0 : 1, lim.max_weight);
    std::uniform_int_distribution<std::int64_t> share(lim.allow_zero_prob ? 0 : 1, 12);
    std::bernoulli_distribution coin(0.5);

    Scenario s;
    s.name = "gen" + std::to_string(rng() % 1000);
    std::size_t n = count(rng);
    std::vector<std::int64_t> shares(n);
    std::int64_t total = 0;
    for (auto& v : shares) total += (v = share(rng));
    if (total == 0) {
        shares[0] = 1;
        total = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        OutcomeSpec o;
        o.label = "o" + std::to_string(i);
        o.prob = Rational(shares[i], total);
        o.weight = weight(rng);
        // An empty tag list is not expressible in the file format, so only
        // outcomes with tokens receive tags.
        if (lim.tags && o.weight > 0 && coin(rng)) {
            std::vector<std::string> tags;
            for (std::uint32_t k = 0; k < o.weight; ++k) tags.push_back(tag_pool()[rng() % tag_pool().size()]);
            o.tags = std::move(tags);
        }
        s.outcomes.push_back(std::move(o));
    }
    return s;
}

// Random query over the labels of `s` (plus one unknown label), indices up to
// max_weight and the tag pool.
inline Query random_query(std::mt19937_64& rng, const Scenario& s, int depth, bool outcome_only = false) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 6);
    int kind = pick(rng);
    if (outcome_only && (kind == 1 || kind == 2)) kind = 0;
    switch (kind) {
        case 0: {
            std::size_t i = rng() % (s.outcomes.size() + 1);
            return Query::outcome_is(i < s.outcomes.size() ? s.outcomes[i].label : "nobody");
        }
        case 1: return Query::index_is(static_cast<std::uint32_t>(rng() % 7));
        case 2: return Query::tag_is(tag_pool()[rng() % tag_pool().size()]);
        case 3: return Query::always();
        case 4: return random_query(rng, s, depth - 1, outcome_only) && random_query(rng, s, depth - 1, outcome_only);
        case 5: return random_query(rng, s, depth - 1, outcome_only) || random_query(rng, s, depth - 1, outcome_only);
        default: return !random_query(rng, s, depth - 1, outcome_only);
    }
}

/**
 * Brute-force oracle: materializes every token each outcome can put in the
 * box, paired with that outcome's probability, and sums rationals directly.
 * Uses only the model types and eval_query, never the engines.
 */
namespace oracle {

struct WeightedToken {
    Rational prob;
    Token token;
};

inline std::vector<WeightedToken> materialize(const Scenario& s) {
    std::vector<WeightedToken> out;
    for (const auto& o : s.outcomes)
        for (std::uint32_t i = 0; i < o.weight; ++i) {
            Token t{o.label, i, std::nullopt};
            if (o.tags) t.tag = o.tags->at(i);
            out.push_back({o.prob, t});
        }
    return out;
}

// Outcome-only queries ignore index and tag, so a bare token stands in for the outcome.
inline Rational trial(const Scenario& s, const Query& q) {
    Rational p;
    for (const auto& o : s.outcomes)
        if (eval_query(q, Token{o.label, 0, std::nullopt})) p += o.prob;
    return p;
}

inline Rational average(const Scenario& s, const Query& q) {
    Rational sum;
    for (const auto& wt : materialize(s))
        if (eval_query(q, wt.token)) sum += wt.prob;
    return sum;
}

inline Rational observation(const Scenario& s, const Query& q) {
    Rational den;
    for (const auto& wt : materialize(s)) den += wt.prob;
    return average(s, q) / den;
}

inline Rational production(const Scenario& s, const Query& q) {
    Rational p;
    for (const auto& o : s.outcomes) {
        bool any = false;
        for (const auto& wt : materialize(Scenario{s.name, {o}})) any = any || eval_query(q, wt.token);
        if (any) p += o.prob;
    }
    return p;
}

inline Rational conditional(const Scenario& s, const Query& a, const Query& b) {
    Rational joint;
    Rational cond;
    for (const auto& wt : materialize(s)) {
        if (eval_query(b, wt.token)) {
            cond += wt.prob;
            if (eval_query(a, wt.token)) joint += wt.prob;
        }
    }
    return joint / cond;
}

inline bool has_observations(const Scenario& s) {
    for (const auto& o : s.outcomes)
        if (o.weight > 0 && !o.prob.is_zero()) return true;
    return false;
}

}  // namespace oracle

}  // namespace setupprob::test
