#pragma once

#include <string>

#include "setupprob/error.hpp"
#include "setupprob/model.hpp"
#include "setupprob/query.hpp"
#include "setupprob/rational.hpp"

namespace setupprob {

/**
 * Exact frame probabilities by enumeration over the scenario's outcomes.
 *
 * Every function validates the scenario first and throws ScenarioError
 * when it is malformed.
 */

struct ExactResult {
    std::string scenario;
    Frame frame = Frame::Trial;
    std::string query;  // rendered
    Rational value;

    friend bool operator==(const ExactResult&, const ExactResult&) = default;
};

/// Per-trial measure: sum of prob(o) over outcomes satisfying `q`.
/// Throws EngineError(IllegalTrialQuery) if `q` has index/tag leaves.
Rational trial_probability(const Scenario& s, const Query& q);

/// Size-biased per-token measure:
///   sum_o prob(o) * #{tokens of o satisfying q}  /  sum_o prob(o) * weight(o)
/// Throws EngineError(NoObservations) when the denominator is zero.
Rational observation_probability(const Scenario& s, const Query& q);

/// P_obs(a && b) / P_obs(b). Throws EngineError(ConditionOnNull) if P_obs(b) = 0.
Rational observation_conditional(const Scenario& s, const Query& a, const Query& b);

/// Expected number of q-satisfying tokens one trial adds to the box.
Rational average_tokens_per_trial(const Scenario& s, const Query& q);

/// Trial-frame probability that at least one q-token is put in the box.
Rational production_event_probability(const Scenario& s, const Query& q);

// Trial or observation probability packaged with its labels.
ExactResult exact_result(const Scenario& s, Frame frame, const Query& q);

// Observation conditional packaged as a result; query renders as "a | b".
ExactResult exact_conditional_result(const Scenario& s, const Query& a, const Query& b);

}  // namespace setupprob
