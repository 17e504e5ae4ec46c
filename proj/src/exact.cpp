#include "setupprob/exact.hpp"

namespace setupprob {

std::string_view to_string(EngineErrc c) noexcept {
    switch (c) {
        case EngineErrc::IllegalTrialQuery: return "IllegalTrialQuery";
        case EngineErrc::NoObservations: return "NoObservations";
        case EngineErrc::ConditionOnNull: return "ConditionOnNull";
        case EngineErrc::EmptyBox: return "EmptyBox";
    }
    return "?";
}

namespace {

Rational expected_tokens(const Scenario& s) {
    Rational total;
    for (const auto& o : s.outcomes) total += o.prob * Rational(o.weight);
    return total;
}

}  // namespace

Rational trial_probability(const Scenario& s, const Query& q) {
    require_valid(s);
    if (!is_outcome_only(q))
        throw EngineError(EngineErrc::IllegalTrialQuery,
                          "'" + render_query(q) + "' inspects token structure; the trial frame has no tokens");
    Rational p;
    for (const auto& o : s.outcomes)
        if (eval_outcome(q, o.label)) p += o.prob;
    return p;
}

Rational average_tokens_per_trial(const Scenario& s, const Query& q) {
    require_valid(s);
    Rational total;
    for (const auto& o : s.outcomes) total += o.prob * Rational(count_matching(o, q));
    return total;
}

Rational observation_probability(const Scenario& s, const Query& q) {
    require_valid(s);
    Rational denom = expected_tokens(s);
    if (denom.is_zero())
        throw EngineError(EngineErrc::NoObservations,
                          "scenario '" + s.name + "' emits no tokens with positive probability");
    return average_tokens_per_trial(s, q) / denom;
}

Rational observation_conditional(const Scenario& s, const Query& a, const Query& b) {
    Rational pb = observation_probability(s, b);
    if (pb.is_zero())
        throw EngineError(EngineErrc::ConditionOnNull,
                          "'" + render_query(b) + "' has observation probability 0");
    return observation_probability(s, a && b) / pb;
}

Rational production_event_probability(const Scenario& s, const Query& q) {
    require_valid(s);
    Rational p;
    for (const auto& o : s.outcomes)
        if (count_matching(o, q) > 0) p += o.prob;
    return p;
}

ExactResult exact_result(const Scenario& s, Frame frame, const Query& q) {
    Rational v = frame == Frame::Trial ? trial_probability(s, q) : observation_probability(s, q);
    return ExactResult{s.name, frame, render_query(q), v};
}

ExactResult exact_conditional_result(const Scenario& s, const Query& a, const Query& b) {
    return ExactResult{s.name, Frame::Observation, render_query(a) + " | " + render_query(b),
                       observation_conditional(s, a, b)};
}

}  // namespace setupprob
