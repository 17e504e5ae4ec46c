#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "setupprob/error.hpp"
#include "setupprob/model.hpp"
#include "setupprob/query.hpp"

namespace setupprob {

/**
 * The filled box after n simulated trials.
 *
 * Stores which outcome each trial drew; the token multiset is the
 * concatenation, in trial order, of each drawn outcome's tokens. Per-outcome
 * counts and token offsets are derived once at construction.
 */
class Box {
public:
    Box(std::shared_ptr<const Scenario> scenario, std::uint64_t seed,
        std::vector<std::uint32_t> trial_outcomes);

    const Scenario& scenario() const noexcept { return *scenario_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t trials() const noexcept { return outcomes_.size(); }

    // Number of tokens in the box.
    std::uint64_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
    bool empty() const noexcept { return size() == 0; }

    std::span<const std::uint32_t> trial_outcomes() const noexcept { return outcomes_; }

    // How many trials drew outcome `o` (an index into scenario().outcomes).
    std::uint64_t trials_of(std::size_t o) const { return trial_counts_.at(o); }
    std::uint64_t tokens_of(std::size_t o) const;

    // k-th token in trial order. Precondition: k < size().
    Token token_at(std::uint64_t k) const;

    friend bool operator==(const Box& a, const Box& b) {
        return a.seed_ == b.seed_ && *a.scenario_ == *b.scenario_ && a.outcomes_ == b.outcomes_;
    }

private:
    std::shared_ptr<const Scenario> scenario_;
    std::uint64_t seed_;
    std::vector<std::uint32_t> outcomes_;
    std::vector<std::uint64_t> trial_counts_;
    std::vector<std::uint64_t> offsets_;  // offsets_[i] = tokens before trial i; size trials + 1
};

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::pair<double, double> ci95{0.0, 0.0};

    friend bool operator==(const SimReport&, const SimReport&) = default;
};

struct RunOptions {
    // Worker threads for trial generation; 0 picks the hardware concurrency.
    // Results do not depend on this value.
    unsigned workers = 0;
};

// hits/total with a normal-approximation standard error sqrt(p(1-p)/total)
// and a 1.96-sigma interval clamped to [0,1]. Precondition: total > 0.
SimReport make_report(std::uint64_t trials, std::uint64_t seed, std::uint64_t hits, std::uint64_t total);

/// Runs n trials of the scenario. Trial i draws its outcome from random
/// stream i of `seed`, compared exactly against the cumulative rational
/// probabilities, and appends that outcome's `weight` tokens.
Box run_trials(const Scenario& s, std::uint64_t n, std::uint64_t seed, RunOptions opts = {});

/// Fraction of tokens in the box satisfying q. Throws EngineError(EmptyBox).
SimReport estimate_observation(const Box& box, const Query& q);

/// Fraction of trials whose outcome satisfies q. Throws
/// EngineError(IllegalTrialQuery) if q inspects token structure.
SimReport estimate_trial(const Box& box, const Query& q);
SimReport estimate_trial(const Scenario& s, const Query& q, std::uint64_t n, std::uint64_t seed,
                         RunOptions opts = {});

/// One uniformly random token from the box. Throws EngineError(EmptyBox).
Token draw_token(const Box& box, std::uint64_t seed);

}  // namespace setupprob
