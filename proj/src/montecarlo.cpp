#include "setupprob/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "setupprob/rng.hpp"

namespace setupprob {

namespace {

// Stream id reserved for draw_token; trial streams are 0..n-1.
constexpr std::uint64_t kDrawStream = ~std::uint64_t{0};

// Cumulative probability thresholds. A 64-bit draw u selects the first
// outcome k with u / 2^64 < cum_k, compared exactly as u * den < num * 2^64.
class OutcomeSampler {
public:
    explicit OutcomeSampler(const Scenario& s) {
        Rational cum;
        for (const auto& o : s.outcomes) {
            cum += o.prob;
            thresholds_.push_back({static_cast<unsigned __int128>(cum.num()) << 64,
                                   static_cast<std::uint64_t>(cum.den())});
        }
    }

    std::uint32_t pick(std::uint64_t u) const noexcept {
        for (std::size_t k = 0; k < thresholds_.size(); ++k) {
            const auto& t = thresholds_[k];
            if (static_cast<unsigned __int128>(u) * t.den < t.scaled_num)
                return static_cast<std::uint32_t>(k);
        }
        return static_cast<std::uint32_t>(thresholds_.size() - 1);  // unreachable: last cum is 1
    }

private:
    struct Threshold {
        unsigned __int128 scaled_num;
        std::uint64_t den;
    };
    std::vector<Threshold> thresholds_;
};

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace

Box::Box(std::shared_ptr<const Scenario> scenario, std::uint64_t seed,
         std::vector<std::uint32_t> trial_outcomes)
    : scenario_(std::move(scenario)), seed_(seed), outcomes_(std::move(trial_outcomes)) {
    const auto& spec = scenario_->outcomes;
    trial_counts_.assign(spec.size(), 0);
    offsets_.reserve(outcomes_.size() + 1);
    offsets_.push_back(0);
    for (auto o : outcomes_) {
        if (o >= spec.size()) throw std::out_of_range("box: trial outcome index out of range");
        ++trial_counts_[o];
        offsets_.push_back(offsets_.back() + spec[o].weight);
    }
}

std::uint64_t Box::tokens_of(std::size_t o) const {
    return trial_counts_.at(o) * scenario_->outcomes.at(o).weight;
}

Token Box::token_at(std::uint64_t k) const {
    if (k >= size()) throw std::out_of_range("box: token index out of range");
    // Last trial whose first token is at or before k; zero-weight trials share
    // an offset with their successor, so take the last such trial.
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), k);
    auto trial = static_cast<std::size_t>(std::distance(offsets_.begin(), it)) - 1;
    const auto& o = scenario_->outcomes[outcomes_[trial]];
    return make_token(o, static_cast<std::uint32_t>(k - offsets_[trial]));
}

SimReport make_report(std::uint64_t trials, std::uint64_t seed, std::uint64_t hits, std::uint64_t total) {
    SimReport r;
    r.trials = trials;
    r.seed = seed;
    r.hits = hits;
    r.total = total;
    r.estimate = static_cast<double>(hits) / static_cast<double>(total);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(total));
    r.ci95 = {std::max(0.0, r.estimate - 1.96 * r.std_error), std::min(1.0, r.estimate + 1.96 * r.std_error)};
    return r;
}

Box run_trials(const Scenario& s, std::uint64_t n, std::uint64_t seed, RunOptions opts) {
    require_valid(s);
    if (n == 0) throw std::invalid_argument("run_trials: n must be at least 1");

    auto scenario = std::make_shared<const Scenario>(s);
    OutcomeSampler sampler(*scenario);
    std::vector<std::uint32_t> outcomes(n);

    auto fill = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) outcomes[i] = sampler.pick(rng::Stream(seed, i).next());
    };

    std::uint64_t workers = std::min<std::uint64_t>(resolve_workers(opts.workers), n);
    if (workers <= 1) {
        fill(0, n);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        std::uint64_t chunk = (n + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            std::uint64_t begin = w * chunk;
            std::uint64_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(fill, begin, end);
        }
    }
    return Box(std::move(scenario), seed, std::move(outcomes));
}

SimReport estimate_observation(const Box& box, const Query& q) {
    if (box.empty()) throw EngineError(EngineErrc::EmptyBox, "the box holds no tokens");
    const auto& spec = box.scenario().outcomes;
    std::uint64_t hits = 0;
    for (std::size_t o = 0; o < spec.size(); ++o) hits += box.trials_of(o) * count_matching(spec[o], q);
    return make_report(box.trials(), box.seed(), hits, box.size());
}

SimReport estimate_trial(const Box& box, const Query& q) {
    if (!is_outcome_only(q))
        throw EngineError(EngineErrc::IllegalTrialQuery,
                          "'" + render_query(q) + "' inspects token structure; the trial frame has no tokens");
    const auto& spec = box.scenario().outcomes;
    std::uint64_t hits = 0;
    for (std::size_t o = 0; o < spec.size(); ++o)
        if (eval_outcome(q, spec[o].label)) hits += box.trials_of(o);
    return make_report(box.trials(), box.seed(), hits, box.trials());
}

SimReport estimate_trial(const Scenario& s, const Query& q, std::uint64_t n, std::uint64_t seed,
                         RunOptions opts) {
    if (!is_outcome_only(q))
        throw EngineError(EngineErrc::IllegalTrialQuery,
                          "'" + render_query(q) + "' inspects token structure; the trial frame has no tokens");
    return estimate_trial(run_trials(s, n, seed, opts), q);
}

Token draw_token(const Box& box, std::uint64_t seed) {
    if (box.empty()) throw EngineError(EngineErrc::EmptyBox, "cannot draw from an empty box");
    return box.token_at(rng::Stream(seed, kDrawStream).below(box.size()));
}

}  // namespace setupprob
