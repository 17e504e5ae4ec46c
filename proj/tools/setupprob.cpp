// setupprob: exact and simulated frame probabilities over scenario files.
//
// Exit codes:
//   0  success
//   1  usage, I/O, parse or validation error
//   2  query not legal for the requested frame
//   3  observation measure undefined (no observations, null condition, empty box)

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "setupprob/betting.hpp"
#include "setupprob/exact.hpp"
#include "setupprob/io.hpp"
#include "setupprob/montecarlo.hpp"

namespace {

using namespace setupprob;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIllegalFrame = 2;
constexpr int kExitUndefined = 3;

struct Options {
    std::string file;
    std::string frame = "obs";
    std::string query;
    std::optional<std::string> given;
    std::uint64_t n = 1'000'000;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> price;
    std::string format = "table";
    unsigned workers = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Scenario load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.col(), path + ": " + e.message(), e.validation());
    }
}

Format format_of(const Options& o) {
    if (o.format == "json") return Format::Json;
    if (o.format == "table") return Format::Table;
    throw UsageError("--format must be json or table");
}

Frame frame_of(const Options& o) {
    auto f = frame_from_string(o.frame);
    if (!f) throw UsageError("--frame must be trial or obs");
    return *f;
}

void emit(const std::string& report, Format f) {
    bool color = f == Format::Table && ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
    if (!color) {
        std::cout << report;
        return;
    }
    auto nl = report.find('\n');
    std::cout << "\033[1m" << report.substr(0, nl) << "\033[0m" << report.substr(nl);
}

int cmd_exact(const Options& o) {
    Scenario s = load(o.file);
    Query q = parse_query(o.query);
    Frame frame = frame_of(o);
    Format fmt = format_of(o);
    if (o.given) {
        if (frame != Frame::Observation) {
            std::cerr << "error: --given is only defined for the observation frame\n";
            return kExitIllegalFrame;
        }
        emit(render_report(exact_conditional_result(s, q, parse_query(*o.given)), fmt), fmt);
    } else {
        emit(render_report(exact_result(s, frame, q), fmt), fmt);
    }
    return kExitOk;
}

int cmd_simulate(const Options& o) {
    Scenario s = load(o.file);
    Query q = parse_query(o.query);
    Frame frame = frame_of(o);
    Format fmt = format_of(o);
    if (!o.seed) throw UsageError("simulate requires --seed");
    RunOptions run{o.workers};
    SimReport r = frame == Frame::Trial ? estimate_trial(s, q, o.n, *o.seed, run)
                                        : estimate_observation(run_trials(s, o.n, *o.seed, run), q);
    emit(render_report(r, fmt), fmt);
    return kExitOk;
}

int cmd_bet(const Options& o) {
    Scenario s = load(o.file);
    Query q = parse_query(o.query);
    Format fmt = format_of(o);
    Rational price;
    if (o.price) {
        auto p = Rational::from_string(*o.price);
        if (!p) throw UsageError("--price must be a rational such as 1/3");
        price = *p;
    } else {
        price = fair_price(s, q);
        std::string note = "fair price: " + price.to_string() + " (observation frame)\n";
        if (fmt == Format::Table)
            std::cout << note;
        else
            std::cerr << note;
    }
    if (!o.seed) {
        if (o.price) throw UsageError("bet requires --seed to simulate");
        return kExitOk;
    }
    emit(render_report(simulate_betting(s, q, price, o.n, *o.seed, RunOptions{o.workers}), fmt), fmt);
    return kExitOk;
}

int cmd_compare(const Options& o) {
    Scenario s = load(o.file);
    Query q = parse_query(o.query);
    Format fmt = format_of(o);
    std::vector<ExactResult> rows{exact_result(s, Frame::Trial, q), exact_result(s, Frame::Observation, q)};
    emit(render_report(rows, fmt), fmt);
    return kExitOk;
}

template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == EngineErrc::IllegalTrialQuery ? kExitIllegalFrame : kExitUndefined;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and simulated probabilities under the trial and observation frames"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool with_frame) {
        sub->add_option("file", o.file, "scenario file")->required();
        sub->add_option("--query,-q", o.query, "query expression")->required();
        if (with_frame)
            sub->add_option("--frame", o.frame, "trial or obs")->required()->check(
                CLI::IsMember({"trial", "obs", "observation"}));
        sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };
    auto sim = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of trials")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "64-bit seed");
        sub->add_option("--workers", o.workers, "worker threads (0 = all cores)");
    };

    auto* exact = app.add_subcommand("exact", "exact probability under one frame");
    common(exact, true);
    exact->add_option("--given", o.given, "condition (observation frame only)");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate under one frame");
    common(simulate, true);
    sim(simulate);

    auto* bet = app.add_subcommand("bet", "per-observation betting simulation");
    common(bet, false);
    sim(bet);
    bet->add_option("--price", o.price, "stake per question, e.g. 1/3 (default: fair price)");

    auto* compare = app.add_subcommand("compare", "both frames side by side");
    common(compare, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    if (*exact) return guarded([&] { return cmd_exact(o); });
    if (*simulate) return guarded([&] { return cmd_simulate(o); });
    if (*bet) return guarded([&] { return cmd_bet(o); });
    return guarded([&] { return cmd_compare(o); });
}
