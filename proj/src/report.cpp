#include <cstdio>
#include "json.hpp"

#include "setupprob/io.hpp"

namespace setupprob {

namespace {

using ojson = nlohmann::ordered_json;

ojson rational_json(const Rational& r) {
    return ojson{{"num", r.num()}, {"den", r.den()}, {"decimal", r.to_double()}};
}

Rational rational_from_json(const ojson& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

ojson exact_json(const ExactResult& r) {
    return ojson{{"scenario", r.scenario},
                 {"frame", std::string(to_string(r.frame))},
                 {"query", r.query},
                 {"value", rational_json(r.value)}};
}

std::string fixed(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Left-aligned columns separated by two spaces; first row is the header.
std::string table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::vector<std::string> exact_header() { return {"scenario", "frame", "query", "value", "decimal"}; }

std::vector<std::string> exact_row(const ExactResult& r) {
    return {r.scenario, std::string(to_string(r.frame)), r.query, r.value.to_string(), fixed(r.value.to_double())};
}

template <class F>
auto parse_json(std::string_view text, F&& build) {
    try {
        return build(ojson::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("malformed report JSON: ") + e.what());
    } catch (const std::exception& e) {
        throw ParseError(1, 1, std::string("invalid report: ") + e.what());
    }
}

}  // namespace

std::string render_report(const ExactResult& r, Format f) {
    if (f == Format::Json) return exact_json(r).dump() + "\n";
    return table({exact_header(), exact_row(r)});
}

std::string render_report(const std::vector<ExactResult>& rows, Format f) {
    if (f == Format::Json) {
        ojson arr = ojson::array();
        for (const auto& r : rows) arr.push_back(exact_json(r));
        return arr.dump() + "\n";
    }
    std::vector<std::vector<std::string>> cells{exact_header()};
    for (const auto& r : rows) cells.push_back(exact_row(r));
    return table(cells);
}

std::string render_report(const SimReport& r, Format f) {
    if (f == Format::Json) {
        ojson j{{"trials", r.trials},       {"seed", r.seed},           {"hits", r.hits},
                {"total", r.total},         {"estimate", r.estimate},   {"std_error", r.std_error},
                {"ci95", ojson::array({r.ci95.first, r.ci95.second})}};
        return j.dump() + "\n";
    }
    return table({{"trials", "seed", "hits", "total", "estimate", "std_error", "ci95"},
                  {std::to_string(r.trials), std::to_string(r.seed), std::to_string(r.hits), std::to_string(r.total),
                   fixed(r.estimate), fixed(r.std_error),
                   "[" + fixed(r.ci95.first) + ", " + fixed(r.ci95.second) + "]"}});
}

std::string render_report(const BetReport& r, Format f) {
    if (f == Format::Json) {
        ojson j{{"price", rational_json(r.price)},
                {"questions", r.questions},
                {"wins", r.wins},
                {"avg_profit_per_question", r.avg_profit_per_question},
                {"total_profit", r.total_profit}};
        return j.dump() + "\n";
    }
    return table({{"price", "questions", "wins", "avg_profit_per_question", "total_profit"},
                  {r.price.to_string(), std::to_string(r.questions), std::to_string(r.wins),
                   fixed(r.avg_profit_per_question), fixed(r.total_profit, 2)}});
}

ExactResult parse_exact_result_json(std::string_view text) {
    return parse_json(text, [](const ojson& j) {
        auto frame = frame_from_string(j.at("frame").get<std::string>());
        if (!frame) throw std::invalid_argument("unknown frame");
        return ExactResult{j.at("scenario").get<std::string>(), *frame, j.at("query").get<std::string>(),
                           rational_from_json(j.at("value"))};
    });
}

SimReport parse_sim_report_json(std::string_view text) {
    return parse_json(text, [](const ojson& j) {
        SimReport r;
        r.trials = j.at("trials").get<std::uint64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.hits = j.at("hits").get<std::uint64_t>();
        r.total = j.at("total").get<std::uint64_t>();
        r.estimate = j.at("estimate").get<double>();
        r.std_error = j.at("std_error").get<double>();
        const auto& ci = j.at("ci95");
        r.ci95 = {ci.at(0).get<double>(), ci.at(1).get<double>()};
        return r;
    });
}

BetReport parse_bet_report_json(std::string_view text) {
    return parse_json(text, [](const ojson& j) {
        BetReport r;
        r.price = rational_from_json(j.at("price"));
        r.questions = j.at("questions").get<std::uint64_t>();
        r.wins = j.at("wins").get<std::uint64_t>();
        r.avg_profit_per_question = j.at("avg_profit_per_question").get<double>();
        r.total_profit = j.at("total_profit").get<double>();
        return r;
    });
}

}  // namespace setupprob
