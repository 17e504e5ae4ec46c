#include <charconv>
#include <limits>
#include <sstream>

#include "setupprob/io.hpp"

namespace setupprob {

ParseError::ParseError(std::size_t line, std::size_t col, std::string message,
                       std::optional<ValidationCode> validation)
    : std::runtime_error((validation ? std::string(to_string(*validation)) : std::string("SyntaxError")) + " at " +
                         std::to_string(line) + ":" + std::to_string(col) + ": " + message),
      line_(line),
      col_(col),
      message_(std::move(message)),
      validation_(validation) {}

namespace {

struct Field {
    std::string_view text;
    std::size_t col;  // 1-based
};

std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

template <class Int>
std::optional<Int> parse_uint(std::string_view s) {
    if (!all_digits(s)) return std::nullopt;
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

class ScenarioParser {
public:
    explicit ScenarioParser(std::string_view text) : text_(text) {}

    Scenario run() {
        std::size_t pos = 0;
        std::size_t line_no = 0;
        bool have_header = false;
        while (pos <= text_.size()) {
            std::size_t end = text_.find('\n', pos);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view line = text_.substr(pos, end - pos);
            ++line_no;
            pos = end + 1;

            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            auto fields = split_fields(line);
            if (fields.empty()) continue;

            if (!have_header) {
                header(fields, line_no);
                have_header = true;
            } else {
                outcome(fields, line_no);
            }
        }
        if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'scenario' header");
        validate();
        return std::move(scenario_);
    }

private:
    void header(const std::vector<Field>& f, std::size_t line) {
        if (f[0].text != "scenario")
            throw ParseError(line, f[0].col, "expected 'scenario', found '" + std::string(f[0].text) + "'");
        if (f.size() < 2) throw ParseError(line, f[0].col + f[0].text.size(), "expected scenario name");
        if (!is_identifier(f[1].text))
            throw ParseError(line, f[1].col, "scenario name '" + std::string(f[1].text) + "' is not an identifier");
        if (f.size() > 2) throw ParseError(line, f[2].col, "unexpected text after scenario name");
        scenario_.name = std::string(f[1].text);
        header_line_ = line;
    }

    void outcome(const std::vector<Field>& f, std::size_t line) {
        if (f[0].text == "scenario") throw ParseError(line, f[0].col, "duplicate 'scenario' header");
        if (f[0].text != "outcome")
            throw ParseError(line, f[0].col, "expected 'outcome', found '" + std::string(f[0].text) + "'");
        auto expect_at = [&](std::size_t i, const char* what) {
            if (i >= f.size()) {
                const auto& last = f.back();
                throw ParseError(line, last.col + last.text.size(), std::string("expected ") + what);
            }
            return f[i];
        };

        OutcomeSpec o;
        Field label = expect_at(1, "outcome label");
        if (!is_identifier(label.text))
            throw ParseError(line, label.col, "outcome label '" + std::string(label.text) + "' is not an identifier");
        o.label = std::string(label.text);

        Field p = expect_at(2, "p=RATIONAL");
        if (!p.text.starts_with("p=")) throw ParseError(line, p.col, "expected p=RATIONAL");
        o.prob = rational(p.text.substr(2), line, p.col + 2);

        Field w = expect_at(3, "w=UINT");
        if (!w.text.starts_with("w=")) throw ParseError(line, w.col, "expected w=UINT");
        auto weight = parse_uint<std::uint32_t>(w.text.substr(2));
        if (!weight) throw ParseError(line, w.col + 2, "weight must be an unsigned 32-bit integer");
        o.weight = *weight;

        if (f.size() > 4) {
            Field t = f[4];
            if (!t.text.starts_with("tags=")) throw ParseError(line, t.col, "expected tags=IDENT(,IDENT)*");
            o.tags = tags(t.text.substr(5), line, t.col + 5);
        }
        if (f.size() > 5) throw ParseError(line, f[5].col, "unexpected text after outcome");

        scenario_.outcomes.push_back(std::move(o));
        outcome_lines_.push_back(line);
    }

    // INT "/" UINT | UINT
    Rational rational(std::string_view s, std::size_t line, std::size_t col) {
        auto slash = s.find('/');
        std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
        std::string_view digits = (!num.empty() && num.front() == '-' && slash != std::string_view::npos)
                                      ? num.substr(1)
                                      : num;
        if (!all_digits(digits))
            throw ParseError(line, col, "expected a rational such as 1/2 (decimals are not accepted)");
        if (slash != std::string_view::npos) {
            std::string_view den = s.substr(slash + 1);
            if (!all_digits(den)) throw ParseError(line, col + slash + 1, "expected an unsigned denominator");
            if (den.find_first_not_of('0') == std::string_view::npos)
                throw ParseError(line, col + slash + 1, "zero denominator");
        }
        auto r = Rational::from_string(s);
        if (!r) throw ParseError(line, col, "rational out of 64-bit range");
        return *r;
    }

    std::vector<std::string> tags(std::string_view s, std::size_t line, std::size_t col) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = s.find(',', start);
            std::string_view tag = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            if (!is_identifier(tag))
                throw ParseError(line, col + start, "tag '" + std::string(tag) + "' is not an identifier");
            out.emplace_back(tag);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return out;
    }

    void validate() {
        std::optional<ValidationError> err;
        try {
            err = validate_scenario(scenario_);
        } catch (const std::overflow_error& e) {
            throw ParseError(header_line_, 1, std::string("probabilities overflow: ") + e.what(),
                             ValidationCode::ProbSumNotOne);
        }
        if (!err) return;
        std::size_t line = header_line_;
        if (err->outcome) {
            line = outcome_lines_[*err->outcome];
        } else if (err->code == ValidationCode::ProbSumNotOne && !outcome_lines_.empty()) {
            line = outcome_lines_.back();
        }
        throw ParseError(line, 1, err->message, err->code);
    }

    std::string_view text_;
    Scenario scenario_;
    std::size_t header_line_ = 1;
    std::vector<std::size_t> outcome_lines_;
};

class QueryParser {
public:
    explicit QueryParser(std::string_view text) : text_(text) {}

    Query run() {
        Query q = disjunction();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return q;
    }

private:
    static constexpr int kMaxDepth = 200;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(1, pos_ + 1, msg); }

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                       text_[pos_] == '\r'))
            ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_space();
        if (text_.substr(pos_).starts_with(tok)) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    std::string_view word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || (c >= '0' && c <= '9') ||
                      c == '-' || c == '.';
            if (!ok) break;
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Query disjunction() {
        Query q = conjunction();
        while (accept("||")) q = std::move(q) || conjunction();
        return q;
    }

    Query conjunction() {
        Query q = unary();
        while (accept("&&")) q = std::move(q) && unary();
        return q;
    }

    Query unary() {
        struct DepthGuard {
            int& d;
            explicit DepthGuard(int& depth) : d(depth) { ++d; }
            ~DepthGuard() { --d; }
        } guard(depth_);
        if (depth_ > kMaxDepth) fail("expression nested too deeply");
        if (accept("!")) return !unary();
        return primary();
    }

    Query primary() {
        if (accept("(")) {
            Query q = disjunction();
            if (!accept(")")) fail("expected ')'");
            return q;
        }
        skip_space();
        std::size_t start = pos_;
        std::string_view kw = word();
        if (kw == "true") return Query::always();
        if (kw != "outcome" && kw != "index" && kw != "tag") {
            pos_ = start;
            fail(pos_ >= text_.size() ? "unexpected end of query" : "expected outcome==, index==, tag==, true or '('");
        }
        if (!accept("==")) fail("expected '==' after '" + std::string(kw) + "'");
        skip_space();
        std::size_t value_pos = pos_;
        std::string_view value = word();
        if (kw == "index") {
            auto n = parse_uint<std::uint32_t>(value);
            if (!n) {
                pos_ = value_pos;
                fail("expected an unsigned 32-bit index");
            }
            return Query::index_is(*n);
        }
        if (!is_identifier(value)) {
            pos_ = value_pos;
            fail("expected an identifier");
        }
        return kw == "outcome" ? Query::outcome_is(std::string(value)) : Query::tag_is(std::string(value));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace

Scenario parse_scenario(std::string_view text) { return ScenarioParser(text).run(); }

std::string render_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "# format-version: " << kScenarioFormatVersion << "\n";
    out << "scenario " << s.name << "\n";
    for (const auto& o : s.outcomes) {
        out << "outcome " << o.label << " p=" << o.prob.to_string() << " w=" << o.weight;
        if (o.tags && !o.tags->empty()) {
            out << " tags=";
            for (std::size_t i = 0; i < o.tags->size(); ++i) out << (i ? "," : "") << (*o.tags)[i];
        }
        out << "\n";
    }
    return out.str();
}

Query parse_query(std::string_view text) { return QueryParser(text).run(); }

}  // namespace setupprob
