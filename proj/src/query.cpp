#include "setupprob/query.hpp"

#include <stdexcept>

namespace setupprob {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// 0 = ||, 1 = &&, 2 = unary / atom
int precedence(const Query& q) {
    return std::visit(overloaded{[](const Query::Or&) { return 0; },
                                 [](const Query::And&) { return 1; },
                                 [](const auto&) { return 2; }},
                      q.node());
}

std::string render_at(const Query& q, int min_prec) {
    std::string body = std::visit(
        overloaded{
            [](const Query::OutcomeIs& n) { return "outcome==" + n.label; },
            [](const Query::IndexIs& n) { return "index==" + std::to_string(n.index); },
            [](const Query::TagIs& n) { return "tag==" + n.tag; },
            [](const Query::True&) { return std::string("true"); },
            // Left-associative chains: the right operand binds one level tighter.
            [](const Query::And& n) { return render_at(n.lhs, 1) + " && " + render_at(n.rhs, 2); },
            [](const Query::Or& n) { return render_at(n.lhs, 0) + " || " + render_at(n.rhs, 1); },
            [](const Query::Not& n) { return "!" + render_at(n.operand, 2); },
        },
        q.node());
    if (precedence(q) < min_prec) return "(" + body + ")";
    return body;
}

}  // namespace

Query::Query(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

Query Query::outcome_is(std::string label) { return Query(OutcomeIs{std::move(label)}); }
Query Query::index_is(std::uint32_t index) { return Query(IndexIs{index}); }
Query Query::tag_is(std::string tag) { return Query(TagIs{std::move(tag)}); }
Query Query::always() { return Query(True{}); }

Query operator&&(Query a, Query b) { return Query(Query::And{std::move(a), std::move(b)}); }
Query operator||(Query a, Query b) { return Query(Query::Or{std::move(a), std::move(b)}); }
Query operator!(Query a) { return Query(Query::Not{std::move(a)}); }

bool operator==(const Query& a, const Query& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = a.node();
    const auto& y = b.node();
    if (x.index() != y.index()) return false;
    return std::visit(
        overloaded{
            [&](const Query::OutcomeIs& n) { return n.label == std::get<Query::OutcomeIs>(y).label; },
            [&](const Query::IndexIs& n) { return n.index == std::get<Query::IndexIs>(y).index; },
            [&](const Query::TagIs& n) { return n.tag == std::get<Query::TagIs>(y).tag; },
            [&](const Query::True&) { return true; },
            [&](const Query::And& n) {
                const auto& m = std::get<Query::And>(y);
                return n.lhs == m.lhs && n.rhs == m.rhs;
            },
            [&](const Query::Or& n) {
                const auto& m = std::get<Query::Or>(y);
                return n.lhs == m.lhs && n.rhs == m.rhs;
            },
            [&](const Query::Not& n) { return n.operand == std::get<Query::Not>(y).operand; },
        },
        x);
}

bool eval_query(const Query& q, const Token& t) {
    return std::visit(overloaded{
                          [&](const Query::OutcomeIs& n) { return t.outcome == n.label; },
                          [&](const Query::IndexIs& n) { return t.index == n.index; },
                          [&](const Query::TagIs& n) { return t.tag && *t.tag == n.tag; },
                          [](const Query::True&) { return true; },
                          [&](const Query::And& n) { return eval_query(n.lhs, t) && eval_query(n.rhs, t); },
                          [&](const Query::Or& n) { return eval_query(n.lhs, t) || eval_query(n.rhs, t); },
                          [&](const Query::Not& n) { return !eval_query(n.operand, t); },
                      },
                      q.node());
}

bool is_outcome_only(const Query& q) {
    return std::visit(overloaded{
                          [](const Query::IndexIs&) { return false; },
                          [](const Query::TagIs&) { return false; },
                          [](const Query::OutcomeIs&) { return true; },
                          [](const Query::True&) { return true; },
                          [](const Query::And& n) { return is_outcome_only(n.lhs) && is_outcome_only(n.rhs); },
                          [](const Query::Or& n) { return is_outcome_only(n.lhs) && is_outcome_only(n.rhs); },
                          [](const Query::Not& n) { return is_outcome_only(n.operand); },
                      },
                      q.node());
}

bool eval_outcome(const Query& q, std::string_view label) {
    return std::visit(
        overloaded{
            [](const Query::IndexIs&) -> bool {
                throw std::invalid_argument("index== cannot be evaluated against a bare outcome");
            },
            [](const Query::TagIs&) -> bool {
                throw std::invalid_argument("tag== cannot be evaluated against a bare outcome");
            },
            [&](const Query::OutcomeIs& n) { return label == n.label; },
            [](const Query::True&) { return true; },
            // Evaluate both sides so an illegal leaf is never masked by short-circuiting.
            [&](const Query::And& n) {
                bool a = eval_outcome(n.lhs, label);
                bool b = eval_outcome(n.rhs, label);
                return a && b;
            },
            [&](const Query::Or& n) {
                bool a = eval_outcome(n.lhs, label);
                bool b = eval_outcome(n.rhs, label);
                return a || b;
            },
            [&](const Query::Not& n) { return !eval_outcome(n.operand, label); },
        },
        q.node());
}

std::string render_query(const Query& q) { return render_at(q, 0); }

std::uint32_t count_matching(const OutcomeSpec& o, const Query& q) {
    if (is_outcome_only(q)) return eval_outcome(q, o.label) ? o.weight : 0;
    std::uint32_t n = 0;
    for (std::uint32_t i = 0; i < o.weight; ++i)
        if (eval_query(q, make_token(o, i))) ++n;
    return n;
}

}  // namespace setupprob
