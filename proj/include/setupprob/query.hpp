#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "setupprob/model.hpp"

namespace setupprob {

/**
 * Predicate over observation tokens.
 *
 * Leaves test the outcome label, the token index, the token tag, or are
 * constantly true; inner nodes are And / Or / Not. Nodes are immutable and
 * shared, so copying a Query is cheap.
 *
 * The same query text means different events under different frames. Only
 * outcome-only queries (no index or tag leaves) are meaningful in the
 * Trial frame, where there is no token to inspect.
 */
class Query {
public:
    struct OutcomeIs;
    struct IndexIs;
    struct TagIs;
    struct True;
    struct And;
    struct Or;
    struct Not;

    using Node = std::variant<OutcomeIs, IndexIs, TagIs, True, And, Or, Not>;

    static Query outcome_is(std::string label);
    static Query index_is(std::uint32_t index);
    static Query tag_is(std::string tag);
    static Query always();

    friend Query operator&&(Query a, Query b);
    friend Query operator||(Query a, Query b);
    friend Query operator!(Query a);

    const Node& node() const noexcept;

    // Structural equality.
    friend bool operator==(const Query& a, const Query& b);

private:
    explicit Query(Node n);
    std::shared_ptr<const Node> node_;
};

struct Query::OutcomeIs { std::string label; };
struct Query::IndexIs { std::uint32_t index; };
struct Query::TagIs { std::string tag; };
struct Query::True {};
struct Query::And { Query lhs, rhs; };
struct Query::Or { Query lhs, rhs; };
struct Query::Not { Query operand; };

inline const Query::Node& Query::node() const noexcept { return *node_; }

bool eval_query(const Query& q, const Token& t);

// Number of tokens emitted by one occurrence of `o` that satisfy `q`.
std::uint32_t count_matching(const OutcomeSpec& o, const Query& q);

// True iff the query has no IndexIs / TagIs leaves.
bool is_outcome_only(const Query& q);

// Evaluates an outcome-only query against a bare outcome label.
// Throws std::invalid_argument if the query inspects token structure.
bool eval_outcome(const Query& q, std::string_view label);

// Canonical text in the query grammar, with parentheses only where
// precedence requires them.
std::string render_query(const Query& q);

}  // namespace setupprob
