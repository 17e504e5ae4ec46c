#include <random>
#include <stdexcept>

#include "doctest.h"
#include "setupprob/query.hpp"
#include "support.hpp"

using namespace setupprob;

TEST_CASE("eval_query examples") {
    Token heads0{"heads", 0, "green"};
    Token tails1{"tails", 1, "red"};
    CHECK(eval_query(Query::outcome_is("heads"), heads0));
    CHECK(eval_query(!Query::outcome_is("heads"), tails1));
    CHECK_FALSE(eval_query(Query::outcome_is("tails") && Query::index_is(0), tails1));
}

TEST_CASE("tag against a tagless token is false") {
    Token bare{"heads", 0, std::nullopt};
    CHECK_FALSE(eval_query(Query::tag_is("monday"), bare));
    CHECK(eval_query(!Query::tag_is("monday"), bare));
}

TEST_CASE("trial-frame evaluation sees only outcomes") {
    auto q = Query::outcome_is("heads") || Query::outcome_is("tails");
    CHECK(is_outcome_only(q));
    CHECK(eval_outcome(q, "tails"));
    CHECK_FALSE(eval_outcome(!Query::always(), "tails"));

    auto bad = Query::outcome_is("heads") || Query::index_is(0);
    CHECK_FALSE(is_outcome_only(bad));
    CHECK_THROWS_AS(eval_outcome(bad, "heads"), std::invalid_argument);
}

TEST_CASE("count_matching") {
    auto sb = test::sleeping_beauty_tagged();
    CHECK(count_matching(sb.outcomes[1], Query::always()) == 2);
    CHECK(count_matching(sb.outcomes[1], Query::tag_is("tuesday")) == 1);
    CHECK(count_matching(sb.outcomes[0], Query::outcome_is("tails")) == 0);
}

TEST_CASE("rendering uses minimal parentheses") {
    auto a = Query::outcome_is("a");
    auto b = Query::outcome_is("b");
    auto c = Query::outcome_is("c");
    CHECK(render_query((!a && b) || c) == "!outcome==a && outcome==b || outcome==c");
    CHECK(render_query(a && (b || c)) == "outcome==a && (outcome==b || outcome==c)");
    CHECK(render_query(!(a && b)) == "!(outcome==a && outcome==b)");
    CHECK(render_query(a && (b && c)) == "outcome==a && (outcome==b && outcome==c)");
    CHECK(render_query(Query::index_is(3) || Query::tag_is("red") || Query::always()) ==
          "index==3 || tag==red || true");
}

TEST_CASE("structural equality") {
    CHECK(Query::outcome_is("a") == Query::outcome_is("a"));
    CHECK_FALSE(Query::outcome_is("a") == Query::tag_is("a"));
    CHECK((Query::outcome_is("a") && Query::index_is(1)) == (Query::outcome_is("a") && Query::index_is(1)));
    CHECK_FALSE((Query::outcome_is("a") && Query::index_is(1)) == (Query::index_is(1) && Query::outcome_is("a")));
}

TEST_CASE("property: De Morgan over random ASTs and tokens") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        auto s = test::random_scenario(rng);
        auto a = test::random_query(rng, s, 3);
        auto b = test::random_query(rng, s, 3);
        for (const auto& wt : test::oracle::materialize(s)) {
            const auto& t = wt.token;
            CHECK(eval_query(!(a && b), t) == eval_query(!a || !b, t));
            CHECK(eval_query(!(a || b), t) == eval_query(!a && !b, t));
        }
        Token stray{"nobody", 9, std::nullopt};
        CHECK(eval_query(!(a && b), stray) == eval_query(!a || !b, stray));
    }
}
