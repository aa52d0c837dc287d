#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "reasonkit/restriction.hpp"

using namespace reasonkit;
using testutil::bits;
using testutil::cattleya;

namespace {

std::vector<std::vector<Var>> sorted_clauses(const MonotoneClauseSet& g) {
    auto out = g.clauses();
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("restriction of the running example") {
    DecisionTree t = cattleya();
    MonotoneClauseSet g = restrict_to_instance(t, bits("1111"));
    // all 7 restricted clauses are pairwise distinct here
    std::vector<std::vector<Var>> expect = {{0, 1}, {0, 2}, {0, 3}, {1, 2, 3}, {1, 3}, {2, 3}, {3}};
    CHECK(sorted_clauses(g) == expect);
    CHECK(g.anchor() == bits("1111").term());
}

TEST_CASE("restriction demands a positive instance") {
    DecisionTree t = cattleya();
    CHECK_THROWS_AS(restrict_to_instance(t, bits("1110")), ContractError);
    CHECK_NOTHROW(restrict_to_instance(negate(t), bits("1110")));
}

TEST_CASE("constant-true tree restricts to the empty clause set") {
    MonotoneClauseSet g = restrict_to_instance(DecisionTree::single_leaf(3, 1), bits("010"));
    CHECK(g.size() == 0);
    CHECK(hits_all(Term{}, g));
}

TEST_CASE("minimize removes strict supersets and is idempotent") {
    Term anchor = bits("1111").term();
    MonotoneClauseSet g(4, anchor, {{0, 1}, {0, 1, 2}, {3}}, false);
    MonotoneClauseSet m = minimize(g);
    CHECK(sorted_clauses(m) == std::vector<std::vector<Var>>{{0, 1}, {3}});

    DecisionTree t = cattleya();
    MonotoneClauseSet mg = minimize(restrict_to_instance(t, bits("1111")));
    CHECK(sorted_clauses(mg) == std::vector<std::vector<Var>>{{0, 1}, {0, 2}, {3}});

    MonotoneClauseSet mm = minimize(mg);
    CHECK(sorted_clauses(mm) == sorted_clauses(mg));
}

TEST_CASE("hits_all matches the running example") {
    DecisionTree t = cattleya();
    MonotoneClauseSet g = restrict_to_instance(t, bits("1111"));
    CHECK(hits_all(Term{pos(0), pos(3)}, g));
    CHECK_FALSE(hits_all(Term{pos(0)}, g));
    CHECK_THROWS_AS(hits_all(Term{neg(0)}, g), InputError);
}

TEST_CASE("restricted clauses stay nonempty and dedup happens at restrict time") {
    Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        auto [tree, x] = testutil::random_positive_case(rng, 10, 10);
        MonotoneClauseSet g = restrict_to_instance(tree, x);
        std::set<std::vector<Var>> seen;
        for (const auto& c : g.clauses()) {
            CHECK(!c.empty());
            CHECK(seen.insert(c).second);
        }
    }
}

TEST_CASE("hits_all is implicant-ness, and minimization preserves it") {
    Rng rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        auto [tree, x] = testutil::random_positive_case(rng, 9, 9);
        MonotoneClauseSet g = restrict_to_instance(tree, x);
        MonotoneClauseSet mg = minimize(g);
        for (int probe = 0; probe < 8; ++probe) {
            std::vector<Literal> lits;
            for (Var v : tree.variables())
                if (rng.below(2)) lits.push_back(x.literal_of(v));
            Term t(lits);
            bool truth = testutil::implicant_by_completions(tree, t, x);
            CHECK(hits_all(t, g) == truth);
            CHECK(hits_all(t, mg) == truth);
        }
    }
}
