#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "reasonkit/contrastive.hpp"
#include "reasonkit/hypergraph.hpp"
#include "reasonkit/oracles.hpp"

using namespace reasonkit;
using testutil::bits;
using testutil::cattleya;
using testutil::var_sets;

namespace {

MonotoneClauseSet running_g() {
    return restrict_to_instance(cattleya(), bits("1111"));
}

// Does switching exactly `flip` in x change the class for some completion?
// For complete instances switching is deterministic: flip those bits.
bool switching_flips(const DecisionTree& tree, const Instance& x, const Term& flip) {
    std::vector<std::uint8_t> b = x.bits();
    for (const Literal& l : flip) b[std::size_t(l.var)] = 1 - b[std::size_t(l.var)];
    return tree.evaluate(Instance(b)) != tree.evaluate(x);
}

} // namespace

TEST_CASE("all contrastive explanations of the running example") {
    auto terms = all_contrastive(running_g());
    CHECK(var_sets(terms) == std::vector<std::vector<Var>>{{0, 1}, {0, 2}, {3}});
    CHECK(all_contrastive(restrict_to_instance(DecisionTree::single_leaf(2, 1), bits("00"))).empty());
}

TEST_CASE("contrastive explanations semantically flip the decision, minimally") {
    Rng rng(71);
    for (int trial = 0; trial < 80; ++trial) {
        auto [tree, x] = testutil::random_positive_case(rng, 9, 9);
        auto explanations = all_contrastive(restrict_to_instance(tree, x));
        std::set<std::vector<Var>> found;
        for (const Term& t : explanations) {
            // for a minimal set, the flip witness is exactly x with t switched
            CHECK(switching_flips(tree, x, t));
            for (const Literal& l : t) CHECK_FALSE(switching_flips(tree, x, t.without(l)));
            found.insert(t.vars());
        }
        // completeness against the definition: t is contrastive iff t_x \ t is
        // not an implicant and every proper subset fails that condition
        const auto& vars = tree.variables();
        Term anchor = x.term_over(vars);
        auto remainder_implies = [&](const Term& removed) {
            std::vector<Literal> keep;
            for (const Literal& l : anchor)
                if (!removed.contains(l)) keep.push_back(l);
            return testutil::implicant_by_completions(tree, Term(keep), x);
        };
        for (std::size_t mask = 1; mask < (std::size_t(1) << vars.size()); ++mask) {
            std::vector<Literal> lits;
            for (std::size_t i = 0; i < vars.size(); ++i)
                if ((mask >> i) & 1u) lits.push_back(x.literal_of(vars[i]));
            Term t(lits);
            bool contrastive = !remainder_implies(t);
            if (contrastive)
                for (const Literal& l : t)
                    if (!remainder_implies(t.without(l))) { contrastive = false; break; }
            CHECK(contrastive == (found.count(t.vars()) > 0));
        }
    }
}

TEST_CASE("explanatory features of the running example") {
    FeatureReport fr = explanatory_features(running_g());
    CHECK(fr.necessary == std::vector<Literal>{pos(3)});
    CHECK(fr.relevant == std::vector<Literal>{pos(0), pos(1), pos(2), pos(3)});
    CHECK(fr.irrelevant.size() == 4); // the four negative literals

    FeatureReport constant = explanatory_features(restrict_to_instance(DecisionTree::single_leaf(2, 1), bits("00")));
    CHECK(constant.necessary.empty());
    CHECK(constant.relevant.empty());
    CHECK(constant.irrelevant.size() == 4);
}

TEST_CASE("necessary is the intersection and relevant the union of all reasons") {
    Rng rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        auto [tree, x] = testutil::random_positive_case(rng, 10, 10);
        MonotoneClauseSet g = restrict_to_instance(tree, x);
        auto reasons = brute_force_sufficient_reasons(tree, x);
        REQUIRE(!reasons.empty());
        std::set<Literal> inter(reasons.front().begin(), reasons.front().end());
        std::set<Literal> uni;
        for (const Term& t : reasons) {
            std::set<Literal> keep;
            for (const Literal& l : t)
                if (inter.count(l)) keep.insert(l);
            inter = std::move(keep);
            uni.insert(t.begin(), t.end());
        }
        FeatureReport fr = explanatory_features(g);
        CHECK(std::set<Literal>(fr.necessary.begin(), fr.necessary.end()) == inter);
        CHECK(std::set<Literal>(fr.relevant.begin(), fr.relevant.end()) == uni);
    }
}

TEST_CASE("sufficient-reason enumeration matches the paper and the oracle") {
    auto [reasons, complete] = enumerate_sufficient_reasons(running_g(), 100);
    CHECK(complete);
    CHECK(var_sets(reasons) == std::vector<std::vector<Var>>{{0, 3}, {1, 2, 3}});

    // complete tree of depth 4: 42 sufficient reasons
    DecisionTree t4 = make_complete_tree(4);
    Instance ones(std::vector<std::uint8_t>(15, 1));
    auto [r4, c4] = enumerate_sufficient_reasons(restrict_to_instance(t4, ones), 100000);
    CHECK(c4);
    CHECK(r4.size() == 42);

    CHECK_THROWS_AS(enumerate_sufficient_reasons(running_g(), 0), InputError);

    Rng rng(79);
    for (int trial = 0; trial < 80; ++trial) {
        auto [tree, x] = testutil::random_positive_case(rng, 10, 10);
        auto [mine, ok] = enumerate_sufficient_reasons(restrict_to_instance(tree, x), 1u << 20);
        REQUIRE(ok);
        CHECK(var_sets(mine) == var_sets(brute_force_sufficient_reasons(tree, x)));
    }
}

TEST_CASE("importance of the running example") {
    ImportanceMap imp = count_and_importance(running_g(), 100);
    CHECK(imp.exact);
    CHECK(imp.total_count == 2);
    CHECK(imp.importance_of(pos(3)) == 1);
    CHECK(imp.importance_of(pos(0)) == Rational(1, 2));
    CHECK(imp.importance_of(pos(1)) == Rational(1, 2));
    CHECK(imp.importance_of(pos(2)) == Rational(1, 2));
    for (Var v = 0; v < 4; ++v) CHECK(imp.importance_of(neg(v)) == 0);
}

TEST_CASE("importance of a constant classifier") {
    ImportanceMap imp = count_and_importance(restrict_to_instance(DecisionTree::single_leaf(2, 1), bits("10")), 10);
    CHECK(imp.exact);
    CHECK(imp.total_count == 1); // the empty reason
    CHECK(imp.entries.empty());
}

TEST_CASE("capped importance reports a lower bound") {
    DecisionTree t4 = make_complete_tree(4);
    Instance ones(std::vector<std::uint8_t>(15, 1));
    ImportanceMap imp = count_and_importance(restrict_to_instance(t4, ones), 10);
    CHECK_FALSE(imp.exact);
    CHECK(imp.total_count == 10);
}

TEST_CASE("importance invariants against the oracle") {
    Rng rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        auto [tree, x] = testutil::random_positive_case(rng, 9, 9);
        MonotoneClauseSet g = restrict_to_instance(tree, x);
        auto reasons = brute_force_sufficient_reasons(tree, x);
        ImportanceMap imp = count_and_importance(g, 1u << 20);
        REQUIRE(imp.exact);
        CHECK(imp.total_count == BigCount(reasons.size()));
        std::map<Literal, std::size_t> occurrences;
        for (const Term& t : reasons)
            for (const Literal& l : t) ++occurrences[l];
        for (const auto& [l, c] : occurrences)
            CHECK(imp.importance_of(l) == Rational(BigCount(c), BigCount(reasons.size())));
        FeatureReport fr = explanatory_features(g);
        for (const Literal& l : fr.necessary) CHECK(imp.importance_of(l) == 1);
        for (const Literal& l : fr.relevant) CHECK(imp.importance_of(l) > 0);
        for (const Literal& l : fr.irrelevant) CHECK(imp.importance_of(l) == 0);
    }
}

TEST_CASE("contrastive statistics") {
    auto terms = all_contrastive(running_g());
    ContrastiveStats stats = contrastive_stats(terms);
    CHECK(stats.count == 3);
    CHECK(stats.min_size == 1);
    CHECK(stats.median_size == 2.0);
    CHECK(stats.max_size == 2);

    ContrastiveStats empty = contrastive_stats({});
    CHECK(empty.count == 0);
    CHECK_FALSE(empty.min_size.has_value());
    CHECK_FALSE(empty.median_size.has_value());
}

TEST_CASE("duality between sufficient reasons and contrastive explanations") {
    Rng rng(89);
    for (int trial = 0; trial < 80; ++trial) {
        auto [tree, x] = testutil::random_positive_case(rng, 10, 10);
        MonotoneClauseSet g = restrict_to_instance(tree, x);
        auto [suff, ok] = enumerate_sufficient_reasons(g, 1u << 20);
        REQUIRE(ok);
        auto contr = all_contrastive(g);
        auto s = var_sets(suff);
        auto c = var_sets(contr);
        if (s == std::vector<std::vector<Var>>{{}}) {
            CHECK(c.empty());
            continue;
        }
        auto hs = [](const std::vector<std::vector<Var>>& edges) {
            std::vector<std::vector<Var>> out;
            minimal_transversals(edges, [&](const std::vector<Var>& t) {
                out.push_back(t);
                return true;
            });
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(hs(s) == c);
        CHECK(hs(c) == s);
    }
}

TEST_CASE("importance CSV feed") {
    ImportanceMap imp = count_and_importance(running_g(), 100);
    std::string csv = importance_csv(imp, 4);
    CHECK(csv.starts_with("variable,polarity,importance_num,importance_den\n"));
    CHECK(csv.find("3,1,1,1\n") != std::string::npos);  // x3 necessary
    CHECK(csv.find("0,1,1,2\n") != std::string::npos);  // x0 importance 1/2
    CHECK(csv.find("0,0,0,1\n") != std::string::npos);  // !x0 irrelevant
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9); // header + 2n rows
}
