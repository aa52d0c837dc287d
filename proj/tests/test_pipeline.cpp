#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "helpers.hpp"
#include "reasonkit/pipeline.hpp"
#include "reasonkit/report_json.hpp"

using namespace reasonkit;

namespace {

// report JSON with wall-clock fields removed, for determinism comparisons
nlohmann::json scrub_times(const std::string& line) {
    nlohmann::json doc = nlohmann::json::parse(line);
    auto strip = [](auto&& self, nlohmann::json& node) -> void {
        if (node.is_object()) {
            node.erase("time_ms");
            for (auto& [key, value] : node.items()) self(self, value);
        } else if (node.is_array()) {
            for (auto& value : node) self(self, value);
        }
    };
    strip(strip, doc);
    return doc;
}

struct TempCsv {
    std::string path;
    explicit TempCsv(const std::string& content) {
        path = (std::filesystem::temp_directory_path() /
                ("reasonkit_test_" + std::to_string(std::rand()) + ".csv")).string();
        std::ofstream(path) << content;
    }
    ~TempCsv() { std::remove(path.c_str()); }
};

// Deterministic two-cluster toy set: a > 5 ⇒ label 1, plus a categorical tag.
std::string toy_csv(std::size_t rows) {
    std::string out = "a,b,color,label\n";
    for (std::size_t i = 0; i < rows; ++i) {
        const bool hot = i % 2 == 0;
        out += std::to_string(hot ? 8.0 + double(i % 5) : 1.0 + double(i % 5)) + ",";
        out += std::to_string(double(i % 7)) + ",";
        out += (i % 3 == 0 ? "red" : "blue");
        out += hot ? ",1\n" : ",0\n";
    }
    return out;
}

} // namespace

TEST_CASE("midpoint threshold on a two-row column") {
    TempCsv csv("a,label\n1.0,0\n3.0,1\n");
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "label");
    std::vector<std::size_t> rows = {0, 1};
    LearnedTree model = learn_tree(data, rows);
    REQUIRE(model.features.size() == 1);
    CHECK(model.features.at(0).is_threshold);
    CHECK(model.features.at(0).threshold == 2.0);
    CHECK(model.train_accuracy == 1.0);
    CHECK(model.tree.node_count() == 3);
}

TEST_CASE("one-vs-all label reduction") {
    TempCsv csv("a,kind\n1.0,cat\n2.0,dog\n3.0,bird\n4.0,cat\n");
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "kind", std::string("cat"));
    CHECK(data.labels() == std::vector<std::uint8_t>{1, 0, 0, 1});
}

TEST_CASE("ingestion diagnostics") {
    TempCsv missing("a,label\n1.0,0\n,1\n");
    CHECK_THROWS_WITH_AS(BinarizedDataset::ingest_csv(missing.path, "label"),
                         doctest::Contains("row 3"), ParseError);

    TempCsv nolabel("a,b\n1.0,2.0\n");
    CHECK_THROWS_AS(BinarizedDataset::ingest_csv(nolabel.path, "label"), InputError);

    TempCsv multiclass("a,label\n1.0,red\n2.0,blue\n");
    CHECK_THROWS_AS(BinarizedDataset::ingest_csv(multiclass.path, "label"), ParseError);
}

TEST_CASE("feature map re-evaluation reproduces the Boolean matrix") {
    TempCsv csv(toy_csv(40));
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "label");
    std::vector<std::size_t> rows(40);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    LearnedTree model = learn_tree(data, rows);
    for (std::size_t r = 0; r < data.row_count(); ++r) {
        Instance x = data.binarize_row(model.features, r);
        for (std::size_t f = 0; f < model.features.size(); ++f)
            CHECK(x[f] == data.feature_value(model.features.at(f), r));
    }
    // round-trip through the serialized feature map
    FeatureMap reparsed = feature_map_from_json(feature_map_to_json(model.features, data.columns()));
    REQUIRE(reparsed.size() == model.features.size());
    for (std::size_t r = 0; r < data.row_count(); ++r)
        CHECK(data.binarize_row(reparsed, r) == data.binarize_row(model.features, r));
}

TEST_CASE("constant labels learn a single leaf") {
    TempCsv csv("a,label\n1.0,1\n2.0,1\n3.0,1\n");
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "label");
    std::vector<std::size_t> rows = {0, 1, 2};
    LearnedTree model = learn_tree(data, rows);
    CHECK(model.tree.node_count() == 1);
    CHECK(model.tree.evaluate(Instance{}) == 1);

    CHECK_THROWS_AS(learn_tree(data, std::span<const std::size_t>{}), InputError);
}

TEST_CASE("learned trees separate the toy data and validate") {
    TempCsv csv(toy_csv(60));
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "label");
    std::vector<std::size_t> rows(60);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    LearnedTree model = learn_tree(data, rows); // constructor enforces read-once etc.
    CHECK(model.train_accuracy == 1.0);
}

TEST_CASE("cross-validation partitions deterministically") {
    TempCsv csv(toy_csv(100));
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "label");
    auto folds = cross_validate(data, 10, 42);
    REQUIRE(folds.size() == 10);
    std::set<std::size_t> all;
    for (const FoldResult& f : folds) {
        CHECK(f.test_rows.size() == 10);
        for (std::size_t r : f.test_rows) CHECK(all.insert(r).second);
    }
    CHECK(all.size() == 100);

    auto again = cross_validate(data, 10, 42);
    for (std::size_t i = 0; i < folds.size(); ++i)
        CHECK(folds[i].test_rows == again[i].test_rows);

    auto different = cross_validate(data, 10, 43);
    bool any_difference = false;
    for (std::size_t i = 0; i < folds.size(); ++i)
        if (folds[i].test_rows != different[i].test_rows) any_difference = true;
    CHECK(any_difference);
}

TEST_CASE("fold assignment depends only on seed and row count") {
    TempCsv a(toy_csv(50));
    std::string other = "x,label\n";
    for (int i = 0; i < 50; ++i)
        other += std::to_string(100.0 - i) + "," + (i % 5 ? "0\n" : "1\n");
    TempCsv b(other);
    auto fa = cross_validate(BinarizedDataset::ingest_csv(a.path, "label"), 5, 99);
    auto fb = cross_validate(BinarizedDataset::ingest_csv(b.path, "label"), 5, 99);
    for (std::size_t i = 0; i < fa.size(); ++i) CHECK(fa[i].test_rows == fb[i].test_rows);
}

TEST_CASE("cross-validation rejects undersized inputs") {
    TempCsv csv("a,label\n1.0,0\n2.0,1\n3.0,0\n");
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "label");
    CHECK_THROWS_AS(cross_validate(data, 2, 1), InputError);
    CHECK_THROWS_AS(cross_validate(data, 1, 1), InputError);
}

TEST_CASE("batch explanation portfolio") {
    TempCsv csv(toy_csv(80));
    BinarizedDataset data = BinarizedDataset::ingest_csv(csv.path, "label");
    std::vector<std::size_t> rows(80);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    LearnedTree model = learn_tree(data, rows);

    std::vector<Instance> instances;
    for (std::size_t r = 0; r < data.row_count(); ++r)
        instances.push_back(data.binarize_row(model.features, r));

    BatchOptions options;
    options.kinds = ExplainKinds::all();
    options.deltas = {Rational(1), Rational(3, 4)};
    options.sample_limit = 25;
    options.seed = 7;

    auto [reports, stats] = batch_explain(model.tree, instances, &data.labels(), options);
    REQUIRE(reports.size() == 25);
    for (const ReasonReport& r : reports) {
        REQUIRE(r.error.empty());
        REQUIRE(r.direct);
        REQUIRE(r.sufficient);
        REQUIRE(r.minimal);
        CHECK(r.minimal->value.size() <= r.sufficient->value.size());
        CHECK(r.sufficient->value.size() <= r.direct->value.size());
        CHECK(r.negated == (r.label == 0));
        for (const ProbableResult& p : r.probable) {
            CHECK(p.achieved >= p.delta);
            if (p.delta == 1) CHECK(p.term == r.sufficient->value.term);
        }
        REQUIRE(r.features);
        REQUIRE(r.importance);
        REQUIRE(r.contrastive);
    }
    CHECK(stats.explained == 25);
    CHECK(stats.accuracy == 1.0); // train = test here
    CHECK(stats.tree_nodes == model.tree.node_count());

    // sampling and results are deterministic, and jobs do not change them
    auto [again, stats2] = batch_explain(model.tree, instances, &data.labels(), options);
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].index == reports[i].index);
        CHECK(scrub_times(report_to_json_line(again[i])) == scrub_times(report_to_json_line(reports[i])));
    }
    BatchOptions parallel = options;
    parallel.jobs = 3;
    auto [par, stats3] = batch_explain(model.tree, instances, &data.labels(), parallel);
    REQUIRE(par.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i)
        CHECK(scrub_times(report_to_json_line(par[i])) == scrub_times(report_to_json_line(reports[i])));
}

TEST_CASE("batch explanation records per-instance errors without failing the batch") {
    DecisionTree tree = testutil::cattleya();
    std::vector<Instance> instances = {testutil::bits("1111")};
    BatchOptions options;
    options.kinds = ExplainKinds::parse("probable");
    options.deltas = {}; // probable requested but no deltas: fine, yields nothing
    auto [reports, stats] = batch_explain(tree, instances, nullptr, options);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].error.empty());
    CHECK(reports[0].probable.empty());
}

TEST_CASE("explain kinds parser") {
    ExplainKinds k = ExplainKinds::parse("direct,minimal");
    CHECK(k.direct);
    CHECK(k.minimal);
    CHECK_FALSE(k.sufficient);
    CHECK_THROWS_AS(ExplainKinds::parse("bogus"), InputError);
}
