#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reasonkit/abductive.hpp"
#include "reasonkit/contrastive.hpp"
#include "reasonkit/rng.hpp"
#include "reasonkit/tree.hpp"

namespace reasonkit {

// Raw ingested column. Numeric columns keep parsed doubles; categorical
// columns keep the cell strings (one-hot features are derived from them).
struct Column {
    std::string name;
    bool numeric = false;
    std::vector<double> numbers;
    std::vector<std::string> raw;
};

// Derived Boolean feature: a deterministic predicate of exactly one column.
struct BoolFeature {
    std::int32_t column = 0;
    bool is_threshold = true; // numeric: value >= threshold; else: value == category
    double threshold = 0.0;
    std::string category;

    std::string describe(const std::vector<Column>& cols) const;
};

class FeatureMap {
  public:
    std::int32_t ensure_threshold(std::int32_t column, double threshold);
    std::int32_t ensure_equals(std::int32_t column, const std::string& category);
    std::size_t size() const { return feats_.size(); }
    const BoolFeature& at(std::size_t i) const { return feats_[i]; }
    const std::vector<BoolFeature>& features() const { return feats_; }

  private:
    std::vector<BoolFeature> feats_;
};

// Tabular data with binary labels. Numeric thresholds are chosen lazily by
// the learner (midpoints of consecutive distinct values on the node's rows);
// categorical columns are one-hot.
class BinarizedDataset {
  public:
    // `target_class`: one-vs-all reduction for multi-class label columns.
    // Without it the label column must already contain 0/1. Missing cells are
    // rejected with a row/column diagnostic.
    static BinarizedDataset ingest_csv(const std::string& path, const std::string& label_column,
                                       const std::optional<std::string>& target_class = std::nullopt);

    std::size_t row_count() const { return labels_.size(); }
    const std::vector<Column>& columns() const { return columns_; }
    const std::vector<std::uint8_t>& labels() const { return labels_; }

    bool feature_value(const BoolFeature& f, std::size_t row) const;
    Instance binarize_row(const FeatureMap& features, std::size_t row) const;

  private:
    std::vector<Column> columns_;
    std::vector<std::uint8_t> labels_;
};

struct LearnConfig {
    int max_depth = 0; // 0 = unlimited; splitting stops on pure nodes or zero gain
};

struct LearnedTree {
    DecisionTree tree;
    FeatureMap features;
    double train_accuracy = 0.0;
};

// Greedy top-down CART-style learner maximizing Gini impurity decrease.
// A (column, threshold) feature never repeats on a path, which yields the
// read-once invariant by construction. Leaf label = majority class.
LearnedTree learn_tree(const BinarizedDataset& data, std::span<const std::size_t> rows,
                       const LearnConfig& config = {});

struct FoldResult {
    LearnedTree model;
    std::vector<std::size_t> test_rows;
    double test_accuracy = 0.0;
};

// Seeded deterministic partition into contiguous chunks of a shuffled index
// sequence; one tree per fold trained on the remaining rows. Requires
// rows >= 2 * folds.
std::vector<FoldResult> cross_validate(const BinarizedDataset& data, std::size_t folds,
                                       std::uint64_t seed, const LearnConfig& config = {});

struct ExplainKinds {
    bool direct = false;
    bool sufficient = false;
    bool minimal = false;
    bool probable = false;
    bool contrastive = false;
    bool features = false;
    bool importance = false;

    static ExplainKinds parse(const std::string& comma_list);
    static ExplainKinds all();
};

struct BatchOptions {
    ExplainKinds kinds = ExplainKinds::all();
    std::vector<Rational> deltas;       // for probable
    std::size_t cap = 10000;            // enumeration cap
    std::size_t sample_limit = 100;     // instances sampled per batch
    std::uint64_t seed = 1;
    RemovalOrder order = RemovalOrder::path;
    int jobs = 1;
};

template <class T>
struct Timed {
    T value;
    double ms = 0.0;
};

struct ProbableResult {
    Rational delta;
    Term term;
    Rational achieved; // precision of the reported term
    double ms = 0.0;
};

struct ReasonReport {
    std::size_t index = 0;
    Instance instance;
    int label = 0;      // class assigned by the tree
    bool negated = false; // reasons computed on the negated tree (label 0)
    std::optional<Timed<Reason>> direct;
    std::optional<Timed<Reason>> sufficient;
    std::optional<Timed<Reason>> minimal;
    std::vector<ProbableResult> probable;
    std::optional<Timed<std::vector<Term>>> contrastive;
    std::optional<ContrastiveStats> contrastive_summary;
    std::optional<Timed<FeatureReport>> features;
    std::optional<Timed<ImportanceMap>> importance;
    std::string error; // nonempty if this instance failed; batch continues
};

struct SizeStats {
    std::size_t count = 0;
    double median = 0.0, mean = 0.0, stddev = 0.0;
    std::size_t max = 0;
};

struct TimeStats {
    double median_ms = 0.0, p90_ms = 0.0, max_ms = 0.0;
};

struct BatchStats {
    std::vector<std::pair<std::string, SizeStats>> sizes;
    std::vector<std::pair<std::string, TimeStats>> times;
    double accuracy = 0.0; // against true_labels when given
    std::size_t tree_nodes = 0;
    std::size_t explained = 0;
};

// Portfolio explanation for a batch of instances. Class-0 instances are
// explained against the negated tree. Per-instance errors are recorded, not
// fatal. With jobs > 1 instances are explained concurrently; report order is
// by input index either way.
std::pair<std::vector<ReasonReport>, BatchStats>
batch_explain(const DecisionTree& tree, const std::vector<Instance>& instances,
              const std::vector<std::uint8_t>* true_labels, const BatchOptions& options);

} // namespace reasonkit
