#include "reasonkit/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace reasonkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Minimal RFC-4180 reader: quoted fields, doubled quotes, embedded newlines.
std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open CSV file '" + path + "'");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    auto end_field = [&] { row.push_back(std::move(field)); field.clear(); };
    auto end_row = [&] {
        end_field();
        if (row.size() > 1 || !row[0].empty()) rows.push_back(std::move(row));
        row.clear();
    };
    for (std::size_t i = 0; i < content.size(); ++i) {
        char c = content[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') { field += '"'; ++i; }
                else quoted = false;
            } else field += c;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_row();
        } else {
            field += c;
        }
    }
    if (!field.empty() || !row.empty()) end_row();
    if (quoted) throw ParseError("CSV ends inside a quoted field");
    return rows;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

double gini(std::size_t zeros, std::size_t ones) {
    const double n = double(zeros + ones);
    if (n == 0) return 0.0;
    const double p0 = double(zeros) / n;
    const double p1 = double(ones) / n;
    return 1.0 - p0 * p0 - p1 * p1;
}

} // namespace

std::string BoolFeature::describe(const std::vector<Column>& cols) const {
    std::ostringstream out;
    out << cols[static_cast<std::size_t>(column)].name;
    if (is_threshold) out << " >= " << threshold;
    else out << " == " << category;
    return out.str();
}

std::int32_t FeatureMap::ensure_threshold(std::int32_t column, double threshold) {
    for (std::size_t i = 0; i < feats_.size(); ++i)
        if (feats_[i].is_threshold && feats_[i].column == column && feats_[i].threshold == threshold)
            return static_cast<std::int32_t>(i);
    feats_.push_back(BoolFeature{column, true, threshold, {}});
    return static_cast<std::int32_t>(feats_.size() - 1);
}

std::int32_t FeatureMap::ensure_equals(std::int32_t column, const std::string& category) {
    for (std::size_t i = 0; i < feats_.size(); ++i)
        if (!feats_[i].is_threshold && feats_[i].column == column && feats_[i].category == category)
            return static_cast<std::int32_t>(i);
    feats_.push_back(BoolFeature{column, false, 0.0, category});
    return static_cast<std::int32_t>(feats_.size() - 1);
}

BinarizedDataset BinarizedDataset::ingest_csv(const std::string& path, const std::string& label_column,
                                              const std::optional<std::string>& target_class) {
    auto rows = read_csv(path);
    if (rows.size() < 2) throw ParseError("CSV needs a header row and at least one data row");
    const auto& header = rows.front();
    std::size_t label_idx = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == label_column) label_idx = i;
    if (label_idx == header.size())
        throw InputError("label column '" + label_column + "' not found in CSV header");

    const std::size_t ncols = header.size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != ncols)
            throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                             " cells, header has " + std::to_string(ncols));
        for (std::size_t c = 0; c < ncols; ++c)
            if (rows[r][c].empty())
                throw ParseError("missing value at row " + std::to_string(r + 1) + ", column '" +
                                 header[c] + "'");
    }

    BinarizedDataset data;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::string& cell = rows[r][label_idx];
        if (target_class) {
            data.labels_.push_back(cell == *target_class ? 1 : 0);
        } else if (cell == "0" || cell == "1") {
            data.labels_.push_back(static_cast<std::uint8_t>(cell == "1"));
        } else {
            throw ParseError("label at row " + std::to_string(r + 1) +
                             " is not 0/1; pass a target class for one-vs-all reduction");
        }
    }

    for (std::size_t c = 0; c < ncols; ++c) {
        if (c == label_idx) continue;
        Column col;
        col.name = header[c];
        col.numeric = true;
        col.numbers.reserve(rows.size() - 1);
        for (std::size_t r = 1; r < rows.size() && col.numeric; ++r) {
            double value = 0;
            if (parse_double(rows[r][c], value)) col.numbers.push_back(value);
            else col.numeric = false;
        }
        if (!col.numeric) {
            col.numbers.clear();
            col.raw.reserve(rows.size() - 1);
            for (std::size_t r = 1; r < rows.size(); ++r) col.raw.push_back(rows[r][c]);
        }
        data.columns_.push_back(std::move(col));
    }
    return data;
}

bool BinarizedDataset::feature_value(const BoolFeature& f, std::size_t row) const {
    const Column& col = columns_[static_cast<std::size_t>(f.column)];
    if (f.is_threshold) return col.numbers[row] >= f.threshold;
    return col.raw[row] == f.category;
}

Instance BinarizedDataset::binarize_row(const FeatureMap& features, std::size_t row) const {
    std::vector<std::uint8_t> bits(features.size());
    for (std::size_t i = 0; i < features.size(); ++i)
        bits[i] = feature_value(features.at(i), row) ? 1 : 0;
    return Instance(std::move(bits));
}

namespace {

struct SplitCandidate {
    BoolFeature feature;
    double gain = 0.0;
};

// Candidate features on this node's rows: midpoint thresholds per numeric
// column, one-hot equality per categorical value. Per-node enumeration keeps
// the binarization on-the-fly.
std::optional<SplitCandidate> best_split(const BinarizedDataset& data,
                                         const std::vector<std::size_t>& rows,
                                         const std::set<std::pair<std::int32_t, std::string>>& used) {
    const auto& labels = data.labels();
    std::size_t ones = 0;
    for (std::size_t r : rows) ones += labels[r];
    const double parent = gini(rows.size() - ones, ones);
    std::optional<SplitCandidate> best;

    auto consider = [&](const BoolFeature& f, const std::string& key) {
        if (used.count({f.column, key})) return;
        std::size_t right_n = 0, right_ones = 0;
        for (std::size_t r : rows) {
            if (data.feature_value(f, r)) {
                ++right_n;
                right_ones += labels[r];
            }
        }
        if (right_n == 0 || right_n == rows.size()) return;
        const std::size_t left_n = rows.size() - right_n;
        const std::size_t left_ones = ones - right_ones;
        const double weighted = (double(left_n) * gini(left_n - left_ones, left_ones) +
                                 double(right_n) * gini(right_n - right_ones, right_ones)) /
                                double(rows.size());
        const double gain = parent - weighted;
        if (gain <= 1e-12) return;
        if (!best || gain > best->gain + 1e-12) best = SplitCandidate{f, gain};
    };

    for (std::size_t c = 0; c < data.columns().size(); ++c) {
        const Column& col = data.columns()[c];
        if (col.numeric) {
            std::vector<double> values;
            values.reserve(rows.size());
            for (std::size_t r : rows) values.push_back(col.numbers[r]);
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            for (std::size_t i = 1; i < values.size(); ++i) {
                const double midpoint = (values[i - 1] + values[i]) / 2.0;
                BoolFeature f{static_cast<std::int32_t>(c), true, midpoint, {}};
                consider(f, std::to_string(midpoint));
            }
        } else {
            std::set<std::string> seen;
            for (std::size_t r : rows) seen.insert(col.raw[r]);
            for (const std::string& value : seen) {
                BoolFeature f{static_cast<std::int32_t>(c), false, 0.0, value};
                consider(f, value);
            }
        }
    }
    return best;
}

} // namespace

LearnedTree learn_tree(const BinarizedDataset& data, std::span<const std::size_t> rows,
                       const LearnConfig& config) {
    if (rows.empty()) throw InputError("cannot learn from an empty training set");
    const auto& labels = data.labels();

    FeatureMap features;
    std::vector<TreeNode> nodes;
    auto add = [&](TreeNode nd) {
        nodes.push_back(nd);
        return static_cast<NodeId>(nodes.size() - 1);
    };

    auto grow = [&](auto&& self, std::vector<std::size_t> node_rows, int depth,
                    std::set<std::pair<std::int32_t, std::string>>& used) -> NodeId {
        std::size_t ones = 0;
        for (std::size_t r : node_rows) ones += labels[r];
        const bool pure = ones == 0 || ones == node_rows.size();
        const bool depth_capped = config.max_depth > 0 && depth >= config.max_depth;
        std::optional<SplitCandidate> split;
        if (!pure && !depth_capped) split = best_split(data, node_rows, used);
        if (!split)
            return add(TreeNode::leaf(ones > node_rows.size() - ones ? 1 : 0));

        const BoolFeature& f = split->feature;
        const std::string key = f.is_threshold ? std::to_string(f.threshold) : f.category;
        const std::int32_t feature_id = f.is_threshold
                                            ? features.ensure_threshold(f.column, f.threshold)
                                            : features.ensure_equals(f.column, f.category);
        std::vector<std::size_t> left_rows, right_rows;
        for (std::size_t r : node_rows)
            (data.feature_value(f, r) ? right_rows : left_rows).push_back(r);

        NodeId me = add(TreeNode{});
        used.insert({f.column, key});
        NodeId l = self(self, std::move(left_rows), depth + 1, used);
        NodeId r = self(self, std::move(right_rows), depth + 1, used);
        used.erase({f.column, key});
        nodes[static_cast<std::size_t>(me)] = TreeNode::internal(feature_id, l, r);
        return me;
    };

    std::set<std::pair<std::int32_t, std::string>> used;
    std::vector<std::size_t> all(rows.begin(), rows.end());
    NodeId root = grow(grow, all, 0, used);

    DecisionTree tree(static_cast<std::int32_t>(features.size()), std::move(nodes), root);
    std::size_t correct = 0;
    for (std::size_t r : rows)
        if (tree.evaluate(data.binarize_row(features, r)) == labels[r]) ++correct;
    return LearnedTree{std::move(tree), std::move(features), double(correct) / double(rows.size())};
}

std::vector<FoldResult> cross_validate(const BinarizedDataset& data, std::size_t folds,
                                       std::uint64_t seed, const LearnConfig& config) {
    if (folds < 2) throw InputError("cross-validation needs at least 2 folds");
    if (data.row_count() < 2 * folds)
        throw InputError("too few rows for " + std::to_string(folds) + "-fold cross-validation (need >= " +
                         std::to_string(2 * folds) + ")");

    // Fold assignment is a function of (seed, row count) only.
    std::vector<std::size_t> order(data.row_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(seed);
    for (std::size_t i = order.size() - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(i + 1)]);

    const std::size_t base = order.size() / folds;
    const std::size_t extra = order.size() % folds;
    std::vector<FoldResult> results;
    std::size_t start = 0;
    for (std::size_t f = 0; f < folds; ++f) {
        const std::size_t len = base + (f < extra ? 1 : 0);
        std::vector<std::size_t> test(order.begin() + std::ptrdiff_t(start),
                                      order.begin() + std::ptrdiff_t(start + len));
        std::vector<std::size_t> train;
        train.reserve(order.size() - len);
        train.insert(train.end(), order.begin(), order.begin() + std::ptrdiff_t(start));
        train.insert(train.end(), order.begin() + std::ptrdiff_t(start + len), order.end());
        std::sort(test.begin(), test.end());
        std::sort(train.begin(), train.end());

        LearnedTree model = learn_tree(data, train, config);
        std::size_t correct = 0;
        for (std::size_t r : test)
            if (model.tree.evaluate(data.binarize_row(model.features, r)) == data.labels()[r]) ++correct;
        const double acc = test.empty() ? 0.0 : double(correct) / double(test.size());
        results.push_back(FoldResult{std::move(model), std::move(test), acc});
        start += len;
    }
    return results;
}

ExplainKinds ExplainKinds::all() {
    return ExplainKinds{true, true, true, true, true, true, true};
}

ExplainKinds ExplainKinds::parse(const std::string& comma_list) {
    ExplainKinds kinds;
    std::stringstream ss(comma_list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "direct") kinds.direct = true;
        else if (item == "sufficient") kinds.sufficient = true;
        else if (item == "minimal") kinds.minimal = true;
        else if (item == "probable") kinds.probable = true;
        else if (item == "contrastive") kinds.contrastive = true;
        else if (item == "features") kinds.features = true;
        else if (item == "importance") kinds.importance = true;
        else if (item == "all") kinds = all();
        else throw InputError("unknown explanation kind '" + item + "'");
    }
    return kinds;
}

namespace {

ReasonReport explain_one(const DecisionTree& tree, const Instance& x, std::size_t index,
                         const BatchOptions& options) {
    ReasonReport report;
    report.index = index;
    report.instance = x;
    try {
        report.label = tree.evaluate(x);
        report.negated = report.label == 0;
        const DecisionTree* effective = &tree;
        std::optional<DecisionTree> flipped;
        if (report.negated) {
            flipped = negate(tree);
            effective = &*flipped;
        }

        MonotoneClauseSet g = restrict_to_instance(*effective, x);
        MonotoneClauseSet mg = minimize(g);
        std::vector<Literal> path = path_literals(*effective, x);

        if (options.kinds.direct) {
            auto t0 = Clock::now();
            Reason r = direct_reason(*effective, x);
            report.direct = Timed<Reason>{std::move(r), ms_since(t0)};
        }
        if (options.kinds.sufficient) {
            auto t0 = Clock::now();
            Term seed(path);
            Reason r = sufficient_reason(mg, seed, removal_sequence(seed, path, options.order));
            report.sufficient = Timed<Reason>{std::move(r), ms_since(t0)};
        }
        if (options.kinds.minimal) {
            auto t0 = Clock::now();
            Reason r = minimal_reason(mg);
            report.minimal = Timed<Reason>{std::move(r), ms_since(t0)};
        }
        if (options.kinds.probable) {
            for (const Rational& delta : options.deltas) {
                auto t0 = Clock::now();
                Reason r = probable_reason(*effective, x, delta, options.order);
                Rational achieved = precision(*effective, r.term);
                report.probable.push_back(
                    ProbableResult{delta, std::move(r.term), std::move(achieved), ms_since(t0)});
            }
        }
        if (options.kinds.contrastive) {
            auto t0 = Clock::now();
            std::vector<Term> explanations = all_contrastive(mg);
            report.contrastive_summary = contrastive_stats(explanations);
            report.contrastive = Timed<std::vector<Term>>{std::move(explanations), ms_since(t0)};
        }
        if (options.kinds.features) {
            auto t0 = Clock::now();
            FeatureReport fr = explanatory_features(mg);
            report.features = Timed<FeatureReport>{std::move(fr), ms_since(t0)};
        }
        if (options.kinds.importance) {
            auto t0 = Clock::now();
            ImportanceMap imp = count_and_importance(mg, options.cap);
            report.importance = Timed<ImportanceMap>{std::move(imp), ms_since(t0)};
        }
    } catch (const Error& e) {
        report.error = e.what();
    }
    return report;
}

SizeStats size_stats(std::vector<std::size_t> sizes) {
    SizeStats s;
    s.count = sizes.size();
    if (sizes.empty()) return s;
    std::sort(sizes.begin(), sizes.end());
    s.max = sizes.back();
    const std::size_t m = sizes.size();
    s.median = (m % 2) ? double(sizes[m / 2])
                       : (double(sizes[m / 2 - 1]) + double(sizes[m / 2])) / 2.0;
    double sum = 0;
    for (std::size_t v : sizes) sum += double(v);
    s.mean = sum / double(m);
    double var = 0;
    for (std::size_t v : sizes) var += (double(v) - s.mean) * (double(v) - s.mean);
    s.stddev = std::sqrt(var / double(m));
    return s;
}

TimeStats time_stats(std::vector<double> times) {
    TimeStats t;
    if (times.empty()) return t;
    std::sort(times.begin(), times.end());
    const std::size_t m = times.size();
    t.median_ms = (m % 2) ? times[m / 2] : (times[m / 2 - 1] + times[m / 2]) / 2.0;
    t.p90_ms = times[std::min(m - 1, (m * 9) / 10)];
    t.max_ms = times.back();
    return t;
}

} // namespace

std::pair<std::vector<ReasonReport>, BatchStats>
batch_explain(const DecisionTree& tree, const std::vector<Instance>& instances,
              const std::vector<std::uint8_t>* true_labels, const BatchOptions& options) {
    // Seeded sample of at most sample_limit instances, kept in input order.
    std::vector<std::size_t> picked(instances.size());
    for (std::size_t i = 0; i < picked.size(); ++i) picked[i] = i;
    if (instances.size() > options.sample_limit) {
        Rng rng(options.seed);
        for (std::size_t i = 0; i < options.sample_limit; ++i)
            std::swap(picked[i], picked[i + rng.below(picked.size() - i)]);
        picked.resize(options.sample_limit);
        std::sort(picked.begin(), picked.end());
    }

    std::vector<ReasonReport> reports(picked.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < picked.size(); ++i)
            reports[i] = explain_one(tree, instances[picked[i]], picked[i], options);
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= picked.size()) return;
                    reports[i] = explain_one(tree, instances[picked[i]], picked[i], options);
                }
            });
        for (auto& t : workers) t.join();
    }

    BatchStats stats;
    stats.tree_nodes = tree.node_count();
    stats.explained = reports.size();
    std::map<std::string, std::vector<std::size_t>> sizes;
    std::map<std::string, std::vector<double>> times;
    std::size_t correct = 0, labeled = 0;
    for (const ReasonReport& r : reports) {
        if (!r.error.empty()) continue;
        if (true_labels) {
            ++labeled;
            if ((*true_labels)[r.index] == r.label) ++correct;
        }
        auto record = [&](const char* kind, std::size_t size, double ms) {
            sizes[kind].push_back(size);
            times[kind].push_back(ms);
        };
        if (r.direct) record("direct", r.direct->value.size(), r.direct->ms);
        if (r.sufficient) record("sufficient", r.sufficient->value.size(), r.sufficient->ms);
        if (r.minimal) record("minimal", r.minimal->value.size(), r.minimal->ms);
        for (const ProbableResult& p : r.probable)
            record(("probable:" + to_string(p.delta)).c_str(), p.term.size(), p.ms);
        if (r.contrastive) record("contrastive", r.contrastive->value.size(), r.contrastive->ms);
        if (r.features) record("features", r.features->value.relevant.size(), r.features->ms);
        if (r.importance) record("importance", r.importance->value.entries.size(), r.importance->ms);
    }
    for (auto& [kind, values] : sizes) stats.sizes.emplace_back(kind, size_stats(values));
    for (auto& [kind, values] : times) stats.times.emplace_back(kind, time_stats(values));
    stats.accuracy = labeled ? double(correct) / double(labeled) : 0.0;
    return {std::move(reports), std::move(stats)};
}

} // namespace reasonkit
