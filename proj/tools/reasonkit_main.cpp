#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reasonkit/abductive.hpp"
#include "reasonkit/contrastive.hpp"
#include "reasonkit/pipeline.hpp"
#include "reasonkit/report_json.hpp"
#include "reasonkit/tree_io.hpp"
#include "reasonkit/verification.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace reasonkit;

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("REASONKIT_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

int cmd_learn(const std::string& data_path, const std::string& label,
              const std::optional<std::string>& target_class, std::size_t folds,
              const std::optional<std::uint64_t>& seed_flag, const std::string& out_dir) {
    const std::uint64_t seed = resolve_seed(seed_flag);
    BinarizedDataset data = BinarizedDataset::ingest_csv(data_path, label, target_class);
    std::vector<FoldResult> folds_out = cross_validate(data, folds, seed);

    fs::create_directories(out_dir);
    json summary;
    summary["data"] = data_path;
    summary["label"] = label;
    summary["folds"] = folds;
    summary["seed"] = seed;
    json per_fold = json::array();
    double mean_acc = 0, mean_nodes = 0;
    for (std::size_t f = 0; f < folds_out.size(); ++f) {
        const FoldResult& fold = folds_out[f];
        const std::string tree_file = out_dir + "/tree_" + std::to_string(f) + ".json";
        const std::string feat_file = out_dir + "/features_" + std::to_string(f) + ".json";
        save_tree(fold.model.tree, tree_file);
        std::ofstream(feat_file) << feature_map_to_json(fold.model.features, data.columns());
        per_fold.push_back(json{{"fold", f},
                                {"tree", tree_file},
                                {"features", feat_file},
                                {"accuracy", fold.test_accuracy},
                                {"train_accuracy", fold.model.train_accuracy},
                                {"nodes", fold.model.tree.node_count()},
                                {"binary_features", fold.model.features.size()},
                                {"test_rows", fold.test_rows.size()}});
        mean_acc += fold.test_accuracy;
        mean_nodes += double(fold.model.tree.node_count());
    }
    summary["mean_accuracy"] = mean_acc / double(folds_out.size());
    summary["mean_nodes"] = mean_nodes / double(folds_out.size());
    summary["per_fold"] = std::move(per_fold);
    std::ofstream(out_dir + "/summary.json") << summary.dump(2) << "\n";
    std::cout << "wrote " << folds_out.size() << " trees to " << out_dir << " (mean accuracy "
              << summary["mean_accuracy"].get<double>() << ")\n";
    return 0;
}

int cmd_explain(const std::string& tree_path, const std::optional<std::string>& instance_arg,
                const std::optional<std::string>& instances_path, const std::string& kinds_arg,
                const std::vector<std::string>& delta_args, std::size_t cap,
                const std::string& order_arg, const std::optional<std::uint64_t>& seed_flag,
                int jobs, const std::optional<std::string>& importance_csv_path,
                const std::optional<std::string>& stats_path) {
    DecisionTree tree = load_tree(tree_path);

    std::vector<Instance> instances;
    if (instance_arg) instances.push_back(Instance::from_string(*instance_arg));
    if (instances_path) {
        std::ifstream in(*instances_path);
        if (!in) throw InputError("cannot open instances file '" + *instances_path + "'");
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) instances.push_back(Instance::from_string(line));
        }
    }
    if (instances.empty()) throw InputError("give --instance BITS or --instances FILE");
    for (const Instance& x : instances)
        if (x.size() != std::size_t(tree.feature_count()))
            throw InputError("instance '" + x.str() + "' has " + std::to_string(x.size()) +
                             " bits, tree expects " + std::to_string(tree.feature_count()));

    BatchOptions options;
    options.kinds = ExplainKinds::parse(kinds_arg);
    for (const std::string& d : delta_args) options.deltas.push_back(parse_rational(d));
    if (options.kinds.probable && options.deltas.empty())
        throw InputError("--kinds probable needs at least one --delta p/q");
    options.cap = cap;
    options.sample_limit = instances.size(); // explain exactly what was given
    options.seed = resolve_seed(seed_flag);
    options.order = parse_order(order_arg);
    options.jobs = jobs;

    auto [reports, stats] = batch_explain(tree, instances, nullptr, options);
    for (const ReasonReport& r : reports) {
        std::cout << report_to_json_line(r) << "\n";
        if (importance_csv_path && r.importance) {
            std::string path = *importance_csv_path;
            if (reports.size() > 1) {
                fs::path p(path);
                path = (p.parent_path() / (p.stem().string() + "_" + std::to_string(r.index) +
                                           p.extension().string())).string();
            }
            std::ofstream(path) << importance_csv(r.importance->value, tree.feature_count());
        }
    }
    if (stats_path) std::ofstream(*stats_path) << batch_stats_to_json(stats);
    for (const ReasonReport& r : reports)
        if (!r.error.empty()) return 1;
    return 0;
}

int cmd_verify(std::size_t trials, std::int32_t max_vars, const std::optional<std::uint64_t>& seed_flag,
               bool inject_fault) {
    VerifyOptions options;
    options.trials = trials;
    options.max_vars = max_vars;
    options.seed = resolve_seed(seed_flag);
    options.inject_fault = inject_fault;
    std::vector<CheckResult> results = run_verification(options);
    std::size_t width = 0;
    for (const CheckResult& r : results) width = std::max(width, r.name.size());
    for (const CheckResult& r : results)
        std::cout << std::left << std::setw(int(width) + 2) << r.name
                  << (r.failures == 0 ? "pass" : "FAIL") << "  (" << r.cases - r.failures << "/"
                  << r.cases << ")\n";
    return all_passed(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"explanation portfolio for Boolean decision-tree classifiers"};
    app.require_subcommand(1);

    // learn
    auto* learn = app.add_subcommand("learn", "cross-validated Gini tree learning from CSV");
    std::string data_path, label, out_dir = "out";
    std::optional<std::string> target_class;
    std::size_t folds = 10;
    std::optional<std::uint64_t> seed;
    learn->add_option("--data", data_path, "CSV file with a header row")->required();
    learn->add_option("--label", label, "label column name")->required();
    learn->add_option("--target-class", target_class, "one-vs-all target class value");
    learn->add_option("--folds", folds, "number of folds")->default_val(10);
    learn->add_option("--seed", seed, "seed (fallback: REASONKIT_SEED, then 1)");
    learn->add_option("--out-dir", out_dir, "output directory")->required();

    // explain
    auto* explain = app.add_subcommand("explain", "explanation portfolio for instances of a tree");
    std::string tree_path, kinds = "direct,sufficient,minimal", order = "path";
    std::optional<std::string> instance_arg, instances_path, importance_csv_path, stats_path;
    std::vector<std::string> deltas;
    std::size_t cap = 10000;
    int jobs = 1;
    explain->add_option("--tree", tree_path, "tree file (JSON)")->required();
    explain->add_option("--instance", instance_arg, "instance bits, e.g. 1011");
    explain->add_option("--instances", instances_path, "file with one bit string per line");
    explain->add_option("--kinds", kinds,
                        "comma list of direct,sufficient,minimal,probable,contrastive,features,importance,all");
    explain->add_option("--delta", deltas, "probable-reason threshold p/q (repeatable)");
    explain->add_option("--cap", cap, "enumeration cap")->default_val(10000);
    explain->add_option("--order", order, "greedy removal order: path|index")->default_val("path");
    explain->add_option("--seed", seed, "seed (fallback: REASONKIT_SEED, then 1)");
    explain->add_option("--jobs", jobs, "parallel explanation workers")->default_val(1);
    explain->add_option("--importance-csv", importance_csv_path, "write per-instance importance CSV here");
    explain->add_option("--stats", stats_path, "write aggregate batch statistics (JSON) here");

    // verify
    auto* verify = app.add_subcommand("verify", "randomized cross-verification of every invariant");
    std::size_t trials = 1000;
    std::int32_t max_vars = 12;
    bool inject_fault = false;
    verify->add_option("--trials", trials, "random (tree, instance) pairs")->default_val(1000);
    verify->add_option("--max-vars", max_vars, "variable budget per random tree")->default_val(12);
    verify->add_option("--seed", seed, "seed (fallback: REASONKIT_SEED, then 1)");
    verify->add_flag("--inject-fault", inject_fault, "flip one leaf per trial; checks must fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (learn->parsed())
            return cmd_learn(data_path, label, target_class, folds, seed, out_dir);
        if (explain->parsed())
            return cmd_explain(tree_path, instance_arg, instances_path, kinds, deltas, cap, order,
                               seed, jobs, importance_csv_path, stats_path);
        if (verify->parsed())
            return cmd_verify(trials, max_vars, seed, inject_fault);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
