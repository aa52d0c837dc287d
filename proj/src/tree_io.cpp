#include "reasonkit/tree_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace reasonkit {

using nlohmann::json;

DecisionTree parse_tree(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("tree file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("root") || !doc.contains("nodes"))
        throw ParseError("tree file must be an object with keys n, root, nodes");
    if (!doc["n"].is_number_integer() || !doc["root"].is_number_integer() || !doc["nodes"].is_array())
        throw ParseError("tree file fields have wrong types");

    const auto n = doc["n"].get<std::int32_t>();
    const auto root_id = doc["root"].get<std::int64_t>();
    const auto& arr = doc["nodes"];
    if (arr.empty()) throw ParseError("tree file has no nodes");

    std::vector<std::int64_t> ids;
    std::unordered_map<std::int64_t, NodeId> index;
    ids.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("id") || !item["id"].is_number_integer())
            throw ParseError("every node needs an integer id");
        auto id = item["id"].get<std::int64_t>();
        if (!index.emplace(id, static_cast<NodeId>(ids.size())).second)
            throw ParseError("duplicate node id " + std::to_string(id));
        ids.push_back(id);
    }

    auto child = [&](const json& item, const char* key) -> NodeId {
        if (!item.contains(key) || !item[key].is_number_integer())
            throw ParseError(std::string("internal node misses integer '") + key + "'");
        auto id = item[key].get<std::int64_t>();
        auto it = index.find(id);
        if (it == index.end())
            throw DanglingChildError("child id " + std::to_string(id) + " does not name a node");
        return it->second;
    };

    std::vector<TreeNode> nodes;
    nodes.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.contains("leaf")) {
            if (!item["leaf"].is_number_integer())
                throw ParseError("leaf label must be an integer 0 or 1");
            int label = item["leaf"].get<int>();
            if (label != 0 && label != 1) throw ParseError("leaf label must be 0 or 1");
            nodes.push_back(TreeNode::leaf(label));
        } else if (item.contains("var")) {
            if (!item["var"].is_number_integer()) throw ParseError("node var must be an integer");
            nodes.push_back(TreeNode::internal(item["var"].get<Var>(), child(item, "left"), child(item, "right")));
        } else {
            throw ParseError("node is neither a leaf nor an internal node");
        }
    }

    auto root_it = index.find(root_id);
    if (root_it == index.end())
        throw DanglingChildError("root id " + std::to_string(root_id) + " does not name a node");

    // Remaining invariants (read-once, single parent, var range) are
    // enforced by the DecisionTree constructor.
    return DecisionTree(n, std::move(nodes), root_it->second, std::move(ids));
}

std::string serialize_tree(const DecisionTree& tree) {
    const auto& ext = tree.external_ids();
    auto id_of = [&](NodeId i) -> std::int64_t {
        return ext.empty() ? i : ext[static_cast<std::size_t>(i)];
    };
    json nodes = json::array();
    for (NodeId i = 0; i < static_cast<NodeId>(tree.node_count()); ++i) {
        const TreeNode& nd = tree.node(i);
        if (nd.is_leaf())
            nodes.push_back({{"id", id_of(i)}, {"leaf", int(nd.label)}});
        else
            nodes.push_back({{"id", id_of(i)},
                             {"var", nd.var},
                             {"left", id_of(nd.left)},
                             {"right", id_of(nd.right)}});
    }
    json doc = {{"n", tree.feature_count()}, {"root", id_of(tree.root())}, {"nodes", std::move(nodes)}};
    return doc.dump(2) + "\n";
}

DecisionTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open tree file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tree(buf.str());
}

void save_tree(const DecisionTree& tree, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write tree file '" + path + "'");
    out << serialize_tree(tree);
}

} // namespace reasonkit
