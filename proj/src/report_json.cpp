#include "reasonkit/report_json.hpp"

#include <json.hpp>

namespace reasonkit {

using nlohmann::json;

namespace {

json term_json(const Term& t) {
    json arr = json::array();
    for (const Literal& l : t) arr.push_back(l.str());
    return arr;
}

json literals_json(const std::vector<Literal>& lits) {
    json arr = json::array();
    for (const Literal& l : lits) arr.push_back(l.str());
    return arr;
}

json reason_json(const Timed<Reason>& timed) {
    return json{{"term", term_json(timed.value.term)},
                {"size", timed.value.size()},
                {"seed", timed.value.seed},
                {"time_ms", timed.ms}};
}

} // namespace

std::string report_to_json_line(const ReasonReport& report) {
    json doc;
    doc["instance"] = report.instance.str();
    doc["index"] = report.index;
    doc["label"] = report.label;
    doc["negated"] = report.negated;
    if (!report.error.empty()) {
        doc["error"] = report.error;
        return doc.dump();
    }
    json reasons = json::object();
    if (report.direct) reasons["direct"] = reason_json(*report.direct);
    if (report.sufficient) reasons["sufficient"] = reason_json(*report.sufficient);
    if (report.minimal) reasons["minimal"] = reason_json(*report.minimal);
    if (!report.probable.empty()) {
        json arr = json::array();
        for (const ProbableResult& p : report.probable)
            arr.push_back(json{{"delta", to_string(p.delta)},
                               {"term", term_json(p.term)},
                               {"size", p.term.size()},
                               {"precision", to_string(p.achieved)},
                               {"time_ms", p.ms}});
        reasons["probable"] = std::move(arr);
    }
    if (report.contrastive) {
        json arr = json::array();
        for (const Term& t : report.contrastive->value) arr.push_back(term_json(t));
        json entry = {{"terms", std::move(arr)}, {"time_ms", report.contrastive->ms}};
        if (report.contrastive_summary) {
            const ContrastiveStats& s = *report.contrastive_summary;
            entry["count"] = s.count.str();
            if (s.min_size) entry["min_size"] = *s.min_size;
            if (s.max_size) entry["max_size"] = *s.max_size;
            if (s.median_size) entry["median_size"] = *s.median_size;
        }
        reasons["contrastive"] = std::move(entry);
    }
    if (report.features) {
        const FeatureReport& fr = report.features->value;
        reasons["features"] = json{{"necessary", literals_json(fr.necessary)},
                                   {"relevant", literals_json(fr.relevant)},
                                   {"irrelevant_count", fr.irrelevant.size()},
                                   {"time_ms", report.features->ms}};
    }
    if (report.importance) {
        const ImportanceMap& imp = report.importance->value;
        json entries = json::array();
        for (const auto& [lit, value] : imp.entries)
            entries.push_back(json{{"literal", lit.str()}, {"importance", to_string(value)}});
        reasons["importance"] = json{{"count", imp.total_count.str()},
                                     {"exact", imp.exact},
                                     {"entries", std::move(entries)},
                                     {"time_ms", report.importance->ms}};
    }
    doc["reasons"] = std::move(reasons);
    return doc.dump();
}

std::string batch_stats_to_json(const BatchStats& stats) {
    json sizes = json::object();
    for (const auto& [kind, s] : stats.sizes)
        sizes[kind] = json{{"count", s.count},
                           {"median", s.median},
                           {"mean", s.mean},
                           {"stddev", s.stddev},
                           {"max", s.max}};
    json times = json::object();
    for (const auto& [kind, t] : stats.times)
        times[kind] = json{{"median_ms", t.median_ms}, {"p90_ms", t.p90_ms}, {"max_ms", t.max_ms}};
    json doc = {{"sizes", std::move(sizes)},
                {"times", std::move(times)},
                {"accuracy", stats.accuracy},
                {"tree_nodes", stats.tree_nodes},
                {"explained", stats.explained}};
    return doc.dump(2) + "\n";
}

std::string feature_map_to_json(const FeatureMap& features, const std::vector<Column>& columns) {
    json arr = json::array();
    for (std::size_t i = 0; i < features.size(); ++i) {
        const BoolFeature& f = features.at(i);
        json entry = {{"feature", i},
                      {"column", f.column},
                      {"column_name", columns[static_cast<std::size_t>(f.column)].name}};
        if (f.is_threshold) {
            entry["op"] = ">=";
            entry["threshold"] = f.threshold;
        } else {
            entry["op"] = "==";
            entry["category"] = f.category;
        }
        arr.push_back(std::move(entry));
    }
    return json{{"features", std::move(arr)}}.dump(2) + "\n";
}

FeatureMap feature_map_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("feature map is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("features") || !doc["features"].is_array())
        throw ParseError("feature map must be an object with a 'features' array");
    FeatureMap features;
    for (const auto& entry : doc["features"]) {
        const auto column = entry.at("column").get<std::int32_t>();
        const auto op = entry.at("op").get<std::string>();
        if (op == ">=") features.ensure_threshold(column, entry.at("threshold").get<double>());
        else if (op == "==") features.ensure_equals(column, entry.at("category").get<std::string>());
        else throw ParseError("unknown feature op '" + op + "'");
    }
    return features;
}

} // namespace reasonkit
