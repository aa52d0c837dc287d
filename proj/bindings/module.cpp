#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reasonkit/abductive.hpp"
#include "reasonkit/contrastive.hpp"
#include "reasonkit/oracles.hpp"
#include "reasonkit/pipeline.hpp"
#include "reasonkit/tree_io.hpp"
#include "reasonkit/verification.hpp"

namespace py = pybind11;
using namespace reasonkit;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(boost::multiprecision::numerator(r).str() + "/" +
                    boost::multiprecision::denominator(r).str());
}

py::int_ to_pyint(const BigCount& c) {
    return py::cast<py::int_>(py::module_::import("builtins").attr("int")(c.str()));
}

Rational rational_from(py::handle obj) {
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    if (py::isinstance<py::int_>(obj)) return Rational(BigCount(py::str(obj).cast<std::string>()));
    // fractions.Fraction or anything with numerator/denominator
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return Rational(BigCount(py::str(obj.attr("numerator")).cast<std::string>()),
                        BigCount(py::str(obj.attr("denominator")).cast<std::string>()));
    throw InputError("delta must be a Fraction, an int, or a 'p/q' string");
}

std::vector<std::pair<Var, bool>> term_pairs(const Term& t) {
    std::vector<std::pair<Var, bool>> out;
    for (const Literal& l : t) out.emplace_back(l.var, l.positive);
    return out;
}

Term term_from_pairs(const std::vector<std::pair<Var, bool>>& pairs) {
    std::vector<Literal> lits;
    lits.reserve(pairs.size());
    for (auto [v, p] : pairs) lits.push_back({v, p});
    return Term(std::move(lits));
}

py::list terms_list(const std::vector<Term>& terms) {
    py::list out;
    for (const Term& t : terms) out.append(term_pairs(t));
    return out;
}

py::dict reason_dict(const Reason& r) {
    py::dict d;
    d["term"] = term_pairs(r.term);
    d["kind"] = std::string(to_string(r.kind));
    d["size"] = r.size();
    d["seed"] = r.seed;
    if (r.kind == ReasonKind::probable) d["delta"] = to_fraction(r.delta);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "explanation portfolio for Boolean decision-tree classifiers";

    py::register_exception<Error>(m, "ReasonkitError");

    py::class_<Instance>(m, "Instance")
        .def(py::init([](const std::string& bits) { return Instance::from_string(bits); }))
        .def("__len__", &Instance::size)
        .def("__getitem__",
             [](const Instance& x, std::size_t i) {
                 if (i >= x.size()) throw py::index_error();
                 return x[i];
             })
        .def("__str__", &Instance::str)
        .def("__repr__", [](const Instance& x) { return "Instance('" + x.str() + "')"; });

    py::class_<DecisionTree>(m, "DecisionTree")
        .def_property_readonly("feature_count", &DecisionTree::feature_count)
        .def_property_readonly("node_count", &DecisionTree::node_count)
        .def_property_readonly("leaf_count", &DecisionTree::leaf_count)
        .def_property_readonly("internal_count", &DecisionTree::internal_count)
        .def_property_readonly("variables", [](const DecisionTree& t) { return t.variables(); })
        .def("evaluate",
             [](const DecisionTree& t, const std::string& bits) {
                 return t.evaluate(Instance::from_string(bits));
             })
        .def("evaluate", [](const DecisionTree& t, const Instance& x) { return t.evaluate(x); })
        .def("negate", [](const DecisionTree& t) { return negate(t); })
        .def("serialize", &serialize_tree)
        .def("__repr__", [](const DecisionTree& t) {
            return "DecisionTree(n=" + std::to_string(t.feature_count()) +
                   ", nodes=" + std::to_string(t.node_count()) + ")";
        });

    py::class_<MonotoneClauseSet>(m, "MonotoneClauseSet")
        .def_property_readonly("clauses", [](const MonotoneClauseSet& g) { return g.clauses(); })
        .def_property_readonly("feature_count", &MonotoneClauseSet::feature_count)
        .def("__len__", &MonotoneClauseSet::size)
        .def("__repr__", [](const MonotoneClauseSet& g) {
            return "MonotoneClauseSet(" + std::to_string(g.size()) + " clauses)";
        });

    m.def("parse_tree", &parse_tree, py::arg("text"));
    m.def("load_tree", &load_tree, py::arg("path"));
    m.def("make_complete_tree", &make_complete_tree, py::arg("depth"));
    m.def("make_comb_tree", &make_comb_tree, py::arg("k"));

    m.def("restrict", [](const DecisionTree& t, const Instance& x) {
        return restrict_to_instance(t, x);
    });
    m.def("minimize", [](const MonotoneClauseSet& g) { return minimize(g); });
    m.def("hits_all", [](const std::vector<std::pair<Var, bool>>& term, const MonotoneClauseSet& g) {
        return hits_all(term_from_pairs(term), g);
    });

    m.def("direct_reason",
          [](const DecisionTree& t, const Instance& x) { return reason_dict(direct_reason(t, x)); });
    m.def(
        "sufficient_reason",
        [](const DecisionTree& t, const Instance& x, const std::string& order) {
            MonotoneClauseSet g = restrict_to_instance(t, x);
            std::vector<Literal> path = path_literals(t, x);
            Term seed(path);
            return reason_dict(sufficient_reason(g, seed, removal_sequence(seed, path, parse_order(order))));
        },
        py::arg("tree"), py::arg("instance"), py::arg("order") = "path");
    m.def("minimal_reason", [](const DecisionTree& t, const Instance& x) {
        return reason_dict(minimal_reason(restrict_to_instance(t, x)));
    });
    m.def("minimal_reason_greedy", [](const DecisionTree& t, const Instance& x) {
        return reason_dict(minimal_reason_greedy(restrict_to_instance(t, x)));
    });
    m.def(
        "enumerate_minimal_reasons",
        [](const DecisionTree& t, const Instance& x, std::size_t cap) {
            auto [reasons, complete] = enumerate_minimal_reasons(restrict_to_instance(t, x), cap);
            py::list out;
            for (const Reason& r : reasons) out.append(term_pairs(r.term));
            return py::make_tuple(out, complete);
        },
        py::arg("tree"), py::arg("instance"), py::arg("cap") = 10000);
    m.def(
        "enumerate_sufficient_reasons",
        [](const DecisionTree& t, const Instance& x, std::size_t cap) {
            auto [terms, complete] = enumerate_sufficient_reasons(restrict_to_instance(t, x), cap);
            return py::make_tuple(terms_list(terms), complete);
        },
        py::arg("tree"), py::arg("instance"), py::arg("cap") = 10000);
    m.def("all_contrastive", [](const DecisionTree& t, const Instance& x) {
        return terms_list(all_contrastive(restrict_to_instance(t, x)));
    });
    m.def("explanatory_features", [](const DecisionTree& t, const Instance& x) {
        FeatureReport fr = explanatory_features(restrict_to_instance(t, x));
        py::dict d;
        auto lits = [](const std::vector<Literal>& ls) {
            std::vector<std::pair<Var, bool>> out;
            for (const Literal& l : ls) out.emplace_back(l.var, l.positive);
            return out;
        };
        d["necessary"] = lits(fr.necessary);
        d["relevant"] = lits(fr.relevant);
        d["irrelevant"] = lits(fr.irrelevant);
        return d;
    });
    m.def(
        "count_and_importance",
        [](const DecisionTree& t, const Instance& x, std::size_t cap) {
            ImportanceMap imp = count_and_importance(restrict_to_instance(t, x), cap);
            py::dict entries;
            for (const auto& [l, v] : imp.entries)
                entries[py::make_tuple(l.var, l.positive)] = to_fraction(v);
            py::dict d;
            d["count"] = to_pyint(imp.total_count);
            d["exact"] = imp.exact;
            d["importance"] = entries;
            return d;
        },
        py::arg("tree"), py::arg("instance"), py::arg("cap") = 10000);

    m.def("precision", [](const DecisionTree& t, const std::vector<std::pair<Var, bool>>& term) {
        return to_fraction(precision(t, term_from_pairs(term)));
    });
    m.def(
        "probable_reason",
        [](const DecisionTree& t, const Instance& x, py::handle delta, const std::string& order) {
            return reason_dict(probable_reason(t, x, rational_from(delta), parse_order(order)));
        },
        py::arg("tree"), py::arg("instance"), py::arg("delta"), py::arg("order") = "path");

    m.def("brute_force_sufficient_reasons",
          [](const DecisionTree& t, const Instance& x, std::size_t limit) {
              return terms_list(brute_force_sufficient_reasons(t, x, limit));
          },
          py::arg("tree"), py::arg("instance"), py::arg("limit") = kOracleVarLimit);
    m.def("shannon_sr",
          [](const DecisionTree& t, const Instance& x, std::size_t limit) {
              return terms_list(shannon_sr(t, x, limit));
          },
          py::arg("tree"), py::arg("instance"), py::arg("limit") = kOracleVarLimit);

    m.def(
        "verify",
        [](std::size_t trials, std::int32_t max_vars, std::uint64_t seed) {
            VerifyOptions options;
            options.trials = trials;
            options.max_vars = max_vars;
            options.seed = seed;
            py::list out;
            for (const CheckResult& r : run_verification(options))
                out.append(py::make_tuple(r.name, r.cases, r.failures));
            return out;
        },
        py::arg("trials") = 100, py::arg("max_vars") = 10, py::arg("seed") = 1);
}
