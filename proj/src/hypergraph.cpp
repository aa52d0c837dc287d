#include "reasonkit/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reasonkit {

namespace {

bool edge_hit(const std::vector<Var>& edge, const std::set<Var>& chosen) {
    for (Var v : edge)
        if (chosen.count(v)) return true;
    return false;
}

// Greedy packing of pairwise-disjoint uncovered edges: each needs its own
// vertex, so the packing size is an admissible lower bound.
std::size_t disjoint_packing_bound(const std::vector<std::vector<Var>>& edges,
                                   const std::set<Var>& chosen) {
    std::set<Var> blocked;
    std::size_t bound = 0;
    for (const auto& e : edges) {
        if (edge_hit(e, chosen)) continue;
        bool disjoint = true;
        for (Var v : e)
            if (blocked.count(v)) { disjoint = false; break; }
        if (disjoint) {
            ++bound;
            blocked.insert(e.begin(), e.end());
        }
    }
    return bound;
}

struct BnB {
    const std::vector<std::vector<Var>>& edges;
    std::vector<Var> best;
    bool have_best = false;

    const std::vector<Var>* shortest_uncovered(const std::set<Var>& chosen,
                                               const std::set<Var>& excluded, bool& infeasible) const {
        const std::vector<Var>* pick = nullptr;
        for (const auto& e : edges) {
            if (edge_hit(e, chosen)) continue;
            bool open = false;
            for (Var v : e)
                if (!excluded.count(v)) { open = true; break; }
            if (!open) { infeasible = true; return nullptr; }
            if (!pick || e.size() < pick->size()) pick = &e;
        }
        return pick;
    }

    void run(std::set<Var>& chosen, std::set<Var>& excluded) {
        if (have_best && chosen.size() >= best.size()) return;
        bool infeasible = false;
        const std::vector<Var>* edge = shortest_uncovered(chosen, excluded, infeasible);
        if (infeasible) return;
        if (!edge) {
            best.assign(chosen.begin(), chosen.end());
            have_best = true;
            return;
        }
        if (have_best && chosen.size() + disjoint_packing_bound(edges, chosen) >= best.size()) return;
        std::vector<Var> local_excluded;
        for (Var v : *edge) {
            if (excluded.count(v)) continue;
            chosen.insert(v);
            run(chosen, excluded);
            chosen.erase(v);
            excluded.insert(v);
            local_excluded.push_back(v);
        }
        for (Var v : local_excluded) excluded.erase(v);
    }
};

} // namespace

std::vector<Var> min_hitting_set_greedy(const std::vector<std::vector<Var>>& edges) {
    std::vector<bool> covered(edges.size(), false);
    std::size_t remaining = edges.size();
    std::vector<Var> out;
    while (remaining > 0) {
        std::map<Var, std::size_t> degree;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (covered[i]) continue;
            for (Var v : edges[i]) ++degree[v];
        }
        Var pick = degree.begin()->first;
        std::size_t best = degree.begin()->second;
        for (const auto& [v, d] : degree)
            if (d > best) { pick = v; best = d; } // map order makes ties favor the smallest var
        out.push_back(pick);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (covered[i]) continue;
            if (std::binary_search(edges[i].begin(), edges[i].end(), pick)) {
                covered[i] = true;
                --remaining;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Var> min_hitting_set_exact(const std::vector<std::vector<Var>>& edges) {
    BnB solver{edges, min_hitting_set_greedy(edges), true}; // greedy warm upper bound
    std::set<Var> chosen, excluded;
    solver.run(chosen, excluded);
    return solver.best;
}

namespace {

// Shared DFS skeleton. Branches on the first uncovered edge in a fixed edge
// order; branch i adds edge[i] and permanently excludes edge[0..i-1], so each
// transversal is produced exactly once.
struct Enumerator {
    const std::vector<std::vector<Var>>& edges;
    const std::function<bool(const std::vector<Var>&)>& sink;
    std::size_t size_cap;   // SIZE_MAX when enumerating all minimal transversals
    bool minimal_only;      // check private-edge minimality at emission
    bool stopped = false;

    const std::vector<Var>* first_uncovered(const std::set<Var>& chosen, bool& infeasible,
                                            const std::set<Var>& excluded) const {
        for (const auto& e : edges) {
            if (edge_hit(e, chosen)) continue;
            bool open = false;
            for (Var v : e)
                if (!excluded.count(v)) { open = true; break; }
            if (!open) infeasible = true;
            return &e;
        }
        return nullptr;
    }

    bool is_minimal(const std::set<Var>& chosen) const {
        for (Var v : chosen) {
            bool has_private = false;
            for (const auto& e : edges) {
                if (!std::binary_search(e.begin(), e.end(), v)) continue;
                bool alone = true;
                for (Var u : e)
                    if (u != v && chosen.count(u)) { alone = false; break; }
                if (alone) { has_private = true; break; }
            }
            if (!has_private) return false;
        }
        return true;
    }

    void emit(const std::set<Var>& chosen) {
        if (minimal_only && !is_minimal(chosen)) return;
        if (!minimal_only && chosen.size() != size_cap) return;
        std::vector<Var> out(chosen.begin(), chosen.end());
        if (!sink(out)) stopped = true;
    }

    void run(std::set<Var>& chosen, std::set<Var>& excluded) {
        if (stopped) return;
        bool infeasible = false;
        const std::vector<Var>* edge = first_uncovered(chosen, infeasible, excluded);
        if (infeasible) return;
        if (!edge) {
            emit(chosen);
            return;
        }
        if (chosen.size() >= size_cap) return;
        if (!minimal_only &&
            chosen.size() + disjoint_packing_bound(edges, chosen) > size_cap) return;
        std::vector<Var> local_excluded;
        for (Var v : *edge) {
            if (stopped) break;
            if (excluded.count(v)) continue;
            chosen.insert(v);
            run(chosen, excluded);
            chosen.erase(v);
            excluded.insert(v);
            local_excluded.push_back(v);
        }
        for (Var v : local_excluded) excluded.erase(v);
    }

    bool enumerate() {
        std::set<Var> chosen, excluded;
        run(chosen, excluded);
        return !stopped;
    }
};

} // namespace

bool minimal_transversals(const std::vector<std::vector<Var>>& edges,
                          const std::function<bool(const std::vector<Var>&)>& sink) {
    if (edges.empty()) return sink({}); // the empty set hits everything
    Enumerator e{edges, sink, static_cast<std::size_t>(-1), true};
    return e.enumerate();
}

bool transversals_of_size(const std::vector<std::vector<Var>>& edges, std::size_t k,
                          const std::function<bool(const std::vector<Var>&)>& sink) {
    if (edges.empty()) {
        if (k == 0) return sink({});
        return true;
    }
    Enumerator e{edges, sink, k, false};
    return e.enumerate();
}

} // namespace reasonkit
