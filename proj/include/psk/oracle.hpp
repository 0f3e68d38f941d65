#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <vector>

#include "psk/planarity.hpp"
#include "psk/support.hpp"

namespace psk {

struct SearchBudget {
    int max_free_edges = 80;
    long long max_nodes = 100'000'000;
    double time_cap_s = 600.0;
};

enum class Verdict { Yes, No, Unknown };

struct CandidateEdges {
    std::vector<std::pair<int, int>> forced;  // size-2 hyperedges
    std::vector<std::pair<int, int>> free;    // other co-occurring pairs
};

/// All vertex pairs co-occurring in a hyperedge. Pairs forming a size-2
/// hyperedge are forced: G[{u,v}] is connected iff the edge is present.
/// Pairs sharing no hyperedge can never help a hyperedge's connectivity and
/// only grow minors, so supports are sought among co-occurring pairs only.
inline CandidateEdges candidate_edges(const Hypergraph& h) {
    CandidateEdges out;
    std::set<std::pair<int, int>> forced, co;
    for (const auto& e : h.edges) {
        if (e.size() == 2) forced.insert({e[0], e[1]});
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) co.insert({e[a], e[b]});
    }
    for (auto& pr : forced) out.forced.push_back(pr);
    for (auto& pr : co)
        if (!forced.count(pr)) out.free.push_back(pr);
    return out;
}

struct SupportSearchResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<PlaneGraph> witness;  // on Yes
    long long nodes = 0;
};

namespace detail {

struct SupportSearch {
    const Hypergraph& h;
    std::optional<int> r;
    const SearchBudget& budget;
    EmbedBudget embed_budget;
    CandidateEdges cands;
    Graph g;                       // current included graph
    std::vector<char> excluded;    // per free-edge index
    std::vector<char> included;
    long long nodes = 0;
    bool out_of_budget = false;
    bool saw_unknown = false;
    std::optional<PlaneGraph> witness;
    std::chrono::steady_clock::time_point deadline;

    SupportSearch(const Hypergraph& hh, std::optional<int> rr, const SearchBudget& b)
        : h(hh), r(rr), budget(b) {
        cands = candidate_edges(h);
        g = Graph::with_vertices(h.names);
        for (auto [u, v] : cands.forced) g.add_edge(u, v);
        excluded.assign(cands.free.size(), 0);
        included.assign(cands.free.size(), 0);
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(budget.time_cap_s));
    }

    bool budget_ok() {
        if (out_of_budget) return false;
        if (nodes > budget.max_nodes ||
            (nodes % 256 == 0 && std::chrono::steady_clock::now() > deadline))
            out_of_budget = true;
        return !out_of_budget;
    }

    /// components of G[e] under the current included edges
    std::vector<VertexSet> edge_components(int e) const {
        return induced_components(g, h.edges[e]);
    }

    /// free candidate indices that would bridge two components of G[e]
    std::vector<int> crossing_candidates(int e, const std::vector<VertexSet>& comps) const {
        std::vector<int> out;
        for (std::size_t c = 0; c < cands.free.size(); ++c) {
            if (excluded[c] || included[c]) continue;
            auto [u, v] = cands.free[c];
            if (!set_contains(h.edges[e], u) || !set_contains(h.edges[e], v)) continue;
            int cu = -1, cv = -1;
            for (std::size_t k = 0; k < comps.size(); ++k) {
                if (set_contains(comps[k], u)) cu = static_cast<int>(k);
                if (set_contains(comps[k], v)) cv = static_cast<int>(k);
            }
            if (cu != cv) out.push_back(static_cast<int>(c));
        }
        return out;
    }

    /// true = found a support meeting the r constraint (witness set)
    bool dfs() {
        ++nodes;
        if (!budget_ok()) return false;
        // find the most constrained unsatisfied hyperedge
        int best_e = -1;
        std::vector<int> best_cands;
        for (int e = 0; e < h.m(); ++e) {
            auto comps = edge_components(e);
            if (comps.size() <= 1) continue;
            auto cross = crossing_candidates(e, comps);
            if (cross.empty()) return false;  // infeasible branch
            if (best_e < 0 || cross.size() < best_cands.size()) {
                best_e = e;
                best_cands = std::move(cross);
                if (best_cands.size() == 1) break;
            }
        }
        if (best_e < 0) {
            // support found; planarity is maintained along the way
            if (!r) {
                auto emb = embed_planar(g);
                require(emb.has_value(), "oracle: planar invariant broken");
                witness = std::move(*emb);
                return true;
            }
            PlaneGraph w;
            Tri t = outerplanarity_at_most(g, *r, embed_budget, &w);
            if (t == Tri::Yes) {
                witness = std::move(w);
                return true;
            }
            if (t == Tri::Unknown) saw_unknown = true;
            return false;  // supersets only add edges; minor-closed, so prune
        }
        // order candidates: most unsatisfied hyperedges served first
        std::vector<std::pair<int, int>> scored;
        for (int c : best_cands) {
            auto [u, v] = cands.free[c];
            int score = 0;
            for (int e = 0; e < h.m(); ++e) {
                if (!set_contains(h.edges[e], u) || !set_contains(h.edges[e], v)) continue;
                auto comps = edge_components(e);
                if (comps.size() <= 1) continue;
                int cu = -1, cv = -1;
                for (std::size_t k = 0; k < comps.size(); ++k) {
                    if (set_contains(comps[k], u)) cu = static_cast<int>(k);
                    if (set_contains(comps[k], v)) cv = static_cast<int>(k);
                }
                if (cu != cv) ++score;
            }
            scored.push_back({-score, c});
        }
        std::sort(scored.begin(), scored.end());
        std::vector<int> newly_excluded;
        bool found = false;
        for (auto [negscore, c] : scored) {
            auto [u, v] = cands.free[c];
            g.add_edge(u, v);
            included[c] = 1;
            bool feasible = g.edge_count() <= std::max(1, 3 * g.n() - 6) && is_planar(g);
            if (feasible && dfs()) {
                found = true;
                // leave state; unwound by caller
            }
            included[c] = 0;
            g.adj[u].erase(std::lower_bound(g.adj[u].begin(), g.adj[u].end(), v));
            g.adj[v].erase(std::lower_bound(g.adj[v].begin(), g.adj[v].end(), u));
            if (found) break;
            if (out_of_budget) break;
            excluded[c] = 1;
            newly_excluded.push_back(c);
        }
        for (int c : newly_excluded) excluded[c] = 0;
        return found;
    }
};

}  // namespace detail

/// Exhaustive decision of support existence: forced edges always present,
/// branch over free candidate edges guided by violated hyperedges, pruning by
/// planarity, hyperedge connectivity reachability, and the edge-count bound.
/// r = nullopt asks for any planar support; otherwise layers <= r is
/// verified by embedding enumeration. Witnesses are returned as embeddings
/// and are independently re-checkable.
inline SupportSearchResult find_support(const Hypergraph& h, std::optional<int> r,
                                        const SearchBudget& budget = {}) {
    SupportSearchResult res;
    if (h.n() == 0) {
        res.verdict = Verdict::Yes;
        res.witness = PlaneGraph{};
        return res;
    }
    detail::SupportSearch search(h, r, budget);
    if (static_cast<int>(search.cands.free.size()) > budget.max_free_edges) {
        res.verdict = Verdict::Unknown;
        return res;
    }
    if (!is_planar(search.g)) {  // forced edges already non-planar
        res.verdict = Verdict::No;
        return res;
    }
    bool found = search.dfs();
    res.nodes = search.nodes;
    if (found) {
        res.verdict = Verdict::Yes;
        res.witness = std::move(search.witness);
        return res;
    }
    if (search.out_of_budget || search.saw_unknown) {
        res.verdict = Verdict::Unknown;
        return res;
    }
    res.verdict = Verdict::No;
    return res;
}

struct MinRepResult {
    Verdict verdict = Verdict::Unknown;
    int size = -1;
    std::optional<PlaneGraph> witness;
};

/// Minimum |W| over W ⊆ V(H) admitting a representative r-outerplanar (or
/// planar) support on W, enumerated smallest-first. Every vertex outside W
/// must be covered by one inside.
inline MinRepResult min_representative_solution_size(const Hypergraph& h,
                                                     std::optional<int> r,
                                                     const SearchBudget& budget = {}) {
    MinRepResult res;
    int n = h.n();
    if (n > 20) return res;  // subset enumeration is desk-scale only
    std::vector<std::vector<std::uint32_t>> by_size(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        by_size[__builtin_popcount(mask)].push_back(mask);
    bool saw_unknown = false;
    for (int s = 0; s <= n && res.verdict == Verdict::Unknown; ++s) {
        for (std::uint32_t mask : by_size[s]) {
            VertexSet w, missing;
            for (int v = 0; v < n; ++v)
                ((mask >> v) & 1 ? w : missing).push_back(v);
            bool covered = true;
            for (int u : missing) {
                bool ok = false;
                for (int v : w)
                    if (covers(h, v, u)) {
                        ok = true;
                        break;
                    }
                if (!ok) {
                    covered = false;
                    break;
                }
            }
            if (!covered) continue;
            Hypergraph sub = remove_vertices(h, missing);
            auto sr = find_support(sub, r, budget);
            if (sr.verdict == Verdict::Yes) {
                if (saw_unknown) return res;  // a smaller W was undecided
                res.verdict = Verdict::Yes;
                res.size = s;
                res.witness = std::move(sr.witness);
                break;
            }
            if (sr.verdict == Verdict::Unknown) saw_unknown = true;
        }
    }
    return res;
}

}  // namespace psk
