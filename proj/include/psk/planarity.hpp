#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <optional>
#include <vector>

#include "psk/plane_graph.hpp"

namespace psk {

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.adj[v])
            if (v < u) boost::add_edge(v, u, bg);
    int idx = 0;
    auto e_index = boost::get(boost::edge_index, bg);
    for (auto [ei, eend] = boost::edges(bg); ei != eend; ++ei) boost::put(e_index, *ei, idx++);
    return bg;
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
    if (g.n() >= 3 && g.edge_count() > 3 * g.n() - 6) return false;
    auto bg = detail::to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

/// Any planar embedding (Boyer-Myrvold witness); outer face = a longest walk.
inline std::optional<PlaneGraph> embed_planar(const Graph& g) {
    auto bg = detail::to_boost(g);
    using Edge = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> storage(g.n());
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding =
                                                 storage.data()))
        return std::nullopt;
    PlaneGraph pg;
    pg.names = g.names;
    pg.rot.assign(g.n(), {});
    for (int v = 0; v < g.n(); ++v)
        for (const auto& e : storage[v]) {
            int u = static_cast<int>(boost::source(e, bg)) == v
                        ? static_cast<int>(boost::target(e, bg))
                        : static_cast<int>(boost::source(e, bg));
            pg.rot[v].push_back(u);
        }
    pg.finalize();
    int best = -1;
    for (int f = 0; f < pg.face_count(); ++f)
        if (best < 0 || pg.fdarts[f].size() > pg.fdarts[best].size()) best = f;
    pg.outer = best;
    return pg;
}

/// G is outerplanar iff G plus a universal apex vertex is planar.
inline bool is_outerplanar(const Graph& g) {
    if (g.n() <= 3) return is_planar(g);
    Graph apexed = g;
    apexed.names.push_back("__apex__");
    apexed.adj.emplace_back();
    int apex = apexed.n() - 1;
    for (int v = 0; v + 1 < apexed.n(); ++v) apexed.add_edge(apex, v);
    return is_planar(apexed);
}

/// Outerplanar embedding witness: embed G + apex, delete the apex, and take
/// the face that absorbed its region as the outer face.
inline std::optional<PlaneGraph> embed_outerplanar(const Graph& g) {
    if (g.n() == 0) return PlaneGraph{};
    Graph apexed = g;
    apexed.names.push_back("__apex__");
    apexed.adj.emplace_back();
    int apex = apexed.n() - 1;
    for (int v = 0; v + 1 < apexed.n(); ++v) apexed.add_edge(apex, v);
    auto emb = embed_planar(apexed);
    if (!emb) return std::nullopt;
    VertexSet keep;
    for (int v = 0; v < g.n(); ++v) keep.push_back(v);
    int apex_face = emb->dface[emb->dart(apex, emb->rot[apex][0])];
    Restriction res = restrict_plane(*emb, keep, apex_face);
    res.graph.outer = res.marked_region_face;
    return res.graph;
}

// --- embedding enumeration ----------------------------------------------------

struct EmbedBudget {
    int max_n = 12;                     // refuse enumeration beyond this
    long long max_nodes = 50'000'000;   // search tree nodes
};

enum class Tri { Yes, No, Unknown };

namespace detail {

/// Enumerates all genus-0 rotation systems of a connected graph, one mirror
/// image per pair. Calls fn(rot); fn returns true to stop early.
/// Returns false iff the node budget was exhausted.
class EmbeddingEnumerator {
public:
    EmbeddingEnumerator(const Graph& g, long long max_nodes)
        : g_(g), max_nodes_(max_nodes) {
        int n = g.n();
        order_.reserve(n);
        std::vector<char> used(n, 0);
        std::vector<int> weight(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (used[v]) continue;
                if (best < 0 || weight[v] > weight[best] ||
                    (weight[v] == weight[best] &&
                     g.adj[v].size() > g.adj[best].size()))
                    best = v;
            }
            used[best] = 1;
            order_.push_back(best);
            for (int u : g.adj[best]) ++weight[u];
        }
        edges_ = g.edge_count();
        faces_needed_ = edges_ - n + 2;
        rot_.assign(n, {});
        assigned_.assign(n, 0);
    }

    template <class Fn>
    bool run(Fn&& fn) {
        nodes_ = 0;
        stopped_ = false;
        exhausted_budget_ = false;
        rec(0, std::forward<Fn>(fn), true);
        return !exhausted_budget_;
    }

private:
    template <class Fn>
    void rec(std::size_t step, Fn&& fn, bool first_branching) {
        if (stopped_ || exhausted_budget_) return;
        if (++nodes_ > max_nodes_) {
            exhausted_budget_ = true;
            return;
        }
        if (step == order_.size()) {
            stopped_ = fn(rot_);
            return;
        }
        int v = order_[step];
        VertexSet nbrs = g_.adj[v];  // sorted
        if (nbrs.size() <= 2) {
            rot_[v] = nbrs;
            assigned_[v] = 1;
            if (!prune()) rec(step + 1, fn, first_branching);
            assigned_[v] = 0;
            rot_[v].clear();
            return;
        }
        std::vector<int> rest(nbrs.begin() + 1, nbrs.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (first_branching && rest.front() > rest.back()) continue;  // mirror
            rot_[v].clear();
            rot_[v].push_back(nbrs[0]);
            rot_[v].insert(rot_[v].end(), rest.begin(), rest.end());
            assigned_[v] = 1;
            if (!prune()) rec(step + 1, fn, false);
            assigned_[v] = 0;
            if (stopped_ || exhausted_budget_) return;
        } while (std::next_permutation(rest.begin(), rest.end()));
        rot_[v].clear();
    }

    /// Counts closed face orbits and open chains of live darts (both endpoints
    /// assigned). Every final face is either already closed, consumes at least
    /// one current chain, or is built purely from darts that are not live yet
    /// (at least 3 of those). Prunes when genus 0 is out of reach.
    bool prune() {
        int n = g_.n();
        std::vector<int> off(n + 1, 0);
        for (int v = 0; v < n; ++v)
            off[v + 1] = off[v] + (assigned_[v] ? static_cast<int>(g_.adj[v].size()) : 0);
        int nd = off[n];
        auto dart_id = [&](int u, int v) -> int {
            const auto& r = rot_[u];
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r[i] == v) return off[u] + static_cast<int>(i);
            return -1;
        };
        std::vector<int> nf(nd, -1);
        std::vector<int> indeg(nd, 0);
        std::vector<char> live(nd, 0);
        int live_count = 0;
        for (int u = 0; u < n; ++u) {
            if (!assigned_[u]) continue;
            for (std::size_t i = 0; i < rot_[u].size(); ++i) {
                int v = rot_[u][i];
                if (!assigned_[v]) continue;
                int d = off[u] + static_cast<int>(i);
                live[d] = 1;
                ++live_count;
                const auto& rv = rot_[v];
                int pu = -1;
                for (std::size_t j = 0; j < rv.size(); ++j)
                    if (rv[j] == u) pu = static_cast<int>(j);
                int w = rv[(pu + 1) % rv.size()];
                if (!assigned_[w]) continue;  // successor dart not live
                int d2 = dart_id(v, w);
                nf[d] = d2;
                ++indeg[d2];
            }
        }
        int closed = 0, chains = 0;
        std::vector<char> visited(nd, 0);
        for (int d = 0; d < nd; ++d) {
            if (!live[d] || visited[d] || indeg[d] != 0) continue;
            ++chains;
            for (int x = d; x >= 0 && !visited[x]; x = nf[x]) visited[x] = 1;
        }
        for (int d = 0; d < nd; ++d) {
            if (!live[d] || visited[d]) continue;
            int len = 0;
            for (int x = d; !visited[x]; x = nf[x]) {
                visited[x] = 1;
                ++len;
            }
            ++closed;
            if (len < 3 && n >= 3) return true;
        }
        if (closed > faces_needed_) return true;
        int not_live = 2 * edges_ - live_count;
        if (closed + chains + not_live / 3 < faces_needed_) return true;
        return false;
    }

    const Graph& g_;
    long long max_nodes_;
    std::vector<int> order_;
    std::vector<std::vector<int>> rot_;
    std::vector<char> assigned_;
    int edges_ = 0, faces_needed_ = 0;
    long long nodes_ = 0;
    bool stopped_ = false, exhausted_budget_ = false;
};

}  // namespace detail

struct MinOuterResult {
    Tri status = Tri::Unknown;
    int value = -1;            // valid when status == Yes
    PlaneGraph witness;        // embedding attaining the value
};

namespace detail {

inline Graph component_subgraph(const Graph& g, const VertexSet& comp,
                                std::vector<int>& orig_of) {
    Graph sub;
    std::vector<int> newid(g.n(), -1);
    orig_of.clear();
    for (int v : comp) {
        newid[v] = static_cast<int>(orig_of.size());
        orig_of.push_back(v);
        sub.names.push_back(g.names[v]);
        sub.adj.emplace_back();
    }
    for (int v : comp)
        for (int u : g.adj[v])
            if (newid[u] >= 0) sub.adj[newid[v]].push_back(newid[u]);
    for (auto& a : sub.adj) sort_unique(a);
    return sub;
}

/// No two vertices disconnect the graph. Brute force; desk scale.
inline bool is_three_connected(const Graph& g) {
    if (g.n() < 4) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            VertexSet rest;
            for (int x = 0; x < g.n(); ++x)
                if (x != u && x != v) rest.push_back(x);
            if (induced_components(g, rest).size() > 1) return false;
        }
    return true;
}

/// Minimum layer count over embeddings of a connected graph by direct
/// search. 3-connected graphs have one embedding up to reflection and sphere
/// homeomorphism (only the outer face varies); otherwise rotation systems are
/// enumerated under the budget. Among optima, outer faces holding more of
/// `prefer` on their walk win (used when reassembling blocks).
inline MinOuterResult min_outer_direct(const Graph& comp, const EmbedBudget& budget,
                                       const VertexSet& prefer) {
    MinOuterResult res;
    int best = -1, best_pref = -1;
    PlaneGraph best_pg;
    auto eval_embedding = [&](const PlaneGraph& base, bool all_faces) {
        PlaneGraph pg = base;
        for (int f = 0; f < pg.face_count(); ++f) {
            pg.outer = f;
            LayerDecomposition ld = layer_decomposition(pg);
            int pref = 0;
            for (int d : pg.fdarts[f])
                if (set_contains(prefer, pg.dtail[d])) ++pref;
            if (best < 0 || ld.r < best || (ld.r == best && pref > best_pref)) {
                best = ld.r;
                best_pref = pref;
                best_pg = pg;
            }
            if (!all_faces && best <= 2 &&
                best_pref >= static_cast<int>(prefer.size()))
                return true;
        }
        return best <= 2 && best_pref >= static_cast<int>(prefer.size());
    };
    if (is_three_connected(comp)) {
        auto emb = embed_planar(comp);
        require(emb.has_value(), "min_outerplanarity: planar graph failed to embed");
        eval_embedding(*emb, true);
        res.status = Tri::Yes;
        res.value = best;
        res.witness = std::move(best_pg);
        return res;
    }
    if (comp.n() > budget.max_n) return res;  // Unknown
    EmbeddingEnumerator en(comp, budget.max_nodes);
    bool complete = en.run([&](const std::vector<std::vector<int>>& rot) {
        PlaneGraph pg;
        pg.names = comp.names;
        pg.rot = rot;
        pg.finalize();
        return eval_embedding(pg, false);
    });
    if (best >= 0 && (complete || best <= 2)) {
        res.status = Tri::Yes;
        res.value = best;
        res.witness = best_pg;
        return res;
    }
    if (!complete) return res;  // Unknown
    require(false, "min_outerplanarity: planar graph with no embedding found");
    return res;
}

/// Rotation of v in `part` linearized to start just after its outer corner;
/// nullopt when v is not on the outer walk.
inline std::optional<std::vector<int>> linearized_at_outer(const PlaneGraph& part, int v) {
    for (int d : part.fdarts[part.outer])
        if (part.dhead[d] == v) {
            int x = part.dtail[d];
            int deg = part.deg(v);
            int start = part.pos_in_rot(v, x);
            std::vector<int> out;
            for (int s = 1; s <= deg; ++s) out.push_back(part.rot[v][(start + s) % deg]);
            return out;
        }
    return std::nullopt;
}

/// Minimum layers of a connected graph. Restricting any embedding to a block
/// only shallows layers, so max over blocks is a lower bound; laying the
/// separately solved blocks side by side in the outer face attains it when
/// every cut vertex lands on its block's outer walk. Otherwise falls back to
/// enumerating the component as a whole.
inline MinOuterResult min_outer_component(const Graph& comp, const EmbedBudget& budget) {
    MinOuterResult res;
    if (comp.n() <= 1 || is_outerplanar(comp)) {
        auto emb = embed_outerplanar(comp);
        require(emb.has_value(), "min_outerplanarity: embedding failed");
        res.status = Tri::Yes;
        res.value = 1;
        res.witness = *emb;
        return res;
    }
    auto decomp = blocks(comp);
    if (decomp.blocks.size() == 1) return min_outer_direct(comp, budget, {});

    int lower = 1;
    bool assembled_ok = true;
    std::vector<PlaneGraph> parts;
    std::vector<std::vector<int>> part_orig;
    for (const auto& blk : decomp.blocks) {
        std::vector<int> orig;
        Graph sub = component_subgraph(comp, blk, orig);
        VertexSet prefer;
        for (std::size_t lv = 0; lv < orig.size(); ++lv)
            if (set_contains(decomp.cut_vertices, orig[lv]))
                prefer.push_back(static_cast<int>(lv));
        MinOuterResult br;
        if (sub.n() <= 3 || is_outerplanar(sub)) {
            auto emb = embed_outerplanar(sub);
            require(emb.has_value(), "min_outerplanarity: embedding failed");
            br.status = Tri::Yes;
            br.value = 1;
            br.witness = *emb;
        } else {
            br = min_outer_direct(sub, budget, prefer);
        }
        if (br.status != Tri::Yes) return res;  // Unknown
        lower = std::max(lower, br.value);
        parts.push_back(std::move(br.witness));
        part_orig.push_back(std::move(orig));
    }
    PlaneGraph all;
    all.names = comp.names;
    all.rot.assign(comp.n(), {});
    for (std::size_t b = 0; b < parts.size() && assembled_ok; ++b)
        for (int lv = 0; lv < parts[b].n() && assembled_ok; ++lv) {
            auto lin = linearized_at_outer(parts[b], lv);
            bool is_cut = set_contains(decomp.cut_vertices, part_orig[b][lv]);
            if (is_cut && !lin) {
                assembled_ok = false;  // a cut vertex ended up off the outer walk
                break;
            }
            const std::vector<int>& order = lin ? *lin : parts[b].rot[lv];
            for (int lu : order) all.rot[part_orig[b][lv]].push_back(part_orig[b][lu]);
        }
    if (assembled_ok) {
        all.finalize();
        int d0 = parts[0].fdarts[parts[0].outer][0];
        int u = part_orig[0][parts[0].dtail[d0]];
        int v = part_orig[0][parts[0].dhead[d0]];
        all.outer = all.dface[all.dart(u, v)];
        LayerDecomposition check = layer_decomposition(all);
        if (check.r == lower) {
            res.status = Tri::Yes;
            res.value = lower;
            res.witness = std::move(all);
            return res;
        }
    }
    return min_outer_direct(comp, budget, {});
}

}  // namespace detail

/// Minimum number of layers over all planar embeddings (and outer-face
/// choices), maximized over connected components. Errors on non-planar input;
/// Unknown when a non-outerplanar component exceeds the enumeration budget.
inline MinOuterResult min_outerplanarity(const Graph& g, const EmbedBudget& budget = {}) {
    require(is_planar(g), "min_outerplanarity: graph is not planar");
    MinOuterResult total;
    total.status = Tri::Yes;
    total.value = g.n() == 0 ? 0 : 1;
    std::vector<PlaneGraph> parts;
    std::vector<VertexSet> comps = connected_components(g);
    for (const auto& comp : comps) {
        std::vector<int> orig_of;
        Graph sub = detail::component_subgraph(g, comp, orig_of);
        MinOuterResult r = detail::min_outer_component(sub, budget);
        if (r.status != Tri::Yes) return MinOuterResult{};  // Unknown
        total.value = std::max(total.value, r.value);
        parts.push_back(r.witness);
    }
    // assemble one plane graph; outer face taken from the first component
    PlaneGraph all;
    all.names = g.names;
    all.rot.assign(g.n(), {});
    std::size_t pi = 0;
    int outer_u = -1, outer_v = -1;
    for (const auto& comp : comps) {
        const PlaneGraph& part = parts[pi++];
        for (int lv = 0; lv < part.n(); ++lv)
            for (int lu : part.rot[lv]) all.rot[comp[lv]].push_back(comp[lu]);
        if (outer_u < 0 && part.outer >= 0) {
            int d = part.fdarts[part.outer][0];
            outer_u = comp[part.dtail[d]];
            outer_v = comp[part.dhead[d]];
        }
    }
    all.finalize();
    if (outer_u >= 0) all.outer = all.dface[all.dart(outer_u, outer_v)];
    total.witness = std::move(all);
    return total;
}

/// Does G admit an embedding with at most r layers in every component?
inline Tri outerplanarity_at_most(const Graph& g, int r, const EmbedBudget& budget = {},
                                  PlaneGraph* witness = nullptr) {
    if (r < 1) return Tri::No;
    if (!is_planar(g)) return Tri::No;
    MinOuterResult res = min_outerplanarity(g, budget);
    if (res.status != Tri::Yes) return Tri::Unknown;
    if (res.value > r) return Tri::No;
    if (witness) *witness = std::move(res.witness);
    return Tri::Yes;
}

}  // namespace psk
