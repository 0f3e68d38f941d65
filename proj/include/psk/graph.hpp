#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psk/util.hpp"

namespace psk {

/// Simple undirected graph with named vertices, adjacency kept sorted.
struct Graph {
    std::vector<std::string> names;
    std::vector<VertexSet> adj;

    int n() const { return static_cast<int>(adj.size()); }

    int edge_count() const {
        int s = 0;
        for (const auto& a : adj) s += static_cast<int>(a.size());
        return s / 2;
    }

    bool has_edge(int u, int v) const { return set_contains(adj[u], v); }

    void add_edge(int u, int v) {
        require(u != v, "add_edge: self loop");
        if (has_edge(u, v)) return;
        adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    }

    int index_of(const std::string& name) const {
        for (int i = 0; i < n(); ++i)
            if (names[i] == name) return i;
        return -1;
    }

    static Graph with_vertices(std::vector<std::string> names) {
        Graph g;
        g.adj.assign(names.size(), {});
        g.names = std::move(names);
        return g;
    }
};

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> comps;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps[c].push_back(v);
            for (int w : g.adj[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        sort_unique(comps[c]);
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

/// Connected components of the induced subgraph G[sub].
inline std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& sub) {
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : sub) in[v] = 1;
    std::vector<VertexSet> comps;
    for (int s : sub) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int w : g.adj[v])
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        sort_unique(comps.back());
    }
    return comps;
}

/// Block/cut decomposition. Blocks are maximal biconnected subgraphs,
/// cut-edges, and isolated vertices, following the usual convention.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;       // vertex set of each block
    std::vector<int> cut_vertices;       // sorted
};

/// Hopcroft-Tarjan over the induced subgraph G[sub].
inline BlockDecomposition blocks_of_subset(const Graph& g, const VertexSet& sub) {
    BlockDecomposition out;
    std::vector<char> in(g.n(), 0);
    for (int v : sub) in[v] = 1;

    std::vector<int> disc(g.n(), -1), low(g.n(), 0), parent(g.n(), -1);
    std::vector<char> is_cut(g.n(), 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    struct Frame {
        int v;
        std::size_t next;
        int pending_child;
    };
    for (int root : sub) {
        if (disc[root] >= 0) continue;
        bool isolated = true;
        for (int w : g.adj[root])
            if (in[w]) isolated = false;
        if (isolated) {
            disc[root] = timer++;
            out.blocks.push_back({root});
            continue;
        }
        int root_blocks = 0;
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, 0, -1});
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.pending_child >= 0) {
                int w = f.pending_child;
                f.pending_child = -1;
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    VertexSet blk;
                    while (!estack.empty()) {
                        auto [a, b] = estack.back();
                        estack.pop_back();
                        blk.push_back(a);
                        blk.push_back(b);
                        if (a == v && b == w) break;
                    }
                    sort_unique(blk);
                    out.blocks.push_back(std::move(blk));
                    if (v == root)
                        ++root_blocks;
                    else
                        is_cut[v] = 1;
                }
                continue;
            }
            if (f.next < g.adj[v].size()) {
                int w = g.adj[v][f.next++];
                if (!in[w] || w == parent[v]) continue;
                if (disc[w] < 0) {
                    parent[w] = v;
                    estack.push_back({v, w});
                    disc[w] = low[w] = timer++;
                    f.pending_child = w;
                    stack.push_back({w, 0, -1});  // f invalid beyond this point
                } else if (disc[w] < disc[v]) {
                    estack.push_back({v, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
            }
        }
        if (root_blocks > 1) is_cut[root] = 1;
    }
    for (int v : sub)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

inline BlockDecomposition blocks(const Graph& g) {
    VertexSet all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    return blocks_of_subset(g, all);
}

/// Number of blocks of G[sub]; the `b` of the potential function.
inline int block_count(const Graph& g, const VertexSet& sub) {
    return static_cast<int>(blocks_of_subset(g, sub).blocks.size());
}

}  // namespace psk
