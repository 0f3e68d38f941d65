#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "psk/hypergraph.hpp"
#include "psk/plane_graph.hpp"

namespace psk {
namespace gen {

/// The twin counterexample hypergraph: 16 solid size-two hyperedges plus 8
/// size-five hyperedges through the twins t, t'.
inline Hypergraph fig_counter() {
    RawHypergraph raw;
    std::vector<std::string> names = {"a", "b", "c", "d", "v_a", "v_b",
                                      "v_d", "u_b", "u_c", "u_d", "t", "t'"};
    raw.names = names;
    auto id = [&](const std::string& s) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return static_cast<int>(i);
        throw Error("fig_counter: bad name");
    };
    auto edge = [&](std::vector<std::string> vs) {
        VertexSet e;
        for (auto& s : vs) e.push_back(id(s));
        raw.edges.push_back(std::move(e));
    };
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"a", "d"}, {"d", "b"}, {"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "c"},
             {"a", "v_a"}, {"v_a", "v_d"}, {"v_d", "v_b"}, {"v_b", "b"}, {"d", "v_d"},
             {"b", "u_b"}, {"u_b", "u_d"}, {"u_d", "u_c"}, {"u_c", "c"}, {"d", "u_d"}})
        edge({x, y});
    edge({"a", "v_a", "t", "t'", "c"});
    edge({"a", "v_b", "t", "t'", "c"});
    edge({"b", "v_a", "t", "t'", "c"});
    edge({"b", "v_b", "t", "t'", "c"});
    edge({"b", "u_b", "t", "t'", "a"});
    edge({"b", "u_c", "t", "t'", "a"});
    edge({"c", "u_b", "t", "t'", "a"});
    edge({"c", "u_c", "t", "t'", "a"});
    return normalize(raw);
}

inline Hypergraph fig_counter_minus_t() { return remove_vertex_by_name(fig_counter(), "t"); }

/// The known 2-outerplanar support of fig_counter: solid plus dotted edges.
inline Graph fig_counter_support() {
    Hypergraph h = fig_counter();
    Graph g = Graph::with_vertices(h.names);
    for (const auto& e : h.edges)
        if (e.size() == 2) g.add_edge(e[0], e[1]);
    auto id = [&](const char* s) { return g.index_of(s); };
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"a", "t"}, {"b", "t"}, {"v_a", "t"}, {"v_b", "t"},
             {"c", "t'"}, {"b", "t'"}, {"u_b", "t'"}, {"u_c", "t'"}})
        g.add_edge(id(x), id(y));
    return g;
}

/// The l-copy generalization of the counterexample: l copies sharing the twin
/// pool T plus a connector vertex vstar; the 8 big hyperedges take the unions
/// over all copies.
inline Hypergraph supplement_ell(int l) {
    require(l >= 1, "supplement_ell: need l >= 1");
    RawHypergraph raw;
    auto intern = [&](const std::string& s) {
        for (std::size_t i = 0; i < raw.names.size(); ++i)
            if (raw.names[i] == s) return static_cast<int>(i);
        raw.names.push_back(s);
        return static_cast<int>(raw.names.size() - 1);
    };
    int vstar = intern("v*");
    std::vector<int> A, B, C, Va, Vb, Ub, Uc, T;
    for (int i = 1; i <= l; ++i) {
        std::string sfx = std::to_string(i);
        int a = intern("a" + sfx), b = intern("b" + sfx), c = intern("c" + sfx),
            d = intern("d" + sfx);
        int va = intern("va" + sfx), vb = intern("vb" + sfx), vd = intern("vd" + sfx);
        int ub = intern("ub" + sfx), uc = intern("uc" + sfx), ud = intern("ud" + sfx);
        int t = intern("t" + sfx), tp = intern("t" + sfx + "'");
        A.push_back(a);
        B.push_back(b);
        C.push_back(c);
        Va.push_back(va);
        Vb.push_back(vb);
        Ub.push_back(ub);
        Uc.push_back(uc);
        T.push_back(t);
        T.push_back(tp);
        for (auto [x, y] : std::vector<std::pair<int, int>>{
                 {a, d}, {d, b}, {a, b}, {b, c}, {c, d}, {a, c},
                 {a, va}, {va, vd}, {vd, vb}, {vb, b}, {d, vd},
                 {b, ub}, {ub, ud}, {ud, uc}, {uc, c}, {d, ud}})
            raw.edges.push_back({x, y});
        raw.edges.push_back({a, vstar});
        raw.edges.push_back({b, vstar});
        raw.edges.push_back({c, vstar});
    }
    auto big = [&](const std::vector<int>& x, const std::vector<int>& y,
                   const std::vector<int>& z) {
        VertexSet e;
        for (int v : x) e.push_back(v);
        for (int v : y) e.push_back(v);
        for (int v : z) e.push_back(v);
        for (int v : T) e.push_back(v);
        e.push_back(vstar);
        raw.edges.push_back(std::move(e));
    };
    big(A, C, Va);
    big(A, C, Vb);
    big(B, C, Va);
    big(B, C, Vb);
    big(B, A, Ub);
    big(B, A, Uc);
    big(C, A, Ub);
    big(C, A, Uc);
    return normalize(raw);
}

/// Adds `count` fresh twins of `of` (same hyperedge membership).
inline Hypergraph add_twins(const Hypergraph& h, const std::string& of, int count,
                            const std::string& name_prefix) {
    int v = h.index_of(of);
    require(v >= 0, "add_twins: unknown vertex " + of);
    RawHypergraph raw;
    raw.names = h.names;
    std::vector<int> fresh;
    for (int i = 0; i < count; ++i) {
        fresh.push_back(static_cast<int>(raw.names.size()));
        raw.names.push_back(name_prefix + std::to_string(i + 1));
    }
    for (const auto& e : h.edges) {
        VertexSet ne = e;
        if (set_contains(e, v))
            for (int f : fresh) ne.push_back(f);
        raw.edges.push_back(std::move(ne));
    }
    return normalize(raw);
}

namespace detail {

inline PlaneGraph checked_disk(PlaneGraph g, const std::vector<int>& expect_layers) {
    require(is_triangulated_disk(g), "generator produced a non-disk");
    if (!expect_layers.empty()) {
        LayerDecomposition ld = layer_decomposition(g);
        require(ld.layer == expect_layers, "generator layers disagree with construction");
    }
    return g;
}

}  // namespace detail

/// Fan F_n: one hub plus a path of n-1 rim vertices; an outerplanar
/// triangulated disk.
inline PlaneGraph fan(int n) {
    require(n >= 3, "fan: need n >= 3");
    std::vector<std::string> names{"h"};
    for (int i = 1; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::pair<double, double>> xy;
    int m = n - 1;
    xy.push_back({(m - 1) / 2.0, -4.0});  // hub below a sagging chain
    for (int i = 0; i < m; ++i)
        xy.push_back({static_cast<double>(i), 1.0 - 0.05 * i * (m - 1 - i)});
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i) edges.push_back({0, i});
    for (int i = 1; i < m; ++i) edges.push_back({i, i + 1});
    std::vector<int> walk{0};
    for (int i = 1; i <= m; ++i) walk.push_back(i);
    PlaneGraph g = plane_from_coords(names, xy, edges, walk);
    return detail::checked_disk(std::move(g), std::vector<int>(n, 1));
}

/// Hinged fan: vertices u, w on the outer face joined by the hinge edge and a
/// chain v_1..v_k of common neighbors between them; z1/z2 complete the disk.
/// with_z1=false puts the hinge on the outer face (the L1-trivial variant).
inline PlaneGraph hinged_fan(int k, bool with_z1 = true) {
    require(k >= 1, "hinged_fan: need k >= 1");
    std::vector<std::string> names{"u", "w"};
    std::vector<std::pair<double, double>> xy{{-3.0, 0.0}, {3.0, 0.0}};
    std::vector<std::pair<int, int>> edges{{0, 1}};
    int z1 = -1;
    if (with_z1) {
        z1 = static_cast<int>(names.size());
        names.push_back("z1");
        xy.push_back({0.0, 3.0});
        edges.push_back({0, z1});
        edges.push_back({1, z1});
    }
    int z2 = static_cast<int>(names.size());
    names.push_back("z2");
    xy.push_back({0.0, -1.0 - 0.5 * (k + 1)});
    edges.push_back({0, z2});
    edges.push_back({1, z2});
    std::vector<int> chain;
    for (int i = 1; i <= k; ++i) {
        int v = static_cast<int>(names.size());
        names.push_back("v" + std::to_string(i));
        xy.push_back({0.0, -0.5 * i});
        edges.push_back({0, v});
        edges.push_back({1, v});
        if (!chain.empty()) edges.push_back({chain.back(), v});
        chain.push_back(v);
    }
    edges.push_back({chain.back(), z2});
    std::vector<int> walk = with_z1 ? std::vector<int>{0, z1, 1, z2}
                                    : std::vector<int>{0, 1, z2};
    PlaneGraph g = plane_from_coords(names, xy, edges, walk);
    std::vector<int> expect(g.n(), 2);
    expect[0] = expect[1] = expect[z2] = 1;
    if (with_z1) expect[z1] = 1;
    return detail::checked_disk(std::move(g), expect);
}

namespace detail {

inline void sort_unique_edges(std::vector<std::pair<int, int>>& es) {
    for (auto& e : es)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
}

/// Triangulations of the innermost ring's polygon, as position triples in
/// ascending order (counterclockwise for a polygon listed counterclockwise).
inline std::vector<std::array<int, 3>> ear_core(int m, Rng& rng) {
    std::vector<std::array<int, 3>> tris;
    std::vector<int> poly(m);
    for (int i = 0; i < m; ++i) poly[i] = i;
    while (poly.size() > 3) {
        int idx = static_cast<int>(rng.below(poly.size()));
        int prev = poly[(idx + poly.size() - 1) % poly.size()];
        int next = poly[(idx + 1) % poly.size()];
        std::array<int, 3> t{prev, poly[idx], next};
        std::sort(t.begin(), t.end());
        tris.push_back(t);
        poly.erase(poly.begin() + idx);
    }
    std::array<int, 3> last{poly[0], poly[1], poly[2]};
    std::sort(last.begin(), last.end());
    tris.push_back(last);
    return tris;
}

inline std::vector<std::array<int, 3>> fan_core(int m) {
    std::vector<std::array<int, 3>> tris;
    for (int k = 1; k <= m - 2; ++k) tris.push_back({0, k, k + 1});
    return tris;
}

inline std::vector<std::array<int, 3>> snake_core(int m) {
    std::vector<std::array<int, 3>> tris;
    int l = 0, r = m - 1;
    bool shrink_r = true;
    while (r - l >= 2) {
        std::array<int, 3> t = shrink_r ? std::array<int, 3>{l, l + 1, r}
                                        : std::array<int, 3>{l, r - 1, r};
        if (shrink_r)
            ++l;
        else
            --r;
        shrink_r = !shrink_r;
        tris.push_back(t);
    }
    return tris;
}

/// Concentric-ring disk from explicit annulus merge sequences ('O'/'I' moves)
/// and a core triangulation. Faces are collected with coherent orientation
/// (rings listed counterclockwise) and the rotation system is derived from
/// them, so no geometry is involved.
inline PlaneGraph ring_disk(const std::vector<int>& sizes,
                            const std::vector<std::vector<char>>& moves,
                            const std::vector<std::array<int, 3>>& core_tris) {
    int layers = static_cast<int>(sizes.size());
    for (int s : sizes) require(s >= 3, "ring_disk: ring sizes must be >= 3");
    std::vector<std::string> names;
    std::vector<int> expect_layers;
    std::vector<std::vector<int>> ring(layers);
    for (int i = 0; i < layers; ++i)
        for (int j = 0; j < sizes[i]; ++j) {
            ring[i].push_back(static_cast<int>(names.size()));
            names.push_back("r" + std::to_string(i) + "_" + std::to_string(j));
            expect_layers.push_back(i + 1);
        }
    std::vector<std::vector<int>> faces;
    for (int i = 0; i + 1 < layers; ++i) {
        int a = sizes[i], b = sizes[i + 1];
        require(static_cast<int>(moves[i].size()) == a + b,
                "ring_disk: merge sequence has wrong move counts");
        int o = 0, in = 0;
        for (char mv : moves[i]) {
            if (mv == 'O') {
                faces.push_back({ring[i][o % a], ring[i][(o + 1) % a], ring[i + 1][in % b]});
                ++o;
            } else {
                faces.push_back({ring[i][o % a], ring[i + 1][in % b], ring[i + 1][(in + 1) % b]});
                ++in;
            }
        }
        require(o == a && in == b, "ring_disk: merge sequence has wrong move counts");
    }
    for (const auto& t : core_tris)
        faces.push_back({ring[layers - 1][t[0]], ring[layers - 1][t[1]], ring[layers - 1][t[2]]});
    PlaneGraph g = plane_from_faces(std::move(names), faces, ring[0]);
    return checked_disk(std::move(g), expect_layers);
}

}  // namespace detail

/// Random r-layer triangulated disk on ~size vertices: concentric rings with
/// randomly interleaved triangulated annuli and a randomly ear-triangulated
/// core. Layers equal ring indices by construction (checked). A few seed
/// offsets are retried if the random geometry degenerates.
inline PlaneGraph disk(int layers, int size, std::uint64_t seed) {
    require(layers >= 1, "disk: need layers >= 1");
    require(size >= 3 * layers, "disk: need size >= 3*layers");
    for (std::uint64_t attempt = 0;; ++attempt) {
        require(attempt < 32, "disk: generator failed to produce a valid disk");
        try {
            Rng rng(seed * 0x9e3779b97f4a7c15ULL + attempt * 7919 + 12345);
            std::vector<int> sizes(layers, 3);
            for (int extra = size - 3 * layers; extra > 0; --extra) {
                int a = static_cast<int>(rng.below(layers));
                int b = static_cast<int>(rng.below(layers));
                ++sizes[std::min(a, b)];
            }
            std::vector<std::vector<char>> moves;
            for (int i = 0; i + 1 < layers; ++i) {
                std::vector<char> mv;
                for (int x = 0; x < sizes[i]; ++x) mv.push_back('O');
                for (int x = 0; x < sizes[i + 1]; ++x) mv.push_back('I');
                rng.shuffle(mv);
                moves.push_back(std::move(mv));
            }
            auto chords = detail::ear_core(sizes[layers - 1], rng);
            return detail::ring_disk(sizes, moves, chords);
        } catch (const Error&) {
            continue;
        }
    }
}

/// Two-layer disk whose annulus alternates ladders one by one and whose core
/// is the fan triangulation: the inner chord sweep has neither cycle-vertices
/// nor cycle-pairs for most chords (the Case-2c corridor).
inline PlaneGraph corridor_private(int m) {
    require(m >= 8, "corridor_private: need m >= 8");
    std::vector<char> mv;
    for (int i = 0; i < m; ++i) {
        mv.push_back('I');
        mv.push_back('O');
    }
    return detail::ring_disk({m, m}, {mv}, detail::fan_core(m));
}

namespace detail {

/// Inner polygon on a sagging arc closed by a top chord; convex position.
inline void arc_polygon(int m, std::vector<std::string>& names,
                        std::vector<std::pair<double, double>>& xy,
                        std::vector<std::pair<int, int>>& edges) {
    for (int j = 0; j < m; ++j) {
        names.push_back("c" + std::to_string(j));
        xy.push_back({static_cast<double>(j), -0.08 * j * (m - 1 - j)});
    }
    for (int j = 0; j + 1 < m; ++j) edges.push_back({j, j + 1});
    edges.push_back({0, m - 1});  // top chord
}

}  // namespace detail

/// Two-layer disk whose single hub sees the entire inner polygon; the inner
/// chord sweep all shares the hub as a cycle-vertex (the Case-2a corridor).
inline PlaneGraph corridor_hub(int m) {
    require(m >= 6, "corridor_hub: need m >= 6");
    std::vector<std::string> names;
    std::vector<std::pair<double, double>> xy;
    std::vector<std::pair<int, int>> edges;
    detail::arc_polygon(m, names, xy, edges);
    for (auto [x, k] : detail::fan_core(m)) edges.push_back({x, k});
    double M = m;
    int y = static_cast<int>(names.size());
    names.push_back("y");
    xy.push_back({(M - 1) / 2.0, -2.5 * M});
    int z1 = static_cast<int>(names.size());
    names.push_back("z1");
    xy.push_back({-1.5 * M, 1.2 * M});
    int z2 = static_cast<int>(names.size());
    names.push_back("z2");
    xy.push_back({2.5 * M, -0.6 * M});
    for (int j = 0; j < m; ++j) edges.push_back({y, j});
    edges.push_back({z1, 0});
    edges.push_back({z1, m - 1});
    edges.push_back({z2, m - 1});
    edges.push_back({y, z1});
    edges.push_back({z1, z2});
    edges.push_back({z2, y});
    detail::sort_unique_edges(edges);
    PlaneGraph g = plane_from_coords(names, xy, edges, {y, z1, z2});
    std::vector<int> expect(g.n(), 2);
    expect[y] = expect[z1] = expect[z2] = 1;
    return detail::checked_disk(std::move(g), expect);
}

/// Two-layer disk with a snake-triangulated inner polygon flanked by the two
/// adjacent hubs P (left arc) and Q (right arc): the inner chord sweep shares
/// the cycle-pair {P,Q} (the Case-2b corridor).
inline PlaneGraph corridor_pair(int m) {
    require(m >= 8, "corridor_pair: need m >= 8");
    std::vector<std::string> names;
    std::vector<std::pair<double, double>> xy;
    std::vector<std::pair<int, int>> edges;
    detail::arc_polygon(m, names, xy, edges);
    for (auto [a, b] : detail::snake_core(m)) edges.push_back({a, b});
    double M = m;
    int h = m / 2;
    int P = static_cast<int>(names.size());
    names.push_back("P");
    xy.push_back({0.25 * (M - 1), -2.5 * M});
    int Q = static_cast<int>(names.size());
    names.push_back("Q");
    xy.push_back({0.75 * (M - 1), -2.5 * M});
    int R1 = static_cast<int>(names.size());
    names.push_back("R1");
    xy.push_back({-1.5 * M, 1.2 * M});
    int R2 = static_cast<int>(names.size());
    names.push_back("R2");
    xy.push_back({2.5 * M, 1.2 * M});
    for (int j = 0; j <= h; ++j) edges.push_back({P, j});
    for (int j = h; j < m; ++j) edges.push_back({Q, j});
    edges.push_back({R1, 0});
    edges.push_back({R1, m - 1});
    edges.push_back({R2, m - 1});
    edges.push_back({P, Q});
    edges.push_back({Q, R2});
    edges.push_back({R2, R1});
    edges.push_back({R1, P});
    detail::sort_unique_edges(edges);
    PlaneGraph g = plane_from_coords(names, xy, edges, {P, Q, R2, R1});
    std::vector<int> expect(g.n(), 2);
    expect[P] = expect[Q] = expect[R1] = expect[R2] = 1;
    return detail::checked_disk(std::move(g), expect);
}

/// Random hypergraph on n vertices and up to m edges (sizes >= 2).
inline Hypergraph tiny_hypergraph(int n, int m, std::uint64_t seed) {
    Rng rng(seed ^ 0x5bd1e995ULL);
    RawHypergraph raw;
    for (int v = 0; v < n; ++v) raw.names.push_back("x" + std::to_string(v));
    for (int e = 0; e < m; ++e) {
        VertexSet edge;
        for (int v = 0; v < n; ++v)
            if (rng.chance(0.45)) edge.push_back(v);
        raw.edges.push_back(std::move(edge));
    }
    return normalize(raw);
}

}  // namespace gen
}  // namespace psk

