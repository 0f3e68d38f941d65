#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psk/separators.hpp"

namespace psk {

struct GlueResult {
    PlaneGraph graph;
    std::vector<int> new_of_old;  // G vertex id -> result id, -1 if removed
    bool degenerate = false;      // subgraph case (A_i = S_i or S_j = B_j)
    bool reflected = false;       // B side was mirrored to match orientations
};

namespace detail {

inline PlaneGraph reflect_plane(const PlaneGraph& g) {
    PlaneGraph r;
    r.names = g.names;
    r.rot = g.rot;
    for (auto& a : r.rot) std::reverse(a.begin(), a.end());
    std::vector<int> old_outer;
    if (g.outer >= 0)
        for (int d : g.fdarts[g.outer]) old_outer.push_back(g.dtail[d]);
    r.finalize();
    if (!old_outer.empty()) {
        std::reverse(old_outer.begin(), old_outer.end());
        r.outer = r.find_face_of_walk(old_outer);
    }
    return r;
}

/// Cyclic index sequence of a separator: the order in which the indexed
/// vertices are adjacent along the path/cycle.
inline std::vector<int> structural_order(const SeparatorTriple& t) {
    std::vector<int> idx;
    int p = t.width();
    if (t.shape == SepShape::Path) {
        for (int k = 1; k <= p; ++k) idx.push_back(k);
    } else {
        idx.push_back(p);  // vstar
        for (int k = 1; k <= t.pprime(); ++k) idx.push_back(k);
        if (t.vdagger != t.vstar) idx.push_back(p - 1);
    }
    return idx;
}

/// Structural neighbors (along the separator path/cycle) of index k.
inline std::vector<int> structural_neighbors(const SeparatorTriple& t, int k) {
    std::vector<int> order = structural_order(t);
    int m = static_cast<int>(order.size());
    std::vector<int> out;
    for (int i = 0; i < m; ++i) {
        if (order[i] != k) continue;
        if (t.shape == SepShape::Cycle || m <= 1) {
            out.push_back(order[(i - 1 + m) % m]);
            if (m > 2) out.push_back(order[(i + 1) % m]);
        } else {
            if (i > 0) out.push_back(order[i - 1]);
            if (i + 1 < m) out.push_back(order[i + 1]);
        }
    }
    sort_unique(out);
    return out;
}

}  // namespace detail

/// G(T_i ⋈ T_j): keep G[A_i] and G[B_j] and identify the separators
/// index-wise. The embedding is produced by rotation surgery: G[B_j] is
/// spliced into the face of G[A_i] left by the removed region, reflecting
/// G[B_j] when the traversal orientations disagree.
inline GlueResult glue(const PlaneGraph& g, const WfsSequence& seq, int i, int j) {
    require(0 <= i && i <= j && j < seq.length(), "glue: bad indices");
    GlueResult out;
    if (i == j) {
        out.graph = g;
        out.new_of_old.resize(g.n());
        for (int v = 0; v < g.n(); ++v) out.new_of_old[v] = v;
        return out;
    }
    const SeparatorTriple& ti = seq.triples[i];
    const SeparatorTriple& tj = seq.triples[j];
    int p = ti.width();
    require(p == tj.width(), "glue: widths differ");
    VertexSet sep_i = ti.sep_set(), sep_j = tj.sep_set();

    VertexSet all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;

    // degenerate: plain subgraph with renaming
    if (ti.A == sep_i || tj.B == sep_j) {
        out.degenerate = true;
        VertexSet keep = ti.A == sep_i ? tj.B : ti.A;
        Restriction r = restrict_plane(g, keep);
        out.graph = r.graph;
        out.new_of_old = r.new_of;
        if (ti.A == sep_i) {
            // rename S_j partners to the S_i vertices
            for (int k = 1; k <= p; ++k) {
                int vj = tj.indexed(k), vi = ti.indexed(k);
                out.graph.names[r.new_of[vj]] = g.names[vi];
                out.new_of_old[vi] = r.new_of[vj];
            }
        }
        return out;
    }

    VertexSet deleted_a = set_difference(all, ti.A);
    VertexSet deleted_b = set_difference(all, tj.B);
    require(!deleted_a.empty() && !deleted_b.empty(), "glue: inconsistent degeneracy");
    int mark_a = g.dface[g.doff[deleted_a.front()]];  // face next to a removed vertex
    int mark_b = g.dface[g.doff[deleted_b.front()]];
    Restriction ga = restrict_plane(g, ti.A, mark_a);
    require(ga.marked_region_face >= 0, "glue: no insertion face in G[A_i]");

    auto attempt = [&](bool reflected) -> std::optional<PlaneGraph> {
        Restriction gb0 = restrict_plane(g, tj.B, mark_b);
        PlaneGraph gb = gb0.graph;
        int attach_face = gb0.marked_region_face;
        if (reflected) {
            std::vector<int> walk;
            for (int d : gb.fdarts[attach_face]) walk.push_back(gb.dtail[d]);
            gb = detail::reflect_plane(gb);
            std::reverse(walk.begin(), walk.end());
            attach_face = gb.find_face_of_walk(walk);
            if (attach_face < 0) return std::nullopt;
        }
        // result ids: GA ids first, then B-private vertices
        int na = ga.graph.n();
        std::vector<int> res_of_gb(gb.n(), -1);
        std::vector<std::string> names = ga.graph.names;
        for (int k = 1; k <= p; ++k)
            res_of_gb[gb0.new_of[tj.indexed(k)]] = ga.new_of[ti.indexed(k)];
        for (int v = 0; v < gb.n(); ++v)
            if (res_of_gb[v] < 0) {
                res_of_gb[v] = static_cast<int>(names.size());
                names.push_back(gb.names[v]);
            }
        std::vector<std::vector<int>> rot(names.size());
        for (int v = 0; v < na; ++v) rot[v] = ga.graph.rot[v];
        for (int v = 0; v < gb.n(); ++v) {
            if (res_of_gb[v] < na) continue;  // separator vertex, spliced below
            for (int u : gb.rot[v]) rot[res_of_gb[v]].push_back(res_of_gb[u]);
        }
        // corner of a vertex on a face: the unique walk position with head v
        auto corner_of = [&](const PlaneGraph& h, int face, int v) -> std::optional<int> {
            int found = -1;
            const auto& w = h.fdarts[face];
            for (std::size_t x = 0; x < w.size(); ++x)
                if (h.dhead[w[x]] == v) {
                    if (found >= 0) return std::nullopt;  // pinched face
                    found = static_cast<int>(x);
                }
            if (found < 0) return std::nullopt;
            return found;
        };
        for (int k = 1; k <= p; ++k) {
            int ai = ga.new_of[ti.indexed(k)];
            int bj = gb0.new_of[tj.indexed(k)];
            // fan: gb rotation of bj linearized at its attachment corner,
            // minus the structural neighbors (they are identified and present
            // on the GA side already)
            auto bc = corner_of(gb, attach_face, bj);
            if (!bc) return std::nullopt;
            const auto& bw = gb.fdarts[attach_face];
            int dprev = bw[*bc];
            int xprev = gb.dtail[dprev];
            std::vector<int> lin;
            int deg = gb.deg(bj);
            int start = gb.pos_in_rot(bj, xprev);
            for (int s = 1; s <= deg; ++s) lin.push_back(gb.rot[bj][(start + s) % deg]);
            std::vector<int> excl;
            for (int nk : detail::structural_neighbors(tj, k))
                excl.push_back(gb0.new_of[tj.indexed(nk)]);
            sort_unique(excl);
            std::vector<int> fan;
            for (int u : lin)
                if (!set_contains(excl, u)) fan.push_back(u);
            // insertion corner on the GA side
            auto ac = corner_of(ga.graph, ga.marked_region_face, ai);
            if (!ac) return std::nullopt;
            const auto& aw = ga.graph.fdarts[ga.marked_region_face];
            int xa = ga.graph.dtail[aw[*ac]];
            int posa = -1;
            for (std::size_t q = 0; q < rot[ai].size(); ++q)
                if (rot[ai][q] == xa) posa = static_cast<int>(q);
            if (posa < 0) return std::nullopt;
            std::vector<int> mapped_fan;
            for (int u : fan) mapped_fan.push_back(res_of_gb[u]);
            rot[ai].insert(rot[ai].begin() + posa + 1, mapped_fan.begin(), mapped_fan.end());
        }
        PlaneGraph res;
        res.names = std::move(names);
        res.rot = std::move(rot);
        try {
            res.finalize();
        } catch (const Error&) {
            return std::nullopt;
        }
        if (!res.connected()) return std::nullopt;
        // outer face: a surviving dart of the old outer walk inside A_i
        int od = -1;
        if (g.outer >= 0)
            for (int d : g.fdarts[g.outer]) {
                int u = g.dtail[d], v = g.dhead[d];
                if (ga.new_of[u] >= 0 && ga.new_of[v] >= 0 &&
                    res.has_edge(ga.new_of[u], ga.new_of[v])) {
                    od = res.dart(ga.new_of[u], ga.new_of[v]);
                    break;
                }
            }
        if (od < 0) return std::nullopt;
        res.outer = res.dface[od];
        return res;
    };

    LayerDecomposition gl = layer_decomposition(g);
    std::optional<PlaneGraph> best;
    bool best_reflected = false;
    for (bool refl : {false, true}) {
        auto cand = attempt(refl);
        if (!cand) continue;
        LayerDecomposition cl = layer_decomposition(*cand);
        bool layers_ok = cl.r <= gl.r;
        if (layers_ok || !best) {
            best = std::move(cand);
            best_reflected = refl;
            if (layers_ok) break;
        }
    }
    require(best.has_value(), "glue: no orientation yields a planar embedding");
    out.graph = std::move(*best);
    out.reflected = best_reflected;
    out.new_of_old.assign(g.n(), -1);
    {
        std::map<std::string, int> byname;
        for (int v = 0; v < out.graph.n(); ++v) byname[out.graph.names[v]] = v;
        for (int v = 0; v < g.n(); ++v) {
            auto it = byname.find(g.names[v]);
            if (it != byname.end()) out.new_of_old[v] = it->second;
        }
        // S_j partners map onto the S_i vertices
        for (int k = 1; k <= p; ++k)
            out.new_of_old[tj.indexed(k)] = out.new_of_old[ti.indexed(k)];
    }
    return out;
}

/// Checks the layer guarantee of the gluing lemma: every surviving vertex sits
/// on a layer no deeper than in G, and the total layer count did not grow.
inline bool verify_glue_layers(const PlaneGraph& g, const GlueResult& glued) {
    LayerDecomposition before = layer_decomposition(g);
    LayerDecomposition after = layer_decomposition(glued.graph);
    if (after.r > before.r) return false;
    for (int v = 0; v < g.n(); ++v)
        if (glued.new_of_old[v] >= 0 && after.layer[glued.new_of_old[v]] > before.layer[v])
            return false;
    return true;
}

}  // namespace psk
