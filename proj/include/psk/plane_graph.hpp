#pragma once

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "psk/graph.hpp"
#include "psk/util.hpp"

namespace psk {

/// Plane graph: a simple graph with a fixed combinatorial embedding given by
/// clockwise rotations, plus a designated outer face. Face walks come out of
/// the rotation system; inner faces trace counterclockwise, the outer face
/// clockwise. Immutable after `finalize`.
///
/// Dart d with tail t and head h is stored at index doff[t] + (position of h
/// in rot[t]). twin(d) reverses it; the face successor of d=(u,v) is the dart
/// (v,w) where w follows u in rot[v].
struct PlaneGraph {
    std::vector<std::string> names;
    std::vector<std::vector<int>> rot;  // clockwise neighbor lists
    int outer = -1;                     // face id

    // derived
    std::vector<int> doff, dtail, dhead, dtwin, dface;
    std::vector<std::vector<int>> fdarts;  // face -> dart walk
    std::vector<int> vcomp;
    int ncomp = 0;

    int n() const { return static_cast<int>(rot.size()); }
    int dart_count() const { return static_cast<int>(dtail.size()); }
    int edge_count() const { return dart_count() / 2; }
    int face_count() const { return static_cast<int>(fdarts.size()); }
    int deg(int v) const { return static_cast<int>(rot[v].size()); }

    int index_of(const std::string& name) const {
        for (int i = 0; i < n(); ++i)
            if (names[i] == name) return i;
        return -1;
    }

    int pos_in_rot(int v, int u) const {
        for (int i = 0; i < deg(v); ++i)
            if (rot[v][i] == u) return i;
        return -1;
    }

    int dart(int u, int v) const {
        int p = pos_in_rot(u, v);
        require(p >= 0, "dart: no such edge");
        return doff[u] + p;
    }

    bool has_edge(int u, int v) const { return pos_in_rot(u, v) >= 0; }

    /// Face successor: next dart of the face walk containing d.
    int next_in_face(int d) const {
        int t = dtwin[d];
        int v = dtail[t];
        int i = t - doff[v];
        return doff[v] + (i + 1) % deg(v);
    }

    std::vector<int> face_vertices(int f) const {
        VertexSet vs;
        for (int d : fdarts[f]) vs.push_back(dtail[d]);
        sort_unique(vs);
        return vs;
    }

    std::vector<int> face_walk(int f) const {
        std::vector<int> w;
        for (int d : fdarts[f]) w.push_back(dtail[d]);
        return w;
    }

    Graph underlying() const {
        Graph g = Graph::with_vertices(names);
        for (int v = 0; v < n(); ++v)
            for (int u : rot[v])
                if (v < u) g.add_edge(v, u);
        return g;
    }

    bool connected() const { return ncomp <= 1; }

    /// Rebuild all derived arrays from names/rot. Validates the rotation
    /// system and the genus-0 condition per connected component.
    void finalize() {
        int nn = n();
        doff.assign(nn + 1, 0);
        for (int v = 0; v < nn; ++v) doff[v + 1] = doff[v] + deg(v);
        int nd = doff[nn];
        dtail.assign(nd, -1);
        dhead.assign(nd, -1);
        for (int v = 0; v < nn; ++v) {
            for (int i = 0; i < deg(v); ++i) {
                int u = rot[v][i];
                require(u >= 0 && u < nn, "rotation refers to unknown vertex");
                require(u != v, "rotation contains a self-loop");
                dtail[doff[v] + i] = v;
                dhead[doff[v] + i] = u;
            }
            VertexSet copy = rot[v];
            sort_unique(copy);
            require(static_cast<int>(copy.size()) == deg(v), "duplicate neighbor in rotation");
        }
        // twins via sorted edge keys
        dtwin.assign(nd, -1);
        std::vector<std::tuple<int, int, int>> keys;
        keys.reserve(nd);
        for (int d = 0; d < nd; ++d)
            keys.emplace_back(std::min(dtail[d], dhead[d]), std::max(dtail[d], dhead[d]), d);
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i + 1 < keys.size(); i += 2) {
            auto [a1, b1, d1] = keys[i];
            auto [a2, b2, d2] = keys[i + 1];
            require(a1 == a2 && b1 == b2, "rotation system not symmetric");
            dtwin[d1] = d2;
            dtwin[d2] = d1;
        }
        require(nd % 2 == 0, "rotation system not symmetric");
        // faces
        dface.assign(nd, -1);
        fdarts.clear();
        for (int d0 = 0; d0 < nd; ++d0) {
            if (dface[d0] >= 0) continue;
            int f = face_count();
            fdarts.emplace_back();
            int d = d0;
            do {
                dface[d] = f;
                fdarts[f].push_back(d);
                d = next_in_face(d);
            } while (d != d0);
        }
        // components + Euler per component
        vcomp.assign(nn, -1);
        ncomp = 0;
        for (int s = 0; s < nn; ++s) {
            if (vcomp[s] >= 0) continue;
            std::vector<int> stack{s};
            vcomp[s] = ncomp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : rot[v])
                    if (vcomp[u] < 0) {
                        vcomp[u] = ncomp;
                        stack.push_back(u);
                    }
            }
            ++ncomp;
        }
        std::vector<int> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
        for (int v = 0; v < nn; ++v) ++cv[vcomp[v]];
        for (int d = 0; d < nd; ++d)
            if (dtail[d] < dhead[d]) ++ce[vcomp[dtail[d]]];
        for (int f = 0; f < face_count(); ++f) ++cf[vcomp[dtail[fdarts[f][0]]]];
        for (int c = 0; c < ncomp; ++c) {
            int faces = cv[c] == 1 && ce[c] == 0 ? 1 : cf[c];
            require(cv[c] - ce[c] + faces == 2,
                    "rotation system is not a genus-0 embedding (component " +
                        std::to_string(c) + ")");
        }
    }

    /// Locate the face matching a vertex walk (either direction); -1 if none.
    int find_face_of_walk(const std::vector<int>& walk) const {
        auto try_dir = [&](const std::vector<int>& w) -> int {
            if (w.size() < 2) return -1;
            int d0;
            if (pos_in_rot(w[0], w[1]) < 0) return -1;
            d0 = dart(w[0], w[1]);
            int f = dface[d0];
            if (fdarts[f].size() != w.size()) return -1;
            int d = d0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (dtail[d] != w[i] || dhead[d] != w[(i + 1) % w.size()]) return -1;
                d = next_in_face(d);
            }
            return f;
        };
        int f = try_dir(walk);
        if (f >= 0) return f;
        std::vector<int> rev(walk.rbegin(), walk.rend());
        return try_dir(rev);
    }
};

/// Build a validated plane graph from rotations and an outer face walk.
inline PlaneGraph make_plane_graph(std::vector<std::string> names,
                                   std::vector<std::vector<int>> rot,
                                   const std::vector<int>& outer_walk) {
    PlaneGraph g;
    g.names = std::move(names);
    g.rot = std::move(rot);
    g.finalize();
    if (g.dart_count() == 0) {
        require(outer_walk.empty(), "outer face walk given for edgeless graph");
        g.outer = -1;
        return g;
    }
    int f = g.find_face_of_walk(outer_walk);
    require(f >= 0, "outer face walk does not match any face");
    g.outer = f;
    return g;
}

/// Build a plane graph from a coherent list of counterclockwise-oriented
/// inner faces (plus the implicit outer face). Each oriented face (..x,y,z..)
/// pins z right after x in the clockwise rotation of y; boundary vertices
/// leave one open corner, which becomes their outer-face gap.
inline PlaneGraph plane_from_faces(std::vector<std::string> names,
                                   const std::vector<std::vector<int>>& faces,
                                   const std::vector<int>& outer_walk) {
    int n = static_cast<int>(names.size());
    std::vector<std::map<int, int>> succ(n);
    for (const auto& f : faces) {
        int k = static_cast<int>(f.size());
        require(k >= 3, "plane_from_faces: face too small");
        for (int i = 0; i < k; ++i) {
            int x = f[i], y = f[(i + 1) % k], z = f[(i + 2) % k];
            auto [it, fresh] = succ[y].emplace(x, z);
            require(fresh, "plane_from_faces: conflicting corners at vertex " + names[y]);
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        std::set<int> nbrs, has_pred;
        for (auto [p, q] : succ[v]) {
            nbrs.insert(p);
            nbrs.insert(q);
            has_pred.insert(q);
        }
        int start = -1;
        for (int u : nbrs)
            if (!has_pred.count(u)) start = u;  // boundary gap
        if (start < 0) start = *nbrs.begin();
        int u = start;
        for (std::size_t steps = 0; steps <= nbrs.size(); ++steps) {
            rot[v].push_back(u);
            auto it = succ[v].find(u);
            if (it == succ[v].end()) break;
            u = it->second;
            if (u == start) break;
        }
        require(rot[v].size() == nbrs.size(),
                "plane_from_faces: corners at " + names[v] + " do not chain");
    }
    return make_plane_graph(std::move(names), std::move(rot), outer_walk);
}

/// Embed from coordinates: rotations = neighbors clockwise by angle.
/// Intended for generators where a straight-line drawing is known.
inline PlaneGraph plane_from_coords(std::vector<std::string> names,
                                    const std::vector<std::pair<double, double>>& xy,
                                    const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<int>& outer_walk) {
    int n = static_cast<int>(names.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<double, int>> byangle;
        for (int u : adj[v]) {
            double a = std::atan2(xy[u].second - xy[v].second, xy[u].first - xy[v].first);
            byangle.emplace_back(-a, u);  // decreasing angle = clockwise
        }
        std::sort(byangle.begin(), byangle.end());
        for (auto& [a, u] : byangle) rot[v].push_back(u);
    }
    return make_plane_graph(std::move(names), std::move(rot), outer_walk);
}

// --- layer decomposition -----------------------------------------------------

struct LayerDecomposition {
    std::vector<int> layer;          // vertex -> 1-based layer
    std::vector<VertexSet> layers;   // layers[i] = L_{i+1}
    int r = 0;
};

/// Layers by BFS in the vertex-face incidence graph from the outer face:
/// iteratively peeling the outer layer exposes exactly the vertices whose
/// radial distance is the next odd number, so layer(v) = (dist(v)+1)/2.
inline LayerDecomposition layer_decomposition(const PlaneGraph& g) {
    require(g.ncomp <= 1, "layer_decomposition: graph is disconnected");
    LayerDecomposition out;
    if (g.n() == 0) return out;
    if (g.dart_count() == 0) {  // single vertex
        out.layer = {1};
        out.layers = {{0}};
        out.r = 1;
        return out;
    }
    require(g.outer >= 0, "layer_decomposition: no outer face designated");
    int nf = g.face_count();
    std::vector<std::vector<int>> fverts(nf);
    for (int f = 0; f < nf; ++f) fverts[f] = g.face_vertices(f);
    std::vector<std::vector<int>> vfaces(g.n());
    for (int f = 0; f < nf; ++f)
        for (int v : fverts[f]) vfaces[v].push_back(f);
    std::vector<int> fdist(nf, -1), vdist(g.n(), -1);
    std::vector<int> fq{g.outer};
    fdist[g.outer] = 0;
    int depth = 0;
    while (!fq.empty()) {
        std::vector<int> vq;
        for (int f : fq)
            for (int v : fverts[f])
                if (vdist[v] < 0) {
                    vdist[v] = depth + 1;
                    vq.push_back(v);
                }
        fq.clear();
        for (int v : vq)
            for (int f : vfaces[v])
                if (fdist[f] < 0) {
                    fdist[f] = depth + 2;
                    fq.push_back(f);
                }
        depth += 2;
    }
    out.layer.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        require(vdist[v] > 0, "layer_decomposition: unreachable vertex");
        out.layer[v] = (vdist[v] + 1) / 2;
        out.r = std::max(out.r, out.layer[v]);
    }
    out.layers.assign(out.r, {});
    for (int v = 0; v < g.n(); ++v) out.layers[out.layer[v] - 1].push_back(v);
    return out;
}

// --- triangulated disks ------------------------------------------------------

inline bool is_simple_cycle_walk(const PlaneGraph& g, int f) {
    const auto& w = g.fdarts[f];
    if (w.size() < 3) return false;
    VertexSet vs;
    for (int d : w) vs.push_back(g.dtail[d]);
    sort_unique(vs);
    return vs.size() == w.size();
}

inline bool is_triangulated_disk(const PlaneGraph& g) {
    if (g.n() < 3 || g.outer < 0 || !g.connected()) return false;
    if (!is_simple_cycle_walk(g, g.outer)) return false;
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer) continue;
        if (g.fdarts[f].size() != 3) return false;
        if (g.face_vertices(f).size() != 3) return false;
    }
    return true;
}

namespace detail {

/// Adds the chord {u,w} cutting the corner (u,v,w) of face f, where
/// d1=(u,v), d2=(v,w) are consecutive darts of f. Rotations are updated so
/// that the triangle-side face is (u,v,w) and the remainder keeps the rest
/// of the old walk. Derived arrays must be rebuilt by the caller.
inline void cut_corner_raw(PlaneGraph& g, int d1, int d2) {
    int u = g.dtail[d1], v = g.dhead[d1], w = g.dhead[d2];
    require(u != w && !g.has_edge(u, w), "cut_corner: bad corner");
    // walk-predecessor of d1 shares u as head
    int dprev = d1;
    int steps = 0;
    for (int d = d2;; d = g.next_in_face(d)) {
        if (g.dhead[d] == u && g.next_in_face(d) == d1) {
            dprev = d;
            break;
        }
        require(++steps < g.dart_count() + 2, "cut_corner: walk broken");
    }
    int t = g.dtail[dprev];
    auto& ru = g.rot[u];
    ru.insert(ru.begin() + g.pos_in_rot(u, t) + 1, w);
    auto& rw = g.rot[w];
    rw.insert(rw.begin() + g.pos_in_rot(w, v) + 1, u);
}

}  // namespace detail

/// Triangulates G into a triangulated disk by adding edges only: first closes
/// the outer walk into a simple cycle by cutting corners at repeated boundary
/// vertices, then triangulates each inner face (fan from its lowest-layer
/// vertex, ear-cutting when the fan would create parallel edges).
/// Postconditions: output is a triangulated disk, input is a subgraph, every
/// vertex keeps its layer index. Both are checked.
inline PlaneGraph triangulate_to_disk(const PlaneGraph& g0) {
    require(g0.n() >= 3, "triangulate_to_disk: need at least 3 vertices");
    require(g0.connected(), "triangulate_to_disk: graph is disconnected");
    const LayerDecomposition base_layers = layer_decomposition(g0);
    PlaneGraph g = g0;

    // Phase 1: make the outer walk a simple cycle.
    for (;;) {
        const auto& walk = g.fdarts[g.outer];
        std::map<int, int> occ;
        for (int d : walk) ++occ[g.dtail[d]];
        if (occ.size() == walk.size()) break;  // simple
        int k = static_cast<int>(walk.size());
        int pick = -1;
        for (int i = 0; i < k && pick < 0; ++i) {
            int d1 = walk[i], d2 = walk[(i + 1) % k];
            int u = g.dtail[d1], v = g.dhead[d1], w = g.dhead[d2];
            if (u != w && occ[v] >= 2 && !g.has_edge(u, w)) pick = i;
        }
        require(pick >= 0, "triangulate_to_disk: no admissible boundary corner");
        int d1 = walk[pick], d2 = walk[(pick + 1) % k];
        int u = g.dtail[d1], w = g.dhead[d2];
        detail::cut_corner_raw(g, d1, d2);
        g.finalize();
        g.outer = g.dface[g.dart(u, w)];  // remainder side keeps the old boundary
    }

    // Phase 2: triangulate inner faces.
    for (;;) {
        int target = -1;
        for (int f = 0; f < g.face_count() && target < 0; ++f)
            if (f != g.outer && g.fdarts[f].size() > 3) target = f;
        if (target < 0) break;

        std::vector<int> walk = g.face_walk(target);
        int k = static_cast<int>(walk.size());
        VertexSet distinct(walk);
        sort_unique(distinct);
        bool simple = static_cast<int>(distinct.size()) == k;

        int cut_at = -1;  // corner index to cut: (walk[i], walk[i+1], walk[i+2])
        if (simple) {
            // fan candidate: lowest layer, then smallest id
            int root_pos = 0;
            for (int i = 1; i < k; ++i) {
                int a = walk[i], b = walk[root_pos];
                if (std::make_pair(base_layers.layer[a], a) <
                    std::make_pair(base_layers.layer[b], b))
                    root_pos = i;
            }
            bool fan_ok = true;
            for (int j = 2; j <= k - 2; ++j)
                if (g.has_edge(walk[root_pos], walk[(root_pos + j) % k])) fan_ok = false;
            if (fan_ok) cut_at = root_pos;
        }
        if (cut_at < 0) {  // ear mode: any admissible corner
            for (int i = 0; i < k && cut_at < 0; ++i) {
                int a = walk[i], b = walk[(i + 1) % k], c = walk[(i + 2) % k];
                (void)b;
                if (a != c && !g.has_edge(a, c)) cut_at = i;
            }
            require(cut_at >= 0, "triangulate_to_disk: stuck inner face");
        }
        int outer_mark = g.fdarts[g.outer][0];
        int ou = g.dtail[outer_mark], ov = g.dhead[outer_mark];
        detail::cut_corner_raw(g, g.fdarts[target][cut_at],
                               g.fdarts[target][(cut_at + 1) % k]);
        g.finalize();
        g.outer = g.dface[g.dart(ou, ov)];
    }

    require(is_triangulated_disk(g), "triangulate_to_disk: result is not a disk");
    LayerDecomposition after = layer_decomposition(g);
    require(after.layer == base_layers.layer, "triangulate_to_disk: layer changed");
    return g;
}

// --- restriction to an induced subgraph with face-region tracking ------------

struct Restriction {
    PlaneGraph graph;            // re-densified ids
    std::vector<int> orig_of;    // new id -> old id
    std::vector<int> new_of;     // old id -> new id or -1
    int outer_region_face = -1;  // face of `graph` whose region contains G's outer face
    int marked_region_face = -1; // same for the caller-supplied marked face
};

/// Induced plane subgraph G[keep]. Deleting vertices merges faces; the faces
/// of the restriction correspond to regions of merged old faces. We track
/// which new face the region of the old outer face (and of one optional
/// marked face) ended up in, via the corner sweeps at every surviving dart
/// plus closure over faces incident to a common deleted vertex.
inline Restriction restrict_plane(const PlaneGraph& g, const VertexSet& keep,
                                  int marked_face = -1) {
    Restriction res;
    res.new_of.assign(g.n(), -1);
    for (int v : keep) {
        require(v >= 0 && v < g.n(), "restrict_plane: unknown vertex");
        res.new_of[v] = static_cast<int>(res.orig_of.size());
        res.orig_of.push_back(v);
        res.graph.names.push_back(g.names[v]);
    }
    res.graph.rot.assign(res.orig_of.size(), {});
    for (std::size_t nv = 0; nv < res.orig_of.size(); ++nv)
        for (int u : g.rot[res.orig_of[nv]])
            if (res.new_of[u] >= 0) res.graph.rot[nv].push_back(res.new_of[u]);
    res.graph.finalize();

    if (g.dart_count() == 0) return res;

    // union-find over old faces: faces incident to a deleted vertex merge
    std::vector<int> uf(g.face_count());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (int v = 0; v < g.n(); ++v) {
        if (res.new_of[v] >= 0) continue;
        int first = -1;
        for (int i = 0; i < g.deg(v); ++i) {
            int f = find(g.dface[g.doff[v] + i]);
            if (first < 0)
                first = f;
            else
                uf[f] = first;
        }
    }
    int outer_class = g.outer >= 0 ? find(g.outer) : -1;
    int marked_class = marked_face >= 0 ? find(marked_face) : -1;

    // For each new face, sweep the corners of its walk and record old-face classes.
    for (int f = 0; f < res.graph.face_count() &&
                    (res.outer_region_face < 0 || res.marked_region_face < 0);
         ++f) {
        bool has_outer = false, has_marked = false;
        for (int nd : res.graph.fdarts[f]) {
            int u = res.orig_of[res.graph.dtail[nd]];
            int v = res.orig_of[res.graph.dhead[nd]];
            int ndn = res.graph.next_in_face(nd);
            int w = res.orig_of[res.graph.dhead[ndn]];
            // sweep rot_g(v) clockwise from u (exclusive) to w (inclusive)
            int pu = g.pos_in_rot(v, u);
            for (int s = 1; s <= g.deg(v); ++s) {
                int x = g.rot[v][(pu + s) % g.deg(v)];
                int cls = find(g.dface[g.dart(v, x)]);
                if (cls == outer_class) has_outer = true;
                if (marked_class >= 0 && cls == marked_class) has_marked = true;
                if (x == w) break;
            }
        }
        if (has_outer && res.outer_region_face < 0) res.outer_region_face = f;
        if (has_marked && res.marked_region_face < 0) res.marked_region_face = f;
    }
    res.graph.outer = res.outer_region_face;
    return res;
}

// --- .pg text format ---------------------------------------------------------
//
//   outerface: v1 v2 ... vk
//   v: u1 u2 u3 ...          (clockwise rotation; a line per vertex)

inline PlaneGraph parse_pg(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::map<std::string, int> idx;
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> rot_names;
    std::vector<std::string> outer_names;
    bool have_outer = false;
    auto intern = [&](const std::string& name) {
        auto it = idx.find(name);
        if (it != idx.end()) return it->second;
        int id = static_cast<int>(names.size());
        names.push_back(name);
        rot_names.emplace_back();
        idx.emplace(name, id);
        return id;
    };
    int lineno = 0;
    std::vector<char> rot_defined;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "outerface:") {
            require(!have_outer, "line " + std::to_string(lineno) + ": duplicate outerface");
            std::string tok;
            while (ls >> tok) outer_names.push_back(tok);
            have_outer = true;
            continue;
        }
        require(!head.empty() && head.back() == ':',
                "line " + std::to_string(lineno) + ": expected 'vertex:' line");
        std::string vname = head.substr(0, head.size() - 1);
        require(!vname.empty(), "line " + std::to_string(lineno) + ": empty vertex name");
        int v = intern(vname);
        if (static_cast<int>(rot_defined.size()) <= v) rot_defined.resize(v + 1, 0);
        require(!rot_defined[v], "line " + std::to_string(lineno) + ": duplicate rotation for " + vname);
        rot_defined[v] = 1;
        std::string tok;
        while (ls >> tok) rot_names[v].push_back(tok);
    }
    rot_defined.resize(names.size(), 0);
    for (std::size_t v = 0; v < names.size(); ++v)
        require(rot_defined[v], "no rotation line for vertex " + names[v]);
    std::vector<std::vector<int>> rot(names.size());
    for (std::size_t v = 0; v < names.size(); ++v)
        for (const auto& u : rot_names[v]) {
            auto it = idx.find(u);
            require(it != idx.end(), "rotation of " + names[v] + " names unknown vertex " + u);
            rot[v].push_back(it->second);
        }
    std::vector<int> outer_walk;
    for (const auto& u : outer_names) {
        auto it = idx.find(u);
        require(it != idx.end(), "outerface names unknown vertex " + u);
        outer_walk.push_back(it->second);
    }
    return make_plane_graph(std::move(names), std::move(rot), outer_walk);
}

inline std::string serialize_pg(const PlaneGraph& g) {
    std::ostringstream out;
    out << "outerface:";
    if (g.outer >= 0)
        for (int d : g.fdarts[g.outer]) out << ' ' << g.names[g.dtail[d]];
    out << '\n';
    for (int v = 0; v < g.n(); ++v) {
        out << g.names[v] << ':';
        for (int u : g.rot[v]) out << ' ' << g.names[u];
        out << '\n';
    }
    return out.str();
}

/// Layered DOT output.
inline std::string render_dot(const PlaneGraph& g, bool with_layers) {
    std::ostringstream out;
    out << "graph {\n";
    std::vector<int> layer;
    if (with_layers) layer = layer_decomposition(g).layer;
    for (int v = 0; v < g.n(); ++v) {
        out << "  \"" << g.names[v] << '"';
        if (with_layers) out << " [layer=" << layer[v] << ']';
        out << ";\n";
    }
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.rot[v])
            if (v < u) out << "  \"" << g.names[v] << "\" -- \"" << g.names[u] << "\";\n";
    out << "}\n";
    return out.str();
}

/// Semantic equality by names: same vertex set, same rotations, same outer walk
/// (up to cyclic shift), ignoring id permutation.
inline bool plane_equal(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.n() != b.n()) return false;
    std::map<std::string, int> bi;
    for (int v = 0; v < b.n(); ++v) bi[b.names[v]] = v;
    for (int v = 0; v < a.n(); ++v) {
        auto it = bi.find(a.names[v]);
        if (it == bi.end()) return false;
        int w = it->second;
        if (a.deg(v) != b.deg(w)) return false;
        if (a.deg(v) == 0) continue;
        std::vector<std::string> ra, rb;
        for (int u : a.rot[v]) ra.push_back(a.names[u]);
        for (int u : b.rot[w]) rb.push_back(b.names[u]);
        auto pos = std::find(rb.begin(), rb.end(), ra[0]);
        if (pos == rb.end()) return false;
        std::rotate(rb.begin(), pos, rb.end());
        if (ra != rb) return false;
    }
    if ((a.outer < 0) != (b.outer < 0)) return false;
    if (a.outer >= 0) {
        std::vector<std::string> wa, wb;
        for (int d : a.fdarts[a.outer]) wa.push_back(a.names[a.dtail[d]]);
        for (int d : b.fdarts[b.outer]) wb.push_back(b.names[b.dtail[d]]);
        if (wa.size() != wb.size()) return false;
        auto pos = std::find(wb.begin(), wb.end(), wa[0]);
        while (pos != wb.end()) {
            std::vector<std::string> rotated(wb);
            std::rotate(rotated.begin(), rotated.begin() + (pos - wb.begin()), rotated.end());
            if (rotated == wa) return true;
            pos = std::find(pos + 1, wb.end(), wa[0]);
        }
        return false;
    }
    return true;
}

}  // namespace psk
