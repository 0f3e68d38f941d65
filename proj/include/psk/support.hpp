#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psk/hypergraph.hpp"
#include "psk/plane_graph.hpp"

namespace psk {

struct SupportVerdict {
    bool ok = true;
    // hyperedge index -> connected-component partition of G[e] (G vertex ids)
    std::vector<std::pair<int, std::vector<VertexSet>>> violations;
};

namespace detail {

/// name-based vertex map from H into G; -1 where absent.
inline std::vector<int> h_to_g(const Hypergraph& h, const Graph& g) {
    std::map<std::string, int> gi;
    for (int v = 0; v < g.n(); ++v) gi[g.names[v]] = v;
    std::vector<int> map(h.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
        auto it = gi.find(h.names[v]);
        if (it != gi.end()) map[v] = it->second;
    }
    return map;
}

}  // namespace detail

/// Is G a support for H: does every hyperedge induce a connected subgraph?
/// Requires V(G) = V(H) (as name sets).
inline SupportVerdict is_support(const Graph& g, const Hypergraph& h) {
    require(g.n() == h.n(), "is_support: vertex sets differ in size");
    auto map = detail::h_to_g(h, g);
    for (int v = 0; v < h.n(); ++v)
        require(map[v] >= 0, "is_support: vertex " + h.names[v] + " missing from graph");
    SupportVerdict verdict;
    for (int e = 0; e < h.m(); ++e) {
        VertexSet ge;
        for (int v : h.edges[e]) ge.push_back(map[v]);
        sort_unique(ge);
        auto comps = induced_components(g, ge);
        if (comps.size() > 1) {
            verdict.ok = false;
            verdict.violations.emplace_back(e, std::move(comps));
        }
    }
    return verdict;
}

/// Is G a representative support for H: every vertex of V(H)\V(G) is covered
/// by a vertex of V(G), and G is a support for H minus those vertices.
inline bool is_representative_support(const Graph& g, const Hypergraph& h) {
    auto map = detail::h_to_g(h, g);
    std::map<std::string, int> hnames;
    for (int v = 0; v < h.n(); ++v) hnames[h.names[v]] = v;
    for (int v = 0; v < g.n(); ++v)
        if (!hnames.count(g.names[v])) return false;  // V(G) must be within V(H)
    VertexSet missing;
    for (int v = 0; v < h.n(); ++v)
        if (map[v] < 0) missing.push_back(v);
    for (int u : missing) {
        bool covered = false;
        for (int v = 0; v < h.n() && !covered; ++v)
            if (map[v] >= 0 && covers(h, v, u)) covered = true;
        if (!covered) return false;
    }
    Hypergraph reduced = remove_vertices(h, missing);
    if (reduced.n() != g.n()) return false;
    return is_support(g, reduced).ok;
}

/// Extends a representative support G (given as a triangulated-disk embedding)
/// to a support for all of H by attaching each missing vertex as a degree-one
/// neighbor of a covering vertex: into the outer face for layer-1 hosts,
/// otherwise into a face containing the host and one of its lower-layer
/// neighbors. The layer count does not increase (checked).
inline PlaneGraph extend_representative(const PlaneGraph& g, const Hypergraph& h) {
    require(is_triangulated_disk(g), "extend_representative: G is not a triangulated disk");
    require(is_representative_support(g.underlying(), h),
            "extend_representative: G is not a representative support");
    TwinPartition twins = twin_classes(h);
    std::map<std::string, int> hid;
    for (int v = 0; v < h.n(); ++v) hid[h.names[v]] = v;

    PlaneGraph out = g;
    int base_r = layer_decomposition(g).r;
    std::vector<std::string> missing;
    {
        std::map<std::string, int> gnames;
        for (int v = 0; v < g.n(); ++v) gnames[g.names[v]] = v;
        for (int v = 0; v < h.n(); ++v)
            if (!gnames.count(h.names[v])) missing.push_back(h.names[v]);
    }
    std::sort(missing.begin(), missing.end());

    for (const std::string& uname : missing) {
        int uh = hid.at(uname);
        // covering vertex: a member of the original V(G), preferring a twin,
        // else the lexicographically smallest coverer
        int host = -1;
        bool host_twin = false;
        for (int v = 0; v < g.n(); ++v) {
            auto it = hid.find(out.names[v]);
            if (it == hid.end()) continue;
            int vh = it->second;
            if (!covers(h, vh, uh)) continue;
            bool tw = twins.class_of[vh] == twins.class_of[uh];
            if (host < 0 || (tw && !host_twin) ||
                (tw == host_twin && out.names[v] < out.names[host])) {
                host = v;
                host_twin = tw;
            }
        }
        require(host >= 0, "extend_representative: no coverer for " + uname);

        LayerDecomposition ld = layer_decomposition(out);
        int target_face = -1;
        if (ld.layer[host] == 1) {
            target_face = out.outer;
        } else {
            for (int f = 0; f < out.face_count() && target_face < 0; ++f) {
                if (f == out.outer) continue;
                auto fv = out.face_vertices(f);
                if (!set_contains(fv, host)) continue;
                for (int w : fv)
                    if (w != host && out.has_edge(host, w) &&
                        ld.layer[w] == ld.layer[host] - 1) {
                        target_face = f;
                        break;
                    }
            }
            require(target_face >= 0, "extend_representative: no qualifying face");
        }
        // corner of host in the target face
        int corner_dart = -1;
        for (int d : out.fdarts[target_face])
            if (out.dhead[d] == host) {
                corner_dart = d;
                break;
            }
        require(corner_dart >= 0, "extend_representative: host not on face");
        int x = out.dtail[corner_dart];
        int outer_mark_u = out.dtail[out.fdarts[out.outer][0]];
        int outer_mark_v = out.dhead[out.fdarts[out.outer][0]];

        int nu = out.n();
        out.names.push_back(uname);
        out.rot.push_back({host});
        out.rot[host].insert(out.rot[host].begin() + out.pos_in_rot(host, x) + 1, nu);
        out.finalize();
        out.outer = out.dface[out.dart(outer_mark_u, outer_mark_v)];
    }

    LayerDecomposition after = layer_decomposition(out);
    require(after.r <= base_r, "extend_representative: layer count increased");
    require(is_support(out.underlying(), h).ok, "extend_representative: not a support");
    return out;
}

}  // namespace psk
