#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "psk/plane_graph.hpp"

namespace psk {

enum class SepShape { Path, Cycle };

/// One (A_i, S_i, B_i) element. S holds the indexed non-anchor vertices
/// v_{i,1}..v_{i,p'} in order; cycle separators carry their anchors
/// explicitly (vstar == vdagger for the one-anchor case). By the indexing
/// convention, vstar is v_{i,p} and vdagger (when distinct) v_{i,p-1}.
struct SeparatorTriple {
    VertexSet A, B;
    std::vector<int> S;
    SepShape shape = SepShape::Path;
    int vstar = -1, vdagger = -1;

    VertexSet sep_set() const {
        VertexSet s(S.begin(), S.end());
        if (shape == SepShape::Cycle) {
            s.push_back(vstar);
            if (vdagger != vstar) s.push_back(vdagger);
        }
        sort_unique(s);
        return s;
    }

    int width() const { return static_cast<int>(sep_set().size()); }
    int pprime() const { return static_cast<int>(S.size()); }

    /// v_{i,k} for k in 1..width(), anchors included per the convention.
    int indexed(int k) const {
        int p = width();
        if (k <= pprime()) return S[k - 1];
        if (shape == SepShape::Cycle) {
            if (k == p) return vstar;
            if (k == p - 1 && vdagger != vstar) return vdagger;
        }
        return -1;
    }
};

struct WfsSequence {
    std::vector<SeparatorTriple> triples;

    int length() const { return static_cast<int>(triples.size()); }
    int width() const { return triples.empty() ? 0 : triples.front().width(); }
};

// --- validation (Def. 3.1 properties i..viii) ---------------------------------

struct WfsViolation {
    std::string property;  // "i".."viii"
    std::string detail;
};

struct WfsReport {
    std::vector<WfsViolation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::string vname(const PlaneGraph& g, int v) {
    return v >= 0 && v < g.n() ? g.names[v] : "?";
}

}  // namespace detail

inline WfsReport validate_wfss(const PlaneGraph& g, const WfsSequence& seq) {
    WfsReport rep;
    auto flag = [&](const std::string& prop, const std::string& detail) {
        rep.violations.push_back({prop, detail});
    };
    if (seq.triples.empty()) return rep;
    LayerDecomposition ld = layer_decomposition(g);
    VertexSet all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;

    int p = seq.triples.front().width();
    for (std::size_t i = 0; i < seq.triples.size(); ++i) {
        const auto& t = seq.triples[i];
        std::string at = "triple " + std::to_string(i + 1);
        if (set_union(t.A, t.B) != all) flag("i", at + ": A union B misses vertices");
        VertexSet sep = t.sep_set();
        for (int v : set_difference(t.A, t.B))
            for (int u : g.rot[v])
                if (!set_contains(t.A, u))
                    flag("ii", at + ": edge " + detail::vname(g, v) + "-" +
                                   detail::vname(g, u) + " crosses the separation");
        if (set_intersect(t.A, t.B) != sep)
            flag("iii", at + ": S differs from A intersect B");
        if (t.width() != p)
            flag("iii", at + ": width " + std::to_string(t.width()) +
                            " differs from " + std::to_string(p));
    }
    for (std::size_t i = 0; i + 1 < seq.triples.size(); ++i) {
        const auto& a = seq.triples[i];
        const auto& b = seq.triples[i + 1];
        std::string at = "triples " + std::to_string(i + 1) + "," + std::to_string(i + 2);
        if (!(set_subset(a.A, b.A) && a.A != b.A))
            flag("iv", at + ": A does not strictly grow");
        if (!(set_subset(b.B, a.B) && a.B != b.B))
            flag("iv", at + ": B does not strictly shrink");
    }
    // (v) uniform shape
    bool any_path = false, any_cycle = false;
    for (const auto& t : seq.triples)
        (t.shape == SepShape::Path ? any_path : any_cycle) = true;
    if (any_path && any_cycle) flag("v", "mixed path and cycle separators");

    auto edge = [&](int u, int v) { return u >= 0 && v >= 0 && g.has_edge(u, v); };
    for (std::size_t i = 0; i < seq.triples.size(); ++i) {
        const auto& t = seq.triples[i];
        std::string at = "triple " + std::to_string(i + 1);
        VertexSet sep = t.sep_set();
        if (t.shape == SepShape::Path) {
            if (t.pprime() != static_cast<int>(sep.size()))
                flag("v", at + ": path separator with anchors");
            bool chain_ok = true;
            for (std::size_t k = 0; k + 1 < t.S.size(); ++k)
                if (!edge(t.S[k], t.S[k + 1])) chain_ok = false;
            if (!chain_ok) flag("v", at + ": S is not a path in the listed order");
            // induced: no chords
            for (std::size_t a = 0; a + 1 < t.S.size(); ++a)
                for (std::size_t b = a + 2; b < t.S.size(); ++b)
                    if (edge(t.S[a], t.S[b])) flag("v", at + ": path separator has a chord");
            if (!t.S.empty()) {
                if (ld.layer[t.S.front()] != 1 || ld.layer[t.S.back()] != 1)
                    flag("v", at + ": path endpoints not on layer 1");
                for (std::size_t k = 1; k + 1 < t.S.size(); ++k)
                    if (ld.layer[t.S[k]] == 1)
                        flag("v", at + ": interior path vertex on layer 1");
            }
        } else {
            if (t.vstar < 0 || t.vdagger < 0) {
                flag("v", at + ": cycle separator without anchors");
                continue;
            }
            // cycle order: vstar, S..., vdagger(, vstar)
            std::vector<int> cyc;
            cyc.push_back(t.vstar);
            cyc.insert(cyc.end(), t.S.begin(), t.S.end());
            if (t.vdagger != t.vstar) cyc.push_back(t.vdagger);
            if (cyc.size() < 3) {
                flag("v", at + ": cycle shorter than a triangle");
                continue;
            }
            bool cyc_ok = true;
            for (std::size_t k = 0; k < cyc.size(); ++k)
                if (!edge(cyc[k], cyc[(k + 1) % cyc.size()])) cyc_ok = false;
            if (!cyc_ok) flag("v", at + ": S is not a cycle in the listed order");
            for (std::size_t a = 0; a < cyc.size(); ++a)
                for (std::size_t b = a + 2; b < cyc.size(); ++b) {
                    if (a == 0 && b + 1 == cyc.size()) continue;
                    if (edge(cyc[a], cyc[b])) flag("v", at + ": cycle separator has a chord");
                }
            int minlayer = ld.layer[sep.front()];
            for (int v : sep) minlayer = std::min(minlayer, ld.layer[v]);
            if (ld.layer[t.vstar] != minlayer || ld.layer[t.vdagger] != minlayer)
                flag("v", at + ": anchors not on the minimum layer of S");
            int pp = t.pprime(), wid = t.width();
            if (!((t.vstar == t.vdagger && pp == wid - 1) ||
                  (t.vstar != t.vdagger && pp == wid - 2)))
                flag("v", at + ": p' inconsistent with the anchors");
        }
    }
    if (any_cycle && !seq.triples.empty()) {
        const auto& first = seq.triples.front();
        for (int v = 0; v < g.n(); ++v)
            if (ld.layer[v] == 1 && !set_contains(first.A, v)) {
                flag("v", "layer 1 not contained in A_1");
                break;
            }
    }
    // (vi) index consistency, anchors included via their conventional indices
    {
        std::map<int, int> index_of_vertex;
        for (std::size_t i = 0; i < seq.triples.size(); ++i) {
            const auto& t = seq.triples[i];
            for (int k = 1; k <= t.width(); ++k) {
                int v = t.indexed(k);
                if (v < 0) continue;
                auto it = index_of_vertex.find(v);
                if (it == index_of_vertex.end())
                    index_of_vertex.emplace(v, k);
                else if (it->second != k)
                    flag("vi", "vertex " + detail::vname(g, v) + " has indices " +
                                   std::to_string(it->second) + " and " + std::to_string(k));
            }
        }
    }
    // (vii) at most two separator vertices per layer
    for (std::size_t i = 0; i < seq.triples.size(); ++i) {
        std::map<int, int> per_layer;
        for (int v : seq.triples[i].sep_set()) ++per_layer[ld.layer[v]];
        for (auto [layer, cnt] : per_layer)
            if (cnt > 2)
                flag("vii", "triple " + std::to_string(i + 1) + ": " + std::to_string(cnt) +
                                " separator vertices on layer " + std::to_string(layer));
    }
    // (viii) layer alignment for k <= p'
    {
        std::map<int, int> layer_of_index;
        for (const auto& t : seq.triples)
            for (int k = 1; k <= t.pprime(); ++k) {
                int v = t.S[k - 1];
                auto it = layer_of_index.find(k);
                if (it == layer_of_index.end())
                    layer_of_index.emplace(k, ld.layer[v]);
                else if (it->second != ld.layer[v])
                    flag("viii", "index " + std::to_string(k) + " appears on layers " +
                                     std::to_string(it->second) + " and " +
                                     std::to_string(ld.layer[v]));
            }
    }
    return rep;
}

// --- potential function --------------------------------------------------------

/// q(B) = |B ∩ L_1| + number of blocks of G[B \ L_1].
inline int potential(const Graph& ug, const LayerDecomposition& ld, const VertexSet& b) {
    VertexSet bl1, brest;
    for (int v : b)
        (ld.layer[v] == 1 ? bl1 : brest).push_back(v);
    return static_cast<int>(bl1.size()) + block_count(ug, brest);
}

inline int potential(const PlaneGraph& g, const VertexSet& b) {
    return potential(g.underlying(), layer_decomposition(g), b);
}

// --- nice separations ----------------------------------------------------------

/// Order-2 or order-3 separation whose separator is an L1-anchored edge or a
/// 3-path (u,v,w) with u,w on L1 and v off it.
struct NiceSeparation {
    VertexSet A, B;
    int order = 2;
    std::array<int, 3> path{-1, -1, -1};  // order 2: {u,w,-1}; order 3: {u,v,w}
    bool triangular = false;
    bool l1_nontrivial = false;

    VertexSet sep() const {
        VertexSet s{path[0], path[1]};
        if (order == 3) s.push_back(path[2]);
        sort_unique(s);
        return s;
    }
};

namespace detail {

/// Splits the inner faces along the barrier walk (an edge or path given by
/// consecutive adjacent vertices with both ends on L1, or a closed cycle when
/// `closed`). Returns the two side vertex sets; each includes the barrier.
struct Sides {
    VertexSet side1, side2;
};

inline Sides split_by_barrier(const PlaneGraph& g, const std::vector<int>& barrier,
                              bool closed) {
    std::set<std::pair<int, int>> bedges;
    auto add_edge_key = [&](int a, int b) { bedges.insert({std::min(a, b), std::max(a, b)}); };
    for (std::size_t i = 0; i + 1 < barrier.size(); ++i) add_edge_key(barrier[i], barrier[i + 1]);
    if (closed) add_edge_key(barrier.back(), barrier.front());
    int d0 = g.dart(barrier[0], barrier[1]);
    int f1 = g.dface[d0], f2 = g.dface[g.dtwin[d0]];
    std::vector<int> label(g.face_count(), -1);
    auto fill = [&](int seed, int lbl) {
        if (seed == g.outer) return;
        std::vector<int> stack{seed};
        label[seed] = lbl;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int d : g.fdarts[f]) {
                int a = g.dtail[d], b = g.dhead[d];
                if (bedges.count({std::min(a, b), std::max(a, b)})) continue;
                int nf = g.dface[g.dtwin[d]];
                if (nf == g.outer || label[nf] >= 0) continue;
                label[nf] = lbl;
                stack.push_back(nf);
            }
        }
    };
    fill(f1, 0);
    if (label[f2] < 0) fill(f2, 1);
    Sides s;
    std::array<VertexSet*, 2> out{&s.side1, &s.side2};
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer || label[f] < 0) continue;
        for (int v : g.face_vertices(f)) out[label[f]]->push_back(v);
    }
    for (int v : barrier) {
        s.side1.push_back(v);
        s.side2.push_back(v);
    }
    sort_unique(s.side1);
    sort_unique(s.side2);
    return s;
}

inline bool l1_nontrivial_sep(const LayerDecomposition& ld, const VertexSet& a,
                              const VertexSet& b) {
    bool left = false, right = false;
    for (int v : set_difference(a, b))
        if (ld.layer[v] == 1) left = true;
    for (int v : set_difference(b, a))
        if (ld.layer[v] == 1) right = true;
    return left && right;
}

inline NiceSeparation make_nice(const PlaneGraph& g, const LayerDecomposition& ld,
                                VertexSet a, VertexSet b, std::array<int, 3> path, int order) {
    NiceSeparation s;
    s.A = std::move(a);
    s.B = std::move(b);
    s.order = order;
    s.path = path;
    s.triangular = order == 3 && g.has_edge(path[0], path[2]);
    s.l1_nontrivial = l1_nontrivial_sep(ld, s.A, s.B);
    return s;
}

}  // namespace detail

/// The unique base of an L1-nontrivial triangular separation (an order-2
/// separation through the triangle's L1 edge), or the two trivial bases when
/// the separation is L1-trivial. `points_left` reports A ⊆ C.
struct BaseResult {
    bool l1_trivial = false;
    NiceSeparation base;        // the unique base (or the (V, hinge) one if trivial)
    NiceSeparation base_rev;    // only for the trivial case: (hinge, V)
    bool points_left = false;   // meaningful iff !l1_trivial
};

inline BaseResult base_of(const PlaneGraph& g, const LayerDecomposition& ld,
                          const NiceSeparation& sep) {
    require(sep.triangular, "base_of: separation is not triangular");
    int u = sep.path[0], v = sep.path[1], w = sep.path[2];
    BaseResult out;
    VertexSet all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    VertexSet hinge{std::min(u, w), std::max(u, w)};
    if (!sep.l1_nontrivial) {
        out.l1_trivial = true;
        out.base = detail::make_nice(g, ld, all, hinge, {hinge[0], hinge[1], -1}, 2);
        out.base_rev = detail::make_nice(g, ld, hinge, all, {hinge[0], hinge[1], -1}, 2);
        return out;
    }
    detail::Sides sides = detail::split_by_barrier(g, {u, w}, false);
    // C = the hinge side holding A's private L1 vertices, D the one holding
    // B's; the separation points left iff the middle vertex falls into C.
    int a_l1 = -1, b_l1 = -1;
    for (int x : set_difference(sep.A, sep.B))
        if (ld.layer[x] == 1) a_l1 = x;
    for (int x : set_difference(sep.B, sep.A))
        if (ld.layer[x] == 1) b_l1 = x;
    require(a_l1 >= 0 && b_l1 >= 0, "base_of: inconsistent nontriviality");
    bool a_in_1 = set_contains(sides.side1, a_l1);
    require(a_in_1 != set_contains(sides.side1, b_l1), "base_of: hinge does not separate");
    VertexSet c = a_in_1 ? sides.side1 : sides.side2;
    VertexSet d = a_in_1 ? sides.side2 : sides.side1;
    out.points_left = set_contains(c, v);
    out.base = detail::make_nice(g, ld, c, d, {hinge[0], hinge[1], -1}, 2);
    return out;
}

/// One step of the inductive construction: from a nice separation with
/// q(B) >= ell, produce the next one with A ⊆ A', B ⊇ B' and
/// q(B') >= (q(B)-1)/ell. Returns nullopt when no step is possible.
inline std::optional<NiceSeparation> next_nice_separation(const PlaneGraph& g,
                                                          const LayerDecomposition& ld,
                                                          const Graph& ug,
                                                          const NiceSeparation& sep,
                                                          int ell) {
    (void)ell;  // the caller maintains the loop precondition q(B) >= ell
    auto qv = [&](const VertexSet& b) { return potential(ug, ld, b); };

    struct Candidate {
        NiceSeparation s;
        int q;
        std::array<int, 4> tie;
    };
    std::vector<Candidate> cands;
    auto push = [&](NiceSeparation s) {
        if (!(set_subset(sep.A, s.A) && set_subset(s.B, sep.B))) return;
        int q = qv(s.B);
        std::array<int, 4> tie{s.order, s.path[0], s.path[1], s.path[2]};
        cands.push_back({std::move(s), q, tie});
    };

    if (sep.order == 2) {
        int u = sep.path[0], w = sep.path[1];
        VertexSet bpriv = set_difference(sep.B, sep.sep());
        if (bpriv.empty()) return std::nullopt;
        // inner face on the B side of the edge
        int d = g.dart(u, w);
        int fa = g.dface[d], fb = g.dface[g.dtwin[d]];
        int face = -1;
        for (int f : {fa, fb}) {
            if (f == g.outer) continue;
            VertexSet fv = g.face_vertices(f);
            if (set_subset(fv, sep.B)) {
                // prefer the face whose third vertex is outside A
                bool priv = false;
                for (int x : fv)
                    if (!set_contains(sep.A, x)) priv = true;
                if (face < 0 || priv) face = f;
            }
        }
        if (face < 0) return std::nullopt;
        int x = -1;
        for (int y : g.face_vertices(face))
            if (y != u && y != w) x = y;
        require(x >= 0, "next_nice_separation: degenerate face");
        if (ld.layer[x] == 1) {
            for (auto [a, b] : {std::pair{u, x}, std::pair{w, x}}) {
                int other = a == u ? w : u;
                detail::Sides s = detail::split_by_barrier(g, {a, x}, false);
                VertexSet an = set_contains(s.side1, other) ? s.side1 : s.side2;
                VertexSet bn = set_contains(s.side1, other) ? s.side2 : s.side1;
                push(detail::make_nice(g, ld, an, bn,
                                       {std::min(a, x), std::max(a, x), -1}, 2));
            }
        } else {
            VertexSet an = set_union(sep.A, {x});
            push(detail::make_nice(g, ld, an, sep.B, {u, x, w}, 3));
        }
    } else {
        int u = sep.path[0], v = sep.path[1], w = sep.path[2];
        VertexSet bpriv = set_difference(sep.B, sep.A);
        VertexSet vnb;  // neighbors of the middle vertex on the B-private side
        for (int y : g.rot[v])
            if (set_contains(bpriv, y)) vnb.push_back(y);
        sort_unique(vnb);
        VertexSet vnb_l1, vnb_rest;
        for (int y : vnb)
            (ld.layer[y] == 1 ? vnb_l1 : vnb_rest).push_back(y);

        if (vnb.empty()) {
            BaseResult base = base_of(g, ld, sep);
            if (base.l1_trivial) {
                push(base.base);  // (V, hinge): the only base with A ⊆ C
            } else {
                const NiceSeparation& c = base.base;
                if (set_subset(sep.A, c.A))
                    push(c);
                else
                    push(detail::make_nice(g, ld, c.B, c.A, c.path, 2));
            }
        } else if (!vnb_l1.empty()) {
            int x = vnb_l1.front();
            {
                detail::Sides s = detail::split_by_barrier(g, {u, v, x}, false);
                VertexSet an = set_contains(s.side1, w) ? s.side1 : s.side2;
                VertexSet bn = set_contains(s.side1, w) ? s.side2 : s.side1;
                push(detail::make_nice(g, ld, an, bn, {u, v, x}, 3));
            }
            {
                detail::Sides s = detail::split_by_barrier(g, {x, v, w}, false);
                VertexSet an = set_contains(s.side1, u) ? s.side1 : s.side2;
                VertexSet bn = set_contains(s.side1, u) ? s.side2 : s.side1;
                push(detail::make_nice(g, ld, an, bn, {x, v, w}, 3));
            }
        } else if (vnb.size() == 1) {
            int x = vnb.front();
            VertexSet an = set_union(sep.A, {x});
            VertexSet bn = set_difference(sep.B, {v});
            push(detail::make_nice(g, ld, an, bn, {u, x, w}, 3));
        } else {
            // block sweep (gear case)
            VertexSet b_nol1;
            for (int y : sep.B)
                if (ld.layer[y] != 1) b_nol1.push_back(y);
            auto decomp = blocks_of_subset(ug, b_nol1);
            const VertexSet* blk = nullptr;
            for (const auto& cand : decomp.blocks) {
                if (!set_contains(cand, v) || cand.size() < 3) continue;
                int inside = 0;
                for (int y : vnb_rest)
                    if (set_contains(cand, y)) ++inside;
                if (inside >= 2 && (!blk || cand.size() > blk->size())) blk = &cand;
            }
            require(blk != nullptr, "next_nice_separation: gear case without a block");
            Restriction cr = restrict_plane(g, *blk);
            const PlaneGraph& cg = cr.graph;
            require(cg.outer >= 0, "next_nice_separation: block has no outer face");
            const auto& walk = cg.fdarts[cg.outer];
            int m = static_cast<int>(walk.size());
            // apex vertex of each boundary edge, on the outside of the block
            std::vector<int> apex(m, -1);
            for (int i = 0; i < m; ++i) {
                int c1 = cr.orig_of[cg.dtail[walk[i]]], c2 = cr.orig_of[cg.dhead[walk[i]]];
                int dg = g.dart(c1, c2);
                for (int y : g.face_vertices(g.dface[dg]))
                    if (y != c1 && y != c2) apex[i] = y;
            }
            for (int i = 0; i < m; ++i) {
                int j = (i + 1) % m;
                int mid = cr.orig_of[cg.dhead[walk[i]]];
                int e1 = apex[i], e2 = apex[j];
                if (mid == v || e1 < 0 || e2 < 0 || e1 == e2) continue;
                if (e1 == v || e2 == v) continue;
                if (ld.layer[e1] != 1 || ld.layer[e2] != 1) continue;
                detail::Sides s = detail::split_by_barrier(g, {e1, mid, e2}, false);
                VertexSet apriv = set_difference(sep.A, sep.B);
                for (int flip = 0; flip < 2; ++flip) {
                    VertexSet an = flip ? s.side2 : s.side1;
                    VertexSet bn = flip ? s.side1 : s.side2;
                    if (!apriv.empty() && !set_subset(apriv, an)) continue;
                    push(detail::make_nice(g, ld, an, bn, {std::min(e1, e2), mid,
                                                           std::max(e1, e2)}, 3));
                }
            }
        }
    }
    if (cands.empty()) return std::nullopt;
    const Candidate* best = &cands.front();
    for (const auto& c : cands)
        if (c.q > best->q || (c.q == best->q && c.tie < best->tie)) best = &c;
    return best->s;
}

inline std::optional<NiceSeparation> next_nice_separation(const PlaneGraph& g,
                                                          const NiceSeparation& sep, int ell) {
    return next_nice_separation(g, layer_decomposition(g), g.underlying(), sep, ell);
}

// --- classification of the generated separation sequence ------------------------

/// Maximal subsequences of the raw sweep, in order: runs of triangular
/// separations sharing a hinge split by pointing direction, and the rest.
struct SeqClassification {
    enum class Kind { HomogeneousLeft, HomogeneousRight, L1TrivialHinged, NonTriangular };
    struct Run {
        Kind kind;
        int begin, end;               // [begin, end) into the raw sequence
        std::pair<int, int> hinge{-1, -1};
        NiceSeparation base;          // for homogeneous runs
        int size() const { return end - begin; }
    };
    std::vector<Run> runs;
};

inline SeqClassification classify_separations(const PlaneGraph& g,
                                              const LayerDecomposition& ld,
                                              const std::vector<NiceSeparation>& seq) {
    SeqClassification out;
    std::size_t i = 0;
    while (i < seq.size()) {
        if (!seq[i].triangular) {
            std::size_t j = i;
            while (j < seq.size() && !seq[j].triangular) ++j;
            out.runs.push_back({SeqClassification::Kind::NonTriangular,
                                static_cast<int>(i), static_cast<int>(j), {-1, -1}, {}});
            i = j;
            continue;
        }
        auto hinge_of = [&](const NiceSeparation& s) {
            return std::make_pair(std::min(s.path[0], s.path[2]),
                                  std::max(s.path[0], s.path[2]));
        };
        std::pair<int, int> hinge = hinge_of(seq[i]);
        std::size_t j = i;
        while (j < seq.size() && seq[j].triangular && hinge_of(seq[j]) == hinge) ++j;
        // a hinged run is either entirely L1-trivial or splits into
        // homogeneous subruns by pointing direction
        if (!seq[i].l1_nontrivial) {
            out.runs.push_back({SeqClassification::Kind::L1TrivialHinged,
                                static_cast<int>(i), static_cast<int>(j), hinge, {}});
        } else {
            std::size_t k = i;
            while (k < j) {
                BaseResult b0 = base_of(g, ld, seq[k]);
                std::size_t l = k;
                while (l < j) {
                    BaseResult bl = base_of(g, ld, seq[l]);
                    if (bl.points_left != b0.points_left) break;
                    ++l;
                }
                out.runs.push_back({b0.points_left ? SeqClassification::Kind::HomogeneousLeft
                                                   : SeqClassification::Kind::HomogeneousRight,
                                    static_cast<int>(k), static_cast<int>(l), hinge, b0.base});
                k = l;
            }
        }
        i = j;
    }
    return out;
}

// --- assembling triples from separations ----------------------------------------

namespace detail {

/// Orders the endpoint pair {a,b} of a width-2/3 separator so that shared
/// endpoints keep one index across the sequence: index 1 goes to the endpoint
/// at which, walking the outer face in its traced direction, the arc through
/// B\A (fallback: out of A\B) begins.
inline std::pair<int, int> orient_l1_pair(const PlaneGraph& g, int a, int b,
                                          const VertexSet& A, const VertexSet& B) {
    const auto& walk = g.fdarts[g.outer];
    int L = static_cast<int>(walk.size());
    std::vector<int> wv(L);
    for (int i = 0; i < L; ++i) wv[i] = g.dtail[walk[i]];
    int pa = -1, pb = -1;
    for (int i = 0; i < L; ++i) {
        if (wv[i] == a) pa = i;
        if (wv[i] == b) pb = i;
    }
    require(pa >= 0 && pb >= 0, "orient_l1_pair: endpoints not on the outer face");
    auto arc_side = [&](int from, int to) -> int {
        // 1 if the open arc is inside B\A, 0 if inside A\B, -1 if empty/mixed
        bool inA = false, inB = false, nonempty = false;
        for (int i = (from + 1) % L; i != to; i = (i + 1) % L) {
            nonempty = true;
            bool a_side = set_contains(A, wv[i]) && !set_contains(B, wv[i]);
            bool b_side = set_contains(B, wv[i]) && !set_contains(A, wv[i]);
            if (a_side) inA = true;
            if (b_side) inB = true;
        }
        if (!nonempty || (inA && inB)) return -1;
        if (inB) return 1;
        if (inA) return 0;
        return -1;
    };
    int ab = arc_side(pa, pb);  // arc a -> b in walk direction
    int ba = arc_side(pb, pa);
    if (ab == 1) return {a, b};       // B-arc starts at a
    if (ba == 1) return {b, a};
    if (ba == 0) return {a, b};       // A-arc ends at a
    if (ab == 0) return {b, a};
    return {std::min(a, b), std::max(a, b)};
}

/// Chooses per-triple (A,B) orientation so the A-sides strictly grow along
/// the order. Returns false if no orientation works.
inline bool orient_nested(std::vector<SeparatorTriple>& ts,
                          const std::vector<Sides>& sides) {
    for (int first = 0; first < 2; ++first) {
        bool ok = true;
        VertexSet prev;
        std::vector<std::pair<VertexSet, VertexSet>> choice(ts.size());
        for (std::size_t i = 0; i < ts.size() && ok; ++i) {
            const VertexSet& s1 = sides[i].side1;
            const VertexSet& s2 = sides[i].side2;
            VertexSet a, b;
            if (i == 0) {
                bool small_first = (first == 0);
                bool s1_small = s1.size() <= s2.size();
                a = (s1_small == small_first) ? s1 : s2;
                b = (s1_small == small_first) ? s2 : s1;
            } else {
                bool s1_ok = set_subset(prev, s1) && prev != s1;
                bool s2_ok = set_subset(prev, s2) && prev != s2;
                if (s1_ok && s2_ok) {
                    a = s1.size() <= s2.size() ? s1 : s2;
                    b = s1.size() <= s2.size() ? s2 : s1;
                } else if (s1_ok) {
                    a = s1;
                    b = s2;
                } else if (s2_ok) {
                    a = s2;
                    b = s1;
                } else {
                    ok = false;
                    break;
                }
            }
            choice[i] = {a, b};
            prev = a;
        }
        if (!ok) continue;
        for (std::size_t i = 0; i + 1 < ts.size(); ++i)
            if (!(set_subset(choice[i].first, choice[i + 1].first) &&
                  choice[i].first != choice[i + 1].first))
                ok = false;
        if (!ok) continue;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            ts[i].A = choice[i].first;
            ts[i].B = choice[i].second;
        }
        return true;
    }
    return false;
}

}  // namespace detail

// --- Construction of small separator sequences (width 2 or 3) -------------------

struct SmallSepResult {
    WfsSequence sequence;
    std::vector<NiceSeparation> raw;  // the sweep before extraction
    SeqClassification classification;
    int extraction_case = 0;  // 1..4 per the construction
    int ell = 2;
    int qv = 0;  // q(V)
};

namespace detail {

inline SeparatorTriple path_triple(const PlaneGraph& g, const LayerDecomposition& ld,
                                   const NiceSeparation& s) {
    SeparatorTriple t;
    t.A = s.A;
    t.B = s.B;
    t.shape = SepShape::Path;
    if (s.order == 2) {
        auto [x, y] = orient_l1_pair(g, s.path[0], s.path[1], s.A, s.B);
        t.S = {x, y};
    } else {
        auto [x, y] = orient_l1_pair(g, s.path[0], s.path[2], s.A, s.B);
        t.S = {x, s.path[1], y};
    }
    (void)ld;
    return t;
}

/// Hinged triangular separation as a cycle triple with the hinge as anchors.
inline SeparatorTriple hinge_cycle_triple(const NiceSeparation& s, const VertexSet& a,
                                          const VertexSet& b) {
    SeparatorTriple t;
    t.A = a;
    t.B = b;
    t.shape = SepShape::Cycle;
    t.S = {s.path[1]};
    t.vstar = std::min(s.path[0], s.path[2]);
    t.vdagger = std::max(s.path[0], s.path[2]);
    return t;
}

}  // namespace detail

/// Construction of a width-2/3 well-formed separator sequence by the
/// iterated next_nice_separation sweep followed by one of four extraction
/// cases: a long homogeneous run (nested cycles through the common base), a
/// long L1-trivial hinged run, the deduplicated bases of many homogeneous
/// runs, or the non-triangular order-2/order-3 remainder.
inline SmallSepResult build_small_sepseq(const PlaneGraph& g) {
    require(is_triangulated_disk(g), "build_small_sepseq: not a triangulated disk");
    SmallSepResult out;
    LayerDecomposition ld = layer_decomposition(g);
    Graph ug = g.underlying();

    VertexSet nol1;
    for (int v = 0; v < g.n(); ++v)
        if (ld.layer[v] != 1) nol1.push_back(v);
    int ell = 2;
    for (const auto& blk : blocks_of_subset(ug, nol1).blocks)
        ell = std::max(ell, static_cast<int>(blk.size()));
    out.ell = ell;

    VertexSet all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    out.qv = potential(ug, ld, all);

    // initial separation: lexicographically first outer-face edge
    int bu = -1, bw = -1;
    for (int d : g.fdarts[g.outer]) {
        int x = std::min(g.dtail[d], g.dhead[d]), y = std::max(g.dtail[d], g.dhead[d]);
        if (bu < 0 || std::make_pair(x, y) < std::make_pair(bu, bw)) {
            bu = x;
            bw = y;
        }
    }
    NiceSeparation cur = detail::make_nice(g, ld, {bu, bw}, all, {bu, bw, -1}, 2);
    std::vector<NiceSeparation> raw{cur};
    int guard = 6 * g.n() + 12;
    while (potential(ug, ld, cur.B) >= ell) {
        auto next = next_nice_separation(g, ld, ug, cur, ell);
        if (!next) break;
        cur = *next;
        raw.push_back(cur);
        require(--guard > 0, "build_small_sepseq: sweep does not terminate");
    }
    out.raw = raw;
    out.classification = classify_separations(g, ld, raw);
    const auto& runs = out.classification.runs;

    double t_target = std::sqrt((std::log2(static_cast<double>(out.qv)) /
                                     std::log2(static_cast<double>(ell)) +
                                 1.0) /
                                2.0) -
                      1.0;

    using Kind = SeqClassification::Kind;
    auto is_homog = [](Kind k) {
        return k == Kind::HomogeneousLeft || k == Kind::HomogeneousRight;
    };

    // candidate 1: longest homogeneous run
    const SeqClassification::Run* best_homog = nullptr;
    for (const auto& r : runs)
        if (is_homog(r.kind) && (!best_homog || r.size() > best_homog->size()))
            best_homog = &r;
    // candidate 2: longest L1-trivial hinged run
    const SeqClassification::Run* best_trivial = nullptr;
    for (const auto& r : runs)
        if (r.kind == Kind::L1TrivialHinged && (!best_trivial || r.size() > best_trivial->size()))
            best_trivial = &r;
    int homog_run_count = 0;
    for (const auto& r : runs)
        if (is_homog(r.kind)) ++homog_run_count;

    auto build_case1 = [&](const SeqClassification::Run& run) {
        WfsSequence seq;
        const NiceSeparation& base = run.base;
        VertexSet c = base.A, d = base.B;
        bool left = run.kind == Kind::HomogeneousLeft;
        VertexSet dc = set_difference(d, c), cd = set_difference(c, d);
        for (int i = run.begin; i < run.end; ++i) {
            const NiceSeparation& s = raw[i];
            SeparatorTriple t =
                left ? detail::hinge_cycle_triple(s, set_union(s.A, dc),
                                                  set_difference(s.B, dc))
                     : detail::hinge_cycle_triple(s, set_union(s.B, cd),
                                                  set_difference(s.A, cd));
            seq.triples.push_back(std::move(t));
        }
        if (!left) std::reverse(seq.triples.begin(), seq.triples.end());
        return seq;
    };
    auto build_case2 = [&](const SeqClassification::Run& run) {
        WfsSequence seq;
        const NiceSeparation& first = raw[run.begin];
        bool l1_in_a = true;
        for (int v = 0; v < g.n(); ++v)
            if (ld.layer[v] == 1 && !set_contains(first.A, v)) l1_in_a = false;
        for (int i = run.begin; i < run.end; ++i) {
            const NiceSeparation& s = raw[i];
            seq.triples.push_back(l1_in_a ? detail::hinge_cycle_triple(s, s.A, s.B)
                                          : detail::hinge_cycle_triple(s, s.B, s.A));
        }
        if (!l1_in_a) std::reverse(seq.triples.begin(), seq.triples.end());
        return seq;
    };
    auto build_case3 = [&]() {
        WfsSequence seq;
        std::set<std::pair<int, int>> seen;  // dedup bases by their edge
        for (const auto& r : runs) {
            if (!is_homog(r.kind)) continue;
            if (!seen.insert(r.hinge).second) continue;
            seq.triples.push_back(detail::path_triple(g, ld, r.base));
        }
        return seq;
    };
    auto build_case4 = [&]() {
        std::vector<const NiceSeparation*> two, three;
        for (const auto& s : raw) {
            if (s.triangular) continue;
            (s.order == 2 ? two : three).push_back(&s);
        }
        const auto& pick = two.size() >= three.size() ? two : three;
        WfsSequence seq;
        for (const NiceSeparation* s : pick)
            seq.triples.push_back(detail::path_triple(g, ld, *s));
        return seq;
    };

    double th = std::max(t_target, 1.0);
    if (best_homog && best_homog->size() >= th) {
        out.extraction_case = 1;
        out.sequence = build_case1(*best_homog);
    } else if (best_trivial && best_trivial->size() >= th) {
        out.extraction_case = 2;
        out.sequence = build_case2(*best_trivial);
    } else if (homog_run_count >= std::max(2.0 * t_target, 1.0)) {
        out.extraction_case = 3;
        out.sequence = build_case3();
    } else {
        out.extraction_case = 4;
        out.sequence = build_case4();
        if (out.sequence.triples.empty()) {
            // tiny graphs: fall back to the longest nonempty candidate
            WfsSequence alt;
            if (best_homog) alt = build_case1(*best_homog);
            if (best_trivial && build_case2(*best_trivial).length() > alt.length())
                alt = build_case2(*best_trivial);
            if (build_case3().length() > alt.length()) alt = build_case3();
            out.sequence = alt;
        }
    }
    return out;
}

// --- Construction 5.1: extending a block sequence --------------------------------

namespace detail {

/// v in L1 closing P into an induced cycle.
inline bool is_cycle_vertex(const PlaneGraph& g, const std::vector<int>& p, int v) {
    if (!g.has_edge(v, p.front()) || !g.has_edge(v, p.back())) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (g.has_edge(v, p[i])) return false;
    return true;
}

/// Adjacent pair {x,y} in L1 closing P into an induced cycle, with x attached
/// to the front of P and y to the back.
inline bool is_cycle_pair(const PlaneGraph& g, const std::vector<int>& p, int x, int y) {
    if (!g.has_edge(x, y)) return false;
    if (!g.has_edge(x, p.front()) || !g.has_edge(y, p.back())) return false;
    if (g.has_edge(x, p.back()) || g.has_edge(y, p.front())) return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (g.has_edge(x, p[i]) || g.has_edge(y, p[i])) return false;
    return true;
}

}  // namespace detail

struct ExtendResult {
    WfsSequence sequence;
    int case_used = 0;  // 1 = cycles pass through, 21/22/23 = Case 2a/2b/2c
};

/// Lifts a well-formed separator sequence of a block C of G-L1 (given with
/// vertex ids of G) to one for G, per the four cases of the construction.
inline ExtendResult extend_block_sequence(const PlaneGraph& g, const WfsSequence& inner) {
    require(is_triangulated_disk(g), "extend_block_sequence: not a triangulated disk");
    ExtendResult out;
    if (inner.triples.empty()) return out;
    LayerDecomposition ld = layer_decomposition(g);
    require(ld.r > 1, "extend_block_sequence: graph is outerplanar");
    VertexSet l1 = ld.layers[0];

    if (inner.triples.front().shape == SepShape::Cycle) {
        out.case_used = 1;
        std::vector<SeparatorTriple> ts;
        std::vector<detail::Sides> sides;
        for (const auto& it : inner.triples) {
            std::vector<int> cyc;
            cyc.push_back(it.vstar);
            cyc.insert(cyc.end(), it.S.begin(), it.S.end());
            if (it.vdagger != it.vstar) cyc.push_back(it.vdagger);
            detail::Sides s = detail::split_by_barrier(g, cyc, true);
            SeparatorTriple t = it;  // keep S order and anchors
            // A-side: the region containing layer 1
            VertexSet sep = t.sep_set();
            int l1probe = -1;
            for (int v : l1)
                if (!set_contains(sep, v)) l1probe = v;
            require(l1probe >= 0, "extend_block_sequence: no free layer-1 vertex");
            if (set_contains(s.side1, l1probe)) {
                t.A = s.side1;
                t.B = s.side2;
            } else {
                t.A = s.side2;
                t.B = s.side1;
            }
            ts.push_back(std::move(t));
        }
        if (ts.size() >= 2 && !(set_subset(ts[0].A, ts[1].A) && ts[0].A != ts[1].A))
            std::reverse(ts.begin(), ts.end());
        out.sequence.triples = std::move(ts);
        return out;
    }

    // inner paths: bucket by cycle-vertices / cycle-pairs / neither
    struct PathInfo {
        const SeparatorTriple* t;
        VertexSet cycle_vertices;
        std::vector<std::pair<int, int>> cycle_pairs;  // (front-attach, back-attach)
    };
    std::vector<PathInfo> s1, s2, s3;
    for (const auto& it : inner.triples) {
        PathInfo info{&it, {}, {}};
        for (int v : l1)
            if (detail::is_cycle_vertex(g, it.S, v)) info.cycle_vertices.push_back(v);
        if (info.cycle_vertices.empty())
            for (int x : l1)
                for (int y : g.rot[x]) {
                    if (ld.layer[y] != 1) continue;
                    if (detail::is_cycle_pair(g, it.S, x, y))
                        info.cycle_pairs.emplace_back(x, y);
                }
        if (!info.cycle_vertices.empty())
            s1.push_back(std::move(info));
        else if (!info.cycle_pairs.empty())
            s2.push_back(std::move(info));
        else
            s3.push_back(std::move(info));
    }

    auto finish_nested = [&](std::vector<SeparatorTriple> ts, std::vector<detail::Sides> sides,
                             int case_id) {
        require(detail::orient_nested(ts, sides), "extend_block_sequence: sides do not nest");
        out.sequence.triples = std::move(ts);
        out.case_used = case_id;
    };

    if (s1.size() >= s2.size() && s1.size() >= s3.size()) {
        // Case 2a: one cycle-vertex serves at least half of the bucket
        std::map<int, int> freq;
        for (const auto& info : s1)
            for (int v : info.cycle_vertices) ++freq[v];
        int vstar = -1, vstar_count = -1;
        for (auto [v, c] : freq)
            if (c > vstar_count) {
                vstar = v;
                vstar_count = c;
            }
        std::vector<SeparatorTriple> ts;
        std::vector<detail::Sides> sides;
        for (const auto& info : s1) {
            if (!set_contains(info.cycle_vertices, vstar)) continue;
            SeparatorTriple t = *info.t;
            t.shape = SepShape::Cycle;
            t.vstar = t.vdagger = vstar;
            std::vector<int> cyc{vstar};
            cyc.insert(cyc.end(), t.S.begin(), t.S.end());
            sides.push_back(detail::split_by_barrier(g, cyc, true));
            ts.push_back(std::move(t));
        }
        // A must contain L1: force per-triple orientation, then order
        for (std::size_t i = 0; i < ts.size(); ++i) {
            int probe = -1;
            VertexSet sep = ts[i].sep_set();
            for (int v : l1)
                if (!set_contains(sep, v)) probe = v;
            if (!set_contains(sides[i].side1, probe)) std::swap(sides[i].side1, sides[i].side2);
            ts[i].A = sides[i].side1;
            ts[i].B = sides[i].side2;
        }
        if (ts.size() >= 2 && !(set_subset(ts[0].A, ts[1].A) && ts[0].A != ts[1].A))
            std::reverse(ts.begin(), ts.end());
        out.sequence.triples = std::move(ts);
        out.case_used = 21;
        return out;
    }
    if (s2.size() >= s1.size() && s2.size() >= s3.size()) {
        // Case 2b: one cycle-pair serves at least half of the bucket
        std::map<std::pair<int, int>, int> freq;
        for (const auto& info : s2)
            for (auto pr : info.cycle_pairs)
                ++freq[{std::min(pr.first, pr.second), std::max(pr.first, pr.second)}];
        std::pair<int, int> bestp{-1, -1};
        int bestc = -1;
        for (auto& [pr, c] : freq)
            if (c > bestc) {
                bestc = c;
                bestp = pr;
            }
        std::vector<SeparatorTriple> ts;
        std::vector<detail::Sides> sides;
        for (const auto& info : s2) {
            const SeparatorTriple& it = *info.t;
            int xfront = -1, yback = -1;
            for (auto pr : info.cycle_pairs) {
                auto norm = std::make_pair(std::min(pr.first, pr.second),
                                           std::max(pr.first, pr.second));
                if (norm == bestp) {
                    xfront = pr.first;
                    yback = pr.second;
                    break;
                }
            }
            if (xfront < 0) continue;
            SeparatorTriple t = it;
            t.shape = SepShape::Cycle;
            t.vstar = xfront;   // listed cycle is (vstar, S..., vdagger)
            t.vdagger = yback;
            std::vector<int> cyc{xfront};
            cyc.insert(cyc.end(), t.S.begin(), t.S.end());
            cyc.push_back(yback);
            sides.push_back(detail::split_by_barrier(g, cyc, true));
            ts.push_back(std::move(t));
        }
        for (std::size_t i = 0; i < ts.size(); ++i) {
            int probe = -1;
            VertexSet sep = ts[i].sep_set();
            for (int v : l1)
                if (!set_contains(sep, v)) probe = v;
            if (!set_contains(sides[i].side1, probe)) std::swap(sides[i].side1, sides[i].side2);
            ts[i].A = sides[i].side1;
            ts[i].B = sides[i].side2;
        }
        if (ts.size() >= 2 && !(set_subset(ts[0].A, ts[1].A) && ts[0].A != ts[1].A))
            std::reverse(ts.begin(), ts.end());
        out.sequence.triples = std::move(ts);
        out.case_used = 22;
        return out;
    }
    // Case 2c: extend each path by one fixed L1 neighbor per endpoint
    std::map<int, int> fixed;  // C-boundary vertex -> its L1 neighbor
    VertexSet used_front, used_back;
    std::vector<SeparatorTriple> ts;
    std::vector<detail::Sides> sides;
    for (const auto& info : s3) {
        const SeparatorTriple& it = *info.t;
        auto pick = [&](int endpoint, const VertexSet& avoid) -> int {
            auto f = fixed.find(endpoint);
            if (f != fixed.end()) return f->second;
            int best = -1;
            for (int y : g.rot[endpoint]) {
                if (ld.layer[y] != 1 || set_contains(avoid, y)) continue;
                if (best < 0 || y < best) best = y;
            }
            if (best >= 0) fixed.emplace(endpoint, best);
            return best;
        };
        int vfront = pick(it.S.front(), used_back);
        int vback = pick(it.S.back(), used_front);
        if (vfront < 0 || vback < 0 || vfront == vback) continue;
        used_front.push_back(vfront);
        sort_unique(used_front);
        used_back.push_back(vback);
        sort_unique(used_back);
        SeparatorTriple t;
        t.shape = SepShape::Path;
        t.S.push_back(vfront);
        t.S.insert(t.S.end(), it.S.begin(), it.S.end());
        t.S.push_back(vback);
        sides.push_back(detail::split_by_barrier(g, t.S, false));
        ts.push_back(std::move(t));
    }
    finish_nested(std::move(ts), std::move(sides), 23);
    return out;
}

// --- Theorem builder --------------------------------------------------------------

struct WfssBuildResult {
    WfsSequence sequence;
    int recursion_depth = 0;
    bool used_block_recursion = false;
};

/// Builds a well-formed separator sequence for an r-outerplanar triangulated
/// disk: recurse on a large block of G-L1 and lift the result, else run the
/// small-separator construction directly. `block_threshold` overrides the
/// default 2^((log2 n)^{(r-1)/r}).
inline WfssBuildResult build_wfss(const PlaneGraph& g,
                                  std::optional<long long> block_threshold = std::nullopt) {
    require(is_triangulated_disk(g), "build_wfss: not a triangulated disk");
    LayerDecomposition ld = layer_decomposition(g);
    WfssBuildResult out;
    if (ld.r == 1) {
        out.sequence = build_small_sepseq(g).sequence;
        return out;
    }
    Graph ug = g.underlying();
    VertexSet nol1;
    for (int v = 0; v < g.n(); ++v)
        if (ld.layer[v] != 1) nol1.push_back(v);
    auto decomp = blocks_of_subset(ug, nol1);
    const VertexSet* biggest = nullptr;
    for (const auto& blk : decomp.blocks)
        if (!biggest || blk.size() > biggest->size() ||
            (blk.size() == biggest->size() && blk < *biggest))
            biggest = &blk;
    double s_threshold;
    if (block_threshold)
        s_threshold = static_cast<double>(*block_threshold);
    else {
        double r = ld.r;
        s_threshold = std::pow(2.0, std::pow(std::log2(static_cast<double>(g.n())),
                                             (r - 1.0) / r));
    }
    if (biggest && biggest->size() >= 3 &&
        static_cast<double>(biggest->size()) >= s_threshold) {
        Restriction cr = restrict_plane(g, *biggest);
        if (is_triangulated_disk(cr.graph)) {
            WfssBuildResult inner = build_wfss(cr.graph, block_threshold);
            // map ids back to G
            WfsSequence mapped = inner.sequence;
            for (auto& t : mapped.triples) {
                for (auto& v : t.A) v = cr.orig_of[v];
                sort_unique(t.A);
                for (auto& v : t.B) v = cr.orig_of[v];
                sort_unique(t.B);
                for (auto& v : t.S) v = cr.orig_of[v];
                if (t.vstar >= 0) t.vstar = cr.orig_of[t.vstar];
                if (t.vdagger >= 0) t.vdagger = cr.orig_of[t.vdagger];
            }
            ExtendResult ext = extend_block_sequence(g, mapped);
            out.sequence = ext.sequence;
            out.recursion_depth = inner.recursion_depth + 1;
            out.used_block_recursion = true;
            if (out.sequence.length() > 0) return out;
        }
    }
    out.sequence = build_small_sepseq(g).sequence;
    return out;
}

}  // namespace psk

