#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "psk/util.hpp"

namespace psk {

/// A hypergraph over named vertices. Vertices are dense ints internally;
/// `names` maps them back to the identifiers used in files. After
/// `normalize`, edges are sorted index vectors, mutually distinct, and all
/// of size >= 2. Isolated vertices stay in the universe.
struct Hypergraph {
    std::vector<std::string> names;
    std::vector<VertexSet> edges;

    int n() const { return static_cast<int>(names.size()); }
    int m() const { return static_cast<int>(edges.size()); }

    int index_of(const std::string& name) const {
        for (int i = 0; i < n(); ++i)
            if (names[i] == name) return i;
        return -1;
    }

    /// Incidence set of v as sorted edge indices.
    std::vector<int> incidence(int v) const {
        std::vector<int> r;
        for (int e = 0; e < m(); ++e)
            if (set_contains(edges[e], v)) r.push_back(e);
        return r;
    }
};

/// Raw input before normalization: arbitrary edge lists, possibly with
/// duplicates, singletons and empties.
struct RawHypergraph {
    std::vector<std::string> names;
    std::vector<VertexSet> edges;
};

/// Drops empty and singleton hyperedges and duplicate edges. The vertex
/// universe is unchanged. Idempotent.
inline Hypergraph normalize(const RawHypergraph& raw) {
    Hypergraph h;
    h.names = raw.names;
    std::vector<VertexSet> cleaned;
    for (VertexSet e : raw.edges) {
        sort_unique(e);
        if (e.size() < 2) continue;
        cleaned.push_back(std::move(e));
    }
    std::sort(cleaned.begin(), cleaned.end());
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
    h.edges = std::move(cleaned);
    return h;
}

inline Hypergraph normalize(const Hypergraph& g) {
    RawHypergraph raw{g.names, g.edges};
    return normalize(raw);
}

/// Partition of the vertex set into twin classes (equal incidence sets).
/// Classes are ordered by first-occurrence vertex.
struct TwinPartition {
    std::vector<VertexSet> classes;
    std::vector<int> class_of;  // vertex -> class index
};

inline TwinPartition twin_classes(const Hypergraph& h) {
    TwinPartition p;
    p.class_of.assign(h.n(), -1);
    std::map<std::vector<int>, int> seen;  // incidence fingerprint -> class
    for (int v = 0; v < h.n(); ++v) {
        auto fp = h.incidence(v);
        auto it = seen.find(fp);
        if (it == seen.end()) {
            it = seen.emplace(std::move(fp), static_cast<int>(p.classes.size())).first;
            p.classes.emplace_back();
        }
        p.class_of[v] = it->second;
        p.classes[it->second].push_back(v);
    }
    return p;
}

/// True iff E(u) is a subset of E(v), i.e. v covers u.
inline bool covers(const Hypergraph& h, int v, int u) {
    require(v >= 0 && v < h.n() && u >= 0 && u < h.n(), "covers: unknown vertex");
    for (int e = 0; e < h.m(); ++e)
        if (set_contains(h.edges[e], u) && !set_contains(h.edges[e], v)) return false;
    return true;
}

inline bool covers(const Hypergraph& h, const std::string& v, const std::string& u) {
    int vi = h.index_of(v), ui = h.index_of(u);
    require(vi >= 0 && ui >= 0, "covers: unknown vertex name");
    return covers(h, vi, ui);
}

/// H - S: removes the vertices, truncates edges, and renormalizes.
/// Vertex ids are re-densified; names identify vertices across the operation.
inline Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& s) {
    for (int v : s) require(v >= 0 && v < h.n(), "remove_vertices: unknown vertex");
    RawHypergraph raw;
    std::vector<int> remap(h.n(), -1);
    for (int v = 0; v < h.n(); ++v) {
        if (set_contains(s, v)) continue;
        remap[v] = static_cast<int>(raw.names.size());
        raw.names.push_back(h.names[v]);
    }
    for (const auto& e : h.edges) {
        VertexSet ne;
        for (int v : e)
            if (remap[v] >= 0) ne.push_back(remap[v]);
        raw.edges.push_back(std::move(ne));
    }
    return normalize(raw);
}

inline Hypergraph remove_vertex_by_name(const Hypergraph& h, const std::string& name) {
    int v = h.index_of(name);
    require(v >= 0, "remove_vertex_by_name: unknown vertex " + name);
    return remove_vertices(h, {v});
}

// --- .hg text format --------------------------------------------------------
//
//   # comment
//   vertices: a b c d        (optional; declares universe incl. isolated)
//   a b c                    (one hyperedge per nonempty line)

struct HgParseResult {
    Hypergraph hypergraph;
    std::vector<std::string> diagnostics;  // dropped lines etc.
};

inline HgParseResult parse_hg(const std::string& text) {
    RawHypergraph raw;
    std::map<std::string, int> idx;
    auto intern = [&](const std::string& name) {
        auto it = idx.find(name);
        if (it != idx.end()) return it->second;
        int id = static_cast<int>(raw.names.size());
        raw.names.push_back(name);
        idx.emplace(name, id);
        return id;
    };
    HgParseResult res;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "vertices:") {
            for (std::size_t i = 1; i < toks.size(); ++i) intern(toks[i]);
            continue;
        }
        VertexSet e;
        for (const auto& t : toks) e.push_back(intern(t));
        sort_unique(e);
        if (e.size() < 2)
            res.diagnostics.push_back("line " + std::to_string(lineno) +
                                      ": dropped hyperedge of size " + std::to_string(e.size()));
        raw.edges.push_back(std::move(e));
    }
    int raw_m = static_cast<int>(raw.edges.size());
    res.hypergraph = normalize(raw);
    int dropped_dupes = raw_m - res.hypergraph.m() -
                        static_cast<int>(res.diagnostics.size());
    if (dropped_dupes > 0)
        res.diagnostics.push_back("dropped " + std::to_string(dropped_dupes) +
                                  " duplicate hyperedge(s)");
    return res;
}

inline std::string serialize_hg(const Hypergraph& h) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& nm : h.names) out << ' ' << nm;
    out << '\n';
    for (const auto& e : h.edges) {
        bool first = true;
        for (int v : e) {
            if (!first) out << ' ';
            out << h.names[v];
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace psk
