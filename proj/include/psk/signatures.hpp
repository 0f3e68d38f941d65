#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "psk/gluing.hpp"
#include "psk/support.hpp"

namespace psk {

/// The signature (Gamma_i, phi_i, Pi_i) of a separator over a representative
/// support: twin classes absorbed by A_i, twin classes of the indexed
/// separator vertices (anchors included via the v* = v_{i,p} convention), and
/// the hyperedge pairs connected through B_i.
struct SeparatorSignature {
    std::vector<int> gamma;                  // sorted twin-class ids of A_i
    std::vector<int> phi;                    // phi[k-1] = class of v_{i,k}, k = 1..p
    std::vector<std::array<int, 3>> pi;      // (hyperedge, j, l) with j < l, sorted

    bool operator==(const SeparatorSignature& o) const {
        return gamma == o.gamma && phi == o.phi && pi == o.pi;
    }
    bool operator!=(const SeparatorSignature& o) const { return !(*this == o); }
};

/// Canonical twin-class ids: classes ranked by their sorted incidence
/// fingerprints, so ids are stable under vertex reordering.
struct CanonicalTwins {
    TwinPartition partition;
    std::vector<int> canon_of_class;  // partition class index -> canonical id
    int of_vertex(int v) const { return canon_of_class[partition.class_of[v]]; }
};

inline CanonicalTwins canonical_twins(const Hypergraph& h) {
    CanonicalTwins ct;
    ct.partition = twin_classes(h);
    std::vector<std::pair<std::vector<int>, int>> fps;
    for (std::size_t c = 0; c < ct.partition.classes.size(); ++c)
        fps.emplace_back(h.incidence(ct.partition.classes[c].front()), static_cast<int>(c));
    std::sort(fps.begin(), fps.end());
    ct.canon_of_class.assign(fps.size(), 0);
    for (std::size_t rank = 0; rank < fps.size(); ++rank)
        ct.canon_of_class[fps[rank].second] = static_cast<int>(rank);
    return ct;
}

namespace detail {

inline SeparatorSignature signature_impl(const Graph& ug, const Hypergraph& h,
                                         const CanonicalTwins& ct,
                                         const std::vector<int>& h_of_g,
                                         const SeparatorTriple& t) {
    SeparatorSignature sig;
    for (int v : t.A) sig.gamma.push_back(ct.of_vertex(h_of_g[v]));
    sort_unique(sig.gamma);
    int p = t.width();
    for (int k = 1; k <= p; ++k) sig.phi.push_back(ct.of_vertex(h_of_g[t.indexed(k)]));
    for (int e = 0; e < h.m(); ++e) {
        // members of the hyperedge present in G, restricted to B_i
        VertexSet be;
        std::vector<int> sep_members;  // indices k with v_{i,k} in e
        for (int k = 1; k <= p; ++k)
            if (set_contains(h.edges[e], h_of_g[t.indexed(k)])) sep_members.push_back(k);
        if (sep_members.size() < 2) continue;
        for (int v : t.B)
            if (set_contains(h.edges[e], h_of_g[v])) be.push_back(v);
        auto comps = induced_components(ug, be);
        auto comp_of = [&](int v) -> int {
            for (std::size_t c = 0; c < comps.size(); ++c)
                if (set_contains(comps[c], v)) return static_cast<int>(c);
            return -1;
        };
        for (std::size_t a = 0; a < sep_members.size(); ++a)
            for (std::size_t b = a + 1; b < sep_members.size(); ++b) {
                int j = sep_members[a], l = sep_members[b];
                if (comp_of(t.indexed(j)) == comp_of(t.indexed(l)))
                    sig.pi.push_back({e, j, l});
            }
    }
    std::sort(sig.pi.begin(), sig.pi.end());
    return sig;
}

inline std::vector<int> g_to_h_map(const Graph& ug, const Hypergraph& h) {
    std::map<std::string, int> hid;
    for (int v = 0; v < h.n(); ++v) hid[h.names[v]] = v;
    std::vector<int> h_of_g(ug.n(), -1);
    for (int v = 0; v < ug.n(); ++v) {
        auto it = hid.find(ug.names[v]);
        require(it != hid.end(), "signature: graph vertex " + ug.names[v] +
                                     " is not a hypergraph vertex");
        h_of_g[v] = it->second;
    }
    return h_of_g;
}

}  // namespace detail

/// Signatures of every separator of the sequence. G must be a representative
/// support for H (checked once).
inline std::vector<SeparatorSignature> signatures_of(const PlaneGraph& g, const Hypergraph& h,
                                                     const WfsSequence& seq) {
    Graph ug = g.underlying();
    require(is_representative_support(ug, h),
            "signature: G is not a representative support for H");
    CanonicalTwins ct = canonical_twins(h);
    std::vector<int> h_of_g = detail::g_to_h_map(ug, h);
    std::vector<SeparatorSignature> out;
    for (const auto& t : seq.triples)
        out.push_back(detail::signature_impl(ug, h, ct, h_of_g, t));
    return out;
}

inline SeparatorSignature signature(const PlaneGraph& g, const Hypergraph& h,
                                    const WfsSequence& seq, int i) {
    require(i >= 0 && i < seq.length(), "signature: index out of range");
    return signatures_of(g, h, seq)[i];
}

/// First pair i < j with identical signatures; 1-based, per the paper's
/// indexing. none when all signatures are distinct.
inline std::optional<std::pair<int, int>> find_equal_signature_pair(
    const std::vector<SeparatorSignature>& sigs) {
    for (std::size_t i = 0; i < sigs.size(); ++i)
        for (std::size_t j = i + 1; j < sigs.size(); ++j)
            if (sigs[i] == sigs[j])
                return std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1));
    return std::nullopt;
}

struct ShrinkResult {
    bool reduced = false;
    std::pair<int, int> pair{0, 0};  // 1-based glued pair when reduced
    GlueResult glued;
};

/// One compression step: find an equal-signature pair and glue it. The result
/// is re-verified to be a representative support with fewer vertices;
/// `reduced == false` reports an irreducible input.
inline ShrinkResult shrink_representative_support(const PlaneGraph& g, const Hypergraph& h,
                                                  const WfsSequence& seq) {
    ShrinkResult out;
    auto sigs = signatures_of(g, h, seq);
    auto pr = find_equal_signature_pair(sigs);
    if (!pr) return out;
    out.pair = *pr;
    out.glued = glue(g, seq, pr->first - 1, pr->second - 1);
    require(out.glued.graph.n() < g.n(), "shrink: gluing did not reduce the vertex count");
    require(is_representative_support(out.glued.graph.underlying(), h),
            "shrink: glued graph is not a representative support");
    out.reduced = true;
    return out;
}

/// log-space comparison count < 2^{m(r^2+r+1)} for the signature-count bound.
inline bool signature_count_within_bound(std::size_t count, int m, int r) {
    long long e = static_cast<long long>(m) * (static_cast<long long>(r) * r + r + 1);
    if (e >= 63) return true;  // bound exceeds any countable set
    return count < (1ULL << e);
}

}  // namespace psk
