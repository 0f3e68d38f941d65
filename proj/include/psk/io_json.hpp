#pragma once

#include <json.hpp>

#include "psk/separators.hpp"
#include "psk/signatures.hpp"

namespace psk {

using Json = nlohmann::json;

/// Sequence JSON: array of {A, S (in order), B, shape, anchors?} with vertex
/// names; A and B sorted by name for stable diffs.
inline Json seq_to_json(const PlaneGraph& g, const WfsSequence& seq) {
    Json arr = Json::array();
    auto names_sorted = [&](const VertexSet& vs) {
        std::vector<std::string> out;
        for (int v : vs) out.push_back(g.names[v]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const auto& t : seq.triples) {
        Json o;
        o["A"] = names_sorted(t.A);
        o["B"] = names_sorted(t.B);
        Json s = Json::array();
        for (int v : t.S) s.push_back(g.names[v]);
        o["S"] = s;
        o["shape"] = t.shape == SepShape::Path ? "path" : "cycle";
        if (t.shape == SepShape::Cycle) {
            o["anchors"] = {{"vstar", g.names[t.vstar]}, {"vdagger", g.names[t.vdagger]}};
        }
        arr.push_back(std::move(o));
    }
    return arr;
}

inline WfsSequence seq_from_json(const PlaneGraph& g, const Json& arr) {
    require(arr.is_array(), "sequence json: expected an array");
    WfsSequence seq;
    auto vid = [&](const std::string& name) {
        int v = g.index_of(name);
        require(v >= 0, "sequence json: unknown vertex " + name);
        return v;
    };
    for (const auto& o : arr) {
        SeparatorTriple t;
        for (const auto& s : o.at("A")) t.A.push_back(vid(s.get<std::string>()));
        for (const auto& s : o.at("B")) t.B.push_back(vid(s.get<std::string>()));
        sort_unique(t.A);
        sort_unique(t.B);
        for (const auto& s : o.at("S")) t.S.push_back(vid(s.get<std::string>()));
        std::string shape = o.at("shape").get<std::string>();
        require(shape == "path" || shape == "cycle", "sequence json: bad shape " + shape);
        t.shape = shape == "path" ? SepShape::Path : SepShape::Cycle;
        if (t.shape == SepShape::Cycle) {
            t.vstar = vid(o.at("anchors").at("vstar").get<std::string>());
            t.vdagger = vid(o.at("anchors").at("vdagger").get<std::string>());
        }
        seq.triples.push_back(std::move(t));
    }
    return seq;
}

/// Validation report JSON keyed by property labels "i".."viii".
inline Json report_to_json(const WfsReport& rep) {
    Json by_prop = Json::object();
    for (const auto& v : rep.violations) {
        if (!by_prop.contains(v.property)) by_prop[v.property] = Json::array();
        by_prop[v.property].push_back(v.detail);
    }
    Json out;
    out["ok"] = rep.ok();
    out["violations"] = by_prop;
    return out;
}

inline Json signature_to_json(const SeparatorSignature& sig) {
    Json o;
    o["gamma"] = sig.gamma;
    o["phi"] = sig.phi;
    Json pi = Json::array();
    for (const auto& [e, j, l] : sig.pi) pi.push_back({e, j, l});
    o["pi"] = pi;
    return o;
}

}  // namespace psk
