#pragma once

#include <string>
#include <vector>

#include "psk/gen.hpp"
#include "psk/hypergraph.hpp"
#include "psk/plane_graph.hpp"

namespace testutil {

inline psk::Hypergraph hg(const std::string& text) { return psk::parse_hg(text).hypergraph; }

/// Hypergraph from edge lists over single-letter-ish names.
inline psk::Hypergraph hg_edges(const std::vector<std::vector<std::string>>& edges,
                                const std::vector<std::string>& universe = {}) {
    std::string text;
    if (!universe.empty()) {
        text += "vertices:";
        for (const auto& v : universe) text += " " + v;
        text += "\n";
    }
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) text += (i ? " " : "") + e[i];
        text += "\n";
    }
    return hg(text);
}

inline psk::PlaneGraph triangle() {
    return psk::plane_from_coords({"1", "2", "3"}, {{0, 0}, {4, 0}, {2, 3}},
                                  {{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2});
}

inline psk::PlaneGraph k4_disk() {
    return psk::plane_from_coords({"1", "2", "3", "4"}, {{0, 0}, {4, 0}, {2, 3}, {2, 1}},
                                  {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}},
                                  {0, 1, 2});
}

inline psk::PlaneGraph c4() {
    return psk::plane_from_coords({"a", "b", "c", "d"}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                                  {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 2, 3});
}

inline psk::PlaneGraph c6() {
    std::vector<std::string> names;
    std::vector<std::pair<double, double>> xy;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> walk;
    for (int i = 0; i < 6; ++i) {
        names.push_back(std::to_string(i));
        double a = 2 * 3.14159265358979 * i / 6;
        xy.push_back({std::cos(a), std::sin(a)});
        edges.push_back({i, (i + 1) % 6});
        walk.push_back(i);
    }
    return psk::plane_from_coords(names, xy, edges, walk);
}

inline psk::Graph path_graph(const std::vector<std::string>& names) {
    psk::Graph g = psk::Graph::with_vertices(names);
    for (int i = 0; i + 1 < g.n(); ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace testutil
