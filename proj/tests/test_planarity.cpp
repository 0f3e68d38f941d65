#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "psk/gen.hpp"
#include "psk/planarity.hpp"

using namespace psk;

namespace {

Graph complete(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("k" + std::to_string(i));
    Graph g = Graph::with_vertices(names);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("planarity test basics") {
    REQUIRE_FALSE(is_planar(complete(5)));
    REQUIRE(is_planar(complete(4)));
    REQUIRE(is_planar(testutil::path_graph({"a", "b", "c", "d"})));
}

TEST_CASE("embed_planar returns a genus-0 embedding") {
    Graph k4 = complete(4);
    auto pg = embed_planar(k4);
    REQUIRE(pg.has_value());
    REQUIRE(pg->face_count() == 4);
    REQUIRE_FALSE(embed_planar(complete(5)).has_value());
}

TEST_CASE("outerplanarity via the apex test") {
    REQUIRE(is_outerplanar(testutil::c6().underlying()));
    REQUIRE(is_outerplanar(testutil::path_graph({"a", "b", "c"})));
    REQUIRE_FALSE(is_outerplanar(complete(4)));
    auto emb = embed_outerplanar(testutil::c6().underlying());
    REQUIRE(emb.has_value());
    REQUIRE(layer_decomposition(*emb).r == 1);
}

TEST_CASE("min_outerplanarity of trees and cycles is 1") {
    auto r = min_outerplanarity(testutil::path_graph({"a", "b", "c", "d", "e"}));
    REQUIRE(r.status == Tri::Yes);
    REQUIRE(r.value == 1);
    REQUIRE(layer_decomposition(r.witness).r == 1);
}

TEST_CASE("min_outerplanarity of K4 is 2") {
    auto r = min_outerplanarity(complete(4));
    REQUIRE(r.status == Tri::Yes);
    REQUIRE(r.value == 2);
    REQUIRE(layer_decomposition(r.witness).r == 2);
}

TEST_CASE("min_outerplanarity rejects non-planar graphs") {
    REQUIRE_THROWS_AS(min_outerplanarity(complete(5)), Error);
}

TEST_CASE("the fig-counter support graph is 2-outerplanar") {
    Graph g = gen::fig_counter_support();
    REQUIRE(g.n() == 12);
    REQUIRE(g.edge_count() == 24);
    auto r = min_outerplanarity(g);
    REQUIRE(r.status == Tri::Yes);
    REQUIRE(r.value == 2);
    LayerDecomposition ld = layer_decomposition(r.witness);
    REQUIRE(ld.r == 2);
}

TEST_CASE("outerplanarity_at_most and monotonicity in r") {
    Graph g = gen::fig_counter_support();
    REQUIRE(outerplanarity_at_most(g, 1) == Tri::No);
    PlaneGraph w;
    REQUIRE(outerplanarity_at_most(g, 2, {}, &w) == Tri::Yes);
    REQUIRE(layer_decomposition(w).r <= 2);
    REQUIRE(outerplanarity_at_most(g, 3) == Tri::Yes);
    REQUIRE(outerplanarity_at_most(complete(5), 4) == Tri::No);
}

TEST_CASE("subgraphs never increase the outerplanarity index") {
    for (int seed = 0; seed < 6; ++seed) {
        PlaneGraph d = gen::disk(2, 10, 3100 + seed);
        Graph g = d.underlying();
        int base = min_outerplanarity(g).value;
        REQUIRE(base <= 2);
        Rng rng(seed);
        Graph sub = g;
        for (int v = 0; v < sub.n() && sub.edge_count() > sub.n(); ++v) {
            if (sub.adj[v].empty()) continue;
            int u = sub.adj[v][rng.below(sub.adj[v].size())];
            Graph cand = sub;
            cand.adj[v].erase(std::find(cand.adj[v].begin(), cand.adj[v].end(), u));
            cand.adj[u].erase(std::find(cand.adj[u].begin(), cand.adj[u].end(), v));
            sub = cand;
        }
        REQUIRE(min_outerplanarity(sub).value <= base);
    }
}

TEST_CASE("disconnected graphs take the max over components") {
    Graph g = Graph::with_vertices({"a", "b", "c", "d", "k0", "k1", "k2", "k3"});
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    for (int i = 4; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) g.add_edge(i, j);
    auto r = min_outerplanarity(g);
    REQUIRE(r.status == Tri::Yes);
    REQUIRE(r.value == 2);
}
