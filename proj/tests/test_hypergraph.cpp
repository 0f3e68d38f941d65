#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "psk/gen.hpp"
#include "psk/hypergraph.hpp"

using namespace psk;
using testutil::hg;
using testutil::hg_edges;

TEST_CASE("normalize drops singletons, empties and duplicates") {
    auto h = hg_edges({{"a"}, {"a", "b"}, {"a", "b"}});
    REQUIRE(h.m() == 1);
    REQUIRE(h.n() == 2);
    REQUIRE(h.edges[0] == VertexSet{h.index_of("a"), h.index_of("b")});
}

TEST_CASE("normalize keeps a declared universe with no edges") {
    auto h = hg("vertices: a b\n");
    REQUIRE(h.n() == 2);
    REQUIRE(h.m() == 0);
}

TEST_CASE("fig-counter normalizes to 24 hyperedges over 12 vertices") {
    Hypergraph h = gen::fig_counter();
    REQUIRE(h.n() == 12);
    REQUIRE(h.m() == 24);
    int solid = 0, big = 0;
    for (const auto& e : h.edges) {
        if (e.size() == 2) ++solid;
        if (e.size() == 5) ++big;
    }
    REQUIRE(solid == 16);
    REQUIRE(big == 8);
}

TEST_CASE("normalize is idempotent") {
    Hypergraph h = gen::fig_counter();
    Hypergraph again = normalize(h);
    REQUIRE(again.edges == h.edges);
    for (int seed = 0; seed < 20; ++seed) {
        Hypergraph r = gen::tiny_hypergraph(7, 4, seed);
        REQUIRE(normalize(r).edges == r.edges);
    }
}

TEST_CASE("twin classes split by incidence") {
    auto h = hg_edges({{"a", "b"}, {"a", "c"}});
    TwinPartition p = twin_classes(h);
    REQUIRE(p.classes.size() == 3);
}

TEST_CASE("symmetric incidence puts both vertices into one class") {
    auto h = hg_edges({{"x", "y"}});
    TwinPartition p = twin_classes(h);
    REQUIRE(p.classes.size() == 1);
    REQUIRE(p.classes[0].size() == 2);
}

TEST_CASE("fig-counter twins are exactly t and t'") {
    Hypergraph h = gen::fig_counter();
    TwinPartition p = twin_classes(h);
    int t = h.index_of("t"), tp = h.index_of("t'");
    REQUIRE(p.class_of[t] == p.class_of[tp]);
    for (const auto& cls : p.classes)
        REQUIRE((cls.size() == 1 || (cls.size() == 2 && set_contains(cls, t))));
    REQUIRE(p.classes.size() == 11);
}

TEST_CASE("covers is the incidence subset relation") {
    auto h = hg_edges({{"a", "b"}, {"a", "c"}});
    REQUIRE(covers(h, "a", "b"));
    REQUIRE_FALSE(covers(h, "b", "a"));
    Hypergraph fig = gen::fig_counter();
    REQUIRE(covers(fig, "t", "t'"));
    REQUIRE(covers(fig, "t'", "t"));
    REQUIRE_THROWS_AS(covers(fig, "t", "nope"), Error);
}

TEST_CASE("remove_vertices truncates and renormalizes") {
    auto h = hg_edges({{"a", "b", "c"}});
    Hypergraph r = remove_vertices(h, {h.index_of("c")});
    REQUIRE(r.n() == 2);
    REQUIRE(r.m() == 1);
    auto h2 = hg_edges({{"a", "b"}});
    Hypergraph r2 = remove_vertices(h2, {h2.index_of("b")});
    REQUIRE(r2.n() == 1);
    REQUIRE(r2.m() == 0);
}

TEST_CASE("fig-counter minus t keeps t' in the shrunken hyperedges") {
    Hypergraph r = gen::fig_counter_minus_t();
    REQUIRE(r.n() == 11);
    REQUIRE(r.index_of("t") == -1);
    int big4 = 0;
    for (const auto& e : r.edges)
        if (e.size() == 4) ++big4;
    REQUIRE(big4 == 8);
}

TEST_CASE("twins remain twins after removing a third vertex") {
    for (int seed = 0; seed < 30; ++seed) {
        Hypergraph h = gen::tiny_hypergraph(8, 4, 100 + seed);
        if (h.n() < 3) continue;
        TwinPartition before = twin_classes(h);
        int victim = seed % h.n();
        Hypergraph r = remove_vertices(h, {victim});
        TwinPartition after = twin_classes(r);
        for (int u = 0; u < h.n(); ++u)
            for (int v = u + 1; v < h.n(); ++v) {
                if (u == victim || v == victim) continue;
                if (before.class_of[u] != before.class_of[v]) continue;
                int ru = r.index_of(h.names[u]), rv = r.index_of(h.names[v]);
                REQUIRE(after.class_of[ru] == after.class_of[rv]);
            }
    }
}

TEST_CASE("vertices in one twin class cover each other") {
    for (int seed = 0; seed < 20; ++seed) {
        Hypergraph h = gen::tiny_hypergraph(8, 4, 300 + seed);
        TwinPartition p = twin_classes(h);
        for (const auto& cls : p.classes)
            for (int u : cls)
                for (int v : cls) {
                    REQUIRE(covers(h, u, v));
                    REQUIRE(covers(h, v, u));
                }
    }
}

TEST_CASE("hg round trip and diagnostics") {
    Hypergraph h = gen::fig_counter();
    Hypergraph again = parse_hg(serialize_hg(h)).hypergraph;
    REQUIRE(again.n() == h.n());
    REQUIRE(again.m() == h.m());
    for (int v = 0; v < h.n(); ++v) REQUIRE(again.names[v] == h.names[v]);
    REQUIRE(again.edges == h.edges);

    auto res = parse_hg("a b\na\n# comment\na b\n");
    REQUIRE(res.hypergraph.m() == 1);
    REQUIRE(res.diagnostics.size() == 2);  // singleton line + duplicate
}
