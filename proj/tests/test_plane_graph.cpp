#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "psk/gen.hpp"
#include "psk/plane_graph.hpp"

using namespace psk;

TEST_CASE("triangle has two faces, both 3-walks") {
    PlaneGraph g = testutil::triangle();
    REQUIRE(g.face_count() == 2);
    REQUIRE(g.fdarts[0].size() == 3);
    REQUIRE(g.fdarts[1].size() == 3);
}

TEST_CASE("K4 with outer triangle has four triangular faces") {
    PlaneGraph g = testutil::k4_disk();
    REQUIRE(g.face_count() == 4);
    for (int f = 0; f < 4; ++f) REQUIRE(g.fdarts[f].size() == 3);
}

TEST_CASE("single edge traces one face of length two") {
    PlaneGraph g = make_plane_graph({"a", "b"}, {{1}, {0}}, {0, 1});
    REQUIRE(g.face_count() == 1);
    REQUIRE(g.fdarts[0].size() == 2);
}

TEST_CASE("inconsistent rotation is rejected") {
    // edge a->b present only on one side
    REQUIRE_THROWS_AS(make_plane_graph({"a", "b", "c"}, {{1}, {}, {}}, {}), Error);
}

TEST_CASE("layer decomposition of K4") {
    PlaneGraph g = testutil::k4_disk();
    LayerDecomposition ld = layer_decomposition(g);
    REQUIRE(ld.r == 2);
    REQUIRE(ld.layers[0] == VertexSet{0, 1, 2});
    REQUIRE(ld.layers[1] == VertexSet{3});
}

TEST_CASE("outerplanar embeddings have one layer") {
    LayerDecomposition ld = layer_decomposition(testutil::c6());
    REQUIRE(ld.r == 1);
    REQUIRE(ld.layers[0].size() == 6);
}

TEST_CASE("generated disks match their construction layers") {
    for (int seed = 0; seed < 5; ++seed) {
        PlaneGraph g = gen::disk(3, 24, 40 + seed);
        LayerDecomposition ld = layer_decomposition(g);
        REQUIRE(ld.r == 3);
        // every deeper vertex has a neighbor one layer up (triangulated disks)
        for (int v = 0; v < g.n(); ++v) {
            if (ld.layer[v] == 1) continue;
            bool ok = false;
            for (int u : g.rot[v])
                if (ld.layer[u] == ld.layer[v] - 1) ok = true;
            REQUIRE(ok);
        }
    }
}

TEST_CASE("layer decomposition requires connectivity") {
    PlaneGraph g;
    g.names = {"a", "b", "c", "d"};
    g.rot = {{1}, {0}, {3}, {2}};
    g.finalize();
    g.outer = 0;
    REQUIRE_THROWS_AS(layer_decomposition(g), Error);
}

TEST_CASE("is_triangulated_disk") {
    REQUIRE(is_triangulated_disk(testutil::triangle()));
    REQUIRE(is_triangulated_disk(testutil::k4_disk()));
    REQUIRE_FALSE(is_triangulated_disk(testutil::c4()));
}

TEST_CASE("triangulating C4 adds one chord and keeps one layer") {
    PlaneGraph g = triangulate_to_disk(testutil::c4());
    REQUIRE(is_triangulated_disk(g));
    REQUIRE(g.edge_count() == 5);
    REQUIRE(layer_decomposition(g).r == 1);
}

TEST_CASE("triangulate_to_disk is idempotent on disks") {
    PlaneGraph g = gen::disk(2, 14, 7);
    PlaneGraph t = triangulate_to_disk(g);
    REQUIRE(t.edge_count() == g.edge_count());
    REQUIRE(plane_equal(g, t));
}

TEST_CASE("triangulate_to_disk preserves layers on a random corpus") {
    // random connected plane subgraphs of generated disks: drop non-outer
    // edges while keeping connectivity, then retriangulate
    int samples = 0;
    for (int seed = 0; samples < 100; ++seed) {
        int layers = 1 + seed % 3;
        PlaneGraph d = gen::disk(layers, 10 + (seed % 4) * 4, 900 + seed);
        Rng rng(seed);
        PlaneGraph cur = d;
        for (int tries = 0; tries < 10; ++tries) {
            std::vector<std::pair<int, int>> inner;
            for (int v = 0; v < cur.n(); ++v)
                for (int u : cur.rot[v])
                    if (v < u && cur.dface[cur.dart(u, v)] != cur.outer &&
                        cur.dface[cur.dart(v, u)] != cur.outer)
                        inner.push_back({v, u});
            if (inner.empty()) break;
            auto [x, y] = inner[rng.below(inner.size())];
            PlaneGraph next = cur;
            int od_u = next.dtail[next.fdarts[next.outer][0]];
            int od_v = next.dhead[next.fdarts[next.outer][0]];
            next.rot[x].erase(std::find(next.rot[x].begin(), next.rot[x].end(), y));
            next.rot[y].erase(std::find(next.rot[y].begin(), next.rot[y].end(), x));
            next.finalize();
            if (!next.connected()) continue;
            next.outer = next.dface[next.dart(od_u, od_v)];
            cur = next;
        }
        LayerDecomposition before = layer_decomposition(cur);
        PlaneGraph tri = triangulate_to_disk(cur);
        REQUIRE(is_triangulated_disk(tri));
        REQUIRE(layer_decomposition(tri).layer == before.layer);
        ++samples;
    }
}

TEST_CASE("blocks of a path are its edges") {
    Graph g = testutil::path_graph({"a", "b", "c"});
    auto d = blocks(g);
    REQUIRE(d.blocks.size() == 2);
    REQUIRE(d.cut_vertices == VertexSet{1});
}

TEST_CASE("a triangle is one block without cut vertices") {
    Graph g = testutil::triangle().underlying();
    auto d = blocks(g);
    REQUIRE(d.blocks.size() == 1);
    REQUIRE(d.cut_vertices.empty());
}

TEST_CASE("two triangles sharing a vertex form two blocks") {
    Graph g = Graph::with_vertices({"a", "b", "x", "c", "d"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(2, 4);
    auto d = blocks(g);
    REQUIRE(d.blocks.size() == 2);
    REQUIRE(d.cut_vertices == VertexSet{2});
}

TEST_CASE("isolated vertices count as blocks") {
    Graph g = Graph::with_vertices({"a", "b", "c"});
    g.add_edge(0, 1);
    auto d = blocks(g);
    REQUIRE(d.blocks.size() == 2);
}

TEST_CASE("peeling the outer layer exposes the next one") {
    for (int seed = 0; seed < 8; ++seed) {
        PlaneGraph g = gen::disk(2 + seed % 2, 16, 2000 + seed);
        LayerDecomposition ld = layer_decomposition(g);
        VertexSet rest;
        for (int v = 0; v < g.n(); ++v)
            if (ld.layer[v] > 1) rest.push_back(v);
        Restriction r = restrict_plane(g, rest);
        REQUIRE(r.graph.outer >= 0);
        LayerDecomposition inner = layer_decomposition(r.graph);
        for (int v = 0; v < r.graph.n(); ++v)
            REQUIRE(inner.layer[v] == ld.layer[r.orig_of[v]] - 1);
    }
}

TEST_CASE("pg round trip") {
    PlaneGraph g = gen::disk(2, 15, 77);
    PlaneGraph again = parse_pg(serialize_pg(g));
    REQUIRE(plane_equal(g, again));
    PlaneGraph fan = gen::fan(9);
    REQUIRE(plane_equal(fan, parse_pg(serialize_pg(fan))));
}

TEST_CASE("pg parser reports line numbers on bad input") {
    try {
        parse_pg("outerface: a b\na: b\nb: a\na: b\n");
        FAIL("expected error");
    } catch (const Error& e) {
        REQUIRE(std::string(e.what()).find("line 4") != std::string::npos);
    }
    REQUIRE_THROWS_AS(parse_pg("a: b\n"), Error);  // b never defined
}

TEST_CASE("render_dot emits layer attributes") {
    std::string dot = render_dot(testutil::k4_disk(), true);
    REQUIRE(dot.find("layer=2") != std::string::npos);
    REQUIRE(dot.find("\"1\" -- \"2\"") != std::string::npos);
}
