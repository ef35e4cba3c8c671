#include <doctest.h>

#include <emul/errors.hh>
#include <emul/graph.hh>
#include <emul/planarity.hh>

#include "oracles.hh"

#include <random>

using namespace emul;

namespace
{
    const char * cube_text = "vertices: 0 1 2 3 4 5 6 7\n0 1\n0 2\n0 4\n1 3\n1 5\n2 3\n2 6\n3 7\n4 5\n4 6\n5 7\n6 7\n";

    auto face_lengths(const Embedding & e) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result;
        for (auto & f : faces(e))
            result.push_back(f.length());
        std::sort(result.begin(), result.end());
        return result;
    }
}

TEST_CASE("planarity of small named graphs")
{
    auto k4 = test_planarity(complete_graph(4));
    REQUIRE(k4.planar);
    CHECK(face_lengths(*k4.embedding) == std::vector<std::size_t>{ 3, 3, 3, 3 });

    auto k5 = test_planarity(complete_graph(5));
    CHECK(! k5.planar);
    CHECK(k5.kuratowski_kind == Topology::K5);
    CHECK(recognise_subdivision(complete_graph(5), k5.kuratowski) == Topology::K5);

    auto k33 = test_planarity(complete_bipartite(3, 3));
    CHECK(! k33.planar);
    CHECK(k33.kuratowski_kind == Topology::K33);

    auto cube = test_planarity(parse_graph(cube_text));
    REQUIRE(cube.planar);
    CHECK(face_lengths(*cube.embedding) == std::vector<std::size_t>(6, 4));
}

TEST_CASE("single edge and empty graphs")
{
    auto e = test_planarity(parse_graph("vertices: a b\na b\n"));
    REQUIRE(e.planar);
    CHECK(faces(*e.embedding).size() == 1);
    CHECK(euler_check(*e.embedding));

    auto empty = test_planarity(Graph{});
    CHECK(empty.planar);

    auto isolated = test_planarity(parse_graph("vertices: a b c\na b\n"));
    REQUIRE(isolated.planar);
    CHECK(euler_check(*isolated.embedding));
}

TEST_CASE("euler_check notices a rotation that adds genus")
{
    auto k4 = complete_graph(4);
    auto emb = *test_planarity(k4).embedding;
    CHECK(euler_check(emb));

    auto rotations = emb.rotations();
    std::swap(rotations[0][0], rotations[0][1]);
    Embedding twisted(k4, rotations);
    CHECK(! euler_check(twisted));
}

TEST_CASE("Embedding rejects malformed rotations")
{
    auto k3 = complete_graph(3);
    CHECK_THROWS_AS(Embedding(k3, { { 1, 2 }, { 0, 2 }, { 0 } }), CorruptRotation);
    CHECK_THROWS_AS(Embedding(k3, { { 1, 1 }, { 0, 2 }, { 0, 1 } }), CorruptRotation);
    CHECK_THROWS_AS(Embedding(k3, { { 1, 2 }, { 0, 2 } }), CorruptRotation);
}

TEST_CASE("embedding text format")
{
    auto e = parse_embedding("a: b c d\nb: a d c\nc: a b d\nd: a c b\n");
    CHECK(e.graph().size() == 4);
    CHECK(e.graph().edge_count() == 6);
    CHECK(format_embedding(parse_embedding(format_embedding(e))) == format_embedding(e));
    CHECK_THROWS_AS(parse_embedding("a: b\nb: c\nc: b\n"), ParseError);
    CHECK_THROWS_AS(parse_embedding("a: b\n"), ParseError);
}

TEST_CASE("subdivision recogniser")
{
    // K4 with two edges subdivided
    auto g = parse_graph("vertices: a b c d x y\na x\nx b\na c\na d\nb c\nb y\ny d\nc d\n");
    CHECK(recognise_subdivision(g, g.edges()) == Topology::K4);

    auto theta = parse_graph("vertices: s t a b c d\ns a\na t\ns b\nb t\ns c\nc d\nd t\n");
    CHECK(recognise_subdivision(theta, theta.edges()) == Topology::K23);

    auto short_theta = parse_graph("vertices: s t a b\ns t\ns a\na t\ns b\nb t\n");
    CHECK(! recognise_subdivision(short_theta, short_theta.edges()));

    auto c5 = cycle_graph(5);
    CHECK(! recognise_subdivision(c5, c5.edges()));

    auto k5 = complete_graph(5);
    auto missing = k5.edges();
    missing.pop_back();
    CHECK(! recognise_subdivision(k5, missing));
}

TEST_CASE("test_planarity agrees with the minor oracle on all graphs up to 7 vertices")
{
    int nonplanar = 0;
    for (int n = 1 ; n <= 7 ; ++n)
        for (auto & s : oracle::all_graphs(n)) {
            auto g = oracle::to_graph(s);
            auto r = test_planarity(g);
            CHECK(r.planar == oracle::planar_by_minors(s));
            if (r.planar) {
                std::size_t total = 0;
                for (auto & f : faces(*r.embedding))
                    total += f.length();
                CHECK(total == 2 * g.edge_count());
            }
            else
                ++nonplanar;
        }
    CHECK(nonplanar > 0);
}

TEST_CASE("test_planarity agrees with the rotation-system oracle where enumeration is small")
{
    int decided_count = 0;
    for (int n = 1 ; n <= 6 ; ++n)
        for (auto & s : oracle::all_graphs(n)) {
            bool decided = false;
            auto expected = oracle::planar_by_rotations(s, 20000, decided);
            if (! decided)
                continue;
            ++decided_count;
            CHECK(is_planar(oracle::to_graph(s)) == expected);
        }
    CHECK(decided_count > 150);
}

TEST_CASE("test_planarity agrees with the minor oracle on sampled 8-vertex graphs")
{
    std::mt19937 rng(8);
    for (int i = 0 ; i < 300 ; ++i) {
        auto s = oracle::random_graph(8, 0.25 + 0.001 * i, rng);
        CHECK(is_planar(oracle::to_graph(s)) == oracle::planar_by_minors(s));
    }
}

TEST_CASE("is_flat_separation")
{
    auto k3 = complete_graph(3);
    CHECK(is_flat_separation(k3, { "1", "2", "3" }, { "1", "2", "3" }));

    auto k5 = complete_graph(5);
    CHECK(! is_flat_separation(k5, { "1", "2", "3" }, { "1", "2", "3", "4", "5" }));

    auto k4 = complete_graph(4);
    CHECK(is_flat_separation(k4, { "1", "2", "4" }, { "1", "2", "3", "4" }));

    CHECK_THROWS_AS(is_flat_separation(k4, { "1", "2", "3" }, { "1", "2", "4" }), InvalidSeparation);
    auto k4_tail = parse_graph("vertices: 1 2 3 4 5\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n4 5\n");
    CHECK_THROWS_AS(is_flat_separation(k4_tail, { "1", "2", "3" }, { "1", "2", "3", "4" }), InvalidSeparation);
    CHECK(is_flat_separation(k4_tail, { "1", "2", "4" }, { "1", "2", "3", "4" }));
    CHECK_THROWS_AS(is_flat_separation(k4, { "1", "1", "3" }, { "1", "2", "3", "4" }), InvalidSeparation);
}

TEST_CASE("flatness is monotone under shrinking the side")
{
    std::mt19937 rng(99);
    int checked = 0;
    for (int round = 0 ; round < 400 ; ++round) {
        auto g = oracle::to_graph(oracle::random_graph(7, 0.55, rng));
        std::array<std::string, 3> b{ g.label(0), g.label(1), g.label(2) };
        std::vector<std::string> side;
        for (VertexId v = 0 ; v < g.size() ; ++v)
            side.push_back(g.label(v));
        if (! is_flat_separation(g, b, side))
            continue;
        // shrinking the whole graph side: drop a non-boundary vertex
        for (VertexId x = 3 ; x < g.size() ; ++x) {
            std::vector<std::string> smaller;
            std::vector<VertexId> keep;
            for (VertexId v = 0 ; v < g.size() ; ++v)
                if (v != x) {
                    smaller.push_back(g.label(v));
                    keep.push_back(v);
                }
            auto h = induced_subgraph(g, keep);
            CHECK(is_flat_separation(h, b, smaller));
            ++checked;
        }
    }
    CHECK(checked > 50);
}
