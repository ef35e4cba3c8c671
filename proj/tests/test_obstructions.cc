#include <doctest.h>

#include <emul/double_cover.hh>
#include <emul/errors.hh>
#include <emul/obstructions.hh>
#include <emul/transform.hh>

#include "fixtures.hh"
#include "oracles.hh"

#include <random>
#include <set>

using namespace emul;

namespace
{
    // two K4s and a spine vertex adjacent to all eight
    auto two_k4_spine() -> Graph
    {
        Graph g;
        for (int side = 0 ; side < 2 ; ++side)
            for (int i = 0 ; i < 4 ; ++i)
                g.add_vertex(std::string(1, char('a' + side)) + std::to_string(i));
        g.add_vertex("s");
        for (int side = 0 ; side < 2 ; ++side)
            for (int i = 0 ; i < 4 ; ++i) {
                g.add_edge(side * 4 + i, 8);
                for (int j = i + 1 ; j < 4 ; ++j)
                    g.add_edge(side * 4 + i, side * 4 + j);
            }
        return g;
    }
}

TEST_CASE("two disjoint k-graphs")
{
    SUBCASE("two K4s on a spine")
    {
        auto g = two_k4_spine();
        auto pair = find_two_disjoint_kgraphs(g);
        REQUIRE(pair);
        CHECK(is_kgraph_pair(g, *pair));
        CHECK(pair->first.kind == Topology::K4);
        CHECK(pair->second.kind == Topology::K4);
        CHECK(pair->first.witness_kind == Topology::K5);
    }

    SUBCASE("planar graphs have none")
    {
        CHECK(! find_two_disjoint_kgraphs(fixtures::cube()));
        CHECK(! find_two_disjoint_kgraphs(complete_graph(4)));
    }

    SUBCASE("graphs with planar emulators have none")
    {
        CHECK(! find_two_disjoint_kgraphs(fixtures::e2()));
        CHECK(! find_two_disjoint_kgraphs(fixtures::k7_minus_c4()));
        CHECK(! find_two_disjoint_kgraphs(fixtures::k1222()));
    }

    SUBCASE("budget")
    {
        CHECK_THROWS_AS(find_two_disjoint_kgraphs(two_k4_spine(), 10), BudgetExceeded);
    }

    SUBCASE("tampered certificates are rejected")
    {
        auto g = two_k4_spine();
        auto pair = *find_two_disjoint_kgraphs(g);
        auto broken = pair;
        broken.second = broken.first;
        CHECK(! is_kgraph_pair(g, broken));
        broken = pair;
        broken.first.edges.pop_back();
        CHECK(! is_kgraph_pair(g, broken));
        broken = pair;
        broken.first.witness.pop_back();
        CHECK(! is_kgraph_pair(g, broken));
    }
}

TEST_CASE("k-graph detector agrees with the subset oracle")
{
    std::mt19937 rng(5);
    int positives = 0, total = 0;
    for (int round = 0 ; round < 200 ; ++round) {
        // two dense blobs joined through a few middle vertices
        int n = 9 + int(rng() % 2);
        Graph g;
        for (int i = 0 ; i < n ; ++i)
            g.add_vertex("v" + std::to_string(i));
        std::uniform_real_distribution<double> u(0, 1);
        auto blob = [&] (int v) { return v < 4 ? 0 : v < 8 ? 1 : 2; };
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b) {
                double p = blob(a) == blob(b) ? (blob(a) == 2 ? 0.5 : 0.85) : (blob(a) == 2 || blob(b) == 2 ? 0.7 : 0.05);
                if (u(rng) < p)
                    g.add_edge(a, b);
            }
        auto found = find_two_disjoint_kgraphs(g);
        CHECK(found.has_value() == oracle::has_two_disjoint_kgraphs(g));
        if (found)
            CHECK(is_kgraph_pair(g, *found));
        positives += found.has_value();
        ++total;
    }
    CHECK(positives > 5);
    CHECK(positives < total);
}

TEST_CASE("internal 4-connectivity")
{
    CHECK(is_internally_4_connected(complete_graph(5)).internally_4_connected);
    CHECK(is_internally_4_connected(fixtures::k1222()).internally_4_connected);
    CHECK(is_internally_4_connected(complete_graph(4)).internally_4_connected);
    CHECK(! is_internally_4_connected(cycle_graph(4)).internally_4_connected);

    auto r = is_internally_4_connected(fixtures::k7_minus_c4());
    CHECK(! r.internally_4_connected);
    REQUIRE(r.violation);
    CHECK(r.violation->boundary == std::vector<std::string>{ "1", "2", "3" });

    // the cube is 3-connected and its 3-separations cut off single vertices
    CHECK(is_internally_4_connected(fixtures::cube()).internally_4_connected);

    auto two = is_internally_4_connected(complete_bipartite(2, 4));
    CHECK(! two.internally_4_connected);
    REQUIRE(two.violation);
    CHECK(two.violation->boundary.size() == 2);

    // a triangular prism: boundary triangles are not independent
    auto prism = parse_graph("vertices: a b c d e f\na b\nb c\nc a\nd e\ne f\nf d\na d\nb e\nc f\n");
    CHECK(! is_internally_4_connected(prism).internally_4_connected);
}

TEST_CASE("violating separations are genuine")
{
    std::mt19937 rng(13);
    for (int round = 0 ; round < 100 ; ++round) {
        auto g = oracle::to_graph(oracle::random_graph(7, 0.6, rng));
        auto r = is_internally_4_connected(g);
        if (! r.violation)
            continue;
        auto & s = *r.violation;
        std::set<std::string> a(s.side_a.begin(), s.side_a.end()), b(s.side_b.begin(), s.side_b.end());
        CHECK(a.size() + b.size() - s.boundary.size() == std::size_t(g.size()));
        CHECK(a.size() > s.boundary.size());
        CHECK(b.size() > s.boundary.size());
        for (auto & e : g.edges()) {
            auto x = g.label(e.u), y = g.label(e.v);
            CHECK(((a.count(x) && a.count(y)) || (b.count(x) && b.count(y))));
        }
    }
}

TEST_CASE("nonflat 3-separations")
{
    auto g = fixtures::k7_minus_c4();
    auto s = find_nonflat_3_separation(g);
    REQUIRE(s);
    CHECK(s->boundary == std::vector<std::string>{ "1", "2", "3" });
    std::array<std::string, 3> t{ "1", "2", "3" };
    CHECK(! is_flat_separation(g, t, s->side_a));
    CHECK(! is_flat_separation(g, t, s->side_b));

    CHECK(! find_nonflat_3_separation(complete_graph(4)));
    CHECK(! find_nonflat_3_separation(fixtures::cube()));
    CHECK(! find_nonflat_3_separation(parse_graph("vertices: a b c d e f\na b\nb c\nc a\nd e\ne f\nf d\na d\nb e\nc f\n")));
}

TEST_CASE("planar graphs have no nonflat separations")
{
    std::mt19937 rng(3);
    int checked = 0;
    for (int round = 0 ; round < 200 ; ++round) {
        auto g = oracle::to_graph(oracle::random_graph(8, 0.45, rng));
        if (! is_planar(g))
            continue;
        ++checked;
        CHECK(! find_nonflat_3_separation(g));
    }
    CHECK(checked > 20);
}

TEST_CASE("fiber lower bound")
{
    auto k5 = search_planar_double_cover(Embedding(complete_graph(5), [] {
        std::vector<std::vector<VertexId>> r;
        for (VertexId v = 0 ; v < 5 ; ++v) {
            r.emplace_back();
            for (VertexId w = 0 ; w < 5 ; ++w)
                if (w != v)
                    r.back().push_back(w);
        }
        return r;
    }()));
    REQUIRE(k5);
    CHECK(check_min_fiber(double_cover(*k5).projection));

    CHECK_THROWS_AS(check_min_fiber(identity_projection(complete_graph(5))), PreconditionUnmet);
    CHECK_THROWS_AS(check_min_fiber(identity_projection(fixtures::cube())), PreconditionUnmet);
}
