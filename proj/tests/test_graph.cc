#include <doctest.h>

#include <emul/errors.hh>
#include <emul/graph.hh>
#include <emul/isomorphism.hh>
#include <emul/transform.hh>

#include "oracles.hh"

#include <random>

using namespace emul;

namespace
{
    auto path(std::initializer_list<std::string> labels) -> Graph
    {
        Graph g;
        std::string prev;
        for (auto & l : labels) {
            g.add_vertex(l);
            if (! prev.empty())
                g.add_edge(prev, l);
            prev = l;
        }
        return g;
    }

    auto shuffled(const Graph & g, std::mt19937 & rng) -> Graph
    {
        std::vector<VertexId> perm(g.size());
        for (int i = 0 ; i < g.size() ; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h;
        for (int i = 0 ; i < g.size() ; ++i)
            h.add_vertex("s" + g.label(perm[i]));
        for (auto & e : g.edges())
            h.add_edge("s" + g.label(e.u), "s" + g.label(e.v));
        return h;
    }
}

TEST_CASE("graph text format round trips")
{
    auto g = parse_graph("# a comment\nvertices: a b c d\na b\nb c # trailing\n\nc a\n");
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(g.id("d")) == 0);
    CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("graph parser reports the offending line")
{
    auto line_of = [] (const std::string & text) {
        try {
            parse_graph(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("vertices: a b\na b\na c\n") == 3);
    CHECK(line_of("a b\n") == 1);
    CHECK(line_of("vertices: a b\na a\n") == 2);
    CHECK(line_of("vertices: a b\na b\nb a\n") == 3);
    CHECK(line_of("vertices: a b\na b c\n") == 2);
    CHECK(line_of("# nothing\n") == 1);
}

TEST_CASE("delete_vertex")
{
    auto k4 = complete_graph(4);
    auto k3 = delete_vertex(k4, "2");
    CHECK(is_isomorphic(k3, complete_graph(3)));

    auto p = delete_vertex(path({ "a", "b", "c" }), "b");
    CHECK(p.size() == 2);
    CHECK(p.edge_count() == 0);

    CHECK_THROWS_AS(delete_vertex(k4, "9"), UnknownVertex);
}

TEST_CASE("contract_edge")
{
    CHECK(is_isomorphic(contract_edge(complete_graph(3), "1", "2"), complete_graph(2)));
    CHECK(is_isomorphic(contract_edge(complete_graph(5), "4", "2"), complete_graph(4)));

    auto c = parse_graph("vertices: a b c d\na b\nb c\nc d\nd a\n");
    auto t = contract_edge(c, "b", "a");
    CHECK(t.has_vertex("a"));
    CHECK(! t.has_vertex("b"));
    CHECK(is_isomorphic(t, complete_graph(3)));

    CHECK_THROWS_AS(contract_edge(c, "a", "c"), UnknownEdge);
}

TEST_CASE("contraction removes one vertex and never adds edges")
{
    std::mt19937 rng(11);
    for (int round = 0 ; round < 200 ; ++round) {
        auto g = oracle::to_graph(oracle::random_graph(7, 0.45, rng));
        for (auto & e : g.edges()) {
            auto h = contract_edge(g, g.label(e.u), g.label(e.v));
            CHECK(h.size() == g.size() - 1);
            CHECK(h.edge_count() <= g.edge_count() - 1);
        }
    }
}

TEST_CASE("yd_transform")
{
    auto claw = parse_graph("vertices: c x y z\nc x\nc y\nc z\n");
    CHECK(is_isomorphic(yd_transform(claw, "c"), complete_graph(3)));
    CHECK_THROWS_AS(yd_transform(claw, "x"), DegreeMismatch);
    CHECK(is_isomorphic(yd_transform(complete_graph(4), "1"), complete_graph(3)));
}

TEST_CASE("dy_transform")
{
    std::string y;
    auto claw = dy_transform(complete_graph(3), { "1", "2", "3" }, &y);
    CHECK(claw.size() == 4);
    CHECK(claw.edge_count() == 3);
    CHECK(claw.degree(claw.id(y)) == 3);

    auto k4 = dy_transform(complete_graph(4), { "1", "2", "3" });
    CHECK(k4.size() == 5);
    CHECK(k4.edge_count() == 6);
    std::vector<int> degrees;
    for (VertexId v = 0 ; v < k4.size() ; ++v)
        degrees.push_back(k4.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{ 2, 2, 2, 3, 3 });

    CHECK_THROWS_AS(dy_transform(path({ "a", "b", "c" }), { "a", "b", "c" }), NotATriangle);
}

TEST_CASE("dy then yd round trips when the triangle was isolated from extra adjacencies")
{
    std::mt19937 rng(5);
    int checked = 0;
    for (int round = 0 ; round < 300 ; ++round) {
        auto g = oracle::to_graph(oracle::random_graph(7, 0.5, rng));
        for (auto & t : triangles(g)) {
            std::string y;
            auto h = dy_transform(g, { g.label(t[0]), g.label(t[1]), g.label(t[2]) }, &y);
            auto back = yd_transform(h, y);
            CHECK(is_isomorphic(back, g));
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("is_isomorphic")
{
    std::mt19937 rng(3);
    auto k4 = complete_graph(4);
    auto iso = find_isomorphism(k4, shuffled(k4, rng));
    REQUIRE(iso);
    CHECK(is_isomorphism(k4, shuffled(k4, rng), *iso));

    Graph two_triangles;
    for (auto l : { "a", "b", "c", "d", "e", "f" })
        two_triangles.add_vertex(l);
    for (auto [u, v] : { std::pair{ "a", "b" }, { "b", "c" }, { "c", "a" }, { "d", "e" }, { "e", "f" }, { "f", "d" } })
        two_triangles.add_edge(u, v);
    CHECK(! is_isomorphic(complete_bipartite(3, 3), two_triangles));
    CHECK(! is_isomorphic(cycle_graph(6), two_triangles));
}

TEST_CASE("is_isomorphic agrees with the canonical-code oracle and behaves as an equivalence")
{
    std::mt19937 rng(17);
    std::vector<oracle::Small> corpus;
    for (int i = 0 ; i < 60 ; ++i)
        corpus.push_back(oracle::random_graph(6, 0.5, rng));
    for (std::size_t i = 0 ; i < corpus.size() ; ++i) {
        auto a = oracle::to_graph(corpus[i]);
        CHECK(is_isomorphic(a, shuffled(a, rng)));
        for (std::size_t j = 0 ; j < corpus.size() ; ++j) {
            auto b = oracle::to_graph(corpus[j]);
            auto mine = find_isomorphism(a, b);
            CHECK(mine.has_value() == oracle::isomorphic_small(corpus[i], corpus[j]));
            if (mine)
                CHECK(is_isomorphism(a, b, *mine));
            CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
        }
    }
}

TEST_CASE("is_bipartite")
{
    auto k35 = is_bipartite(complete_bipartite(3, 5));
    CHECK(k35.bipartite);
    auto g = complete_bipartite(3, 5);
    for (auto & e : g.edges())
        CHECK(k35.colour[e.u] != k35.colour[e.v]);

    auto k3 = complete_graph(3);
    auto r = is_bipartite(k3);
    CHECK(! r.bipartite);
    CHECK(r.odd_cycle.size() == 3);

    auto c5 = cycle_graph(5);
    auto odd = is_bipartite(c5).odd_cycle;
    REQUIRE(odd.size() % 2 == 1);
    for (std::size_t i = 0 ; i < odd.size() ; ++i)
        CHECK(c5.adjacent(odd[i], odd[(i + 1) % odd.size()]));
}
