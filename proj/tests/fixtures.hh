#ifndef EMUL_GUARD_TESTS_FIXTURES_HH
#define EMUL_GUARD_TESTS_FIXTURES_HH 1

#include <emul/graph.hh>
#include <emul/projection.hh>

#include <string>
#include <vector>

namespace fixtures
{
    inline auto triangle() -> emul::Graph
    {
        return emul::parse_graph("vertices: a b c\na b\nb c\nc a\n");
    }

    inline auto hexagon_over_triangle(bool with_chord) -> emul::Projection
    {
        auto host = emul::parse_graph("vertices: a1 b1 c1 a2 b2 c2\na1 b1\nb1 c1\nc1 a2\na2 b2\nb2 c2\nc2 a1\n");
        if (with_chord)
            host.add_edge("a1", "b2");
        auto target = triangle();
        std::vector<emul::VertexId> map;
        for (auto & l : host.labels())
            map.push_back(target.id(l.substr(0, 1)));
        return emul::Projection(host, target, map);
    }

    inline auto cube() -> emul::Graph
    {
        return emul::parse_graph("vertices: 0 1 2 3 4 5 6 7\n0 1\n0 2\n0 4\n1 3\n1 5\n2 3\n2 6\n3 7\n4 5\n4 6\n5 7\n6 7\n");
    }

    // K4 on 1..4 with every edge subdivided, plus 0 joined to the six subdivision vertices
    inline auto e2() -> emul::Graph
    {
        emul::Graph g;
        for (auto l : { "0", "1", "2", "3", "4" })
            g.add_vertex(l);
        for (int a = 1 ; a <= 4 ; ++a)
            for (int b = a + 1 ; b <= 4 ; ++b) {
                auto m = std::to_string(a) + std::to_string(b);
                g.add_vertex(m);
                g.add_edge(std::to_string(a), m);
                g.add_edge(std::to_string(b), m);
                g.add_edge("0", m);
            }
        return g;
    }

    // K7 minus the 4-cycle 4 5 6 7
    inline auto k7_minus_c4() -> emul::Graph
    {
        auto g = emul::complete_graph(7);
        emul::Graph h;
        for (auto & l : g.labels())
            h.add_vertex(l);
        for (auto & e : g.edges()) {
            auto a = g.label(e.u), b = g.label(e.v);
            auto in_cycle = [&] (const std::string & x, const std::string & y) {
                return (x == "4" && y == "5") || (x == "5" && y == "6") || (x == "6" && y == "7") || (x == "4" && y == "7");
            };
            if (! in_cycle(a, b))
                h.add_edge(a, b);
        }
        return h;
    }

    inline auto k1222() -> emul::Graph
    {
        return emul::parse_graph("vertices: 0 a1 a2 b1 b2 c1 c2\n"
                "0 a1\n0 a2\n0 b1\n0 b2\n0 c1\n0 c2\n"
                "a1 b1\na1 b2\na1 c1\na1 c2\na2 b1\na2 b2\na2 c1\na2 c2\n"
                "b1 c1\nb1 c2\nb2 c1\nb2 c2\n");
    }
}

#endif
