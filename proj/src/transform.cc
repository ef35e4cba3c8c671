#include <emul/transform.hh>
#include <emul/errors.hh>

using namespace emul;

using std::array;
using std::string;
using std::vector;

namespace
{
    // copy of g without the vertices flagged in drop, remembering new ids
    auto copy_without(const Graph & g, const vector<bool> & drop, vector<VertexId> & map) -> Graph
    {
        Graph result;
        map.assign(g.size(), -1);
        for (VertexId v = 0 ; v < g.size() ; ++v)
            if (! drop[v])
                map[v] = result.add_vertex(g.label(v));
        for (auto & e : g.edges())
            if (map[e.u] != -1 && map[e.v] != -1)
                result.add_edge(map[e.u], map[e.v]);
        return result;
    }
}

auto emul::delete_vertex(const Graph & g, const string & v) -> Graph
{
    auto id = g.id(v);
    vector<bool> drop(g.size(), false);
    drop[id] = true;
    vector<VertexId> map;
    return copy_without(g, drop, map);
}

auto emul::delete_edge(const Graph & g, const string & u, const string & v) -> Graph
{
    auto a = g.find(u), b = g.find(v);
    if (! a || ! b || ! g.adjacent(*a, *b))
        throw UnknownEdge(u, v);

    Graph result;
    for (auto & l : g.labels())
        result.add_vertex(l);
    for (auto & e : g.edges())
        if (Edge(*a, *b) != e)
            result.add_edge(e.u, e.v);
    return result;
}

auto emul::contract_edge(const Graph & g, const string & u, const string & v) -> Graph
{
    auto a = g.find(u), b = g.find(v);
    if (! a || ! b || ! g.adjacent(*a, *b))
        throw UnknownEdge(u, v);

    auto keep = *a, gone = *b;
    if (g.label(gone) < g.label(keep))
        std::swap(keep, gone);

    vector<bool> drop(g.size(), false);
    drop[gone] = true;
    vector<VertexId> map;
    auto result = copy_without(g, drop, map);
    for (auto w : g.neighbours(gone))
        if (w != keep)
            result.add_edge(map[keep], map[w]);
    return result;
}

auto emul::yd_transform(const Graph & g, const string & v) -> Graph
{
    auto id = g.id(v);
    if (g.degree(id) != 3)
        throw DegreeMismatch("vertex '" + v + "' has degree " + std::to_string(g.degree(id)) + ", expected 3");

    auto n = g.neighbours(id);
    vector<bool> drop(g.size(), false);
    drop[id] = true;
    vector<VertexId> map;
    auto result = copy_without(g, drop, map);
    result.add_edge(map[n[0]], map[n[1]]);
    result.add_edge(map[n[1]], map[n[2]]);
    result.add_edge(map[n[0]], map[n[2]]);
    return result;
}

auto emul::dy_transform(const Graph & g, const array<string, 3> & t, string * new_label) -> Graph
{
    array<VertexId, 3> ids;
    for (int i = 0 ; i < 3 ; ++i) {
        auto f = g.find(t[i]);
        if (! f)
            throw NotATriangle("'" + t[i] + "' is not a vertex");
        ids[i] = *f;
    }
    for (int i = 0 ; i < 3 ; ++i)
        if (ids[i] == ids[(i + 1) % 3] || ! g.adjacent(ids[i], ids[(i + 1) % 3]))
            throw NotATriangle("{" + t[0] + ", " + t[1] + ", " + t[2] + "} does not induce a triangle");

    Graph result;
    for (auto & l : g.labels())
        result.add_vertex(l);
    for (auto & e : g.edges()) {
        bool in_t = false;
        for (int i = 0 ; i < 3 ; ++i)
            if (Edge(ids[i], ids[(i + 1) % 3]) == e)
                in_t = true;
        if (! in_t)
            result.add_edge(e.u, e.v);
    }

    auto label = fresh_label(g, "y" + t[0] + t[1] + t[2]);
    auto y = result.add_vertex(label);
    for (auto i : ids)
        result.add_edge(y, i);
    if (new_label)
        *new_label = label;
    return result;
}

auto emul::triangles(const Graph & g) -> vector<array<VertexId, 3>>
{
    vector<array<VertexId, 3>> result;
    for (VertexId a = 0 ; a < g.size() ; ++a)
        for (auto b : g.neighbours(a))
            if (b > a)
                for (auto c : g.neighbours(b))
                    if (c > b && g.adjacent(a, c))
                        result.push_back({a, b, c});
    return result;
}
