#include <emul/lifts.hh>
#include <emul/errors.hh>
#include <emul/plane_map.hh>
#include <emul/transform.hh>

#include <algorithm>
#include <map>
#include <numeric>

using namespace emul;

using std::string;
using std::vector;

namespace
{
    auto require_emulator(const Projection & p, const string & op) -> void
    {
        if (! verify_emulator(p).valid)
            throw InvalidInput(op + ": input is not a valid emulator projection");
    }

    auto certify(Projection p, const string & op) -> Projection
    {
        if (! verify_emulator(p).valid)
            throw InvariantBroken(op + ": output fails emulator verification");
        return p;
    }

    auto target_id(const Projection & p, const string & v, const string & op) -> VertexId
    {
        auto t = p.target().find(v);
        if (! t)
            throw InvalidInput(op + ": '" + v + "' is not a target vertex");
        return *t;
    }

    // host restricted to keep, with the map translated to new_target by label
    auto restrict(const Projection & p, const vector<bool> & keep, const Graph & new_target,
            const vector<Edge> & skip_edges) -> Projection
    {
        Graph host;
        vector<VertexId> id(p.host().size(), -1), map;
        for (VertexId v = 0 ; v < p.host().size() ; ++v)
            if (keep[v]) {
                id[v] = host.add_vertex(p.host().label(v));
                map.push_back(new_target.id(p.target().label(p.image(v))));
            }
        for (auto & e : p.host().edges())
            if (id[e.u] != -1 && id[e.v] != -1 && ! std::binary_search(skip_edges.begin(), skip_edges.end(), e))
                host.add_edge(id[e.u], id[e.v]);
        return Projection(std::move(host), new_target, std::move(map));
    }
}

auto emul::lift_delete_vertex(const Projection & p, const string & target_vertex) -> Projection
{
    string op = "lift_delete_vertex";
    auto t = target_id(p, target_vertex, op);
    require_emulator(p, op);

    vector<bool> keep(p.host().size());
    for (VertexId v = 0 ; v < p.host().size() ; ++v)
        keep[v] = p.image(v) != t;
    return certify(restrict(p, keep, delete_vertex(p.target(), target_vertex), {}), op);
}

auto emul::lift_delete_edge(const Projection & p, const string & a, const string & b) -> Projection
{
    string op = "lift_delete_edge";
    auto ta = target_id(p, a, op), tb = target_id(p, b, op);
    if (! p.target().adjacent(ta, tb))
        throw InvalidInput(op + ": {" + a + ", " + b + "} is not a target edge");
    require_emulator(p, op);

    vector<Edge> representing;
    for (auto & e : p.host().edges())
        if (Edge(p.image(e.u), p.image(e.v)) == Edge(ta, tb))
            representing.push_back(e);
    std::sort(representing.begin(), representing.end());

    vector<bool> keep(p.host().size(), true);
    return certify(restrict(p, keep, delete_edge(p.target(), a, b), representing), op);
}

auto emul::lift_contract_edge(const Projection & p, const string & a, const string & b) -> Projection
{
    string op = "lift_contract_edge";
    auto ta = target_id(p, a, op), tb = target_id(p, b, op);
    if (! p.target().adjacent(ta, tb))
        throw InvalidInput(op + ": {" + a + ", " + b + "} is not a target edge");
    require_emulator(p, op);

    auto & host = p.host();
    int n = host.size();

    // components of the subgraph formed by the edges representing {a, b}
    vector<VertexId> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<VertexId (VertexId)> find = [&] (VertexId v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (auto & e : host.edges())
        if (Edge(p.image(e.u), p.image(e.v)) == Edge(ta, tb))
            parent[find(e.u)] = find(e.v);

    // representative: smallest label in the component
    vector<VertexId> rep(n);
    for (VertexId v = 0 ; v < n ; ++v)
        rep[v] = v;
    std::map<VertexId, VertexId> best;
    for (VertexId v = 0 ; v < n ; ++v) {
        auto r = find(v);
        auto i = best.find(r);
        if (i == best.end() || host.label(v) < host.label(i->second))
            best[r] = v;
    }
    for (VertexId v = 0 ; v < n ; ++v)
        rep[v] = best[find(v)];

    auto new_target = contract_edge(p.target(), a, b);
    auto merged = new_target.id(std::min(a, b));

    Graph new_host;
    vector<VertexId> id(n, -1), map;
    for (VertexId v = 0 ; v < n ; ++v)
        if (rep[v] == v) {
            id[v] = new_host.add_vertex(host.label(v));
            auto t = p.image(v);
            map.push_back(t == ta || t == tb ? merged : new_target.id(p.target().label(t)));
        }
    for (auto & e : host.edges()) {
        auto u = rep[e.u], w = rep[e.v];
        if (u != w)
            new_host.add_edge(id[u], id[w]);
    }
    return certify(Projection(std::move(new_host), std::move(new_target), std::move(map)), op);
}

namespace
{
    auto check_embedding_matches(const Projection & p, const Embedding & e, const string & op) -> void
    {
        if (! (e.graph() == p.host()))
            throw InvalidInput(op + ": embedding is not over the projection's host graph");
        if (! euler_check(e))
            throw InvalidInput(op + ": host embedding is not plane");
    }

    auto word_at(const PlaneMap & m, int x) -> vector<VertexId>
    {
        vector<VertexId> w;
        for (auto y : m.neighbours(x))
            w.push_back(m.image(y));
        return w;
    }

    struct Normalizer
    {
        PlaneMap & map;
        const vector<bool> & in_x;

        auto candidates() const -> vector<int>
        {
            vector<int> result;
            for (int v = 0 ; v < map.vertex_count() ; ++v)
                if (map.alive(v) && in_x[map.image(v)] && map.degree(v) > 3)
                    result.push_back(v);
            std::sort(result.begin(), result.end(), [&] (int a, int b) { return map.label(a) < map.label(b); });
            return result;
        }

        auto excess() const -> int
        {
            int total = 0;
            for (int v = 0 ; v < map.vertex_count() ; ++v)
                if (map.alive(v) && in_x[map.image(v)])
                    total += map.degree(v) - 3;
            return total;
        }

        // applies one step; false when every vertex over X has degree 3
        auto step(Normalization & n) -> bool
        {
            auto todo = candidates();
            if (todo.empty())
                return false;

            for (auto x : todo) {
                auto w = word_at(map, x);
                for (std::size_t i = 0 ; i < w.size() ; ++i)
                    if (w[i] == w[(i + 1) % w.size()]) {
                        map.merge_neighbours(x, i);
                        ++n.merges;
                        return true;
                    }
            }

            for (auto x : todo) {
                auto w = word_at(map, x);
                auto d = w.size();
                for (std::size_t j = 0 ; j < d ; ++j) {
                    auto a = w[j], b = w[(j + 1) % d];
                    if (w[(j + 2) % d] != a)
                        continue;
                    // first letter after the pattern that is neither a nor b
                    for (std::size_t k = 3 ; k < d ; ++k) {
                        auto c = w[(j + k) % d];
                        if (c != a && c != b) {
                            map.split_arcs(x, (j + 1) % d, (j + k) % d);
                            ++n.arc_splits;
                            return true;
                        }
                    }
                    throw InvariantBroken("normalization: neighbour word misses a label");
                }
            }

            auto x = todo.front();
            auto w = word_at(map, x);
            for (std::size_t i = 0 ; i < w.size() ; ++i)
                if (w[i] != w[(i + 3) % w.size()])
                    throw InvariantBroken("normalization: neighbour word is not periodic");
            map.split_triples(x);
            ++n.triple_splits;
            return true;
        }
    };
}

auto emul::normalize_fiber_degrees(const Projection & p, const Embedding & host_embedding,
        const vector<string> & X) -> Normalization
{
    string op = "normalize_fiber_degrees";
    auto & target = p.target();
    vector<bool> in_x(target.size(), false);
    for (auto & v : X) {
        auto t = target_id(p, v, op);
        if (target.degree(t) != 3)
            throw DegreeMismatch(op + ": '" + v + "' has target degree " + std::to_string(target.degree(t)));
        in_x[t] = true;
    }
    for (auto & e : target.edges())
        if (in_x[e.u] && in_x[e.v])
            throw NotIndependent(op + ": '" + target.label(e.u) + "' and '" + target.label(e.v) + "' are adjacent");
    require_emulator(p, op);
    check_embedding_matches(p, host_embedding, op);

    PlaneMap map(host_embedding, p.map());
    Normalizer normalizer{ map, in_x };
    Normalization result{ EmbeddedProjection{ p, host_embedding }, {}, 0, 0, 0 };
    result.excess_trace.push_back(normalizer.excess());
    while (normalizer.step(result)) {
        auto e = normalizer.excess();
        if (e >= result.excess_trace.back())
            throw InvariantBroken(op + ": excess degree did not decrease");
        result.excess_trace.push_back(e);
    }

    auto emb = map.export_embedding();
    if (! euler_check(emb))
        throw InvariantBroken(op + ": result is not plane");
    auto out = certify(Projection(emb.graph(), target, map.export_map()), op);
    result.result = EmbeddedProjection{ std::move(out), std::move(emb) };
    return result;
}

auto emul::lift_yd(const Projection & p, const string & v, const Embedding & host_embedding) -> EmbeddedProjection
{
    string op = "lift_yd";
    auto t = target_id(p, v, op);
    if (p.target().degree(t) != 3)
        throw DegreeMismatch(op + ": '" + v + "' has target degree " + std::to_string(p.target().degree(t)));

    auto normalized = normalize_fiber_degrees(p, host_embedding, { v }).result;
    auto & np = normalized.projection;

    PlaneMap map(normalized.embedding, np.map());
    for (int u = 0 ; u < map.vertex_count() ; ++u)
        if (map.alive(u) && map.image(u) == t)
            map.yd(u);

    auto new_target = yd_transform(p.target(), v);
    auto emb = map.export_embedding();
    if (! euler_check(emb))
        throw InvariantBroken(op + ": result is not plane");
    vector<VertexId> images;
    for (auto i : map.export_map())
        images.push_back(new_target.id(p.target().label(i)));
    auto out = certify(Projection(emb.graph(), std::move(new_target), std::move(images)), op);
    return EmbeddedProjection{ std::move(out), std::move(emb) };
}

auto emul::lift_yd(const Projection & p, const string & v) -> EmbeddedProjection
{
    auto planarity = test_planarity(p.host());
    if (! planarity.planar)
        throw InvalidInput("lift_yd: host graph is not planar");
    return lift_yd(p, v, *planarity.embedding);
}
