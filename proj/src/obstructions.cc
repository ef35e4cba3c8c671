#include <emul/obstructions.hh>
#include <emul/errors.hh>

#include <algorithm>
#include <bit>
#include <set>

using namespace emul;

using std::array;
using std::optional;
using std::set;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    auto bit(int i) -> uint64_t
    {
        return uint64_t{1} << i;
    }

    auto members(uint64_t s) -> vector<VertexId>
    {
        vector<VertexId> result;
        for ( ; s ; s &= s - 1)
            result.push_back(std::countr_zero(s));
        return result;
    }

    auto connected_within(const vector<uint64_t> & adj, uint64_t s) -> bool
    {
        if (! s)
            return false;
        uint64_t seen = s & -s, frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            for (auto v : members(frontier))
                next |= adj[v];
            next &= s & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == s;
    }

    auto contract_outside(const Graph & g, const vector<VertexId> & inside) -> Graph
    {
        vector<bool> in(g.size(), false);
        for (auto v : inside)
            in[v] = true;
        auto h = induced_subgraph(g, inside);
        auto rest = h.add_vertex(fresh_label(h, "rest"));
        for (auto & e : g.edges())
            if (in[e.u] != in[e.v])
                h.add_edge(rest, h.id(g.label(in[e.u] ? e.u : e.v)));
        return h;
    }

    // spanning subdivisions of K4 or K2,3 with vertex set exactly s
    struct SubdivisionSearch
    {
        const vector<uint64_t> & adj;
        uint64_t s;
        NodeCounter & counter;
        vector<array<VertexId, 2>> threads;
        bool need_interior = false;
        uint64_t used = 0;
        vector<Edge> edges;

        SubdivisionSearch(const vector<uint64_t> & a, uint64_t set, NodeCounter & c) :
            adj(a), s(set), counter(c)
        {
        }

        auto extend(std::size_t t, VertexId at, int length, VertexId min_first) -> bool
        {
            counter.tick();
            auto target = threads[t][1];
            if (adj[at] & bit(target) && (length > 0 || ! need_interior)) {
                edges.emplace_back(at, target);
                if (place(t + 1))
                    return true;
                edges.pop_back();
            }
            for (auto w : members(adj[at] & s & ~used)) {
                if (length == 0 && w < min_first)
                    continue;
                used |= bit(w);
                edges.emplace_back(at, w);
                if (extend(t, w, length + 1, 0))
                    return true;
                edges.pop_back();
                used &= ~bit(w);
            }
            return false;
        }

        auto place(std::size_t t) -> bool
        {
            if (t == threads.size())
                return used == s;
            // parallel threads of a theta are interchangeable
            VertexId min_first = 0;
            if (need_interior && t > 0) {
                for (auto & e : edges)
                    if (e.u == threads[t - 1][0] || e.v == threads[t - 1][0])
                        min_first = std::max(min_first, e.u == threads[t - 1][0] ? e.v : e.u);
            }
            return extend(t, threads[t][0], 0, min_first);
        }

        auto run() -> optional<Topology>
        {
            auto vs = members(s);
            auto degree = [&] (VertexId v) { return std::popcount(adj[v] & s); };
            for (auto v : vs)
                if (degree(v) < 2)
                    return std::nullopt;

            vector<VertexId> cubic;
            for (auto v : vs)
                if (degree(v) >= 3)
                    cubic.push_back(v);

            auto n = cubic.size();
            for (std::size_t a = 0 ; a < n ; ++a)
                for (std::size_t b = a + 1 ; b < n ; ++b)
                    for (std::size_t c = b + 1 ; c < n ; ++c)
                        for (std::size_t d = c + 1 ; d < n ; ++d) {
                            array<VertexId, 4> br{ cubic[a], cubic[b], cubic[c], cubic[d] };
                            threads.clear();
                            for (int i = 0 ; i < 4 ; ++i)
                                for (int j = i + 1 ; j < 4 ; ++j)
                                    threads.push_back({ br[i], br[j] });
                            need_interior = false;
                            used = bit(br[0]) | bit(br[1]) | bit(br[2]) | bit(br[3]);
                            edges.clear();
                            if (place(0))
                                return Topology::K4;
                        }

            for (std::size_t a = 0 ; a < n ; ++a)
                for (std::size_t b = a + 1 ; b < n ; ++b) {
                    threads.assign(3, { cubic[a], cubic[b] });
                    need_interior = true;
                    used = bit(cubic[a]) | bit(cubic[b]);
                    edges.clear();
                    if (place(0))
                        return Topology::K23;
                }
            return std::nullopt;
        }
    };

    struct PairSearch
    {
        const Graph & g;
        int n;
        vector<uint64_t> adj;
        uint64_t all;
        NodeCounter counter;
        vector<uint64_t> found_sets;
        vector<KGraph> found;
        optional<KGraphPair> result;

        PairSearch(const Graph & graph, uint64_t budget) :
            g(graph), n(graph.size()), adj(graph.size(), 0),
            all(graph.size() == 64 ? ~uint64_t{0} : bit(graph.size()) - 1),
            counter(budget, "find_two_disjoint_kgraphs")
        {
            for (auto & e : g.edges()) {
                adj[e.u] |= bit(e.v);
                adj[e.v] |= bit(e.u);
            }
        }

        auto visit(uint64_t s) -> bool
        {
            counter.tick();
            if (std::popcount(s) < 4)
                return false;
            uint64_t rest = all & ~s;
            if (! connected_within(adj, rest))
                return false;
            bool touching = false;
            for (auto v : members(s))
                touching = touching || (adj[v] & rest);
            if (! touching)
                return false;

            auto inside = members(s);
            auto contraction = contract_outside(g, inside);
            auto planarity = test_planarity(contraction);
            if (planarity.planar)
                return false;

            SubdivisionSearch sub(adj, s, counter);
            auto kind = sub.run();
            if (! kind)
                return false;

            KGraph k{ *kind, sub.edges, std::move(contraction), planarity.kuratowski, *planarity.kuratowski_kind };
            for (std::size_t i = 0 ; i < found_sets.size() ; ++i)
                if (! (found_sets[i] & s)) {
                    result = KGraphPair{ found[i], std::move(k) };
                    return true;
                }
            found_sets.push_back(s);
            found.push_back(std::move(k));
            return false;
        }

        // every connected set is reached once: excluded vertices never return
        auto enumerate(uint64_t s, uint64_t candidates, uint64_t excluded) -> bool
        {
            if (visit(s))
                return true;
            while (candidates) {
                auto w = std::countr_zero(candidates);
                candidates &= ~bit(w);
                auto next = (candidates | adj[w]) & ~s & ~bit(w) & ~excluded;
                if (enumerate(s | bit(w), next, excluded))
                    return true;
                excluded |= bit(w);
            }
            return false;
        }

        auto run() -> optional<KGraphPair>
        {
            for (int v = 0 ; v < n ; ++v) {
                uint64_t lower = bit(v) - 1;
                if (enumerate(bit(v), adj[v] & ~lower, lower | bit(v)))
                    return result;
            }
            return std::nullopt;
        }
    };

    auto sorted_labels(const Graph & g, const vector<VertexId> & vs) -> vector<string>
    {
        vector<string> result;
        for (auto v : vs)
            result.push_back(g.label(v));
        std::sort(result.begin(), result.end());
        return result;
    }

    auto make_separation(const Graph & g, const vector<VertexId> & boundary,
            const vector<VertexId> & a, const vector<VertexId> & b) -> Separation
    {
        auto side_a = boundary, side_b = boundary;
        side_a.insert(side_a.end(), a.begin(), a.end());
        side_b.insert(side_b.end(), b.begin(), b.end());
        return Separation{ sorted_labels(g, boundary), sorted_labels(g, side_a), sorted_labels(g, side_b) };
    }

    auto components_without(const Graph & g, const vector<VertexId> & removed) -> vector<vector<VertexId>>
    {
        vector<bool> gone(g.size(), false);
        for (auto v : removed)
            gone[v] = true;
        vector<VertexId> keep;
        for (VertexId v = 0 ; v < g.size() ; ++v)
            if (! gone[v])
                keep.push_back(v);
        auto h = induced_subgraph(g, keep);
        auto comps = connected_components(h);
        for (auto & c : comps)
            for (auto & v : c)
                v = g.id(h.label(v));
        return comps;
    }

    auto flatten(const vector<vector<VertexId>> & comps, std::size_t from, std::size_t to) -> vector<VertexId>
    {
        vector<VertexId> result;
        for (auto i = from ; i < to ; ++i)
            result.insert(result.end(), comps[i].begin(), comps[i].end());
        return result;
    }
}

auto KGraph::vertices() const -> vector<VertexId>
{
    set<VertexId> vs;
    for (auto & e : edges) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    return { vs.begin(), vs.end() };
}

auto emul::find_two_disjoint_kgraphs(const Graph & g, uint64_t budget) -> optional<KGraphPair>
{
    if (g.size() > 64)
        throw InvalidInput("find_two_disjoint_kgraphs: at most 64 vertices");
    // contractions of a planar graph stay planar
    if (is_planar(g))
        return std::nullopt;

    PairSearch search(g, budget);
    auto result = search.run();
    if (result && ! is_kgraph_pair(g, *result))
        throw InvariantBroken("find_two_disjoint_kgraphs: returned pair fails certification");
    return result;
}

auto emul::is_kgraph_pair(const Graph & g, const KGraphPair & pair) -> bool
{
    vector<bool> taken(g.size(), false);
    for (auto * k : { &pair.first, &pair.second }) {
        for (auto & e : k->edges)
            if (e.u < 0 || e.v >= g.size() || ! g.adjacent(e.u, e.v))
                return false;
        auto topology = recognise_subdivision(g, k->edges);
        if (topology != k->kind || (k->kind != Topology::K4 && k->kind != Topology::K23))
            return false;

        auto vs = k->vertices();
        for (auto v : vs) {
            if (taken[v])
                return false;
            taken[v] = true;
        }

        vector<bool> in(g.size(), false);
        for (auto v : vs)
            in[v] = true;
        vector<VertexId> rest;
        for (VertexId v = 0 ; v < g.size() ; ++v)
            if (! in[v])
                rest.push_back(v);
        if (rest.empty() || ! is_connected(induced_subgraph(g, rest)))
            return false;
        bool touching = false;
        for (auto & e : g.edges())
            touching = touching || (in[e.u] != in[e.v]);
        if (! touching)
            return false;

        auto contraction = contract_outside(g, vs);
        if (! (contraction == k->contraction))
            return false;
        auto witness = recognise_subdivision(contraction, k->witness);
        if (witness != k->witness_kind || (k->witness_kind != Topology::K5 && k->witness_kind != Topology::K33))
            return false;
    }
    return true;
}

auto emul::is_internally_4_connected(const Graph & g) -> ConnectivityReport
{
    int n = g.size();
    if (n <= 4) {
        bool complete = int(g.edge_count()) == n * (n - 1) / 2;
        return { complete, std::nullopt };
    }

    // 3-connectivity: no separating set of size at most 2
    vector<vector<VertexId>> small_cuts{ {} };
    for (VertexId a = 0 ; a < n ; ++a)
        small_cuts.push_back({ a });
    for (VertexId a = 0 ; a < n ; ++a)
        for (VertexId b = a + 1 ; b < n ; ++b)
            small_cuts.push_back({ a, b });
    for (auto & cut : small_cuts) {
        auto comps = components_without(g, cut);
        if (comps.size() >= 2)
            return { false, make_separation(g, cut, comps[0], flatten(comps, 1, comps.size())) };
    }

    for (VertexId a = 0 ; a < n ; ++a)
        for (VertexId b = a + 1 ; b < n ; ++b)
            for (VertexId c = b + 1 ; c < n ; ++c) {
                vector<VertexId> t{ a, b, c };
                auto comps = components_without(g, t);
                if (comps.size() < 2)
                    continue;
                bool independent = ! g.adjacent(a, b) && ! g.adjacent(b, c) && ! g.adjacent(a, c);
                std::sort(comps.begin(), comps.end(), [] (auto & x, auto & y) { return x.size() > y.size(); });
                if (! independent)
                    return { false, make_separation(g, t, comps[0], flatten(comps, 1, comps.size())) };
                // a side induces K1,3 exactly when it has one vertex beyond the boundary
                std::size_t split = comps[0].size() >= 2 ? 1 : 2;
                auto side_a = flatten(comps, 0, split), side_b = flatten(comps, split, comps.size());
                if (side_a.size() >= 2 && side_b.size() >= 2)
                    return { false, make_separation(g, t, side_a, side_b) };
            }
    return { true, std::nullopt };
}

auto emul::find_nonflat_3_separation(const Graph & g) -> optional<Separation>
{
    int n = g.size();
    for (VertexId a = 0 ; a < n ; ++a)
        for (VertexId b = a + 1 ; b < n ; ++b)
            for (VertexId c = b + 1 ; c < n ; ++c) {
                vector<VertexId> t{ a, b, c };
                auto comps = components_without(g, t);
                if (comps.size() < 2)
                    continue;
                if (comps.size() > 20)
                    throw InvalidInput("find_nonflat_3_separation: too many components around one triple");
                array<string, 3> boundary{ g.label(a), g.label(b), g.label(c) };
                // the last component always sits on side b
                auto m = comps.size();
                for (uint64_t mask = 1 ; mask < bit(int(m) - 1) ; ++mask) {
                    vector<VertexId> side_a, side_b;
                    for (std::size_t i = 0 ; i < m ; ++i) {
                        auto & side = (i + 1 < m && (mask >> i) & 1) ? side_a : side_b;
                        side.insert(side.end(), comps[i].begin(), comps[i].end());
                    }
                    auto sep = make_separation(g, t, side_a, side_b);
                    if (! is_flat_separation(g, boundary, sep.side_a) && ! is_flat_separation(g, boundary, sep.side_b))
                        return sep;
                }
            }
    return std::nullopt;
}

auto emul::check_min_fiber(const Projection & p) -> bool
{
    if (! is_connected(p.target()))
        throw PreconditionUnmet("check_min_fiber: target is disconnected");
    if (is_planar(p.target()))
        throw PreconditionUnmet("check_min_fiber: target is planar");
    if (! is_planar(p.host()))
        throw PreconditionUnmet("check_min_fiber: host is not planar");
    if (! verify_emulator(p).valid)
        throw PreconditionUnmet("check_min_fiber: not a valid emulator");
    for (VertexId t = 0 ; t < p.target().size() ; ++t)
        if (p.fiber(t).size() < 2)
            return false;
    return true;
}
