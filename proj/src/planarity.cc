#include <emul/planarity.hh>
#include <emul/errors.hh>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace emul;

using std::array;
using std::map;
using std::optional;
using std::set;
using std::string;
using std::vector;

Embedding::Embedding(Graph graph, vector<vector<VertexId>> rotation) :
    _graph(std::move(graph)),
    _rotation(std::move(rotation))
{
    if (int(_rotation.size()) != _graph.size())
        throw CorruptRotation("rotation system has " + std::to_string(_rotation.size())
                + " entries for " + std::to_string(_graph.size()) + " vertices");

    _position.resize(_graph.size());
    for (VertexId v = 0 ; v < _graph.size() ; ++v) {
        auto & nbrs = _graph.neighbours(v);
        auto & rot = _rotation[v];
        if (rot.size() != nbrs.size())
            throw CorruptRotation("rotation at '" + _graph.label(v) + "' does not list its incident edges");
        _position[v].assign(nbrs.size(), -1);
        for (std::size_t i = 0 ; i < rot.size() ; ++i) {
            auto it = std::lower_bound(nbrs.begin(), nbrs.end(), rot[i]);
            if (it == nbrs.end() || *it != rot[i])
                throw CorruptRotation("rotation at '" + _graph.label(v) + "' names a non-neighbour");
            auto k = it - nbrs.begin();
            if (_position[v][k] != -1)
                throw CorruptRotation("rotation at '" + _graph.label(v) + "' repeats '" + _graph.label(rot[i]) + "'");
            _position[v][k] = int(i);
        }
    }
}

auto Embedding::index_of(VertexId v, VertexId w) const -> int
{
    auto & nbrs = _graph.neighbours(v);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), w);
    if (it == nbrs.end() || *it != w)
        throw CorruptRotation("'" + _graph.label(w) + "' is not a neighbour of '" + _graph.label(v) + "'");
    return _position[v][it - nbrs.begin()];
}

auto Embedding::successor(VertexId v, VertexId w) const -> VertexId
{
    auto & rot = _rotation[v];
    return rot[(index_of(v, w) + 1) % rot.size()];
}

auto Embedding::predecessor(VertexId v, VertexId w) const -> VertexId
{
    auto & rot = _rotation[v];
    return rot[(index_of(v, w) + rot.size() - 1) % rot.size()];
}

auto Embedding::next_dart(Dart d) const -> Dart
{
    return Dart{ d.to, successor(d.to, d.from) };
}

auto emul::faces(const Embedding & e) -> vector<Face>
{
    auto & g = e.graph();
    vector<Face> result;
    set<Dart> seen;
    for (VertexId u = 0 ; u < g.size() ; ++u)
        for (auto v : e.rotation(u)) {
            Dart start{ u, v };
            if (seen.contains(start))
                continue;
            Face f;
            auto d = start;
            do {
                if (! seen.insert(d).second)
                    throw CorruptRotation("face walk from ('" + g.label(u) + "', '" + g.label(v) + "') does not close");
                f.boundary.push_back(d);
                d = e.next_dart(d);
            } while (d != start);
            result.push_back(std::move(f));
        }
    return result;
}

auto emul::euler_check(const Embedding & e) -> bool
{
    auto & g = e.graph();
    auto comps = connected_components(g);
    vector<int> comp_of(g.size());
    for (std::size_t c = 0 ; c < comps.size() ; ++c)
        for (auto v : comps[c])
            comp_of[v] = int(c);

    vector<long> chi(comps.size(), 0);
    for (VertexId v = 0 ; v < g.size() ; ++v)
        ++chi[comp_of[v]];
    for (auto & ed : g.edges())
        --chi[comp_of[ed.u]];
    for (auto & f : faces(e))
        ++chi[comp_of[f.boundary.front().from]];
    for (std::size_t c = 0 ; c < comps.size() ; ++c) {
        if (comps[c].size() == 1)
            ++chi[c];
        if (chi[c] != 2)
            return false;
    }
    return true;
}

auto emul::topology_name(Topology t) -> string
{
    switch (t) {
        case Topology::K5: return "K5";
        case Topology::K33: return "K3,3";
        case Topology::K4: return "K4";
        case Topology::K23: return "K2,3";
    }
    return "?";
}

auto emul::recognise_subdivision(const Graph & g, const vector<Edge> & edges) -> optional<Topology>
{
    if (edges.empty())
        return std::nullopt;

    map<VertexId, vector<VertexId>> adj;
    set<Edge> seen;
    for (auto & e : edges) {
        if (e.u < 0 || e.v >= g.size() || ! g.adjacent(e.u, e.v) || ! seen.insert(e).second)
            return std::nullopt;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }

    vector<VertexId> branch;
    for (auto & [v, ns] : adj) {
        if (ns.size() < 2)
            return std::nullopt;
        if (ns.size() >= 3)
            branch.push_back(v);
    }

    // walk the threads between branch vertices, marking darts both ways
    vector<array<VertexId, 2>> threads;
    vector<std::size_t> thread_interior;
    set<Dart> used;
    std::size_t covered = 0;
    for (auto b : branch)
        for (auto w : adj[b]) {
            if (used.contains(Dart{ b, w }))
                continue;
            auto prev = b, cur = w;
            std::size_t interior = 0;
            used.insert(Dart{ prev, cur });
            used.insert(Dart{ cur, prev });
            while (adj[cur].size() == 2) {
                auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                used.insert(Dart{ prev, cur });
                used.insert(Dart{ cur, prev });
                ++interior;
            }
            if (cur == b)
                return std::nullopt;
            threads.push_back({ std::min(b, cur), std::max(b, cur) });
            thread_interior.push_back(interior);
            covered += interior + 1;
        }

    // an uncovered edge lies on a cycle avoiding every branch vertex
    if (covered != edges.size())
        return std::nullopt;

    map<array<VertexId, 2>, int> multiplicity;
    for (auto & t : threads)
        ++multiplicity[t];
    auto & unique_threads = threads;

    auto nb = branch.size();
    auto nt = unique_threads.size();
    bool simple = true;
    for (auto & [t, m] : multiplicity)
        if (m != 1)
            simple = false;

    Graph core;
    for (auto b : branch)
        core.add_vertex(g.label(b));
    if (simple)
        for (auto & t : unique_threads)
            core.add_edge(g.label(t[0]), g.label(t[1]));
    if (simple && ! is_connected(core))
        return std::nullopt;

    auto degree_all = [&] (int d) {
        for (VertexId v = 0 ; v < core.size() ; ++v)
            if (core.degree(v) != d)
                return false;
        return true;
    };

    if (simple && nb == 5 && nt == 10 && degree_all(4))
        return Topology::K5;
    if (simple && nb == 4 && nt == 6 && degree_all(3))
        return Topology::K4;
    if (simple && nb == 6 && nt == 9 && degree_all(3)) {
        auto bip = is_bipartite(core);
        if (bip.bipartite)
            return Topology::K33;
    }
    if (nb == 2 && nt == 3 && multiplicity.size() == 1) {
        // a theta graph; K2,3 needs an interior vertex on every thread
        for (auto i : thread_interior)
            if (i == 0)
                return std::nullopt;
        return Topology::K23;
    }
    return std::nullopt;
}

namespace
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
          boost::property<boost::vertex_index_t, int>, boost::property<boost::edge_index_t, int>>;
    using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

    struct BoostOutcome
    {
        bool planar;
        vector<vector<VertexId>> rotation;
        vector<Edge> kuratowski;
    };

    auto run_boyer_myrvold(int n, const vector<Edge> & edges, bool want_embedding, bool want_witness) -> BoostOutcome
    {
        using namespace boost;
        BoostGraph bg(n);
        for (auto & e : edges)
            add_edge(e.u, e.v, bg);

        int count = 0;
        auto edge_ids = get(edge_index, bg);
        graph_traits<BoostGraph>::edge_iterator ei, ei_end;
        for (tie(ei, ei_end) = boost::edges(bg) ; ei != ei_end ; ++ei)
            put(edge_ids, *ei, count++);

        BoostOutcome outcome;
        vector<vector<BoostEdge>> storage(n);
        vector<BoostEdge> kuratowski;
        if (want_embedding || want_witness)
            outcome.planar = boyer_myrvold_planarity_test(
                    boyer_myrvold_params::graph = bg,
                    boyer_myrvold_params::embedding = make_iterator_property_map(storage.begin(), get(vertex_index, bg)),
                    boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
        else
            outcome.planar = boyer_myrvold_planarity_test(bg);

        if (outcome.planar && want_embedding) {
            outcome.rotation.resize(n);
            for (VertexId v = 0 ; v < n ; ++v)
                for (auto & e : storage[v]) {
                    auto s = VertexId(source(e, bg)), t = VertexId(target(e, bg));
                    outcome.rotation[v].push_back(s == v ? t : s);
                }
        }
        if (! outcome.planar && want_witness) {
            for (auto & e : kuratowski)
                outcome.kuratowski.emplace_back(VertexId(source(e, bg)), VertexId(target(e, bg)));
            std::sort(outcome.kuratowski.begin(), outcome.kuratowski.end());
            outcome.kuratowski.erase(std::unique(outcome.kuratowski.begin(), outcome.kuratowski.end()), outcome.kuratowski.end());
        }
        return outcome;
    }
}

auto emul::test_planarity(const Graph & g) -> PlanarityResult
{
    int n = g.size();
    auto outcome = run_boyer_myrvold(n, g.edges(), true, true);

    PlanarityResult result;
    result.planar = outcome.planar;
    if (outcome.planar) {
        Embedding emb(g, std::move(outcome.rotation));
        if (! euler_check(emb))
            throw InvariantBroken("planarity: embedding fails the Euler check");
        result.embedding = std::move(emb);
        return result;
    }

    auto witness = outcome.kuratowski;
    auto kind = recognise_subdivision(g, witness);
    if (! kind) {
        // the extracted subgraph may carry extra edges: drop every edge whose
        // removal keeps it nonplanar, leaving an edge-minimal nonplanar graph
        for (std::size_t i = 0 ; i < witness.size() ; ) {
            auto trial = witness;
            trial.erase(trial.begin() + i);
            if (! run_boyer_myrvold(n, trial, false, false).planar)
                witness = std::move(trial);
            else
                ++i;
        }
        kind = recognise_subdivision(g, witness);
    }
    if (! kind || (*kind != Topology::K5 && *kind != Topology::K33))
        throw InvariantBroken("planarity: witness is not a K5 or K3,3 subdivision");
    result.kuratowski = std::move(witness);
    result.kuratowski_kind = kind;
    return result;
}

auto emul::is_planar(const Graph & g) -> bool
{
    return test_planarity(g).planar;
}

auto emul::is_flat_separation(const Graph & g, const array<string, 3> & boundary, const vector<string> & side) -> bool
{
    vector<bool> in_side(g.size(), false);
    for (auto & s : side) {
        auto v = g.find(s);
        if (! v)
            throw InvalidSeparation("side vertex '" + s + "' is not in the graph");
        in_side[*v] = true;
    }

    array<VertexId, 3> b;
    for (int i = 0 ; i < 3 ; ++i) {
        auto v = g.find(boundary[i]);
        if (! v)
            throw InvalidSeparation("boundary vertex '" + boundary[i] + "' is not in the graph");
        if (! in_side[*v])
            throw InvalidSeparation("boundary vertex '" + boundary[i] + "' is not on the side");
        b[i] = *v;
    }
    if (b[0] == b[1] || b[1] == b[2] || b[0] == b[2])
        throw InvalidSeparation("boundary vertices must be distinct");

    vector<bool> is_boundary(g.size(), false);
    for (auto v : b)
        is_boundary[v] = true;
    for (auto & e : g.edges()) {
        bool a = in_side[e.u] && ! is_boundary[e.u], c = ! in_side[e.v];
        bool a2 = in_side[e.v] && ! is_boundary[e.v], c2 = ! in_side[e.u];
        if ((a && c) || (a2 && c2))
            throw InvalidSeparation("edge {" + g.label(e.u) + ", " + g.label(e.v) + "} crosses the separation");
    }

    vector<VertexId> members;
    for (VertexId v = 0 ; v < g.size() ; ++v)
        if (in_side[v])
            members.push_back(v);
    auto h = induced_subgraph(g, members);
    auto apex = h.add_vertex(fresh_label(h, "apex"));
    for (auto v : b)
        h.add_edge(apex, h.id(g.label(v)));
    return is_planar(h);
}

auto emul::read_rotation_text(std::istream & in, bool allow_signs) -> RotationText
{
    RotationText text;
    set<string> declared;
    string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != string::npos)
            line = line.substr(0, hash);
        std::istringstream s(line);
        string head;
        if (! (s >> head))
            continue;
        if (head.size() < 2 || head.back() != ':')
            throw ParseError(line_number, "expected 'vertex: neighbours...'");
        head.pop_back();
        if (! declared.insert(head).second)
            throw ParseError(line_number, "vertex '" + head + "' listed twice");

        text.vertices.push_back(head);
        text.lines.push_back(line_number);
        auto & rot = text.rotation.emplace_back();
        auto & sg = text.signs.emplace_back();
        string w;
        while (s >> w) {
            int sign = 1;
            if (w.size() > 1 && w[0] == '-' && allow_signs) {
                sign = -1;
                w = w.substr(1);
            }
            else if (w.size() > 1 && w[0] == '+' && allow_signs)
                w = w.substr(1);
            rot.push_back(w);
            sg.push_back(sign);
        }
    }
    return text;
}

auto emul::embedding_from_text(const RotationText & text) -> Embedding
{
    Graph g;
    for (auto & v : text.vertices)
        g.add_vertex(v);

    map<std::pair<VertexId, VertexId>, int> listed;
    for (std::size_t i = 0 ; i < text.vertices.size() ; ++i) {
        for (auto & w : text.rotation[i]) {
            auto t = g.find(w);
            if (! t)
                throw ParseError(text.lines[i], "neighbour '" + w + "' has no rotation line");
            if (*t == VertexId(i))
                throw ParseError(text.lines[i], "self-loop at '" + w + "'");
            if (++listed[{ VertexId(i), *t }] > 1)
                throw ParseError(text.lines[i], "neighbour '" + w + "' repeated");
        }
    }
    for (auto & [p, _] : listed) {
        if (! listed.contains({ p.second, p.first }))
            throw ParseError(text.lines[p.first], "edge {" + g.label(p.first) + ", " + g.label(p.second)
                    + "} is missing from the rotation at '" + g.label(p.second) + "'");
        g.add_edge(p.first, p.second);
    }

    vector<vector<VertexId>> rotation(g.size());
    for (std::size_t i = 0 ; i < text.vertices.size() ; ++i)
        for (auto & w : text.rotation[i])
            rotation[i].push_back(g.id(w));
    return Embedding(std::move(g), std::move(rotation));
}

auto emul::read_embedding(std::istream & in) -> Embedding
{
    return embedding_from_text(read_rotation_text(in, false));
}

auto emul::parse_embedding(const string & text) -> Embedding
{
    std::istringstream s(text);
    return read_embedding(s);
}

auto emul::write_embedding(std::ostream & out, const Embedding & e) -> void
{
    auto & g = e.graph();
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        out << g.label(v) << ':';
        for (auto w : e.rotation(v))
            out << ' ' << g.label(w);
        out << '\n';
    }
}

auto emul::format_embedding(const Embedding & e) -> string
{
    std::ostringstream s;
    write_embedding(s, e);
    return s.str();
}
