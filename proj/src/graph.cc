#include <emul/graph.hh>
#include <emul/errors.hh>

#include <algorithm>
#include <queue>
#include <sstream>

using namespace emul;

using std::istream;
using std::optional;
using std::ostream;
using std::string;
using std::vector;

auto Graph::add_vertex(const string & label) -> VertexId
{
    if (label.empty())
        throw InvalidInput("empty vertex label");
    if (_index.contains(label))
        throw DuplicateVertex(label);
    VertexId v = size();
    _labels.push_back(label);
    _index.emplace(label, v);
    _adj.emplace_back();
    return v;
}

auto Graph::add_edge(VertexId u, VertexId v) -> bool
{
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw InvalidInput("edge endpoint out of range");
    if (u == v)
        throw InvalidInput("self-loop at '" + _labels[u] + "'");

    auto & au = _adj[u];
    auto pos = std::lower_bound(au.begin(), au.end(), v);
    if (pos != au.end() && *pos == v)
        return false;
    au.insert(pos, v);
    auto & av = _adj[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++_edges;
    return true;
}

auto Graph::add_edge(const string & u, const string & v) -> bool
{
    return add_edge(id(u), id(v));
}

auto Graph::find(const string & label) const -> optional<VertexId>
{
    auto i = _index.find(label);
    if (i == _index.end())
        return std::nullopt;
    return i->second;
}

auto Graph::id(const string & label) const -> VertexId
{
    auto i = _index.find(label);
    if (i == _index.end())
        throw UnknownVertex(label);
    return i->second;
}

auto Graph::has_vertex(const string & label) const -> bool
{
    return _index.contains(label);
}

auto Graph::adjacent(VertexId u, VertexId v) const -> bool
{
    auto & a = _adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(_edges);
    for (VertexId u = 0 ; u < size() ; ++u)
        for (auto v : _adj[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto Graph::operator==(const Graph & other) const -> bool
{
    return _labels == other._labels && _adj == other._adj;
}

namespace
{
    auto strip_comment(const string & line) -> string
    {
        auto hash = line.find('#');
        return hash == string::npos ? line : line.substr(0, hash);
    }

    auto split_words(const string & line) -> vector<string>
    {
        std::istringstream s(line);
        vector<string> words;
        string w;
        while (s >> w)
            words.push_back(w);
        return words;
    }
}

auto emul::read_graph(istream & in) -> Graph
{
    Graph g;
    bool have_header = false;
    string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto words = split_words(strip_comment(line));
        if (words.empty())
            continue;

        if (! have_header) {
            if (words[0] != "vertices:")
                throw ParseError(line_number, "expected 'vertices:' header");
            for (std::size_t i = 1 ; i < words.size() ; ++i) {
                if (g.has_vertex(words[i]))
                    throw ParseError(line_number, "duplicate vertex '" + words[i] + "'");
                g.add_vertex(words[i]);
            }
            have_header = true;
            continue;
        }

        if (words.size() != 2)
            throw ParseError(line_number, "expected an edge 'u v', got " + std::to_string(words.size()) + " fields");
        auto u = g.find(words[0]), v = g.find(words[1]);
        if (! u)
            throw ParseError(line_number, "undeclared vertex '" + words[0] + "'");
        if (! v)
            throw ParseError(line_number, "undeclared vertex '" + words[1] + "'");
        if (*u == *v)
            throw ParseError(line_number, "self-loop at '" + words[0] + "'");
        if (! g.add_edge(*u, *v))
            throw ParseError(line_number, "duplicate edge {" + words[0] + ", " + words[1] + "}");
    }

    if (! have_header)
        throw ParseError(line_number, "missing 'vertices:' header");
    return g;
}

auto emul::parse_graph(const string & text) -> Graph
{
    std::istringstream s(text);
    return read_graph(s);
}

auto emul::write_graph(ostream & out, const Graph & g) -> void
{
    out << "vertices:";
    for (auto & l : g.labels())
        out << ' ' << l;
    out << '\n';
    for (auto & e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

auto emul::format_graph(const Graph & g) -> string
{
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

auto emul::fresh_label(const Graph & g, const string & base) -> string
{
    if (! g.has_vertex(base))
        return base;
    for (int i = 1 ; ; ++i) {
        auto candidate = base + "." + std::to_string(i);
        if (! g.has_vertex(candidate))
            return candidate;
    }
}

auto emul::complete_graph(int n, const string & prefix) -> Graph
{
    Graph g;
    for (int i = 1 ; i <= n ; ++i)
        g.add_vertex(prefix + std::to_string(i));
    for (int i = 0 ; i < n ; ++i)
        for (int j = i + 1 ; j < n ; ++j)
            g.add_edge(i, j);
    return g;
}

auto emul::complete_bipartite(int a, int b) -> Graph
{
    Graph g;
    for (int i = 1 ; i <= a ; ++i)
        g.add_vertex("a" + std::to_string(i));
    for (int i = 1 ; i <= b ; ++i)
        g.add_vertex("b" + std::to_string(i));
    for (int i = 0 ; i < a ; ++i)
        for (int j = 0 ; j < b ; ++j)
            g.add_edge(i, a + j);
    return g;
}

auto emul::cycle_graph(int n, const string & prefix) -> Graph
{
    Graph g;
    for (int i = 1 ; i <= n ; ++i)
        g.add_vertex(prefix + std::to_string(i));
    for (int i = 0 ; i < n ; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

auto emul::induced_subgraph(const Graph & g, const vector<VertexId> & vertices) -> Graph
{
    Graph result;
    vector<VertexId> map(g.size(), -1);
    for (auto v : vertices)
        map[v] = result.add_vertex(g.label(v));
    for (auto v : vertices)
        for (auto w : g.neighbours(v))
            if (map[w] != -1 && v < w)
                result.add_edge(map[v], map[w]);
    return result;
}

auto emul::connected_components(const Graph & g) -> vector<vector<VertexId>>
{
    vector<vector<VertexId>> result;
    vector<bool> seen(g.size(), false);
    for (VertexId s = 0 ; s < g.size() ; ++s) {
        if (seen[s])
            continue;
        auto & comp = result.emplace_back();
        seen[s] = true;
        comp.push_back(s);
        for (std::size_t i = 0 ; i < comp.size() ; ++i)
            for (auto w : g.neighbours(comp[i]))
                if (! seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
    }
    return result;
}

auto emul::is_connected(const Graph & g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto emul::is_bipartite(const Graph & g) -> Bipartition
{
    Bipartition result;
    vector<int> colour(g.size(), -1);
    vector<VertexId> parent(g.size(), -1);

    for (VertexId s = 0 ; s < g.size() ; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::queue<VertexId> todo;
        todo.push(s);
        while (! todo.empty()) {
            auto v = todo.front();
            todo.pop();
            for (auto w : g.neighbours(v)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    parent[w] = v;
                    todo.push(w);
                }
                else if (colour[w] == colour[v]) {
                    // both tree paths up to the common ancestor plus edge vw
                    vector<VertexId> left{v}, right{w};
                    while (left.back() != right.back()) {
                        // same colour means same depth parity; climb the deeper one first
                        vector<VertexId> up_l, up_r;
                        auto a = left.back(), b = right.back();
                        int da = 0, db = 0;
                        for (auto x = a ; parent[x] != -1 ; x = parent[x]) ++da;
                        for (auto x = b ; parent[x] != -1 ; x = parent[x]) ++db;
                        if (da >= db)
                            left.push_back(parent[a]);
                        if (db >= da)
                            right.push_back(parent[b]);
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    result.odd_cycle = left;
                    return result;
                }
            }
        }
    }

    result.bipartite = true;
    result.colour = colour;
    return result;
}
