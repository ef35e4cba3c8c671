#include <emul/projection.hh>
#include <emul/errors.hh>

#include <algorithm>
#include <set>
#include <sstream>

using namespace emul;

using std::map;
using std::string;
using std::vector;

Projection::Projection(Graph host, Graph target, vector<VertexId> map) :
    _host(std::move(host)),
    _target(std::move(target)),
    _map(std::move(map))
{
    if (int(_map.size()) != _host.size())
        throw InvalidInput("projection map must be total on the host");
    for (auto t : _map)
        if (t < 0 || t >= _target.size())
            throw InvalidInput("projection maps outside the target");
    if (! is_connected(_target))
        throw InvalidInput("target graph must be connected");
}

auto Projection::fiber(VertexId t) const -> vector<VertexId>
{
    vector<VertexId> result;
    for (VertexId v = 0 ; v < _host.size() ; ++v)
        if (_map[v] == t)
            result.push_back(v);
    return result;
}

auto emul::identity_projection(const Graph & g) -> Projection
{
    vector<VertexId> map(g.size());
    for (VertexId v = 0 ; v < g.size() ; ++v)
        map[v] = v;
    return Projection(g, g, map);
}

auto emul::trivial_cover(const Graph & g, int copies) -> Projection
{
    Graph host;
    vector<VertexId> map;
    for (int i = 0 ; i < copies ; ++i)
        for (VertexId v = 0 ; v < g.size() ; ++v) {
            host.add_vertex(g.label(v) + "/" + std::to_string(i));
            map.push_back(v);
        }
    for (int i = 0 ; i < copies ; ++i)
        for (auto & e : g.edges())
            host.add_edge(i * g.size() + e.u, i * g.size() + e.v);
    return Projection(host, g, map);
}

auto Violation::describe() const -> string
{
    switch (problem) {
        case Problem::Missing:
            return host_vertex + " misses a neighbour over " + target_neighbour;
        case Problem::Duplicated:
            return host_vertex + " has two neighbours over " + target_neighbour;
        case Problem::NotAdjacent:
            return host_vertex + " has a neighbour over non-adjacent " + target_neighbour;
    }
    return "";
}

auto emul::fiber_sizes(const Projection & p) -> map<string, int>
{
    map<string, int> result;
    for (VertexId t = 0 ; t < p.target().size() ; ++t)
        result[p.target().label(t)] = 0;
    for (auto t : p.map())
        ++result[p.target().label(t)];
    return result;
}

auto emul::verify(const Projection & p, ProjectionKind kind) -> VerificationReport
{
    VerificationReport report;
    report.kind = kind;
    auto & host = p.host();
    auto & target = p.target();

    vector<int> count(target.size(), 0);
    for (VertexId v = 0 ; v < host.size() ; ++v) {
        auto tv = p.image(v);
        for (auto w : host.neighbours(v)) {
            auto tw = p.image(w);
            if (! target.adjacent(tv, tw))
                report.violations.push_back({ host.label(v), target.label(tw), Violation::Problem::NotAdjacent });
            else
                ++count[tw];
        }
        for (auto t : target.neighbours(tv)) {
            if (count[t] == 0)
                report.violations.push_back({ host.label(v), target.label(t), Violation::Problem::Missing });
            else if (count[t] > 1 && kind == ProjectionKind::Cover)
                report.violations.push_back({ host.label(v), target.label(t), Violation::Problem::Duplicated });
        }
        for (auto w : host.neighbours(v))
            count[p.image(w)] = 0;
    }

    report.valid = report.violations.empty();
    report.fiber_sizes = fiber_sizes(p);
    return report;
}

auto emul::verify_emulator(const Projection & p) -> VerificationReport
{
    return verify(p, ProjectionKind::Emulator);
}

auto emul::verify_cover(const Projection & p) -> VerificationReport
{
    return verify(p, ProjectionKind::Cover);
}

auto emul::format_report(const VerificationReport & r) -> string
{
    std::ostringstream out;
    out << "kind: " << (r.kind == ProjectionKind::Cover ? "cover" : "emulator") << '\n';
    out << "valid: " << (r.valid ? "true" : "false") << '\n';
    out << "violations: " << r.violations.size() << '\n';
    for (auto & v : r.violations)
        out << "violation: " << v.describe() << '\n';
    int min_fiber = -1, total = 0;
    for (auto & [_, n] : r.fiber_sizes) {
        total += n;
        if (min_fiber == -1 || n < min_fiber)
            min_fiber = n;
    }
    out << "host_vertices: " << total << '\n';
    out << "min_fiber: " << std::max(min_fiber, 0) << '\n';
    for (auto & [t, n] : r.fiber_sizes)
        out << "fiber: " << t << ' ' << n << '\n';
    return out.str();
}

auto emul::read_projection(const Graph & host, const Graph & target, std::istream & mapping) -> Projection
{
    vector<VertexId> map(host.size(), -1);
    string line;
    int line_number = 0;
    while (std::getline(mapping, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != string::npos)
            line = line.substr(0, hash);
        std::istringstream s(line);
        vector<string> words;
        string w;
        while (s >> w)
            words.push_back(w);
        if (words.empty())
            continue;
        if (words.size() != 2)
            throw ParseError(line_number, "expected 'hostVertex targetVertex'");
        auto h = host.find(words[0]);
        if (! h)
            throw ParseError(line_number, "unknown host vertex '" + words[0] + "'");
        auto t = target.find(words[1]);
        if (! t)
            throw ParseError(line_number, "unknown target vertex '" + words[1] + "'");
        if (map[*h] != -1)
            throw ParseError(line_number, "host vertex '" + words[0] + "' mapped twice");
        map[*h] = *t;
    }
    for (VertexId v = 0 ; v < host.size() ; ++v)
        if (map[v] == -1)
            throw ParseError(line_number, "mapping misses host vertex '" + host.label(v) + "'");
    return Projection(host, target, map);
}

auto emul::write_mapping(std::ostream & out, const Projection & p) -> void
{
    for (VertexId v = 0 ; v < p.host().size() ; ++v)
        out << p.host().label(v) << ' ' << p.target().label(p.image(v)) << '\n';
}
