#include <emul/catalog.hh>
#include <emul/errors.hh>
#include <emul/isomorphism.hh>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace emul;

using std::optional;
using std::string;
using std::vector;

namespace
{
    auto bits_adjacent(int a, int b) -> bool
    {
        int x = a ^ b;
        return x && ! (x & (x - 1));
    }

    auto e2() -> Graph
    {
        Graph g;
        for (auto l : { "0", "1", "2", "3", "4" })
            g.add_vertex(l);
        for (int a = 1 ; a <= 4 ; ++a)
            for (int b = a + 1 ; b <= 4 ; ++b) {
                auto bi = std::to_string(a) + std::to_string(b);
                g.add_vertex(bi);
                g.add_edge(std::to_string(a), bi);
                g.add_edge(std::to_string(b), bi);
                g.add_edge("0", bi);
            }
        return g;
    }

    // cube on 0..7 by bit flips, x joined to everything but 0 and 7
    auto c4() -> Graph
    {
        Graph g;
        for (int v = 0 ; v < 8 ; ++v)
            g.add_vertex(std::to_string(v));
        g.add_vertex("x");
        for (int a = 0 ; a < 8 ; ++a)
            for (int b = a + 1 ; b < 8 ; ++b)
                if (bits_adjacent(a, b))
                    g.add_edge(a, b);
        for (int v = 1 ; v <= 6 ; ++v)
            g.add_edge("x", std::to_string(v));
        return g;
    }

    auto k7_minus_c4() -> Graph
    {
        Graph g;
        for (auto l : { "1", "2", "3", "A", "B", "C", "D" })
            g.add_vertex(l);
        for (VertexId a = 0 ; a < 3 ; ++a)
            for (VertexId b = a + 1 ; b < 7 ; ++b)
                g.add_edge(a, b);
        g.add_edge("A", "B");
        g.add_edge("C", "D");
        return g;
    }

    auto k1222() -> Graph
    {
        Graph g;
        for (auto l : { "0", "a1", "a2", "b1", "b2", "c1", "c2" })
            g.add_vertex(l);
        for (VertexId a = 0 ; a < 7 ; ++a)
            for (VertexId b = a + 1 ; b < 7 ; ++b)
                if (a == 0 || g.label(a)[0] != g.label(b)[0])
                    g.add_edge(a, b);
        return g;
    }

    auto k45_minus_4k2() -> Graph
    {
        auto g = complete_bipartite(4, 5);
        Graph h;
        for (auto & l : g.labels())
            h.add_vertex(l);
        for (auto & e : g.edges()) {
            auto a = g.label(e.u), b = g.label(e.v);
            if (! (a.substr(1) == b.substr(1) && a.substr(1) != "5"))
                h.add_edge(a, b);
        }
        return h;
    }

    auto k44_minus_e() -> Graph
    {
        auto g = complete_bipartite(4, 4);
        Graph h;
        for (auto & l : g.labels())
            h.add_vertex(l);
        for (auto & e : g.edges())
            if (! (g.label(e.u) == "a1" && g.label(e.v) == "b1"))
                h.add_edge(e.u, e.v);
        return h;
    }

    auto entry(string name, Graph g, Verdict projective, Verdict emulable, Verdict coverable,
            Verdict i4c = Verdict::Unknown) -> CatalogEntry
    {
        return CatalogEntry{ std::move(name), std::move(g), projective, emulable, coverable, i4c };
    }

    auto trim(const string & s) -> string
    {
        auto b = s.find_first_not_of(" \t\r");
        if (b == string::npos)
            return "";
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }
}

auto emul::verdict_name(Verdict v) -> string
{
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Open: return "open";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

auto emul::parse_verdict(const string & s) -> optional<Verdict>
{
    for (auto v : { Verdict::Yes, Verdict::No, Verdict::Open, Verdict::Unknown })
        if (verdict_name(v) == s)
            return v;
    return std::nullopt;
}

auto emul::normalize_name(const string & name) -> string
{
    string result;
    for (std::size_t i = 0 ; i < name.size() ; ++i) {
        unsigned char c = name[i];
        // U+2212 and U+2013 are three bytes in UTF-8
        if (c == 0xe2 && i + 2 < name.size()) {
            auto tail = name.substr(i + 1, 2);
            if (tail == "\x88\x92" || tail == "\x80\x93") {
                result += '-';
                i += 2;
                continue;
            }
        }
        if (c == ' ' || c == ',' || c == '_' || c == '\t')
            continue;
        result += char(std::tolower(c));
    }
    return result;
}

auto emul::builtin_names() -> vector<string>
{
    return { "K5", "K3,3", "K4", "K2,3", "K3,5", "K4,4", "K4,4-e", "K7", "K1,2,2,2", "K4,5-4K2", "E2", "C4", "K7-C4" };
}

auto Catalog::with_builtins() -> Catalog
{
    using enum Verdict;
    Catalog c;
    c.add(entry("K5", complete_graph(5), Yes, Yes, Yes));
    c.add(entry("K3,3", complete_bipartite(3, 3), Yes, Yes, Yes));
    c.add(entry("K4", complete_graph(4), Yes, Yes, Yes));
    c.add(entry("K2,3", complete_bipartite(2, 3), Yes, Yes, Yes));
    c.add(entry("K3,5", complete_bipartite(3, 5), No, No, No));
    c.add(entry("K4,4", complete_bipartite(4, 4), No, No, No));
    c.add(entry("K4,4-e", k44_minus_e(), No, Open, Unknown));
    c.add(entry("K7", complete_graph(7), No, No, No));
    c.add(entry("K1,2,2,2", k1222(), No, Yes, Open, Yes));
    c.add(entry("K4,5-4K2", k45_minus_4k2(), No, Yes, No));
    c.add(entry("E2", e2(), No, Yes, Unknown));
    c.add(entry("C4", c4(), No, Yes, Unknown));
    c.add(entry("K7-C4", k7_minus_c4(), No, Yes, Unknown, No));
    return c;
}

auto Catalog::add(CatalogEntry e) -> void
{
    if (contains(e.name))
        throw InvalidInput("catalog: duplicate name '" + e.name + "'");
    _entries.push_back(std::move(e));
}

auto Catalog::contains(const string & name) const -> bool
{
    auto key = normalize_name(name);
    return std::any_of(_entries.begin(), _entries.end(), [&] (auto & e) { return normalize_name(e.name) == key; });
}

auto Catalog::get(const string & name) const -> const CatalogEntry &
{
    auto key = normalize_name(name);
    for (auto & e : _entries)
        if (normalize_name(e.name) == key)
            return e;
    throw UnknownName(name);
}

auto Catalog::identify(const Graph & g) const -> optional<string>
{
    for (auto & e : _entries)
        if (e.graph.size() == g.size() && e.graph.edge_count() == g.edge_count() && is_isomorphic(e.graph, g))
            return e.name;
    return std::nullopt;
}

auto Catalog::load_reference_list(std::istream & in) -> int
{
    vector<string> lines;
    string line;
    while (std::getline(in, line))
        lines.push_back(line);

    Catalog loaded;
    std::size_t i = 0;
    while (i < lines.size()) {
        std::size_t end = i;
        while (end < lines.size() && trim(lines[end]) != "---")
            ++end;

        // blank out everything but the graph body so parse errors keep file line numbers
        string body(i, '\n');
        CatalogEntry e;
        bool have_name = false, any_content = false;
        int name_line = int(i) + 1;
        bool in_graph = false;
        for (auto k = i ; k < end ; ++k) {
            auto t = trim(lines[k].substr(0, lines[k].find('#')));
            if (! t.empty())
                any_content = true;
            auto colon = t.find(':');
            auto key = colon == string::npos ? string{} : t.substr(0, colon);
            if (! in_graph && ! key.empty() && key != "vertices") {
                auto value = trim(t.substr(colon + 1));
                if (key == "name") {
                    if (value.empty())
                        throw ParseError(int(k) + 1, "empty name");
                    e.name = value;
                    have_name = true;
                    name_line = int(k) + 1;
                }
                else {
                    auto v = parse_verdict(value);
                    if (! v)
                        throw ParseError(int(k) + 1, "unknown flag value '" + value + "'");
                    if (key == "projective")
                        e.projective = *v;
                    else if (key == "emulable")
                        e.emulable = *v;
                    else if (key == "coverable")
                        e.coverable = *v;
                    else if (key == "i4c")
                        e.internally_4_connected = *v;
                    else
                        throw ParseError(int(k) + 1, "unknown header '" + key + "'");
                }
                body += '\n';
                continue;
            }
            if (key == "vertices")
                in_graph = true;
            body += lines[k] + '\n';
        }

        if (any_content) {
            if (! have_name)
                throw ParseError(int(i) + 1, "record without a 'name:' header");
            e.graph = parse_graph(body);
            if (loaded.contains(e.name) || contains(e.name))
                throw ParseError(name_line, "duplicate name '" + e.name + "'");
            loaded.add(std::move(e));
        }
        i = end + 1;
    }

    for (auto & e : loaded._entries)
        _entries.push_back(std::move(e));
    return int(loaded._entries.size());
}

auto Catalog::load_reference_file(const string & path) -> int
{
    std::ifstream in(path);
    if (! in)
        throw InvalidInput("cannot open reference list '" + path + "'");
    return load_reference_list(in);
}

auto emul::write_entry(std::ostream & out, const CatalogEntry & e) -> void
{
    out << "name: " << e.name << '\n'
        << "projective: " << verdict_name(e.projective) << '\n'
        << "emulable: " << verdict_name(e.emulable) << '\n'
        << "coverable: " << verdict_name(e.coverable) << '\n'
        << "i4c: " << verdict_name(e.internally_4_connected) << '\n';
    write_graph(out, e.graph);
}

auto emul::write_reference_list(std::ostream & out, const vector<CatalogEntry> & entries) -> void
{
    for (std::size_t i = 0 ; i < entries.size() ; ++i) {
        if (i)
            out << "---\n";
        write_entry(out, entries[i]);
    }
}

auto emul::default_reference_path() -> string
{
    return string(EMUL_DATA_DIR) + "/reference.graphs";
}

auto emul::default_catalog() -> Catalog
{
    std::ifstream in(default_reference_path());
    if (! in)
        return Catalog::with_builtins();
    Catalog c;
    c.load_reference_list(in);
    return c;
}
