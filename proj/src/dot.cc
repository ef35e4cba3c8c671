#include <emul/dot.hh>
#include <emul/errors.hh>

#include <sstream>

using namespace emul;

using std::string;

namespace
{
    auto quoted(const string & s) -> string
    {
        string result = "\"";
        for (auto c : s) {
            if (c == '"' || c == '\\')
                result += '\\';
            result += c;
        }
        return result + "\"";
    }
}

auto emul::export_dot(const Graph & g, const Embedding * embedding, const Projection * projection) -> string
{
    if (embedding && ! (embedding->graph() == g))
        throw InvalidInput("export_dot: embedding is for a different graph");
    if (projection && ! (projection->host() == g))
        throw InvalidInput("export_dot: projection host is a different graph");

    std::ostringstream out;
    out << "graph G {\n";
    if (projection)
        out << "    node [style=filled, colorscheme=set312];\n";
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        out << "    " << quoted(g.label(v));
        string attributes;
        auto add = [&] (const string & a) { attributes += (attributes.empty() ? "" : ", ") + a; };
        if (projection) {
            auto t = projection->image(v);
            add("fiber=" + quoted(projection->target().label(t)));
            add("fillcolor=" + std::to_string(t % 12 + 1));
        }
        if (embedding) {
            string r;
            for (auto w : embedding->rotation(v))
                r += (r.empty() ? "" : " ") + g.label(w);
            add("rotation=" + quoted(r));
        }
        if (! attributes.empty())
            out << " [" << attributes << "]";
        out << ";\n";
    }
    for (auto & e : g.edges())
        out << "    " << quoted(g.label(e.u)) << " -- " << quoted(g.label(e.v)) << ";\n";
    out << "}\n";
    return out.str();
}
