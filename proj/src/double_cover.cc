#include <emul/double_cover.hh>
#include <emul/errors.hh>

#include <algorithm>

using namespace emul;

using std::map;
using std::optional;
using std::vector;

SignedEmbedding::SignedEmbedding(Embedding embedding, map<Edge, int> signs) :
    _embedding(std::move(embedding)),
    _signs(std::move(signs))
{
    auto edges = graph().edges();
    if (_signs.size() != edges.size())
        throw InvalidInput("signed embedding: one sign per edge required");
    for (auto & e : edges) {
        auto i = _signs.find(e);
        if (i == _signs.end() || (i->second != 1 && i->second != -1))
            throw InvalidInput("signed embedding: edge {" + graph().label(e.u) + ", " + graph().label(e.v)
                    + "} needs a sign of +1 or -1");
    }
}

auto SignedEmbedding::sign(VertexId u, VertexId v) const -> int
{
    return _signs.at(Edge(u, v));
}

auto emul::read_signed_embedding(std::istream & in) -> SignedEmbedding
{
    auto text = read_rotation_text(in, true);
    auto embedding = embedding_from_text(text);
    auto & g = embedding.graph();

    map<Edge, int> signs;
    for (std::size_t i = 0 ; i < text.vertices.size() ; ++i)
        for (std::size_t k = 0 ; k < text.rotation[i].size() ; ++k) {
            Edge e(VertexId(i), g.id(text.rotation[i][k]));
            auto [it, inserted] = signs.emplace(e, text.signs[i][k]);
            if (! inserted && it->second != text.signs[i][k])
                throw ParseError(text.lines[i], "edge {" + g.label(e.u) + ", " + g.label(e.v)
                        + "} has different signs at its two ends");
        }
    return SignedEmbedding(std::move(embedding), std::move(signs));
}

auto emul::write_signed_embedding(std::ostream & out, const SignedEmbedding & se) -> void
{
    auto & g = se.graph();
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        out << g.label(v) << ':';
        for (auto w : se.embedding().rotation(v))
            out << ' ' << (se.sign(v, w) < 0 ? "-" : "") << g.label(w);
        out << '\n';
    }
}

auto emul::double_cover(const SignedEmbedding & se) -> DoubleCover
{
    auto & g = se.graph();
    int n = g.size();

    Graph host;
    vector<VertexId> map;
    for (int layer = 0 ; layer < 2 ; ++layer)
        for (VertexId v = 0 ; v < n ; ++v) {
            host.add_vertex(g.label(v) + "/" + std::to_string(layer));
            map.push_back(v);
        }

    auto lift = [&] (VertexId v, int layer, VertexId w) {
        int other = se.sign(v, w) > 0 ? layer : 1 - layer;
        return other * n + w;
    };

    vector<vector<VertexId>> rotation(2 * n);
    for (VertexId v = 0 ; v < n ; ++v) {
        auto & rot = se.embedding().rotation(v);
        for (auto w : rot) {
            host.add_edge(v, lift(v, 0, w));
            host.add_edge(n + v, lift(v, 1, w));
            rotation[v].push_back(lift(v, 0, w));
        }
        for (auto it = rot.rbegin() ; it != rot.rend() ; ++it)
            rotation[n + v].push_back(lift(v, 1, *it));
    }

    Projection projection(host, g, map);
    if (! verify_cover(projection).valid)
        throw InvariantBroken("double_cover: output is not a cover");

    Embedding lifted(host, std::move(rotation));
    bool lifted_is_plane = euler_check(lifted);
    bool planar = is_planar(host);
    return DoubleCover{ std::move(projection), planar, std::move(lifted), lifted_is_plane };
}

auto emul::search_planar_double_cover(const Embedding & e) -> optional<SignedEmbedding>
{
    auto edges = e.graph().edges();
    if (edges.size() > 24)
        throw InvalidInput("search_planar_double_cover: at most 24 edges");

    for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << edges.size()) ; ++mask) {
        map<Edge, int> signs;
        for (std::size_t i = 0 ; i < edges.size() ; ++i)
            signs[edges[i]] = (mask >> i) & 1 ? -1 : 1;
        SignedEmbedding se(e, signs);
        if (double_cover(se).planar)
            return se;
    }
    return std::nullopt;
}
