#include "perturb.hh"

#include <emul/plane_map.hh>
#include <emul/transform.hh>

#include <algorithm>

using namespace emul;

auto perturbation::perturb(const Projection & p, const Embedding & e, const std::vector<bool> & prefer, std::mt19937 & rng)
    -> std::optional<std::pair<Projection, Embedding>>
{
    struct Corner { int face; VertexId y; std::size_t after; int component; };
    auto comps = connected_components(e.graph());
    std::vector<int> comp_of(e.graph().size());
    for (std::size_t c = 0 ; c < comps.size() ; ++c)
        for (auto v : comps[c])
            comp_of[v] = int(c);

    std::vector<Corner> corners;
    auto fs = faces(e);
    for (std::size_t f = 0 ; f < fs.size() ; ++f)
        for (auto & d : fs[f].boundary) {
            if (! prefer[p.image(d.to)])
                continue;
            auto & r = e.rotation(d.to);
            auto pos = std::size_t(std::find(r.begin(), r.end(), d.from) - r.begin());
            corners.push_back({ int(f), d.to, pos, comp_of[d.to] });
        }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0 ; i < corners.size() ; ++i)
        for (std::size_t j = i + 1 ; j < corners.size() ; ++j) {
            auto & c = corners[i], & d = corners[j];
            if (c.y != d.y && p.image(c.y) == p.image(d.y)
                    && (c.face == d.face || c.component != d.component))
                pairs.emplace_back(i, j);
        }
    if (pairs.empty())
        return std::nullopt;
    auto [i, j] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    PlaneMap m(e, p.map());
    m.merge_vertices(corners[i].y, corners[i].after, corners[j].y, corners[j].after);
    auto emb = m.export_embedding();
    return std::pair{ Projection(emb.graph(), p.target(), m.export_map()), emb };
}
