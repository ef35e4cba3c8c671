#include <emul/isomorphism.hh>

#include <algorithm>
#include <map>

using namespace emul;

using std::map;
using std::optional;
using std::pair;
using std::vector;

namespace
{
    // joint colour refinement over g1 and g2, so colour ids are comparable
    auto refine(const Graph & g1, const Graph & g2) -> pair<vector<int>, vector<int>>
    {
        int n = g1.size();
        vector<int> c1(n), c2(n);
        for (VertexId v = 0 ; v < n ; ++v) {
            c1[v] = g1.degree(v);
            c2[v] = g2.degree(v);
        }

        int classes = -1;
        while (true) {
            map<pair<int, vector<int>>, int> ids;
            auto signature = [] (const Graph & g, const vector<int> & c, VertexId v) {
                vector<int> ns;
                for (auto w : g.neighbours(v))
                    ns.push_back(c[w]);
                std::sort(ns.begin(), ns.end());
                return pair{ c[v], ns };
            };

            vector<pair<int, vector<int>>> s1, s2;
            for (VertexId v = 0 ; v < n ; ++v) {
                s1.push_back(signature(g1, c1, v));
                s2.push_back(signature(g2, c2, v));
                ids.emplace(s1.back(), 0);
                ids.emplace(s2.back(), 0);
            }
            int next = 0;
            for (auto & [_, id] : ids)
                id = next++;
            for (VertexId v = 0 ; v < n ; ++v) {
                c1[v] = ids[s1[v]];
                c2[v] = ids[s2[v]];
            }
            if (next == classes)
                break;
            classes = next;
        }
        return { c1, c2 };
    }

    struct Search
    {
        const Graph & g1;
        const Graph & g2;
        vector<int> c1, c2;
        vector<VertexId> order;
        vector<VertexId> mapping;
        vector<bool> used;

        auto run(std::size_t depth) -> bool
        {
            if (depth == order.size())
                return true;

            auto v = order[depth];
            for (VertexId w = 0 ; w < g2.size() ; ++w) {
                if (used[w] || c2[w] != c1[v])
                    continue;

                bool ok = true;
                for (std::size_t d = 0 ; d < depth && ok ; ++d) {
                    auto u = order[d];
                    if (g1.adjacent(v, u) != g2.adjacent(w, mapping[u]))
                        ok = false;
                }
                if (! ok)
                    continue;

                mapping[v] = w;
                used[w] = true;
                if (run(depth + 1))
                    return true;
                used[w] = false;
                mapping[v] = -1;
            }
            return false;
        }
    };
}

auto emul::find_isomorphism(const Graph & g1, const Graph & g2) -> optional<vector<VertexId>>
{
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count())
        return std::nullopt;

    int n = g1.size();
    auto [c1, c2] = refine(g1, g2);

    auto h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2)
        return std::nullopt;

    vector<int> class_size(2 * n + 1, 0);
    for (auto c : c1)
        ++class_size[c];

    // greedy order: most already-ordered neighbours, then rarest colour
    vector<VertexId> order;
    vector<bool> placed(n, false);
    vector<int> placed_neighbours(n, 0);
    for (int step = 0 ; step < n ; ++step) {
        VertexId best = -1;
        for (VertexId v = 0 ; v < n ; ++v) {
            if (placed[v])
                continue;
            if (best == -1
                    || placed_neighbours[v] > placed_neighbours[best]
                    || (placed_neighbours[v] == placed_neighbours[best] && class_size[c1[v]] < class_size[c1[best]]))
                best = v;
        }
        placed[best] = true;
        order.push_back(best);
        for (auto w : g1.neighbours(best))
            ++placed_neighbours[w];
    }

    Search search{ g1, g2, c1, c2, order, vector<VertexId>(n, -1), vector<bool>(n, false) };
    if (! search.run(0))
        return std::nullopt;
    return search.mapping;
}

auto emul::is_isomorphic(const Graph & g1, const Graph & g2) -> bool
{
    return find_isomorphism(g1, g2).has_value();
}

auto emul::is_isomorphism(const Graph & g1, const Graph & g2, const vector<VertexId> & mapping) -> bool
{
    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count() || int(mapping.size()) != g1.size())
        return false;
    vector<bool> hit(g2.size(), false);
    for (auto w : mapping) {
        if (w < 0 || w >= g2.size() || hit[w])
            return false;
        hit[w] = true;
    }
    for (auto & e : g1.edges())
        if (! g2.adjacent(mapping[e.u], mapping[e.v]))
            return false;
    return true;
}
