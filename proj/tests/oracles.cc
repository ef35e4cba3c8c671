#include "oracles.hh"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace oracle;

using emul::Graph;
using emul::VertexId;
using std::uint32_t;
using std::uint64_t;
using std::pair;
using std::vector;

auto Small::edges() const -> int
{
    int m = 0;
    for (int v = 0 ; v < n ; ++v)
        m += std::popcount(adj[v]);
    return m / 2;
}

auto Small::degree(int v) const -> int
{
    return std::popcount(adj[v]);
}

auto oracle::from_graph(const Graph & g) -> Small
{
    if (g.size() > 8)
        throw std::invalid_argument("oracle graphs have at most 8 vertices");
    Small s;
    s.n = g.size();
    for (auto & e : g.edges()) {
        s.adj[e.u] |= 1u << e.v;
        s.adj[e.v] |= 1u << e.u;
    }
    return s;
}

auto oracle::to_graph(const Small & s) -> Graph
{
    Graph g;
    for (int v = 0 ; v < s.n ; ++v)
        g.add_vertex("v" + std::to_string(v));
    for (int u = 0 ; u < s.n ; ++u)
        for (int v = u + 1 ; v < s.n ; ++v)
            if (s.adj[u] & (1u << v))
                g.add_edge(u, v);
    return g;
}

auto oracle::canonical_code(const Small & s) -> uint64_t
{
    vector<int> order(s.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&] (int a, int b) {
            return std::pair(s.degree(a), a) < std::pair(s.degree(b), b); });

    vector<int> block_start;
    for (int i = 0 ; i < s.n ; ++i)
        if (i == 0 || s.degree(order[i]) != s.degree(order[i - 1]))
            block_start.push_back(i);
    block_start.push_back(s.n);

    uint64_t best = ~uint64_t{0};
    std::function<void (std::size_t)> rec = [&] (std::size_t b) {
        if (b + 1 == block_start.size()) {
            uint64_t code = 0;
            for (int i = 0 ; i < s.n ; ++i)
                for (int j = i + 1 ; j < s.n ; ++j)
                    code = (code << 1) | ((s.adj[order[i]] >> order[j]) & 1u);
            best = std::min(best, code);
            return;
        }
        auto first = order.begin() + block_start[b], last = order.begin() + block_start[b + 1];
        std::sort(first, last);
        do {
            rec(b + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
    return (uint64_t(s.n) << 56) | best;
}

auto oracle::all_graphs(int n) -> vector<Small>
{
    vector<Small> current{ Small{} };
    for (int k = 1 ; k <= n ; ++k) {
        std::map<uint64_t, Small> next;
        for (auto & g : current)
            for (uint32_t subset = 0 ; subset < (1u << (k - 1)) ; ++subset) {
                Small h = g;
                h.n = k;
                h.adj[k - 1] = subset;
                for (int v = 0 ; v < k - 1 ; ++v)
                    if (subset & (1u << v))
                        h.adj[v] |= 1u << (k - 1);
                next.emplace(canonical_code(h), h);
            }
        current.clear();
        for (auto & [_, g] : next)
            current.push_back(g);
    }
    return current;
}

auto oracle::random_graph(int n, double p, std::mt19937 & rng) -> Small
{
    std::bernoulli_distribution coin(p);
    Small s;
    s.n = n;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (coin(rng)) {
                s.adj[u] |= 1u << v;
                s.adj[v] |= 1u << u;
            }
    return s;
}

namespace
{
    auto remove_vertex(const Small & s, int x) -> Small
    {
        Small r;
        r.n = s.n - 1;
        auto squeeze = [x] (uint32_t row) {
            uint32_t low = row & ((1u << x) - 1);
            uint32_t high = (row >> (x + 1)) << x;
            return low | high;
        };
        for (int v = 0, w = 0 ; v < s.n ; ++v)
            if (v != x)
                r.adj[w++] = squeeze(s.adj[v]);
        return r;
    }

    auto contract(const Small & s, int u, int v) -> Small
    {
        Small t = s;
        t.adj[u] |= t.adj[v];
        t.adj[u] &= ~((1u << u) | (1u << v));
        for (int w = 0 ; w < s.n ; ++w)
            if (t.adj[u] & (1u << w))
                t.adj[w] |= 1u << u;
        return remove_vertex(t, v);
    }
}

oracle::MinorOracle::MinorOracle(const Graph & pattern) :
    _pattern(from_graph(pattern)),
    _pattern_code(canonical_code(_pattern))
{
}

auto oracle::MinorOracle::contains(const Small & g) -> bool
{
    if (g.n < _pattern.n || g.edges() < _pattern.edges())
        return false;
    auto code = canonical_code(g);
    if (g.n == _pattern.n && g.edges() == _pattern.edges())
        return code == _pattern_code;
    if (auto i = _memo.find(code) ; i != _memo.end())
        return i->second;

    bool found = false;
    if (g.n > _pattern.n)
        for (int v = 0 ; v < g.n && ! found ; ++v)
            found = contains(remove_vertex(g, v));
    for (int u = 0 ; u < g.n && ! found ; ++u)
        for (int v = u + 1 ; v < g.n && ! found ; ++v)
            if (g.adj[u] & (1u << v)) {
                Small d = g;
                d.adj[u] &= ~(1u << v);
                d.adj[v] &= ~(1u << u);
                if (g.edges() > _pattern.edges())
                    found = contains(d);
                if (! found && g.n > _pattern.n)
                    found = contains(contract(g, u, v));
            }

    _memo.emplace(code, found);
    return found;
}

auto oracle::planar_by_minors(const Small & g) -> bool
{
    static MinorOracle k5(emul::complete_graph(5));
    static MinorOracle k33(emul::complete_bipartite(3, 3));
    return ! k5.contains(g) && ! k33.contains(g);
}

auto oracle::planar_by_rotations(const Small & g, uint64_t max_systems, bool & decided) -> bool
{
    vector<vector<int>> nbrs(g.n);
    uint64_t systems = 1;
    for (int v = 0 ; v < g.n ; ++v) {
        for (int w = 0 ; w < g.n ; ++w)
            if (g.adj[v] & (1u << w))
                nbrs[v].push_back(w);
        for (int k = 2 ; k < int(nbrs[v].size()) ; ++k) {
            systems *= uint64_t(k);
            if (systems > max_systems) {
                decided = false;
                return false;
            }
        }
    }
    decided = true;

    // components for the per-component Euler count
    vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (int s = 0 ; s < g.n ; ++s) {
        if (comp[s] != -1)
            continue;
        vector<int> stack{ s };
        comp[s] = ncomp;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : nbrs[v])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    vector<vector<int>> rot(g.n);
    for (int v = 0 ; v < g.n ; ++v)
        rot[v] = nbrs[v];

    std::function<bool (int)> rec = [&] (int v) -> bool {
        if (v == g.n) {
            vector<int> chi(ncomp, 0);
            for (int u = 0 ; u < g.n ; ++u) {
                chi[comp[u]] += 1;
                if (rot[u].empty())
                    chi[comp[u]] += 1;
            }
            for (int u = 0 ; u < g.n ; ++u)
                for (int w : nbrs[u])
                    if (u < w)
                        chi[comp[u]] -= 1;
            std::set<std::pair<int, int>> seen;
            for (int u = 0 ; u < g.n ; ++u)
                for (int w : rot[u]) {
                    if (seen.contains({ u, w }))
                        continue;
                    chi[comp[u]] += 1;
                    int a = u, b = w;
                    while (seen.insert({ a, b }).second) {
                        auto & r = rot[b];
                        auto pos = std::find(r.begin(), r.end(), a) - r.begin();
                        int c = r[(pos + 1) % r.size()];
                        a = b;
                        b = c;
                    }
                }
            for (int c = 0 ; c < ncomp ; ++c)
                if (chi[c] != 2)
                    return false;
            return true;
        }
        if (rot[v].size() < 3)
            return rec(v + 1);
        auto first = rot[v].begin() + 1;
        std::sort(first, rot[v].end());
        do {
            if (rec(v + 1))
                return true;
        } while (std::next_permutation(first, rot[v].end()));
        return false;
    };
    return rec(0);
}

namespace
{
    auto check_projection(const Graph & host, const Graph & target, const vector<VertexId> & map, bool cover) -> bool
    {
        if (int(map.size()) != host.size())
            return false;
        for (VertexId v = 0 ; v < host.size() ; ++v) {
            std::multiset<std::string> images;
            for (auto w : host.neighbours(v))
                images.insert(target.label(map[w]));
            std::set<std::string> wanted;
            for (auto t : target.neighbours(map[v]))
                wanted.insert(target.label(t));
            std::set<std::string> distinct(images.begin(), images.end());
            if (distinct != wanted)
                return false;
            if (cover && images.size() != distinct.size())
                return false;
        }
        return true;
    }
}

auto oracle::is_emulator(const Graph & host, const Graph & target, const vector<VertexId> & map) -> bool
{
    return check_projection(host, target, map, false);
}

auto oracle::is_cover(const Graph & host, const Graph & target, const vector<VertexId> & map) -> bool
{
    return check_projection(host, target, map, true);
}

auto oracle::isomorphic_small(const Small & a, const Small & b) -> bool
{
    return canonical_code(a) == canonical_code(b);
}

namespace
{
    // is the edge subset a subdivision of K4 or K2,3 covering exactly the vertices it touches
    auto is_kgraph_edges(int n, const vector<pair<int, int>> & es) -> bool
    {
        vector<vector<int>> nbrs(n);
        for (auto [u, v] : es) {
            nbrs[u].push_back(v);
            nbrs[v].push_back(u);
        }
        vector<int> branch;
        int touched = 0;
        for (int v = 0 ; v < n ; ++v) {
            if (nbrs[v].empty())
                continue;
            ++touched;
            if (nbrs[v].size() == 3)
                branch.push_back(v);
            else if (nbrs[v].size() != 2)
                return false;
        }
        if (branch.size() != 4 && branch.size() != 2)
            return false;

        int walked = 0;
        std::set<int> seen;
        for (auto b : branch) {
            std::multiset<int> ends;
            for (auto first : nbrs[b]) {
                int prev = b, at = first, interior = 0;
                seen.insert(b);
                while (nbrs[at].size() == 2) {
                    seen.insert(at);
                    int next = nbrs[at][0] == prev ? nbrs[at][1] : nbrs[at][0];
                    prev = at;
                    at = next;
                    ++interior;
                }
                if (at == b)
                    return false;
                if (branch.size() == 2 && interior == 0)
                    return false;
                ends.insert(at);
                ++walked;
            }
            if (branch.size() == 4) {
                for (auto o : branch)
                    if (o != b && ends.count(o) != 1)
                        return false;
            }
        }
        // threads cover every touched vertex, so no stray cycles
        return int(seen.size()) == touched && walked == int(branch.size()) * 3;
    }

    auto spanning_kgraph(const Small & g, uint32_t s) -> bool
    {
        vector<pair<int, int>> es;
        for (int u = 0 ; u < g.n ; ++u)
            for (int v = u + 1 ; v < g.n ; ++v)
                if ((s >> u & 1) && (s >> v & 1) && (g.adj[u] >> v & 1))
                    es.emplace_back(u, v);
        int k = __builtin_popcount(s);
        for (int size : { k + 1, k + 2 }) {
            if (size > int(es.size()))
                continue;
            vector<bool> pick(es.size(), false);
            std::fill(pick.end() - size, pick.end(), true);
            do {
                vector<pair<int, int>> chosen;
                uint32_t covered = 0;
                for (std::size_t i = 0 ; i < es.size() ; ++i)
                    if (pick[i]) {
                        chosen.push_back(es[i]);
                        covered |= 1u << es[i].first | 1u << es[i].second;
                    }
                if (covered == s && is_kgraph_edges(g.n, chosen))
                    return true;
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        return false;
    }

    struct Big
    {
        int n;
        vector<uint32_t> adj;
    };

    auto connected_mask(const Big & g, uint32_t s) -> bool
    {
        if (! s)
            return false;
        uint32_t seen = s & -s;
        for (bool grew = true ; grew ; ) {
            grew = false;
            for (int v = 0 ; v < g.n ; ++v)
                if ((seen >> v & 1)) {
                    auto add = g.adj[v] & s & ~seen;
                    if (add) {
                        seen |= add;
                        grew = true;
                    }
                }
        }
        return seen == s;
    }
}

auto oracle::has_two_disjoint_kgraphs(const emul::Graph & graph) -> bool
{
    Big g{ graph.size(), vector<uint32_t>(graph.size(), 0) };
    for (auto & e : graph.edges()) {
        g.adj[e.u] |= 1u << e.v;
        g.adj[e.v] |= 1u << e.u;
    }
    uint32_t all = (1u << g.n) - 1;

    vector<uint32_t> good;
    for (uint32_t s = 1 ; s <= all ; ++s) {
        int k = __builtin_popcount(s);
        if (k < 4 || k > 7 || k > g.n - 4)
            continue;
        uint32_t rest = all & ~s;
        if (! connected_mask(g, rest))
            continue;
        // contraction of the rest to one vertex, as a Small on k + 1 vertices
        Small c;
        c.n = k + 1;
        vector<int> index(g.n, -1);
        int next = 0;
        for (int v = 0 ; v < g.n ; ++v)
            if (s >> v & 1)
                index[v] = next++;
        bool touching = false;
        for (int v = 0 ; v < g.n ; ++v) {
            if (index[v] < 0)
                continue;
            for (int w = 0 ; w < g.n ; ++w) {
                if (! (g.adj[v] >> w & 1))
                    continue;
                int x = index[w] < 0 ? k : index[w];
                touching = touching || index[w] < 0;
                c.adj[index[v]] |= 1u << x;
                c.adj[x] |= 1u << index[v];
            }
        }
        if (! touching || planar_by_minors(c))
            continue;
        Small inside;
        inside.n = k;
        for (int v = 0 ; v < g.n ; ++v)
            if (index[v] >= 0)
                for (int w = 0 ; w < g.n ; ++w)
                    if (index[w] >= 0 && (g.adj[v] >> w & 1))
                        inside.adj[index[v]] |= 1u << index[w];
        if (! spanning_kgraph(inside, (1u << k) - 1))
            continue;
        good.push_back(s);
    }
    for (std::size_t i = 0 ; i < good.size() ; ++i)
        for (std::size_t j = i + 1 ; j < good.size() ; ++j)
            if (! (good[i] & good[j]))
                return true;
    return false;
}
