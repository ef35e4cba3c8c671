#include <emul/minor.hh>
#include <emul/errors.hh>

#include <algorithm>
#include <bit>
#include <set>

using namespace emul;

using std::optional;
using std::set;
using std::uint64_t;
using std::vector;

namespace
{
    auto bit(int i) -> uint64_t
    {
        return uint64_t{1} << i;
    }

    struct Reduction
    {
        vector<VertexId> kept;          // reduced id -> g vertex
        vector<int> reduced_id;         // g vertex -> reduced id, or -1
        vector<VertexId> absorbed_into; // g vertex -> g vertex it was merged into, or -1
        vector<bool> deleted;
        vector<uint64_t> adj;
    };

    // delete degree <= 1 vertices when every vertex of h has degree >= 2, and
    // suppress degree 2 vertices when every vertex of h has degree >= 3
    auto reduce(const Graph & g, int min_h_degree) -> Reduction
    {
        int n = g.size();
        vector<set<VertexId>> nbrs(n);
        for (VertexId v = 0 ; v < n ; ++v)
            nbrs[v].insert(g.neighbours(v).begin(), g.neighbours(v).end());

        Reduction r;
        r.absorbed_into.assign(n, -1);
        r.deleted.assign(n, false);
        vector<bool> alive(n, true);

        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v = 0 ; v < n ; ++v) {
                if (! alive[v])
                    continue;
                auto d = int(nbrs[v].size());
                if (min_h_degree >= 2 && d <= 1) {
                    for (auto w : nbrs[v])
                        nbrs[w].erase(v);
                    nbrs[v].clear();
                    alive[v] = false;
                    r.deleted[v] = true;
                    changed = true;
                }
                else if (min_h_degree >= 3 && d == 2) {
                    auto a = *nbrs[v].begin(), b = *nbrs[v].rbegin();
                    nbrs[a].erase(v);
                    nbrs[b].erase(v);
                    nbrs[a].insert(b);
                    nbrs[b].insert(a);
                    nbrs[v].clear();
                    alive[v] = false;
                    r.absorbed_into[v] = a;
                    changed = true;
                }
            }
        }

        r.reduced_id.assign(n, -1);
        for (VertexId v = 0 ; v < n ; ++v)
            if (alive[v]) {
                r.reduced_id[v] = int(r.kept.size());
                r.kept.push_back(v);
            }
        if (r.kept.size() > 64)
            throw InvalidInput("minor search supports at most 64 vertices after reduction");

        r.adj.assign(r.kept.size(), 0);
        for (std::size_t i = 0 ; i < r.kept.size() ; ++i)
            for (auto w : nbrs[r.kept[i]])
                r.adj[i] |= bit(r.reduced_id[w]);
        return r;
    }

    struct PartitionSearch
    {
        int n, k;
        const vector<uint64_t> & adj;
        vector<uint64_t> h_adj;
        vector<int> h_degrees_desc;
        vector<VertexId> h_order;
        NodeCounter & counter;

        vector<int> order, comp, next_comp;
        vector<bool> comp_start;
        vector<uint64_t> comp_mask;

        vector<int> part;
        vector<uint64_t> part_mask;
        vector<int> part_comp;
        int nparts = 0;
        uint64_t unassigned = 0;

        vector<int> part_to_h;

        PartitionSearch(int n_, int k_, const vector<uint64_t> & adj_, NodeCounter & counter_) :
            n(n_), k(k_), adj(adj_), counter(counter_)
        {
        }

        auto setup() -> void
        {
            comp.assign(n, -1);
            int c = 0;
            for (int s = 0 ; s < n ; ++s) {
                if (comp[s] != -1)
                    continue;
                comp_mask.push_back(0);
                auto first = order.size();
                comp[s] = c;
                order.push_back(s);
                for (auto i = first ; i < order.size() ; ++i)
                    for (int w = 0 ; w < n ; ++w)
                        if ((adj[order[i]] & bit(w)) && comp[w] == -1) {
                            comp[w] = c;
                            order.push_back(w);
                        }
                for (auto i = first ; i < order.size() ; ++i)
                    comp_mask[c] |= bit(order[i]);
                ++c;
            }

            comp_start.assign(n, false);
            next_comp.assign(n, n);
            for (int i = 0 ; i < n ; ++i)
                comp_start[i] = (i == 0 || comp[order[i]] != comp[order[i - 1]]);
            for (int i = n - 1 ; i >= 0 ; --i)
                next_comp[i] = (i + 1 < n && ! comp_start[i + 1]) ? next_comp[i + 1] : i + 1;

            part.assign(n, -1);
            part_mask.assign(k, 0);
            part_comp.assign(k, -1);
            unassigned = (n == 64) ? ~uint64_t{0} : bit(n) - 1;
        }

        auto connected_within(uint64_t target, uint64_t allowed) const -> bool
        {
            uint64_t reached = target & (~target + 1);
            uint64_t frontier = reached;
            while (frontier) {
                uint64_t next = 0;
                for (auto f = frontier ; f ; f &= f - 1)
                    next |= adj[std::countr_zero(f)];
                next &= allowed & ~reached;
                reached |= next;
                frontier = next;
            }
            return (target & ~reached) == 0;
        }

        auto feasible(int current_comp) const -> bool
        {
            if (std::popcount(unassigned) < k - nparts)
                return false;

            for (int p = 0 ; p < nparts ; ++p)
                if (part_comp[p] == current_comp && ! connected_within(part_mask[p], part_mask[p] | unassigned))
                    return false;

            // degree bounds: closed parts have their final quotient degree
            vector<int> bounds;
            bool any_closed = false;
            for (int p = 0 ; p < nparts ; ++p) {
                uint64_t nb = 0;
                for (auto m = part_mask[p] ; m ; m &= m - 1)
                    nb |= adj[std::countr_zero(m)];
                nb &= ~part_mask[p];
                if (nb & unassigned)
                    bounds.push_back(k - 1);
                else {
                    any_closed = true;
                    int d = 0;
                    for (int q = 0 ; q < nparts ; ++q)
                        if (q != p && (nb & part_mask[q]))
                            ++d;
                    bounds.push_back(d);
                }
            }
            if (! any_closed)
                return true;
            for (int p = nparts ; p < k ; ++p)
                bounds.push_back(k - 1);
            std::sort(bounds.begin(), bounds.end(), std::greater<>());
            for (int i = 0 ; i < k ; ++i)
                if (bounds[i] < h_degrees_desc[i])
                    return false;
            return true;
        }

        auto embed_h(vector<uint64_t> & q_adj, std::size_t depth, vector<int> & h_to_part, uint64_t used) -> bool
        {
            counter.tick();
            if (depth == h_order.size())
                return true;
            auto v = h_order[depth];
            int need = std::popcount(h_adj[v]);
            for (int p = 0 ; p < k ; ++p) {
                if ((used & bit(p)) || std::popcount(q_adj[p]) < need)
                    continue;
                bool ok = true;
                for (std::size_t d = 0 ; d < depth && ok ; ++d) {
                    auto u = h_order[d];
                    if ((h_adj[v] & bit(u)) && ! (q_adj[p] & bit(h_to_part[u])))
                        ok = false;
                }
                if (! ok)
                    continue;
                h_to_part[v] = p;
                if (embed_h(q_adj, depth + 1, h_to_part, used | bit(p)))
                    return true;
            }
            h_to_part[v] = -1;
            return false;
        }

        auto quotient_contains_h() -> bool
        {
            vector<uint64_t> q_adj(k, 0);
            for (int v = 0 ; v < n ; ++v) {
                if (part[v] < 0)
                    continue;
                for (auto m = adj[v] ; m ; m &= m - 1) {
                    int w = std::countr_zero(m);
                    if (part[w] >= 0 && part[w] != part[v])
                        q_adj[part[v]] |= bit(part[w]);
                }
            }
            vector<int> h_to_part(k, -1);
            if (! embed_h(q_adj, 0, h_to_part, 0))
                return false;
            part_to_h.assign(k, -1);
            for (int v = 0 ; v < k ; ++v)
                part_to_h[h_to_part[v]] = v;
            return true;
        }

        auto assign(int v, int p) -> void
        {
            part[v] = p;
            part_mask[p] |= bit(v);
            unassigned &= ~bit(v);
        }

        auto unassign(int v, int p) -> void
        {
            part[v] = -1;
            part_mask[p] &= ~bit(v);
            unassigned |= bit(v);
        }

        auto run(int i) -> bool
        {
            counter.tick();
            if (i == n)
                return nparts == k && quotient_contains_h();

            int v = order[i];
            int c = comp[v];

            if (comp_start[i]) {
                // leave the whole component unused
                unassigned &= ~comp_mask[c];
                for (auto m = comp_mask[c] ; m ; m &= m - 1)
                    part[std::countr_zero(m)] = -2;
                if (std::popcount(unassigned) >= k - nparts && run(next_comp[i]))
                    return true;
                unassigned |= comp_mask[c];
                for (auto m = comp_mask[c] ; m ; m &= m - 1)
                    part[std::countr_zero(m)] = -1;
            }

            for (int p = 0 ; p < nparts ; ++p) {
                if (part_comp[p] != c)
                    continue;
                assign(v, p);
                if (feasible(c) && run(i + 1))
                    return true;
                unassign(v, p);
            }

            if (nparts < k) {
                int p = nparts++;
                part_comp[p] = c;
                assign(v, p);
                if (feasible(c) && run(i + 1))
                    return true;
                unassign(v, p);
                part_comp[p] = -1;
                --nparts;
            }
            return false;
        }
    };
}

auto emul::find_minor(const Graph & g, const Graph & h, uint64_t budget) -> optional<MinorModel>
{
    int k = h.size();
    if (k == 0)
        return MinorModel{ vector<VertexId>(g.size(), -1) };
    if (k > g.size() || h.edge_count() > g.edge_count())
        return std::nullopt;
    if (k > 64)
        throw InvalidInput("minor search supports patterns of at most 64 vertices");

    int min_h_degree = k;
    for (VertexId v = 0 ; v < k ; ++v)
        min_h_degree = std::min(min_h_degree, h.degree(v));

    auto r = reduce(g, min_h_degree);
    int n = int(r.kept.size());
    if (n < k)
        return std::nullopt;

    NodeCounter counter(budget, "has_minor");
    PartitionSearch search(n, k, r.adj, counter);
    search.h_adj.assign(k, 0);
    for (VertexId v = 0 ; v < k ; ++v) {
        for (auto w : h.neighbours(v))
            search.h_adj[v] |= bit(w);
        search.h_degrees_desc.push_back(h.degree(v));
        search.h_order.push_back(v);
    }
    std::sort(search.h_degrees_desc.begin(), search.h_degrees_desc.end(), std::greater<>());
    std::stable_sort(search.h_order.begin(), search.h_order.end(),
            [&] (VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
    search.setup();

    if (! search.run(0))
        return std::nullopt;

    MinorModel model;
    model.branch.assign(g.size(), -1);
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        auto x = v;
        while (x != -1 && r.reduced_id[x] == -1 && ! r.deleted[x])
            x = r.absorbed_into[x];
        if (x == -1 || r.deleted[x])
            continue;
        int p = search.part[r.reduced_id[x]];
        if (p >= 0)
            model.branch[v] = search.part_to_h[p];
    }
    return model;
}

auto emul::has_minor(const Graph & g, const Graph & h, uint64_t budget) -> bool
{
    return find_minor(g, h, budget).has_value();
}

auto emul::is_minor_model(const Graph & g, const Graph & h, const MinorModel & model) -> bool
{
    if (int(model.branch.size()) != g.size())
        return false;

    vector<vector<VertexId>> sets(h.size());
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        auto b = model.branch[v];
        if (b < -1 || b >= h.size())
            return false;
        if (b >= 0)
            sets[b].push_back(v);
    }

    for (auto & s : sets) {
        if (s.empty())
            return false;
        if (! is_connected(induced_subgraph(g, s)))
            return false;
    }

    for (auto & e : h.edges()) {
        bool found = false;
        for (auto v : sets[e.u])
            for (auto w : g.neighbours(v))
                if (model.branch[w] == e.v)
                    found = true;
        if (! found)
            return false;
    }
    return true;
}
