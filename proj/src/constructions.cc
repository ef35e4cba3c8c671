#include <emul/constructions.hh>
#include <emul/errors.hh>
#include <emul/isomorphism.hh>
#include <emul/obstructions.hh>
#include <emul/transform.hh>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

using namespace emul;

using std::array;
using std::map;
using std::optional;
using std::set;
using std::string;
using std::vector;

namespace
{
    const vector<vector<int>> cube_faces{ { 0, 2, 3, 1 }, { 4, 5, 7, 6 }, { 0, 1, 5, 4 },
        { 2, 6, 7, 3 }, { 0, 4, 6, 2 }, { 1, 3, 7, 5 } };

    // cyclic neighbour order of a cube vertex, from its smallest neighbour
    auto cube_cycle(int v) -> vector<int>
    {
        map<int, int> succ;
        for (auto & f : cube_faces)
            for (int i = 0 ; i < 4 ; ++i)
                if (f[i] == v)
                    succ[f[(i + 3) % 4]] = f[(i + 1) % 4];
        vector<int> result{ succ.begin()->first };
        for (auto x = succ[result.front()] ; x != result.front() ; x = succ[x])
            result.push_back(x);
        return result;
    }

    auto cube_adjacent(int a, int b) -> bool
    {
        return std::popcount(unsigned(a ^ b)) == 1;
    }

    auto make_embedded(Graph host, const Graph & target, vector<VertexId> map) -> EmbeddedProjection
    {
        Projection p(std::move(host), target, std::move(map));
        auto planarity = test_planarity(p.host());
        if (! planarity.planar)
            throw InvariantBroken("construction: host is not planar");
        return EmbeddedProjection{ p, *planarity.embedding };
    }

    // fail-fast checks shared by every construction
    auto certify(const EmbeddedProjection & e, const string & what) -> void
    {
        auto & p = e.projection;
        if (! (e.embedding.graph() == p.host()))
            throw InvariantBroken(what + ": embedding does not match the host");
        auto report = verify_emulator(p);
        if (! report.valid)
            throw InvariantBroken(what + ": not an emulator (" + report.violations.front().describe() + ")");
        if (! euler_check(e.embedding))
            throw InvariantBroken(what + ": host embedding is not plane");
        if (is_connected(p.target()) && ! is_planar(p.target()) && ! check_min_fiber(p))
            throw InvariantBroken(what + ": a fiber has fewer than two vertices");
    }

    auto builtin(const string & name) -> Graph
    {
        static const Catalog c = Catalog::with_builtins();
        return c.get(name).graph;
    }
}

auto PolyhedronTemplate::ridges() const -> vector<Edge>
{
    set<Edge> result;
    for (auto & f : facets)
        for (std::size_t i = 0 ; i < f.size() ; ++i)
            result.emplace(f[i], f[(i + 1) % f.size()]);
    return { result.begin(), result.end() };
}

auto emul::cube_template() -> PolyhedronTemplate
{
    PolyhedronTemplate t{ "cube", {}, cube_faces };
    for (int v = 0 ; v < 8 ; ++v)
        t.corners.push_back(std::to_string(v));
    return t;
}

auto emul::octahedron_template() -> PolyhedronTemplate
{
    PolyhedronTemplate t{ "octahedron", { "+x", "-x", "+y", "-y", "+z", "-z" }, {} };
    for (int sx = 0 ; sx < 2 ; ++sx)
        for (int sy = 0 ; sy < 2 ; ++sy)
            for (int sz = 0 ; sz < 2 ; ++sz) {
                int x = sx, y = 2 + sy, z = 4 + sz;
                if ((sx + sy + sz) % 2 == 0)
                    t.facets.push_back({ x, y, z });
                else
                    t.facets.push_back({ x, z, y });
            }
    return t;
}

auto emul::cuboctahedron_template() -> PolyhedronTemplate
{
    PolyhedronTemplate t{ "cuboctahedron", {}, {} };
    map<Edge, int> id;
    for (int a = 0 ; a < 8 ; ++a)
        for (int b = a + 1 ; b < 8 ; ++b)
            if (cube_adjacent(a, b)) {
                id[Edge(a, b)] = int(t.corners.size());
                t.corners.push_back(std::to_string(a) + "-" + std::to_string(b));
            }
    for (int v = 0 ; v < 8 ; ++v) {
        auto c = cube_cycle(v);
        vector<int> facet;
        for (auto it = c.rbegin() ; it != c.rend() ; ++it)
            facet.push_back(id[Edge(v, *it)]);
        t.facets.push_back(facet);
    }
    for (auto & f : cube_faces) {
        vector<int> facet;
        for (int i = 0 ; i < 4 ; ++i)
            facet.push_back(id[Edge(f[i], f[(i + 1) % 4])]);
        t.facets.push_back(facet);
    }
    return t;
}

auto emul::truncated_cube_template() -> PolyhedronTemplate
{
    PolyhedronTemplate t{ "truncated-cube", {}, {} };
    map<std::pair<int, int>, int> id;
    auto corner = [&] (int v, int towards) {
        auto [it, fresh] = id.emplace(std::pair{ v, towards }, int(t.corners.size()));
        if (fresh)
            t.corners.push_back(std::to_string(v) + "." + std::to_string(towards));
        return it->second;
    };
    for (auto & f : cube_faces) {
        vector<int> facet;
        for (int i = 0 ; i < 4 ; ++i) {
            facet.push_back(corner(f[i], f[(i + 3) % 4]));
            facet.push_back(corner(f[i], f[(i + 1) % 4]));
        }
        t.facets.push_back(facet);
    }
    for (int v = 0 ; v < 8 ; ++v) {
        auto c = cube_cycle(v);
        vector<int> facet;
        for (auto it = c.rbegin() ; it != c.rend() ; ++it)
            facet.push_back(corner(v, *it));
        t.facets.push_back(facet);
    }
    return t;
}

auto emul::template_embedding(const PolyhedronTemplate & t) -> Embedding
{
    Graph g;
    for (auto & c : t.corners)
        g.add_vertex(c);
    for (auto & e : t.ridges())
        g.add_edge(e.u, e.v);

    set<std::pair<int, int>> darts;
    vector<map<int, int>> succ(g.size());
    for (auto & f : t.facets) {
        auto k = f.size();
        for (std::size_t i = 0 ; i < k ; ++i) {
            if (! darts.emplace(f[i], f[(i + 1) % k]).second)
                throw InvariantBroken(t.name + ": a ridge is traversed twice in the same direction");
            succ[f[(i + 1) % k]][f[i]] = f[(i + 2) % k];
        }
    }

    vector<vector<VertexId>> rotation(g.size());
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        if (succ[v].size() != std::size_t(g.degree(v)))
            throw InvariantBroken(t.name + ": facets do not close around corner " + t.corners[v]);
        auto start = g.neighbours(v).front();
        rotation[v].push_back(start);
        for (auto x = succ[v].at(start) ; x != start ; x = succ[v].at(x))
            rotation[v].push_back(x);
        if (rotation[v].size() != std::size_t(g.degree(v)))
            throw InvariantBroken(t.name + ": corner " + t.corners[v] + " is pinched");
    }

    Embedding e(g, rotation);
    if (! euler_check(e) || faces(e).size() != t.facets.size())
        throw InvariantBroken(t.name + ": not a sphere");
    return e;
}

auto emul::is_rich_face(const Projection & p, const Face & f) -> bool
{
    set<Edge> represented;
    for (auto & d : f.boundary)
        represented.emplace(p.image(d.from), p.image(d.to));
    return int(represented.size()) == int(p.target().edge_count());
}

auto emul::search_rich_k4_emulator() -> RichK4
{
    auto t = truncated_cube_template();
    auto emb = template_embedding(t);
    auto & g = emb.graph();
    int n = g.size();

    vector<int> order;
    for (auto & f : t.facets)
        if (f.size() == 3)
            order.insert(order.end(), f.begin(), f.end());

    // labels 0..3 stand for the K4 vertices 1..4
    vector<int> label(n, -1);
    auto consistent = [&] (int v) {
        for (auto w : g.neighbours(v)) {
            if (label[w] == label[v])
                return false;
            unsigned seen = 0;
            for (auto x : g.neighbours(w))
                if (label[x] >= 0) {
                    if (seen >> label[x] & 1)
                        return false;
                    seen |= 1u << label[x];
                }
        }
        return true;
    };

    auto all_rich = [&] {
        for (auto & f : t.facets) {
            if (f.size() != 8)
                continue;
            set<Edge> represented;
            for (std::size_t i = 0 ; i < f.size() ; ++i)
                represented.emplace(label[f[i]], label[f[(i + 1) % f.size()]]);
            if (represented.size() != 6)
                return false;
        }
        return true;
    };

    NodeCounter counter(budget_from_environment(), "search_rich_k4_emulator");
    std::function<bool (std::size_t)> place = [&] (std::size_t i) -> bool {
        counter.tick();
        if (i == order.size())
            return all_rich();
        auto v = order[i];
        for (int l = 0 ; l < 4 ; ++l) {
            label[v] = l;
            if (consistent(v) && place(i + 1))
                return true;
        }
        label[v] = -1;
        return false;
    };
    if (! place(0))
        throw SearchFailed("search_rich_k4_emulator: no labelling of the truncated cube has six rich octagons");

    auto k4 = complete_graph(4);
    vector<VertexId> map(label.begin(), label.end());
    EmbeddedProjection ep{ Projection(g, k4, map), emb };
    certify(ep, "search_rich_k4_emulator");
    if (! verify_cover(ep.projection).valid)
        throw InvariantBroken("search_rich_k4_emulator: not a cover");

    RichK4 result{ ep, {} };
    for (auto & f : faces(emb))
        if (is_rich_face(ep.projection, f))
            result.rich_faces.push_back(f);
    // every edge needs a rich face on one side
    set<Edge> on_rich;
    for (auto & f : result.rich_faces)
        for (auto & d : f.boundary)
            on_rich.emplace(d.from, d.to);
    if (int(on_rich.size()) != int(g.edge_count()))
        throw InvariantBroken("search_rich_k4_emulator: an edge borders no rich face");
    return result;
}

auto emul::build_e2_emulator() -> EmbeddedProjection
{
    auto rich = search_rich_k4_emulator();
    auto & h0 = rich.cover.projection;
    auto target = builtin("E2");

    Graph host;
    vector<VertexId> map;
    for (VertexId v = 0 ; v < h0.host().size() ; ++v) {
        host.add_vertex(h0.host().label(v));
        map.push_back(target.id(h0.target().label(h0.image(v))));
    }

    std::map<Edge, VertexId> middle;
    for (auto & e : h0.host().edges()) {
        auto a = h0.target().label(h0.image(e.u)), b = h0.target().label(h0.image(e.v));
        auto m = host.add_vertex(host.label(e.u) + "|" + host.label(e.v));
        host.add_edge(e.u, m);
        host.add_edge(e.v, m);
        map.push_back(target.id(std::min(a, b) + std::max(a, b)));
        middle[e] = m;
    }

    for (std::size_t i = 0 ; i < rich.rich_faces.size() ; ++i) {
        auto z = host.add_vertex("z" + std::to_string(i));
        map.push_back(target.id("0"));
        for (auto & d : rich.rich_faces[i].boundary)
            host.add_edge(z, middle.at(Edge(d.from, d.to)));
    }

    auto result = make_embedded(std::move(host), target, std::move(map));
    certify(result, "build_e2_emulator");
    return result;
}

auto emul::build_k1222_family_emulator(const string & name, const Catalog & catalog) -> FamilyEmulator
{
    auto & wanted = catalog.get(name).graph;
    auto e2 = builtin("E2");
    const vector<string> core{ "1", "2", "3", "4" };

    for (unsigned mask = 0 ; mask < 16 ; ++mask) {
        vector<string> chosen;
        auto g = e2;
        for (int i = 0 ; i < 4 ; ++i)
            if (mask >> i & 1) {
                chosen.push_back(core[i]);
                g = yd_transform(g, core[i]);
            }
        if (g.size() != wanted.size() || g.edge_count() != wanted.edge_count() || ! is_isomorphic(g, wanted))
            continue;

        auto ep = build_e2_emulator();
        for (auto & v : chosen)
            ep = lift_yd(ep.projection, v, ep.embedding);
        if (! is_isomorphic(ep.projection.target(), wanted))
            throw InvariantBroken("build_k1222_family_emulator: lifted target differs from the transformed graph");
        certify(ep, "build_k1222_family_emulator");
        return FamilyEmulator{ catalog.get(name).name, chosen, ep };
    }
    throw IdentificationFailed("no YDelta subset of the core of E2 gives a graph isomorphic to '" + name + "'");
}

namespace
{
    auto face_mask(const vector<int> & f) -> unsigned
    {
        unsigned m = 0;
        for (auto v : f)
            m |= 1u << v;
        return m;
    }

    auto other_face(int a, int b, unsigned current) -> unsigned
    {
        for (auto & f : cube_faces) {
            auto m = face_mask(f);
            if ((m >> a & 1) && (m >> b & 1) && m != current)
                return m;
        }
        throw InvariantBroken("rolling cube: no second face on a ridge");
    }

    auto square_mask(const CubeSquare & s) -> unsigned
    {
        return 1u << s[0] | 1u << s[1] | 1u << s[2] | 1u << s[3];
    }

    auto adjacent_in(unsigned rest, int to) -> int
    {
        for (int r = 0 ; r < 8 ; ++r)
            if ((rest >> r & 1) && cube_adjacent(r, to))
                return r;
        throw InvariantBroken("rolling cube: no adjacent corner");
    }

    enum { BL, BR, FR, FL };

    // roll over the front ridge
    auto roll_straight(const CubeSquare & s) -> CubeSquare
    {
        auto next = other_face(s[FL], s[FR], square_mask(s));
        auto rest = next & ~(1u << s[FL] | 1u << s[FR]);
        return { s[FL], s[FR], adjacent_in(rest, s[FR]), adjacent_in(rest, s[FL]) };
    }

    // roll over the right ridge; the old right side becomes the back
    auto roll_right(const CubeSquare & s) -> CubeSquare
    {
        auto next = other_face(s[BR], s[FR], square_mask(s));
        auto rest = next & ~(1u << s[BR] | 1u << s[FR]);
        return { s[FR], s[BR], adjacent_in(rest, s[BR]), adjacent_in(rest, s[FR]) };
    }

    constexpr int rolls_per_side = 7;
    constexpr int trace_length = 3 * rolls_per_side;

    auto is_turn(int k) -> bool
    {
        return k % rolls_per_side == 0;
    }
}

auto emul::gadget_properties(const RollingGadget & gd) -> vector<std::pair<string, bool>>
{
    auto & g = gd.graph;
    auto & lab = gd.cube_label;
    vector<bool> outside(g.size(), false);
    for (auto v : gd.outer_walk)
        outside[v] = true;
    auto missing = [&] (VertexId v) {
        set<int> need;
        for (int b = 0 ; b < 3 ; ++b)
            need.insert(lab[v] ^ (1 << b));
        for (auto w : g.neighbours(v))
            need.erase(lab[w]);
        return need.size();
    };
    auto is_corner = [&] (VertexId v) { return std::find(gd.corners.begin(), gd.corners.end(), v) != gd.corners.end(); };

    bool zeros = true, middles = true, sevens = true;
    int pivots = 0;
    for (VertexId v = 0 ; v < g.size() ; ++v) {
        if (lab[v] == 0)
            zeros = zeros && outside[v] && missing(v) == (is_corner(v) ? 1u : 0u);
        else if (lab[v] == 7)
            sevens = sevens && ! outside[v] && missing(v) == 0 && g.degree(v) == 3;
        else {
            middles = middles && missing(v) == 0 && (g.degree(v) == 3 || (g.degree(v) == 4 && ! outside[v]));
            pivots += g.degree(v) == 4;
        }
    }
    middles = middles && pivots == 3;

    set<int> inside_labels, side_labels;
    for (auto v : gd.inside)
        if (lab[v] != 7)
            inside_labels.insert(lab[v]);
    array<set<int>, 3> per_side;
    for (int i = 0 ; i < 3 ; ++i)
        for (auto v : gd.sides[i])
            if (lab[v] != 0) {
                per_side[i].insert(lab[v]);
                side_labels.insert(lab[v]);
            }
    set<int> one_to_six{ 1, 2, 3, 4, 5, 6 };
    bool x_ok = inside_labels == one_to_six && side_labels == one_to_six;

    // 5 only north, 3 only south-east, 6 only south-west
    const array<int, 3> only{ 5, 3, 6 };
    bool sides_ok = true;
    for (int i = 0 ; i < 3 ; ++i)
        for (int j = 0 ; j < 3 ; ++j)
            sides_ok = sides_ok && (per_side[j].count(only[i]) == (i == j ? 1u : 0u));

    bool trace_ok = gd.squares.size() == std::size_t(trace_length);
    for (int side = 0 ; side < 3 && trace_ok ; ++side) {
        map<unsigned, int> down;
        for (int k = 0 ; k <= rolls_per_side ; ++k)
            ++down[square_mask(gd.squares[(side * rolls_per_side + k) % trace_length])];
        for (auto & [_, c] : down)
            trace_ok = trace_ok && c == 2;
        trace_ok = trace_ok && down.size() == 4;
    }

    return {
        { "zero-outside", zeros },
        { "one-to-six-complete", middles },
        { "seven-inside", sevens },
        { "x-covers", x_ok },
        { "side-labels", sides_ok },
        { "roll-trace", trace_ok }
    };
}

auto emul::rolling_cube_gadget() -> RollingGadget
{
    CubeSquare start{ 0, 2, 3, 1 };
    vector<CubeSquare> trace{ start };
    for (int side = 0 ; side < 3 ; ++side)
        for (int r = 0 ; r < rolls_per_side ; ++r)
            trace.push_back(r == 0 && side > 0 ? roll_right(trace.back()) : roll_straight(trace.back()));
    if (square_mask(trace.back()) != square_mask(start))
        throw TraceMismatch("rolling cube: the trace does not return to the starting facet");
    if (trace[4] != start)
        throw TraceMismatch("rolling cube: four rolls about one axis do not restore the orientation");

    // the arrival square closes the loop and the first roll out of it is a turn
    RollingGadget gd;
    gd.squares.push_back(trace.back());
    for (int k = 1 ; k < trace_length ; ++k)
        gd.squares.push_back(trace[k]);
    if (roll_right(gd.squares[0]) != gd.squares[1])
        throw TraceMismatch("rolling cube: the closing turn does not lead back into the trace");

    vector<int> parent(4 * trace_length);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int (int)> find = [&] (int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&] (int a, int b) { parent[find(a)] = find(b); };
    for (int k = 0 ; k < trace_length ; ++k) {
        int nk = (k + 1) % trace_length;
        if (is_turn(k)) {
            unite(4 * k + FR, 4 * nk + BL);
            unite(4 * k + BR, 4 * nk + BR);
        }
        else {
            unite(4 * k + FL, 4 * nk + BL);
            unite(4 * k + FR, 4 * nk + BR);
        }
    }

    map<int, VertexId> vertex_of;
    auto vertex = [&] (int k, int c) {
        auto root = find(4 * k + c);
        auto it = vertex_of.find(root);
        if (it == vertex_of.end()) {
            auto v = gd.graph.add_vertex("g" + std::to_string(vertex_of.size()));
            gd.cube_label.push_back(gd.squares[k][c]);
            it = vertex_of.emplace(root, v).first;
        }
        if (gd.cube_label[it->second] != gd.squares[k][c])
            throw TraceMismatch("rolling cube: glued corners carry different labels");
        return it->second;
    };

    for (int k = 0 ; k < trace_length ; ++k)
        for (int c = 0 ; c < 4 ; ++c)
            gd.graph.add_edge(vertex(k, c), vertex(k, (c + 1) % 4));

    for (int k = 0 ; k < trace_length ; ++k) {
        vector<VertexId> step{ vertex(k, BL) };
        if (is_turn(k))
            step = { vertex(k, BL), vertex(k, FL), vertex(k, FR) };
        for (auto v : step)
            if (gd.outer_walk.empty() || gd.outer_walk.back() != v)
                gd.outer_walk.push_back(v);
    }
    if (gd.outer_walk.size() > 1 && gd.outer_walk.front() == gd.outer_walk.back())
        gd.outer_walk.pop_back();

    for (int i = 0 ; i < 3 ; ++i)
        gd.corners[i] = vertex(i * rolls_per_side, FL);
    array<std::size_t, 3> pos;
    for (int i = 0 ; i < 3 ; ++i)
        pos[i] = std::find(gd.outer_walk.begin(), gd.outer_walk.end(), gd.corners[i]) - gd.outer_walk.begin();
    auto n = gd.outer_walk.size();
    for (int i = 0 ; i < 3 ; ++i)
        for (auto j = pos[i] ; ; j = (j + 1) % n) {
            gd.sides[i].push_back(gd.outer_walk[j]);
            if (j == pos[(i + 1) % 3])
                break;
        }

    set<VertexId> on_walk(gd.outer_walk.begin(), gd.outer_walk.end());
    for (VertexId v = 0 ; v < gd.graph.size() ; ++v)
        if (! on_walk.count(v))
            gd.inside.push_back(v);

    for (auto & [name, holds] : gadget_properties(gd))
        if (! holds)
            throw TraceMismatch("rolling cube gadget: property '" + name + "' fails");
    return gd;
}

auto emul::build_c4_emulator() -> C4Emulator
{
    auto gd = rolling_cube_gadget();
    auto t = cuboctahedron_template();
    auto target = builtin("C4");

    vector<int> triangles, squares;
    for (std::size_t f = 0 ; f < t.facets.size() ; ++f)
        (t.facets[f].size() == 3 ? triangles : squares).push_back(int(f));

    // which cube label each gadget corner is missing, and which of 5, 3, 6 marks each side
    array<int, 3> corner_missing;
    for (int i = 0 ; i < 3 ; ++i) {
        int need = 1 | 2 | 4;
        for (auto w : gd.graph.neighbours(gd.corners[i]))
            need &= ~(1 << std::countr_zero(unsigned(gd.cube_label[w])));
        corner_missing[i] = need;
    }
    const array<int, 3> side_type{ 5, 3, 6 };

    map<Edge, int> square_of_ridge;
    for (auto s : squares) {
        auto & f = t.facets[s];
        for (std::size_t i = 0 ; i < f.size() ; ++i)
            square_of_ridge[Edge(f[i], f[(i + 1) % f.size()])] = s;
    }

    auto placed = [&] (int tri, array<int, 2> o) {
        auto & f = t.facets[triangles[tri]];
        array<int, 3> order;
        for (int i = 0 ; i < 3 ; ++i)
            order[i] = f[((o[1] ? -i : i) + o[0] + 3) % 3];
        return order;
    };

    vector<array<int, 2>> options;
    for (int s = 0 ; s < 2 ; ++s)
        for (int r = 0 ; r < 3 ; ++r)
            options.push_back({ r, s });

    vector<array<int, 2>> chosen;
    map<int, vector<int>> missing_at;
    map<int, vector<int>> types_at;
    std::function<bool ()> assign = [&] () -> bool {
        if (chosen.size() == triangles.size())
            return true;
        int tri = int(chosen.size());
        for (auto & o : options) {
            auto order = placed(tri, o);
            bool ok = true;
            for (int i = 0 ; i < 3 ; ++i) {
                auto & m = missing_at[order[i]];
                ok = ok && std::find(m.begin(), m.end(), corner_missing[i]) == m.end();
            }
            // a square sees each side type once it is surrounded
            vector<int> touched;
            for (int i = 0 ; i < 3 ; ++i)
                touched.push_back(square_of_ridge.at(Edge(order[i], order[(i + 1) % 3])));
            for (int i = 0 ; i < 3 && ok ; ++i) {
                auto types = types_at[touched[i]];
                for (int j = 0 ; j < 3 ; ++j)
                    if (touched[j] == touched[i])
                        types.push_back(side_type[j]);
                if (types.size() == 4 && set<int>(types.begin(), types.end()) != set<int>(side_type.begin(), side_type.end()))
                    ok = false;
            }
            if (! ok)
                continue;
            for (int i = 0 ; i < 3 ; ++i) {
                missing_at[order[i]].push_back(corner_missing[i]);
                types_at[touched[i]].push_back(side_type[i]);
            }
            chosen.push_back(o);
            if (assign())
                return true;
            chosen.pop_back();
            for (int i = 0 ; i < 3 ; ++i) {
                missing_at[order[i]].pop_back();
                types_at[touched[i]].pop_back();
            }
        }
        return false;
    };
    if (! assign())
        throw AssemblyFailed("build_c4_emulator: no rotation of the gadgets fits the cuboctahedron");

    Graph host;
    vector<VertexId> map;
    for (auto & c : t.corners) {
        host.add_vertex("q" + c);
        map.push_back(target.id("0"));
    }
    vector<VertexId> square_x(t.facets.size(), -1);
    for (auto s : squares) {
        square_x[s] = host.add_vertex("xs" + std::to_string(s));
        map.push_back(target.id("x"));
    }

    for (int tri = 0 ; tri < int(triangles.size()) ; ++tri) {
        auto order = placed(tri, chosen[tri]);
        vector<VertexId> copy(gd.graph.size());
        for (VertexId v = 0 ; v < gd.graph.size() ; ++v) {
            auto c = std::find(gd.corners.begin(), gd.corners.end(), v);
            if (c != gd.corners.end())
                copy[v] = order[c - gd.corners.begin()];
            else {
                copy[v] = host.add_vertex("t" + std::to_string(tri) + ":" + gd.graph.label(v));
                map.push_back(target.id(std::to_string(gd.cube_label[v])));
            }
        }
        for (auto & e : gd.graph.edges())
            host.add_edge(copy[e.u], copy[e.v]);

        auto x = host.add_vertex("xt" + std::to_string(tri));
        map.push_back(target.id("x"));
        for (auto v : gd.inside)
            if (gd.cube_label[v] != 7)
                host.add_edge(x, copy[v]);
        for (int i = 0 ; i < 3 ; ++i) {
            auto s = square_of_ridge.at(Edge(order[i], order[(i + 1) % 3]));
            for (auto v : gd.sides[i])
                if (gd.cube_label[v] != 0)
                    host.add_edge(square_x[s], copy[v]);
        }
    }

    auto ep = make_embedded(std::move(host), target, std::move(map));
    certify(ep, "build_c4_emulator");
    return C4Emulator{ ep, chosen };
}

namespace
{
    // hexagon position p carries the label of residue p mod 3
    auto residues(unsigned mask) -> unsigned
    {
        unsigned r = 0;
        for (int p = 0 ; p < 6 ; ++p)
            if (mask >> p & 1)
                r |= 1u << (p % 3);
        return r;
    }

    auto cell_is_plane(const vector<unsigned> & hex, const vector<array<int, 2>> & edges) -> bool
    {
        Graph g;
        for (int p = 0 ; p < 6 ; ++p)
            g.add_vertex("h" + std::to_string(p));
        auto apex = g.add_vertex("apex");
        for (int p = 0 ; p < 6 ; ++p) {
            g.add_edge(p, (p + 1) % 6);
            g.add_edge(apex, p);
        }
        for (std::size_t j = 0 ; j < hex.size() ; ++j) {
            auto v = g.add_vertex("i" + std::to_string(j));
            for (int p = 0 ; p < 6 ; ++p)
                if (hex[j] >> p & 1)
                    g.add_edge(v, p);
        }
        for (auto & e : edges)
            g.add_edge(7 + e[0], 7 + e[1]);
        return is_planar(g);
    }
}

auto emul::enumerate_k7c4_cells(const string & kind, int max_interior,
        const std::function<bool (const K7Cell &)> & found) -> void
{
    if (kind.size() != 2)
        throw InvalidInput("a cell kind is two letters");

    vector<unsigned> choices;
    for (unsigned m = 0 ; m < 64 ; ++m)
        if (residues(m) == 7)
            choices.push_back(m);
    std::stable_sort(choices.begin(), choices.end(), [] (unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

    NodeCounter counter(budget_from_environment(), "enumerate_k7c4_cells");
    for (int k = 2 ; k <= max_interior ; ++k)
        for (unsigned letters = 1 ; letters + 1 < (1u << k) ; ++letters) {
            vector<array<int, 2>> cross;
            for (int a = 0 ; a < k ; ++a)
                for (int b = a + 1 ; b < k ; ++b)
                    if ((letters >> a & 1) != (letters >> b & 1))
                        cross.push_back({ a, b });

            vector<unsigned> hex(k);
            std::function<bool (int, std::size_t)> pick = [&] (int j, std::size_t from) -> bool {
                counter.tick();
                if (j == k) {
                    // midpoints see both letters, corners see at least one
                    for (int p = 0 ; p < 6 ; ++p) {
                        unsigned seen = 0;
                        for (int i = 0 ; i < k ; ++i)
                            if (hex[i] >> p & 1)
                                seen |= 1u << (letters >> i & 1);
                        if (seen != 3 && (p % 2 == 1 || seen == 0))
                            return false;
                    }
                    for (unsigned em = 1 ; em < (1u << cross.size()) ; ++em) {
                        counter.tick();
                        vector<array<int, 2>> edges;
                        vector<int> degree(k, 0);
                        for (std::size_t i = 0 ; i < cross.size() ; ++i)
                            if (em >> i & 1) {
                                edges.push_back(cross[i]);
                                ++degree[cross[i][0]];
                                ++degree[cross[i][1]];
                            }
                        if (std::count(degree.begin(), degree.end(), 0))
                            continue;
                        if (! cell_is_plane(hex, edges))
                            continue;
                        K7Cell cell{ kind, {}, {}, edges };
                        for (int i = 0 ; i < k ; ++i) {
                            cell.interior.push_back(kind[letters >> i & 1]);
                            vector<int> ps;
                            for (int p = 0 ; p < 6 ; ++p)
                                if (hex[i] >> p & 1)
                                    ps.push_back(p);
                            cell.hexagon_neighbours.push_back(ps);
                        }
                        if (found(cell))
                            return true;
                    }
                    return false;
                }
                // vertices with the same letter come in nondecreasing choice order
                bool same = j > 0 && (letters >> j & 1) == (letters >> (j - 1) & 1);
                for (auto c = same ? from : 0 ; c < choices.size() ; ++c) {
                    hex[j] = choices[c];
                    if (pick(j + 1, c))
                        return true;
                }
                return false;
            };
            if (pick(0, 0))
                return;
        }
}

auto emul::search_k7c4_cell(const string & kind) -> K7Cell
{
    optional<K7Cell> result;
    enumerate_k7c4_cells(kind, 4, [&] (const K7Cell & c) { result = c; return true; });
    if (! result)
        throw SearchFailed("search_k7c4_cell: no cell with at most four interior vertices");
    return *result;
}

auto emul::build_k7c4_emulator() -> K7Emulator
{
    auto t = octahedron_template();
    auto target = builtin("K7-C4");
    const array<string, 6> corner_label{ "1", "1", "2", "2", "3", "3" };
    const string kinds[2] = { "AB", "CD" };

    auto parity = [&] (std::size_t f) {
        int minus = 0;
        for (auto c : t.facets[f])
            minus += c % 2;
        return minus % 2;
    };

    vector<array<int, 3>> options;
    for (int r = 0 ; r < 3 ; ++r)
        for (int refl = 0 ; refl < 2 ; ++refl)
            for (int swap = 0 ; swap < 2 ; ++swap)
                options.push_back({ r, refl, swap });

    optional<K7Emulator> result;
    auto try_cell = [&] (const K7Cell & cell) -> bool {
        // letters a corner sees inside one facet, per orientation
        auto corner_letters = [&] (std::size_t f, const array<int, 3> & o) {
            array<unsigned, 3> seen{};
            for (std::size_t j = 0 ; j < cell.interior.size() ; ++j) {
                int letter = (cell.interior[j] == cell.kind[1]) ^ o[2];
                for (auto p : cell.hexagon_neighbours[j]) {
                    int q = (((o[1] ? -p : p) + 2 * o[0]) % 6 + 6) % 6;
                    if (q % 2 == 0)
                        seen[q / 2] |= 1u << letter;
                }
            }
            (void) f;
            return seen;
        };

        vector<array<int, 3>> chosen;
        // per corner and kind, letters collected so far
        vector<array<unsigned, 2>> have(6, { 0, 0 });
        vector<int> remaining(6, 0);
        for (auto & f : t.facets)
            for (auto c : f)
                ++remaining[c];

        std::function<bool ()> assign = [&] () -> bool {
            if (chosen.size() == t.facets.size())
                return true;
            auto f = chosen.size();
            for (auto & o : options) {
                auto seen = corner_letters(f, o);
                auto saved = have;
                bool ok = true;
                for (int i = 0 ; i < 3 ; ++i) {
                    auto c = t.facets[f][i];
                    have[c][parity(f)] |= seen[i];
                    --remaining[c];
                    if (remaining[c] == 0 && (have[c][0] != 3 || have[c][1] != 3))
                        ok = false;
                }
                if (ok) {
                    chosen.push_back(o);
                    if (assign())
                        return true;
                    chosen.pop_back();
                }
                have = saved;
                for (int i = 0 ; i < 3 ; ++i)
                    ++remaining[t.facets[f][i]];
            }
            return false;
        };
        if (! assign())
            return false;

        Graph host;
        vector<VertexId> map;
        for (int c = 0 ; c < 6 ; ++c) {
            host.add_vertex(t.corners[c]);
            map.push_back(target.id(corner_label[c]));
        }
        std::map<Edge, VertexId> middle;
        for (auto & e : t.ridges()) {
            auto m = host.add_vertex("m" + t.corners[e.u] + t.corners[e.v]);
            set<string> third{ "1", "2", "3" };
            third.erase(corner_label[e.u]);
            third.erase(corner_label[e.v]);
            map.push_back(target.id(*third.begin()));
            middle[e] = m;
        }
        for (std::size_t f = 0 ; f < t.facets.size() ; ++f) {
            auto & fc = t.facets[f];
            array<VertexId, 6> hexa;
            for (int i = 0 ; i < 3 ; ++i) {
                hexa[2 * i] = fc[i];
                hexa[2 * i + 1] = middle.at(Edge(fc[i], fc[(i + 1) % 3]));
            }
            for (int i = 0 ; i < 6 ; ++i)
                host.add_edge(hexa[i], hexa[(i + 1) % 6]);
            auto & o = chosen[f];
            auto & kind = kinds[parity(f)];
            vector<VertexId> inner;
            for (std::size_t j = 0 ; j < cell.interior.size() ; ++j) {
                int letter = (cell.interior[j] == cell.kind[1]) ^ o[2];
                inner.push_back(host.add_vertex("f" + std::to_string(f) + "." + std::to_string(j)));
                map.push_back(target.id(string(1, kind[letter])));
                for (auto p : cell.hexagon_neighbours[j])
                    host.add_edge(inner.back(), hexa[(((o[1] ? -p : p) + 2 * o[0]) % 6 + 6) % 6]);
            }
            for (auto & e : cell.interior_edges)
                host.add_edge(inner[e[0]], inner[e[1]]);
        }

        auto ep = make_embedded(std::move(host), target, std::move(map));
        certify(ep, "build_k7c4_emulator");
        result = K7Emulator{ ep, cell, chosen };
        return true;
    };

    enumerate_k7c4_cells("AB", 4, try_cell);
    if (! result)
        throw AssemblyFailed("build_k7c4_emulator: no cell assembles on the octahedron");
    return *result;
}

auto emul::construction_names() -> vector<string>
{
    return { "rich-k4", "e2", "k1222", "b7", "c3", "d2", "c4", "k7-c4" };
}

auto emul::construct(const string & name, const Catalog & catalog) -> EmbeddedProjection
{
    auto key = normalize_name(name);
    if (key == "rich-k4")
        return search_rich_k4_emulator().cover;
    if (key == "e2")
        return build_e2_emulator();
    if (key == "k1222")
        return build_k1222_family_emulator("K1,2,2,2", catalog).emulator;
    if (key == "b7" || key == "c3" || key == "d2")
        return build_k1222_family_emulator(name, catalog).emulator;
    if (key == "c4")
        return build_c4_emulator().emulator;
    if (key == "k7-c4")
        return build_k7c4_emulator().emulator;
    throw UnknownName(name);
}
