#include <emul/plane_map.hh>
#include <emul/errors.hh>

#include <algorithm>
#include <map>

using namespace emul;

using std::pair;
using std::string;
using std::vector;

PlaneMap::PlaneMap(const Embedding & e, const vector<VertexId> & image)
{
    auto & g = e.graph();
    for (VertexId v = 0 ; v < g.size() ; ++v)
        new_vertex(g.label(v), image[v]);

    std::map<pair<int, int>, int> dart_of;
    for (auto & ed : g.edges()) {
        auto [a, b] = new_edge(ed.u, ed.v);
        dart_of[{ ed.u, ed.v }] = a;
        dart_of[{ ed.v, ed.u }] = b;
    }
    for (VertexId v = 0 ; v < g.size() ; ++v)
        for (auto w : e.rotation(v))
            _rotation[v].push_back(dart_of.at({ v, w }));
}

auto PlaneMap::new_vertex(const string & label, VertexId image) -> int
{
    _labels.push_back(label);
    _alive.push_back(true);
    _image.push_back(image);
    _rotation.emplace_back();
    _used_labels.insert(label);
    return int(_labels.size()) - 1;
}

auto PlaneMap::new_edge(int u, int v) -> pair<int, int>
{
    int a = int(_darts.size());
    _darts.push_back({ u, v, a + 1, true });
    _darts.push_back({ v, u, a, true });
    return { a, a + 1 };
}

auto PlaneMap::position(int v, int dart) const -> std::size_t
{
    auto & rot = _rotation[v];
    auto it = std::find(rot.begin(), rot.end(), dart);
    if (it == rot.end())
        throw InvariantBroken("plane map: dart missing from rotation");
    return std::size_t(it - rot.begin());
}

auto PlaneMap::kill_edge(int dart) -> void
{
    for (auto d : { dart, _darts[dart].twin }) {
        auto & rot = _rotation[_darts[d].tail];
        rot.erase(rot.begin() + position(_darts[d].tail, d));
        _darts[d].alive = false;
    }
}

auto PlaneMap::fresh(const string & base) -> string
{
    for (int i = 1 ; ; ++i) {
        auto candidate = base + "." + std::to_string(i);
        if (! _used_labels.contains(candidate))
            return candidate;
    }
}

auto PlaneMap::neighbours(int v) const -> vector<int>
{
    vector<int> result;
    for (auto d : _rotation[v])
        result.push_back(_darts[d].head);
    return result;
}

auto PlaneMap::merge_vertices(int y1, std::size_t after1, int y2, std::size_t after2) -> int
{
    if (y1 == y2)
        throw InvariantBroken("plane map: merging a vertex with itself");
    for (auto d : _rotation[y1])
        if (_darts[d].head == y2)
            throw InvariantBroken("plane map: merging adjacent vertices");

    vector<int> merged;
    for (auto [y, after] : { pair{ y1, after1 }, pair{ y2, after2 } }) {
        auto & r = _rotation[y];
        for (std::size_t k = 1 ; k <= r.size() ; ++k)
            merged.push_back(r[(after + k) % r.size()]);
    }

    int keep = _labels[y1] <= _labels[y2] ? y1 : y2;
    int gone = keep == y1 ? y2 : y1;
    _rotation[gone].clear();
    _alive[gone] = false;
    _rotation[keep] = merged;
    for (auto d : merged) {
        _darts[d].tail = keep;
        _darts[_darts[d].twin].head = keep;
    }
    simplify();
    return keep;
}

auto PlaneMap::merge_neighbours(int x, std::size_t i) -> void
{
    auto & rot = _rotation[x];
    auto d1 = rot[i % rot.size()], d2 = rot[(i + 1) % rot.size()];
    int y1 = _darts[d1].head, y2 = _darts[d2].head;
    int t1 = _darts[d1].twin, t2 = _darts[d2].twin;

    // the face through the corner of x runs y1 -> x -> y2: its corner at y1
    // sits just before t1, its corner at y2 just after t2
    auto p1 = position(y1, t1), p2 = position(y2, t2);
    auto n1 = _rotation[y1].size();
    merge_vertices(y1, (p1 + n1 - 1) % n1, y2, p2);
}

auto PlaneMap::split_arcs(int x, std::size_t from, std::size_t to) -> int
{
    auto rot = _rotation[x];
    auto d = rot.size();
    from %= d;
    to %= d;
    if (from == to)
        throw InvariantBroken("plane map: empty arc split");

    int y_from = _darts[rot[from]].head, y_to = _darts[rot[to]].head;
    int x2 = new_vertex(fresh(_labels[x]), _image[x]);

    vector<int> first, second;
    for (auto k = from ; ; k = (k + 1) % d) {
        first.push_back(rot[k]);
        if (k == to)
            break;
    }

    auto [to_dart, to_twin] = new_edge(x2, y_to);
    auto [from_dart, from_twin] = new_edge(x2, y_from);
    second.push_back(to_dart);
    for (auto k = (to + 1) % d ; k != from ; k = (k + 1) % d) {
        second.push_back(rot[k]);
        _darts[rot[k]].tail = x2;
        _darts[_darts[rot[k]].twin].head = x2;
    }
    second.push_back(from_dart);

    _rotation[x] = first;
    _rotation[x2] = second;

    // at y_from the old copy comes first, at y_to the new one does
    auto & rf = _rotation[y_from];
    rf.insert(rf.begin() + position(y_from, _darts[rot[from]].twin) + 1, from_twin);
    auto & rt = _rotation[y_to];
    rt.insert(rt.begin() + position(y_to, _darts[rot[to]].twin), to_twin);
    return x2;
}

auto PlaneMap::split_triples(int x) -> vector<int>
{
    auto rot = _rotation[x];
    if (rot.size() % 3 != 0)
        throw InvariantBroken("plane map: triple split of a degree not divisible by three");

    vector<int> result{ x };
    _rotation[x].assign(rot.begin(), rot.begin() + 3);
    for (std::size_t k = 3 ; k < rot.size() ; k += 3) {
        int v = new_vertex(fresh(_labels[x]), _image[x]);
        result.push_back(v);
        for (std::size_t j = k ; j < k + 3 ; ++j) {
            _rotation[v].push_back(rot[j]);
            _darts[rot[j]].tail = v;
            _darts[_darts[rot[j]].twin].head = v;
        }
    }
    return result;
}

auto PlaneMap::yd(int u) -> void
{
    auto rot = _rotation[u];
    if (rot.size() != 3)
        throw DegreeMismatch("plane map: YDelta at a vertex of degree " + std::to_string(rot.size()));

    int y[3];
    for (int k = 0 ; k < 3 ; ++k)
        y[k] = _darts[rot[k]].head;

    // out[k][0] leaves y_k towards y_{k+1}, out[k][1] towards y_{k-1}
    int out[3][2];
    for (int k = 0 ; k < 3 ; ++k) {
        auto [a, b] = new_edge(y[k], y[(k + 1) % 3]);
        out[k][0] = a;
        out[(k + 1) % 3][1] = b;
    }

    for (int k = 0 ; k < 3 ; ++k) {
        auto twin = _darts[rot[k]].twin;
        auto & r = _rotation[y[k]];
        auto p = position(y[k], twin);
        r[p] = out[k][0];
        r.insert(r.begin() + p + 1, out[k][1]);
        _darts[twin].alive = false;
        _darts[rot[k]].alive = false;
    }
    _rotation[u].clear();
    _alive[u] = false;
    simplify();
}

auto PlaneMap::simplify() -> void
{
    for (int v = 0 ; v < vertex_count() ; ++v) {
        if (! _alive[v])
            continue;
        bool again = true;
        while (again) {
            again = false;
            std::map<int, int> seen;
            for (auto d : _rotation[v]) {
                auto h = _darts[d].head;
                if (seen.contains(h)) {
                    kill_edge(d);
                    again = true;
                    break;
                }
                seen[h] = d;
            }
        }
    }
}

auto PlaneMap::euler_ok() const -> bool
{
    return euler_check(export_embedding());
}

auto PlaneMap::export_embedding() const -> Embedding
{
    Graph g;
    vector<int> id(vertex_count(), -1);
    for (int v = 0 ; v < vertex_count() ; ++v)
        if (_alive[v])
            id[v] = g.add_vertex(_labels[v]);

    vector<vector<VertexId>> rotation(g.size());
    for (int v = 0 ; v < vertex_count() ; ++v) {
        if (! _alive[v])
            continue;
        for (auto d : _rotation[v]) {
            auto & h = _darts[d];
            if (! h.alive || h.tail != v || ! _alive[h.head])
                throw InvariantBroken("plane map: stale dart in rotation");
            g.add_edge(id[v], id[h.head]);
            rotation[id[v]].push_back(id[h.head]);
        }
    }
    return Embedding(std::move(g), std::move(rotation));
}

auto PlaneMap::export_map() const -> vector<VertexId>
{
    vector<VertexId> result;
    for (int v = 0 ; v < vertex_count() ; ++v)
        if (_alive[v])
            result.push_back(_image[v]);
    return result;
}
