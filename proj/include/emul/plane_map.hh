#ifndef EMUL_GUARD_INCLUDE_EMUL_PLANE_MAP_HH
#define EMUL_GUARD_INCLUDE_EMUL_PLANE_MAP_HH 1

#include <emul/planarity.hh>
#include <emul/projection.hh>

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace emul
{
    /**
     * Mutable half-edge view of an embedded projection, used for local
     * surgery. Edges have identity, so parallel edges created by a merge can
     * be removed one at a time without confusing the two copies.
     */
    class PlaneMap
    {
        private:
            struct HalfEdge
            {
                int tail, head, twin;
                bool alive;
            };

            std::vector<std::string> _labels;
            std::vector<bool> _alive;
            std::vector<VertexId> _image;
            std::vector<std::vector<int>> _rotation;
            std::vector<HalfEdge> _darts;
            std::set<std::string> _used_labels;

            auto new_vertex(const std::string & label, VertexId image) -> int;
            auto new_edge(int u, int v) -> std::pair<int, int>;
            auto kill_edge(int dart) -> void;
            auto position(int v, int dart) const -> std::size_t;
            auto fresh(const std::string & base) -> std::string;

        public:
            PlaneMap(const Embedding & e, const std::vector<VertexId> & image);

            auto vertex_count() const -> int { return int(_labels.size()); }
            auto alive(int v) const -> bool { return _alive[v]; }
            auto label(int v) const -> const std::string & { return _labels[v]; }
            auto image(int v) const -> VertexId { return _image[v]; }
            auto degree(int v) const -> int { return int(_rotation[v].size()); }

            // neighbours in rotation order
            auto neighbours(int v) const -> std::vector<int>;

            // merge y1 and y2 as if an edge joined the corner of y1 just after rotation
            // position after1 to the corner of y2 just after position after2 and was
            // contracted; the corners must lie on a common face. Returns the survivor.
            auto merge_vertices(int y1, std::size_t after1, int y2, std::size_t after2) -> int;

            // merge the neighbours of x at rotation positions i and i+1 through their common face
            auto merge_neighbours(int x, std::size_t i) -> void;

            // split x into x (positions from..to) and a new vertex (positions to..from), sharing both ends
            auto split_arcs(int x, std::size_t from, std::size_t to) -> int;

            // split x into degree / 3 vertices, each taking three consecutive positions
            auto split_triples(int x) -> std::vector<int>;

            // replace the degree 3 vertex u by a triangle on its neighbours
            auto yd(int u) -> void;

            // removes one edge of every parallel pair
            auto simplify() -> void;

            auto euler_ok() const -> bool;

            // compacted host graph, rotation and map onto target
            auto export_embedding() const -> Embedding;
            auto export_map() const -> std::vector<VertexId>;
    };
}

#endif
