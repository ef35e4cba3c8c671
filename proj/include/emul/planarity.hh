#ifndef EMUL_GUARD_INCLUDE_EMUL_PLANARITY_HH
#define EMUL_GUARD_INCLUDE_EMUL_PLANARITY_HH 1

#include <emul/graph.hh>

#include <array>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace emul
{
    struct Dart
    {
        VertexId from, to;

        auto operator<=>(const Dart &) const = default;
    };

    /**
     * A rotation system: for every vertex, the clockwise cyclic order of its
     * neighbours. The face walk after dart (u, v) continues with
     * (v, successor of u around v).
     */
    class Embedding
    {
        private:
            Graph _graph;
            std::vector<std::vector<VertexId>> _rotation;
            // _position[v][i]: index in _rotation[v] of the i-th sorted neighbour
            std::vector<std::vector<int>> _position;

            auto index_of(VertexId v, VertexId w) const -> int;

        public:
            // throws CorruptRotation unless every vertex lists exactly its neighbours, once each
            Embedding(Graph graph, std::vector<std::vector<VertexId>> rotation);

            auto graph() const -> const Graph & { return _graph; }
            auto rotation(VertexId v) const -> const std::vector<VertexId> & { return _rotation[v]; }
            auto rotations() const -> const std::vector<std::vector<VertexId>> & { return _rotation; }

            auto successor(VertexId v, VertexId w) const -> VertexId;
            auto predecessor(VertexId v, VertexId w) const -> VertexId;
            auto next_dart(Dart d) const -> Dart;
    };

    struct Face
    {
        std::vector<Dart> boundary;

        auto length() const -> std::size_t { return boundary.size(); }
    };

    // throws CorruptRotation if a walk does not close
    auto faces(const Embedding & e) -> std::vector<Face>;

    // V - E + F = 2 on every connected component (isolated vertices count one face)
    auto euler_check(const Embedding & e) -> bool;

    enum class Topology
    {
        K5,
        K33,
        K4,
        K23
    };

    auto topology_name(Topology t) -> std::string;

    // decides whether the subgraph formed by edges is a subdivision of K5, K3,3, K4 or K2,3
    auto recognise_subdivision(const Graph & g, const std::vector<Edge> & edges) -> std::optional<Topology>;

    struct PlanarityResult
    {
        bool planar = false;
        std::optional<Embedding> embedding;
        std::vector<Edge> kuratowski;
        std::optional<Topology> kuratowski_kind;
    };

    // outputs are certified: an Euler-consistent rotation system, or a recognised K5 / K3,3 subdivision
    auto test_planarity(const Graph & g) -> PlanarityResult;
    auto is_planar(const Graph & g) -> bool;

    // throws InvalidSeparation if boundary/side do not describe a separation side
    auto is_flat_separation(const Graph & g, const std::array<std::string, 3> & boundary,
            const std::vector<std::string> & side) -> bool;

    struct RotationText
    {
        std::vector<std::string> vertices;
        std::vector<std::vector<std::string>> rotation;
        std::vector<std::vector<int>> signs;   // +1 / -1 per rotation entry
        std::vector<int> lines;
    };

    // "v: n1 n2 ..." lines; with allow_signs a leading '-' marks a negative edge
    auto read_rotation_text(std::istream & in, bool allow_signs) -> RotationText;

    // builds the graph from the rotations, which must be symmetric
    auto embedding_from_text(const RotationText & text) -> Embedding;

    auto read_embedding(std::istream & in) -> Embedding;
    auto parse_embedding(const std::string & text) -> Embedding;
    auto write_embedding(std::ostream & out, const Embedding & e) -> void;
    auto format_embedding(const Embedding & e) -> std::string;
}

#endif
