#ifndef EMUL_GUARD_INCLUDE_EMUL_GRAPH_HH
#define EMUL_GUARD_INCLUDE_EMUL_GRAPH_HH 1

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace emul
{
    using VertexId = int;

    struct Edge
    {
        VertexId u, v;

        Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) { }

        auto operator<=>(const Edge &) const = default;
    };

    /**
     * Simple undirected graph. Labels are strings, vertices are dense ints
     * in insertion order, and adjacency lists are kept sorted.
     */
    class Graph
    {
        private:
            std::vector<std::string> _labels;
            std::unordered_map<std::string, VertexId> _index;
            std::vector<std::vector<VertexId>> _adj;
            std::size_t _edges = 0;

        public:
            Graph() = default;

            auto add_vertex(const std::string & label) -> VertexId;

            // returns false if the edge was already present; loops are rejected
            auto add_edge(VertexId u, VertexId v) -> bool;
            auto add_edge(const std::string & u, const std::string & v) -> bool;

            auto size() const -> int { return int(_labels.size()); }
            auto edge_count() const -> std::size_t { return _edges; }

            auto label(VertexId v) const -> const std::string & { return _labels[v]; }
            auto labels() const -> const std::vector<std::string> & { return _labels; }
            auto find(const std::string & label) const -> std::optional<VertexId>;
            // throws UnknownVertex
            auto id(const std::string & label) const -> VertexId;
            auto has_vertex(const std::string & label) const -> bool;

            auto neighbours(VertexId v) const -> const std::vector<VertexId> & { return _adj[v]; }
            auto degree(VertexId v) const -> int { return int(_adj[v].size()); }
            auto adjacent(VertexId u, VertexId v) const -> bool;

            auto edges() const -> std::vector<Edge>;

            // same labels and same labelled edges
            auto operator==(const Graph & other) const -> bool;
    };

    auto read_graph(std::istream & in) -> Graph;
    auto parse_graph(const std::string & text) -> Graph;
    auto write_graph(std::ostream & out, const Graph & g) -> void;
    auto format_graph(const Graph & g) -> std::string;

    // a label not yet used in g, built from base
    auto fresh_label(const Graph & g, const std::string & base) -> std::string;

    auto complete_graph(int n, const std::string & prefix = "") -> Graph;
    auto complete_bipartite(int a, int b) -> Graph;
    auto cycle_graph(int n, const std::string & prefix = "") -> Graph;

    auto induced_subgraph(const Graph & g, const std::vector<VertexId> & vertices) -> Graph;

    auto connected_components(const Graph & g) -> std::vector<std::vector<VertexId>>;
    auto is_connected(const Graph & g) -> bool;

    struct Bipartition
    {
        bool bipartite = false;
        std::vector<int> colour;               // 0/1 per vertex when bipartite
        std::vector<VertexId> odd_cycle;       // closed walk witness otherwise
    };

    auto is_bipartite(const Graph & g) -> Bipartition;
}

#endif
