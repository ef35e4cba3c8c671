#ifndef EMUL_GUARD_INCLUDE_EMUL_TRANSFORM_HH
#define EMUL_GUARD_INCLUDE_EMUL_TRANSFORM_HH 1

#include <emul/graph.hh>

#include <array>
#include <string>

namespace emul
{
    auto delete_vertex(const Graph & g, const std::string & v) -> Graph;
    auto delete_edge(const Graph & g, const std::string & u, const std::string & v) -> Graph;

    // the lexicographically smaller label survives
    auto contract_edge(const Graph & g, const std::string & u, const std::string & v) -> Graph;

    auto yd_transform(const Graph & g, const std::string & v) -> Graph;

    // the new vertex gets a fresh label, returned through new_label when given
    auto dy_transform(const Graph & g, const std::array<std::string, 3> & t, std::string * new_label = nullptr) -> Graph;

    // all triangles {a, b, c} with a < b < c in vertex order
    auto triangles(const Graph & g) -> std::vector<std::array<VertexId, 3>>;
}

#endif
