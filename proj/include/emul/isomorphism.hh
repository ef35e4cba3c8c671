#ifndef EMUL_GUARD_INCLUDE_EMUL_ISOMORPHISM_HH
#define EMUL_GUARD_INCLUDE_EMUL_ISOMORPHISM_HH 1

#include <emul/graph.hh>

#include <optional>
#include <vector>

namespace emul
{
    // mapping[v in g1] = image in g2
    auto find_isomorphism(const Graph & g1, const Graph & g2) -> std::optional<std::vector<VertexId>>;

    auto is_isomorphic(const Graph & g1, const Graph & g2) -> bool;

    // checks an explicit bijection
    auto is_isomorphism(const Graph & g1, const Graph & g2, const std::vector<VertexId> & mapping) -> bool;
}

#endif
