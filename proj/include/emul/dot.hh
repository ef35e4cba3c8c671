#ifndef EMUL_GUARD_INCLUDE_EMUL_DOT_HH
#define EMUL_GUARD_INCLUDE_EMUL_DOT_HH 1

#include <emul/graph.hh>
#include <emul/planarity.hh>
#include <emul/projection.hh>

#include <string>

namespace emul
{
    /**
     * Graphviz text for g. With a projection (whose host must be g), every
     * node gets a fiber attribute and one fill colour per target vertex.
     * With an embedding, every node records its rotation.
     */
    auto export_dot(const Graph & g, const Embedding * embedding = nullptr, const Projection * projection = nullptr)
        -> std::string;
}

#endif
