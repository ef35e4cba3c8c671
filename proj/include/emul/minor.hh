#ifndef EMUL_GUARD_INCLUDE_EMUL_MINOR_HH
#define EMUL_GUARD_INCLUDE_EMUL_MINOR_HH 1

#include <emul/budget.hh>
#include <emul/graph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace emul
{
    /**
     * A minor model: branch[v] is the vertex of h whose branch set contains
     * v, or -1 for vertices of g that are deleted.
     */
    struct MinorModel
    {
        std::vector<VertexId> branch;
    };

    // throws BudgetExceeded when more than budget search nodes are needed
    auto find_minor(const Graph & g, const Graph & h, std::uint64_t budget = budget_from_environment())
        -> std::optional<MinorModel>;

    auto has_minor(const Graph & g, const Graph & h, std::uint64_t budget = budget_from_environment()) -> bool;

    // independent certificate check: connected disjoint branch sets realising every edge of h
    auto is_minor_model(const Graph & g, const Graph & h, const MinorModel & model) -> bool;
}

#endif
