#ifndef EMUL_GUARD_INCLUDE_EMUL_OBSTRUCTIONS_HH
#define EMUL_GUARD_INCLUDE_EMUL_OBSTRUCTIONS_HH 1

#include <emul/budget.hh>
#include <emul/graph.hh>
#include <emul/planarity.hh>
#include <emul/projection.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace emul
{
    /**
     * One side of a pair of disjoint k-graphs. The contraction is g with
     * every vertex outside the k-graph merged into one vertex, and witness
     * is a Kuratowski subdivision inside it.
     */
    struct KGraph
    {
        Topology kind;
        std::vector<Edge> edges;
        Graph contraction;
        std::vector<Edge> witness;
        Topology witness_kind;

        auto vertices() const -> std::vector<VertexId>;
    };

    struct KGraphPair
    {
        KGraph first, second;
    };

    // exhaustive; throws BudgetExceeded rather than giving up silently
    auto find_two_disjoint_kgraphs(const Graph & g, std::uint64_t budget = budget_from_environment())
        -> std::optional<KGraphPair>;

    // re-checks every condition of the definition from scratch
    auto is_kgraph_pair(const Graph & g, const KGraphPair & pair) -> bool;

    /**
     * A separation with boundary vertices shared by both sides. Sides are
     * sorted label lists and both contain the boundary.
     */
    struct Separation
    {
        std::vector<std::string> boundary, side_a, side_b;
    };

    struct ConnectivityReport
    {
        bool internally_4_connected = false;
        std::optional<Separation> violation;
    };

    auto is_internally_4_connected(const Graph & g) -> ConnectivityReport;

    auto find_nonflat_3_separation(const Graph & g) -> std::optional<Separation>;

    // requires a valid emulator with planar host onto a connected nonplanar target
    auto check_min_fiber(const Projection & p) -> bool;
}

#endif
