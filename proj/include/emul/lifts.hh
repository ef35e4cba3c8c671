#ifndef EMUL_GUARD_INCLUDE_EMUL_LIFTS_HH
#define EMUL_GUARD_INCLUDE_EMUL_LIFTS_HH 1

#include <emul/planarity.hh>
#include <emul/projection.hh>

#include <string>
#include <vector>

namespace emul
{
    // Each lift takes a valid emulator projection (InvalidInput otherwise) and
    // re-verifies its output (InvariantBroken if that fails).

    auto lift_delete_vertex(const Projection & p, const std::string & target_vertex) -> Projection;
    auto lift_delete_edge(const Projection & p, const std::string & a, const std::string & b) -> Projection;
    auto lift_contract_edge(const Projection & p, const std::string & a, const std::string & b) -> Projection;

    struct EmbeddedProjection
    {
        Projection projection;
        Embedding embedding;
    };

    struct Normalization
    {
        EmbeddedProjection result;
        // total of (degree - 3) over the processed fibers, before and after each step
        std::vector<int> excess_trace;
        int merges = 0, arc_splits = 0, triple_splits = 0;
    };

    /**
     * Makes every host vertex over X have degree 3, keeping the emulator
     * valid and the embedding plane. Cases are applied in the order: merge
     * two consecutive equal neighbours, split at an a-b-a pattern, split a
     * periodic a-b-c word, always at the first vertex in label order.
     */
    auto normalize_fiber_degrees(const Projection & p, const Embedding & host_embedding,
            const std::vector<std::string> & X) -> Normalization;

    // every representative of v (after normalization) replaced by a triangle
    auto lift_yd(const Projection & p, const std::string & v, const Embedding & host_embedding) -> EmbeddedProjection;

    // as above, with the host embedding taken from the planarity test
    auto lift_yd(const Projection & p, const std::string & v) -> EmbeddedProjection;
}

#endif
