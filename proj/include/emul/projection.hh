#ifndef EMUL_GUARD_INCLUDE_EMUL_PROJECTION_HH
#define EMUL_GUARD_INCLUDE_EMUL_PROJECTION_HH 1

#include <emul/graph.hh>

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace emul
{
    /**
     * A vertex map from a host graph onto a connected target graph.
     */
    class Projection
    {
        private:
            Graph _host;
            Graph _target;
            std::vector<VertexId> _map;

        public:
            // throws InvalidInput on a partial or out of range map, or a disconnected target
            Projection(Graph host, Graph target, std::vector<VertexId> map);

            auto host() const -> const Graph & { return _host; }
            auto target() const -> const Graph & { return _target; }
            auto map() const -> const std::vector<VertexId> & { return _map; }
            auto image(VertexId v) const -> VertexId { return _map[v]; }
            auto fiber(VertexId t) const -> std::vector<VertexId>;
    };

    // host is the target itself
    auto identity_projection(const Graph & g) -> Projection;

    // k disjoint copies of g, vertex v of copy i labelled "v/i"
    auto trivial_cover(const Graph & g, int copies) -> Projection;

    enum class ProjectionKind
    {
        Emulator,
        Cover
    };

    struct Violation
    {
        std::string host_vertex;
        std::string target_neighbour;
        enum class Problem
        {
            Missing,       // a target neighbour without a representative among the host neighbours
            Duplicated,    // represented twice (covers only)
            NotAdjacent    // a host neighbour whose image is not a target neighbour
        } problem;

        auto describe() const -> std::string;
    };

    struct VerificationReport
    {
        ProjectionKind kind;
        bool valid = false;
        std::vector<Violation> violations;
        std::map<std::string, int> fiber_sizes;
    };

    auto verify_emulator(const Projection & p) -> VerificationReport;
    auto verify_cover(const Projection & p) -> VerificationReport;
    auto verify(const Projection & p, ProjectionKind kind) -> VerificationReport;

    // target label -> fiber cardinality, in target vertex order
    auto fiber_sizes(const Projection & p) -> std::map<std::string, int>;

    // "key: value" lines
    auto format_report(const VerificationReport & r) -> std::string;

    // mapping file: "hostVertex targetVertex" lines, every host vertex exactly once
    auto read_projection(const Graph & host, const Graph & target, std::istream & mapping) -> Projection;
    auto write_mapping(std::ostream & out, const Projection & p) -> void;
}

#endif
