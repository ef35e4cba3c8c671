#ifndef EMUL_GUARD_INCLUDE_EMUL_CONSTRUCTIONS_HH
#define EMUL_GUARD_INCLUDE_EMUL_CONSTRUCTIONS_HH 1

#include <emul/catalog.hh>
#include <emul/lifts.hh>
#include <emul/planarity.hh>
#include <emul/projection.hh>

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace emul
{
    /**
     * A convex polyhedron as corners and facets. Each facet lists its
     * corners so that consecutive triples u, v, w give successor_v(u) = w.
     */
    struct PolyhedronTemplate
    {
        std::string name;
        std::vector<std::string> corners;
        std::vector<std::vector<int>> facets;

        auto ridges() const -> std::vector<Edge>;
    };

    auto cube_template() -> PolyhedronTemplate;
    auto octahedron_template() -> PolyhedronTemplate;
    auto cuboctahedron_template() -> PolyhedronTemplate;
    auto truncated_cube_template() -> PolyhedronTemplate;

    // throws InvariantBroken unless the facets close up into a sphere
    auto template_embedding(const PolyhedronTemplate & t) -> Embedding;

    // boundary edges of the face represent all six edges of K4
    auto is_rich_face(const Projection & p, const Face & f) -> bool;

    struct RichK4
    {
        EmbeddedProjection cover;
        std::vector<Face> rich_faces;
    };

    auto search_rich_k4_emulator() -> RichK4;
    auto build_e2_emulator() -> EmbeddedProjection;

    struct FamilyEmulator
    {
        std::string name;
        std::vector<std::string> yd_vertices;
        EmbeddedProjection emulator;
    };

    // throws IdentificationFailed when no subset of {1,2,3,4} gives the named graph
    auto build_k1222_family_emulator(const std::string & name, const Catalog & catalog) -> FamilyEmulator;

    using CubeSquare = std::array<int, 4>;

    /**
     * The triangular gadget traced by a rolling cube. Every square of the
     * trace lists its cube labels as back-left, back-right, front-right,
     * front-left, with the left side outside.
     */
    struct RollingGadget
    {
        Graph graph;
        std::vector<int> cube_label;
        std::vector<CubeSquare> squares;
        std::vector<VertexId> outer_walk;
        std::array<VertexId, 3> corners;
        std::array<std::vector<VertexId>, 3> sides;
        std::vector<VertexId> inside;
    };

    // throws TraceMismatch when a gadget property fails
    auto rolling_cube_gadget() -> RollingGadget;

    // the gadget properties, each as a (name, holds) pair
    auto gadget_properties(const RollingGadget & g) -> std::vector<std::pair<std::string, bool>>;

    struct C4Emulator
    {
        EmbeddedProjection emulator;
        // per triangular facet of the cuboctahedron: rotation, reflection
        std::vector<std::array<int, 2>> orientation;
    };

    auto build_c4_emulator() -> C4Emulator;

    /**
     * A cell for one facet of the octahedron: a hexagon with positions
     * 0..5 (corners at even positions) and interior vertices, each labelled
     * with one of the two pair letters.
     */
    struct K7Cell
    {
        std::string kind;
        std::vector<char> interior;
        std::vector<std::vector<int>> hexagon_neighbours;
        std::vector<std::array<int, 2>> interior_edges;
    };

    // calls found on each cell in search order until it returns true
    auto enumerate_k7c4_cells(const std::string & kind, int max_interior,
            const std::function<bool (const K7Cell &)> & found) -> void;

    // throws SearchFailed
    auto search_k7c4_cell(const std::string & kind) -> K7Cell;

    struct K7Emulator
    {
        EmbeddedProjection emulator;
        K7Cell cell;
        // per facet: rotation, reflection, letter swap
        std::vector<std::array<int, 3>> orientation;
    };

    // throws AssemblyFailed
    auto build_k7c4_emulator() -> K7Emulator;

    auto construction_names() -> std::vector<std::string>;

    // by name: rich-k4, e2, k1222, b7, c3, d2, c4, k7-c4
    auto construct(const std::string & name, const Catalog & catalog) -> EmbeddedProjection;
}

#endif
