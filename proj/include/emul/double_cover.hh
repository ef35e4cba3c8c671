#ifndef EMUL_GUARD_INCLUDE_EMUL_DOUBLE_COVER_HH
#define EMUL_GUARD_INCLUDE_EMUL_DOUBLE_COVER_HH 1

#include <emul/planarity.hh>
#include <emul/projection.hh>

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

namespace emul
{
    class SignedEmbedding
    {
        private:
            Embedding _embedding;
            std::map<Edge, int> _signs;

        public:
            // throws InvalidInput unless every edge has a sign in {+1, -1}
            SignedEmbedding(Embedding embedding, std::map<Edge, int> signs);

            auto embedding() const -> const Embedding & { return _embedding; }
            auto graph() const -> const Graph & { return _embedding.graph(); }
            auto sign(VertexId u, VertexId v) const -> int;
    };

    // the rotation format with a leading '-' on the negative edges, consistent at both ends
    auto read_signed_embedding(std::istream & in) -> SignedEmbedding;
    auto write_signed_embedding(std::ostream & out, const SignedEmbedding & se) -> void;

    struct DoubleCover
    {
        Projection projection;
        // planarity of the host graph
        bool planar = false;
        // the lifted rotation system: layer 0 keeps each rotation, layer 1 reverses it
        Embedding lifted;
        bool lifted_is_plane = false;
    };

    // host vertices "v/0" and "v/1"; negative edges swap layers
    auto double_cover(const SignedEmbedding & se) -> DoubleCover;

    // first signature in binary counting order (edge i negative iff bit i set)
    // whose double cover is planar; at most 24 edges
    auto search_planar_double_cover(const Embedding & e) -> std::optional<SignedEmbedding>;
}

#endif
