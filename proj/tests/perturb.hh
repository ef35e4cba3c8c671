#ifndef EMUL_GUARD_TESTS_PERTURB_HH
#define EMUL_GUARD_TESTS_PERTURB_HH 1

#include <emul/planarity.hh>
#include <emul/projection.hh>

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace perturbation
{
    // merges two same-fiber vertices at corners of one face, or of different components
    auto perturb(const emul::Projection & p, const emul::Embedding & e, const std::vector<bool> & prefer, std::mt19937 & rng)
        -> std::optional<std::pair<emul::Projection, emul::Embedding>>;
}

#endif
