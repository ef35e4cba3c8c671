#ifndef EMUL_GUARD_INCLUDE_EMUL_BUDGET_HH
#define EMUL_GUARD_INCLUDE_EMUL_BUDGET_HH 1

#include <cstdint>
#include <string>

namespace emul
{
    inline constexpr std::uint64_t default_node_budget = 200'000'000;

    // node budget from EMUL_BUDGET, falling back to default_node_budget
    auto budget_from_environment() -> std::uint64_t;

    class NodeCounter
    {
        private:
            std::uint64_t _limit;
            std::uint64_t _used = 0;
            std::string _where;

        public:
            NodeCounter(std::uint64_t limit, std::string where);

            auto tick() -> void;

            auto used() const -> std::uint64_t { return _used; }
            auto limit() const -> std::uint64_t { return _limit; }
    };
}

#endif
