#ifndef EMUL_GUARD_INCLUDE_EMUL_CATALOG_HH
#define EMUL_GUARD_INCLUDE_EMUL_CATALOG_HH 1

#include <emul/graph.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace emul
{
    enum class Verdict
    {
        Yes,
        No,
        Open,
        Unknown
    };

    auto verdict_name(Verdict v) -> std::string;
    auto parse_verdict(const std::string & s) -> std::optional<Verdict>;

    struct CatalogEntry
    {
        std::string name;
        Graph graph;
        Verdict projective = Verdict::Unknown;
        Verdict emulable = Verdict::Unknown;
        Verdict coverable = Verdict::Unknown;
        Verdict internally_4_connected = Verdict::Unknown;
    };

    // lower case, no spaces, commas or underscores, any dash becomes '-'
    auto normalize_name(const std::string & name) -> std::string;

    class Catalog
    {
        private:
            std::vector<CatalogEntry> _entries;

        public:
            Catalog() = default;

            static auto with_builtins() -> Catalog;

            // throws InvalidInput on a duplicate name
            auto add(CatalogEntry entry) -> void;

            auto contains(const std::string & name) const -> bool;
            auto get(const std::string & name) const -> const CatalogEntry &;
            auto entries() const -> const std::vector<CatalogEntry> & { return _entries; }

            // first loaded entry isomorphic to g
            auto identify(const Graph & g) const -> std::optional<std::string>;

            // records separated by '---' lines; returns how many were added
            auto load_reference_list(std::istream & in) -> int;
            auto load_reference_file(const std::string & path) -> int;
    };

    auto builtin_names() -> std::vector<std::string>;

    auto write_entry(std::ostream & out, const CatalogEntry & e) -> void;
    auto write_reference_list(std::ostream & out, const std::vector<CatalogEntry> & entries) -> void;

    // path of the shipped reference list
    auto default_reference_path() -> std::string;

    // the shipped reference list when readable, builtins otherwise
    auto default_catalog() -> Catalog;
}

#endif
