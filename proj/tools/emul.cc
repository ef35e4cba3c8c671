#include <emul/catalog.hh>
#include <emul/constructions.hh>
#include <emul/dot.hh>
#include <emul/double_cover.hh>
#include <emul/errors.hh>
#include <emul/lifts.hh>
#include <emul/obstructions.hh>
#include <emul/planarity.hh>
#include <emul/projection.hh>
#include <emul/transform.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

using namespace emul;

using std::string;
using std::vector;

namespace
{
    namespace fs = std::filesystem;

    enum Exit
    {
        ok = 0,
        negative = 1,
        bad_input = 2
    };

    // key: value lines, or one JSON object with repeated keys turned into arrays
    class Report
    {
        private:
            vector<std::pair<string, string>> _lines;

        public:
            auto add(const string & key, const string & value) -> void
            {
                _lines.emplace_back(key, value);
            }

            auto add(const string & key, long value) -> void
            {
                add(key, std::to_string(value));
            }

            auto flag(const string & key, bool value) -> void
            {
                add(key, value ? "true" : "false");
            }

            auto print(std::ostream & out, bool json) const -> void
            {
                if (! json) {
                    for (auto & [k, v] : _lines)
                        out << k << ": " << v << '\n';
                    return;
                }
                std::map<string, int> count;
                for (auto & [k, _] : _lines)
                    ++count[k];
                nlohmann::ordered_json j = nlohmann::ordered_json::object();
                for (auto & [k, v] : _lines) {
                    nlohmann::ordered_json value = v;
                    if (v == "true" || v == "false")
                        value = (v == "true");
                    else if (! v.empty() && v.find_first_not_of("0123456789") == string::npos && v.size() < 18)
                        value = std::stoll(v);
                    if (count[k] > 1) {
                        if (! j.contains(k))
                            j[k] = nlohmann::ordered_json::array();
                        j[k].push_back(value);
                    }
                    else
                        j[k] = value;
                }
                out << j.dump(2) << '\n';
            }
    };

    auto read_text(const string & path) -> string
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open '" + path + "'");
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto load_graph(const string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open '" + path + "'");
        try {
            return read_graph(in);
        }
        catch (const ParseError & e) {
            throw InvalidInput(path + ": " + e.what());
        }
    }

    auto load_projection(const string & host, const string & target, const string & map) -> Projection
    {
        auto h = load_graph(host);
        auto t = load_graph(target);
        std::ifstream in(map);
        if (! in)
            throw InvalidInput("cannot open '" + map + "'");
        try {
            return read_projection(h, t, in);
        }
        catch (const ParseError & e) {
            throw InvalidInput(map + ": " + e.what());
        }
    }

    auto load_embedding(const string & path) -> Embedding
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidInput("cannot open '" + path + "'");
        try {
            return read_embedding(in);
        }
        catch (const ParseError & e) {
            throw InvalidInput(path + ": " + e.what());
        }
    }

    // temp file in the same directory, then rename over the destination
    auto write_atomic(const string & path, const string & content) -> void
    {
        fs::path p(path);
        if (p.has_parent_path())
            fs::create_directories(p.parent_path());
        auto tmp = p;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary);
            if (! out)
                throw InvalidInput("cannot write '" + tmp.string() + "'");
            out << content;
            out.flush();
            if (! out)
                throw InvalidInput("failed writing '" + tmp.string() + "'");
        }
        fs::rename(tmp, p);
    }

    template <typename F>
    auto render(F && f) -> string
    {
        std::ostringstream s;
        f(s);
        return s.str();
    }

    auto write_projection_files(const string & dir, const Projection & p, const Embedding * e) -> vector<string>
    {
        vector<string> written;
        auto put = [&] (const string & name, const string & content) {
            auto path = (fs::path(dir) / name).string();
            write_atomic(path, content);
            written.push_back(path);
        };
        put("host.graph", format_graph(p.host()));
        put("target.graph", format_graph(p.target()));
        put("map.txt", render([&] (std::ostream & o) { write_mapping(o, p); }));
        if (e)
            put("host.emb", format_embedding(*e));
        put("host.dot", export_dot(p.host(), e, &p));
        return written;
    }

    auto load_catalog(const string & reference) -> Catalog
    {
        if (reference.empty())
            return default_catalog();
        Catalog c;
        std::ifstream in(reference);
        if (! in)
            throw InvalidInput("cannot open '" + reference + "'");
        try {
            c.load_reference_list(in);
        }
        catch (const ParseError & e) {
            throw InvalidInput(reference + ": " + e.what());
        }
        return c;
    }

    auto min_fiber(const Projection & p) -> long
    {
        long m = p.host().size();
        for (VertexId t = 0 ; t < p.target().size() ; ++t)
            m = std::min<long>(m, long(p.fiber(t).size()));
        return m;
    }

    auto join(const vector<string> & xs) -> string
    {
        string r;
        for (auto & x : xs)
            r += (r.empty() ? "" : " ") + x;
        return r;
    }

    auto edge_list(const Graph & g, const vector<Edge> & es) -> string
    {
        string r;
        for (auto & e : es)
            r += (r.empty() ? "" : " ") + g.label(e.u) + "-" + g.label(e.v);
        return r;
    }

    struct Options
    {
        bool json = false;
        string host, target, map, graph, out, out_dir, kind = "emulator", reference, embedding, name, op;
        vector<string> args;
        bool double_cover = false;
    };

    auto cmd_verify(const Options & o, Report & r) -> int
    {
        auto p = load_projection(o.host, o.target, o.map);
        auto kind = o.kind == "cover" ? ProjectionKind::Cover : ProjectionKind::Emulator;
        auto v = verify(p, kind);
        r.add("kind", o.kind);
        r.flag("valid", v.valid);
        r.add("violations", long(v.violations.size()));
        for (auto & x : v.violations)
            r.add("violation", x.describe());
        r.add("host_vertices", long(p.host().size()));
        r.flag("host_planar", is_planar(p.host()));
        r.add("min_fiber", min_fiber(p));
        for (auto & [t, n] : fiber_sizes(p))
            r.add("fiber", t + " " + std::to_string(n));
        return v.valid ? ok : negative;
    }

    auto cmd_construct(const Options & o, Report & r) -> int
    {
        auto catalog = load_catalog(o.reference);
        std::cerr << "construct: building " << o.name << '\n';
        auto ep = construct(o.name, catalog);
        auto & p = ep.projection;
        r.add("name", normalize_name(o.name));
        r.add("host_vertices", long(p.host().size()));
        r.add("host_edges", long(p.host().edge_count()));
        r.add("target_vertices", long(p.target().size()));
        r.add("target_edges", long(p.target().edge_count()));
        if (auto id = catalog.identify(p.target()))
            r.add("target", *id);
        r.flag("valid", verify_emulator(p).valid);
        r.flag("cover", verify_cover(p).valid);
        r.flag("planar", euler_check(ep.embedding));
        r.add("min_fiber", min_fiber(p));
        if (! o.out_dir.empty())
            for (auto & f : write_projection_files(o.out_dir, p, &ep.embedding))
                r.add("wrote", f);
        return ok;
    }

    auto need_args(const Options & o, std::size_t n) -> void
    {
        if (o.args.size() != n)
            throw InvalidInput("transform " + o.op + " takes " + std::to_string(n) + " vertex argument(s)");
    }

    auto cmd_transform(const Options & o, Report & r) -> int
    {
        r.add("op", o.op);
        if (! o.graph.empty()) {
            auto g = load_graph(o.graph);
            Graph h;
            if (o.op == "delete-vertex") {
                need_args(o, 1);
                h = delete_vertex(g, o.args[0]);
            }
            else if (o.op == "delete-edge") {
                need_args(o, 2);
                h = delete_edge(g, o.args[0], o.args[1]);
            }
            else if (o.op == "contract") {
                need_args(o, 2);
                h = contract_edge(g, o.args[0], o.args[1]);
            }
            else if (o.op == "yd") {
                need_args(o, 1);
                h = yd_transform(g, o.args[0]);
            }
            else if (o.op == "dy") {
                need_args(o, 3);
                h = dy_transform(g, { o.args[0], o.args[1], o.args[2] });
            }
            else
                throw InvalidInput("unknown graph transform '" + o.op + "'");
            if (o.out.empty()) {
                write_graph(std::cout, h);
                return ok;
            }
            write_atomic(o.out, format_graph(h));
            r.add("vertices", long(h.size()));
            r.add("edges", long(h.edge_count()));
            r.add("wrote", o.out);
            return ok;
        }

        if (o.host.empty() || o.target.empty() || o.map.empty())
            throw InvalidInput("transform needs --graph, or --host, --target and --map");
        auto p = load_projection(o.host, o.target, o.map);
        std::optional<Embedding> emb;
        if (! o.embedding.empty())
            emb = load_embedding(o.embedding);
        if (emb && ! (emb->graph() == p.host()))
            throw InvalidInput("the embedding does not describe the host graph");

        std::optional<EmbeddedProjection> result;
        std::optional<Projection> plain;
        if (o.op == "delete-vertex") {
            need_args(o, 1);
            plain = lift_delete_vertex(p, o.args[0]);
        }
        else if (o.op == "delete-edge") {
            need_args(o, 2);
            plain = lift_delete_edge(p, o.args[0], o.args[1]);
        }
        else if (o.op == "contract") {
            need_args(o, 2);
            plain = lift_contract_edge(p, o.args[0], o.args[1]);
        }
        else if (o.op == "yd") {
            need_args(o, 1);
            result = emb ? lift_yd(p, o.args[0], *emb) : lift_yd(p, o.args[0]);
        }
        else if (o.op == "normalize") {
            if (o.args.empty())
                throw InvalidInput("transform normalize takes the target vertices to normalize");
            if (! emb) {
                auto t = test_planarity(p.host());
                if (! t.planar)
                    throw InvalidInput("normalize needs a planar host");
                emb = *t.embedding;
            }
            auto n = normalize_fiber_degrees(p, *emb, o.args);
            r.add("merges", long(n.merges));
            r.add("arc_splits", long(n.arc_splits));
            r.add("triple_splits", long(n.triple_splits));
            result = n.result;
        }
        else
            throw InvalidInput("unknown lift '" + o.op + "'");

        auto & q = result ? result->projection : *plain;
        r.add("host_vertices", long(q.host().size()));
        r.add("target_vertices", long(q.target().size()));
        r.flag("valid", verify_emulator(q).valid);
        r.flag("host_planar", is_planar(q.host()));
        if (! o.out_dir.empty())
            for (auto & f : write_projection_files(o.out_dir, q, result ? &result->embedding : nullptr))
                r.add("wrote", f);
        return ok;
    }

    auto cmd_analyze(const Options & o, Report & r) -> int
    {
        auto g = load_graph(o.graph);
        auto catalog = load_catalog(o.reference);
        r.add("vertices", long(g.size()));
        r.add("edges", long(g.edge_count()));
        r.flag("connected", is_connected(g));
        auto pl = test_planarity(g);
        r.flag("planar", pl.planar);
        if (! pl.planar) {
            r.add("kuratowski", topology_name(*pl.kuratowski_kind));
            r.add("kuratowski_edges", edge_list(g, pl.kuratowski));
        }
        auto id = catalog.identify(g);
        r.add("identified", id ? *id : "unknown");

        auto i4 = is_internally_4_connected(g);
        r.flag("internally_4_connected", i4.internally_4_connected);
        if (i4.violation) {
            r.add("i4c_boundary", join(i4.violation->boundary));
            r.add("i4c_side_a", join(i4.violation->side_a));
            r.add("i4c_side_b", join(i4.violation->side_b));
        }

        auto sep = find_nonflat_3_separation(g);
        r.add("nonflat_separation", sep ? join(sep->boundary) : "none");
        if (sep) {
            r.add("nonflat_side_a", join(sep->side_a));
            r.add("nonflat_side_b", join(sep->side_b));
        }

        std::cerr << "analyze: searching for two disjoint k-graphs\n";
        try {
            auto pair = find_two_disjoint_kgraphs(g);
            r.add("kgraph_pair", pair ? "found" : "none");
            if (pair) {
                int i = 1;
                for (auto * k : { &pair->first, &pair->second }) {
                    auto prefix = "j" + std::to_string(i++);
                    r.add(prefix + "_kind", topology_name(k->kind));
                    r.add(prefix + "_edges", edge_list(g, k->edges));
                    r.add(prefix + "_witness", topology_name(k->witness_kind));
                    r.add(prefix + "_witness_edges", edge_list(k->contraction, k->witness));
                }
                r.flag("kgraph_pair_certified", is_kgraph_pair(g, *pair));
            }
        }
        catch (const BudgetExceeded &) {
            r.add("kgraph_pair", "budget-exceeded");
        }
        return ok;
    }

    auto cmd_embed(const Options & o, Report & r) -> int
    {
        if (o.double_cover) {
            auto emb = o.embedding.empty() ? std::optional<Embedding>{} : std::optional<Embedding>{ load_embedding(o.embedding) };
            if (! emb) {
                auto g = load_graph(o.graph);
                vector<vector<VertexId>> rotation;
                for (VertexId v = 0 ; v < g.size() ; ++v)
                    rotation.push_back(g.neighbours(v));
                emb = Embedding(g, rotation);
            }
            std::cerr << "embed: searching edge signs for a planar double cover\n";
            auto se = search_planar_double_cover(*emb);
            r.flag("double_cover_found", bool(se));
            if (! se)
                return negative;
            auto dc = double_cover(*se);
            r.add("host_vertices", long(dc.projection.host().size()));
            r.flag("cover", verify_cover(dc.projection).valid);
            r.flag("planar", dc.planar);
            r.flag("lifted_is_plane", dc.lifted_is_plane);
            if (! o.out_dir.empty()) {
                for (auto & f : write_projection_files(o.out_dir, dc.projection, nullptr))
                    r.add("wrote", f);
                auto path = (fs::path(o.out_dir) / "signed.emb").string();
                write_atomic(path, render([&] (std::ostream & s) { write_signed_embedding(s, *se); }));
                r.add("wrote", path);
            }
            return ok;
        }

        auto g = load_graph(o.graph);
        auto pl = test_planarity(g);
        r.flag("planar", pl.planar);
        if (! pl.planar) {
            r.add("kuratowski", topology_name(*pl.kuratowski_kind));
            r.add("kuratowski_edges", edge_list(g, pl.kuratowski));
            return negative;
        }
        r.add("faces", long(faces(*pl.embedding).size()));
        if (o.out.empty())
            for (std::istringstream lines(format_embedding(*pl.embedding)) ; ; ) {
                string line;
                if (! std::getline(lines, line))
                    break;
                r.add("rotation", line);
            }
        else {
            write_atomic(o.out, format_embedding(*pl.embedding));
            r.add("wrote", o.out);
        }
        return ok;
    }

    auto entry_lines(const CatalogEntry & e, Report & r) -> void
    {
        r.add("name", e.name);
        r.add("vertices", long(e.graph.size()));
        r.add("edges", long(e.graph.edge_count()));
        r.add("projective", verdict_name(e.projective));
        r.add("emulable", verdict_name(e.emulable));
        r.add("coverable", verdict_name(e.coverable));
        r.add("i4c", verdict_name(e.internally_4_connected));
    }

    auto cmd_catalog(const Options & o, Report & r) -> int
    {
        auto c = load_catalog(o.reference);
        if (o.op == "list") {
            for (auto & e : c.entries())
                r.add("entry", e.name + " " + std::to_string(e.graph.size()) + " " + std::to_string(e.graph.edge_count())
                        + " emulable=" + verdict_name(e.emulable));
            return ok;
        }
        if (o.op == "show") {
            need_args(o, 1);
            entry_lines(c.get(o.args[0]), r);
            return ok;
        }
        if (o.op == "identify") {
            need_args(o, 1);
            auto id = c.identify(load_graph(o.args[0]));
            r.add("identified", id ? *id : "unknown");
            return id ? ok : negative;
        }
        if (o.op == "export") {
            auto text = render([&] (std::ostream & s) { write_reference_list(s, c.entries()); });
            if (o.out.empty())
                std::cout << text;
            else {
                write_atomic(o.out, text);
                r.add("entries", long(c.entries().size()));
                r.add("wrote", o.out);
            }
            return ok;
        }
        throw InvalidInput("unknown catalog action '" + o.op + "'");
    }

    auto cmd_export_dot(const Options & o, Report & r) -> int
    {
        auto g = load_graph(o.graph);
        std::optional<Embedding> emb;
        std::optional<Projection> p;
        if (! o.embedding.empty()) {
            emb = load_embedding(o.embedding);
            if (! (emb->graph() == g))
                throw InvalidInput("the embedding does not describe the graph");
        }
        if (! o.target.empty() || ! o.map.empty()) {
            if (o.target.empty() || o.map.empty())
                throw InvalidInput("colouring by fibers needs both --target and --map");
            p = load_projection(o.graph, o.target, o.map);
        }
        auto dot = export_dot(g, emb ? &*emb : nullptr, p ? &*p : nullptr);
        if (o.out.empty()) {
            std::cout << dot;
            return ok;
        }
        write_atomic(o.out, dot);
        r.add("wrote", o.out);
        if (p)
            r.add("colour_classes", long(p->target().size()));
        return ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "emul: planar emulators and covers" };
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "print the report as JSON");

    auto verify_cmd = app.add_subcommand("verify", "check a projection host -> target");
    verify_cmd->add_option("host", o.host)->required();
    verify_cmd->add_option("target", o.target)->required();
    verify_cmd->add_option("map", o.map)->required();
    verify_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({ "emulator", "cover" }));

    auto construct_cmd = app.add_subcommand("construct", "build one of the known emulators");
    construct_cmd->add_option("name", o.name, "rich-k4, e2, k1222, b7, c3, d2, c4 or k7-c4")->required();
    construct_cmd->add_option("--out-dir", o.out_dir);
    construct_cmd->add_option("--reference", o.reference, "reference list for family names");

    auto transform_cmd = app.add_subcommand("transform", "graph transforms, or their lifts to a projection");
    transform_cmd->add_option("op", o.op, "delete-vertex, delete-edge, contract, yd, dy, normalize")->required();
    transform_cmd->add_option("vertices", o.args);
    transform_cmd->add_option("--graph", o.graph);
    transform_cmd->add_option("--host", o.host);
    transform_cmd->add_option("--target", o.target);
    transform_cmd->add_option("--map", o.map);
    transform_cmd->add_option("--embedding", o.embedding, "rotation system of the host");
    transform_cmd->add_option("--out", o.out);
    transform_cmd->add_option("--out-dir", o.out_dir);

    auto analyze_cmd = app.add_subcommand("analyze", "planarity, connectivity and obstruction report");
    analyze_cmd->add_option("graph", o.graph)->required();
    analyze_cmd->add_option("--reference", o.reference);

    auto embed_cmd = app.add_subcommand("embed", "planar embedding, or a planar double cover");
    embed_cmd->add_option("graph", o.graph);
    embed_cmd->add_flag("--double-cover", o.double_cover);
    embed_cmd->add_option("--embedding", o.embedding, "rotation system to sign (double cover)");
    embed_cmd->add_option("--out", o.out);
    embed_cmd->add_option("--out-dir", o.out_dir);

    auto catalog_cmd = app.add_subcommand("catalog", "named graphs");
    catalog_cmd->add_option("action", o.op, "list, show NAME, identify GRAPH, export")->required();
    catalog_cmd->add_option("args", o.args);
    catalog_cmd->add_option("--reference", o.reference);
    catalog_cmd->add_option("--out", o.out);

    auto dot_cmd = app.add_subcommand("export-dot", "Graphviz output");
    dot_cmd->add_option("graph", o.graph)->required();
    dot_cmd->add_option("--embedding", o.embedding);
    dot_cmd->add_option("--target", o.target);
    dot_cmd->add_option("--map", o.map);
    dot_cmd->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return bad_input;
    }

    Report report;
    int code = ok;
    try {
        if (verify_cmd->parsed())
            code = cmd_verify(o, report);
        else if (construct_cmd->parsed())
            code = cmd_construct(o, report);
        else if (transform_cmd->parsed())
            code = cmd_transform(o, report);
        else if (analyze_cmd->parsed())
            code = cmd_analyze(o, report);
        else if (embed_cmd->parsed()) {
            if (o.graph.empty() && o.embedding.empty())
                throw InvalidInput("embed needs a graph file");
            code = cmd_embed(o, report);
        }
        else if (catalog_cmd->parsed())
            code = cmd_catalog(o, report);
        else if (dot_cmd->parsed())
            code = cmd_export_dot(o, report);
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "error: " << e.what() << " (raise EMUL_BUDGET)\n";
        return bad_input;
    }
    catch (const SearchFailed & e) {
        std::cerr << "error: " << e.what() << '\n';
        return negative;
    }
    catch (const AssemblyFailed & e) {
        std::cerr << "error: " << e.what() << '\n';
        return negative;
    }
    catch (const IdentificationFailed & e) {
        std::cerr << "error: " << e.what() << '\n';
        return negative;
    }
    catch (const InvariantBroken & e) {
        std::cerr << "error: " << e.what() << '\n';
        return negative;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
    catch (const fs::filesystem_error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }

    report.print(std::cout, o.json);
    return code;
}
