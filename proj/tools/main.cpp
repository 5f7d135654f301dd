#include "cli.hpp"

#include "treewalk/derive.hpp"
#include "treewalk/derived_io.hpp"
#include "treewalk/errors.hpp"
#include "treewalk/graph_io.hpp"
#include "treewalk/partition.hpp"
#include "treewalk/spectral.hpp"
#include "treewalk/walk.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef TREEWALK_FIXTURE_DIR
#define TREEWALK_FIXTURE_DIR "fixtures"
#endif

namespace treewalk::cli {

void write_output(const std::string& path, const std::string& content)
{
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open `" + path + "` for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed writing `" + path + "`");
    }
}

namespace {

const char* const table1_v = "{{{1,2},{2,3}},{{2,3},{2,4}}}";
const char* const table1_w = "{{{2,4},{1,2}},{{1,2},{2,3}}}";

struct Options {
    std::string input;
    std::string kind = "tl";
    std::uint32_t level = 1;
    std::uint32_t walk_level = 0;      // walks default to the input graph itself
    std::uint32_t spectral_level = 0;  // so do charpoly and periodic
    std::size_t k = 1;
    std::string format = "text";
    std::string output;
    std::optional<std::uint64_t> max_vertices;
    std::optional<std::uint64_t> max_edges;
    bool class_level = false;
    bool quotient = false;
    double epsilon = 1e-3;
    std::string initial;
    bool table1 = false;
    bool pst = false;
    bool period = false;
    std::string from;
    std::string to;
    double t_max = 100.0;
    double step = 0.01;
    bool laplacian = false;
    std::string fixtures = TREEWALK_FIXTURE_DIR;
    bool json = false;
};

GrowthLimits limits_from(const Options& o)
{
    GrowthLimits limits;
    if (const char* env = std::getenv("TREEWALK_MAX_VERTICES")) {
        try {
            limits.max_vertices = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("TREEWALK_MAX_VERTICES is not a number: `") + env + "`");
        }
    }
    if (o.max_vertices) {
        limits.max_vertices = *o.max_vertices;
    }
    if (o.max_edges) {
        limits.max_edges = *o.max_edges;
    }
    return limits;
}

PrimitiveGraph read_input(const std::string& path)
{
    if (path.empty()) {
        throw std::invalid_argument("an input graph file is required");
    }
    return load_graph(path);
}

/// The graph selected by --kind/--level; level 0 is the input itself.
DerivedGraph build(const Options& o, const PrimitiveGraph& g)
{
    const auto kind = parse_kind(o.kind);
    if (kind == DeriveKind::KTree) {
        return k_tree_graph(g, o.k, limits_from(o));
    }
    if (o.level == 0) {
        return DerivedGraph::level_zero(g, kind);
    }
    return derive_iterated(g, kind, o.level, limits_from(o));
}

std::string poly_json_coefficients(const IntPoly& p)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.descending()) {
        std::ostringstream s;
        s << c;
        coeffs.push_back(s.str());
    }
    return coeffs.dump();
}

std::string coefficients_text(const IntPoly& p)
{
    std::ostringstream s;
    s << "[";
    const auto c = p.descending();
    for (std::size_t i = 0; i < c.size(); ++i) {
        s << (i ? ", " : "") << c[i];
    }
    s << "]";
    return s.str();
}

std::string big(const BigInt& x)
{
    std::ostringstream s;
    s << x;
    return s.str();
}

int cmd_derive(const Options& o)
{
    const auto g = read_input(o.input);
    const auto kind = parse_kind(o.kind);
    if (o.class_level) {
        if (kind != DeriveKind::BipartiteTreeLine) {
            throw std::invalid_argument("--class-level applies to --kind btl only");
        }
        const auto s = btl_class_structure(g, o.level);
        std::cout << "btl level " << s.level << ": " << s.vertex_count << " vertices, " << s.edge_count
                  << " edges, " << s.class_trees.size() << " classes\n";
        if (!o.output.empty()) {
            nlohmann::json classes = nlohmann::json::array();
            for (std::size_t i = 0; i < s.class_trees.size(); ++i) {
                auto entry = tree_to_json(g, s.class_trees[i]);
                entry["size"] = s.sizes[i];
                classes.push_back(std::move(entry));
            }
            nlohmann::json doc{{"kind", "btl"},           {"level", s.level},       {"n_vertices", s.vertex_count},
                               {"n_edges", s.edge_count}, {"classes", classes},     {"joined", s.joined}};
            write_output(o.output, doc.dump(2) + "\n");
        }
        return exit_ok;
    }
    const auto d = build(o, g);
    std::cout << to_string(d.kind()) << " level " << d.level() << ": " << d.vertex_count() << " vertices, "
              << d.edge_count() << " edges\n";
    if (!o.output.empty()) {
        std::string body;
        if (o.format == "json") {
            body = derived_to_json(d).dump(2) + "\n";
        } else if (o.format == "dot") {
            body = derived_to_dot(d);
        } else if (o.format == "text") {
            body = derived_to_text(d);
        } else {
            throw std::invalid_argument("derive supports --format json, dot or text");
        }
        write_output(o.output, body);
    }
    return exit_ok;
}

int cmd_trees(const Options& o)
{
    const auto g = read_input(o.input);
    const auto trees = enumerate_k_trees(g, o.k);
    std::string body;
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : trees) {
            arr.push_back(tree_to_json(g, t));
        }
        body = nlohmann::json{{"k", o.k}, {"count", trees.size()}, {"trees", arr}}.dump(2) + "\n";
    } else {
        body = std::to_string(trees.size()) + " " + std::to_string(o.k) + "-trees\n";
        for (const auto& t : trees) {
            body += tree_to_string(g, t) + "\n";
        }
    }
    write_output(o.output.empty() ? "-" : o.output, body);
    return exit_ok;
}

int cmd_partition(const Options& o)
{
    const auto d = build(o, read_input(o.input));
    const auto p = tree_partition(d);
    const auto report = is_equitable(d, p);
    std::string body;
    if (o.format == "json") {
        auto doc = partition_to_json(d, p);
        doc["equitable"] = report.equitable;
        if (report.witness) {
            const auto& w = *report.witness;
            doc["witness"] = {{"class_i", w.class_i},   {"class_j", w.class_j}, {"vertex_a", w.vertex_a},
                              {"vertex_b", w.vertex_b}, {"count_a", w.count_a}, {"count_b", w.count_b}};
        }
        body = doc.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << p.size() << " classes, equitable: " << (report.equitable ? "yes" : "no") << "\n";
        if (report.witness) {
            const auto& w = *report.witness;
            s << "witness: " << vertex_label(d, w.vertex_a) << " and " << vertex_label(d, w.vertex_b) << " (class "
              << w.class_i << ") have " << w.count_a << " and " << w.count_b << " neighbours in class " << w.class_j
              << "\n";
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            s << i << " size " << p.classes[i].size() << " " << tree_to_string(d.base(), p.class_trees[i]) << "\n";
        }
        body = s.str();
    }
    write_output(o.output.empty() ? "-" : o.output, body);
    return exit_ok;
}

QuotientMatrix quotient_for(const Options& o, const PrimitiveGraph& g)
{
    if (o.class_level) {
        if (parse_kind(o.kind) != DeriveKind::BipartiteTreeLine) {
            throw std::invalid_argument("--class-level applies to --kind btl only");
        }
        const auto s = btl_class_structure(g, o.level);
        return QuotientMatrix{s.quotient(), s.sizes, s.class_trees};
    }
    const auto d = build(o, g);
    return quotient_matrix(d, tree_partition(d));
}

int cmd_quotient(const Options& o)
{
    const auto g = read_input(o.input);
    const auto q = quotient_for(o, g);
    std::string body;
    if (o.format == "json") {
        body = quotient_to_json(q, g).dump(2) + "\n";
    } else if (o.format == "csv") {
        body = quotient_to_csv(q);
    } else {
        std::ostringstream s;
        s << q.b.rows() << " classes\n" << q.b << "\n";
        body = s.str();
    }
    write_output(o.output.empty() ? "-" : o.output, body);
    return exit_ok;
}

/// Adjacency of the selected graph, or its tree-partition quotient.
std::pair<IntMatrix, MatrixOrigin> matrix_for(const Options& o, const PrimitiveGraph& g)
{
    Options local = o;
    local.level = o.spectral_level;
    if (o.quotient) {
        if (local.level == 0) {
            throw std::invalid_argument("--quotient needs --level >= 1");
        }
        return {quotient_for(local, g).b, MatrixOrigin::Quotient};
    }
    return {adjacency_matrix(build(local, g).graph()), MatrixOrigin::Adjacency};
}

int cmd_charpoly(const Options& o)
{
    const auto g = read_input(o.input);
    const auto [a, origin] = matrix_for(o, g);
    const auto p = char_poly_exact(a);
    std::string body;
    if (o.format == "json") {
        body = "{\"degree\": " + std::to_string(p.degree()) + ", \"coefficients\": " + poly_json_coefficients(p) +
               ", \"factored\": " + nlohmann::json(factored_form(p)).dump() + "}\n";
    } else {
        body = p.to_string() + "\n" + factored_form(p) + "\n" + coefficients_text(p) + "\n";
    }
    write_output(o.output.empty() ? "-" : o.output, body);
    return exit_ok;
}

int cmd_periodic(const Options& o)
{
    const auto g = read_input(o.input);
    const auto [a, origin] = matrix_for(o, g);
    const auto v = periodicity_classify(a, origin);
    std::optional<ScanResult> scan;
    if (origin == MatrixOrigin::Adjacency) {
        scan = periodic_return_scan(a, ScanOptions{o.t_max, o.step});
    }
    std::string body;
    if (o.format == "json") {
        nlohmann::json doc{{"status", to_string(v.status)},
                           {"delta", big(v.delta)},
                           {"evidence", v.evidence},
                           {"char_poly", factored_form(v.char_poly)}};
        if (v.bipartite) {
            doc["bipartite"] = *v.bipartite;
        }
        if (scan) {
            doc["return_time"] = scan->time ? nlohmann::json(*scan->time) : nlohmann::json(nullptr);
            doc["best_return"] = scan->best_value;
        }
        body = doc.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << to_string(v.status);
        if (v.status == Periodicity::PeriodicSqrt) {
            s << "(" << v.delta << ")";
        }
        s << "\n" << v.evidence << "\n";
        if (v.bipartite) {
            s << "bipartite: " << (*v.bipartite ? "yes" : "no") << "\n";
        }
        if (scan) {
            if (scan->time) {
                s << "periodic return at t = " << *scan->time << "\n";
            } else {
                s << "no return found <= " << o.t_max << " (best " << scan->best_value << " at t = "
                  << scan->best_time << ")\n";
            }
        }
        body = s.str();
    }
    write_output(o.output.empty() ? "-" : o.output, body);
    return exit_ok;
}

std::string format_table(const AmplitudeTable& t, const PrimitiveGraph& base, const std::string& format)
{
    if (format == "json") {
        return table_to_json(t, base).dump(2) + "\n";
    }
    if (format == "csv") {
        return table_to_csv(t);
    }
    std::ostringstream s;
    s.precision(6);
    s << "initial " << t.initial_label << ", epsilon " << t.epsilon << ": " << t.count(RowClass::Neighbor)
      << " neighbor rows\n";
    for (const auto& r : t.rows) {
        s << r.label << "  " << tree_to_string(base, r.tree) << "  |amp| = " << std::abs(r.exact) << "  "
          << to_string(r.row_class) << "\n";
    }
    return s.str();
}

int cmd_walk(const Options& o)
{
    const int modes = int(o.table1) + int(o.pst) + int(o.period);
    if (modes != 1) {
        throw std::invalid_argument("walk needs exactly one of --table1, --pst, --period");
    }
    if (o.table1) {
        const std::string label = o.initial.empty() ? table1_v : o.initial;
        Options local = o;
        local.level = o.walk_level;
        if (o.input.empty()) {
            local.input = (std::filesystem::path(o.fixtures) / "gamma8.edges").string();
        }
        if (o.walk_level == 0 && label.front() != '#') {
            local.level = label_depth(label);
        }
        const auto d = build(local, read_input(local.input));
        const auto t = infinitesimal_table(d, static_cast<std::uint32_t>(resolve_label(d, label)), o.epsilon);
        write_output(o.output.empty() ? "-" : o.output, format_table(t, d.base(), o.format));
        return exit_ok;
    }
    if (o.input.empty()) {
        throw std::invalid_argument("walk --pst/--period needs an input graph file");
    }
    Options local = o;
    local.level = o.walk_level;
    const auto d = build(local, read_input(local.input));
    const auto h = o.laplacian ? Hamiltonian::Laplacian : Hamiltonian::Adjacency;
    const WalkOperator w(adjacency_matrix(d.graph()), h);
    const ScanOptions scan_options{o.t_max, o.step};
    std::ostringstream s;
    nlohmann::json doc;
    if (o.pst) {
        if (o.from.empty() || o.to.empty()) {
            throw std::invalid_argument("walk --pst needs --from and --to");
        }
        const auto u = resolve_label(d, o.from);
        const auto v = resolve_label(d, o.to);
        const auto r = pst_scan(w, u, v, scan_options);
        doc = {{"mode", "pst"},
               {"from", vertex_label(d, u)},
               {"to", vertex_label(d, v)},
               {"time", r.time ? nlohmann::json(*r.time) : nlohmann::json(nullptr)},
               {"best_fidelity", r.best_value},
               {"best_time", r.best_time}};
        if (r.time) {
            s << "perfect state transfer at t = " << *r.time << " (fidelity " << r.best_value << ")\n";
        } else {
            s << "no perfect state transfer found <= " << o.t_max << " (best fidelity " << r.best_value
              << " at t = " << r.best_time << ")\n";
        }
    } else {
        const auto r = periodic_return_scan(w, scan_options);
        doc = {{"mode", "period"},
               {"time", r.time ? nlohmann::json(*r.time) : nlohmann::json(nullptr)},
               {"best_return", r.best_value},
               {"best_time", r.best_time}};
        if (r.time) {
            s << "periodic return at t = " << *r.time << "\n";
        } else {
            s << "no return found <= " << o.t_max << " (best " << r.best_value << " at t = " << r.best_time
              << ")\n";
        }
    }
    if (o.laplacian) {
        s << "note: Laplacian Hamiltonian is experimental\n";
        doc["hamiltonian"] = "laplacian (experimental)";
    }
    write_output(o.output.empty() ? "-" : o.output, o.format == "json" ? doc.dump(2) + "\n" : s.str());
    return exit_ok;
}

int cmd_table1(const Options& o)
{
    const auto path = o.input.empty() ? (std::filesystem::path(o.fixtures) / "gamma8.edges").string() : o.input;
    const auto g = read_input(path);
    const auto d = derive_iterated(g, DeriveKind::TreeLine, 3, limits_from(o));
    std::string body;
    nlohmann::json doc = nlohmann::json::array();
    for (const char* label : {table1_v, table1_w}) {
        const auto t = infinitesimal_table(d, static_cast<std::uint32_t>(resolve_label(d, label)), o.epsilon);
        if (o.format == "json") {
            doc.push_back(table_to_json(t, g));
        } else {
            body += format_table(t, g, o.format) + "\n";
        }
    }
    write_output(o.output.empty() ? "-" : o.output, o.format == "json" ? doc.dump(2) + "\n" : body);
    return exit_ok;
}

int cmd_verify_paper(const Options& o)
{
    const auto checks = run_paper_checks(o.fixtures);
    bool all = true;
    std::string body;
    if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            arr.push_back({{"name", c.name}, {"passed", c.passed}, {"measured", c.measured}, {"expected", c.expected}});
            all = all && c.passed;
        }
        body = nlohmann::json{{"passed", all}, {"checks", arr}}.dump(2) + "\n";
    } else {
        std::size_t passed = 0;
        for (const auto& c : checks) {
            body += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name + "  measured: " + c.measured +
                    "  expected: " + c.expected + "\n";
            passed += c.passed ? 1 : 0;
            all = all && c.passed;
        }
        body += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
    }
    write_output(o.output.empty() ? "-" : o.output, body);
    return all ? exit_ok : exit_verification;
}

void add_graph_options(CLI::App* cmd, Options& o, std::uint32_t& level, bool input_required)
{
    auto* in = cmd->add_option("input", o.input, "Graph file (edge list or JSON)");
    if (input_required) {
        in->required();
    }
    cmd->add_option("--kind", o.kind, "Derivation kind")->check(CLI::IsMember({"tl", "btl", "ktree"}));
    cmd->add_option("--level", level, "Derivation level (0 = the input graph)");
    cmd->add_option("--k", o.k, "Tree size for --kind ktree");
    cmd->add_option("--max-vertices", o.max_vertices, "Derived vertex cap");
    cmd->add_option("--max-edges", o.max_edges, "Derived edge cap");
    cmd->add_option("--output", o.output, "Output path, - for standard output");
}

} // namespace

int run(int argc, char** argv)
{
    Options o;
    CLI::App app{"Tree-line graphs, tree partitions and continuous-time quantum walks"};
    app.require_subcommand(1);

    auto* derive = app.add_subcommand("derive", "Build a derived graph and report its size");
    add_graph_options(derive, o, o.level, true);
    derive->add_option("--format", o.format, "Serialization for --output")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    derive->add_flag("--class-level", o.class_level, "btl only: describe the graph by tree classes");

    auto* trees = app.add_subcommand("trees", "Enumerate the k-trees of a graph");
    trees->add_option("input", o.input, "Graph file")->required();
    trees->add_option("--k", o.k, "Tree size (edges)");
    trees->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    trees->add_option("--output", o.output);

    auto* partition = app.add_subcommand("partition", "Tree partition and equitability");
    add_graph_options(partition, o, o.level, true);
    partition->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

    auto* quotient = app.add_subcommand("quotient", "Quotient matrix of the tree partition");
    add_graph_options(quotient, o, o.level, true);
    quotient->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
    quotient->add_flag("--class-level", o.class_level, "btl only: compute from tree classes");

    auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");
    add_graph_options(charpoly, o, o.spectral_level, true);
    charpoly->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    charpoly->add_flag("--quotient", o.quotient, "Use the tree-partition quotient");
    charpoly->add_flag("--class-level", o.class_level, "btl quotient from tree classes");

    auto* periodic = app.add_subcommand("periodic", "Periodicity verdict and return-time scan");
    add_graph_options(periodic, o, o.spectral_level, true);
    periodic->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    periodic->add_flag("--quotient", o.quotient, "Classify the tree-partition quotient");
    periodic->add_flag("--class-level", o.class_level, "btl quotient from tree classes");
    periodic->add_option("--t-max", o.t_max, "Scan horizon");
    periodic->add_option("--step", o.step, "Scan grid step");

    auto* walk = app.add_subcommand("walk", "Quantum walk amplitudes and scans");
    add_graph_options(walk, o, o.walk_level, false);
    walk->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
    walk->add_flag("--table1", o.table1, "Amplitude column of H(epsilon) for --initial");
    walk->add_flag("--pst", o.pst, "Perfect state transfer scan from --from to --to");
    walk->add_flag("--period", o.period, "Periodic return scan");
    walk->add_option("--epsilon", o.epsilon, "Small time step")->check(CLI::Range(0.0, 0.1));
    walk->add_option("--initial", o.initial, "Initial vertex label (nested braces or #index)");
    walk->add_option("--from", o.from, "Source vertex label");
    walk->add_option("--to", o.to, "Target vertex label");
    walk->add_option("--t-max", o.t_max, "Scan horizon");
    walk->add_option("--step", o.step, "Scan grid step");
    walk->add_flag("--laplacian", o.laplacian, "Use D - A as Hamiltonian (experimental)");
    walk->add_option("--fixtures", o.fixtures, "Fixture directory for the default graph");

    auto* table1 = app.add_subcommand("table1", "Amplitude tables for the two level-3 example states");
    table1->add_option("input", o.input, "Graph file (defaults to the gamma8 fixture)");
    table1->add_option("--epsilon", o.epsilon)->check(CLI::Range(0.0, 0.1));
    table1->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
    table1->add_option("--output", o.output);
    table1->add_option("--fixtures", o.fixtures);

    auto* verify = app.add_subcommand("verify-paper", "Run every fixture check and report pass/fail");
    verify->add_option("--fixtures", o.fixtures, "Fixture directory");
    verify->add_flag("--json", o.json, "Machine-readable report");
    verify->add_option("--output", o.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*derive) return cmd_derive(o);
        if (*trees) return cmd_trees(o);
        if (*partition) return cmd_partition(o);
        if (*quotient) return cmd_quotient(o);
        if (*charpoly) return cmd_charpoly(o);
        if (*periodic) return cmd_periodic(o);
        if (*walk) return cmd_walk(o);
        if (*table1) return cmd_table1(o);
        if (*verify) return cmd_verify_paper(o);
    } catch (const DerivationTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const NotEquitable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification;
    } catch (const FactorizationLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification;
    } catch (const NumericalFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace treewalk::cli

int main(int argc, char** argv)
{
    try {
        return treewalk::cli::run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return treewalk::cli::exit_verification;
    }
}
