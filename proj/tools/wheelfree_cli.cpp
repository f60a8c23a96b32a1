// Command-line front end: construct, check, spectra, quotient, enumerate, search, verify.
//
// Exit codes: 0 success, 1 verification FAIL, 2 usage or input error, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wheelfree/wheelfree.hpp"

namespace {

using namespace wheelfree;
using json = nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_threads() {
    if (const char* env = std::getenv("WHEELFREE_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t > 0) return t;
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Graph> read_graphs(const std::string& in) {
    std::ifstream file;
    std::istream* src = &std::cin;
    if (in != "-") {
        file.open(in);
        if (!file) throw usage_error("cannot read input file " + in);
        src = &file;
    }
    std::vector<Graph> out;
    std::string line;
    while (std::getline(*src, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

MatrixKind parse_matrix(const std::string& s) {
    if (s == "a" || s == "adjacency") return MatrixKind::adjacency;
    if (s == "q" || s == "signless_laplacian") return MatrixKind::signless_laplacian;
    throw usage_error("unknown matrix '" + s + "' (use a or q)");
}

GraphFilter parse_filter(const std::string& s) {
    if (s == "all") return GraphFilter::all;
    if (s == "wheel-free" || s == "wheel_free") return GraphFilter::wheel_free;
    if (s == "connected-wheel-free" || s == "connected_wheel_free") return GraphFilter::connected_wheel_free;
    throw usage_error("unknown filter '" + s + "'");
}

Partition parse_cells(const std::string& text, int n) {
    std::vector<VertexSet> cells;
    std::stringstream outer(text);
    std::string cell;
    while (std::getline(outer, cell, ';')) {
        VertexSet s;
        std::stringstream inner(cell);
        std::string item;
        while (std::getline(inner, item, ',')) {
            if (item.empty()) continue;
            const int v = std::stoi(item);
            if (v < 0 || v >= n) throw usage_error("cell vertex " + item + " out of range");
            s.insert(v);
        }
        cells.push_back(s);
    }
    return Partition(n, std::move(cells));
}

json quotient_json(const QuotientMatrix& q) {
    json rows = json::array();
    for (int i = 0; i < q.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < q.size(); ++j) row.push_back(q.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

/// Symbolic radius when g is H_n (adjacency) or K_2 ∇ (n-2)K_1 (signless Laplacian).
json closed_form_for(const Graph& g, MatrixKind kind) {
    const int n = g.order();
    if (n > kCanonicalHardCap) return nullptr;
    if (kind == MatrixKind::adjacency && n >= 4 && isomorphic(g, h_n(n))) return closed_form_rho_a_text(n);
    if (kind == MatrixKind::signless_laplacian && n >= 3 && isomorphic(g, matching_join(1, 0, n - 2)))
        return closed_form_rho_q_text(n);
    return nullptr;
}

void write_output(const std::string& text, const std::string& out) {
    if (out == "-" || out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::trunc);
    if (!file) throw usage_error("cannot write " + out);
    file << text;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string family = "hn";
    int n = 0, a = 0, b = 0, c = 0, d = 0;
    std::string format = "graph6";
    std::string out = "-";
};

int run_construct(const ConstructArgs& args) {
    Graph g = [&] {
        const auto& f = args.family;
        if (f == "hn") return h_n(args.n);
        if (f == "f") return graph_f();
        if (f == "complete") return complete(args.n);
        if (f == "path") return path(args.n);
        if (f == "cycle") return cycle(args.n);
        if (f == "empty") return empty_graph(args.n);
        if (f == "wheel") return wheel(args.n);
        if (f == "star") return star(args.n - 1);
        if (f == "k2join") return matching_join(1, 0, args.n - 2);
        if (f == "matching") return matching_join(args.a, args.b, args.c);
        if (f == "gab") return g_ab(args.a, args.b);
        if (f == "gabcd") return g_abcd(args.a, args.b, args.c, args.d);
        throw usage_error("unknown family '" + f + "'");
    }();
    const auto fmt = parse_format(args.format);
    if (fmt == Format::graph6) {
        write_output(to_graph6(g) + "\n", args.out);
    } else if (fmt == Format::json) {
        json j{{"graph6", to_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}};
        write_output(j.dump(2) + "\n", args.out);
    } else {
        write_output("graph6,order,edges\n" + to_graph6(g) + "," + std::to_string(g.order()) + "," +
                         std::to_string(g.edge_count()) + "\n",
                     args.out);
    }
    return 0;
}

struct InputArgs {
    std::string in = "-";
    std::string out = "-";
    std::string format = "json";
    std::string matrix = "a";
};

int run_check(const InputArgs& args) {
    const auto graphs = read_graphs(args.in);
    const auto fmt = parse_format(args.format);
    std::ostringstream text;
    json arr = json::array();
    if (fmt == Format::csv) text << "graph6,order,edges,connected,wheel_free,fact2_violations\n";
    for (const auto& g : graphs) {
        const auto witness = find_wheel_witness(g);
        const auto violations = check_fact2(g);
        if (fmt == Format::csv) {
            text << to_graph6(g) << ',' << g.order() << ',' << g.edge_count() << ','
                 << (is_connected(g) ? "true" : "false") << ',' << (witness ? "false" : "true") << ','
                 << violations.size() << '\n';
        } else {
            arr.push_back({{"graph6", to_graph6(g)},
                           {"order", g.order()},
                           {"edges", g.edge_count()},
                           {"connected", is_connected(g)},
                           {"wheel_free", !witness.has_value()},
                           {"witness", witness_json(witness)},
                           {"fact2_violations", violations.size()}});
        }
    }
    if (fmt == Format::json) text << arr.dump(2) << '\n';
    else if (fmt == Format::graph6) throw usage_error("check emits json or csv");
    write_output(text.str(), args.out);
    return 0;
}

struct SpectraArgs : InputArgs {
    int table = 0;
    int n = 0;
};

int run_spectra(const SpectraArgs& args) {
    const auto fmt = parse_format(args.format);
    if (args.table != 0) {
        if (args.table != 1 && args.table != 2) throw usage_error("--table must be 1 or 2");
        const auto rows = args.table == 1 ? table_one_rows(args.n) : table_two_rows(args.n);
        write_output(emit_table(rows, fmt), args.out);
        return 0;
    }
    const auto kind = parse_matrix(args.matrix);
    const auto graphs = read_graphs(args.in);
    std::ostringstream text;
    json arr = json::array();
    if (fmt == Format::csv) text << "graph6,matrix,radius,row_sum_min,row_sum_max,residual\n";
    for (const auto& g : graphs) {
        const auto m = graph_matrix(g, kind);
        const auto res = spectral_radius(m);
        const auto bounds = row_sum_bounds(m);
        if (fmt == Format::csv) {
            text << to_graph6(g) << ',' << (kind == MatrixKind::adjacency ? "a" : "q") << ','
                 << format_radius(res.radius) << ',' << bounds.min << ',' << bounds.max << ',' << res.residual << '\n';
        } else {
            json j{{"graph6", to_graph6(g)}, {"matrix", to_string(kind)}};
            const json fields = to_json(res);
            for (const auto& [key, value] : fields.items()) j[key] = value;
            j["row_sum_min"] = bounds.min;
            j["row_sum_max"] = bounds.max;
            j["closed_form"] = closed_form_for(g, kind);
            arr.push_back(j);
        }
    }
    if (fmt == Format::json) text << arr.dump(2) << '\n';
    else if (fmt == Format::graph6) throw usage_error("spectra emits json or csv");
    write_output(text.str(), args.out);
    return 0;
}

struct QuotientArgs : InputArgs {
    std::string cells;
    std::vector<int> apex;
};

int run_quotient(const QuotientArgs& args) {
    if (!args.apex.empty()) {
        if (args.apex.size() != 3) throw usage_error("--apex takes n,d_u,b");
        const auto check = apex_char_poly_details(args.apex[0], args.apex[1], args.apex[2]);
        json j{{"n", args.apex[0]},
               {"d_u", args.apex[1]},
               {"b", args.apex[2]},
               {"computed", check.computed.to_string()},
               {"expected", check.expected.to_string()},
               {"verdict", check.matches ? "PASS" : "FAIL"}};
        write_output(j.dump(2) + "\n", args.out);
        return check.matches ? 0 : kExitFail;
    }
    const auto kind = parse_matrix(args.matrix);
    const auto graphs = read_graphs(args.in);
    json arr = json::array();
    for (const auto& g : graphs) {
        const Partition p = args.cells.empty() ? coarsest_equitable(g, kind) : parse_cells(args.cells, g.order());
        json cells = json::array();
        for (const auto& c : p.cells()) cells.push_back(c.to_vector());
        json j{{"graph6", to_graph6(g)}, {"matrix", to_string(kind)}, {"cells", cells}};
        const bool equitable = is_equitable(g, p, kind);
        j["equitable"] = equitable;
        if (equitable) {
            const auto q = quotient_matrix(g, p, kind);
            j["quotient"] = quotient_json(q);
            j["char_poly"] = char_poly(q).to_string();
            j["lambda1"] = round_radius(quotient_eigenvalues(q, p).front());
            j["radius"] = round_radius(spectral_radius(graph_matrix(g, kind)).radius);
        }
        arr.push_back(j);
    }
    write_output(arr.dump(2) + "\n", args.out);
    return 0;
}

struct BudgetArgs {
    double max_seconds = 0;
    long long max_graphs = 0;
    int threads = 0;
    bool allow_large = false;

    Budget budget() const {
        Budget b;
        if (max_seconds > 0) b.max_seconds = max_seconds;
        if (max_graphs > 0) b.max_graphs = static_cast<std::size_t>(max_graphs);
        return b;
    }
    int thread_count() const { return threads > 0 ? threads : default_threads(); }
};

struct EnumerateArgs : BudgetArgs {
    int n = 0;
    std::string filter = "wheel-free";
    std::string out = "-";
    std::string checkpoint;
};

int run_enumerate(const EnumerateArgs& args) {
    GeneratorConfig config;
    config.n = args.n;
    config.filter = parse_filter(args.filter);
    config.budget = args.budget();
    config.threads = args.thread_count();
    config.allow_large = args.allow_large;

    const bool to_file = args.out != "-";
    if (!args.checkpoint.empty() && !to_file) throw usage_error("--checkpoint requires --out");

    bool append = false;
    if (!args.checkpoint.empty()) {
        if (const auto cp = read_checkpoint(args.checkpoint); cp && cp->order == args.n) {
            std::ifstream existing(args.out);
            std::string line;
            while (std::getline(existing, line))
                if (!line.empty()) config.seed_forms.push_back(canonical_form(from_graph6(line)).graph6);
            config.resume_after_parent = cp->parent_index;
            append = true;
        }
    }

    std::ofstream file;
    if (to_file) {
        file.open(args.out, append ? std::ios::app : std::ios::trunc);
        if (!file) throw usage_error("cannot write " + args.out);
    }
    std::ostream& sink = to_file ? static_cast<std::ostream&>(file) : std::cout;
    if (!args.checkpoint.empty()) {
        config.progress = [&](long long parent, std::size_t, std::size_t) {
            sink.flush();
            write_checkpoint(args.checkpoint, {args.n, parent});
        };
    }
    const auto stats = for_each_graph(config, [&](const Graph&, const std::string& form) { sink << form << '\n'; });
    sink.flush();
    std::cerr << "emitted " << stats.emitted << " graphs (" << (stats.exhaustive ? "exhaustive" : "budget exhausted")
              << ", " << stats.elapsed_seconds << " s)\n";
    return stats.exhaustive ? 0 : kExitBudget;
}

struct SearchArgs : BudgetArgs {
    int n = 0;
    std::string matrix = "a";
    double tie_tol = 1e-9;
    std::string format = "json";
    std::string out = "-";
};

SearchOptions search_options(const BudgetArgs& b, double tie_tol) {
    SearchOptions opts;
    opts.tie_tol = tie_tol;
    opts.budget = b.budget();
    opts.threads = b.thread_count();
    opts.allow_large = b.allow_large;
    return opts;
}

int run_search(const SearchArgs& args) {
    const auto report = max_spectral_radius(args.n, parse_matrix(args.matrix), search_options(args, args.tie_tol));
    const auto fmt = parse_format(args.format);
    if (fmt == Format::csv) {
        std::ostringstream text;
        text << "n,kind,max_radius,class_count,exhaustive,extremal\n";
        text << report.n << ',' << to_string(report.kind) << ',' << format_radius(report.max_radius) << ','
             << report.class_count << ',' << (report.exhaustive ? "true" : "false") << ',';
        for (std::size_t i = 0; i < report.extremal.size(); ++i) text << (i ? " " : "") << report.extremal[i];
        text << '\n';
        write_output(text.str(), args.out);
    } else {
        write_output(to_json(report).dump(2) + "\n", args.out);
    }
    return report.exhaustive ? 0 : kExitBudget;
}

struct VerifyArgs : BudgetArgs {
    int theorem = 1;
    int from = 4;
    int to = 8;
    std::string format = "json";
    std::string out = "-";
};

int run_verify(const VerifyArgs& args) {
    if (args.theorem != 1 && args.theorem != 2) throw usage_error("--theorem must be 1 or 2");
    const auto opts = search_options(args, 1e-9);
    const auto verdicts = args.theorem == 1 ? verify_theorem1(args.from, args.to, opts)
                                            : verify_theorem2(args.from, args.to, opts);
    const auto fmt = parse_format(args.format);
    if (fmt == Format::csv) {
        std::ostringstream text;
        text << "n,verdict,max_radius,expected_radius,class_count,extremal_count\n";
        for (const auto& v : verdicts)
            text << v.n << ',' << (v.pass ? "PASS" : "FAIL") << ',' << format_radius(v.report.max_radius) << ','
                 << format_radius(v.expected_radius) << ',' << v.report.class_count << ','
                 << v.report.extremal.size() << '\n';
        write_output(text.str(), args.out);
    } else {
        json arr = json::array();
        for (const auto& v : verdicts) arr.push_back(to_json(v, args.theorem));
        write_output(arr.dump(2) + "\n", args.out);
    }
    bool exhausted = false;
    bool failed = false;
    for (const auto& v : verdicts) {
        if (!v.report.exhaustive) exhausted = true;
        else if (!v.pass) failed = true;
    }
    if (exhausted) return kExitBudget;
    return failed ? kExitFail : 0;
}

void add_budget_flags(CLI::App* cmd, BudgetArgs& b) {
    cmd->add_option("--max-seconds", b.max_seconds, "Wall-clock budget in seconds");
    cmd->add_option("--max-graphs", b.max_graphs, "Cap on emitted graphs of the target order");
    cmd->add_option("--threads", b.threads, "Worker threads (default: WHEELFREE_THREADS or hardware concurrency)");
    cmd->add_flag("--allow-large", b.allow_large, "Permit orders above 9 (generation is exponential)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wheel-free graphs: construction, spectra, enumeration and extremal search"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "Build a named graph");
    construct->add_option("--family", construct_args.family,
                          "hn|f|complete|path|cycle|empty|wheel|star|k2join|matching|gab|gabcd");
    construct->add_option("--n", construct_args.n, "Order");
    construct->add_option("--a", construct_args.a);
    construct->add_option("--b", construct_args.b);
    construct->add_option("--c", construct_args.c);
    construct->add_option("--d", construct_args.d);
    construct->add_option("--format", construct_args.format, "graph6|json|csv");
    construct->add_option("--out", construct_args.out);

    InputArgs check_args;
    auto* check = app.add_subcommand("check", "Wheel-freeness, witnesses and common-neighborhood checks");
    check->add_option("--in", check_args.in, "graph6 file, one graph per line (- for stdin)");
    check->add_option("--format", check_args.format, "json|csv");
    check->add_option("--out", check_args.out);

    SpectraArgs spectra_args;
    auto* spectra = app.add_subcommand("spectra", "Spectral radius and Perron vector, or candidate tables");
    spectra->add_option("--in", spectra_args.in);
    spectra->add_option("--matrix", spectra_args.matrix, "a|q");
    spectra->add_option("--format", spectra_args.format, "json|csv");
    spectra->add_option("--out", spectra_args.out);
    spectra->add_option("--table", spectra_args.table, "Emit candidate table 1 or 2 for --n");
    spectra->add_option("--n", spectra_args.n);

    QuotientArgs quotient_args;
    auto* quotient = app.add_subcommand("quotient", "Equitable partitions, quotient matrices, characteristic polynomials");
    quotient->add_option("--in", quotient_args.in);
    quotient->add_option("--matrix", quotient_args.matrix, "a|q");
    quotient->add_option("--cells", quotient_args.cells, "Explicit partition, e.g. \"0,1;2;3,4,5\"");
    quotient->add_option("--apex", quotient_args.apex, "Check the apex quotient polynomial at n,d_u,b")->delimiter(',');
    quotient->add_option("--out", quotient_args.out);

    EnumerateArgs enumerate_args;
    auto* enumerate = app.add_subcommand("enumerate", "Isomorph-free generation as graph6 lines");
    enumerate->add_option("--n", enumerate_args.n)->required();
    enumerate->add_option("--filter", enumerate_args.filter, "all|wheel-free|connected-wheel-free");
    enumerate->add_option("--out", enumerate_args.out);
    enumerate->add_option("--checkpoint", enumerate_args.checkpoint, "Resume file (order, last parent index)");
    add_budget_flags(enumerate, enumerate_args);

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Maximum spectral radius over wheel-free graphs of order n");
    search->add_option("--n", search_args.n)->required();
    search->add_option("--matrix", search_args.matrix, "a|q");
    search->add_option("--tie-tol", search_args.tie_tol);
    search->add_option("--format", search_args.format, "json|csv");
    search->add_option("--out", search_args.out);
    add_budget_flags(search, search_args);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check the extremal theorems over a range of orders");
    verify->add_option("--theorem", verify_args.theorem, "1 (adjacency) or 2 (signless Laplacian)");
    verify->add_option("--from", verify_args.from);
    verify->add_option("--to", verify_args.to);
    verify->add_option("--format", verify_args.format, "json|csv");
    verify->add_option("--out", verify_args.out);
    add_budget_flags(verify, verify_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*construct) return run_construct(construct_args);
        if (*check) return run_check(check_args);
        if (*spectra) return run_spectra(spectra_args);
        if (*quotient) return run_quotient(quotient_args);
        if (*enumerate) return run_enumerate(enumerate_args);
        if (*search) return run_search(search_args);
        if (*verify) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
