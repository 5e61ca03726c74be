// Command-line surface for the star-path antimagic toolkit.
//
// Subcommands:
//   construct   build the prescribed labeling for K_{1,s} x P_n
//   verify      check a labeling file against a graph file
//   search      run the backtracking/exhaustive oracle directly
//   census      sweep a parameter grid into a CSV
//   product     emit a direct product as graph JSON
//
// Exit codes: 0 success/antimagic/pass; 1 verify fail; 2 not antimagic;
// 3 unknown (budget exhausted); 64 bad arguments; 65 malformed input.

#include "antimagic/constructions.hpp"
#include "antimagic/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace antimagic;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitNotAntimagic = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitBadArgs = 64;
constexpr int kExitBadInput = 65;

std::int64_t default_budget() {
    if (const char* env = std::getenv("ANTIMAGIC_BUDGET")) {
        try {
            std::int64_t v = std::stoll(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            // fall through to the default
        }
        std::cerr << "warning: ignoring unparseable ANTIMAGIC_BUDGET\n";
    }
    return 10'000'000;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

Graph load_graph(const std::string& path) {
    return graph_from_json(parse_json_text(read_file(path)));
}

std::string role_or_id(const Graph& g, int v) {
    if (const auto& role = g.role(v)) return role->to_string();
    return std::to_string(v);
}

int run_construct(int s, int n, const std::string& format,
                  const std::string& graph_out, const std::string& labeling_out,
                  std::int64_t budget) {
    ProductParams p = ProductParams::checked(s, n);
    ConstructionOutcome out = construct(p, SearchBudget::backtracking(budget));
    Graph g = product_star_path(p);

    if (out.kind == ConstructionOutcome::Kind::NotAntimagic) {
        std::cout << "not antimagic, exhaustive certificate ("
                  << out.certificate->assignments_examined << " assignments)\n"
                  << certificate_to_json(*out.certificate).dump(2) << "\n";
        return kExitNotAntimagic;
    }
    if (out.kind == ConstructionOutcome::Kind::Unknown) {
        std::cout << "unknown: search budget exhausted after "
                  << out.budget_report->nodes_expanded << " nodes\n";
        return kExitUnknown;
    }

    const EdgeLabeling& f = *out.labeling;
    if (!graph_out.empty()) write_file(graph_out, graph_to_json(g).dump(2) + "\n");
    if (!labeling_out.empty())
        write_file(labeling_out, labeling_to_json(f).dump(2) + "\n");

    if (format == "json") {
        json payload = outcome_to_json(out);
        payload["graph"] = graph_to_json(g);
        payload["labeling"] = labeling_to_json(f);
        std::cout << payload.dump(2) << "\n";
    } else if (format == "dot") {
        std::cout << to_dot(g, f);
    } else {
        std::cout << labeled_csv(g, f);
    }
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& labeling_path,
               bool show_weights) {
    Graph g = load_graph(graph_path);
    EdgeLabeling f =
        labeling_from_json(parse_json_text(read_file(labeling_path)), g);
    AntimagicVerdict v = is_antimagic_labeling(g, f);

    if (show_weights) {
        std::cout << "vertex,role,weight\n";
        for (int vert = 0; vert < g.vertex_count(); ++vert)
            std::cout << vert << "," << role_or_id(g, vert) << ","
                      << v.weights.weight(vert) << "\n";
    }
    if (v.pass) {
        std::cout << "PASS: antimagic labeling of " << g.vertex_count()
                  << " vertices, " << g.edge_count() << " edges\n";
        return 0;
    }
    if (!v.bijection_defect.empty()) {
        std::cout << "FAIL: not a bijection onto 1..|E|: " << v.bijection_defect
                  << "\n";
    } else {
        auto [a, b] = *v.collision;
        std::cout << "FAIL: vertices " << a << " (" << role_or_id(g, a)
                  << ") and " << b << " (" << role_or_id(g, b)
                  << ") share weight " << v.weights.weight(a) << "\n";
    }
    return kExitFail;
}

int report_search_result(const Graph& g, const SearchResult& r) {
    switch (r.kind) {
        case SearchResult::Kind::Antimagic: {
            json payload{{"verdict", "antimagic"},
                         {"labeling", labeling_to_json(*r.witness)},
                         {"nodes_expanded", r.report.nodes_expanded}};
            std::cout << payload.dump(2) << "\n";
            return 0;
        }
        case SearchResult::Kind::NotAntimagic:
            std::cout << "not antimagic, exhaustive certificate ("
                      << r.certificate->assignments_examined
                      << " assignments)\n"
                      << certificate_to_json(*r.certificate).dump(2) << "\n";
            return kExitNotAntimagic;
        case SearchResult::Kind::Unknown:
            std::cout << "unknown: budget exhausted after "
                      << r.report.nodes_expanded << " nodes ("
                      << g.edge_count() << " edges)\n";
            return kExitUnknown;
    }
    return kExitUnknown;
}

int run_search(std::optional<int> s, std::optional<int> n,
               const std::string& graph_path, const std::string& mode,
               std::int64_t budget) {
    Graph g = graph_path.empty()
                  ? product_star_path(ProductParams::checked(*s, *n))
                  : load_graph(graph_path);
    SearchBudget b;
    b.max_nodes = budget;
    if (mode == "exhaustive")
        b.mode = SearchBudget::Mode::Exhaustive;
    else if (mode == "backtracking")
        b.mode = SearchBudget::Mode::Backtracking;
    else
        b.mode = g.edge_count() <= 12 ? SearchBudget::Mode::Exhaustive
                                      : SearchBudget::Mode::Backtracking;
    return report_search_result(g, find_antimagic(g, b));
}

std::string csv_sanitize(std::string text) {
    for (char& c : text)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return text;
}

int run_census(int s_min, int s_max, int n_min, int n_max,
               const std::string& out_path, std::int64_t budget) {
    if (s_min > s_max || n_min > n_max || s_min < 1 || n_min < 2) {
        std::cerr << "error: empty or invalid census range\n";
        return kExitBadArgs;
    }

    std::ostringstream csv;
    csv << "s,n,verdict,method,epsilon,edges,millis\n";
    int antimagic_count = 0, not_antimagic = 0, unknown = 0, errors = 0;
    for (int s = s_min; s <= s_max; ++s)
        for (int n = n_min; n <= n_max; ++n) {
            ProductParams p = ProductParams::checked(s, n);
            auto started = std::chrono::steady_clock::now();
            std::string verdict, method, epsilon;
            try {
                ConstructionOutcome out =
                    construct(p, SearchBudget::backtracking(budget));
                switch (out.kind) {
                    case ConstructionOutcome::Kind::Antimagic:
                        verdict = "antimagic";
                        method = method_tag_name(*out.method);
                        if (out.epsilon) epsilon = std::to_string(*out.epsilon);
                        ++antimagic_count;
                        break;
                    case ConstructionOutcome::Kind::NotAntimagic:
                        verdict = "not-antimagic";
                        method = method_tag_name(MethodTag::SearchFallback);
                        ++not_antimagic;
                        break;
                    case ConstructionOutcome::Kind::Unknown:
                        verdict = "unknown";
                        method = method_tag_name(MethodTag::SearchFallback);
                        ++unknown;
                        break;
                }
            } catch (const std::exception& e) {
                verdict = "error";
                method = csv_sanitize(e.what());
                ++errors;
            }
            auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
            csv << s << "," << n << "," << verdict << "," << method << ","
                << epsilon << "," << p.edge_count() << "," << millis << "\n";
        }

    if (out_path.empty() || out_path == "-")
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());

    std::cout << "census: " << std::to_string((s_max - s_min + 1) *
                                              (n_max - n_min + 1))
              << " cells, antimagic=" << antimagic_count
              << " not-antimagic=" << not_antimagic << " unknown=" << unknown;
    if (errors > 0) std::cout << " errors=" << errors;
    std::cout << "\n";
    return 0;
}

int run_product(std::optional<int> star, std::optional<int> path,
                const std::string& g_path, const std::string& h_path,
                bool split_components) {
    Graph g = star.has_value() && path.has_value()
                  ? product_star_path(ProductParams::checked(*star, *path))
                  : direct_product(load_graph(g_path), load_graph(h_path));
    if (!split_components) {
        std::cout << graph_to_json(g).dump(2) << "\n";
        return 0;
    }
    json comps = json::array();
    for (const ComponentSplit& c : components(g))
        comps.push_back(
            {{"graph", graph_to_json(c.graph)}, {"original_ids", c.original_ids}});
    std::cout << json{{"components", comps}}.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"antimagic labelings of star-path direct products"};
    app.require_subcommand(1);
    std::int64_t budget = default_budget();

    auto* c = app.add_subcommand("construct",
                                 "construct a labeling for K_{1,s} x P_n");
    int cs = 0, cn = 0;
    std::string format = "json", graph_out, labeling_out;
    c->add_option("--s", cs, "star leaf count (s >= 1)")->required();
    c->add_option("--n", cn, "path vertex count (n >= 2)")->required();
    c->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "dot", "csv"}));
    c->add_option("--graph-out", graph_out, "also write graph JSON here");
    c->add_option("--labeling-out", labeling_out,
                  "also write labeling JSON here");
    c->add_option("--budget", budget, "search node budget for s=1 cells");

    auto* v = app.add_subcommand("verify", "verify a labeling file");
    std::string graph_path, labeling_path;
    bool show_weights = false;
    v->add_option("graph", graph_path, "graph JSON file")->required();
    v->add_option("labeling", labeling_path, "labeling JSON file")->required();
    v->add_flag("--weights", show_weights, "print the full weight table");

    auto* se = app.add_subcommand("search", "run the search oracle");
    std::optional<int> ss, sn;
    std::string search_graph, mode = "auto";
    se->add_option("--s", ss, "star leaf count");
    se->add_option("--n", sn, "path vertex count");
    se->add_option("--graph", search_graph, "graph JSON file");
    se->add_option("--mode", mode, "search mode")
        ->check(CLI::IsMember({"auto", "exhaustive", "backtracking"}));
    se->add_option("--budget", budget, "search node budget");

    auto* ce = app.add_subcommand("census", "sweep a parameter grid");
    int s_min = 0, s_max = 0, n_min = 0, n_max = 0;
    std::string out_path;
    ce->add_option("--s-min", s_min)->required();
    ce->add_option("--s-max", s_max)->required();
    ce->add_option("--n-min", n_min)->required();
    ce->add_option("--n-max", n_max)->required();
    ce->add_option("--out", out_path, "CSV output path (default stdout)");
    ce->add_option("--budget", budget, "search node budget per cell");

    auto* pr = app.add_subcommand("product", "emit a direct product");
    std::optional<int> star, path;
    std::string pg_path, ph_path;
    bool split = false;
    pr->add_option("--star", star, "star leaf count");
    pr->add_option("--path", path, "path vertex count");
    pr->add_option("left", pg_path, "left graph JSON file");
    pr->add_option("right", ph_path, "right graph JSON file");
    pr->add_flag("--components", split, "split output into components");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    try {
        if (*c) return run_construct(cs, cn, format, graph_out, labeling_out, budget);
        if (*v) return run_verify(graph_path, labeling_path, show_weights);
        if (*se) {
            if (search_graph.empty() && (!ss || !sn)) {
                std::cerr << "error: search needs --graph or both --s/--n\n";
                return kExitBadArgs;
            }
            return run_search(ss, sn, search_graph, mode, budget);
        }
        if (*ce) return run_census(s_min, s_max, n_min, n_max, out_path, budget);
        if (*pr) {
            const bool params_any = star.has_value() || path.has_value();
            const bool files_any = !pg_path.empty() || !ph_path.empty();
            const bool params_ok = star.has_value() && path.has_value();
            const bool files_ok = !pg_path.empty() && !ph_path.empty();
            if (params_any == files_any || (params_any && !params_ok) ||
                (files_any && !files_ok)) {
                std::cerr << "error: product needs --star/--path or two "
                             "graph files\n";
                return kExitBadArgs;
            }
            return run_product(star, path, pg_path, ph_path, split);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitBadArgs;
}
