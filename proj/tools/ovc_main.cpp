#include "ovc/chroma.hpp"
#include "ovc/families.hpp"
#include "ovc/graph6.hpp"
#include "ovc/ks_dataset.hpp"
#include "ovc/ortho.hpp"
#include "ovc/report_json.hpp"
#include "ovc/sphere_search.hpp"
#include "ovc/structure.hpp"
#include "ovc/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace ovc;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
    return buf;
}

json make_manifest(const std::string& subcommand,
                   const std::vector<std::string>& inputs, json config) {
    return json{{"subcommand", subcommand},
                {"inputs", inputs},
                {"config", std::move(config)},
                {"version", kVersion},
                {"timestamp", timestamp_utc()}};
}

void print_manifest_line(const json& manifest) {
    std::cout << "ovc " << manifest["subcommand"].get<std::string>() << " v"
              << kVersion << " " << manifest["timestamp"].get<std::string>()
              << "\n";
}

std::vector<Graph> read_graphs(const std::string& path) {
    if (path == "-") return read_graph6_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph6_stream(in);
}

Graph read_first_graph(const std::string& path) {
    auto graphs = read_graphs(path);
    if (graphs.empty())
        throw std::runtime_error("no graph6 record in '" + path + "'");
    return graphs.front();
}

// ------------------------------------------------------------------ dataset

struct DatasetOptions {
    bool json_out = false;
    std::string override_path;
    std::string export_vectors;
    std::string export_graph6;
    std::uint64_t budget = 50'000'000;
};

int run_dataset(const DatasetOptions& opt) {
    json manifest = make_manifest(
        "dataset",
        opt.override_path.empty() ? std::vector<std::string>{}
                                  : std::vector<std::string>{opt.override_path},
        json{{"budget", opt.budget}});
    json checks = json::array();
    bool failed = false, inconclusive = false;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        if (!pass) failed = true;
    };

    std::optional<KSDataset> ds;
    try {
        if (opt.override_path.empty()) {
            ds = load_dataset();
        } else {
            std::ifstream in(opt.override_path);
            if (!in) throw std::runtime_error("cannot open '" + opt.override_path + "'");
            VectorSetFile file = read_vectorset(in);
            std::vector<std::array<int, 4>> bases;
            for (const auto& b : file.bases) {
                if (b.size() != 4)
                    throw std::runtime_error("bases entries must have 4 indices");
                bases.push_back({b[0], b[1], b[2], b[3]});
            }
            ds = make_dataset(std::move(file.vectors), std::move(bases));
        }
        record("dataset-validation", true,
               "18 vectors, 9 orthogonal bases, each vector twice");
    } catch (const std::exception& e) {
        record("dataset-validation", false, e.what());
        json out{{"manifest", manifest}, {"checks", checks}};
        if (opt.json_out) {
            std::cout << out.dump(2) << "\n";
        } else {
            print_manifest_line(manifest);
            std::cout << "dataset-validation: FAIL (" << e.what() << ")\n";
        }
        return kCheckFailed;
    }

    BasesGraph bg = bases_graph(*ds);
    const DegreeProfile prof = degree_profile(bg.graph);
    record("bases-graph-shape",
           bg.graph.vertex_count() == 9 && bg.graph.edge_count() == 18 &&
               prof.regular && prof.max_degree == 4,
           "9 vertices, 18 edges, 4-regular");

    OrthoColoring shared = shared_vector_edge_coloring(*ds);
    VerifyReport verify = verify_ortho_coloring(bg.graph, shared);
    record("pi-prime-upper", verify.pass,
           "shared-vector 4-edge-coloring verifies exactly");
    record("pi-prime-lower", prof.max_degree == 4,
           "max degree 4 forces dimension >= 4");
    const bool pi_certified = verify.pass && prof.max_degree == 4;

    ChromaResult ci = chromatic_index(bg.graph, opt.budget);
    if (ci.status == ChromaStatus::exact) {
        record("chromatic-index",
               ci.value == 5 && is_proper(bg.graph, ci.certificate),
               "exact chi' = " + std::to_string(ci.value));
    } else {
        inconclusive = true;
        record("chromatic-index", false,
               "inconclusive in [" + std::to_string(ci.lower) + "," +
                   std::to_string(ci.upper) + "]");
    }

    OrthobasisList enumeration = enumerate_orthobases(ds->vectors);
    KSDecision ks = ks_decide(ds->vectors, enumeration.bases);
    record("ks", ks.outcome == KSOutcome::ks,
           "no {0,1} marking with exactly one per basis; " +
               std::to_string(enumeration.bases.size()) + " bases from " +
               std::to_string(enumeration.subsets_scanned) + " subsets");

    if (!opt.export_vectors.empty()) {
        std::ofstream out(opt.export_vectors);
        if (!out) throw std::runtime_error("cannot write '" + opt.export_vectors + "'");
        std::vector<std::vector<int>> bases;
        for (const auto& b : ds->bases) bases.push_back({b[0], b[1], b[2], b[3]});
        write_vectorset(out, ds->vectors, bases);
    }
    if (!opt.export_graph6.empty()) {
        std::ofstream out(opt.export_graph6);
        if (!out) throw std::runtime_error("cannot write '" + opt.export_graph6 + "'");
        out << to_graph6(bg.graph) << "\n";
    }

    json out{{"manifest", manifest},
             {"n", bg.graph.vertex_count()},
             {"m", bg.graph.edge_count()},
             {"chromatic_index",
              ci.status == ChromaStatus::exact ? json(ci.value) : json()},
             {"pi_prime_certified", pi_certified ? json(4) : json()},
             {"ks", ks.outcome == KSOutcome::ks},
             {"orthobases", enumeration.bases.size()},
             {"subsets_scanned", enumeration.subsets_scanned},
             {"checks", checks}};
    if (opt.json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        print_manifest_line(manifest);
        std::cout << "G(S): 9 vertices, 18 edges, 4-regular\n";
        for (const auto& c : checks)
            std::cout << (c["pass"].get<bool>() ? "  PASS " : "  FAIL ")
                      << c["name"].get<std::string>() << ": "
                      << c["detail"].get<std::string>() << "\n";
        if (!failed) std::cout << "4 = pi'(G) < chi'(G) = 5 reproduced\n";
    }
    if (failed && !inconclusive) return kCheckFailed;
    if (inconclusive) return kInconclusive;
    return kOk;
}

// ------------------------------------------------------------------- chroma

struct ChromaOptions {
    std::string input = "-";
    bool edge = false;
    bool json_out = false;
    std::uint64_t budget = 50'000'000;
    std::optional<int> lower, upper;
};

int run_chroma(const ChromaOptions& opt) {
    Graph g = read_first_graph(opt.input);
    json manifest = make_manifest("chroma", {opt.input},
                                  json{{"edge", opt.edge}, {"budget", opt.budget}});
    ChromaResult r = opt.edge
                         ? chromatic_index(g, opt.budget)
                         : chromatic_number(g, opt.lower, opt.upper, opt.budget);
    json out{{"manifest", manifest},
             {"kind", opt.edge ? "chromatic_index" : "chromatic_number"},
             {"n", g.vertex_count()},
             {"m", g.edge_count()}};
    out.update(chroma_json(r));
    if (opt.json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        print_manifest_line(manifest);
        const char* sym = opt.edge ? "chi'" : "chi";
        if (r.status == ChromaStatus::exact)
            std::cout << sym << " = " << r.value << " (exact, nodes=" << r.nodes
                      << ")\n";
        else
            std::cout << sym << " in [" << r.lower << "," << r.upper
                      << "] (inconclusive, budget spent)\n";
    }
    return r.status == ChromaStatus::exact ? kOk : kInconclusive;
}

// ------------------------------------------------------------------- search

struct SearchOptions {
    std::string input = "-";
    bool edge = false;
    bool json_out = false;
    int d = 3;
    int restarts = 100;
    int max_iterations = 10'000;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    long round_denominator = 1'000'000;
    std::string csv_path;
};

int run_search(const SearchOptions& opt) {
    Graph g = read_first_graph(opt.input);
    json manifest = make_manifest(
        "search", {opt.input},
        json{{"edge", opt.edge},
             {"d", opt.d},
             {"restarts", opt.restarts},
             {"max_iterations", opt.max_iterations},
             {"tol", opt.tol},
             {"seed", opt.seed},
             {"round_denominator", opt.round_denominator}});

    SolveConfig cfg;
    cfg.d = opt.d;
    cfg.restarts = opt.restarts;
    cfg.max_iterations = opt.max_iterations;
    cfg.tolerance = opt.tol;
    cfg.seed = opt.seed;

    SolveReport rep = opt.edge ? search_ortho_edge_coloring(g, cfg)
                               : search_ortho_coloring(g, cfg);
    // Adjacency structure the rounded vectors must satisfy exactly.
    const Graph constraint = opt.edge ? line_graph(g).graph : g;
    RoundingResult rounding =
        round_to_rational(rep.best, constraint, opt.round_denominator);

    if (!opt.csv_path.empty()) {
        std::ofstream csv(opt.csv_path);
        if (!csv) throw std::runtime_error("cannot write '" + opt.csv_path + "'");
        csv << "restart,final_loss,final_residual\n";
        for (int i = 0; i < rep.restarts_run; ++i)
            csv << i << "," << rep.per_restart_losses[i] << ","
                << rep.per_restart_residuals[i] << "\n";
    }

    if (opt.json_out) {
        json out{{"manifest", manifest}};
        out.update(solve_report_json(rep, &rounding));
        std::cout << out.dump(2) << "\n";
    } else {
        print_manifest_line(manifest);
        const char* sym = opt.edge ? "pi'" : "pi";
        std::cout << (rep.status == SolveStatus::success ? "success" : "exhausted")
                  << ": best residual " << rep.best_residual << " after "
                  << rep.restarts_run << " restarts (seed " << rep.seed << ")\n";
        if (rounding.certified)
            std::cout << "certified: " << sym << "(G) <= " << rep.d
                      << " by exact rational vectors (denominator cap "
                      << rounding.denominator_cap << ")\n";
        else if (rep.status == SolveStatus::success)
            std::cout << "numerical evidence for " << sym << "(G) <= " << rep.d
                      << " only; rational certification failed up to denominator "
                      << opt.round_denominator << "\n";
        else
            std::cout << "no claim: residual above tolerance and rational "
                         "certification failed\n";
    }
    return rep.status == SolveStatus::success ? kOk : kInconclusive;
}

// --------------------------------------------------------------- snark-scan

struct ScanOptions {
    std::string input = "-";
    bool json_out = false;
    std::uint64_t budget = 50'000'000;
    int d = 3;
    int restarts = 60;
    int max_iterations = 10'000;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    long round_denominator = 1'000'000;
};

json scan_record(const ScanOptions& opt, int index, const std::string& rec) {
    json row{{"index", index}, {"graph6", rec}};
    Graph g;
    try {
        g = from_graph6(rec);
    } catch (const std::exception& e) {
        row["status"] = "parse-error";
        row["reason"] = e.what();
        return row;
    }
    row["n"] = g.vertex_count();
    row["m"] = g.edge_count();

    const DegreeProfile prof = degree_profile(g);
    if (!(prof.regular && prof.max_degree == 3)) {
        row["status"] = "dismissed";
        row["reason"] = "not 3-regular";
        return row;
    }
    const bool biconn = is_biconnected(g);
    row["biconnected"] = biconn;
    if (!biconn) {
        row["status"] = "dismissed";
        row["reason"] = "not 2-connected";
        return row;
    }

    ChromaResult ci = chromatic_index(g, opt.budget);
    if (ci.status != ChromaStatus::exact) {
        row["status"] = "inconclusive";
        row["reason"] = "chromatic index budget spent in [" +
                        std::to_string(ci.lower) + "," + std::to_string(ci.upper) +
                        "]";
        return row;
    }
    row["chromatic_index"] = ci.value;
    row["class"] = ci.value == 3 ? 1 : 2;
    if (ci.value == 3) {
        row["status"] = "dismissed";
        row["reason"] = "Class 1 (chi' = 3)";
        return row;
    }

    HamiltonianResult ham = hamiltonian_cycle(g, opt.budget);
    if (ham.status == SearchStatus::budget_exceeded) {
        row["status"] = "inconclusive";
        row["reason"] = "hamiltonicity budget spent";
        return row;
    }
    row["hamiltonian"] = ham.status == SearchStatus::found;
    if (ham.status == SearchStatus::found) {
        // A cubic Hamiltonian graph is 3-edge-colorable, contradicting
        // Class 2: one of the two exact solvers is wrong.
        row["status"] = "bug";
        row["reason"] = "Class 2 yet Hamiltonian: solver contradiction";
        return row;
    }

    const bool planar = is_planar(g);
    row["planar"] = planar;
    if (planar) {
        // Planar cubic 2-connected graphs are 3-edge-colorable (Four Color
        // Theorem via Tait), again contradicting Class 2.
        row["status"] = "bug";
        row["reason"] = "Class 2 yet planar and 2-connected: solver contradiction";
        return row;
    }

    SolveConfig cfg;
    cfg.d = opt.d;
    cfg.restarts = opt.restarts;
    cfg.max_iterations = opt.max_iterations;
    cfg.tolerance = opt.tol;
    cfg.seed = opt.seed;
    SolveReport rep = search_ortho_edge_coloring(g, cfg);
    RoundingResult rounding =
        round_to_rational(rep.best, line_graph(g).graph, opt.round_denominator);
    row["status"] = "candidate";
    row["residual"] = rep.best_residual;
    row["search_status"] =
        rep.status == SolveStatus::success ? "success" : "exhausted";
    row["rounding"] = rounding_json(rounding);
    row["certificate_found"] = rounding.certified;
    return row;
}

int run_scan(const ScanOptions& opt) {
    json manifest = make_manifest("snark-scan", {opt.input},
                                  json{{"budget", opt.budget},
                                       {"d", opt.d},
                                       {"restarts", opt.restarts},
                                       {"tol", opt.tol},
                                       {"seed", opt.seed},
                                       {"round_denominator", opt.round_denominator}});
    std::ifstream file;
    std::istream* in = &std::cin;
    if (opt.input != "-") {
        file.open(opt.input);
        if (!file) throw std::runtime_error("cannot open '" + opt.input + "'");
        in = &file;
    }
    if (opt.json_out)
        std::cout << json{{"manifest", manifest}}.dump() << "\n";
    else
        print_manifest_line(manifest);

    bool any_bug = false;
    int index = 0;
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.starts_with(">>graph6<<")) line.erase(0, 10);
        if (line.empty()) continue;

        json row = scan_record(opt, index, line);
        const std::string status = row["status"];
        any_bug = any_bug || status == "bug";
        if (opt.json_out) {
            std::cout << row.dump() << "\n";
        } else {
            std::cout << "#" << index << " ";
            if (row.contains("n"))
                std::cout << "n=" << row["n"].get<int>() << " m="
                          << row["m"].get<int>() << " ";
            std::cout << status;
            if (row.contains("reason"))
                std::cout << " (" << row["reason"].get<std::string>() << ")";
            if (status == "candidate") {
                std::cout << " class=2 non-hamiltonian non-planar residual="
                          << row["residual"].get<double>() << " certified="
                          << (row["certificate_found"].get<bool>() ? "YES" : "no");
                if (row["certificate_found"].get<bool>())
                    std::cout << "  ** exact certificate: verify independently **";
            }
            std::cout << "\n";
        }
        ++index;
    }
    return any_bug ? kCheckFailed : kOk;
}

// ---------------------------------------------------- join / linegraph / ks

int run_join(const std::string& a, const std::string& b) {
    Graph g = join(read_first_graph(a), read_first_graph(b));
    std::cout << "# ovc join v" << kVersion << " " << timestamp_utc() << " " << a
              << " " << b << "\n"
              << to_graph6(g) << "\n";
    return kOk;
}

int run_linegraph(const std::string& a) {
    Graph g = line_graph(read_first_graph(a)).graph;
    std::cout << "# ovc linegraph v" << kVersion << " " << timestamp_utc() << " "
              << a << "\n"
              << to_graph6(g) << "\n";
    return kOk;
}

struct KsVerifyOptions {
    std::string input;
    bool json_out = false;
    bool listed_only = false;
};

int run_ks_verify(const KsVerifyOptions& opt) {
    std::ifstream in(opt.input);
    if (!in) throw std::runtime_error("cannot open '" + opt.input + "'");
    VectorSetFile file = read_vectorset(in);
    json manifest = make_manifest("ks-verify", {opt.input},
                                  json{{"listed_bases_only", opt.listed_only}});

    OrthobasisList enumeration;
    KSDecision decision = [&] {
        if (opt.listed_only) return ks_decide(file.vectors, file.bases);
        enumeration = enumerate_orthobases(file.vectors);
        return ks_decide(file.vectors, enumeration.bases);
    }();

    if (opt.json_out) {
        json out{{"manifest", manifest},
                 {"vectors", file.vectors.size()},
                 {"dimension", file.vectors.dimension()},
                 {"subsets_scanned", enumeration.subsets_scanned}};
        out.update(ks_decision_json(decision));
        std::cout << out.dump(2) << "\n";
    } else {
        print_manifest_line(manifest);
        std::cout << file.vectors.size() << " vectors in R^"
                  << file.vectors.dimension() << ", " << decision.bases.size()
                  << " orthonormal bases";
        if (!opt.listed_only)
            std::cout << " (scanned " << enumeration.subsets_scanned << " subsets)";
        std::cout << "\n";
        if (decision.outcome == KSOutcome::ks) {
            std::cout << "Kochen-Specker: YES (exhausted " << decision.nodes
                      << " branch nodes, no marking exists)\n";
        } else {
            std::cout << "Kochen-Specker: NO; witness marks:";
            for (std::size_t i = 0; i < decision.witness.size(); ++i)
                if (decision.witness[i]) std::cout << " " << i;
            std::cout << "\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal vector (edge-)colorings: exact chromatic solvers, "
                 "Kochen-Specker machinery, numeric dimension search"};
    app.require_subcommand(1);

    DatasetOptions dataset;
    auto* cmd_dataset = app.add_subcommand(
        "dataset", "reproduce the 4 = pi' < chi' = 5 construction end to end");
    cmd_dataset->add_flag("--json", dataset.json_out, "machine-readable report");
    cmd_dataset->add_option("--override", dataset.override_path,
                            "validate this vector-set file instead of the embedded data");
    cmd_dataset->add_option("--export-vectors", dataset.export_vectors,
                            "write the vector set (with bases) to this path");
    cmd_dataset->add_option("--export-graph6", dataset.export_graph6,
                            "write G(S) in graph6 to this path");
    cmd_dataset->add_option("--budget", dataset.budget, "exact solver node budget");

    ChromaOptions chroma;
    auto* cmd_chroma = app.add_subcommand(
        "chroma", "exact chromatic number or index of a graph6 input");
    cmd_chroma->add_option("input", chroma.input, "graph6 file, or - for stdin");
    cmd_chroma->add_flag("--edge", chroma.edge, "chromatic index chi'");
    cmd_chroma->add_flag("--json", chroma.json_out, "machine-readable report");
    cmd_chroma->add_option("--budget", chroma.budget, "node budget");
    cmd_chroma->add_option("--lower", chroma.lower, "trusted lower bound hint");
    cmd_chroma->add_option("--upper", chroma.upper, "trusted upper bound hint");

    SearchOptions search;
    auto* cmd_search = app.add_subcommand(
        "search",
        "numeric orthogonal (edge-)coloring search with rational certification");
    cmd_search->add_option("input", search.input, "graph6 file, or - for stdin");
    cmd_search->add_option("-d,--dimension", search.d, "target dimension")
        ->required();
    cmd_search->add_flag("--edge", search.edge, "search edge colorings");
    cmd_search->add_flag("--json", search.json_out, "machine-readable report");
    cmd_search->add_option("--restarts", search.restarts, "random restarts");
    cmd_search->add_option("--max-iterations", search.max_iterations,
                           "iterations per restart");
    cmd_search->add_option("--tol", search.tol, "success tolerance on max |dot|");
    cmd_search->add_option("--seed", search.seed, "RNG seed");
    cmd_search->add_option("--round-denominator", search.round_denominator,
                           "max denominator for rational certification");
    cmd_search->add_option("--csv", search.csv_path,
                           "write per-restart losses/residuals as CSV");

    ScanOptions scan;
    auto* cmd_scan = app.add_subcommand(
        "snark-scan", "filter a graph6 stream for Class-2 cubic candidates and "
                      "run the d=3 edge search on each");
    cmd_scan->add_option("input", scan.input, "graph6 file, or - for stdin");
    cmd_scan->add_flag("--json", scan.json_out, "one JSON record per line");
    cmd_scan->add_option("--budget", scan.budget, "exact phase node budget");
    cmd_scan->add_option("-d,--dimension", scan.d, "search dimension");
    cmd_scan->add_option("--restarts", scan.restarts, "random restarts per graph");
    cmd_scan->add_option("--max-iterations", scan.max_iterations,
                         "iterations per restart");
    cmd_scan->add_option("--tol", scan.tol, "success tolerance");
    cmd_scan->add_option("--seed", scan.seed, "RNG seed");
    cmd_scan->add_option("--round-denominator", scan.round_denominator,
                         "max denominator for rational certification");

    std::string join_a, join_b;
    auto* cmd_join =
        app.add_subcommand("join", "emit the join of two graphs in graph6");
    cmd_join->add_option("first", join_a, "graph6 file")->required();
    cmd_join->add_option("second", join_b, "graph6 file")->required();

    std::string lg_input;
    auto* cmd_lg = app.add_subcommand("linegraph", "emit the line graph in graph6");
    cmd_lg->add_option("input", lg_input, "graph6 file, or - for stdin")->required();

    KsVerifyOptions ksv;
    auto* cmd_ksv = app.add_subcommand(
        "ks-verify", "Kochen-Specker decision for a vector-set file");
    cmd_ksv->add_option("input", ksv.input, "vector-set file")->required();
    cmd_ksv->add_flag("--json", ksv.json_out, "machine-readable report");
    cmd_ksv->add_flag("--listed-bases-only", ksv.listed_only,
                      "quantify only over the file's bases section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (cmd_dataset->parsed()) return run_dataset(dataset);
        if (cmd_chroma->parsed()) return run_chroma(chroma);
        if (cmd_search->parsed()) return run_search(search);
        if (cmd_scan->parsed()) return run_scan(scan);
        if (cmd_join->parsed()) return run_join(join_a, join_b);
        if (cmd_lg->parsed()) return run_linegraph(lg_input);
        if (cmd_ksv->parsed()) return run_ks_verify(ksv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
