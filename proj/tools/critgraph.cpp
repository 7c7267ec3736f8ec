// critgraph: batch workbench over graph6 streams.
//
// Subcommands: check, chi, color, critical, decompose, verify-claims,
// catalog, enumerate, selftest.  One graph6 record per input line; lines
// starting with '#' and blank lines are skipped.  Exit codes: 0 ok,
// 1 violated/false verdict under --strict (or selftest failure),
// 2 usage error, 3 malformed input.

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "critgraph/canonical.hpp"
#include "critgraph/catalog.hpp"
#include "critgraph/claims.hpp"
#include "critgraph/coloring.hpp"
#include "critgraph/criticality.hpp"
#include "critgraph/c5_structure.hpp"
#include "critgraph/enumerate.hpp"
#include "critgraph/graph6.hpp"
#include "critgraph/patterns.hpp"
#include "critgraph/reference.hpp"

using namespace critgraph;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

std::atomic<bool> g_cancel{false};
void on_sigint(int) { g_cancel.store(true); }

int env_threads() {
    const char* raw = std::getenv("CRITGRAPH_THREADS");
    if (!raw) return 1;
    int n = std::atoi(raw);
    return n < 1 ? 1 : n;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Streams one graph per input line through fn; returns an exit code.
// fn returns false to flag a --strict violation for this line.
template <typename F>
int stream_graphs(std::istream& in, F&& fn) {
    std::string line;
    int lineno = 0;
    bool violated = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        Graph g;
        try {
            g = from_graph6(text);
        } catch (const graph6_error& err) {
            std::cerr << "stdin:" << lineno << ": malformed graph6: " << err.what() << "\n";
            return kExitBadInput;
        }
        if (!fn(g, lineno)) violated = true;
    }
    return violated ? kExitViolation : 0;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string set_text(VertexSet s) {
    std::vector<int> v;
    for (int x : s) v.push_back(x);
    return "{" + join_ints(v) + "}";
}

nlohmann::json set_json(VertexSet s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

void print_partition_text(std::ostream& out, const C5Partition& part) {
    out << "cycle=" << join_ints({part.cycle.begin(), part.cycle.end()});
    if (!part.s0.empty()) out << " S0=" << set_text(part.s0);
    if (!part.s5.empty()) out << " S5=" << set_text(part.s5);
    for (int i = 1; i <= 5; ++i)
        if (!part.s2_at(i).empty()) out << " S2(" << i << ")=" << set_text(part.s2_at(i));
    for (int i = 1; i <= 5; ++i)
        if (!part.s3_at(i).empty()) out << " S3(" << i << ")=" << set_text(part.s3_at(i));
    for (int i = 1; i <= 5; ++i)
        if (!part.s4_at(i).empty()) out << " S4(" << i << ")=" << set_text(part.s4_at(i));
    for (const auto& [mask, verts] : part.excluded_nonempty)
        out << " excluded(mask=" << int(mask) << ")=" << set_text(verts);
    out << "\n";
}

nlohmann::json partition_json(const C5Partition& part) {
    nlohmann::json j;
    j["cycle"] = part.cycle;
    j["s0"] = set_json(part.s0);
    j["s5"] = set_json(part.s5);
    for (const char* name : {"s2", "s3", "s4"}) j[name] = nlohmann::json::array();
    for (int i = 1; i <= 5; ++i) {
        j["s2"].push_back(set_json(part.s2_at(i)));
        j["s3"].push_back(set_json(part.s3_at(i)));
        j["s4"].push_back(set_json(part.s4_at(i)));
    }
    j["excluded"] = nlohmann::json::array();
    for (const auto& [mask, verts] : part.excluded_nonempty)
        j["excluded"].push_back({{"mask", int(mask)}, {"vertices", set_json(verts)}});
    return j;
}

int run_selftest();

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for vertex-critical graph structure over graph6 streams"};
    app.require_subcommand(1);

    // ---- check -------------------------------------------------------------
    auto* cmd_check = app.add_subcommand("check", "pattern-freeness per input graph");
    std::string check_free;
    bool check_witness = false, check_strict = false;
    cmd_check->add_option("--free", check_free, "comma-separated pattern list, e.g. P5,bull")
        ->required();
    cmd_check->add_flag("--witness", check_witness, "print the embedding found");
    cmd_check->add_flag("--strict", check_strict, "exit 1 if any graph is not free");

    // ---- chi ---------------------------------------------------------------
    auto* cmd_chi = app.add_subcommand("chi", "chromatic number per input graph");

    // ---- color -------------------------------------------------------------
    auto* cmd_color = app.add_subcommand("color", "find a proper k-coloring per input graph");
    int color_k = 0;
    cmd_color->add_option("-k", color_k, "number of colors")->required();

    // ---- critical ----------------------------------------------------------
    auto* cmd_crit = app.add_subcommand("critical", "criticality verdict per input graph");
    int crit_k = 0;
    bool crit_edges = false, crit_strict = false;
    cmd_crit->add_option("-k", crit_k, "target chromatic number")->required();
    cmd_crit->add_flag("--edges", crit_edges, "also require edge deletions to drop chi");
    cmd_crit->add_flag("--strict", crit_strict, "exit 1 on any false verdict");

    // ---- decompose ----------------------------------------------------------
    auto* cmd_dec = app.add_subcommand("decompose", "partition around an induced C5");
    bool dec_all = false, dec_json = false;
    cmd_dec->add_flag("--all-c5", dec_all, "report every induced C5, not just the first");
    cmd_dec->add_flag("--json", dec_json, "JSON lines output");

    // ---- verify-claims -------------------------------------------------------
    auto* cmd_claims = app.add_subcommand("verify-claims", "run the claim registry");
    bool cl_assume_critical = false, cl_assume_free = false, cl_verify_no_f = false;
    bool cl_all_c5 = false, cl_json = false, cl_strict = false;
    std::string cl_claim;
    cmd_claims->add_flag("--assume-critical", cl_assume_critical,
                         "assume 5-vertex-criticality instead of verifying it");
    cmd_claims->add_flag("--assume-free", cl_assume_free,
                         "assume (P5,bull)-freeness instead of verifying it");
    cmd_claims->add_flag("--verify-no-f", cl_verify_no_f,
                         "verify the no-F-subgraph hypothesis (assumed by default)");
    cmd_claims->add_option("--claim", cl_claim, "run a single claim id");
    cmd_claims->add_flag("--all-c5", cl_all_c5, "check every induced C5");
    cmd_claims->add_flag("--json", cl_json, "JSON lines output (pinned schema)");
    cmd_claims->add_flag("--strict", cl_strict, "exit 1 on any Violated report");

    // ---- catalog -------------------------------------------------------------
    auto* cmd_cat = app.add_subcommand("catalog", "emit named fixture graphs as graph6");
    std::string cat_name;
    bool cat_names = false, cat_verify = false;
    cmd_cat->add_option("name", cat_name, "entry name (K5, F1..F9, bull, C5, W5)");
    cmd_cat->add_flag("--names", cat_names, "precede each record with a '# name' comment");
    cmd_cat->add_flag("--verify", cat_verify, "run catalog self-verification instead");

    // ---- enumerate ------------------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "k-vertex-critical pattern-free graphs");
    int enum_k = 4, enum_max_n = 12;
    std::string enum_free, enum_mod, enum_out;
    bool enum_verbose = false, enum_no_prune_pat = false, enum_no_prune_col = false;
    cmd_enum->add_option("-k", enum_k, "target chromatic number")->required();
    cmd_enum->add_option("--free", enum_free, "forbidden pattern list");
    cmd_enum->add_option("--max-n", enum_max_n, "largest order to reach");
    cmd_enum->add_option("--mod", enum_mod, "work split r/m: branch residue r of modulus m");
    cmd_enum->add_option("--out", enum_out, "write graph6 records to a file instead of stdout");
    cmd_enum->add_flag("--verbose", enum_verbose, "progress per finished branch on stderr");
    cmd_enum->add_flag("--no-prune-patterns", enum_no_prune_pat, "disable the pattern prune");
    cmd_enum->add_flag("--no-prune-color", enum_no_prune_col, "disable the colorability prune");

    // ---- selftest ---------------------------------------------------------------
    app.add_subcommand("selftest", "run the built-in oracle cross-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_check->parsed()) {
            auto patterns = parse_pattern_list(check_free);
            std::vector<Graph> built;
            for (const auto& p : patterns) built.push_back(build_pattern(p));
            return stream_graphs(std::cin, [&](const Graph& g, int) {
                for (size_t i = 0; i < built.size(); ++i) {
                    if (auto emb = contains_induced(g, built[i])) {
                        std::cout << "false";
                        if (check_witness)
                            std::cout << " " << patterns[i].to_string() << " "
                                      << join_ints(emb->map);
                        std::cout << "\n";
                        return !check_strict;
                    }
                }
                std::cout << "true\n";
                return true;
            });
        }

        if (cmd_chi->parsed()) {
            return stream_graphs(std::cin, [&](const Graph& g, int) {
                std::cout << chromatic_number(g) << "\n";
                return true;
            });
        }

        if (cmd_color->parsed()) {
            return stream_graphs(std::cin, [&](const Graph& g, int) {
                if (auto col = is_k_colorable(g, color_k))
                    std::cout << join_ints(col->colors, " ") << "\n";
                else
                    std::cout << "none\n";
                return true;
            });
        }

        if (cmd_crit->parsed()) {
            return stream_graphs(std::cin, [&](const Graph& g, int) {
                bool ok = crit_edges ? is_k_critical(g, crit_k) : is_k_vertex_critical(g, crit_k);
                std::cout << (ok ? "true" : "false") << "\n";
                return ok || !crit_strict;
            });
        }

        if (cmd_dec->parsed()) {
            return stream_graphs(std::cin, [&](const Graph& g, int) {
                auto cycles = dec_all ? all_induced_c5(g) : std::vector<std::array<int, 5>>{};
                if (!dec_all)
                    if (auto c = find_induced_c5(g)) cycles.push_back(*c);
                if (dec_json) {
                    nlohmann::json j;
                    j["graph"] = to_graph6(g);
                    j["partitions"] = nlohmann::json::array();
                    for (const auto& c : cycles)
                        j["partitions"].push_back(partition_json(partition_around_c5(g, c)));
                    std::cout << j.dump() << "\n";
                } else if (cycles.empty()) {
                    std::cout << "no-c5\n";
                } else {
                    for (const auto& c : cycles) print_partition_text(std::cout, partition_around_c5(g, c));
                }
                return true;
            });
        }

        if (cmd_claims->parsed()) {
            ClaimAssumptions assume;
            if (cl_assume_critical) assume.critical = ClaimAssumptions::Mode::Assume;
            if (cl_assume_free) assume.free = ClaimAssumptions::Mode::Assume;
            if (cl_verify_no_f) assume.no_f = ClaimAssumptions::Mode::Verify;
            int graph_index = 0;
            return stream_graphs(std::cin, [&](const Graph& g, int) {
                ++graph_index;
                auto cycles = cl_all_c5 ? all_induced_c5(g) : std::vector<std::array<int, 5>>{};
                if (!cl_all_c5)
                    if (auto c = find_induced_c5(g)) cycles.push_back(*c);
                bool clean = true;
                if (cycles.empty() && !cl_json) std::cout << "no-c5\n";
                for (const auto& cyc : cycles) {
                    C5Partition part = partition_around_c5(g, cyc);
                    std::vector<ClaimReport> reports;
                    if (cl_claim.empty())
                        reports = check_all_claims(g, part, assume);
                    else
                        reports.push_back(check_claim(g, part, cl_claim, assume));
                    for (const auto& r : reports)
                        if (r.status == ClaimStatus::Violated) clean = false;
                    if (cl_json) {
                        std::cout << reports_to_json(g, cyc, reports) << "\n";
                    } else {
                        std::cout << "# graph " << graph_index << " " << to_graph6(g)
                                  << " cycle " << join_ints({cyc.begin(), cyc.end()}) << "\n";
                        for (const auto& r : reports) {
                            std::cout << r.id << " " << to_string(r.status);
                            if (!r.witness.empty()) std::cout << " witness=" << join_ints(r.witness);
                            if (!r.reason.empty()) std::cout << " reason=\"" << r.reason << "\"";
                            std::cout << "\n";
                        }
                    }
                }
                return clean || !cl_strict;
            });
        }

        if (cmd_cat->parsed()) {
            if (cat_verify) {
                auto rep = verify_catalog();
                for (const auto& e : rep.entries)
                    std::cout << e.name << " order=" << (e.order_ok ? "ok" : "MISMATCH")
                              << " critical=" << (e.criticality_ok ? "ok" : "MISMATCH")
                              << " c5=" << (e.induced_c5_ok ? "ok" : "MISMATCH") << "\n";
                return rep.all_ok ? 0 : kExitViolation;
            }
            for (const auto& e : catalog_entries()) {
                if (!cat_name.empty() && e.name != cat_name) continue;
                if (cat_names) std::cout << "# " << e.name << "\n";
                std::cout << to_graph6(e.graph) << "\n";
            }
            if (!cat_name.empty()) {
                bool known = false;
                for (const auto& e : catalog_entries()) known = known || e.name == cat_name;
                if (!known) {
                    std::cerr << "unknown catalog name: " << cat_name << "\n";
                    return kExitUsage;
                }
            }
            return 0;
        }

        if (cmd_enum->parsed()) {
            EnumSpec spec;
            spec.k = enum_k;
            spec.n_max = enum_max_n;
            if (!enum_free.empty()) spec.forbidden = parse_pattern_list(enum_free);
            if (!enum_mod.empty()) {
                auto slash = enum_mod.find('/');
                if (slash == std::string::npos) {
                    std::cerr << "--mod expects r/m\n";
                    return kExitUsage;
                }
                spec.shard_residue = std::stoi(enum_mod.substr(0, slash));
                spec.shard_modulus = std::stoi(enum_mod.substr(slash + 1));
            }
            spec.prune.forbidden_patterns = !enum_no_prune_pat;
            spec.prune.colorability = !enum_no_prune_col;
            spec.threads = env_threads();

            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!enum_out.empty()) {
                file.open(enum_out);
                if (!file) {
                    std::cerr << "cannot open " << enum_out << "\n";
                    return kExitUsage;
                }
                out = &file;
            }
            std::signal(SIGINT, on_sigint);
            EnumCallbacks cb;
            cb.emit = [&](const std::string& rec) { *out << rec << "\n"; };
            if (enum_verbose)
                cb.progress = [](int done, int total, long long nodes) {
                    std::cerr << "branch " << done << "/" << total << " nodes=" << nodes << "\n";
                };
            EnumResult res = enumerate_critical(spec, cb, &g_cancel);
            std::cerr << "found " << res.graphs.size() << " graphs";
            for (const auto& [order, cnt] : res.counts_per_order)
                std::cerr << " n" << order << ":" << cnt;
            std::cerr << " nodes=" << res.nodes_explored << " time=" << res.wall_seconds
                      << "s" << (res.complete ? "" : " INCOMPLETE") << "\n";
            return res.complete ? 0 : kExitViolation;
        }

        return run_selftest();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

namespace {

int run_selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    check(to_graph6(build_pattern(PatternName::complete(5))) == "D~{", "graph6 encodes K5 as D~{");
    check(from_graph6("@").order() == 1, "graph6 decodes @ as K1");
    check(are_isomorphic(from_graph6("Dhc"), build_pattern(PatternName::cycle(5))),
          "graph6 decodes Dhc as C5");

    // isomorphism-class counts per order, from the augmentation generator
    const long want[] = {1, 2, 4, 11, 34, 156};
    bool counts_ok = true;
    for (int n = 1; n <= 6; ++n)
        counts_ok = counts_ok && enumerate_all_graphs(n, nullptr) == want[n - 1];
    check(counts_ok, "class counts for orders 1..6 are 1,2,4,11,34,156");

    // the same counts again via canonical keys over all labeled graphs
    bool labeled_ok = true;
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::string> keys;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (1ULL << pairs); ++bits) {
            Graph g(n);
            int b = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++b)
                    if ((bits >> b) & 1) g.add_edge(i, j);
            keys.push_back(canonical_form(g).bytes);
        }
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        labeled_ok = labeled_ok && static_cast<long>(keys.size()) == want[n - 1];
    }
    check(labeled_ok, "distinct canonical keys over labeled graphs match for n <= 5");

    // coloring against the naive reference on every class of order <= 5
    bool chi_ok = true;
    for (int n = 1; n <= 5; ++n)
        enumerate_all_graphs(n, [&](const Graph& g) {
            if (chromatic_number(g) != naive_chromatic_number(g)) chi_ok = false;
        });
    check(chi_ok, "chromatic number matches the naive reference for n <= 5");

    bool perfect_ok = true;
    for (int n = 1; n <= 5; ++n)
        enumerate_all_graphs(n, [&](const Graph& g) {
            if (is_perfect(g) != naive_perfect(g)) perfect_ok = false;
        });
    check(perfect_ok, "perfectness matches the chi=omega reference for n <= 5");

    check(verify_catalog().all_ok, "catalog entries verify (orders, criticality, C5)");

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : kExitViolation;
}

} // namespace
