#include "permforest/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "permforest/bijections.hpp"
#include "permforest/census.hpp"
#include "permforest/classify.hpp"
#include "permforest/decompose.hpp"
#include "permforest/graph.hpp"
#include "permforest/series.hpp"
#include "permforest/sorting.hpp"
#include "permforest/verify.hpp"

namespace permforest {

namespace {

using ordered_json = nlohmann::ordered_json;

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return fallback;
    }
}

std::string flag_str(bool b) {
    return b ? "true" : "false";
}

std::string positions_str(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

ordered_json occurrence_json(const std::optional<PatternOccurrence>& occ) {
    if (!occ) return nullptr;
    return ordered_json{(*occ)[0], (*occ)[1], (*occ)[2], (*occ)[3]};
}

ordered_json positions_json(const std::optional<std::vector<int>>& v) {
    if (!v) return nullptr;
    return ordered_json(*v);
}

// Series coefficients can outgrow every native integer type, so the JSON
// arrays are emitted directly from the exact integers.
std::string mpz_array_json(const std::vector<mpz_class>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += v[i].get_str();
    }
    return s + "]";
}

std::string bivar_array_json(const std::vector<std::vector<mpz_class>>& rows) {
    std::string s = "[";
    for (size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() > k + 1)
            throw std::logic_error("catalytic degree exceeds the x power");
        if (k) s += ',';
        s += '[';
        for (size_t l = 0; l <= k; ++l) {
            if (l) s += ',';
            s += l < rows[k].size() ? rows[k][l].get_str() : "0";
        }
        s += ']';
    }
    return s + "]";
}

int cmd_classify(const std::string& perm_text, bool as_json, std::ostream& out) {
    const Permutation p = parse_permutation(perm_text);
    const ClassReport r = classify(p);

    if (as_json) {
        ordered_json j;
        j["perm"] = p.values();
        j["n"] = r.n;
        j["e"] = r.edges;
        j["m"] = r.rl_minima_count;
        j["a"] = r.ascent;
        j["flags"] = ordered_json{{"forest_like", r.forest_like},
                                  {"tree_like", r.tree_like},
                                  {"rooted_tree_like", r.rooted_tree_like},
                                  {"path_like", r.path_like},
                                  {"smooth", r.smooth},
                                  {"plane", r.plane},
                                  {"increasing", r.increasing}};
        j["witnesses"] = ordered_json{{"pattern_1324", occurrence_json(r.occurrence_1324)},
                                      {"pattern_2143", occurrence_json(r.occurrence_2143)},
                                      {"pattern_21bar354", occurrence_json(r.occurrence_21bar354)},
                                      {"cycle", positions_json(r.cycle)},
                                      {"non_tree_component", positions_json(r.non_tree_component)}};
        out << j.dump() << "\n";
        return 0;
    }

    out << "permutation: " << to_string(p) << "\n";
    out << "n = " << r.n << ", e = " << r.edges << ", m = " << r.rl_minima_count
        << ", a = " << r.ascent << "\n";
    out << "forest_like: " << flag_str(r.forest_like);
    if (r.cycle) out << "  (cycle: " << positions_str(*r.cycle) << ")";
    out << "\n";
    out << "tree_like: " << flag_str(r.tree_like);
    if (r.non_tree_component)
        out << "  (separate component: " << positions_str(*r.non_tree_component) << ")";
    out << "\n";
    out << "rooted_tree_like: " << flag_str(r.rooted_tree_like) << "\n";
    out << "path_like: " << flag_str(r.path_like) << "\n";
    out << "smooth: " << flag_str(r.smooth) << "\n";
    out << "plane: " << flag_str(r.plane) << "\n";
    out << "increasing: " << flag_str(r.increasing) << "\n";
    auto occ_line = [&out](const char* name, const std::optional<PatternOccurrence>& occ) {
        out << "occurrence of " << name << ": ";
        if (occ)
            out << (*occ)[0] << ' ' << (*occ)[1] << ' ' << (*occ)[2] << ' ' << (*occ)[3];
        else
            out << "none";
        out << "\n";
    };
    occ_line("1324", r.occurrence_1324);
    occ_line("2143", r.occurrence_2143);
    occ_line("21bar354", r.occurrence_21bar354);
    return 0;
}

int cmd_bars(const std::string& perm_text, bool show_matrix, std::ostream& out) {
    const Permutation p = parse_permutation(perm_text);
    const BarDiagram d = build_bar_diagram(p);
    out << "permutation: " << to_string(p) << "\n";
    out << "n = " << d.n << ", e = " << d.bars.size() << "\n";
    out << "bars (dividers 1.." << d.n - 1 << "):\n";
    for (const Edge& bar : d.bars) {
        out << "  (" << bar.first << "," << bar.second << ")  ";
        for (int c = 1; c < d.n; ++c) out << (bar.first <= c && c < bar.second ? '=' : '.');
        out << "\n";
    }
    if (d.bars.empty()) out << "  none\n";

    if (show_matrix) {
        const IncidenceMatrix m = incidence_matrix(d);
        out << "incidence matrix (" << m.rows << " x " << m.cols << "):\n";
        for (const auto& row : m.entries) {
            out << " ";
            for (int x : row) out << ' ' << x;
            out << "\n";
        }
    }

    const SortTrace trace = sort_bars(d);
    out << "sort trace:\n";
    if (trace.moves.empty()) out << "  no bar can be moved\n";
    for (size_t i = 0; i < trace.moves.size(); ++i)
        out << "  move " << i + 1 << ": bar (" << trace.moves[i].first.first << ","
            << trace.moves[i].first.second << ") at divider " << trace.moves[i].second
            << "\n";
    out << "residual:";
    if (trace.residual.empty()) out << " none";
    for (const Edge& bar : trace.residual) out << " (" << bar.first << "," << bar.second << ")";
    out << "\n";
    out << "fully sortable: " << (trace.fully_sorted ? "yes" : "no") << "\n";
    return 0;
}

int cmd_decompose(const std::string& perm_text, std::ostream& out) {
    const Permutation p = parse_permutation(perm_text);
    const int n = p.size();
    if (!is_acyclic(build_graph(p)))
        throw std::invalid_argument("decompose: permutation is not forest-like");
    out << "permutation: " << to_string(p) << "\n";
    if (p(n) == 1) {
        out << "base case: 1 is in the last position\n";
        if (n >= 2) out << "reduced: " << to_string(drop_trailing_one(p)) << "\n";
        return 0;
    }
    const DecompTriple t = phi(p);
    out << "tau:   " << to_string(t.tau) << "\n";
    out << "sigma: " << to_string(t.sigma) << "\n";
    out << "k:     " << t.k << "\n";
    const StatisticsRecord rec = statistics_check(p, t);
    out << "m recurrence: m = " << rec.m_pi << ", expected " << rec.m_expected << " ("
        << (rec.m_consistent ? "ok" : "VIOLATION") << ")\n";
    if (rec.a_applicable)
        out << "a recurrence: a = " << rec.a_pi << ", expected " << rec.a_expected << " ("
            << (rec.a_consistent ? "ok" : "VIOLATION") << ")\n";
    else
        out << "a recurrence: not applicable (not smooth)\n";
    out << "transfers: tree " << (rec.tree_transfer ? "ok" : "VIOLATION") << ", rooted "
        << (rec.rooted_transfer ? "ok" : "VIOLATION") << ", path "
        << (rec.path_transfer ? "ok" : "VIOLATION") << ", smooth "
        << (rec.smooth_transfer ? "ok" : "VIOLATION") << "\n";
    return rec.ok() ? 0 : 2;
}

int cmd_bijection(const std::string& kind, const std::string& input, std::ostream& out) {
    if (kind == "plane-tree") {
        out << serialize(to_plane_tree(parse_permutation(input))) << "\n";
        return 0;
    }
    if (kind == "from-plane-tree") {
        out << to_string(from_plane_tree(parse_plane_tree(input))) << "\n";
        return 0;
    }
    if (kind == "ud-word") {
        out << to_ud_word(parse_permutation(input)).letters << "\n";
        return 0;
    }
    if (kind == "from-ud-word") {
        out << to_string(from_ud_word(UDWord{input})) << "\n";
        return 0;
    }
    throw CLI::ValidationError("bijection",
                               "kind must be one of plane-tree, from-plane-tree, "
                               "ud-word, from-ud-word");
}

int cmd_series(const std::string& cls_name, int order, bool bivariate,
               const std::string& method, std::ostream& out, std::ostream& err) {
    auto cls = parse_series_class(cls_name);
    if (!cls) {
        err << "unknown class: " << cls_name << "\n";
        return 64;
    }
    if (order < 1) {
        err << "--order must be at least 1\n";
        return 64;
    }
    const bool want_closed = method == "closed" || method == "both";
    const bool want_fixpoint = method == "fixpoint" || method == "both";

    if (!bivariate) {
        std::vector<mpz_class> closed, fixed;
        if (want_closed) closed = integer_coefficients(closed_form(*cls, order));
        if (want_fixpoint)
            fixed = integer_coefficients(at_u1(functional_equation_fixed_point(*cls, order)));
        if (want_closed && want_fixpoint && closed != fixed) {
            err << "closed form and fixed point disagree for " << cls_name << "\n";
            return 2;
        }
        const auto& result = want_closed ? closed : fixed;
        for (const mpz_class& c : result)
            if (c < 0) throw std::logic_error("negative coefficient in a counting series");
        out << mpz_array_json(result) << "\n";
        return 0;
    }

    if (*cls == SeriesClass::path) {
        err << "no bivariate refinement for the path class\n";
        return 64;
    }
    if (*cls == SeriesClass::rooted_by_ascent && want_closed) {
        err << "no closed bivariate form for rooted-by-ascent; use --method fixpoint\n";
        return 64;
    }
    std::vector<std::vector<mpz_class>> closed, fixed;
    if (want_closed) closed = integer_coefficients(bivariate_closed_form(*cls, order));
    if (want_fixpoint)
        fixed = integer_coefficients(functional_equation_fixed_point(*cls, order));
    if (want_closed && want_fixpoint) {
        auto padded = [](const std::vector<std::vector<mpz_class>>& rows) {
            std::vector<std::vector<mpz_class>> r = rows;
            for (size_t k = 0; k < r.size(); ++k) r[k].resize(k + 1);
            return r;
        };
        if (padded(closed) != padded(fixed)) {
            err << "closed form and fixed point disagree for " << cls_name << "\n";
            return 2;
        }
    }
    out << bivar_array_json(want_closed ? closed : fixed) << "\n";
    return 0;
}

int cmd_enumerate(int n, const std::string& cls_filter, const std::string& refine_by,
                  bool as_json, int workers, std::ostream& out, std::ostream& err) {
    const CensusRow row = run_census(n, workers);

    auto hist_json = [](const std::vector<std::uint64_t>& h) { return ordered_json(h); };

    if (as_json) {
        ordered_json j;
        j["n"] = row.n;
        j["total"] = row.total;
        j["counts"] = ordered_json{{"forest", row.forest}, {"tree", row.tree},
                                   {"rooted", row.rooted}, {"path", row.path},
                                   {"smooth", row.smooth}, {"plane", row.plane}};
        j["by_rl_minima"] = ordered_json{{"forest", hist_json(row.forest_by_m)},
                                         {"tree", hist_json(row.tree_by_m)},
                                         {"rooted", hist_json(row.rooted_by_m)}};
        j["by_final_ascent"] = ordered_json{{"smooth", hist_json(row.smooth_by_a)},
                                            {"rooted", hist_json(row.rooted_by_a)}};
        j["total_edges"] = row.total_edges;
        ordered_json bars = ordered_json::array();
        for (int i = 1; i <= n; ++i)
            for (int j2 = i + 1; j2 <= n; ++j2)
                bars.push_back(ordered_json{
                    i, j2, row.bar_count[static_cast<size_t>(i)][static_cast<size_t>(j2)]});
        j["bar_counts"] = bars;
        out << j.dump() << "\n";
        return 0;
    }

    struct Entry {
        const char* name;
        std::uint64_t count;
        const std::vector<std::uint64_t>* by_m;
        const std::vector<std::uint64_t>* by_a;
    };
    const Entry entries[] = {
        {"forest", row.forest, &row.forest_by_m, nullptr},
        {"tree", row.tree, &row.tree_by_m, nullptr},
        {"rooted", row.rooted, &row.rooted_by_m, &row.rooted_by_a},
        {"path", row.path, nullptr, nullptr},
        {"smooth", row.smooth, nullptr, &row.smooth_by_a},
        {"plane", row.plane, nullptr, nullptr},
    };
    if (!cls_filter.empty()) {
        bool known = false;
        for (const Entry& e : entries) known = known || cls_filter == e.name;
        if (!known) {
            err << "unknown class: " << cls_filter << "\n";
            return 64;
        }
    }

    out << "n = " << n << " (" << row.total << " permutations)\n";
    auto hist_line = [&out](const char* cls, const char* stat,
                            const std::vector<std::uint64_t>& h) {
        out << cls << " by " << stat << ":";
        for (size_t l = 1; l < h.size(); ++l) out << ' ' << h[l];
        out << "\n";
    };
    for (const Entry& e : entries) {
        if (!cls_filter.empty() && cls_filter != e.name) continue;
        out << e.name << ": " << e.count << "\n";
        if (refine_by == "rl-minima" && e.by_m) hist_line(e.name, "rl-minima", *e.by_m);
        if (refine_by == "final-ascent" && e.by_a)
            hist_line(e.name, "final-ascent", *e.by_a);
    }
    if (cls_filter.empty()) out << "total edges: " << row.total_edges << "\n";
    return 0;
}

int cmd_realize(const std::string& path, int n, std::ostream& out) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open edge-list file: " + path);
    PermGraph target;
    target.n = n;
    int a, b;
    while (in >> a >> b) {
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw std::invalid_argument("invalid edge in file: " + std::to_string(a) + " " +
                                        std::to_string(b));
        target.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (!in.eof())
        throw std::invalid_argument("malformed edge-list file: " + path);
    std::sort(target.edges.begin(), target.edges.end());
    if (std::adjacent_find(target.edges.begin(), target.edges.end()) != target.edges.end())
        throw std::invalid_argument("duplicate edge in file: " + path);

    const auto witness = realizability_scan(n, target);
    if (witness)
        out << "realizable: " << to_string(*witness) << "\n";
    else
        out << "not realizable\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorics of permutation graphs, bar diagrams and "
                 "forest-like classes"};
    app.name("permforest");
    app.require_subcommand(1);
    app.footer(
        "Permutations are written in one-line notation, either separated\n"
        "(\"6 4 3 7 5 1 8 2\", commas allowed) or as a compact digit string for\n"
        "n <= 9 (\"64375182\"). Plane trees serialize to balanced parentheses,\n"
        "children left to right, one \"(...)\" per child subtree and nothing for\n"
        "the root itself. Environment: PERMFOREST_ORDER overrides the default\n"
        "series order (30), PERMFOREST_WORKERS the default worker count.\n"
        "Exit codes: 0 success, 1 domain error, 2 verification failure,\n"
        "64 usage error.");

    const int default_order = env_int("PERMFOREST_ORDER", 30);
    const int default_workers = env_int("PERMFOREST_WORKERS", 0);

    std::string perm_text;
    bool as_json = false;
    auto* c_classify = app.add_subcommand(
        "classify", "class flags, statistics and pattern witnesses of a permutation");
    c_classify->add_option("perm", perm_text, "permutation, e.g. \"2143\" or \"2 1 4 3\"")
        ->required();
    c_classify->add_flag("--json", as_json, "emit a JSON object");

    std::string bars_perm;
    bool show_matrix = false;
    auto* c_bars = app.add_subcommand("bars", "bar diagram, sorting trace and verdict");
    c_bars->add_option("perm", bars_perm, "permutation")->required();
    c_bars->add_flag("--matrix", show_matrix, "also print the incidence matrix");

    std::string dec_perm;
    auto* c_decompose =
        app.add_subcommand("decompose", "decomposition (tau, sigma, k) and recurrences");
    c_decompose->add_option("perm", dec_perm, "forest-like permutation")->required();

    std::string bij_kind, bij_input;
    auto* c_bijection = app.add_subcommand(
        "bijection", "plane-tree / UD-word encodings and their inverses");
    c_bijection
        ->add_option("kind", bij_kind,
                     "plane-tree | from-plane-tree | ud-word | from-ud-word")
        ->required();
    c_bijection
        ->add_option("input", bij_input,
                     "permutation, balanced parentheses, or UD word; pass \"\" for the "
                     "one-node tree")
        ->required();

    std::string series_class;
    int series_order = default_order;
    bool bivariate = false;
    std::string method = "both";
    auto* c_series =
        app.add_subcommand("series", "generating-function coefficients as a JSON array");
    c_series
        ->add_option("--class", series_class,
                     "forest | tree | rooted | path | smooth | rooted-by-ascent")
        ->required();
    c_series->add_option("--order", series_order, "truncation order (default 30)");
    c_series->add_flag("--bivariate", bivariate,
                       "coefficients refined by rl-minima (or final ascent)");
    c_series->add_option("--method", method, "closed | fixpoint | both (default both)")
        ->check(CLI::IsMember({"closed", "fixpoint", "both"}));

    int enum_n = 0;
    std::string enum_class, enum_by;
    bool enum_json = false;
    int workers = default_workers;
    auto* c_enumerate = app.add_subcommand("enumerate", "census of S_n by class");
    c_enumerate->add_option("--n", enum_n, "permutation size")->required();
    c_enumerate->add_option("--class", enum_class, "restrict text output to one class");
    c_enumerate->add_option("--by", enum_by, "refined table: rl-minima | final-ascent")
        ->check(CLI::IsMember({"rl-minima", "final-ascent"}));
    c_enumerate->add_flag("--json", enum_json, "emit a JSON object");
    c_enumerate->add_option("--workers", workers, "worker threads (default: all cores)");

    int verify_n = 0;
    int verify_workers = default_workers;
    auto* c_verify =
        app.add_subcommand("verify", "exhaustive cross-validation for sizes 1..N");
    c_verify->add_option("--n", verify_n, "largest permutation size")->required();
    c_verify->add_option("--workers", verify_workers, "worker threads");

    std::string graph_file;
    int realize_n = 0;
    auto* c_realize = app.add_subcommand(
        "realize", "search S_n for a permutation whose graph matches a target");
    c_realize
        ->add_option("--graph", graph_file, "edge-list file, one \"i j\" pair per line")
        ->required();
    c_realize->add_option("--n", realize_n, "vertex and permutation size")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.back()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 64;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(perm_text, as_json, out);
        if (c_bars->parsed()) return cmd_bars(bars_perm, show_matrix, out);
        if (c_decompose->parsed()) return cmd_decompose(dec_perm, out);
        if (c_bijection->parsed()) return cmd_bijection(bij_kind, bij_input, out);
        if (c_series->parsed())
            return cmd_series(series_class, series_order, bivariate, method, out, err);
        if (c_enumerate->parsed())
            return cmd_enumerate(enum_n, enum_class, enum_by, enum_json, workers, out, err);
        if (c_verify->parsed()) {
            if (verify_n < 1 || verify_n > kCensusLimit) {
                err << "--n must be between 1 and " << kCensusLimit << "\n";
                return 64;
            }
            return run_verification(verify_n, verify_workers, out) ? 0 : 2;
        }
        if (c_realize->parsed()) return cmd_realize(graph_file, realize_n, out);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 64;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 2;
    }
    err << "no command\n";
    return 64;
}

}  // namespace permforest
