#include "graceful/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graceful/construct.hpp"
#include "graceful/io.hpp"
#include "graceful/oracle.hpp"
#include "graceful/sweep.hpp"

namespace graceful::cli {

namespace {

using nlohmann::json;

// Tree arguments accept "-" (stdin), a file path, or inline JSON.
ParsedTree tree_arg(const std::string& arg) {
    const auto pos = arg.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && arg[pos] == '{') return io::read_tree(arg);
    return io::read_tree(io::slurp(arg));
}

void write_dot(const std::string& path, const Tree& t, const Labeling* f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open file '" + path + "'");
    os << io::to_dot(t, f);
}

json pairs_json(const std::vector<Edge>& pairs) {
    json a = json::array();
    for (auto [x, y] : pairs) a.push_back({x, y});
    return a;
}

AttachmentPlan plan_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw Error("invalid plan JSON: expected [[u,v,x],...]");
    AttachmentPlan p;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
            throw Error("invalid plan JSON: expected [[u,v,x],...]");
        p.at[make_edge(e[0].get<int>(), e[1].get<int>())] = e[2].get<int>();
    }
    return p;
}

json violations_json(const VerificationReport& rep) {
    json a = json::array();
    for (const auto& v : rep.violations) a.push_back({{"tag", v.tag}, {"detail", v.detail}});
    return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

}  // namespace

int run_streams(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graceful tree labelings: constructions, verification, search", "graceful"};
    app.require_subcommand(1);

    struct {
        std::string input = "-";
        std::string dot;
        std::string labels;
        std::string matching;
        std::string s_tree, t_tree, f_labels, g_labels, plan;
        int at = 0;
        int u = -1, v = -1;
        int start = -1;
        int miss = 0;
        std::string mode = "first";
        std::uint64_t budget = 0;
        int zero_at = 0;
        std::string strongly;
        bool parallel = false;
        bool up_to_complement = false;
        bool rotatable = false;
        std::string family;
        int n = 0;
        std::uint64_t seed = 0;
        bool serial = false;
        std::string only;
    } o;

    const auto add_input = [&](CLI::App* sc) {
        sc->add_option("input", o.input,
                       "tree: file path, '-' for standard input, or inline JSON");
    };
    const auto add_dot = [&](CLI::App* sc) {
        sc->add_option("--dot", o.dot, "also write DOT to this path");
    };

    auto* sc_classify = app.add_subcommand("classify", "report tree kind and path distance");
    add_input(sc_classify);

    auto* sc_apm = app.add_subcommand(
        "label-apm", "graceful labeling via the almost-perfect-matching pipeline");
    add_input(sc_apm);
    add_dot(sc_apm);

    auto* sc_pm = app.add_subcommand(
        "label-pm", "strongly graceful labeling via the perfect-matching pipeline");
    add_input(sc_pm);
    add_dot(sc_pm);

    auto* sc_rosa = app.add_subcommand("rosa", "caterpillar labeling with 0 at a path endpoint");
    add_input(sc_rosa);
    add_dot(sc_rosa);
    auto* opt_start =
        sc_rosa->add_option("--start", o.start, "start vertex (default: canonical endpoint)");

    const auto add_compose = [&](CLI::App* sc) {
        sc->add_option("--s", o.s_tree, "outer tree S")->required();
        sc->add_option("--f", o.f_labels, "graceful labeling of S, JSON")->required();
        sc->add_option("--t", o.t_tree, "inner tree T")->required();
        sc->add_option("--g", o.g_labels, "graceful labeling of T, JSON")->required();
        sc->add_option("--at", o.at, "attach every S-edge at this T-vertex (default 0)");
        sc->add_option("--plan", o.plan, "per-edge attachment JSON [[u,v,x],...]");
        add_dot(sc);
    };
    auto* sc_delta =
        app.add_subcommand("compose-delta", "replace each S-vertex by a copy of T");
    add_compose(sc_delta);
    auto* sc_delta1 = app.add_subcommand(
        "compose-delta1", "replace all S-vertices but one by copies of T");
    add_compose(sc_delta1);
    sc_delta1->add_option("--u", o.u, "exceptional S-vertex, must carry label n_S-1")
        ->required();
    sc_delta1->add_option("--v", o.v, "fixed T-vertex, must carry label 0")->required();

    auto* sc_verify = app.add_subcommand("verify", "check a labeling against a tree");
    add_input(sc_verify);
    sc_verify->add_option("--labels", o.labels, "labeling JSON")->required();
    auto* opt_vmatch = sc_verify->add_option(
        "--matching", o.matching, "perfect matching JSON; checks the strong property too");

    auto* sc_match = app.add_subcommand("match", "maximum matching, or one missing a vertex");
    add_input(sc_match);
    auto* opt_miss =
        sc_match->add_option("--miss", o.miss, "leave exactly this vertex uncovered");

    auto* sc_contract = app.add_subcommand("contract", "contract every matching edge");
    add_input(sc_contract);
    auto* opt_cmiss =
        sc_contract->add_option("--miss", o.miss, "leave exactly this vertex uncovered");

    auto* sc_oracle = app.add_subcommand("oracle", "backtracking search for labelings");
    add_input(sc_oracle);
    sc_oracle->add_option("--mode", o.mode, "first | all | count")
        ->check(CLI::IsMember({"first", "all", "count"}));
    auto* opt_budget =
        sc_oracle->add_option("--budget", o.budget, "cap on search nodes");
    auto* opt_zero = sc_oracle->add_option("--zero-at", o.zero_at,
                                           "require label 0 on this vertex");
    auto* opt_strong = sc_oracle->add_option(
        "--strongly", o.strongly, "require pair sums n-1 for this perfect matching, JSON");
    sc_oracle->add_flag("--parallel", o.parallel, "fan out count mode across label branches");
    sc_oracle->add_flag("--up-to-complement", o.up_to_complement,
                        "keep one labeling of each complementary pair");
    sc_oracle->add_flag("--rotatable", o.rotatable,
                        "decide whether every vertex can carry label 0");

    auto* sc_gen = app.add_subcommand("gen", "seeded random tree");
    sc_gen->add_option("--family", o.family,
                       "random_tree | caterpillar | lobster | lobster_apm | lobster_pm")
        ->required()
        ->check(CLI::IsMember(
            {"random_tree", "caterpillar", "lobster", "lobster_apm", "lobster_pm"}));
    sc_gen->add_option("--n", o.n, "order")->required();
    sc_gen->add_option("--seed", o.seed, "64-bit seed (default 0)");
    add_dot(sc_gen);

    auto* sc_enum = app.add_subcommand("enumerate", "all trees of an order, one JSON per line");
    sc_enum->add_option("--n", o.n, "order")->required();

    auto* sc_sweep = app.add_subcommand("sweep", "run the full property sweeps");
    sc_sweep->add_flag("--serial", o.serial, "disable parallel execution");
    sc_sweep->add_option("--only", o.only, "run a single sweep by name");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (sc_classify->parsed()) {
            const auto pt = tree_arg(o.input);
            const TreeClass c = classify(pt.tree);
            emit(out, json{{"kind", io::kind_name(c.kind)}, {"distance", c.distance}});
            return 0;
        }
        if (sc_apm->parsed()) {
            const auto pt = tree_arg(o.input);
            const auto r = label_lobster_apm(pt.tree);
            json j{{"status", "ok"},
                   {"labels", r.labels.values},
                   {"uncovered", r.u},
                   {"matching", pairs_json(r.matching.pairs)}};
            if (pt.remapped) j["original_ids"] = pt.original_ids;
            emit(out, j);
            if (!o.dot.empty()) write_dot(o.dot, pt.tree, &r.labels);
            return 0;
        }
        if (sc_pm->parsed()) {
            const auto pt = tree_arg(o.input);
            const auto r = label_tree_pm_strong(pt.tree);
            json j{{"status", "ok"},
                   {"labels", r.labels.values},
                   {"matching", pairs_json(r.matching.pairs)}};
            if (pt.remapped) j["original_ids"] = pt.original_ids;
            emit(out, j);
            if (!o.dot.empty()) write_dot(o.dot, pt.tree, &r.labels);
            return 0;
        }
        if (sc_rosa->parsed()) {
            const auto pt = tree_arg(o.input);
            const int start =
                opt_start->count() ? o.start : smallest_longest_path_endpoint(pt.tree);
            const Labeling f = rosa_caterpillar(pt.tree, start);
            emit(out, json{{"status", "ok"}, {"labels", f.values}, {"start", start}});
            if (!o.dot.empty()) write_dot(o.dot, pt.tree, &f);
            return 0;
        }
        if (sc_delta->parsed() || sc_delta1->parsed()) {
            CompositionInput in;
            in.S = tree_arg(o.s_tree).tree;
            in.T = tree_arg(o.t_tree).tree;
            in.f = io::labeling_from_json(o.f_labels);
            in.g = io::labeling_from_json(o.g_labels);
            CompositionResult r;
            if (sc_delta->parsed()) {
                in.bipT = bipartition(in.T);
                in.plan = o.plan.empty() ? constant_plan(in.S, o.at) : plan_from_json(o.plan);
                r = delta(in);
            } else {
                in.u = o.u;
                in.v = o.v;
                if (o.v < 0 || o.v >= in.T.order())
                    throw Error("fixed vertex " + std::to_string(o.v) + " out of range");
                in.bipT = bipartition_with_in_a(in.T, o.v);
                in.plan =
                    o.plan.empty() ? constant_plan(in.S, o.at, o.u) : plan_from_json(o.plan);
                r = delta_plus_one(in);
            }
            json j{{"status", "ok"},
                   {"n", r.tree.order()},
                   {"edges", pairs_json(r.tree.edges())},
                   {"labels", r.labels.values}};
            if (r.exceptional >= 0) j["exceptional"] = r.exceptional;
            emit(out, j);
            if (!o.dot.empty()) write_dot(o.dot, r.tree, &r.labels);
            return 0;
        }
        if (sc_verify->parsed()) {
            const auto pt = tree_arg(o.input);
            const Labeling f = io::labeling_from_json(o.labels);
            VerificationReport rep;
            if (opt_vmatch->count())
                rep = verify_strongly_graceful(pt.tree, f, io::matching_from_json(o.matching));
            else
                rep = verify_graceful(pt.tree, f);
            emit(out, json{{"status", rep.ok ? "ok" : "violation"},
                           {"violations", violations_json(rep)}});
            return rep.ok ? 0 : 1;
        }
        if (sc_match->parsed() || sc_contract->parsed()) {
            const bool contracting = sc_contract->parsed();
            const auto pt = tree_arg(o.input);
            const auto* miss_opt = contracting ? opt_cmiss : opt_miss;
            const Matching m =
                miss_opt->count() ? matching_missing(pt.tree, o.miss) : max_matching(pt.tree);
            if (!contracting) {
                emit(out, json{{"status", "ok"},
                               {"pairs", pairs_json(m.pairs)},
                               {"size", m.size()},
                               {"uncovered", uncovered(pt.tree, m)}});
                return 0;
            }
            const ContractionMap cm = contract(pt.tree, m);
            emit(out, json{{"status", "ok"},
                           {"contree", json::parse(io::tree_to_json(cm.contree))},
                           {"image", cm.image},
                           {"groups", cm.pair_of},
                           {"matching", pairs_json(m.pairs)}});
            return 0;
        }
        if (sc_oracle->parsed()) {
            const auto pt = tree_arg(o.input);
            const Tree& t = pt.tree;
            std::optional<std::uint64_t> budget;
            if (opt_budget->count()) budget = o.budget;
            if (o.rotatable) {
                const auto rr = is_zero_rotatable(t, budget);
                if (rr.status == SearchStatus::BudgetExhausted) {
                    err << "error: node budget exhausted\n";
                    emit(out, json{{"status", "budget_exhausted"}});
                    return 2;
                }
                json j{{"rotatable", rr.rotatable}};
                if (rr.rotatable) {
                    json w = json::array();
                    for (const auto& f : rr.witness) w.push_back(f->values);
                    j["witnesses"] = w;
                } else {
                    j["failing_vertex"] = *rr.failing_vertex;
                }
                emit(out, j);
                return 0;
            }
            SearchOptions so;
            so.mode = o.mode == "all"     ? SearchMode::All
                      : o.mode == "count" ? SearchMode::Count
                                          : SearchMode::First;
            if (opt_zero->count()) so.zero_at = o.zero_at;
            if (opt_strong->count()) so.strongly = io::matching_from_json(o.strongly);
            so.node_budget = budget;
            so.parallel = o.parallel;
            so.up_to_complement = o.up_to_complement;
            if (so.mode == SearchMode::All)
                so.sink = [&](const Labeling& f) { out << io::labeling_to_json(f) << "\n"; };
            const auto r = brute_force(t, so);
            if (r.status == SearchStatus::BudgetExhausted) {
                err << "error: node budget exhausted after " << r.nodes_visited << " nodes\n";
                emit(out, json{{"status", "budget_exhausted"},
                               {"count", r.count},
                               {"nodes_visited", r.nodes_visited}});
                return 2;
            }
            if (so.mode == SearchMode::Count) {
                emit(out, json{{"count", r.count}, {"nodes_visited", r.nodes_visited}});
                return 0;
            }
            if (so.mode == SearchMode::All) {
                err << "count=" << r.count << " nodes_visited=" << r.nodes_visited << "\n";
                return 0;
            }
            if (r.labelings.empty()) {
                emit(out, json{{"status", "none"}, {"nodes_visited", r.nodes_visited}});
                return 1;
            }
            out << io::labeling_to_json(r.labelings.front()) << "\n";
            return 0;
        }
        if (sc_gen->parsed()) {
            GeneratorSpec spec;
            spec.family = tree_family_from_string(o.family);
            spec.n = o.n;
            spec.seed = o.seed;
            const Tree t = generate(spec);
            out << io::tree_to_json(t) << "\n";
            if (!o.dot.empty()) write_dot(o.dot, t, nullptr);
            return 0;
        }
        if (sc_enum->parsed()) {
            for (const Tree& t : enumerate_trees(o.n)) out << io::tree_to_json(t) << "\n";
            return 0;
        }
        if (sc_sweep->parsed()) {
            using SweepFn = sweep::Outcome (*)(bool);
            const std::vector<std::pair<std::string, SweepFn>> table = {
                {"apm-pipeline", sweep::apm_pipeline},
                {"matching-missing", sweep::matching_missing_everywhere},
                {"rosa-caterpillars", sweep::rosa_all_caterpillars},
                {"composition-grid", sweep::composition_grid},
                {"pm-pipeline", sweep::pm_pipeline},
                {"oracle-consistency", sweep::oracle_consistency},
                {"enumeration-counts", sweep::enumeration_counts},
                {"round-trip", sweep::expansion_round_trip},
                {"complement", sweep::complement_property},
            };
            std::vector<sweep::Outcome> results;
            if (o.only.empty()) {
                results = sweep::run_all(!o.serial);
            } else {
                const auto it = std::find_if(table.begin(), table.end(),
                                             [&](const auto& e) { return e.first == o.only; });
                if (it == table.end()) {
                    std::string names;
                    for (const auto& e : table) names += " " + e.first;
                    throw Error("unknown sweep '" + o.only + "'; available:" + names);
                }
                results.push_back(it->second(!o.serial));
            }
            bool all_pass = true;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(20) << r.name
                    << " checked=" << std::setw(8) << r.checked << " skipped=" << std::setw(6)
                    << r.skipped << " " << std::fixed << std::setprecision(2) << std::setw(7)
                    << r.seconds << "s  " << r.detail << "\n";
            }
            return all_pass ? 0 : 1;
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_streams(std::move(args), std::cout, std::cerr);
}

}  // namespace graceful::cli
