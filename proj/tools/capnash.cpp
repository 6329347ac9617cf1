#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "capnash/construct.hpp"
#include "capnash/decide.hpp"
#include "capnash/enumerate.hpp"
#include "capnash/gadgets.hpp"
#include "capnash/io.hpp"

using nlohmann::json;
using namespace capnash;

namespace {

constexpr int kExitAnswered = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBudget = 2;

json nash_to_json(const NashSubgraph& h) {
    json j;
    j["d_set"] = h.d_set;
    j["p_set"] = h.p_set;
    json edges = json::array();
    for (const auto& [u, v] : h.edges) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

json verdict_to_json(const UniquenessVerdict& v) {
    json j;
    j["unique"] = v.unique;
    j["method"] = v.method;
    if (v.witness_subgraph) j["witness_subgraph"] = nash_to_json(*v.witness_subgraph);
    if (v.witness_dset) j["witness_dset"] = *v.witness_dset;
    return j;
}

json report_to_json(const DSetReport& rep) {
    json j;
    j["dsets"] = rep.dsets;
    j["count"] = rep.dsets.size();
    j["complete"] = rep.complete;
    j["explored"] = rep.explored;
    return j;
}

std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        ids.push_back(std::stoi(item));
    }
    return ids;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

struct Reporter {
    json report;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    explicit Reporter(const std::string& command) { report["command"] = command; }

    int finish(int code, const std::string& summary) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        std::cout << report.dump(2) << '\n';
        std::cerr << summary << '\n';
        return code;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DP-Nash subgraphs and D-sets in capacitated graphs"};
    app.require_subcommand(1);

    std::string graph_path, cnf_path, out_path, set_arg, method = "auto";
    int gadget_kappa = 2;
    int budget = -1;
    int jobs = 1;
    unsigned long long limit = 0;
    bool pruned = false;
    double timeout_s = 60.0;

    auto* cmd_normalize = app.add_subcommand("normalize", "normalize a graph");
    cmd_normalize->add_option("graph", graph_path)->required();
    cmd_normalize->add_option("-o,--output", out_path, "write the normalized graph here");

    auto* cmd_partition = app.add_subcommand("partition", "X/Y/Z partition of the normalized graph");
    cmd_partition->add_option("graph", graph_path)->required();

    auto* cmd_construct = app.add_subcommand("construct", "construct a DP-Nash subgraph");
    cmd_construct->add_option("graph", graph_path)->required();

    auto* cmd_unash = app.add_subcommand("unique-nash", "decide DP-Nash-subgraph uniqueness");
    cmd_unash->add_option("graph", graph_path)->required();

    auto* cmd_udset = app.add_subcommand("unique-dset", "decide D-set uniqueness");
    cmd_udset->add_option("graph", graph_path)->required();
    cmd_udset->add_option("--method", method)->check(CLI::IsMember({"auto", "ostar", "mstar", "enumerate"}));
    cmd_udset->add_option("--budget", budget, "cap for the chosen method");

    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate all D-sets");
    cmd_enum->add_option("graph", graph_path)->required();
    cmd_enum->add_option("--limit", limit, "report only the first L D-sets");
    cmd_enum->add_flag("--pruned", pruned, "use the backtracking enumerator");
    cmd_enum->add_option("--timeout", timeout_s, "wall-clock budget for --pruned (seconds)");
    cmd_enum->add_option("--jobs", jobs, "worker threads for the exhaustive scan");
    cmd_enum->add_option("--budget", budget, "vertex cap for the exhaustive scan");

    auto* cmd_isdset = app.add_subcommand("is-dset", "test one vertex set");
    cmd_isdset->add_option("graph", graph_path)->required();
    cmd_isdset->add_option("--set", set_arg, "comma-separated vertex ids (empty for the empty set)");

    auto* cmd_gadget = app.add_subcommand("gadget", "build a SAT-reduction graph");
    cmd_gadget->add_option("--k", gadget_kappa, "uniform capacity of the gadget")->required();
    cmd_gadget->add_option("--cnf", cnf_path)->required();
    cmd_gadget->add_option("-o,--output", out_path)->required();

    auto* cmd_verify = app.add_subcommand("verify-reduction", "build and check a reduction end to end");
    cmd_verify->add_option("--k", gadget_kappa)->required();
    cmd_verify->add_option("--cnf", cnf_path)->required();
    cmd_verify->add_option("--timeout", timeout_s, "budget for the pruned uniqueness attempt");

    CLI11_PARSE(app, argc, argv);

    Reporter rep(app.get_subcommands().front()->get_name());
    try {
        if (*cmd_normalize) {
            rep.report["input"] = graph_path;
            CapacitatedGraph gn = normalize(read_graph_file(graph_path));
            std::string text = write_graph_text(gn);
            rep.report["result"] = {{"graph", text},
                                    {"vertices", gn.vertex_count()},
                                    {"edges", gn.edge_count()}};
            if (!out_path.empty()) {
                write_file(out_path, text);
                rep.report["output"] = out_path;
            }
            return rep.finish(kExitAnswered, "normalize: " + std::to_string(gn.vertex_count()) +
                                                 " vertices, " + std::to_string(gn.edge_count()) +
                                                 " edges");
        }
        if (*cmd_partition) {
            rep.report["input"] = graph_path;
            CapacitatedGraph gn = normalize(read_graph_file(graph_path));
            XYZPartition part = partition_xyz(gn);
            rep.report["result"] = {{"x_set", part.x_set},
                                    {"y_set", part.y_set},
                                    {"z_set", part.z_set},
                                    {"normalized", true}};
            return rep.finish(kExitAnswered,
                              "partition: |X|=" + std::to_string(part.x_set.size()) +
                                  " |Y|=" + std::to_string(part.y_set.size()) +
                                  " |Z|=" + std::to_string(part.z_set.size()));
        }
        if (*cmd_construct) {
            rep.report["input"] = graph_path;
            CapacitatedGraph g = read_graph_file(graph_path);
            NashSubgraph h = construct_nash(g);
            rep.report["result"] = {{"nash", nash_to_json(h)}, {"valid", validate_nash(g, h)}};
            return rep.finish(kExitAnswered,
                              "construct: |D|=" + std::to_string(h.d_set.size()) +
                                  " |P|=" + std::to_string(h.p_set.size()));
        }
        if (*cmd_unash) {
            rep.report["input"] = graph_path;
            UniquenessVerdict v = unique_nash(read_graph_file(graph_path));
            rep.report["result"] = verdict_to_json(v);
            return rep.finish(kExitAnswered, std::string("unique-nash: ") +
                                                 (v.unique ? "unique" : "not unique") + " (" +
                                                 v.method + ")");
        }
        if (*cmd_udset) {
            rep.report["input"] = graph_path;
            CapacitatedGraph g = read_graph_file(graph_path);
            DecideBudget db;
            if (budget >= 0) {
                db.ostar_cap = budget;
                db.enum_vertex_cap = budget;
            }
            rep.report["budgets"] = {{"ostar_cap", db.ostar_cap},
                                     {"enum_cap", db.enum_vertex_cap},
                                     {"method", method}};
            UniquenessVerdict v;
            if (method == "auto") {
                v = unique_dset(g, db);
            } else {
                CapacitatedGraph gn = normalize(g);
                XYZPartition part = partition_xyz(gn);
                std::vector<int> xz = part.x_set;
                xz.insert(xz.end(), part.z_set.begin(), part.z_set.end());
                bool indep = is_independent(gn, xz);
                v.method = method;
                if (method == "ostar")
                    v.unique = indep && check_ostar(gn, db.ostar_cap);
                else if (method == "mstar")
                    v.unique = indep && check_mstar(gn, db.ostar_cap);
                else {
                    DSetReport r = enumerate_dsets(gn, std::nullopt, db.enum_vertex_cap);
                    v.unique = r.dsets.size() == 1;
                }
            }
            rep.report["result"] = verdict_to_json(v);
            return rep.finish(kExitAnswered, std::string("unique-dset: ") +
                                                 (v.unique ? "unique" : "not unique") + " (" +
                                                 v.method + ")");
        }
        if (*cmd_enum) {
            rep.report["input"] = graph_path;
            CapacitatedGraph g = read_graph_file(graph_path);
            int cap = budget >= 0 ? budget : 24;
            rep.report["budgets"] = {{"enum_cap", cap}, {"timeout_s", timeout_s}, {"jobs", jobs}};
            DSetReport r;
            if (pruned)
                r = enumerate_dsets_pruned(g, timeout_s);
            else
                r = enumerate_dsets(g, limit > 0 ? std::optional(limit) : std::nullopt, cap, jobs);
            rep.report["result"] = report_to_json(r);
            bool timed_out = pruned && !r.complete;
            return rep.finish(timed_out ? kExitBudget : kExitAnswered,
                              "enumerate: " + std::to_string(r.dsets.size()) + " D-sets" +
                                  (r.complete ? "" : " (incomplete)"));
        }
        if (*cmd_isdset) {
            rep.report["input"] = graph_path;
            CapacitatedGraph g = read_graph_file(graph_path);
            std::vector<int> s = parse_id_list(set_arg);
            bool ok = is_dset(g, s);
            rep.report["result"] = {{"is_dset", ok}, {"set", s}};
            return rep.finish(kExitAnswered, std::string("is-dset: ") + (ok ? "yes" : "no"));
        }
        if (*cmd_gadget) {
            rep.report["input"] = cnf_path;
            CnfFormula f = read_dimacs_file(cnf_path);
            GadgetArtifact art = gadget_kappa == 2 ? gadget_k2(f) : gadget_k(f, gadget_kappa);
            write_file(out_path, write_graph_text(art.graph));
            write_file(out_path + ".map", write_mapping_text(art));
            json regions = json::object();
            for (const auto& label : art.region) regions[label] = regions.value(label, 0) + 1;
            rep.report["result"] = {{"k", art.k},
                                    {"vertices", art.graph.vertex_count()},
                                    {"edges", art.graph.edge_count()},
                                    {"variables", art.padded_formula.variable_count},
                                    {"clauses", art.padded_formula.clauses.size()},
                                    {"region_counts", regions}};
            rep.report["output"] = out_path;
            rep.report["mapping"] = out_path + ".map";
            return rep.finish(kExitAnswered,
                              "gadget: " + std::to_string(art.graph.vertex_count()) + " vertices -> " +
                                  out_path);
        }
        if (*cmd_verify) {
            rep.report["input"] = cnf_path;
            rep.report["budgets"] = {{"timeout_s", timeout_s}};
            CnfFormula f = read_dimacs_file(cnf_path);
            GadgetArtifact art = gadget_kappa == 2 ? gadget_k2(f) : gadget_k(f, gadget_kappa);
            json result;
            result["k"] = art.k;
            result["vertices"] = art.graph.vertex_count();

            auto canonical = canonical_nash(art.graph);
            result["canonical_valid"] = canonical && validate_nash(art.graph, *canonical);

            SatResult sat = art.k == 2 ? sat_oracle_exists(art.padded_formula)
                                       : sat_oracle_threshold(art.padded_formula, art.k);
            result["satisfiable"] = sat.satisfiable;
            if (sat.satisfiable) {
                NashSubgraph witness = assignment_witness(art, sat.assignment);
                result["witness_valid"] = validate_nash(art.graph, witness);
                result["witness_dset_differs"] = !canonical || witness.d_set != canonical->d_set;
                result["witness"] = nash_to_json(witness);
            }

            DSetReport r = enumerate_dsets_pruned(art.graph, timeout_s);
            result["pruned"] = {{"complete", r.complete}, {"explored", r.explored}};
            if (r.complete) {
                result["pruned"]["count"] = r.dsets.size();
                result["pruned"]["unique_dset"] = r.dsets.size() == 1;
            }
            rep.report["result"] = result;
            std::string summary = std::string("verify-reduction: ") +
                                  (sat.satisfiable ? "satisfiable" : "unsatisfiable") +
                                  (r.complete ? ", pruned enumeration finished" : ", pruned enumeration timed out");
            return rep.finish(kExitAnswered, summary);
        }
    } catch (const BudgetExceeded& e) {
        rep.report["error"] = {{"kind", "budget-exceeded"}, {"detail", e.what()}};
        return rep.finish(kExitBudget, std::string("budget exceeded: ") + e.what());
    } catch (const std::exception& e) {
        rep.report["error"] = {{"kind", "input"}, {"detail", e.what()}};
        return rep.finish(kExitInputError, std::string("error: ") + e.what());
    }
    return kExitInputError;
}
