// gbond: exact domination and bondage numbers of small graphs, with an
// exhaustive verifier for the (n-3)-regular family.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbond/bondage.hpp"
#include "gbond/domination.hpp"
#include "gbond/generators.hpp"
#include "gbond/graph6.hpp"
#include "gbond/report.hpp"

namespace {

using gbond::Graph;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GraphInput {
    std::string graph6;
    std::string edge_list_path;
    std::string family;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph6", graph6, "graph6 string (reads stdin lines when omitted)");
        cmd->add_option("--edge-list", edge_list_path, "edge list file: first line \"n m\", then m lines \"u v\"");
        cmd->add_option("--family", family, "named family spec, e.g. \"complete 5\" or \"n-minus-3-regular 6\"");
    }

    std::vector<Graph> load() const {
        const int sources = !graph6.empty() + !edge_list_path.empty() + !family.empty();
        if (sources > 1)
            throw std::invalid_argument("give at most one of: graph6 argument, --edge-list, --family");
        if (!graph6.empty())
            return {gbond::from_graph6(graph6)};
        if (!edge_list_path.empty()) {
            std::ifstream in(edge_list_path);
            if (!in)
                throw std::invalid_argument("cannot open edge list file: " + edge_list_path);
            return {gbond::read_edge_list(in)};
        }
        if (!family.empty())
            return gbond::graphs_from_family_spec(family);
        // pipe mode: one graph6 string per stdin line
        std::vector<Graph> graphs;
        std::string line;
        while (std::getline(std::cin, line)) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            graphs.push_back(gbond::from_graph6(line));
        }
        if (graphs.empty())
            throw std::invalid_argument("no input graph (argument, --edge-list, --family or stdin)");
        return graphs;
    }
};

int cmd_gamma(const GraphInput& input) {
    for (const Graph& g : input.load()) {
        const auto cert = gbond::domination_number(g);
        ordered_json out;
        out["n"] = g.order();
        out["m"] = g.edge_count();
        out["gamma"] = cert.gamma;
        out["witness"] = cert.witness.to_vector();
        std::cout << out.dump() << "\n";
    }
    return kExitPass;
}

int cmd_bondage(const GraphInput& input) {
    for (const Graph& g : input.load()) {
        const auto cert = gbond::bondage_number(g);
        ordered_json out;
        out["n"] = g.order();
        out["m"] = g.edge_count();
        out["gamma_before"] = cert.gamma_before;
        out["b"] = cert.b;
        out["witness"] = ordered_json::array();
        for (const gbond::Edge& e : cert.witness)
            out["witness"].push_back({e.u, e.v});
        out["gamma_after"] = cert.gamma_after;
        std::cout << out.dump() << "\n";
    }
    return kExitPass;
}

int cmd_verify(int n_min, int n_max, const std::string& format, int jobs, bool allow_slow) {
    if (n_max > 10 && !allow_slow)
        throw std::invalid_argument("--n-max above 10 is opt-in: pass --allow-slow "
                                    "(n=11 rules out edge subsets of size up to 7 among 44 edges)");
    const auto report = gbond::verify_theorem(n_min, n_max, jobs);
    if (format == "json")
        std::cout << gbond::to_json(report) << "\n";
    else
        std::cout << gbond::to_table(report);
    return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_known_values(const std::string& format) {
    const auto report = gbond::known_values();
    if (format == "json")
        std::cout << gbond::to_json(report) << "\n";
    else
        std::cout << gbond::to_table(report);
    return report.all_pass() ? kExitPass : kExitFail;
}

int cmd_generate(const std::vector<std::string>& words) {
    std::string spec;
    for (const std::string& w : words) {
        if (!spec.empty())
            spec += ' ';
        spec += w;
    }
    for (const Graph& g : gbond::graphs_from_family_spec(spec))
        std::cout << gbond::to_graph6(g) << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination and bondage numbers of small graphs"};
    app.require_subcommand(1);

    GraphInput gamma_input;
    auto* gamma_cmd = app.add_subcommand("gamma", "domination number with witness, as JSON");
    gamma_input.attach(gamma_cmd);

    GraphInput bondage_input;
    auto* bondage_cmd = app.add_subcommand("bondage", "bondage number with witness edge set, as JSON");
    bondage_input.attach(bondage_cmd);

    int n_min = 4, n_max = 10, jobs = 1;
    bool allow_slow = false;
    std::string verify_format = "table";
    auto* verify_cmd = app.add_subcommand(
        "verify-theorem", "check gamma=2 and b=n-3 on every (n-3)-regular graph in an order range");
    verify_cmd->add_option("--n-min", n_min, "smallest order (>= 4)")->capture_default_str();
    verify_cmd->add_option("--n-max", n_max, "largest order")->capture_default_str();
    verify_cmd->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "solver worker threads")->capture_default_str();
    verify_cmd->add_flag("--allow-slow", allow_slow, "permit --n-max above 10");

    std::string kv_format = "table";
    auto* kv_cmd = app.add_subcommand("known-values",
                                      "regression table: b(K_n)=ceil(n/2), b(K_{2x t})=2t-1");
    kv_cmd->add_option("--format", kv_format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();

    std::vector<std::string> family_words;
    auto* gen_cmd = app.add_subcommand("generate", "emit a graph family as graph6 lines");
    gen_cmd->add_option("family", family_words,
                        "family and parameters: complete N | cycle N | path N | cocktail-party T | "
                        "disjoint-cycles P1 P2 ... | n-minus-3-regular N")
        ->required()
        ->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (gamma_cmd->parsed())
            return cmd_gamma(gamma_input);
        if (bondage_cmd->parsed())
            return cmd_bondage(bondage_input);
        if (verify_cmd->parsed())
            return cmd_verify(n_min, n_max, verify_format, jobs, allow_slow);
        if (kv_cmd->parsed())
            return cmd_known_values(kv_format);
        if (gen_cmd->parsed())
            return cmd_generate(family_words);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
