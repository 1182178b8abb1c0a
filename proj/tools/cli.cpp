#include "cli.hpp"

#include "trc/bounds.hpp"
#include "trc/coalition.hpp"
#include "trc/domination.hpp"
#include "trc/families.hpp"
#include "trc/graph_io.hpp"
#include "trc/harness.hpp"
#include "trc/metrics.hpp"
#include "trc/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace trc::cli {

namespace {
    using json = nlohmann::ordered_json;

    constexpr int compute_default_max_n = 12;
    constexpr int compute_hard_max_n = 16;

    struct ComputeConfig {
        std::string family;
        std::string graph6;
        std::string edges;
        std::string mode = "search";
        std::string format = "json";
        int max_n = compute_default_max_n;
        bool witness = true;
    };

    struct VerifyConfig {
        std::string suite = "all";
        std::optional<int> max_n;
        std::string format = "json";
        bool timings = false;
    };

    // Thrown to leave a command with a specific exit status.
    struct Exit {
        int status;
        std::string message;
    };

    auto partition_json(const Partition & p) -> json
    {
        auto blocks = json::array();
        for (const auto & b : p.blocks())
            blocks.push_back(b.members());
        return blocks;
    }

    auto optional_json(const std::optional<int> & v) -> json
    {
        return v ? json(*v) : json(nullptr);
    }

    auto compute_record(const Graph & g, const ComputeConfig & config) -> std::pair<json, bool>
    {
        const auto m = metrics(g);
        const bool isolate_free = m.min_degree >= 1;
        const auto mode = config.mode == "oracle" ? SolveMode::oracle : SolveMode::search;
        const auto solved = c_tr_exact(g, mode);
        const auto bounds = bounds_report(g, solved);

        json r;
        r["n"] = g.order();
        r["m"] = g.edge_count();
        r["delta"] = m.min_degree;
        r["Delta"] = m.max_degree;
        r["girth"] = optional_json(m.girth);
        r["diameter"] = optional_json(m.diameter);
        if (isolate_free) {
            r["gamma_tr"] = gamma(g, DominationKind::total_restrained).value;
            r["d_t"] = domatic(g, DominationKind::total).value;
            r["d_tr"] = domatic(g, DominationKind::total_restrained).value;
        }
        else
            r["gamma_tr"] = r["d_t"] = r["d_tr"] = nullptr;
        r["c_tr"] = solved.value;
        if (config.witness)
            r["witness"] = solved.witness ? partition_json(*solved.witness) : json(nullptr);
        r["exhaustive"] = solved.exhaustive;

        auto entries = json::array();
        for (const auto & e : bounds.entries)
            entries.push_back({{"id", e.id}, {"hypothesis", e.hypothesis}, {"applicable", e.applicable},
                    {"comparison", to_string(e.comparison)}, {"bound", e.bound}, {"bound_upper", e.bound_upper},
                    {"observed", e.observed}, {"pass", e.pass}, {"tight", e.tight}});
        r["bounds"] = std::move(entries);

        if (config.mode == "bounds")
            r["constructive"] = isolate_free ? partition_json(constructive_lower_bound(g)) : json(nullptr);
        return {std::move(r), bounds.all_pass()};
    }

    auto cmd_compute(const ComputeConfig & config, std::istream & in, std::ostream & out) -> int
    {
        int sources = ! config.family.empty() + ! config.graph6.empty() + ! config.edges.empty();
        if (sources != 1)
            throw Exit{exit_input_error, "compute needs exactly one of --family, --graph6, --edges"};
        if (config.format != "json")
            throw Exit{exit_input_error, "compute emits json only"};
        if (config.max_n < 1 || config.max_n > compute_hard_max_n)
            throw Exit{exit_resource_cap, "--max-n must be in [1, " + std::to_string(compute_hard_max_n) + "]"};

        bool all_pass = true;
        auto emit = [&](const Graph & g) {
            if (g.order() > config.max_n)
                throw Exit{exit_resource_cap, "graph order " + std::to_string(g.order()) + " exceeds --max-n " + std::to_string(config.max_n)};
            auto [record, pass] = compute_record(g, config);
            all_pass = all_pass && pass;
            out << record.dump() << '\n' << std::flush;
        };

        if (! config.family.empty()) {
            try {
                emit(family_from_dsl(config.family));
            }
            catch (const GraphError & e) {
                throw Exit{exit_input_error, e.what()};
            }
        }
        else if (! config.edges.empty()) {
            std::ifstream file(config.edges);
            if (! file)
                throw Exit{exit_input_error, "cannot open " + config.edges};
            try {
                emit(parse_edge_list(file));
            }
            catch (const ParseError & e) {
                throw Exit{exit_input_error, config.edges + ":" + std::to_string(e.position()) + ": " + e.what()};
            }
        }
        else {
            std::ifstream file;
            if (config.graph6 != "-") {
                file.open(config.graph6);
                if (! file)
                    throw Exit{exit_input_error, "cannot open " + config.graph6};
            }
            std::istream & source = config.graph6 == "-" ? in : file;
            std::string line;
            std::size_t line_no = 0;
            while (std::getline(source, line)) {
                ++line_no;
                if (line.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                try {
                    emit(parse_graph6(line));
                }
                catch (const ParseError & e) {
                    throw Exit{exit_input_error, "line " + std::to_string(line_no) + ", byte " + std::to_string(e.position()) + ": " + e.what()};
                }
            }
        }
        return all_pass ? exit_ok : exit_claim_failure;
    }

    auto cmd_verify(const VerifyConfig & config, std::ostream & out) -> int
    {
        const auto & names = suite_names();
        if (std::ranges::find(names, config.suite) == names.end())
            throw Exit{exit_input_error, "unknown suite \"" + config.suite + "\""};
        ReportFormat format;
        try {
            format = parse_report_format(config.format);
        }
        catch (const std::invalid_argument & e) {
            throw Exit{exit_input_error, e.what()};
        }
        const int limit = suite_max_order(config.suite);
        const int max_n = config.max_n.value_or(limit);
        if (max_n > limit)
            throw Exit{exit_resource_cap, "suite " + config.suite + " supports --max-n <= " + std::to_string(limit)};

        auto results = run_suite(config.suite, max_n);
        const bool ok = summarise(results).ok();
        out << emit_report(std::move(results), format, {config.timings}) << std::flush;
        return ok ? exit_ok : exit_claim_failure;
    }

    auto cmd_family(const std::vector<std::string> & specs, std::ostream & out) -> int
    {
        for (const auto & spec : specs) {
            try {
                out << encode_graph6(family_from_dsl(spec)) << '\n';
            }
            catch (const GraphError & e) {
                throw Exit{exit_input_error, e.what()};
            }
        }
        return exit_ok;
    }
}

auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Exact total restrained domination and coalition numbers of small graphs", "trc"};
    app.require_subcommand(1);

    ComputeConfig compute;
    auto * compute_cmd = app.add_subcommand("compute", "Solve graphs and print one JSON record per graph");
    compute_cmd->add_option("--family", compute.family, "Family DSL, e.g. cycle:5, kbip:3,4, figure1");
    compute_cmd->add_option("--graph6", compute.graph6, "graph6 file, one graph per line ('-' for stdin)");
    compute_cmd->add_option("--edges", compute.edges, "Edge-list file: \"n m\" then m lines \"u v\"");
    compute_cmd->add_option("--mode", compute.mode, "search, oracle or bounds")->check(CLI::IsMember({"search", "oracle", "bounds"}));
    compute_cmd->add_option("--format", compute.format, "Output format (json)");
    compute_cmd->add_option("--max-n", compute.max_n, "Largest accepted graph order");
    compute_cmd->add_flag("--witness,!--no-witness", compute.witness, "Include the witness partition");

    VerifyConfig verify;
    auto * verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a report");
    verify_cmd->add_option("--suite", verify.suite, "paths, cycles, complete, gamma, trees, catalog, named, bounds or all");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest graph order to check");
    verify_cmd->add_option("--format", verify.format, "json, csv or markdown");
    verify_cmd->add_flag("--timings", verify.timings, "Report measured runtimes instead of 0");

    std::vector<std::string> family_specs;
    auto * family_cmd = app.add_subcommand("family", "Print graph6 lines for family members");
    family_cmd->add_option("specs", family_specs, "Family DSL strings")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int status = app.exit(e, out, err);
        return status == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (compute_cmd->parsed())
            return cmd_compute(compute, in, out);
        if (verify_cmd->parsed())
            return cmd_verify(verify, out);
        return cmd_family(family_specs, out);
    }
    catch (const Exit & e) {
        err << "trc: " << e.message << '\n';
        return e.status;
    }
}

} // namespace trc::cli
