#include "imb/cli.hpp"

#include "imb/dp.hpp"
#include "imb/errors.hpp"
#include "imb/graph.hpp"
#include "imb/ilp.hpp"
#include "imb/io.hpp"
#include "imb/layout.hpp"
#include "imb/oracle.hpp"
#include "imb/succinct.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

namespace imb {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> ids;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        std::istringstream tok(cur);
        std::string piece;
        while (tok >> piece)
            ids.push_back(static_cast<int>(std::stoll(piece)));
    }
    return ids;
}

std::vector<BigInt> parse_big_list(const std::string& s) {
    std::vector<BigInt> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        std::istringstream tok(cur);
        std::string piece;
        while (tok >> piece)
            out.emplace_back(piece);
    }
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return in;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

// decision = YES iff a target is present and imbalance <= target.
std::string decide(const BigInt& value, const std::optional<BigInt>& target) {
    if (!target)
        return "n/a";
    return value <= *target ? "YES" : "NO";
}

int exit_code_for(const std::string& decision) {
    return decision == "NO" ? 1 : 0;
}

struct Report {
    BigInt imbalance;
    std::string mode;
    std::string decision = "n/a";
    std::optional<Layout> layout;
    std::optional<CleanPlacement> placement;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> sides;
    long long time_ms = 0;
    std::optional<std::uint64_t> explored;
    std::string explored_name = "states";

    void print(bool as_json) const {
        if (as_json) {
            json j;
            j["imbalance"] = imbalance.str();
            j["mode"] = mode;
            j["decision"] = decision;
            json w = json::object();
            if (layout)
                w["layout"] = layout->order;
            if (placement) {
                w["pi"] = placement->cover_order;
                w["loc"] = placement->locations;
            }
            if (sides) {
                w["left"] = sides->first;
                w["right"] = sides->second;
            }
            j["witness"] = w;
            j["stats"]["time_ms"] = time_ms;
            if (explored)
                j["stats"][explored_name] = *explored;
            std::cout << j.dump() << "\n";
            return;
        }
        std::cout << "imbalance=" << imbalance.str() << "\n";
        std::cout << "mode=" << mode << "\n";
        std::cout << "decision=" << decision << "\n";
        if (placement) {
            std::cout << "witness_pi=" << join_ints(placement->cover_order) << "\n";
            std::cout << "witness_loc=" << join_ints(placement->locations) << "\n";
        }
        if (layout)
            std::cout << "witness_layout=" << join_ints(layout->order) << "\n";
        if (sides) {
            std::cout << "witness_left=" << join_ints(sides->first) << "\n";
            std::cout << "witness_right=" << join_ints(sides->second) << "\n";
        }
        if (explored)
            std::cout << explored_name << "=" << *explored << "\n";
        std::cout << "time_ms=" << time_ms << "\n";
    }
};

struct SolveFlags {
    std::string graph_file;
    std::string cover;
    bool cover_given = false;
    std::string mode = "auto";
    std::optional<long long> target;
    bool as_json = false;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    std::uint64_t state_budget = 10000000ULL;
    int max_blocks = 10;
    std::string dump_model_file;
};

int run_explicit_solve(const Decomposition& d, const SolveFlags& f,
                       Report& report) {
    std::string mode = f.mode;
    if (mode == "auto") {
        if (d.k() + d.r() <= 10)
            mode = "oracle";
        else if (d.max_clique_size <= d.k() + 2)
            mode = "ilp";
        else
            mode = "dp";
    }
    report.mode = mode;

    auto start = Clock::now();
    CleanPlacement placement;
    long long value = 0;
    if (mode == "oracle") {
        auto res = brute_force_clean(d, f.max_blocks);
        value = res.imbalance;
        placement = res.witness;
        report.explored = res.sequences_evaluated;
        report.explored_name = "sequences";
    } else if (mode == "dp") {
        XpOptions opt;
        opt.state_budget = f.state_budget;
        opt.threads = f.threads;
        opt.target = f.target;
        auto res = solve_xp(d, opt);
        value = res.imbalance;
        placement = res.witness;
        report.explored = res.states_explored;
        report.explored_name = "states";
    } else if (mode == "ilp") {
        FptOptions opt;
        opt.threads = f.threads;
        auto res = solve_fpt(d, opt);
        value = res.imbalance;
        placement = res.witness;
        report.explored = res.nodes_expanded;
        report.explored_name = "nodes";
        if (!f.dump_model_file.empty()) {
            std::ofstream out(f.dump_model_file);
            if (!out)
                throw ParseError("cannot write '" + f.dump_model_file + "'");
            dump_model(res.best_model, out);
        }
    } else {
        throw ParseError("unknown mode '" + mode + "'");
    }
    report.time_ms = elapsed_ms(start);
    report.imbalance = value;
    report.placement = placement;
    report.layout = build_layout_from_placement(d, placement);
    std::optional<BigInt> target;
    if (f.target)
        target = *f.target;
    report.decision = decide(report.imbalance, target);
    report.print(f.as_json);
    return exit_code_for(report.decision);
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact imbalance solvers for graphs given with a twin cover"};
    app.require_subcommand(1);

    // solve
    SolveFlags sf;
    auto* solve = app.add_subcommand("solve", "solve an explicit graph instance");
    solve->add_option("--graph", sf.graph_file, "explicit graph file")->required();
    auto* cover_opt = solve->add_option("--cover", sf.cover,
                                        "comma-separated cover ids (may be empty)");
    solve->add_option("--mode", sf.mode, "auto|oracle|dp|ilp")
        ->check(CLI::IsMember({"auto", "oracle", "dp", "ilp"}));
    long long solve_target = 0;
    auto* solve_target_opt =
        solve->add_option("--target", solve_target, "decision target");
    solve->add_flag("--json", sf.as_json, "JSON output");
    solve->add_option("--threads", sf.threads, "solver threads");
    solve->add_option("--state-budget", sf.state_budget, "DP state cap");
    solve->add_option("--max-blocks", sf.max_blocks, "oracle block limit");
    solve->add_option("--dump-model", sf.dump_model_file,
                      "write the optimal ILP model to a file");

    // solve-succinct
    std::string ss_input;
    std::string ss_target;
    std::uint64_t ss_budget = 100000000ULL;
    bool ss_json = false;
    int ss_threads = static_cast<int>(std::thread::hardware_concurrency());
    auto* ssolve =
        app.add_subcommand("solve-succinct", "solve a succinct instance");
    ssolve->add_option("--input", ss_input, "succinct instance file")->required();
    auto* ss_target_opt =
        ssolve->add_option("--target", ss_target, "decision target (unbounded)");
    ssolve->add_option("--budget", ss_budget, "subset-sum budget");
    ssolve->add_flag("--json", ss_json, "JSON output");
    ssolve->add_option("--threads", ss_threads, "solver threads");

    // verify
    std::string v_input, v_cert, v_target;
    bool v_json = false;
    auto* verify = app.add_subcommand(
        "verify", "evaluate a clean-layout certificate without expansion");
    verify->add_option("--input", v_input, "succinct instance file")->required();
    verify->add_option("--certificate", v_cert, "certificate file")->required();
    auto* v_target_opt =
        verify->add_option("--target", v_target, "decision target (unbounded)");
    verify->add_flag("--json", v_json, "JSON output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    std::string gp_numbers, gp_output;
    bool gp_json = false;
    auto* gen_partition = gen->add_subcommand(
        "partition", "number-partition instance with its decision target");
    gen_partition->add_option("--numbers", gp_numbers, "comma-separated positive integers")
        ->required();
    gen_partition->add_option("--output", gp_output, "output file (default stdout)");
    gen_partition->add_flag("--json", gp_json, "JSON output");
    int gr_n = 0, gr_k = 0, gr_maxc = 3;
    std::uint64_t gr_seed = 1;
    std::string gr_output;
    auto* gen_random_cmd =
        gen->add_subcommand("random", "random instance with a planted cover");
    gen_random_cmd->add_option("--n", gr_n, "total vertex count")->required();
    gen_random_cmd->add_option("--k", gr_k, "cover size")->required();
    gen_random_cmd->add_option("--max-clique", gr_maxc, "largest clique size");
    gen_random_cmd->add_option("--seed", gr_seed, "RNG seed");
    gen_random_cmd->add_option("--output", gr_output, "output file (default stdout)");

    // convert
    std::string c_input, c_output, c_cover;
    bool c_cover_given = false;
    auto* convert = app.add_subcommand(
        "convert", "explicit+cover -> succinct, or succinct -> explicit");
    convert->add_option("--input", c_input, "instance file")->required();
    convert->add_option("--output", c_output, "output file (default stdout)");
    auto* c_cover_opt = convert->add_option(
        "--cover", c_cover, "cover ids for an explicit input without a cover line");

    // bound
    std::string b_input;
    bool b_json = false;
    std::string b_cover;
    auto* bound = app.add_subcommand("bound", "print lower bounds");
    bound->add_option("--input", b_input, "instance file")->required();
    bound->add_option("--cover", b_cover, "cover ids for explicit input");
    bound->add_flag("--json", b_json, "JSON output");

    try {
        std::vector<const char*> argv;
        argv.push_back("imbalance");
        for (const auto& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        sf.cover_given = cover_opt->count() > 0;
        if (solve_target_opt->count() > 0)
            sf.target = solve_target;
        if (sf.threads < 1)
            sf.threads = 1;
        if (ss_threads < 1)
            ss_threads = 1;

        if (app.got_subcommand(solve)) {
            auto in = open_input(sf.graph_file);
            GraphFile gf = parse_graph(in);
            TwinCover cover;
            if (sf.cover_given)
                cover = TwinCover(parse_id_list(sf.cover));
            else if (gf.cover)
                cover = *gf.cover;
            else
                throw ParseError("no cover given (use --cover or a cover line)");
            Decomposition d = validate_twin_cover(gf.graph, cover);
            Report report;
            return run_explicit_solve(d, sf, report);
        }

        if (app.got_subcommand(ssolve)) {
            auto in = open_input(ss_input);
            SuccinctGraph sg = parse_succinct(in);
            std::optional<BigInt> target;
            if (ss_target_opt->count() > 0)
                target = BigInt(ss_target);
            if (sg.k == 1) {
                Report report;
                auto start = Clock::now();
                K1Result res = solve_k1(sg, ss_budget);
                report.time_ms = elapsed_ms(start);
                report.imbalance = res.imbalance;
                report.mode = "k1";
                report.sides = {res.left, res.right};
                Certificate cert = res.certificate();
                report.placement =
                    CleanPlacement{cert.cover_order, cert.locations};
                report.decision = decide(report.imbalance, target);
                report.print(ss_json);
                return exit_code_for(report.decision);
            }
            // No general succinct solver beyond k = 1: expand and go explicit.
            auto [g, cover] = expand_succinct(sg);
            Decomposition d = validate_twin_cover(g, cover);
            SolveFlags routed;
            routed.as_json = ss_json;
            routed.threads = ss_threads;
            if (target) {
                if (*target > std::numeric_limits<long long>::max())
                    routed.target = std::numeric_limits<long long>::max();
                else
                    routed.target = target->convert_to<long long>();
            }
            Report report;
            return run_explicit_solve(d, routed, report);
        }

        if (app.got_subcommand(verify)) {
            auto in = open_input(v_input);
            SuccinctGraph sg = parse_succinct(in);
            auto cin_ = open_input(v_cert);
            Certificate cert = parse_certificate(cin_);
            std::optional<BigInt> target;
            if (v_target_opt->count() > 0)
                target = BigInt(v_target);
            auto start = Clock::now();
            BigInt value = verify_certificate(sg, cert);
            Report report;
            report.time_ms = elapsed_ms(start);
            report.imbalance = value;
            report.mode = "verify";
            report.placement = CleanPlacement{cert.cover_order, cert.locations};
            report.decision = decide(value, target);
            report.print(v_json);
            return exit_code_for(report.decision);
        }

        if (app.got_subcommand(gen)) {
            if (gen->got_subcommand(gen_partition)) {
                auto numbers = parse_big_list(gp_numbers);
                auto [sg, t] = reduce_partition(numbers);
                if (!gp_output.empty()) {
                    std::ofstream out(gp_output);
                    if (!out)
                        throw ParseError("cannot write '" + gp_output + "'");
                    write_succinct(sg, out);
                } else {
                    write_succinct(sg, std::cout);
                }
                if (gp_json) {
                    json j;
                    j["t"] = t.str();
                    if (!gp_output.empty())
                        j["output"] = gp_output;
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "t=" << t.str() << "\n";
                }
                return 0;
            }
            GraphFile gf = gen_random(gr_n, gr_k, gr_maxc, gr_seed);
            if (!gr_output.empty()) {
                std::ofstream out(gr_output);
                if (!out)
                    throw ParseError("cannot write '" + gr_output + "'");
                write_graph(gf.graph, gf.cover, out);
            } else {
                write_graph(gf.graph, gf.cover, std::cout);
            }
            return 0;
        }

        if (app.got_subcommand(convert)) {
            auto in = open_input(c_input);
            std::string kind = sniff_format(in);
            std::ostringstream buffer;
            if (kind == "graph") {
                GraphFile gf = parse_graph(in);
                c_cover_given = c_cover_opt->count() > 0;
                TwinCover cover;
                if (c_cover_given)
                    cover = TwinCover(parse_id_list(c_cover));
                else if (gf.cover)
                    cover = *gf.cover;
                else
                    throw ParseError("no cover given (use --cover or a cover line)");
                SuccinctGraph sg = compress_to_succinct(gf.graph, cover);
                write_succinct(sg, buffer);
            } else {
                SuccinctGraph sg = parse_succinct(in);
                auto [g, cover] = expand_succinct(sg);
                write_graph(g, cover, buffer);
            }
            if (!c_output.empty()) {
                std::ofstream out(c_output);
                if (!out)
                    throw ParseError("cannot write '" + c_output + "'");
                out << buffer.str();
            } else {
                std::cout << buffer.str();
            }
            return 0;
        }

        if (app.got_subcommand(bound)) {
            auto in = open_input(b_input);
            std::string kind = sniff_format(in);
            SuccinctGraph sg;
            if (kind == "graph") {
                GraphFile gf = parse_graph(in);
                TwinCover cover;
                if (!b_cover.empty())
                    cover = TwinCover(parse_id_list(b_cover));
                else if (gf.cover)
                    cover = *gf.cover;
                else
                    throw ParseError("no cover given (use --cover or a cover line)");
                sg = compress_to_succinct(gf.graph, cover);
            } else {
                sg = parse_succinct(in);
            }
            BigInt i = iota(sg);
            std::optional<BigInt> strengthened;
            if (sg.k == 1)
                strengthened = lower_bound(sg);
            if (b_json) {
                json j;
                j["iota"] = i.str();
                if (strengthened)
                    j["parity_bound"] = strengthened->str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "iota=" << i.str() << "\n";
                if (strengthened)
                    std::cout << "parity_bound=" << strengthened->str() << "\n";
            }
            return 0;
        }

        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace imb
