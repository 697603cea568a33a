#include "oddcut/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oddcut/coloring.hpp"
#include "oddcut/decycle.hpp"
#include "oddcut/gen.hpp"
#include "oddcut/graph.hpp"
#include "oddcut/graph6.hpp"
#include "oddcut/indset.hpp"
#include "oddcut/predicates.hpp"
#include "oddcut/residuum.hpp"

namespace oddcut::cli {
namespace {

using json = nlohmann::ordered_json;

// first non-blank line of the named file, or of `in` when path is "-"
std::string read_graph_line(const std::string& path, std::istream& in) {
    auto first_line = [](std::istream& s) -> std::optional<std::string> {
        std::string line;
        while (std::getline(s, line)) {
            while (!line.empty() &&
                   (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
                line.pop_back();
            if (!line.empty()) return line;
        }
        return std::nullopt;
    };
    std::optional<std::string> line;
    if (path == "-") {
        line = first_line(in);
    } else {
        std::ifstream file(path);
        if (!file) raise(errc::invalid_argument, "cannot open " + path);
        line = first_line(file);
    }
    if (!line) raise(errc::malformed_graph6, "no graph6 line in " + path);
    return *line;
}

CubicGraph load_graph(const std::string& path, std::istream& in) {
    return parse_graph6(read_graph_line(path, in));
}

VertexSet parse_set(const std::string& text, int n) {
    if (text.find_first_not_of(" \t") == std::string::npos) return {};
    std::vector<int> items;
    std::istringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        auto b = token.find_first_not_of(" \t");
        auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos) raise(errc::invalid_argument, "--set: empty entry");
        int v = 0;
        auto [end, ec] = std::from_chars(token.data() + b, token.data() + e + 1, v);
        if (ec != std::errc() || end != token.data() + e + 1)
            raise(errc::invalid_argument, "--set: bad vertex '" + token + "'");
        items.push_back(v);
    }
    VertexSet s(std::move(items));
    validate_subset(s, n, "--set");
    return s;
}

constexpr std::array<SolveCase, 5> case_order = {SolveCase::deg3_absorb, SolveCase::end_swap,
                                                 SolveCase::trigger_swap,
                                                 SolveCase::harmless_break, SolveCase::cycle_absorb};

std::array<int, 5> case_counts(const SolveTrace& trace) {
    std::array<int, 5> counts{};
    for (const auto& rec : trace.iterations)
        for (std::size_t c = 0; c < case_order.size(); ++c)
            if (rec.case_taken == case_order[c]) ++counts[c];
    return counts;
}

// Postcondition check behind every printed verified:true. A failure here is
// a solver bug, not bad input, so it surfaces as exit code 3.
void recheck(const CubicGraph& g, int k, const Solution& s) {
    if (s.set.size() != k) throw std::logic_error("solve returned a set of the wrong size");
    if (!is_independent(g, s.set)) throw std::logic_error("solve returned a dependent set");
    if (!std::holds_alternative<Bipartition>(bipartition_of(g, complement(s.set, g.n()))))
        throw std::logic_error("solve left an odd cycle behind");
    if (!verify_coloring(g, s.coloring).ok() || s.coloring.class_of(0) != s.set)
        throw std::logic_error("solve returned a broken coloring");
}

std::string fixed6(double x) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(6) << x;
    return ss.str();
}

std::string rational_text(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

void cmd_solve(const std::string& in_path, int k, bool as_json, std::istream& in,
               std::ostream& out) {
    CubicGraph g = load_graph(in_path, in);
    Solution s = solve(g, k);
    recheck(g, k, s);
    auto counts = case_counts(s.trace);
    if (as_json) {
        json rep;
        rep["schema"] = 1;
        rep["n"] = g.n();
        rep["alpha"] = s.alpha;
        rep["k"] = k;
        rep["set"] = s.set.items();
        rep["coloring"] = s.coloring.assignment;
        rep["iterations"] = s.trace.rounds();
        json cases = json::object();
        for (std::size_t c = 0; c < case_order.size(); ++c)
            cases[solve_case_name(case_order[c])] = counts[c];
        rep["cases_taken"] = cases;
        rep["verified"] = true;
        out << rep.dump() << '\n';
        return;
    }
    out << "n " << g.n() << '\n';
    out << "alpha " << s.alpha << '\n';
    out << "k " << k << '\n';
    out << "set";
    for (int v : s.set) out << ' ' << v;
    out << '\n';
    out << "coloring";
    for (int c : s.coloring.assignment) out << ' ' << c;
    out << '\n';
    out << "iterations " << s.trace.rounds() << '\n';
    for (std::size_t c = 0; c < case_order.size(); ++c)
        if (counts[c] > 0)
            out << "case " << solve_case_name(case_order[c]) << ' ' << counts[c] << '\n';
    out << "verified true\n";
}

void cmd_color(const std::string& in_path, int k, std::istream& in, std::ostream& out) {
    CubicGraph g = load_graph(in_path, in);
    Solution s = solve(g, k);
    TriColoring c = semi_equitable(g, s.set);
    int n = g.n();
    std::array<int, 3> want{k, (n - k + 1) / 2, (n - k) / 2};
    if (!verify_coloring(g, c, want).ok() || c.class_of(0) != s.set)
        throw std::logic_error("semi-equitable coloring failed verification");
    out << json(c.assignment).dump() << '\n';
}

void cmd_alpha(const std::string& in_path, bool greedy, std::uint64_t seed, std::istream& in,
               std::ostream& out) {
    CubicGraph g = load_graph(in_path, in);
    VertexSet w = greedy ? greedy_mis(g, seed) : max_is(g);
    out << "alpha " << w.size() << '\n';
    out << "witness";
    for (int v : w) out << ' ' << v;
    out << '\n';
}

void cmd_gen(int n, std::uint64_t seed, int count, std::ostream& out) {
    std::ostringstream buf;
    for (int i = 0; i < count; ++i) {
        GenSpec spec;
        spec.n = n;
        spec.seed = seed + static_cast<std::uint64_t>(i);
        buf << to_graph6(random_cubic(spec)) << '\n';
    }
    out << buf.str();
}

void cmd_verify(const std::string& in_path, const std::string& set_text, bool with_free_sets,
                std::istream& in, std::ostream& out) {
    CubicGraph g = load_graph(in_path, in);
    VertexSet s = parse_set(set_text, g.n());
    bool indep = is_independent(g, s);
    auto split = bipartition_of(g, complement(s, g.n()));
    bool bip = std::holds_alternative<Bipartition>(split);
    json rep;
    rep["schema"] = 1;
    rep["n"] = g.n();
    rep["set"] = s.items();
    rep["independent"] = indep;
    rep["bipartite_complement"] = bip;
    if (!bip) rep["odd_cycle"] = std::get<OddCycleWitness>(split).vertices;
    if (with_free_sets && indep) {
        FreeClassification fc = free_sets(g, s);
        json f1 = json::array();
        for (const Diamond& d : fc.f1)
            f1.push_back(json{{"u", d.u}, {"w", d.w}, {"a", d.a}, {"b", d.b}});
        json f2 = json::array();
        for (const TypeTwoEntry& t : fc.f2)
            f2.push_back(json{{"u", t.diamond.u},
                              {"w", t.diamond.w},
                              {"a", t.diamond.a},
                              {"b", t.diamond.b},
                              {"c", t.c},
                              {"d", t.d},
                              {"x", t.x}});
        rep["free_sets"] = json{{"f0", fc.f0.items()}, {"f1", f1}, {"f2", f2}};
    }
    out << rep.dump() << '\n';
}

void cmd_stats(int n, int trials, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    std::ostringstream rows;
    rows << "trial,seed,alpha,threshold_met,k_min,k_max,attempts,solved,balance_failed,"
            "iterations_total,iterations_max\n";
    long long met = 0, attempts = 0, solved = 0, balance_failed = 0;
    std::map<int, long long> histogram;
    for (int t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
        GenSpec spec;
        spec.n = n;
        spec.seed = trial_seed;
        CubicGraph g = random_cubic(spec);
        int alpha = max_is(g).size();
        bool met_here = 10 * alpha >= 4 * n;
        int t_attempts = 0, t_solved = 0, t_balance = 0, t_total = 0, t_max = 0;
        std::string k_min_text, k_max_text;
        if (met_here) {
            ++met;
            int k_min = (n - alpha) / 2;
            int k_max = alpha;
            k_min_text = std::to_string(k_min);
            k_max_text = std::to_string(k_max);
            for (int k = k_min; k <= k_max; ++k) {
                ++t_attempts;
                try {
                    Solution sol = solve(g, k);
                    ++t_solved;
                    int rounds = sol.trace.rounds();
                    t_total += rounds;
                    t_max = std::max(t_max, rounds);
                    ++histogram[rounds];
                } catch (const error& e) {
                    // the one tolerated failure mode; anything else is a bug
                    if (e.code() != errc::balance_failed) throw;
                    ++t_balance;
                    err << "trial " << t << " seed " << trial_seed << " k " << k << ": "
                        << e.what() << '\n';
                }
            }
        }
        attempts += t_attempts;
        solved += t_solved;
        balance_failed += t_balance;
        rows << t << ',' << trial_seed << ',' << alpha << ',' << (met_here ? 1 : 0) << ','
             << k_min_text << ',' << k_max_text << ',' << t_attempts << ',' << t_solved << ','
             << t_balance << ',' << t_total << ',' << t_max << '\n';
    }
    rows << '\n';
    rows << "metric,value\n";
    rows << "trials," << trials << '\n';
    rows << "threshold_met," << met << '\n';
    rows << "threshold_fraction," << fixed6(static_cast<double>(met) / trials) << '\n';
    rows << "attempts," << attempts << '\n';
    rows << "solved," << solved << '\n';
    rows << "balance_failed," << balance_failed << '\n';
    rows << "success_rate,";
    if (attempts > 0) rows << fixed6(static_cast<double>(solved) / static_cast<double>(attempts));
    rows << '\n';
    rows << '\n';
    rows << "iterations,count\n";
    for (auto [rounds, cnt] : histogram) rows << rounds << ',' << cnt << '\n';
    out << rows.str();
}

void cmd_bounds(const std::string& in_path, std::istream& in, std::ostream& out) {
    CubicGraph g = load_graph(in_path, in);
    DecyclingBounds b = decycling_bounds(g);
    out << "girth " << girth(g) << '\n';
    out << "basic " << rational_text(b.basic) << '\n';
    out << "refined " << rational_text(b.refined) << '\n';
}

}  // namespace

int exit_code_for(errc c) {
    switch (c) {
    case errc::invalid_argument:
    case errc::malformed_graph6:
    case errc::not_cubic:
    case errc::not_simple:
    case errc::unknown_name:
        return exit_input;
    case errc::disconnected:
    case errc::not_tripartite:
    case errc::threshold_not_met:
    case errc::k_out_of_range:
    case errc::balance_failed:
    case errc::balance_infeasible:
    case errc::generation_exhausted:
    case errc::budget_exceeded:
    case errc::k_too_large:
        return exit_scope;
    default:
        return exit_internal;
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"independent-set bipartization toolkit for cubic graphs"};
    app.name("oddcut");
    app.require_subcommand(1);

    std::string in_path;
    std::string set_text;
    int k = 0;
    int n = 0;
    int count = 1;
    int trials = 0;
    std::uint64_t seed = 0;
    bool as_json = false;
    bool greedy = false;
    bool exact = false;
    bool with_free_sets = false;

    static const std::string in_help = "graph6 file, or - for the input stream";

    auto* solve_cmd =
        app.add_subcommand("solve", "independent set of size k whose removal leaves G bipartite");
    solve_cmd->add_option("--in", in_path, in_help)->required();
    solve_cmd->add_option("--k", k, "target set size")->required();
    solve_cmd->add_flag("--json", as_json, "emit a JSON report");
    solve_cmd->callback([&] { cmd_solve(in_path, k, as_json, in, out); });

    auto* color_cmd =
        app.add_subcommand("color",
                           "semi-equitable 3-coloring with class 0 of size k (the balanced "
                           "type is only guaranteed when 10k >= 4n)");
    color_cmd->add_option("--in", in_path, in_help)->required();
    color_cmd->add_option("--k", k, "size of class 0")->required();
    color_cmd->callback([&] { cmd_color(in_path, k, in, out); });

    auto* alpha_cmd = app.add_subcommand("alpha", "independence number and a witness set");
    alpha_cmd->add_option("--in", in_path, in_help)->required();
    auto* exact_flag = alpha_cmd->add_flag("--exact", exact, "exact branch and bound (default)");
    auto* greedy_flag = alpha_cmd->add_flag("--greedy", greedy, "seeded greedy estimate");
    auto* seed_opt = alpha_cmd->add_option("--seed", seed, "greedy seed");
    greedy_flag->excludes(exact_flag);
    seed_opt->needs(greedy_flag);
    alpha_cmd->callback([&] { cmd_alpha(in_path, greedy, seed, in, out); });

    auto* gen_cmd = app.add_subcommand("gen", "sample connected tripartite cubic graphs");
    gen_cmd->add_option("--n", n, "vertex count (even)")->required();
    gen_cmd->add_option("--seed", seed, "seed of the first sample");
    gen_cmd->add_option("--count", count, "number of samples")->check(CLI::Range(1, 1000000000));
    gen_cmd->callback([&] { cmd_gen(n, seed, count, out); });

    auto* verify_cmd = app.add_subcommand("verify", "check a vertex set against a graph");
    verify_cmd->add_option("--in", in_path, in_help)->required();
    verify_cmd->add_option("--set", set_text, "comma-separated vertex list")->required();
    verify_cmd->add_flag("--free-sets", with_free_sets,
                         "include the free/pseudo-free classification");
    verify_cmd->callback([&] { cmd_verify(in_path, set_text, with_free_sets, in, out); });

    auto* stats_cmd = app.add_subcommand("stats", "random-graph experiment, CSV output");
    stats_cmd->add_option("--n", n, "vertex count (even)")->required();
    stats_cmd->add_option("--trials", trials, "number of sampled graphs")
        ->required()
        ->check(CLI::Range(1, 1000000000));
    stats_cmd->add_option("--seed", seed, "seed of trial 0; trial i uses seed + i");
    stats_cmd->callback([&] { cmd_stats(n, trials, seed, out, err); });

    auto* bounds_cmd = app.add_subcommand("bounds", "girth and decycling-number bounds");
    bounds_cmd->add_option("--in", in_path, in_help)->required();
    bounds_cmd->callback([&] { cmd_bounds(in_path, in, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

}  // namespace oddcut::cli
