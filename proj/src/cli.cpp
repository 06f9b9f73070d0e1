#include "permstat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "permstat/cycle.hpp"
#include "permstat/extremal.hpp"
#include "permstat/metrics.hpp"
#include "permstat/oracle.hpp"
#include "permstat/report.hpp"
#include "permstat/sampling.hpp"
#include "permstat/stretch.hpp"
#include "permstat/verify.hpp"

namespace permstat::cli {

namespace {

// Input problems are reported with exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "text";
    int n = 0;
    std::string perm;
    std::string input;
    std::string stat;
    std::string displacement;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::string epsilons = "0.02,0.1,0.3,0.5";
    int bins = 50;
    int max_n = 8;
    bool allow_large = false;
};

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::json;
    if (f == "csv") return OutputFormat::csv;
    return OutputFormat::text;
}

Permutation read_permutation(const Options& o) {
    std::string text = o.perm;
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw InputError("cannot read input file '" + o.input + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (text.empty()) throw InputError("one of --perm or --input is required");
    try {
        return parse_permutation(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::vector<double> parse_epsilons(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            double e = std::stod(tok, &used);
            if (used != tok.size() || e < 0) throw std::invalid_argument(tok);
            out.push_back(e);
        } catch (const std::exception&) {
            throw InputError("bad token '" + tok + "' in --epsilons");
        }
    }
    return out;
}

nlohmann::json optional_json(const std::function<nlohmann::json()>& f) {
    try {
        return f();
    } catch (const std::domain_error&) {
        return nullptr;
    } catch (const std::invalid_argument&) {
        return nullptr;
    }
}

Report cmd_metrics(const Options& o) {
    const Permutation p = read_permutation(o);
    Report r;
    r.command = "metrics";
    r.n = p.size();
    r.inputs["perm"] = to_json(p);
    const auto crossing = is_crossing(p);
    r.results["displacement"] = to_json(displacement(p));
    r.results["normalized_displacement"] = to_json(normalized_displacement(p));
    r.results["s_plus"] = optional_json([&] { return to_json(stretch_additive(IntervalFamily::consecutive_pairs(p.size()), p)); });
    r.results["s_star"] = optional_json([&] { return to_json(gap_product(p)); });
    r.results["spread"] = optional_json([&] { return nlohmann::json(spread(p)); });
    r.results["dispersion"] = optional_json([&] { return to_json(dispersion(p)); });
    r.results["min_delay"] = min_delay(p);
    r.results["crossing"] = crossing.crossing;
    if (crossing.witness) r.results["noncrossing_witness"] = {crossing.witness->i, crossing.witness->j};
    r.results["additive_maximizer"] = optional_json([&] { return nlohmann::json(is_additive_maximizer(p)); });
    return r;
}

Report cmd_extremal(const Options& o) {
    if (o.n < 1) throw InputError("--n must be >= 1");
    Report r;
    r.command = "extremal";
    r.n = o.n;
    r.inputs["stat"] = o.stat;
    if (o.stat == "disp") {
        r.results["max_displacement"] = to_json(max_displacement(o.n));
        r.results["max_normalized_displacement"] = to_json(max_displacement(o.n) / ExactRatio(o.n));
        r.results["count"] = count_max_displacement(o.n).get_str();
        r.results["example"] = to_json(Permutation::reversal(o.n));
    } else if (o.stat == "s-plus" || o.stat == "s-star") {
        if (o.n < 2) throw InputError("--n must be >= 2 for stretch");
        const auto maximizers = multiplicative_maximizers(o.n);
        nlohmann::json list = nlohmann::json::array();
        for (const auto& p : maximizers) list.push_back(to_json(p));
        if (o.stat == "s-plus") {
            r.results["max_s_plus"] = to_json(max_additive_stretch(o.n));
            r.results["max_gap_sum"] = to_json(max_additive_stretch(o.n) * ExactRatio(o.n - 1));
            r.results["examples"] = list;
        } else {
            r.results["max_s_star"] = to_json(max_multiplicative_stretch(o.n));
            r.results["max_s_star_approx"] = max_multiplicative_stretch(o.n).approximate();
            r.results["count"] = maximizers.size();
            r.results["maximizers"] = list;
        }
    } else {
        throw InputError("bad token '" + o.stat + "' for --stat (expected disp, s-plus or s-star)");
    }
    return r;
}

Report cmd_construct(const Options& o) {
    if (o.n < 1) throw InputError("--n must be >= 1");
    ExactRatio d;
    try {
        d = ExactRatio::parse(o.displacement);
    } catch (const std::exception&) {
        throw InputError("bad token '" + o.displacement + "' for --displacement");
    }
    PrescribedDisplacement built = [&] {
        try {
            return construct_prescribed(o.n, d);
        } catch (const std::out_of_range& e) {
            throw InputError(e.what());
        }
    }();
    Report r;
    r.command = "construct";
    r.n = o.n;
    r.inputs["displacement"] = to_json(d);
    r.results["block"] = built.block;
    r.results["achieved"] = to_json(built.achieved);
    r.results["error"] = to_json(abs(built.achieved - d));
    r.results["bound"] = to_json(ExactRatio(2, o.n));
    r.results["within_bound"] = abs(built.achieved - d) <= ExactRatio(2, o.n);
    r.results["permutation"] = to_json(built.permutation);
    return r;
}

Report cmd_verify(const Options& o) {
    const int limit = o.allow_large ? kOracleHardCap : kOracleDefaultLimit;
    if (o.max_n < 1 || o.max_n > limit)
        throw InputError("--max-n " + std::to_string(o.max_n) + " outside 1.." + std::to_string(limit) +
                         (o.allow_large ? "" : " (use --allow-large for up to " + std::to_string(kOracleHardCap) + ")"));
    Report r;
    r.command = "verify";
    r.n = o.max_n;
    r.inputs["max_n"] = o.max_n;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : run_theorem_checks(o.max_n, limit)) {
        nlohmann::json j = {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}};
        std::string line = std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + c.detail + ")";
        if (c.counterexample) {
            j["counterexample"] = to_json(*c.counterexample);
            line += " counterexample: " + c.counterexample->to_string();
        }
        checks.push_back(j);
        r.text_lines.push_back(line);
        r.ok = r.ok && c.passed;
    }
    r.results["checks"] = checks;
    return r;
}

Report cmd_sample(const Options& o) {
    if (o.n < 1) throw InputError("--n must be >= 1");
    if (o.trials < 1) throw InputError("--trials must be >= 1");
    if (o.bins < 1) throw InputError("--bins must be >= 1");
    const auto stats = empirical_stats(o.n, o.trials, o.seed, parse_epsilons(o.epsilons), o.bins);
    Report r;
    r.command = "sample";
    r.n = o.n;
    r.inputs = {{"trials", o.trials}, {"seed", o.seed}, {"epsilons", o.epsilons}, {"bins", o.bins}};
    r.results["mean"] = stats.mean;
    r.results["median"] = stats.median;
    r.results["stddev"] = stats.stddev;
    r.results["expected_mean"] = to_json(average_displacement_exact(o.n));
    r.results["min"] = static_cast<double>(stats.displacement_sums.front()) / o.n;
    r.results["max"] = static_cast<double>(stats.displacement_sums.back()) / o.n;
    r.results["fraction_in_330_336"] = stats.fraction_between(330, 336);
    nlohmann::json conc = nlohmann::json::array();
    for (const auto& row : concentration_report(stats)) {
        conc.push_back({{"epsilon", row.epsilon}, {"empirical", row.empirical}, {"bound", row.bound}, {"holds", row.holds}});
        r.ok = r.ok && row.holds;
    }
    r.results["concentration"] = conc;
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& b : stats.histogram) hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
    r.results["histogram"] = hist;
    r.histogram = stats.histogram;
    return r;
}

Report cmd_improve(const Options& o) {
    const Permutation start = read_permutation(o);
    Report r;
    r.command = "improve";
    r.n = start.size();
    r.inputs["perm"] = to_json(start);
    r.inputs["stat"] = o.stat;
    nlohmann::json steps = nlohmann::json::array();
    if (o.stat == "disp") {
        Permutation p = start;
        steps.push_back({{"permutation", to_json(p)}, {"displacement", to_json(displacement(p))}});
        while (!is_crossing(p).crossing) {
            p = improve_noncrossing(p);
            steps.push_back({{"permutation", to_json(p)}, {"displacement", to_json(displacement(p))}});
        }
        r.results["final"] = to_json(p);
        r.results["final_displacement"] = to_json(displacement(p));
        r.results["maximal"] = displacement(p) == max_displacement(p.size());
    } else if (o.stat == "s-star") {
        if (start.size() < 2) throw InputError("--perm must have n >= 2 for s-star");
        CycleWithStart c = perm_to_cycle(start);
        steps.push_back({{"permutation", to_json(cycle_to_perm(c))}, {"cycle_stat", to_json(cycle_stat(c))}});
        while (auto step = find_improvement(c)) {
            c = step->cycle;
            steps.push_back({{"permutation", to_json(cycle_to_perm(c))},
                             {"cycle_stat", to_json(cycle_stat(c))},
                             {"rule", static_cast<int>(step->rule)},
                             {"jumps", {step->first, step->second}}});
        }
        const Permutation best = best_unrolling(c);
        r.results["final"] = to_json(best);
        r.results["final_s_star"] = to_json(gap_product(best));
        r.results["maximal"] = gap_product(best) == max_multiplicative_stretch(best.size());
    } else {
        throw InputError("bad token '" + o.stat + "' for --stat (expected disp or s-star)");
    }
    r.results["trajectory"] = steps;

    r.text_lines.push_back("command: improve");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        std::string line = "step " + std::to_string(i) + ": ";
        std::string perm;
        for (const auto& v : s["permutation"]) perm += (perm.empty() ? "" : " ") + v.dump();
        line += perm;
        if (s.contains("displacement")) line += "  d=" + s["displacement"].get<std::string>();
        if (s.contains("cycle_stat"))
            line += "  s^=" + s["cycle_stat"]["product"].get<std::string>();
        if (s.contains("rule")) line += "  rule " + s["rule"].dump();
        r.text_lines.push_back(line);
    }
    std::string final_perm;
    for (const auto& v : r.results["final"]) final_perm += (final_perm.empty() ? "" : " ") + v.dump();
    r.text_lines.push_back("final: " + final_perm);
    r.text_lines.push_back(std::string("maximal: ") + (r.results["maximal"].get<bool>() ? "true" : "false"));
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"permstat: displacement and stretch statistics of permutations"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
    };
    auto add_perm = [&](CLI::App* sub) {
        sub->add_option("--perm", o.perm, "Permutation in one-line notation, e.g. \"2 4 1 3\"");
        sub->add_option("--input", o.input, "File holding a permutation");
    };

    auto* metrics = app.add_subcommand("metrics", "All per-permutation statistics");
    add_perm(metrics);
    add_format(metrics);

    auto* extremal = app.add_subcommand("extremal", "Closed-form maxima and their permutations");
    extremal->add_option("--n", o.n, "Size")->required();
    extremal->add_option("--stat", o.stat, "disp | s-plus | s-star")->required();
    add_format(extremal);

    auto* construct = app.add_subcommand("construct", "Permutation with prescribed normalized displacement");
    construct->add_option("--n", o.n, "Size")->required();
    construct->add_option("--displacement", o.displacement, "Target in [0, 1/2], decimal or p/q")->required();
    add_format(construct);

    auto* verify = app.add_subcommand("verify", "Check closed forms against exhaustive enumeration");
    verify->add_option("--max-n", o.max_n, "Largest n to enumerate (default 8)");
    verify->add_flag("--allow-large", o.allow_large, "Permit --max-n up to 11");
    add_format(verify);

    auto* sample = app.add_subcommand("sample", "Monte Carlo displacement distribution");
    sample->add_option("--n", o.n, "Size")->required();
    sample->add_option("--trials", o.trials, "Number of samples");
    sample->add_option("--seed", o.seed, "Random seed");
    sample->add_option("--epsilons", o.epsilons, "Comma-separated epsilons");
    sample->add_option("--bins", o.bins, "Histogram bins");
    add_format(sample);

    auto* improve = app.add_subcommand("improve", "Apply local improvements until none applies");
    add_perm(improve);
    o.stat = "disp";
    improve->add_option("--stat", o.stat, "disp | s-star");
    add_format(improve);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Report report;
        if (metrics->parsed()) report = cmd_metrics(o);
        else if (extremal->parsed()) report = cmd_extremal(o);
        else if (construct->parsed()) report = cmd_construct(o);
        else if (verify->parsed()) report = cmd_verify(o);
        else if (sample->parsed()) report = cmd_sample(o);
        else report = cmd_improve(o);
        report.write(out, parse_format(o.format));
        return report.ok ? kExitOk : kExitFailed;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace permstat::cli
