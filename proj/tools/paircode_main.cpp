// paircode: symbol-pair metric calculator, irregular-distance code bounds,
// function-correcting encoder constructions, and a pair-error channel
// simulator. JSON is the machine format; --format human renders tables.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "paircode/channel.hpp"
#include "paircode/counting.hpp"
#include "paircode/fcspc.hpp"
#include "paircode/io.hpp"
#include "paircode/irregular.hpp"

using json = nlohmann::json;
using namespace paircode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // verified-negative result (counterexample found)
constexpr int kExitUsage = 2;     // bad flags or malformed input

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "human") return Format::Human;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    raise(ErrorKind::ParseError, "unknown format: " + s);
}

Metric parse_metric(const std::string& s) {
    if (s == "pair") return Metric::Pair;
    if (s == "hamming") return Metric::Hamming;
    raise(ErrorKind::ParseError, "metric must be pair or hamming");
}

void print_matrix(std::ostream& os, const DistanceMatrix& d) {
    int width = 1;
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) width = std::max(width, static_cast<int>(std::to_string(d.at(i, j)).size()));
    for (int i = 0; i < d.size(); ++i) {
        for (int j = 0; j < d.size(); ++j) os << std::setw(j ? width + 1 : width) << d.at(i, j);
        os << '\n';
    }
}

// Seed handling: randomized commands must be reproducible under CI.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    if (std::getenv("PAIRCODE_CI")) raise(ErrorKind::DomainError, "--seed is required when PAIRCODE_CI is set");
    const std::uint64_t s = std::random_device{}();
    std::cerr << "note: --seed not given, using " << s << '\n';
    return s;
}

struct FunctionSpec {
    std::string spec;
    std::shared_ptr<const FunctionTable> resolve(int k, int T) const {
        if (spec == "weight") return std::make_shared<FunctionTable>(FunctionTable::pair_weight_fn(k));
        if (spec == "dist") {
            if (T <= 0) raise(ErrorKind::DomainError, "dist functions need --T");
            return std::make_shared<FunctionTable>(FunctionTable::weight_distribution_fn(k, T));
        }
        if (spec.rfind("code:", 0) == 0) {
            const auto words = io::read_words_file(spec.substr(5));
            return std::make_shared<FunctionTable>(FunctionTable::code_indicator_fn(k, words));
        }
        if (spec.rfind("file:", 0) == 0)
            return std::make_shared<FunctionTable>(io::function_from_file(spec.substr(5)));
        // bare path fallback
        return std::make_shared<FunctionTable>(io::function_from_file(spec));
    }
};

int cmd_metric(const std::optional<std::string>& xs, const std::optional<std::string>& ys,
               const std::optional<std::string>& weight, Format format) {
    json out;
    if (weight) {
        const BinaryWord u = BinaryWord::from_string(*weight);
        out = {{"word", *weight}, {"pair_weight", pair_weight(u)}};
        if (format == Format::Human) {
            std::cout << "w_p(" << *weight << ") = " << pair_weight(u) << '\n';
            return kExitOk;
        }
    } else {
        if (!xs || !ys) raise(ErrorKind::DomainError, "metric needs --x and --y, or --weight");
        const BinaryWord x = BinaryWord::from_string(*xs);
        const BinaryWord y = BinaryWord::from_string(*ys);
        out = {{"x", *xs},
               {"y", *ys},
               {"hamming", hamming_distance(x, y)},
               {"pair", pair_distance(x, y)},
               {"pi_x", pair_read(x).to_compact()},
               {"pi_y", pair_read(y).to_compact()}};
        if (format == Format::Human) {
            std::cout << "d_H = " << out["hamming"] << "\nd_p = " << out["pair"] << "\npi(x) = "
                      << pair_read(x).to_string() << "\npi(y) = " << pair_read(y).to_string() << '\n';
            return kExitOk;
        }
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_ball(int n, int t, bool oracle, Format format) {
    json out{{"n", n}, {"t", t}, {"ball", ball_size(n, t).str()}};
    json spheres = json::array();
    for (int i = 0; i <= std::min(t, n); ++i) spheres.push_back(sphere_surface(n, i).str());
    out["spheres"] = spheres;
    if (oracle) {
        const auto ball = enumerate_pair_ball(BinaryWord(n), t);
        out["oracle"] = ball.size();
    }
    if (format == Format::Human) {
        std::cout << "B(" << n << "," << t << ") = " << out["ball"].get<std::string>() << '\n';
        if (oracle) std::cout << "oracle count = " << out["oracle"] << '\n';
        return kExitOk;
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_bounds(const std::optional<std::string>& matrix_path, std::vector<int> uniform, bool exact,
               const std::string& metric_name, Format format) {
    const Metric metric = parse_metric(metric_name);
    std::optional<DistanceMatrix> dm;
    if (matrix_path) dm = io::load_matrix(*matrix_path);
    if (!uniform.empty()) {
        if (uniform.size() != 2) raise(ErrorKind::DomainError, "--uniform takes M D");
        dm = DistanceMatrix::uniform(uniform[0], uniform[1]);
    }
    if (!dm) raise(ErrorKind::DomainError, "bounds needs --matrix or --uniform");

    const PlotkinBound pk = plotkin_lower_bound(*dm);
    const auto order_id = identity_order(dm->size());
    const auto order_rs = descending_row_sum_order(*dm);
    const auto [m, dmax] = dmax_uniform_relax(*dm);
    json out{{"m", m},
             {"d_max", dmax},
             {"metric", metric_name},
             {"plotkin_lower", pk.value},
             {"plotkin_rational", {{"num", pk.numerator}, {"den", pk.denominator}}},
             {"gv_upper_identity", gv_upper_bound(*dm, order_id, metric)},
             {"gv_upper_rowsum", gv_upper_bound(*dm, order_rs, metric)}};
    if (metric == Metric::Pair && dmax >= 2 && m >= 2) {
        if (const auto uu = np_uniform_upper(m, dmax))
            out["uniform_relaxation_upper"] = uu->value;
    }
    if (exact) {
        const auto np = exact_np(*dm, metric);
        if (np) {
            out["exact"] = np->value;
            json witness = json::array();
            for (const auto& w : np->witness.words) witness.push_back(w.to_string());
            out["witness"] = witness;
        } else {
            out["exact"] = nullptr;
            out["note"] = "search exhausted the length guard";
        }
    }
    if (format == Format::Human) {
        std::cout << "M = " << m << ", D_max = " << dmax << " (" << metric_name << " metric)\n";
        print_matrix(std::cout, *dm);
        std::cout << "plotkin lower bound: " << pk.value << "  (" << pk.numerator << "/" << pk.denominator
                  << ")\n"
                  << "gv upper bound (identity order): " << out["gv_upper_identity"] << '\n'
                  << "gv upper bound (row-sum order):  " << out["gv_upper_rowsum"] << '\n';
        if (out.contains("uniform_relaxation_upper"))
            std::cout << "uniform relaxation upper bound: " << out["uniform_relaxation_upper"] << '\n';
        if (out.contains("exact")) {
            if (out["exact"].is_null())
                std::cout << "exact: search exhausted the length guard\n";
            else
                std::cout << "exact shortest length: " << out["exact"] << '\n';
        }
        return kExitOk;
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_fcspc_construct(const std::string& family, int k, int t, int T, const std::optional<std::string>& base_path,
                        const std::optional<std::string>& code_path, const std::optional<std::string>& function_path,
                        const std::string& out_path) {
    std::optional<PairEncoder> enc;
    if (family == "weight") {
        std::optional<std::vector<BinaryWord>> base;
        if (base_path) base = io::read_words_file(*base_path);
        enc = encode_pair_weight(k, t, std::move(base));
    } else if (family == "dist") {
        enc = encode_weight_distribution(k, t, T);
    } else if (family == "locally") {
        std::shared_ptr<const FunctionTable> f;
        if (code_path)
            f = std::make_shared<FunctionTable>(FunctionTable::code_indicator_fn(k, io::read_words_file(*code_path)));
        else if (function_path)
            f = std::make_shared<FunctionTable>(io::function_from_file(*function_path));
        else
            raise(ErrorKind::DomainError, "locally construction needs --code or --function");
        enc = encode_locally_binary(*f, t);
    } else {
        raise(ErrorKind::DomainError, "family must be weight, dist, or locally");
    }
    io::save_encoder(out_path, *enc);
    std::cout << json{{"family", family}, {"k", enc->k()}, {"t", enc->t()}, {"r", enc->r()}, {"out", out_path}}.dump()
              << '\n';
    return kExitOk;
}

std::shared_ptr<const FunctionTable> resolve_for_encoder(const PairEncoder& enc, const std::string& fn_spec) {
    return FunctionSpec{fn_spec}.resolve(enc.k(), enc.dist_T());
}

int cmd_fcspc_verify(const std::string& enc_path, const std::string& fn_spec, std::optional<int> t_flag,
                     Format format) {
    // Load the table first: generic encoders need it at parse time.
    json j;
    {
        std::ifstream in(enc_path);
        if (!in) raise(ErrorKind::ParseError, "cannot open file: " + enc_path);
        in >> j;
    }
    const int k = j.at("k").get<int>();
    const FunctionSpec spec{fn_spec};
    std::shared_ptr<const FunctionTable> f = spec.resolve(k, j.value("T", 0));
    const PairEncoder enc = io::encoder_from_json(j, f);
    const int t = t_flag.value_or(enc.t());
    const VerifyResult v = verify_fcspc(enc, *f, t);
    json out{{"ok", v.ok}, {"t", t}, {"r", enc.r()}, {"pairs_checked", v.pairs_checked}, {"exhaustive", v.exhaustive}};
    if (!v.ok) {
        out["counterexample"] = {v.counterexample->first.to_string(), v.counterexample->second.to_string()};
    }
    if (format == Format::Human) {
        if (v.ok)
            std::cout << "verified: every cross-class pair has pair distance >= " << 2 * t + 1 << '\n';
        else
            std::cout << "FAILED: counterexample u1 = " << v.counterexample->first.to_string()
                      << ", u2 = " << v.counterexample->second.to_string() << '\n';
    } else {
        std::cout << out.dump() << '\n';
    }
    return v.ok ? kExitOk : kExitNegative;
}

int cmd_fcspc_report(const std::string& family, int k, int t, int T, const std::optional<std::string>& code_path,
                     const std::optional<std::string>& function_path, Format format) {
    std::shared_ptr<const FunctionTable> f;
    if (family == "weight")
        f = std::make_shared<FunctionTable>(FunctionTable::pair_weight_fn(k));
    else if (family == "dist")
        f = std::make_shared<FunctionTable>(FunctionTable::weight_distribution_fn(k, T));
    else if (family == "locally" || family == "indicator") {
        if (!code_path) raise(ErrorKind::DomainError, "indicator reports need --code");
        f = std::make_shared<FunctionTable>(FunctionTable::code_indicator_fn(k, io::read_words_file(*code_path)));
    } else if (family == "file") {
        if (!function_path) raise(ErrorKind::DomainError, "file reports need --function");
        f = std::make_shared<FunctionTable>(io::function_from_file(*function_path));
    } else {
        raise(ErrorKind::DomainError, "family must be weight, dist, locally, or file");
    }
    const RedundancyReport rep = redundancy_report(*f, t);
    if (format == Format::Human) {
        std::cout << "redundancy bounds for " << rep.family << " (k = " << rep.k << ", t = " << rep.t << ")\n";
        std::cout << "  lower bounds:\n";
        for (const auto& b : rep.lower)
            std::cout << "    " << std::left << std::setw(24) << b.name << b.value << (b.exact ? "" : " (real)")
                      << '\n';
        std::cout << "  upper bounds:\n";
        for (const auto& b : rep.upper)
            std::cout << "    " << std::left << std::setw(24) << b.name << b.value << (b.exact ? "" : " (real)")
                      << '\n';
        if (rep.achieved) std::cout << "  achieved (verified encoder): r = " << *rep.achieved << '\n';
        for (const auto& n : rep.notes) std::cout << "  note: " << n << '\n';
        return kExitOk;
    }
    std::cout << io::report_to_json(rep).dump() << '\n';
    return kExitOk;
}

double classical_lower(int k, int t) { return (t / 2) * std::log2(static_cast<double>(k) + 2.0 * t - 1.0); }

int cmd_compare(int k, int t, Format format) {
    if (k < 2) raise(ErrorKind::DomainError, "compare requires k >= 2");
    const double classical = classical_lower(k, t);
    json out{{"k", k}, {"t", t}, {"classical", classical}, {"locally_binary", 2 * t - 1}, {"distribution", 2 * t}};
    std::optional<double> weight_col;
    if (t <= 3)
        weight_col = std::vector<int>{2, 5, 7}[t - 1];
    else if (t >= 6 && k <= (2 * t - 1) * (2 * t - 1)) {
        const double dd = 2.0 * t - 1.0;
        weight_col = (4.0 * t - 4.0) / (1.0 - 2.0 * std::sqrt(std::log(dd) / dd));
    }
    if (weight_col) out["pair_weight"] = *weight_col;
    if (t == 1) out["note"] = "classical bound is vacuous at t = 1 (floor(t/2) = 0)";
    switch (format) {
        case Format::Csv: {
            std::cout << "k,t,classical,locally_binary,pair_weight,distribution\n";
            std::cout << k << ',' << t << ',' << classical << ',' << 2 * t - 1 << ',';
            if (weight_col) std::cout << *weight_col;
            std::cout << ',' << 2 * t << '\n';
            return kExitOk;
        }
        case Format::Human: {
            std::cout << "redundancy needed to protect against " << t << " pair errors (k = " << k << ")\n";
            std::cout << std::left << std::setw(34) << "  full-message code (lower bound)" << classical << '\n';
            std::cout << std::left << std::setw(34) << "  2t-pair-locally binary f" << 2 * t - 1 << '\n';
            if (weight_col) std::cout << std::left << std::setw(34) << "  pair weight f" << *weight_col << '\n';
            std::cout << std::left << std::setw(34) << "  pair weight distribution f" << 2 * t << '\n';
            if (t == 1) std::cout << "  note: classical bound is vacuous at t = 1\n";
            return kExitOk;
        }
        case Format::Json:
            std::cout << out.dump() << '\n';
            return kExitOk;
    }
    return kExitOk;
}

int cmd_simulate(const std::string& enc_path, const std::string& fn_spec, int t, std::uint64_t trials,
                 std::optional<std::uint64_t> seed, bool exhaustive, const std::string& mode_name) {
    json j;
    {
        std::ifstream in(enc_path);
        if (!in) raise(ErrorKind::ParseError, "cannot open file: " + enc_path);
        in >> j;
    }
    std::shared_ptr<const FunctionTable> f = FunctionSpec{fn_spec}.resolve(j.at("k").get<int>(), j.value("T", 0));
    const PairEncoder enc = io::encoder_from_json(j, f);
    const bool within_budget = t <= enc.t();
    if (exhaustive) {
        const auto res = exhaustive_round_trip(*f, enc, t);
        std::cout << json{{"trials", res.trials}, {"failures", res.failures}, {"t", t},
                          {"k", enc.k()},         {"r", enc.r()},             {"exhaustive", true}}
                         .dump()
                  << '\n';
        return (within_budget && res.failures > 0) ? kExitNegative : kExitOk;
    }
    ChannelConfig cfg;
    cfg.t = t;
    cfg.mode = mode_name == "exact" ? ErrorMode::ExactlyT : ErrorMode::UpToT;
    cfg.seed = resolve_seed(seed);
    const ExperimentStats stats = round_trip_experiment(*f, enc, cfg, trials);
    std::cout << io::stats_to_json(stats).dump() << '\n';
    return (within_budget && stats.successes != stats.trials) ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbol-pair code bounds, constructions, and channel simulation"};
    app.require_subcommand(1);
    std::string format_name = "human";
    app.add_option("--format", format_name, "output format: human, json, csv")->capture_default_str();

    // metric
    auto* metric = app.add_subcommand("metric", "pair/Hamming distances and pair weight");
    std::optional<std::string> mx, my, mweight;
    metric->add_option("--x", mx, "first word");
    metric->add_option("--y", my, "second word");
    metric->add_option("--weight", mweight, "word whose pair weight to print");

    // ball
    auto* ball = app.add_subcommand("ball", "pair-ball volume B(n,t)");
    int bn = 0, bt = 0;
    bool boracle = false;
    ball->add_option("-n", bn, "word length")->required();
    ball->add_option("-t", bt, "radius")->required();
    ball->add_flag("--oracle", boracle, "also count by brute-force enumeration");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "irregular-distance code length bounds");
    std::optional<std::string> bmatrix;
    std::vector<int> buniform;
    bool bexact = false;
    std::string bmetric = "pair";
    bounds->add_option("--matrix", bmatrix, "distance matrix file (json or csv)");
    bounds->add_option("--uniform", buniform, "uniform matrix: M D")->expected(2);
    bounds->add_flag("--exact", bexact, "run the exhaustive shortest-length search");
    bounds->add_option("--metric", bmetric, "pair or hamming")->capture_default_str();

    // fcspc
    auto* fcspc = app.add_subcommand("fcspc", "function-correcting symbol-pair codes");
    fcspc->require_subcommand(1);
    auto* construct = fcspc->add_subcommand("construct", "build an encoder");
    std::string cfamily;
    int ck = 0, ct = 0, cT = 0;
    std::optional<std::string> cbase, ccode, cfunction;
    std::string cout_path;
    construct->add_option("--family", cfamily, "weight, dist, or locally")->required();
    construct->add_option("--k", ck, "message length")->required();
    construct->add_option("--t", ct, "pair-error budget")->required();
    construct->add_option("--T", cT, "step width (dist family)");
    construct->add_option("--base", cbase, "base code file (weight family)");
    construct->add_option("--code", ccode, "indicator code file (locally family)");
    construct->add_option("--function", cfunction, "function table file (locally family)");
    construct->add_option("--out", cout_path, "encoder output path")->required();

    auto* verify = fcspc->add_subcommand("verify", "check an encoder against a function");
    std::string venc, vfunction;
    std::optional<int> vt;
    verify->add_option("--enc", venc, "encoder json")->required();
    verify->add_option("--function", vfunction, "weight | dist | code:FILE | file:FILE")->required();
    verify->add_option("--t", vt, "override the encoder's t");

    auto* report = fcspc->add_subcommand("report", "redundancy bound report");
    std::string rfamily;
    int rk = 0, rt = 0, rT = 0;
    std::optional<std::string> rcode, rfunction;
    report->add_option("--family", rfamily, "weight, dist, locally, or file")->required();
    report->add_option("--k", rk, "message length")->required();
    report->add_option("--t", rt, "pair-error budget")->required();
    report->add_option("--T", rT, "step width (dist family)");
    report->add_option("--code", rcode, "indicator code file");
    report->add_option("--function", rfunction, "function table file");

    // compare
    auto* compare = app.add_subcommand("compare", "redundancy of full-message codes vs function-correcting ones");
    int pk = 0, pt = 0;
    compare->add_option("--k", pk, "message length")->required();
    compare->add_option("--t", pt, "pair-error budget")->required();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "channel round-trip experiments");
    std::string senc, sfunction = "weight", smode = "upto";
    int st = 0;
    std::uint64_t strials = 1000;
    std::optional<std::uint64_t> sseed;
    bool sexhaustive = false;
    simulate->add_option("--enc", senc, "encoder json")->required();
    simulate->add_option("--function", sfunction, "weight | dist | code:FILE | file:FILE")->capture_default_str();
    simulate->add_option("--t", st, "injected pair-error budget")->required();
    simulate->add_option("--trials", strials, "number of random trials")->capture_default_str();
    simulate->add_option("--seed", sseed, "RNG seed (required when PAIRCODE_CI is set)");
    simulate->add_flag("--exhaustive", sexhaustive, "sweep every message and error pattern");
    simulate->add_option("--mode", smode, "upto or exact error count")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Format format = parse_format(format_name);
        if (metric->parsed()) return cmd_metric(mx, my, mweight, format);
        if (ball->parsed()) return cmd_ball(bn, bt, boracle, format);
        if (bounds->parsed()) return cmd_bounds(bmatrix, buniform, bexact, bmetric, format);
        if (fcspc->parsed()) {
            if (construct->parsed())
                return cmd_fcspc_construct(cfamily, ck, ct, cT, cbase, ccode, cfunction, cout_path);
            if (verify->parsed()) return cmd_fcspc_verify(venc, vfunction, vt, format);
            if (report->parsed()) return cmd_fcspc_report(rfamily, rk, rt, rT, rcode, rfunction, format);
        }
        if (compare->parsed()) return cmd_compare(pk, pt, format);
        if (simulate->parsed()) return cmd_simulate(senc, sfunction, st, strials, sseed, sexhaustive, smode);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
