// cssprop: construct QR-based CSS codes, run propagation chains, rebuild
// the code tables and compute minimum distances from the command line.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cssprop/cssprop.hpp"

using namespace cssprop;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

LinearCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return read_generator(in);
    } catch (const FormatError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_text(const std::optional<std::string>& path, const std::string& text) {
    if (!path || *path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out) throw std::runtime_error("cannot write " + *path);
    out << text;
}

SearchOptions search_options(const Globals& g, std::optional<double> seconds, std::optional<std::uint64_t> codewords) {
    SearchOptions o;
    o.budget = EnumerationBudget::from_env();
    if (seconds) o.budget.max_seconds = *seconds;
    if (codewords) o.budget.max_codewords = *codewords;
    o.budget.validate();
    o.threads = g.threads;
    return o;
}

std::string describe(const std::optional<DistanceValue>& d) {
    if (!d) return "unknown";
    return std::to_string(d->value) + " (" + to_string(d->kind) + ", " + to_string(d->method) + ")";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json run_metadata(const Globals& g, const SearchOptions& s, double ms) {
    return {{"generator", "cssprop"}, {"version", CSSPROP_VERSION}, {"seed", g.seed},
            {"budget", budget_json(s.budget)}, {"threads", g.threads}, {"runtime_ms", ms}};
}

// ---- qr ------------------------------------------------------------------

struct QrArgs {
    std::size_t n = 0;
    std::uint32_t q = 2;
    bool extended = false;
    bool no_verify = false;
    std::optional<double> budget_seconds;
    std::optional<std::string> write_gen, out;
};

int cmd_qr(const Globals& g, const QrArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto field = field_of_order(a.q);
    auto fam = a.extended ? extended_qr_family(a.n, field) : qr_family(a.n, field);
    auto css = quantum_qr(fam, a.extended);
    const auto search = search_options(g, a.budget_seconds, std::nullopt);
    if (!a.no_verify) css = compute_distances(std::move(css), search);

    std::cout << css.params().render() << '\n';
    std::cout << "C1 " << css.c1.describe() << ", C2 " << css.c2.describe() << ", field " << field->name() << '\n';
    std::cout << "d1 " << describe(css.d1) << '\n' << "d2 " << describe(css.d2) << '\n';
    if (a.extended) std::cout << "extension scalars " << fam.s_q << " (Q), " << fam.s_n << " (N)\n";
    if (a.write_gen) write_text(a.write_gen, write_generator_string(css.c1));
    if (a.out) {
        ChainResult chain;
        chain.rows.push_back({css.params(), row_source(css.params()), css.trace, false});
        auto report = chain_report(chain, {ms_since(t0)});
        report.title = "qr";
        report.metadata = run_metadata(g, search, ms_since(t0));
        write_text(a.out, to_json(report).dump(2) + "\n");
    }
    return 0;
}

// ---- chain ---------------------------------------------------------------

struct ChainArgs {
    std::optional<std::size_t> qr_n, length;
    std::uint32_t q = 2;
    bool extended = false;
    std::optional<std::string> gen, gen2;
    std::optional<unsigned> seed_distance;
    std::size_t steps = 1;
    std::string rule = "thm32";
    std::string verify = "small";
    std::optional<double> budget_seconds;
    bool params_only = false;
    std::string format = "text";
    std::optional<std::string> out;
    bool no_timing = false;
};

int cmd_chain(const Globals& g, const ChainArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rules = std::vector<Rule>(a.steps, rule_from_string(a.rule));
    const auto level = verify_level_from_string(a.verify);
    const auto search = search_options(g, a.budget_seconds, std::nullopt);
    std::optional<DistanceValue> given;
    if (a.seed_distance) given = DistanceValue::lower_bound(*a.seed_distance, DistanceMethod::Ingested);

    ChainResult chain;
    if (a.params_only) {
        if (!given) throw std::runtime_error("--params-only needs --seed-distance");
        QuantumParams seed;
        seed.q = a.q;
        if (a.qr_n) seed.n = *a.qr_n + (a.extended ? 1 : 0), seed.k = a.extended ? 0 : 1;
        else if (a.length) seed.n = *a.length;
        else throw std::runtime_error("--params-only needs --qr-n or --length");
        seed.d1 = seed.d2 = given;
        chain = derive_params_chain(seed, rules, "given parameters");
    } else {
        CssCode seed = [&] {
            if (a.qr_n) return quantum_qr(*a.qr_n, field_of_order(a.q), a.extended);
            if (!a.gen) throw std::runtime_error("give a seed: --qr-n, --gen, or --params-only");
            auto c1 = load_code(*a.gen);
            auto c2 = a.gen2 ? load_code(*a.gen2) : dual(c1);
            return build_css(c1, c2, "from " + *a.gen);
        }();
        ChainOptions opt;
        opt.verify = level != VerifyLevel::None;
        opt.max_log2 = level == VerifyLevel::All ? std::numeric_limits<double>::infinity() : 25;
        opt.search = search;
        if (a.qr_n && a.extended) opt.qr_prime = *a.qr_n;
        if (given) seed = with_distances(std::move(seed), given, given);
        if (!given && !(opt.verify && detail::small_enough(seed, opt.max_log2)))
            throw std::runtime_error("seed too large to verify: pass --seed-distance or --verify all");
        chain = derive_chain(seed, rules, opt);
    }
    if (chain.diagnostic) std::cerr << "cssprop: " << *chain.diagnostic << '\n';
    auto report = chain_report(chain);
    report.metadata = run_metadata(g, search, a.no_timing ? 0.0 : ms_since(t0));
    if (chain.diagnostic) report.metadata["diagnostic"] = *chain.diagnostic;
    write_text(a.out, a.format == "json" ? to_json(report).dump(2) + "\n" : render_rows(report));
    return 0;
}

// ---- table ---------------------------------------------------------------

struct TableArgs {
    int which = 1;
    std::string verify = "none";
    std::optional<std::string> gen136, gen152, gen160;
    bool params_only = false;
    std::string format = "text";
    std::optional<std::string> out;
    bool no_timing = false;
    std::optional<double> budget_seconds;
};

int cmd_table(const Globals& g, const TableArgs& a) {
    TableOptions opt;
    opt.verify = verify_level_from_string(a.verify);
    opt.params_only = a.params_only;
    opt.search = search_options(g, a.budget_seconds, std::nullopt);
    opt.timing = !a.no_timing;
    opt.seed = g.seed;
    if (a.which == 2 && !a.params_only) {
        if (!a.gen136 || !a.gen152 || !a.gen160)
            throw std::runtime_error(
                "table 2 needs generator matrices of the self-dual [136,68], [152,76] and [160,80] codes "
                "(--gen136/--gen152/--gen160), or --params-only");
        opt.self_dual.emplace(136, load_code(*a.gen136));
        opt.self_dual.emplace(152, load_code(*a.gen152));
        opt.self_dual.emplace(160, load_code(*a.gen160));
    }
    const auto report = build_table(a.which, opt);
    write_text(a.out, a.format == "json" ? to_json(report).dump(2) + "\n" : render_grid(report));
    return 0;
}

// ---- mindist -------------------------------------------------------------

struct MindistArgs {
    std::string file;
    std::string engine = "auto";
    std::optional<double> budget_seconds;
    std::optional<std::uint64_t> max_codewords;
    std::optional<std::string> relative;
};

int cmd_mindist(const Globals& g, const MindistArgs& a) {
    const auto code = load_code(a.file);
    const auto search = search_options(g, a.budget_seconds, a.max_codewords);
    SearchStats stats;
    DistanceValue d;
    if (a.relative) {
        const auto sub = load_code(*a.relative);
        d = relative_min_weight(code, sub, search, &stats);
    } else {
        const Engine e = a.engine == "brute" ? Engine::Brute : a.engine == "bz" ? Engine::BZ : Engine::Auto;
        d = min_weight(code, search, e, &stats);
    }
    std::cout << d.value << ' ' << to_string(d.kind) << ' ' << to_string(d.method) << '\n';
    std::cout << "code " << code.describe() << ", " << stats.codewords << " codewords in " << stats.seconds << " s";
    if (stats.aborted && stats.best_found) std::cout << ", lightest word seen " << *stats.best_found;
    std::cout << '\n';
    return d.verified() ? 0 : 2;
}

// ---- random --------------------------------------------------------------

struct RandomArgs {
    std::size_t n = 0, k = 0;
    std::uint32_t q = 2;
    std::optional<std::string> out;
};

int cmd_random(const Globals& g, const RandomArgs& a) {
    write_text(a.out, write_generator_string(random_code(a.n, a.k, field_of_order(a.q), g.seed)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CSS codes from quadratic-residue and self-dual codes, and their propagation rules"};
    app.set_version_flag("--version", std::string(CSSPROP_VERSION));
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed for all randomness")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (default: CSSPROP_THREADS or all cores)");

    QrArgs qa;
    auto* qr = app.add_subcommand("qr", "Build a quantum QR code and compute its distances");
    qr->add_option("--n", qa.n, "Odd prime length")->required();
    qr->add_option("--q", qa.q, "Field order")->required();
    qr->add_flag("--extended", qa.extended, "Use the extended codes: [[n+1,0,d+1]]");
    qr->add_flag("--no-verify", qa.no_verify, "Skip the distance computation");
    qr->add_option("--budget-seconds", qa.budget_seconds, "Time limit for the distance computation");
    qr->add_option("--write-gen", qa.write_gen, "Write the generator matrix of C1 to this file");
    qr->add_option("--out", qa.out, "Write a JSON report to this file");

    ChainArgs ca;
    auto* chain = app.add_subcommand("chain", "Apply a propagation rule repeatedly to a seed code");
    chain->add_option("--qr-n", ca.qr_n, "Seed: quantum QR code of this prime length");
    chain->add_option("--q", ca.q, "Field order for --qr-n/--length")->capture_default_str();
    chain->add_flag("--extended", ca.extended, "Seed is the extended QR code");
    chain->add_option("--gen", ca.gen, "Seed C1 from a generator file (C2 defaults to its dual)");
    chain->add_option("--gen2", ca.gen2, "Seed C2 from a generator file");
    chain->add_option("--length", ca.length, "Seed length for --params-only without --qr-n");
    chain->add_option("--seed-distance", ca.seed_distance, "Published seed distance, recorded as Ingested");
    chain->add_option("--steps", ca.steps, "Number of rule applications")->capture_default_str();
    chain->add_option("--rule", ca.rule, "Rule to apply")
        ->check(CLI::IsMember({"thm31", "thm31s", "thm32", "pair"}))
        ->capture_default_str();
    chain->add_option("--verify", ca.verify, "Which rows to verify by enumeration")
        ->check(CLI::IsMember({"none", "small", "all"}))
        ->capture_default_str();
    chain->add_option("--verify-budget", ca.budget_seconds, "Time limit per distance computation, seconds");
    chain->add_flag("--params-only", ca.params_only, "Parameter arithmetic only, no matrices");
    chain->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    chain->add_option("--out", ca.out, "Output file (default: stdout)");
    chain->add_flag("--no-timing", ca.no_timing, "Zero all timing fields");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Rebuild one of the code tables");
    table->add_option("--which", ta.which, "Table number")->required()->check(CLI::Range(1, 3));
    table->add_option("--verify", ta.verify, "Which rows to verify by enumeration")
        ->check(CLI::IsMember({"none", "small", "all"}))
        ->capture_default_str();
    table->add_option("--verify-budget", ta.budget_seconds, "Time limit per distance computation, seconds");
    table->add_option("--gen136", ta.gen136, "Generator matrix of a self-dual [136,68,24] code");
    table->add_option("--gen152", ta.gen152, "Generator matrix of a self-dual [152,76,24] code");
    table->add_option("--gen160", ta.gen160, "Generator matrix of a self-dual [160,80,24] code");
    table->add_flag("--params-only", ta.params_only, "Parameter arithmetic only, no matrices");
    table->add_option("--format", ta.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    table->add_option("--out", ta.out, "Output file (default: stdout)");
    table->add_flag("--no-timing", ta.no_timing, "Zero all timing fields");

    MindistArgs ma;
    auto* mindist = app.add_subcommand("mindist", "Minimum distance of a code from a generator file");
    mindist->add_option("file", ma.file, "Generator matrix file")->required();
    mindist->add_option("--engine", ma.engine, "Enumeration engine")
        ->check(CLI::IsMember({"auto", "brute", "bz"}))
        ->capture_default_str();
    mindist->add_option("--budget-seconds", ma.budget_seconds, "Time limit, seconds");
    mindist->add_option("--max-codewords", ma.max_codewords, "Codeword limit");
    mindist->add_option("--relative", ma.relative, "Subcode file: minimum weight outside it");
    mindist->footer("Exit status: 0 verified, 2 lower bound only (budget exhausted), 1 error.");

    RandomArgs ra;
    auto* random = app.add_subcommand("random", "Random [n,k]_q code (uses --seed)");
    random->add_option("--n", ra.n, "Length")->required();
    random->add_option("--k", ra.k, "Dimension")->required();
    random->add_option("--q", ra.q, "Field order")->capture_default_str();
    random->add_option("--out", ra.out, "Output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*qr) return cmd_qr(g, qa);
        if (*chain) return cmd_chain(g, ca);
        if (*table) return cmd_table(g, ta);
        if (*mindist) return cmd_mindist(g, ma);
        if (*random) return cmd_random(g, ra);
    } catch (const std::exception& e) {
        std::cerr << "cssprop: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
