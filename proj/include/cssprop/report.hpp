#ifndef CSSPROP_REPORT_HPP
#define CSSPROP_REPORT_HPP

// Code tables as structured reports: JSON documents (nlohmann::json) and a
// plain text grid with one table line per text line.

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "css.hpp"

#ifndef CSSPROP_VERSION
#define CSSPROP_VERSION "0.1.0"
#endif

namespace cssprop {

using json = nlohmann::json;

/// A published value that differs from, or adds to, what we reproduce.
struct PublishedNote {
    std::string value;    // as printed, e.g. "25*"
    std::string meaning;  // what the star marks
    bool operator==(const PublishedNote&) const = default;
};

struct ReportRow {
    std::size_t line = 0, column = 0;
    QuantumParams params;
    RowSource source = RowSource::TheoremBound;
    std::vector<std::string> trace;
    std::optional<PublishedNote> published;
    double runtime_ms = 0;
    bool operator==(const ReportRow&) const = default;
};

struct TableReport {
    std::string title;
    std::vector<ReportRow> rows;
    json metadata = json::object();
    bool operator==(const TableReport&) const = default;
};

inline json distance_to_json(const std::optional<DistanceValue>& d) {
    if (!d) return nullptr;
    return {{"value", d->value}, {"kind", to_string(d->kind)}, {"method", to_string(d->method)}};
}

inline std::optional<DistanceValue> distance_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return DistanceValue{j.at("value").get<unsigned>(), distance_kind_from_string(j.at("kind").get<std::string>()),
                         distance_method_from_string(j.at("method").get<std::string>())};
}

inline json to_json(const TableReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({
            {"line", row.line},
            {"column", row.column},
            {"q", row.params.q},
            {"n", row.params.n},
            {"k", row.params.k},
            {"d1", distance_to_json(row.params.d1)},
            {"d2", distance_to_json(row.params.d2)},
            {"params", row.params.render()},
            {"source", to_string(row.source)},
            {"trace", row.trace},
            {"published", row.published ? json{{"value", row.published->value}, {"meaning", row.published->meaning}} : json(nullptr)},
            {"runtime_ms", row.runtime_ms},
        });
    }
    return {{"title", r.title}, {"rows", rows}, {"metadata", r.metadata}};
}

inline TableReport report_from_json(const json& j) {
    TableReport r;
    r.title = j.at("title").get<std::string>();
    r.metadata = j.at("metadata");
    for (const auto& row : j.at("rows")) {
        ReportRow out;
        out.line = row.at("line").get<std::size_t>();
        out.column = row.at("column").get<std::size_t>();
        out.params.q = row.at("q").get<std::uint32_t>();
        out.params.n = row.at("n").get<std::size_t>();
        out.params.k = row.at("k").get<std::size_t>();
        out.params.d1 = distance_from_json(row.at("d1"));
        out.params.d2 = distance_from_json(row.at("d2"));
        out.source = row_source_from_string(row.at("source").get<std::string>());
        out.trace = row.at("trace").get<std::vector<std::string>>();
        if (!row.at("published").is_null())
            out.published = PublishedNote{row["published"].at("value").get<std::string>(), row["published"].at("meaning").get<std::string>()};
        out.runtime_ms = row.at("runtime_ms").get<double>();
        r.rows.push_back(std::move(out));
    }
    return r;
}

/// One line per table line, entries tab-separated; a starred published
/// value is appended as "(published: 25*)".
inline std::string render_grid(const TableReport& r) {
    std::ostringstream out;
    std::size_t line = 0;
    bool first = true;
    for (const auto& row : r.rows) {
        if (!first && row.line != line) out << '\n';
        else if (!first) out << '\t';
        line = row.line;
        first = false;
        out << row.params.render();
        if (row.published) out << " (published: " << row.published->value << ")";
    }
    if (!first) out << '\n';
    return out.str();
}

/// One row per line with distance provenance and the last trace step.
inline std::string render_rows(const TableReport& r) {
    auto dist = [](const std::optional<DistanceValue>& d) {
        return d ? std::to_string(d->value) + " " + to_string(d->kind) + "/" + to_string(d->method) : std::string("?");
    };
    std::ostringstream out;
    for (const auto& row : r.rows) {
        out << row.params.render(true) << '\t' << to_string(row.source) << "\td1=" << dist(row.params.d1)
            << "\td2=" << dist(row.params.d2);
        if (!row.trace.empty()) out << '\t' << row.trace.back();
        if (row.published) out << "\t(published: " << row.published->value << ")";
        out << '\n';
    }
    return out.str();
}

enum class VerifyLevel { None, Small, All };

inline std::string to_string(VerifyLevel v) {
    switch (v) {
        case VerifyLevel::None: return "none";
        case VerifyLevel::Small: return "small";
        case VerifyLevel::All: return "all";
    }
    return "?";
}

inline VerifyLevel verify_level_from_string(const std::string& s) {
    for (auto v : {VerifyLevel::None, VerifyLevel::Small, VerifyLevel::All})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verification level '" + s + "'");
}

struct TableOptions {
    VerifyLevel verify = VerifyLevel::None;
    /// Bound arithmetic only; no generator matrices are built or read.
    bool params_only = false;
    /// Self-dual binary codes for table 2, keyed by length.
    std::map<std::size_t, LinearCode> self_dual;
    SearchOptions search{};
    bool timing = true;
    std::uint64_t seed = 0;
};

inline json budget_json(const EnumerationBudget& b) {
    return {{"max_codewords", b.max_codewords == std::numeric_limits<std::uint64_t>::max() ? json(nullptr)
                                                                                            : json(b.max_codewords)},
            {"max_seconds", std::isinf(b.max_seconds) ? json(nullptr) : json(b.max_seconds)}};
}

namespace detail {

struct TableSeed {
    std::size_t length = 0;   // length of the seed CSS code
    std::uint32_t q = 2;
    unsigned distance = 0;    // published seed distance, used when not verified
    std::size_t qr_prime = 0; // 0 when the seed is not an extended QR code
};

struct TableEntry {
    std::size_t line = 0;
    std::vector<Rule> rules;  // from the seed
    std::optional<PublishedNote> published;
};

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline ChainOptions chain_options(const TableOptions& opt, std::size_t qr_prime) {
    ChainOptions c;
    c.verify = opt.verify != VerifyLevel::None;
    c.max_log2 = opt.verify == VerifyLevel::All ? std::numeric_limits<double>::infinity() : 25;
    c.search = opt.search;
    if (qr_prime) c.qr_prime = qr_prime;
    return c;
}

/// Seed CSS code for a table line: built and, when allowed, verified;
/// otherwise carrying the published distance tagged Ingested.
inline CssCode table_seed_code(const TableSeed& s, const TableOptions& opt) {
    CssCode css = [&] {
        if (s.qr_prime) return quantum_qr(s.qr_prime, field_of_order(s.q), true);
        auto it = opt.self_dual.find(s.length);
        if (it == opt.self_dual.end())
            throw std::invalid_argument("no generator matrix supplied for the self-dual code of length " +
                                        std::to_string(s.length));
        const auto& c = it->second;
        if (c.n() != s.length || c.field()->q() != s.q || !(dual(c) == c))
            throw std::invalid_argument("supplied code of length " + std::to_string(s.length) +
                                        " is not a self-dual " + std::to_string(s.q) + "-ary code of that length");
        return build_css(c, c, "self-dual " + c.describe());
    }();
    const auto lit = DistanceValue::lower_bound(s.distance, DistanceMethod::Ingested);
    css = with_distances(std::move(css), lit, lit);
    const double lq = std::log2(static_cast<double>(s.q));
    const bool small = static_cast<double>(css.c1.k()) * lq <= 25;
    if (opt.verify == VerifyLevel::All || (opt.verify == VerifyLevel::Small && small)) {
        css.d1.reset();
        css.d2.reset();
        css = compute_distances(std::move(css), opt.search);
    }
    return css;
}

inline QuantumParams table_seed_params(const TableSeed& s) {
    const auto lit = DistanceValue::lower_bound(s.distance, DistanceMethod::Ingested);
    return {s.length, 0, s.q, lit, lit};
}

inline ReportRow to_report_row(const ChainRow& row, std::size_t line, std::size_t column, double ms) {
    return {line, column, row.params, row.source, row.trace.summaries(), std::nullopt, ms};
}

/// Rows for the given entries of one seed. Entries whose rule lists are
/// prefixes of each other share one chain computation.
inline void run_entries(TableReport& report, const TableSeed& seed, const std::vector<TableEntry>& entries,
                        const TableOptions& opt) {
    const std::string note = seed.qr_prime ? "extended QR n=" + std::to_string(seed.qr_prime)
                                           : "self-dual [" + std::to_string(seed.length) + "," +
                                                 std::to_string(seed.length / 2) + "]";
    std::optional<CssCode> code;
    if (!opt.params_only) code = table_seed_code(seed, opt);
    std::map<std::size_t, std::size_t> column_of_line;
    for (const auto& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto chain = opt.params_only
                               ? derive_params_chain(table_seed_params(seed), e.rules, note + " (published distance)")
                               : derive_chain(*code, e.rules, chain_options(opt, seed.qr_prime));
        if (chain.diagnostic) throw std::logic_error(*chain.diagnostic);
        const double ms = opt.timing ? ms_since(t0) : 0.0;
        auto row = to_report_row(chain.rows.back(), e.line, column_of_line[e.line]++, ms);
        row.published = e.published;
        report.rows.push_back(std::move(row));
    }
}

/// A whole table line: the seed followed by `steps` thm32 applications.
inline void run_thm32_line(TableReport& report, std::size_t line, const TableSeed& seed, std::size_t steps,
                           const std::map<std::size_t, std::string>& stars, const std::string& star_meaning,
                           const TableOptions& opt) {
    const std::string note = seed.qr_prime ? "extended QR n=" + std::to_string(seed.qr_prime)
                                           : "self-dual [" + std::to_string(seed.length) + "," +
                                                 std::to_string(seed.length / 2) + "]";
    const std::vector<Rule> rules(steps, Rule::Thm32);
    const auto t0 = std::chrono::steady_clock::now();
    ChainResult chain;
    if (opt.params_only) {
        chain = derive_params_chain(table_seed_params(seed), rules, note + " (published distance)");
    } else {
        chain = derive_chain(table_seed_code(seed, opt), rules, chain_options(opt, seed.qr_prime));
    }
    if (chain.diagnostic) throw std::logic_error(*chain.diagnostic);
    const double ms = opt.timing ? ms_since(t0) : 0.0;
    for (std::size_t c = 0; c < chain.rows.size(); ++c) {
        auto row = to_report_row(chain.rows[c], line, c, c + 1 == chain.rows.size() ? ms : 0.0);
        if (auto it = stars.find(row.params.n); it != stars.end()) row.published = PublishedNote{it->second, star_meaning};
        report.rows.push_back(std::move(row));
    }
}

inline json table_metadata(int which, const TableOptions& opt, double ms) {
    return {{"generator", "cssprop"},
            {"version", CSSPROP_VERSION},
            {"table", which},
            {"seed", opt.seed},
            {"verify", to_string(opt.verify)},
            {"params_only", opt.params_only},
            {"budget", budget_json(opt.search.budget)},
            {"threads", opt.search.threads},
            {"runtime_ms", ms}};
}

}  // namespace detail

/// Binary CSS codes from extended QR codes and their thm32 descendants.
inline TableReport table1(const TableOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    TableReport r;
    r.title = "CSS codes from extended binary QR codes";
    struct Line {
        std::size_t prime;
        unsigned d;
        std::size_t steps;
    };
    const std::vector<Line> lines{{7, 4, 0}, {23, 8, 0}, {137, 22, 0}, {167, 24, 3}, {191, 28, 6}, {199, 32, 3}, {223, 32, 11}};
    const std::map<std::size_t, std::string> stars{{208, "25*"}, {206, "24*"}, {204, "24*"}, {202, "24*"}};
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const detail::TableSeed seed{lines[l].prime + 1, 2, lines[l].d, lines[l].prime};
        detail::run_thm32_line(r, l, seed, lines[l].steps, stars, "published distance above the propagation bound", opt);
    }
    r.metadata = detail::table_metadata(1, opt, opt.timing ? detail::ms_since(t0) : 0.0);
    return r;
}

/// Binary CSS codes from self-dual [136,68], [152,76], [160,80] codes.
inline TableReport table2(const TableOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    TableReport r;
    r.title = "CSS codes from self-dual binary codes";
    const std::vector<std::pair<std::size_t, std::size_t>> lines{{136, 3}, {152, 6}, {160, 3}};
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const detail::TableSeed seed{lines[l].first, 2, 24, 0};
        detail::run_thm32_line(r, l, seed, lines[l].second, {}, {}, opt);
    }
    r.metadata = detail::table_metadata(2, opt, opt.timing ? detail::ms_since(t0) : 0.0);
    return r;
}

/// Ternary CSS codes derived from the extended QR code of length 60.
inline TableReport table3(const TableOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    TableReport r;
    r.title = "Ternary CSS codes from the extended QR code [60,30]_3";
    const detail::TableSeed seed{60, 3, 18, 59};
    const std::string gv = "published distance above the Gilbert-Varshamov bound";
    using enum Rule;
    const std::vector<detail::TableEntry> entries{
        {0, {Thm32, Thm32}, std::nullopt},
        {1, {Thm32, Thm31}, std::nullopt},
        {1, {PairPuncture, Thm32}, std::nullopt},
        {1, {PairPuncture, PairPuncture, Thm31}, std::nullopt},
        {2, {Thm32}, std::nullopt},
        {2, {PairPuncture, Thm31}, std::nullopt},
        {2, {PairPuncture, PairPuncture}, std::nullopt},
        {3, {Thm31}, std::nullopt},
        {3, {PairPuncture}, PublishedNote{"17*", gv}},
        {4, {}, PublishedNote{"18*", gv}},
    };
    detail::run_entries(r, seed, entries, opt);
    r.metadata = detail::table_metadata(3, opt, opt.timing ? detail::ms_since(t0) : 0.0);
    return r;
}

inline TableReport build_table(int which, const TableOptions& opt = {}) {
    switch (which) {
        case 1: return table1(opt);
        case 2: return table2(opt);
        case 3: return table3(opt);
    }
    throw std::invalid_argument("there is no table " + std::to_string(which));
}

/// Report for an arbitrary chain, one line per row.
inline TableReport chain_report(const ChainResult& chain, const std::vector<double>& row_ms = {}) {
    TableReport r;
    r.title = "chain";
    for (std::size_t i = 0; i < chain.rows.size(); ++i)
        r.rows.push_back(detail::to_report_row(chain.rows[i], i, 0, i < row_ms.size() ? row_ms[i] : 0.0));
    if (chain.diagnostic) r.metadata["diagnostic"] = *chain.diagnostic;
    return r;
}

}  // namespace cssprop

#endif
