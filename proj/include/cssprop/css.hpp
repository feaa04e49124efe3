#ifndef CSSPROP_CSS_HPP
#define CSSPROP_CSS_HPP

// CSS codes from nested pairs C2^perp <= C1 and the length-reducing
// propagation rules acting on them.
//
// Rules (coordinates are 1-based in the code the rule is applied to):
//   thm31    puncture C1 and shorten C2 at i:   [[n-1, k, {d1-1, d2}]]
//   thm31s   the same with the roles swapped:   [[n-1, k, {d1, d2-1}]]
//   thm32    thm31 at i, then thm31s at j (j counted after removing i):
//                                               [[n-2, k, {d1-1, d2-1}]]
//   pair     puncture both codes at i:          [[n-1, k+1, {d1-1, d2-1}]]
//
// pair is sound for pure codes: a word of pi_i(C1) outside
// sigma_i(C2^perp) = (pi_i C2)^perp lifts to some u in C1 with u_i != 0 or
// u outside C2^perp, and either way wt(u) >= d1 when d(C1) >= d1. Purity
// means exactly that the full codes C1, C2 meet the stated distances; every
// k = 0 code is pure and all rules here preserve it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linear_code.hpp"
#include "mindist.hpp"
#include "qr.hpp"

namespace cssprop {

enum class Rule { Seed, Thm31, Thm31Swapped, Thm32, PairPuncture, Swap };

inline std::string to_string(Rule r) {
    switch (r) {
        case Rule::Seed: return "seed";
        case Rule::Thm31: return "thm31";
        case Rule::Thm31Swapped: return "thm31s";
        case Rule::Thm32: return "thm32";
        case Rule::PairPuncture: return "pair";
        case Rule::Swap: return "swap";
    }
    return "?";
}

inline Rule rule_from_string(const std::string& s) {
    for (auto r : {Rule::Seed, Rule::Thm31, Rule::Thm31Swapped, Rule::Thm32, Rule::PairPuncture, Rule::Swap})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown rule '" + s + "'");
}

struct QuantumParams {
    std::size_t n = 0, k = 0;
    std::uint32_t q = 2;
    std::optional<DistanceValue> d1, d2;

    std::optional<unsigned> d() const {
        if (!d1 || !d2) return std::nullopt;
        return std::min(d1->value, d2->value);
    }

    /// "[[n,k,d]]_q"; with `asymmetric`, "[[n,k,{d1,d2}]]_q" when they differ.
    std::string render(bool asymmetric = false) const {
        std::string s = "[[" + std::to_string(n) + "," + std::to_string(k);
        if (d1 && d2) {
            if (asymmetric && d1->value != d2->value)
                s += ",{" + std::to_string(d1->value) + "," + std::to_string(d2->value) + "}";
            else
                s += "," + std::to_string(*d());
        }
        return s + "]]_" + std::to_string(q);
    }

    bool operator==(const QuantumParams&) const = default;
};

struct TraceStep {
    Rule rule = Rule::Seed;
    std::vector<std::size_t> coordinates;  // in the code the rule was applied to
    std::vector<std::size_t> original;     // the same positions in seed coordinates
    std::string before, after;
    std::string note;

    std::string summary() const {
        std::string s = to_string(rule);
        if (!original.empty()) {
            s += "(";
            for (std::size_t i = 0; i < original.size(); ++i) s += (i ? "," : "") + std::to_string(original[i]);
            s += ")";
        }
        if (!after.empty()) s += " -> " + after;
        if (!note.empty()) s += (after.empty() ? " " : "; ") + note;
        return s;
    }

    bool operator==(const TraceStep&) const = default;
};

struct PropagationTrace {
    std::vector<TraceStep> steps;

    std::vector<std::string> summaries() const {
        std::vector<std::string> out;
        for (const auto& s : steps) out.push_back(s.summary());
        return out;
    }
    bool operator==(const PropagationTrace&) const = default;
};

/// A CSS code built from C1 and C2 with C2^perp <= C1. Construct through
/// build_css or quantum_qr; the rule functions return new values.
struct CssCode {
    LinearCode c1, c2;
    std::size_t k = 0;
    std::optional<DistanceValue> d1, d2;  // d1 for C1 \ C2^perp, d2 for C2 \ C1^perp
    bool pure = false;
    PropagationTrace trace;
    std::vector<std::size_t> origin;  // seed coordinate of each current coordinate

    std::size_t n() const { return c1.n(); }
    const Field& field() const { return c1.field(); }
    QuantumParams params() const { return {n(), k, field()->q(), d1, d2}; }
};

/// CSS code from C1, C2 (validated nesting); distances start unknown.
inline CssCode build_css(LinearCode c1, LinearCode c2, std::string note = {}) {
    if (c1.n() != c2.n()) throw std::invalid_argument("build_css: lengths differ");
    if (!same_field(c1.field(), c2.field())) throw std::invalid_argument("build_css: fields differ");
    if (!is_subcode(dual(c2), c1)) throw std::invalid_argument("build_css: C2^perp is not contained in C1");
    const std::size_t n = c1.n();
    CssCode css{std::move(c1), std::move(c2), 0, std::nullopt, std::nullopt, false, {}, {}};
    css.k = css.c1.k() + css.c2.k() - n;
    css.pure = css.k == 0;
    css.origin.resize(n);
    for (std::size_t i = 0; i < n; ++i) css.origin[i] = i + 1;
    css.trace.steps.push_back({Rule::Seed, {}, {}, {}, css.params().render(true), std::move(note)});
    return css;
}

/// Attaches given distance facts to the seed (e.g. values taken from the
/// literature, tagged Ingested). Updates the seed trace entry.
inline CssCode with_distances(CssCode css, std::optional<DistanceValue> d1, std::optional<DistanceValue> d2) {
    css.d1 = d1;
    css.d2 = d2;
    if (!css.trace.steps.empty()) css.trace.steps.back().after = css.params().render(true);
    return css;
}

/// Exact distances by enumeration within the budget: minimum weights of C1
/// and C2 when k = 0, relative weights of C1 \ C2^perp and C2 \ C1^perp
/// otherwise. Budget exhaustion leaves LowerBound values.
inline CssCode compute_distances(CssCode css, const SearchOptions& options = {}, Engine engine = Engine::Auto) {
    auto merge = [](const std::optional<DistanceValue>& old, const DistanceValue& fresh) {
        return old ? strongest(*old, fresh) : fresh;
    };
    if (css.k == 0) {
        if (css.c1.k() > 0) css.d1 = merge(css.d1, min_weight(css.c1, options, engine));
        if (css.c2.k() > 0) {
            if (css.c2 == css.c1 && css.d1)
                css.d2 = merge(css.d2, *css.d1);
            else
                css.d2 = merge(css.d2, min_weight(css.c2, options, engine));
        }
        css.pure = true;
    } else {
        const auto c2_perp = dual(css.c2), c1_perp = dual(css.c1);
        css.d1 = merge(css.d1, relative_min_weight(css.c1, c2_perp, options));
        css.d2 = merge(css.d2, relative_min_weight(css.c2, c1_perp, options));
        auto meets = [&](const LinearCode& c, unsigned d) {
            return c.k() == 0 || min_weight(c, options, engine).value >= d;
        };
        css.pure = meets(c2_perp, css.d1->value) && meets(c1_perp, css.d2->value);
    }
    if (css.trace.steps.size() == 1 && css.trace.steps[0].rule == Rule::Seed)
        css.trace.steps[0].after = css.params().render(true);
    return css;
}

namespace detail {

inline DistanceValue derived(unsigned v) { return DistanceValue::lower_bound(v, DistanceMethod::TheoremDerived); }

inline std::optional<DistanceValue> keep_as_bound(const std::optional<DistanceValue>& d) {
    if (!d) return std::nullopt;
    return derived(d->value);
}

inline void require_distance(const std::optional<DistanceValue>& d, const char* rule, const char* which) {
    if (!d || d->value <= 1)
        throw std::invalid_argument(std::string(rule) + " needs " + which + " > 1 to be known");
}

/// Replaces C1, C2 and re-validates nesting and dimension.
inline CssCode replace_codes(const CssCode& css, LinearCode c1, LinearCode c2, std::size_t expected_k, std::size_t removed,
                             const char* rule) {
    if (!is_subcode(dual(c2), c1))
        throw std::logic_error(std::string(rule) + ": nesting lost (this should be impossible)");
    CssCode out = css;
    out.c1 = std::move(c1);
    out.c2 = std::move(c2);
    out.k = out.c1.k() + out.c2.k() - out.c1.n();
    if (out.k != expected_k)
        throw std::logic_error(std::string(rule) + ": dimension changed from the expected " + std::to_string(expected_k));
    out.origin.erase(out.origin.begin() + static_cast<std::ptrdiff_t>(removed - 1));
    return out;
}

inline CssCode swapped(const CssCode& css) {
    CssCode out = css;
    std::swap(out.c1, out.c2);
    std::swap(out.d1, out.d2);
    return out;
}

inline CssCode thm31(const CssCode& css, std::size_t i) {
    require_distance(css.d1, "thm31", "d1");
    css.c1.check_index(i);
    if (css.n() < 2) throw std::invalid_argument("thm31: length must be at least 2");
    auto out = replace_codes(css, puncture(css.c1, i), shorten(css.c2, i), css.k, i, "thm31");
    out.d1 = derived(css.d1->value - 1);
    out.d2 = keep_as_bound(css.d2);
    return out;
}

inline void record(CssCode& out, const CssCode& before, Rule rule, std::vector<std::size_t> coords,
                   std::vector<std::size_t> original, std::string note = {}) {
    out.trace.steps.push_back(
        {rule, std::move(coords), std::move(original), before.params().render(true), out.params().render(true), std::move(note)});
}

}  // namespace detail

/// Puncture C1 and shorten C2 at i: [[n-1, k, {d1-1, d2}]].
inline CssCode reduce_one(const CssCode& css, std::size_t i) {
    auto out = detail::thm31(css, i);
    detail::record(out, css, Rule::Thm31, {i}, {css.origin[i - 1]});
    return out;
}

/// Shorten C1 and puncture C2 at i: [[n-1, k, {d1, d2-1}]].
inline CssCode reduce_one_swapped(const CssCode& css, std::size_t i) {
    auto out = detail::swapped(detail::thm31(detail::swapped(css), i));
    detail::record(out, css, Rule::Thm31Swapped, {i}, {css.origin[i - 1]});
    return out;
}

inline CssCode swap_roles(const CssCode& css) {
    auto out = detail::swapped(css);
    detail::record(out, css, Rule::Swap, {}, {});
    return out;
}

/// thm31 at i, then thm31 with swapped roles at j, where j indexes the
/// intermediate length n-1 code: [[n-2, k, {d1-1, d2-1}]].
inline CssCode reduce_two(const CssCode& css, std::size_t i, std::size_t j) {
    detail::require_distance(css.d1, "thm32", "d1");
    detail::require_distance(css.d2, "thm32", "d2");
    auto mid = detail::thm31(css, i);
    mid.c1.check_index(j);
    const std::size_t j_original = mid.origin[j - 1];
    auto out = detail::swapped(detail::thm31(detail::swapped(mid), j));
    detail::record(out, css, Rule::Thm32, {i, j}, {css.origin[i - 1], j_original});
    return out;
}

/// Puncture both codes at i: [[n-1, k+1, {d1-1, d2-1}]]. Needs a pure code.
inline CssCode pair_puncture(const CssCode& css, std::size_t i) {
    detail::require_distance(css.d1, "pair", "d1");
    detail::require_distance(css.d2, "pair", "d2");
    css.c1.check_index(i);
    if (!css.pure) throw std::invalid_argument("pair: the code is not known to be pure");
    for (const auto* c : {&css.c1, &css.c2}) {
        if (c->coordinate_is_zero(i))
            throw std::invalid_argument("pair: coordinate " + std::to_string(i) + " is identically zero");
        if (c->has_unit_word(i))
            throw std::invalid_argument("pair: weight-1 word at coordinate " + std::to_string(i));
    }
    auto out = detail::replace_codes(css, puncture(css.c1, i), puncture(css.c2, i), css.k + 1, i, "pair");
    out.d1 = detail::derived(css.d1->value - 1);
    out.d2 = detail::derived(css.d2->value - 1);
    detail::record(out, css, Rule::PairPuncture, {i}, {css.origin[i - 1]});
    return out;
}

/// Smallest coordinate at which pair_puncture is allowed, if any.
inline std::optional<std::size_t> first_pair_coordinate(const CssCode& css) {
    for (std::size_t i = 1; i <= css.n(); ++i) {
        bool ok = true;
        for (const auto* c : {&css.c1, &css.c2})
            ok = ok && !c->coordinate_is_zero(i) && !c->has_unit_word(i);
        if (ok) return i;
    }
    return std::nullopt;
}

/// Re-applies the recorded steps of `trace` (after its seed entry) to `seed`.
inline CssCode replay(const CssCode& seed, const PropagationTrace& trace) {
    CssCode css = seed;
    for (const auto& step : trace.steps) {
        switch (step.rule) {
            case Rule::Seed: break;
            case Rule::Thm31: css = reduce_one(css, step.coordinates.at(0)); break;
            case Rule::Thm31Swapped: css = reduce_one_swapped(css, step.coordinates.at(0)); break;
            case Rule::Thm32: css = reduce_two(css, step.coordinates.at(0), step.coordinates.at(1)); break;
            case Rule::PairPuncture: css = pair_puncture(css, step.coordinates.at(0)); break;
            case Rule::Swap: css = swap_roles(css); break;
        }
    }
    return css;
}

/// Quantum QR code: [[n,1,d]] from (Q, Q) or (Q, N), or with `extended`
/// [[n+1,0,d+1]] from C1 = Q^ and C2 = C1^perp.
inline CssCode quantum_qr(const QrFamily& fam, bool extended) {
    const std::string note = std::string(extended ? "extended " : "") + "QR n=" + std::to_string(fam.n) +
                             " q=" + std::to_string(fam.field->q());
    if (extended) {
        if (!fam.Qext) throw std::invalid_argument("quantum_qr: family has no extended codes");
        return build_css(*fam.Qext, fam.n % 4 == 3 ? *fam.Qext : *fam.Next, note);
    }
    return build_css(fam.Q, fam.n % 4 == 3 ? fam.Q : fam.N, note);
}

inline CssCode quantum_qr(std::size_t n, const Field& field, bool extended) {
    return quantum_qr(extended ? extended_qr_family(n, field) : qr_family(n, field), extended);
}

struct SingletonSlack {
    long long asymmetric = 0;  // n + 2 - (k + d1 + d2)
    long long symmetric = 0;   // n + 2 - (k + 2 min(d1, d2))
};

inline SingletonSlack singleton_check(const QuantumParams& p) {
    if (!p.d1 || !p.d2) throw std::invalid_argument("singleton_check: distances unknown");
    const auto n = static_cast<long long>(p.n), k = static_cast<long long>(p.k);
    const long long a = p.d1->value, b = p.d2->value;
    return {n + 2 - (k + a + b), n + 2 - (k + 2 * std::min(a, b))};
}

/// True when the coordinate relabelling tau (on seed labels 0..n, seed
/// coordinate = label + 1) maps C1 onto C2 exactly.
inline bool mirrored_by(const CssCode& css, const std::vector<std::size_t>& tau) {
    const std::size_t n = css.n();
    std::vector<std::size_t> position_of_label(tau.size(), n);
    for (std::size_t p = 0; p < n; ++p) position_of_label.at(css.origin[p] - 1) = p;
    std::vector<std::size_t> source_of(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t img = position_of_label.at(tau.at(css.origin[p] - 1));
        if (img == n) return false;
        source_of[img] = p;
    }
    return permute_coordinates(css.c1, source_of) == css.c2;
}

enum class RowSource { TheoremBound, Verified, Ingested };

inline std::string to_string(RowSource s) {
    switch (s) {
        case RowSource::TheoremBound: return "TheoremBound";
        case RowSource::Verified: return "Verified";
        case RowSource::Ingested: return "Ingested";
    }
    return "?";
}

inline RowSource row_source_from_string(const std::string& s) {
    for (auto r : {RowSource::TheoremBound, RowSource::Verified, RowSource::Ingested})
        if (to_string(r) == s) return r;
    throw std::invalid_argument("unknown row source '" + s + "'");
}

inline RowSource row_source(const QuantumParams& p) {
    if (p.d1 && p.d2 && p.d1->verified() && p.d2->verified()) return RowSource::Verified;
    auto ingested = [](const std::optional<DistanceValue>& d) { return d && d->method == DistanceMethod::Ingested; };
    if (ingested(p.d1) || ingested(p.d2)) return RowSource::Ingested;
    return RowSource::TheoremBound;
}

struct ChainOptions {
    bool verify = false;
    /// Enumerate only when q^k1 and q^k2 stay below 2^max_log2.
    double max_log2 = 25;
    SearchOptions search{};
    /// Prime n when the seed is an extended QR code of length n+1; thm32
    /// positions then come from the involution x -> -1/x.
    std::optional<std::size_t> qr_prime;
    /// Raise earlier lower bounds to later verified values along thm32 runs.
    bool monotone = true;
};

struct ChainRow {
    QuantumParams params;
    RowSource source = RowSource::TheoremBound;
    PropagationTrace trace;
    bool mirrored = false;  // d2 taken from d1 through the involution
};

struct ChainResult {
    std::vector<ChainRow> rows;  // rows[0] is the seed
    std::optional<std::string> diagnostic;
    std::optional<CssCode> last;
};

namespace detail {

inline bool small_enough(const CssCode& css, double max_log2) {
    const double lq = std::log2(static_cast<double>(css.field()->q()));
    return static_cast<double>(css.c1.k()) * lq <= max_log2 && static_cast<double>(css.c2.k()) * lq <= max_log2;
}

inline std::size_t position_of(const CssCode& css, std::size_t original) {
    for (std::size_t p = 0; p < css.origin.size(); ++p)
        if (css.origin[p] == original) return p + 1;
    return 0;
}

inline void raise_monotone(std::vector<ChainRow>& rows, const std::vector<Rule>& rules) {
    if (!std::all_of(rules.begin(), rules.end(), [](Rule r) { return r == Rule::Thm32; })) return;
    unsigned floor1 = 0, floor2 = 0;
    for (std::size_t r = rows.size(); r-- > 1;) {
        auto& p = rows[r].params;
        if (p.d1 && !p.d1->verified() && p.d1->value < floor1) p.d1 = derived(floor1);
        if (p.d2 && !p.d2->verified() && p.d2->value < floor2) p.d2 = derived(floor2);
        if (p.d1 && p.d1->verified()) floor1 = std::max(floor1, p.d1->value);
        if (p.d2 && p.d2->verified()) floor2 = std::max(floor2, p.d2->value);
        rows[r].source = row_source(p);
    }
}

}  // namespace detail

/// Applies `rules` in order starting from `seed`, one output row per rule.
/// thm32 picks involution pairs for extended QR seeds and the first two
/// coordinates otherwise; thm31/thm31s use coordinate 1, pair the first
/// admissible coordinate. A failing hypothesis ends the chain early with a
/// diagnostic.
inline ChainResult derive_chain(const CssCode& seed, const std::vector<Rule>& rules, const ChainOptions& opt = {}) {
    ChainResult result;
    std::optional<InvolutionPlan> plan;
    if (opt.qr_prime) {
        if (seed.n() != *opt.qr_prime + 1) throw std::invalid_argument("derive_chain: seed length does not match the QR prime");
        const std::size_t n = *opt.qr_prime;
        const std::size_t fixed = n % 4 == 1 ? 2 : 0;
        plan = involution_plan(n, (n + 1 - fixed) / 2);
    }
    auto verify = [&](CssCode css, ChainRow& row) {
        if (opt.verify && detail::small_enough(css, opt.max_log2)) {
            if (plan && css.k == 0 && css.c1.k() > 0 && mirrored_by(css, plan->tau)) {
                auto d = min_weight(css.c1, opt.search);
                css.d1 = d;
                css.d2 = d;
                row.mirrored = true;
            } else {
                css = compute_distances(std::move(css), opt.search);
            }
        }
        row.params = css.params();
        row.source = row_source(row.params);
        row.trace = css.trace;
        return css;
    };

    CssCode css = seed;
    {
        ChainRow row;
        css = verify(css, row);
        result.rows.push_back(std::move(row));
    }
    for (Rule rule : rules) {
        try {
            switch (rule) {
                case Rule::Thm31: css = reduce_one(css, 1); break;
                case Rule::Thm31Swapped: css = reduce_one_swapped(css, 1); break;
                case Rule::Swap: css = swap_roles(css); break;
                case Rule::PairPuncture: {
                    auto i = first_pair_coordinate(css);
                    if (!i) throw std::invalid_argument("pair: no admissible coordinate");
                    css = pair_puncture(css, *i);
                    break;
                }
                case Rule::Thm32: {
                    std::size_t i = 1, j = 1;
                    if (plan) {
                        // C1 is punctured at tau(rep) and shortened at rep.
                        bool found = false;
                        for (std::size_t s = 0; s < plan->shorten_labels.size() && !found; ++s) {
                            const auto pi = detail::position_of(css, InvolutionPlan::coordinate(plan->puncture_labels[s]));
                            const auto pj = detail::position_of(css, InvolutionPlan::coordinate(plan->shorten_labels[s]));
                            if (!pi || !pj) continue;
                            i = pi;
                            j = pj > pi ? pj - 1 : pj;
                            found = true;
                        }
                        if (!found) throw std::invalid_argument("thm32: involution pairs exhausted");
                    }
                    css = reduce_two(css, i, j);
                    break;
                }
                case Rule::Seed: throw std::invalid_argument("seed is not a rule");
            }
        } catch (const std::invalid_argument& e) {
            result.diagnostic = "chain stopped before " + to_string(rule) + ": " + e.what();
            break;
        }
        ChainRow row;
        css = verify(css, row);
        result.rows.push_back(std::move(row));
    }
    if (opt.monotone) detail::raise_monotone(result.rows, rules);
    result.last = std::move(css);
    return result;
}

/// Parameter arithmetic only, for seeds whose generator matrices are not at
/// hand. `pure` defaults to k == 0.
inline ChainResult derive_params_chain(const QuantumParams& seed, const std::vector<Rule>& rules, std::string note = {},
                                       std::optional<bool> pure = std::nullopt) {
    ChainResult result;
    bool is_pure = pure.value_or(seed.k == 0);
    QuantumParams p = seed;
    PropagationTrace trace;
    trace.steps.push_back({Rule::Seed, {}, {}, {}, p.render(true), std::move(note)});
    result.rows.push_back({p, row_source(p), trace, false});
    for (Rule rule : rules) {
        QuantumParams next = p;
        auto need = [&](const std::optional<DistanceValue>& d, const char* which) {
            if (!d || d->value <= 1) {
                result.diagnostic = "chain stopped before " + to_string(rule) + ": needs " + which + " > 1";
                return false;
            }
            return true;
        };
        bool ok = true;
        switch (rule) {
            case Rule::Thm31:
                ok = need(p.d1, "d1") && p.n >= 2;
                if (ok) {
                    next.n -= 1;
                    next.d1 = detail::derived(p.d1->value - 1);
                    next.d2 = detail::keep_as_bound(p.d2);
                }
                break;
            case Rule::Thm31Swapped:
                ok = need(p.d2, "d2") && p.n >= 2;
                if (ok) {
                    next.n -= 1;
                    next.d1 = detail::keep_as_bound(p.d1);
                    next.d2 = detail::derived(p.d2->value - 1);
                }
                break;
            case Rule::Thm32:
                ok = need(p.d1, "d1") && need(p.d2, "d2") && p.n >= 3;
                if (ok) {
                    next.n -= 2;
                    next.d1 = detail::derived(p.d1->value - 1);
                    next.d2 = detail::derived(p.d2->value - 1);
                }
                break;
            case Rule::PairPuncture:
                ok = need(p.d1, "d1") && need(p.d2, "d2") && p.n >= 2;
                if (ok && !is_pure) {
                    result.diagnostic = "chain stopped before pair: the code is not known to be pure";
                    ok = false;
                }
                if (ok) {
                    next.n -= 1;
                    next.k += 1;
                    next.d1 = detail::derived(p.d1->value - 1);
                    next.d2 = detail::derived(p.d2->value - 1);
                }
                break;
            case Rule::Swap: std::swap(next.d1, next.d2); break;
            case Rule::Seed: ok = false; result.diagnostic = "seed is not a rule"; break;
        }
        if (!ok) {
            if (!result.diagnostic) result.diagnostic = "chain stopped before " + to_string(rule) + ": length too small";
            break;
        }
        trace.steps.push_back({rule, {}, {}, p.render(true), next.render(true), {}});
        p = next;
        result.rows.push_back({p, row_source(p), trace, false});
    }
    return result;
}

}  // namespace cssprop

#endif
