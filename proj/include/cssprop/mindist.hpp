#ifndef CSSPROP_MINDIST_HPP
#define CSSPROP_MINDIST_HPP

// Exact minimum-weight computation.
//
//  * min_weight_brute     all codewords up to scalars, modular Gray-code order
//  * min_weight_bz        Brouwer-Zimmermann over disjoint information sets
//  * relative_min_weight  least weight in C \ S for a proper subcode S
//
// All engines fan out over a worker pool; workers share only a monotone
// "best so far" value, so results do not depend on the thread count.
// Running out of budget is not an error: the result degrades to a
// LowerBound that is provably <= the true distance.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linear_code.hpp"
#include "packed.hpp"

namespace cssprop {

struct EnumerationBudget {
    std::uint64_t max_codewords = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();

    void validate() const {
        if (max_codewords == 0 || !(max_seconds > 0))
            throw std::invalid_argument("EnumerationBudget: limits must be positive");
    }

    /// Unlimited unless CSSPROP_BUDGET_SECONDS is set.
    static EnumerationBudget from_env() {
        EnumerationBudget b;
        if (const char* env = std::getenv("CSSPROP_BUDGET_SECONDS")) {
            const double s = std::strtod(env, nullptr);
            if (s > 0) b.max_seconds = s;
        }
        return b;
    }
};

enum class DistanceKind { Verified, LowerBound };
enum class DistanceMethod { BruteForce, BrouwerZimmermann, TheoremDerived, Ingested };

inline std::string to_string(DistanceKind k) { return k == DistanceKind::Verified ? "Verified" : "LowerBound"; }

inline std::string to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::BruteForce: return "BruteForce";
        case DistanceMethod::BrouwerZimmermann: return "BrouwerZimmermann";
        case DistanceMethod::TheoremDerived: return "TheoremDerived";
        case DistanceMethod::Ingested: return "Ingested";
    }
    return "?";
}

inline DistanceKind distance_kind_from_string(const std::string& s) {
    if (s == "Verified") return DistanceKind::Verified;
    if (s == "LowerBound") return DistanceKind::LowerBound;
    throw std::invalid_argument("unknown distance kind '" + s + "'");
}

inline DistanceMethod distance_method_from_string(const std::string& s) {
    for (auto m : {DistanceMethod::BruteForce, DistanceMethod::BrouwerZimmermann, DistanceMethod::TheoremDerived,
                   DistanceMethod::Ingested})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown distance method '" + s + "'");
}

/// A minimum-distance datum with its provenance. Verified values come only
/// from completed BruteForce or BrouwerZimmermann runs.
struct DistanceValue {
    unsigned value = 1;
    DistanceKind kind = DistanceKind::LowerBound;
    DistanceMethod method = DistanceMethod::TheoremDerived;

    bool verified() const { return kind == DistanceKind::Verified; }

    static DistanceValue verified_by(unsigned v, DistanceMethod m) {
        if (m != DistanceMethod::BruteForce && m != DistanceMethod::BrouwerZimmermann)
            throw std::invalid_argument("DistanceValue: only enumeration engines verify distances");
        return {v, DistanceKind::Verified, m};
    }
    static DistanceValue lower_bound(unsigned v, DistanceMethod m) { return {std::max(v, 1u), DistanceKind::LowerBound, m}; }

    bool operator==(const DistanceValue&) const = default;
};

/// Keeps the stronger of two facts about the same distance.
inline DistanceValue strongest(const DistanceValue& a, const DistanceValue& b) {
    if (a.verified()) return a;
    if (b.verified()) return b;
    return b.value > a.value ? b : a;
}

enum class Engine { Auto, Brute, BZ };

struct SearchOptions {
    EnumerationBudget budget{};
    unsigned threads = 0;
};

struct SearchStats {
    std::uint64_t codewords = 0;
    double seconds = 0;
    std::optional<unsigned> best_found;  // least weight actually seen
    bool aborted = false;
};

namespace detail {

inline constexpr std::uint64_t kChargeChunk = 4096;

class SearchControl {
public:
    SearchControl(const EnumerationBudget& budget, unsigned floor)
        : budget_(budget), floor_(floor), start_(std::chrono::steady_clock::now()) {
        budget_.validate();
    }

    unsigned best() const { return best_.load(std::memory_order_relaxed); }
    bool stopped() const { return stop_.load(std::memory_order_relaxed); }
    bool floor_hit() const { return floor_hit_.load(); }
    bool budget_hit() const { return budget_hit_.load(); }
    std::uint64_t codewords() const { return count_.load(); }
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void offer(unsigned w) {
        unsigned cur = best_.load(std::memory_order_relaxed);
        while (w < cur && !best_.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
        }
        if (w <= floor_) {
            floor_hit_.store(true);
            stop_.store(true);
        }
    }

    /// Accounts for `n` visited codewords; false once workers should stop.
    bool charge(std::uint64_t n) {
        const std::uint64_t total = count_.fetch_add(n, std::memory_order_relaxed) + n;
        if (total > budget_.max_codewords || elapsed() > budget_.max_seconds) {
            budget_hit_.store(true);
            stop_.store(true);
        }
        return !stopped();
    }

private:
    EnumerationBudget budget_;
    unsigned floor_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<unsigned> best_{std::numeric_limits<unsigned>::max()};
    std::atomic<std::uint64_t> count_{0};
    std::atomic<bool> stop_{false};
    std::atomic<bool> floor_hit_{false};
    std::atomic<bool> budget_hit_{false};
};

// Visits cur + sum_j x_j gens[j] for all x in GF(p)^m, cur first, each later
// word one generator addition away (modular p-ary Gray code). Returns false
// if stopped before completion.
template <class Ops>
bool gray_scan(const Ops& ops, std::uint64_t* cur, const PackedRows<Ops>& gens, std::size_t m, unsigned p,
               SearchControl& ctl) {
    unsigned best = ctl.best();
    std::uint64_t pending = 0;
    auto visit = [&] {
        const unsigned w = ops.weight(cur);
        if (w < best) {
            best = w;
            ctl.offer(w);
        }
        if (++pending == kChargeChunk) {
            pending = 0;
            if (!ctl.charge(kChargeChunk)) return false;
            best = std::min(best, ctl.best());
        }
        return true;
    };
    if (!visit()) return false;
    if (p == 2) {
        const std::uint64_t total = std::uint64_t{1} << m;
        for (std::uint64_t t = 1; t < total; ++t) {
            ops.add(cur, gens[static_cast<std::size_t>(std::countr_zero(t))]);
            if (!visit()) return false;
        }
    } else {
        std::vector<unsigned> digits(m, 0);
        for (;;) {
            std::size_t j = 0;
            while (j < m && ++digits[j] == p) digits[j++] = 0;
            if (j == m) break;
            ops.add(cur, gens[j]);
            if (!visit()) return false;
        }
    }
    ctl.charge(pending);
    return true;
}

struct EnumerationOutcome {
    unsigned best = std::numeric_limits<unsigned>::max();
    bool complete = false;
    std::uint64_t codewords = 0;
    double seconds = 0;
};

// Enumerates gens[top] + sum_{j<top} x_j gens[j] for top in [first_top, m),
// i.e. every vector of span(gens) \ span(gens[0..first_top)) up to GF(p)
// scalars. `floor` is a proven lower bound that allows an early exit.
template <class Ops>
EnumerationOutcome enumerate_projective(const Ops& ops, const PackedRows<Ops>& gens, std::size_t first_top,
                                        unsigned p, unsigned floor, const SearchOptions& options) {
    const std::size_t m = gens.size();
    const std::size_t stride = ops.stride();
    if (m >= 64) throw std::invalid_argument("brute-force enumeration over more than 63 digits is not supported");

    // mult[j * (p-1) + d - 1] = d * gens[j]
    PackedRows<Ops> mult(ops);
    for (std::size_t j = 0; j < m; ++j) {
        for (unsigned d = 1; d < p; ++d) {
            std::uint64_t* slot = mult.push_zero();
            for (unsigned t = 0; t < d; ++t) ops.add(slot, gens[j]);
        }
    }

    const std::size_t chunk_digits = p == 2 ? 16 : (p == 3 ? 10 : std::max<std::size_t>(1, 16 / std::bit_width(p)));
    struct Task {
        std::size_t top, gray_digits;
        std::uint64_t prefix;
    };
    std::vector<Task> tasks;
    for (std::size_t top = first_top; top < m; ++top) {
        std::size_t gray = std::min(top, chunk_digits);
        std::uint64_t count = 1;
        std::size_t hi = top - gray;
        for (std::size_t i = 0; i < hi; ++i) {
            if (count * p > (1u << 20)) {
                gray += hi - i;
                break;
            }
            count *= p;
        }
        for (std::uint64_t idx = 0; idx < count; ++idx) tasks.push_back({top, gray, idx});
    }

    SearchControl ctl(options.budget, floor);
    std::atomic<bool> incomplete{false};
    const unsigned threads = tasks.size() < 4 ? 1 : resolve_threads(options.threads);
    run_tasks(tasks.size(), threads, [&](std::size_t t) {
        if (ctl.stopped()) {
            incomplete.store(true);
            return;
        }
        const Task& task = tasks[t];
        std::vector<std::uint64_t> cur(gens[task.top], gens[task.top] + stride);
        std::uint64_t idx = task.prefix;
        for (std::size_t pos = task.gray_digits; pos < task.top; ++pos) {
            const unsigned d = static_cast<unsigned>(idx % p);
            idx /= p;
            if (d) ops.add(cur.data(), mult[pos * (p - 1) + d - 1]);
        }
        if (!gray_scan(ops, cur.data(), gens, task.gray_digits, p, ctl)) incomplete.store(true);
    });

    EnumerationOutcome out;
    out.best = ctl.best();
    out.complete = !incomplete.load() || ctl.floor_hit();
    out.codewords = ctl.codewords();
    out.seconds = ctl.elapsed();
    return out;
}

// Rows of `rows` multiplied by each prime-field basis element of GF(q), so
// GF(p)-combinations of the result span the same GF(q)-space.
inline std::vector<std::vector<elem_t>> expand_over_prime_field(const FieldSpec& f,
                                                                const std::vector<std::vector<elem_t>>& rows) {
    std::vector<std::vector<elem_t>> out;
    for (const auto& r : rows) {
        elem_t basis = 1;
        for (std::uint32_t t = 0; t < f.m(); ++t) {
            std::vector<elem_t> v(r.size());
            for (std::size_t j = 0; j < r.size(); ++j) v[j] = f.mul(basis, r[j]);
            out.push_back(std::move(v));
            basis *= f.p();
        }
    }
    return out;
}

inline std::vector<std::vector<elem_t>> generator_rows(const LinearCode& c) {
    std::vector<std::vector<elem_t>> rows;
    for (std::size_t r = 0; r < c.k(); ++r) {
        const auto g = c.generator().row(r);
        rows.emplace_back(g.begin(), g.end());
    }
    return rows;
}

inline void fill_stats(SearchStats* stats, const EnumerationOutcome& o) {
    if (!stats) return;
    stats->codewords = o.codewords;
    stats->seconds = o.seconds;
    if (o.best != std::numeric_limits<unsigned>::max()) stats->best_found = o.best;
    else stats->best_found.reset();
    stats->aborted = !o.complete;
}

// Enumerates the projective span of `low` + `high` rows excluding span(low).
inline EnumerationOutcome enumerate_outside(const LinearCode& shape, const std::vector<std::vector<elem_t>>& low,
                                            const std::vector<std::vector<elem_t>>& high,
                                            const SearchOptions& options) {
    const auto& f = *shape.field();
    auto lo = expand_over_prime_field(f, low);
    auto hi = expand_over_prime_field(f, high);
    return with_ops(f, shape.n(), [&](auto ops) {
        PackedRows<decltype(ops)> gens(ops);
        for (const auto& r : lo) gens.push(r);
        for (const auto& r : hi) gens.push(r);
        return enumerate_projective(ops, gens, lo.size(), f.p(), 1, options);
    });
}

}  // namespace detail

/// Exact minimum weight by exhaustive enumeration of all q^k - 1 non-zero codewords.
inline DistanceValue min_weight_brute(const LinearCode& c, const SearchOptions& options = {},
                                      SearchStats* stats = nullptr) {
    if (c.k() == 0) throw std::invalid_argument("min_weight: the zero code has no minimum weight");
    const auto out = detail::enumerate_outside(c, {}, detail::generator_rows(c), options);
    detail::fill_stats(stats, out);
    if (out.complete) return DistanceValue::verified_by(out.best, DistanceMethod::BruteForce);
    return DistanceValue::lower_bound(1, DistanceMethod::BruteForce);
}

/// Least weight of a codeword of c1 outside the proper subcode `sub`.
inline DistanceValue relative_min_weight(const LinearCode& c1, const LinearCode& sub, const SearchOptions& options = {},
                                         SearchStats* stats = nullptr) {
    if (!is_subcode(sub, c1)) throw std::invalid_argument("relative_min_weight: not a subcode");
    if (sub.k() == c1.k()) throw std::invalid_argument("relative_min_weight: subcode equals the code (empty difference)");

    // Complete a basis of sub to a basis of c1.
    Matrix span = sub.generator();
    std::vector<std::vector<elem_t>> ext;
    for (std::size_t r = 0; r < c1.k() && sub.k() + ext.size() < c1.k(); ++r) {
        const auto row = c1.generator().row(r);
        Matrix trial = span;
        trial.append_row(row);
        Matrix reduced = trial;
        reduced.rref();
        if (reduced.rows() > span.rows()) {
            ext.emplace_back(row.begin(), row.end());
            span = std::move(trial);
        }
    }
    const auto out = detail::enumerate_outside(c1, detail::generator_rows(sub), ext, options);
    detail::fill_stats(stats, out);
    if (out.complete) return DistanceValue::verified_by(out.best, DistanceMethod::BruteForce);
    return DistanceValue::lower_bound(1, DistanceMethod::BruteForce);
}

namespace detail {

struct InformationSet {
    Matrix systematic;                 // identity on `pivots`
    std::vector<std::size_t> pivots;   // one per generator row
    std::size_t fresh = 0;             // pivots not used by earlier sets
};

// Greedy disjoint information sets: each pass pivots on unused columns in
// index order first, then completes with used columns.
inline std::vector<InformationSet> information_sets(const LinearCode& c) {
    const std::size_t n = c.n();
    std::vector<bool> used(n, false);
    Matrix work = c.generator();
    std::vector<InformationSet> sets;
    for (;;) {
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) order.push_back(j);
        const std::size_t unused = order.size();
        if (unused == 0) break;
        for (std::size_t j = 0; j < n; ++j)
            if (used[j]) order.push_back(j);
        auto pivots = work.rref(order);
        std::size_t fresh = 0;
        for (auto p : pivots)
            if (!used[p]) ++fresh;
        if (fresh == 0) break;
        for (auto p : pivots) used[p] = true;
        sets.push_back({work, pivots, fresh});
    }
    return sets;
}

inline unsigned bz_lower_bound(const std::vector<InformationSet>& sets, std::size_t k, std::size_t w,
                               std::size_t completed) {
    // Sets [0, completed) are done through message weight w, the rest through w - 1.
    unsigned total = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        const std::size_t done = j < completed ? w : w - 1;
        const std::size_t overlap = k - sets[j].fresh;
        if (done + 1 > overlap) total += static_cast<unsigned>(done + 1 - overlap);
    }
    return total;
}

}  // namespace detail

/// Brouwer-Zimmermann minimum weight.
inline DistanceValue min_weight_bz(const LinearCode& c, const SearchOptions& options = {},
                                   SearchStats* stats = nullptr) {
    if (c.k() == 0) throw std::invalid_argument("min_weight: the zero code has no minimum weight");
    const auto& f = *c.field();
    const std::size_t k = c.k();
    const unsigned q = f.q();
    const auto sets = detail::information_sets(c);

    return detail::with_ops(f, c.n(), [&](auto ops) {
        using Ops = decltype(ops);
        const std::size_t stride = ops.stride();
        detail::SearchControl ctl(options.budget, 0);

        // rows[j][r * (q-1) + s] = (s+1-th non-zero scalar) * row r of set j
        std::vector<detail::PackedRows<Ops>> rows;
        for (const auto& set : sets) {
            detail::PackedRows<Ops> packed(ops);
            for (std::size_t r = 0; r < k; ++r) {
                const auto g = set.systematic.row(r);
                for (elem_t s = 1; s < q; ++s) {
                    std::vector<elem_t> v(g.size());
                    for (std::size_t t = 0; t < g.size(); ++t) v[t] = f.mul(s, g[t]);
                    packed.push(v);
                }
            }
            rows.push_back(std::move(packed));
        }

        unsigned lower = detail::bz_lower_bound(sets, k, 1, 0);  // weight-0 round
        bool done = false;
        bool aborted = false;
        const unsigned threads = resolve_threads(options.threads);

        for (std::size_t w = 1; w <= k && !done && !aborted; ++w) {
            for (std::size_t j = 0; j < sets.size() && !done; ++j) {
                const auto& R = rows[j];
                // Tasks: first position (coefficient 1) and, for w >= 2, the second position and its scalar.
                struct Task {
                    std::size_t i1, i2, s2;
                };
                std::vector<Task> tasks;
                for (std::size_t i1 = 0; i1 + w <= k; ++i1) {
                    if (w == 1) {
                        tasks.push_back({i1, 0, 0});
                        continue;
                    }
                    for (std::size_t i2 = i1 + 1; i2 + (w - 1) <= k; ++i2)
                        for (std::size_t s2 = 0; s2 + 1 < q; ++s2) tasks.push_back({i1, i2, s2});
                }
                std::atomic<bool> incomplete{false};
                const unsigned use_threads = tasks.size() < 8 ? 1 : threads;
                run_tasks(tasks.size(), use_threads, [&](std::size_t t) {
                    if (ctl.stopped()) {
                        incomplete.store(true);
                        return;
                    }
                    const Task& task = tasks[t];
                    std::vector<std::uint64_t> acc((w + 1) * stride, 0);
                    auto level = [&](std::size_t d) { return acc.data() + d * stride; };
                    std::copy(R[task.i1 * (q - 1)], R[task.i1 * (q - 1)] + stride, level(1));
                    std::size_t depth = 1, start = task.i1 + 1;
                    if (w >= 2) {
                        std::copy(level(1), level(1) + stride, level(2));
                        ops.add(level(2), R[task.i2 * (q - 1) + task.s2]);
                        depth = 2;
                        start = task.i2 + 1;
                    }
                    unsigned best = ctl.best();
                    std::uint64_t pending = 0;
                    bool ok = true;
                    auto visit = [&](const std::uint64_t* v) {
                        const unsigned wt = ops.weight(v);
                        if (wt < best) {
                            best = wt;
                            ctl.offer(wt);
                        }
                        if (++pending == detail::kChargeChunk) {
                            pending = 0;
                            if (!ctl.charge(detail::kChargeChunk)) ok = false;
                            best = std::min(best, ctl.best());
                        }
                    };
                    // Depth-first over the remaining w - depth positions.
                    auto recurse = [&](auto&& self, std::size_t d, std::size_t from) -> void {
                        if (!ok) return;
                        if (d == w) {
                            visit(level(d));
                            return;
                        }
                        const std::size_t remaining = w - d;
                        for (std::size_t i = from; i + remaining <= k && ok; ++i) {
                            for (std::size_t s = 0; s + 1 < q && ok; ++s) {
                                std::uint64_t* next = level(d + 1);
                                std::copy(level(d), level(d) + stride, next);
                                ops.add(next, R[i * (q - 1) + s]);
                                self(self, d + 1, i + 1);
                            }
                        }
                    };
                    recurse(recurse, depth, start);
                    if (ok) ctl.charge(pending);
                    if (!ok) incomplete.store(true);
                });
                if (incomplete.load()) {
                    aborted = true;
                    break;
                }
                lower = detail::bz_lower_bound(sets, k, w, j + 1);
                if (lower >= ctl.best()) done = true;
            }
            if (w == k && !aborted) done = true;  // every message of set 0 enumerated
        }

        if (stats) {
            stats->codewords = ctl.codewords();
            stats->seconds = ctl.elapsed();
            if (ctl.best() != std::numeric_limits<unsigned>::max()) stats->best_found = ctl.best();
            stats->aborted = !done;
        }
        if (done) return DistanceValue::verified_by(ctl.best(), DistanceMethod::BrouwerZimmermann);
        const unsigned best = ctl.best();
        return DistanceValue::lower_bound(std::min(lower, best), DistanceMethod::BrouwerZimmermann);
    });
}

/// Engine selection: brute force while q^k stays small, Brouwer-Zimmermann beyond.
inline DistanceValue min_weight(const LinearCode& c, const SearchOptions& options = {}, Engine engine = Engine::Auto,
                                SearchStats* stats = nullptr) {
    if (engine == Engine::Auto) {
        double log2_size = static_cast<double>(c.k()) * std::log2(static_cast<double>(c.field()->q()));
        engine = log2_size <= 16 ? Engine::Brute : Engine::BZ;
    }
    return engine == Engine::Brute ? min_weight_brute(c, options, stats) : min_weight_bz(c, options, stats);
}

}  // namespace cssprop

#endif
