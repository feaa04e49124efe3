#include <random>

#include <gtest/gtest.h>

#include "cssprop/css.hpp"
#include "fixtures.hpp"
#include "nested.hpp"
#include "oracles.hpp"

using namespace cssprop;

namespace {

const Field gf2 = field_make(2);
const Field gf3 = field_make(3);

using nested::oracle_distances;
using nested::random_css;

// Nested pairs with both brute-force distances above 1, distances attached.
std::vector<CssCode> build_corpus(std::size_t wanted) {
    std::vector<CssCode> out;
    for (std::uint64_t seed = 0; out.size() < wanted && seed < 20000; ++seed) {
        auto css = random_css(seed);
        if (css.c1.k() == 0 || css.c2.k() == 0) continue;
        auto [d1, d2] = oracle_distances(css);
        if (d1 <= 1 || d2 <= 1) continue;
        out.push_back(compute_distances(css));
        EXPECT_EQ(out.back().d1->value, d1);
        EXPECT_EQ(out.back().d2->value, d2);
    }
    return out;
}

const std::vector<CssCode>& property_corpus() {
    static const auto corpus = build_corpus(150);
    return corpus;
}

void expect_singleton_ok(const CssCode& css) {
    if (css.c1.k() == 0 || css.c2.k() == 0) return;  // a distance over an empty set
    auto [d1, d2] = oracle_distances(css);
    QuantumParams p{css.n(), css.k, css.field()->q(), DistanceValue{d1}, DistanceValue{d2}};
    EXPECT_GE(singleton_check(p).asymmetric, 0) << p.render(true);
}

DistanceValue ingested(unsigned v) { return DistanceValue::lower_bound(v, DistanceMethod::Ingested); }

}  // namespace

TEST(css, build_examples) {
    auto q24 = quantum_qr(23, gf2, true);
    EXPECT_EQ(q24.n(), 24u);
    EXPECT_EQ(q24.k, 0u);

    auto h = fixtures::hamming7(gf2);
    auto steane = build_css(h, h);
    EXPECT_EQ(steane.k, 1u);

    auto full = compute_distances(build_css(LinearCode::full(gf3, 4), LinearCode::full(gf3, 4)));
    EXPECT_EQ(full.k, 4u);
    EXPECT_EQ(full.d1->value, 1u);
    EXPECT_EQ(full.d2->value, 1u);

    EXPECT_THROW(build_css(dual(h), dual(h)), std::invalid_argument);
    EXPECT_THROW(build_css(h, LinearCode::full(gf2, 6)), std::invalid_argument);
    EXPECT_THROW(build_css(h, LinearCode::full(gf3, 7)), std::invalid_argument);
}

TEST(css, compute_distances_examples) {
    auto h = fixtures::hamming7(gf2);
    auto steane = compute_distances(build_css(h, h));
    EXPECT_EQ(steane.d1->value, 3u);
    EXPECT_EQ(steane.d2->value, 3u);
    EXPECT_TRUE(steane.d1->verified());
    EXPECT_EQ(steane.params().render(), "[[7,1,3]]_2");

    auto q24 = compute_distances(quantum_qr(23, gf2, true));
    EXPECT_EQ(q24.params().render(), "[[24,0,8]]_2");
    EXPECT_TRUE(q24.d1->verified() && q24.d2->verified());

    auto t12 = fixtures::with_parity(fixtures::ternary_golay11(gf3));
    ASSERT_EQ(dual(t12), t12);
    auto g12 = compute_distances(build_css(t12, t12));
    EXPECT_EQ(g12.params().render(), "[[12,0,6]]_3");
}

TEST(css, zero_dimension_uses_full_weights) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto c = random_code(10, 4 + seed % 3, seed % 2 ? gf3 : gf2, seed);
        auto css = compute_distances(build_css(c, dual(c)));
        ASSERT_EQ(css.k, 0u);
        EXPECT_EQ(css.d1->value, oracle::min_weight(c));
        EXPECT_EQ(css.d2->value, oracle::min_weight(dual(c)));
        EXPECT_TRUE(css.pure);
    }
}

TEST(css, reduce_one_examples) {
    auto q24 = compute_distances(quantum_qr(23, gf2, true));
    auto r = reduce_one(q24, 1);
    EXPECT_EQ(r.params().render(true), "[[23,0,{7,8}]]_2");
    EXPECT_FALSE(r.d1->verified());
    auto v = compute_distances(r);
    EXPECT_EQ(v.d1->value, 7u);
    EXPECT_EQ(v.d2->value, 8u);
    EXPECT_TRUE(v.d1->verified());

    EXPECT_THROW(reduce_one(q24, 0), std::out_of_range);
    EXPECT_THROW(reduce_one(quantum_qr(23, gf2, true), 1), std::invalid_argument);  // d1 unknown
}

// C2 vanishes at the last coordinate: shortening keeps k2, puncturing C1
// loses the unit word there, and k is unchanged.
TEST(css, reduce_one_identically_zero_coordinate) {
    auto h = fixtures::hamming7(gf2);
    auto c2 = append_coordinate(h, std::vector<elem_t>(7, 0));
    Matrix m = append_coordinate(h, std::vector<elem_t>(7, 0)).generator();
    std::vector<elem_t> e8(8, 0);
    e8[7] = 1;
    m.append_row(e8);
    auto c1 = LinearCode(m);
    auto css = compute_distances(build_css(c1, c2));
    ASSERT_TRUE(c2.coordinate_is_zero(8));
    ASSERT_EQ(css.k, 1u);
    EXPECT_EQ(css.params().render(), "[[8,1,3]]_2");
    auto r = reduce_one(css, 8);
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.c2.k(), c2.k());
    EXPECT_EQ(r.c1.k(), c1.k() - 1);
    auto [d1, d2] = oracle_distances(r);
    EXPECT_GE(d1, 2u);
    EXPECT_GE(d2, 3u);
}

TEST(css, swap_roles_examples) {
    auto css = compute_distances(quantum_qr(7, gf2, true));
    auto r = reduce_one(css, 2);
    auto s = swap_roles(r);
    EXPECT_EQ(s.params().render(true), "[[7,0,{4,3}]]_2");
    auto back = swap_roles(s);
    EXPECT_EQ(back.c1, r.c1);
    EXPECT_EQ(back.c2, r.c2);
    EXPECT_EQ(back.d1, r.d1);
    auto sym = swap_roles(css);
    EXPECT_EQ(sym.c1, css.c1);
    EXPECT_EQ(sym.c2, css.c2);
}

TEST(css, reduce_two_examples) {
    auto q24 = compute_distances(quantum_qr(23, gf2, true));
    auto r = reduce_two(q24, 1, 1);
    EXPECT_EQ(r.params().render(), "[[22,0,7]]_2");
    auto [d1, d2] = oracle_distances(r);
    EXPECT_GE(d1, 7u);
    EXPECT_GE(d2, 7u);
    ASSERT_EQ(r.trace.steps.size(), 2u);
    EXPECT_EQ(r.trace.steps[1].original, (std::vector<std::size_t>{1, 2}));

    auto p = derive_params_chain({168, 0, 2, ingested(24), ingested(24)}, {Rule::Thm32});
    EXPECT_EQ(p.rows.back().params.render(), "[[166,0,23]]_2");
    auto t = derive_params_chain({60, 0, 3, ingested(18), ingested(18)}, {Rule::Thm32});
    EXPECT_EQ(t.rows.back().params.render(), "[[58,0,17]]_3");

    auto steane = compute_distances(build_css(fixtures::hamming7(gf2), fixtures::hamming7(gf2)));
    EXPECT_THROW(reduce_two(build_css(fixtures::hamming7(gf2), fixtures::hamming7(gf2)), 1, 1), std::invalid_argument);
    EXPECT_NO_THROW(reduce_two(steane, 1, 1));
}

TEST(css, pair_puncture_examples) {
    auto e8 = compute_distances(quantum_qr(7, gf2, true));
    auto r = pair_puncture(e8, 1);
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.params().render(), "[[7,1,3]]_2");
    auto v = compute_distances(r);
    EXPECT_EQ(v.params().render(), "[[7,1,3]]_2");
    EXPECT_TRUE(v.d1->verified());

    auto t = derive_params_chain({60, 0, 3, ingested(18), ingested(18)}, {Rule::PairPuncture});
    EXPECT_EQ(t.rows.back().params.render(), "[[59,1,17]]_3");
    auto t2 = derive_params_chain({60, 0, 3, ingested(18), ingested(18)}, {Rule::PairPuncture, Rule::PairPuncture});
    EXPECT_EQ(t2.rows.back().params.render(), "[[58,2,16]]_3");

    // A unit word at the coordinate is rejected.
    auto c = fixtures::from_rows(gf2, {"1000", "0110", "0001"});
    auto css = with_distances(build_css(c, dual(c)), DistanceValue{2}, DistanceValue{2});
    EXPECT_THROW(pair_puncture(css, 1), std::invalid_argument);
}

TEST(css, pair_puncture_requires_purity) {
    // Steane code: relative distance 3 but the dual Hamming code inside C1
    // has weight 4 words only, so it is pure; a deliberately impure pair is
    // built from a C1 containing a weight-2 word of C2^perp.
    auto h = fixtures::hamming7(gf2);
    auto steane = compute_distances(build_css(h, h));
    EXPECT_TRUE(steane.pure);
    EXPECT_NO_THROW(pair_puncture(steane, 1));

    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        auto css = random_css(seed);
        if (css.k == 0 || css.c1.k() == 0 || css.c2.k() == 0) continue;
        auto [d1, d2] = oracle_distances(css);
        if (d1 <= 1 || d2 <= 1) continue;
        css = compute_distances(css);
        const bool pure = oracle::min_weight(css.c1) >= d1 && oracle::min_weight(css.c2) >= d2;
        EXPECT_EQ(css.pure, pure);
        if (!pure) {
            EXPECT_THROW(pair_puncture(css, 1), std::invalid_argument);
            return;
        }
    }
    ADD_FAILURE() << "no impure code in the corpus";
}

TEST(css, quantum_qr_examples) {
    auto a = compute_distances(quantum_qr(23, gf2, false));
    EXPECT_EQ(a.params().render(), "[[23,1,7]]_2");
    auto fam = qr_family(13, gf3);
    auto b = quantum_qr(fam, false);
    EXPECT_EQ(b.c1, fam.Q);
    EXPECT_EQ(b.c2, fam.N);
    EXPECT_EQ(b.k, 1u);
    auto e = compute_distances(quantum_qr(13, gf3, true));
    EXPECT_EQ(e.k, 0u);
    EXPECT_EQ(e.params().render(), "[[14,0,6]]_3");
    EXPECT_EQ(compute_distances(quantum_qr(7, gf2, true)).params().render(), "[[8,0,4]]_2");
    EXPECT_THROW(quantum_qr(7, gf3, true), std::invalid_argument);
}

TEST(css, singleton_examples) {
    auto p = [](std::size_t n, std::size_t k, unsigned a, unsigned b) {
        return QuantumParams{n, k, 2, DistanceValue{a}, DistanceValue{b}};
    };
    auto s8 = singleton_check(p(8, 0, 4, 4));
    EXPECT_EQ(s8.asymmetric, 2);
    EXPECT_EQ(s8.symmetric, 2);
    EXPECT_EQ(singleton_check(p(5, 1, 3, 3)).asymmetric, 0);
    EXPECT_EQ(singleton_check(p(6, 0, 4, 4)).asymmetric, 0);
    EXPECT_EQ(singleton_check(p(10, 0, 5, 3)).symmetric, 6);
    EXPECT_THROW(singleton_check(QuantumParams{}), std::invalid_argument);
}

TEST(css, render) {
    QuantumParams p{23, 0, 2, DistanceValue{7}, DistanceValue{8}};
    EXPECT_EQ(p.render(), "[[23,0,7]]_2");
    EXPECT_EQ(p.render(true), "[[23,0,{7,8}]]_2");
    EXPECT_EQ((QuantumParams{5, 1, 3, std::nullopt, std::nullopt}).render(), "[[5,1]]_3");
}

// thm31: k unchanged, d1 drops by at most one, d2 does not drop.
TEST(css, thm31_soundness) {
    const auto& corpus = property_corpus();
    ASSERT_GE(corpus.size(), 100u);
    for (const auto& css : corpus) {
        for (std::size_t i = 1; i <= css.n(); i += 2) {
            auto r = reduce_one(css, i);
            ASSERT_EQ(r.k, css.k);
            auto [d1, d2] = oracle_distances(r);
            EXPECT_GE(d1, css.d1->value - 1) << css.params().render(true) << " i=" << i;
            EXPECT_GE(d2, css.d2->value) << css.params().render(true) << " i=" << i;
            expect_singleton_ok(r);
        }
    }
}

TEST(css, thm32_soundness) {
    const auto& corpus = property_corpus();
    for (const auto& css : corpus) {
        for (std::size_t i = 1; i <= css.n(); i += 3) {
            const std::size_t j = 1 + (i * 5) % (css.n() - 1);
            auto r = reduce_two(css, i, j);
            ASSERT_EQ(r.k, css.k);
            ASSERT_EQ(r.n(), css.n() - 2);
            auto [d1, d2] = oracle_distances(r);
            EXPECT_GE(d1, css.d1->value - 1);
            EXPECT_GE(d2, css.d2->value - 1);
            expect_singleton_ok(r);
        }
    }
}

TEST(css, pair_puncture_soundness) {
    std::size_t checked = 0;
    for (const auto& css : property_corpus()) {
        if (!css.pure) continue;
        for (std::size_t i = 1 + css.n() % 3; i <= css.n(); i += 3) {
            if (css.c1.has_unit_word(i) || css.c2.has_unit_word(i) || css.c1.coordinate_is_zero(i) ||
                css.c2.coordinate_is_zero(i))
                continue;
            auto r = pair_puncture(css, i);
            ASSERT_EQ(r.k, css.k + 1);
            auto [d1, d2] = oracle_distances(r);
            EXPECT_GE(d1, css.d1->value - 1);
            EXPECT_GE(d2, css.d2->value - 1);
            expect_singleton_ok(r);
            ++checked;
        }
    }
    EXPECT_GE(checked, 100u);
}

TEST(css, trace_replay_reproduces_codes) {
    const std::vector<Rule> menu{Rule::Thm31, Rule::Thm31Swapped, Rule::Thm32, Rule::PairPuncture, Rule::Swap};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::pair<std::size_t, Field> seeds[] = {{17, gf2}, {23, gf2}, {13, gf3}, {11, gf3}};
        const auto& [n, f] = seeds[seed % 4];
        auto start = compute_distances(quantum_qr(n, f, true));
        std::vector<Rule> rules;
        for (std::size_t s = 0; s < 3; ++s) rules.push_back(menu[(seed + 3 * s) % menu.size()]);
        auto chain = derive_chain(start, rules);
        ASSERT_TRUE(chain.last);
        auto again = replay(start, chain.last->trace);
        EXPECT_EQ(again.c1, chain.last->c1);
        EXPECT_EQ(again.c2, chain.last->c2);
        EXPECT_EQ(again.trace, chain.last->trace);
    }
}

TEST(css, chain_from_golay_verified) {
    auto seed = compute_distances(quantum_qr(23, gf2, true));
    ChainOptions opt;
    opt.verify = true;
    opt.qr_prime = 23;
    auto chain = derive_chain(seed, {Rule::Thm32, Rule::Thm32}, opt);
    ASSERT_EQ(chain.rows.size(), 3u);
    EXPECT_FALSE(chain.diagnostic);
    EXPECT_EQ(chain.rows[1].params.n, 22u);
    EXPECT_EQ(chain.rows[2].params.n, 20u);
    for (std::size_t r = 1; r < 3; ++r) {
        const auto& p = chain.rows[r].params;
        EXPECT_EQ(chain.rows[r].source, RowSource::Verified);
        EXPECT_GE(*p.d(), 8 - r);
        // The involution positions make the two codes equivalent.
        EXPECT_TRUE(chain.rows[r].mirrored);
    }
    // Mirrored distance agrees with a direct computation of C2.
    auto direct = compute_distances(*chain.last);
    EXPECT_EQ(direct.d2->value, chain.rows[2].params.d2->value);
    // Trace records involution positions: C1 punctured at tau(0) = infinity (24), shortened at label 0 (1).
    EXPECT_EQ(chain.rows[1].trace.steps[1].original, (std::vector<std::size_t>{24, 1}));
}

TEST(css, chain_params_examples) {
    auto c = derive_params_chain({168, 0, 2, ingested(24), ingested(24)}, {Rule::Thm32, Rule::Thm32, Rule::Thm32});
    std::vector<std::string> got;
    for (const auto& r : c.rows) got.push_back(r.params.render());
    EXPECT_EQ(got, (std::vector<std::string>{"[[168,0,24]]_2", "[[166,0,23]]_2", "[[164,0,22]]_2", "[[162,0,21]]_2"}));
    EXPECT_EQ(c.rows[0].source, RowSource::Ingested);
    EXPECT_EQ(c.rows[1].source, RowSource::TheoremBound);

    auto t = derive_params_chain({60, 0, 3, ingested(18), ingested(18)}, {Rule::Thm32, Rule::Thm32});
    EXPECT_EQ(t.rows[2].params.render(), "[[56,0,16]]_3");

    auto stop = derive_params_chain({6, 0, 2, ingested(2), ingested(2)}, {Rule::Thm32, Rule::Thm32});
    EXPECT_EQ(stop.rows.size(), 2u);
    EXPECT_TRUE(stop.diagnostic);

    auto impure = derive_params_chain({10, 1, 2, ingested(3), ingested(3)}, {Rule::PairPuncture}, {}, false);
    EXPECT_EQ(impure.rows.size(), 1u);
    EXPECT_TRUE(impure.diagnostic);
}

TEST(css, chain_truncates_on_failed_hypothesis) {
    auto seed = compute_distances(quantum_qr(7, gf2, true));
    auto chain = derive_chain(seed, {Rule::Thm32, Rule::Thm32, Rule::Thm32, Rule::Thm32});
    EXPECT_TRUE(chain.diagnostic);
    EXPECT_LT(chain.rows.size(), 5u);
}

TEST(css, monotone_bookkeeping_raises_earlier_bounds) {
    std::vector<ChainRow> rows(3);
    rows[0].params = {10, 0, 2, DistanceValue::verified_by(4, DistanceMethod::BruteForce),
                      DistanceValue::verified_by(4, DistanceMethod::BruteForce)};
    rows[1].params = {8, 0, 2, detail::derived(3), detail::derived(3)};
    rows[2].params = {6, 0, 2, DistanceValue::verified_by(3, DistanceMethod::BruteForce), detail::derived(2)};
    rows[2].params.d1->value = 4;
    detail::raise_monotone(rows, {Rule::Thm32, Rule::Thm32});
    EXPECT_EQ(rows[1].params.d1->value, 4u);
    EXPECT_FALSE(rows[1].params.d1->verified());
    EXPECT_EQ(rows[1].params.d2->value, 3u);

    auto other = rows;
    other[1].params.d1 = detail::derived(3);
    detail::raise_monotone(other, {Rule::Thm32, Rule::PairPuncture});
    EXPECT_EQ(other[1].params.d1->value, 3u);
}
