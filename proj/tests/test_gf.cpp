#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cssprop/gf.hpp"

using namespace cssprop;

TEST(gf, prime_fields) {
    auto gf2 = field_make(2);
    EXPECT_EQ(gf2->q(), 2u);
    EXPECT_TRUE(gf2->modulus().empty());
    EXPECT_EQ(gf2->add(1, 1), 0u);

    auto gf3 = field_make(3);
    EXPECT_EQ(gf3->q(), 3u);
    EXPECT_EQ(gf3->mul(2, 2), 1u);
}

TEST(gf, gf4_modulus_and_alpha_squared) {
    auto gf4 = field_make(2, 2);
    EXPECT_EQ(gf4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));  // x^2 + x + 1
    const elem_t alpha = 2;                                             // the class of x
    EXPECT_EQ(gf4->mul(alpha, alpha), 3u);                              // alpha + 1
}

TEST(gf, canonical_modulus_is_smallest_irreducible) {
    EXPECT_EQ(field_make(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));     // x^3 + x + 1
    EXPECT_EQ(field_make(2, 4)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));  // x^4 + x + 1
    EXPECT_EQ(field_make(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));        // x^2 + 1
}

TEST(gf, errors) {
    EXPECT_THROW(field_make(4), std::invalid_argument);
    EXPECT_THROW(field_make(2, 0), std::invalid_argument);
    EXPECT_THROW(field_make(2, 17), std::invalid_argument);
    EXPECT_THROW(field_make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);  // (x+1)^2
    EXPECT_NO_THROW(field_make(2, 2, std::vector<std::uint32_t>{1, 1, 1}));
    auto gf5 = field_make(5);
    EXPECT_THROW(gf5->inv(0), std::domain_error);
    EXPECT_THROW(gf5->div(3, 0), std::domain_error);
    EXPECT_THROW(field_of_order(6), std::invalid_argument);
}

TEST(gf, field_elements_do_not_mix) {
    FieldElement a(field_make(3), 1), b(field_make(5), 1);
    EXPECT_THROW(a + b, std::invalid_argument);
    FieldElement c(field_make(3), 2);
    EXPECT_EQ((a + c).value(), 0u);
    EXPECT_EQ((c * c).value(), 1u);
    EXPECT_EQ(c.pow(-1).value(), 2u);
    EXPECT_EQ(c.pow(0).value(), 1u);
}

// Exhaustive for q <= 64.
TEST(gf, field_axioms_exhaustive) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {2, 5}, {5, 2}, {3, 3}, {2, 6}}) {
        auto f = field_make(p, m);
        const elem_t q = f->q();
        for (elem_t a = 0; a < q; ++a) {
            EXPECT_EQ(f->add(a, f->neg(a)), 0u);
            if (a) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1u) << f->name() << " a=" << a;
                EXPECT_EQ(f->pow(a, q - 1), 1u);
                EXPECT_EQ(f->pow(a, -1), f->inv(a));
            }
            for (elem_t b = 0; b < q; ++b) {
                EXPECT_EQ(f->add(a, b), f->add(b, a));
                EXPECT_EQ(f->mul(a, b), f->mul(b, a));
                for (elem_t c = 0; c < q; c += 3)
                    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            }
        }
    }
}

TEST(gf, field_axioms_randomized_large) {
    auto f = field_make(2, 16);
    std::mt19937 rng(0);
    std::uniform_int_distribution<elem_t> pick(1, f->q() - 1);
    for (int t = 0; t < 2000; ++t) {
        const elem_t a = pick(rng), b = pick(rng);
        EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
        EXPECT_EQ(f->div(f->mul(a, b), b), a);
        EXPECT_EQ(f->pow(a, f->q() - 1), 1u);
    }
}

TEST(gf, quadratic_residue_examples) {
    EXPECT_TRUE(is_quadratic_residue(2, 7));
    EXPECT_FALSE(is_quadratic_residue(2, 5));
    EXPECT_TRUE(is_quadratic_residue(3, 11));
    EXPECT_THROW(is_quadratic_residue(7, 7), std::invalid_argument);
    EXPECT_THROW(is_quadratic_residue(2, 9), std::invalid_argument);
}

TEST(gf, quadratic_residue_matches_squares) {
    for (std::int64_t n = 3; n <= 200; ++n) {
        if (!detail::is_prime(static_cast<std::uint64_t>(n))) continue;
        std::set<std::int64_t> squares;
        for (std::int64_t x = 1; x < n; ++x) squares.insert(x * x % n);
        for (std::int64_t a = 1; a < n; ++a) EXPECT_EQ(is_quadratic_residue(a, n), squares.count(a) == 1) << a << " " << n;
    }
}

TEST(gf, multiplicative_order) {
    EXPECT_EQ(multiplicative_order(2, 7), 3u);
    EXPECT_EQ(multiplicative_order(2, 23), 11u);
    EXPECT_EQ(multiplicative_order(3, 11), 5u);
}
