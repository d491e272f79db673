#include <gtest/gtest.h>

#include "loopbv/errors.hpp"
#include "loopbv/ring.hpp"
#include "support/oracles.hpp"

namespace loopbv {
namespace {

TEST(Ring, ConfigRejectsNonPositiveN)
{
    EXPECT_THROW(AlgebraConfig(0, BvCase::A_v), InputError);
    EXPECT_THROW(AlgebraConfig(-3, BvCase::B_w), InputError);
    EXPECT_EQ(AlgebraConfig(2, BvCase::A_v).manifold_dim(), 5);
}

TEST(Ring, ParsesCaseAndComponentNames)
{
    for (BvCase c : kAllCases)
        EXPECT_EQ(parse_bv_case(to_string(c)), c);
    EXPECT_THROW(parse_bv_case("C_x"), InputError);
    EXPECT_EQ(parse_component("g"), Component::g);
    EXPECT_THROW(parse_component("h"), InputError);
    EXPECT_EQ(Component::g + Component::g, Component::e);
    EXPECT_EQ(Component::e + Component::g, Component::g);
}

TEST(Ring, DegreesOfGenerators)
{
    const AlgebraConfig cfg(3, BvCase::A_v);
    EXPECT_EQ(loop_degree({1, 0, 0}, cfg), -1);
    EXPECT_EQ(loop_degree({0, 1, 0}, cfg), 0);
    EXPECT_EQ(loop_degree({0, 0, 1}, cfg), 6);
    EXPECT_EQ(top_degree({1, 0, 0}, cfg), 6);
    EXPECT_EQ(top_degree({0, 1, 0}, cfg), 7);
    EXPECT_EQ(top_degree({0, 0, 1}, cfg), 13);
}

TEST(Ring, TopPowerOfXVanishes)
{
    for (int n = 1; n <= 4; ++n) {
        const AlgebraConfig cfg(n, BvCase::A_v);
        EXPECT_TRUE(normalize(2 * n + 2, 0, 0, cfg).is_zero());
        EXPECT_EQ(normalize(2 * n + 1, 0, 0, cfg), AlgebraElement(Monomial{2 * n + 1, 0, 0}));
    }
}

TEST(Ring, SquareOfVDependsOnParityOfN)
{
    const AlgebraConfig odd(1, BvCase::A_v);
    EXPECT_TRUE(multiply(Monomial{0, 1, 0}, Monomial{0, 1, 0}, odd).is_zero());
    const AlgebraConfig even(2, BvCase::A_v);
    EXPECT_EQ(multiply(Monomial{0, 1, 0}, Monomial{0, 1, 0}, even), AlgebraElement(Monomial{4, 0, 1}));
    // x v^2 = x^5 w is still allowed for n = 2, x^2 v^2 = x^6 w is not.
    EXPECT_EQ(normalize(1, 2, 0, even), AlgebraElement(Monomial{5, 0, 1}));
    EXPECT_TRUE(normalize(2, 2, 0, even).is_zero());
}

TEST(Ring, NormalizeRejectsNegativeExponents)
{
    const AlgebraConfig cfg(1, BvCase::A_v);
    EXPECT_THROW(normalize(-1, 0, 0, cfg), InputError);
    EXPECT_THROW(normalize(0, 0, -2, cfg), InputError);
}

TEST(Ring, ComponentGrading)
{
    const AlgebraConfig a(1, BvCase::A_vxw);
    EXPECT_EQ(component({3, 1, 5}, a), Component::g);
    EXPECT_EQ(component({3, 0, 5}, a), Component::e);
    const AlgebraConfig b(1, BvCase::B_wxvw);
    EXPECT_EQ(component({0, 0, 1}, b), Component::g);
    EXPECT_EQ(component({0, 1, 1}, b), Component::e);
    EXPECT_EQ(component({2, 1, 2}, b), Component::g);
}

TEST(Ring, ProductAddsComponentsWhenConsistent)
{
    // All cases for odd n, and case A for even n.
    for (int n = 1; n <= 4; ++n)
        for (BvCase c : kAllCases) {
            if (n % 2 == 0 && !w_in_trivial_component(c))
                continue;
            const AlgebraConfig cfg(n, c);
            const auto window = basis_window(cfg, std::nullopt, -cfg.manifold_dim(), 4 * n);
            for (const Monomial& p : window)
                for (const Monomial& q : window)
                    for (const Monomial& t : multiply(p, q, cfg))
                        EXPECT_EQ(component(t, cfg), component(p, cfg) + component(q, cfg))
                            << to_string(p) << " * " << to_string(q);
        }
}

TEST(Ring, SquareOfVBreaksComponentGradingInCaseBForEvenN)
{
    // v lies in g, so v * v should lie in e, but v^2 = x^{2n} w lies in g when
    // w does.
    const AlgebraConfig cfg(2, BvCase::B_w);
    const Monomial v{0, 1, 0};
    const AlgebraElement square = multiply(v, v, cfg);
    ASSERT_EQ(square.size(), 1u);
    EXPECT_EQ(component(v, cfg) + component(v, cfg), Component::e);
    EXPECT_EQ(component(*square.begin(), cfg), Component::g);
}

TEST(Ring, MultiplicationIsCommutativeAndAssociative)
{
    for (int n = 1; n <= 3; ++n) {
        const AlgebraConfig cfg(n, BvCase::A_v);
        const auto window = basis_window(cfg, std::nullopt, -cfg.manifold_dim(), 2 * n);
        for (const Monomial& p : window)
            for (const Monomial& q : window) {
                EXPECT_EQ(multiply(p, q, cfg), multiply(q, p, cfg));
                for (const Monomial& r : window) {
                    const AlgebraElement left = multiply(multiply(p, q, cfg), AlgebraElement(r), cfg);
                    const AlgebraElement right = multiply(AlgebraElement(p), multiply(q, r, cfg), cfg);
                    EXPECT_EQ(left, right);
                }
            }
    }
}

TEST(Ring, PowerMatchesRepeatedProduct)
{
    const AlgebraConfig cfg(2, BvCase::A_v);
    const AlgebraElement u{Monomial{1, 0, 0}, Monomial{1, 1, 0}};
    AlgebraElement acc = AlgebraElement::one();
    for (int k = 0; k <= 7; ++k) {
        EXPECT_EQ(power(u, k, cfg), acc) << k;
        acc = multiply(acc, u, cfg);
    }
}

TEST(Ring, BasisMatchesBruteForceEnumeration)
{
    for (int n = 1; n <= 4; ++n)
        for (BvCase c : kAllCases) {
            const AlgebraConfig cfg(n, c);
            for (int k = -cfg.manifold_dim() - 2; k <= 10 * n; ++k)
                for (Component comp : {Component::e, Component::g}) {
                    auto expected = testing::brute_force_basis(cfg, comp, k);
                    const auto actual = basis(cfg, comp, k);
                    std::sort(expected.begin(), expected.end(),
                              [](const Monomial& l, const Monomial& r) { return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c); });
                    EXPECT_EQ(actual, expected) << "n=" << n << " k=" << k;
                    EXPECT_EQ(dimension(cfg, comp, k), static_cast<int>(expected.size()));
                }
        }
}

TEST(Ring, BasisExamples)
{
    const AlgebraConfig cfg(1, BvCase::A_v);
    // Degree 0 of e: 1 and x^2 w.
    EXPECT_EQ(basis(cfg, Component::e, 0), (std::vector<Monomial>{{0, 0, 0}, {2, 0, 1}}));
    // Lowest degree of g: x^3 v alone.
    EXPECT_EQ(basis(cfg, Component::g, -3), (std::vector<Monomial>{{3, 1, 0}}));
    EXPECT_TRUE(basis(cfg, std::nullopt, -4).empty());
}

TEST(Ring, TextFormat)
{
    EXPECT_EQ(to_string(Monomial{}), "1");
    EXPECT_EQ(to_string(Monomial{1, 1, 2}), "x*v*w^2");
    EXPECT_EQ(to_string(Monomial{4, 0, 1}), "x^4*w");
    EXPECT_EQ(to_string(AlgebraElement{}), "0");
    EXPECT_EQ(to_string(AlgebraElement{Monomial{0, 1, 0}, Monomial{2, 1, 1}}), "v + x^2*v*w");
}

TEST(Ring, AdditionCancelsInCharacteristicTwo)
{
    const AlgebraElement u{Monomial{1, 0, 0}, Monomial{0, 1, 0}};
    EXPECT_TRUE((u + u).is_zero());
    EXPECT_EQ(add(u, AlgebraElement(Monomial{1, 0, 0})), AlgebraElement(Monomial{0, 1, 0}));
}

} // namespace
} // namespace loopbv
