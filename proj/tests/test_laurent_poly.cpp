#include <random>

#include <gtest/gtest.h>

#include "rgrec/errors.hpp"
#include "rgrec/laurent_poly.hpp"
#include "rgrec/recursion.hpp"

using namespace rgrec;

namespace {

LaurentPoly t(std::size_t nvars, std::size_t slot, int k = 1, BigRational c = 1)
{
    ExponentVector e(nvars);
    e[slot] = k;
    return LaurentPoly::monomial(e, c);
}

LaurentPoly random_poly(std::mt19937& rng, std::size_t nvars, int terms, int span, bool even_slot0 = false)
{
    std::uniform_int_distribution<int> exp(-span, span), num(-9, 9), den(1, 5);
    LaurentPoly p(nvars);
    for (int i = 0; i < terms; ++i) {
        ExponentVector e(nvars);
        for (std::size_t j = 0; j < nvars; ++j) e[j] = exp(rng);
        if (even_slot0) e[0] *= 2;
        p.add_term(e, BigRational(num(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST(LaurentPoly, InverseMonomials)
{
    EXPECT_EQ(t(1, 0) * t(1, 0, -1), LaurentPoly::constant(1, 1));
}

TEST(LaurentPoly, DifferenceOfSquares)
{
    const LaurentPoly a = t(2, 0) + t(2, 1);
    const LaurentPoly b = t(2, 0) - t(2, 1);
    EXPECT_EQ(poly_arith(a, b, ArithOp::mul), t(2, 0, 2) - t(2, 1, 2));
}

TEST(LaurentPoly, DiagonalZTimesFourT)
{
    // (t/4 + 1/2 + 1/(4t)) * 4t expanded by hand: t^2 + 2t + 1.
    const LaurentPoly expected = t(1, 0, 2) + t(1, 0, 1, 2) + LaurentPoly::constant(1, 1);
    EXPECT_EQ(recursion::z_diagonal(0, 1) * t(1, 0, 1, 4), expected);
}

TEST(LaurentPoly, NoZeroCoefficientsStored)
{
    LaurentPoly p = t(2, 0) + t(2, 1);
    p -= t(2, 0);
    EXPECT_EQ(p.size(), 1u);
    p.add_term(ExponentVector{0, 1}, -1);
    EXPECT_TRUE(p.is_zero());
}

TEST(LaurentPoly, VariableCountMismatch)
{
    EXPECT_THROW(poly_arith(t(1, 0), t(2, 0), ArithOp::add), VariableCountError);
    EXPECT_THROW(LaurentPoly(0), VariableCountError);
    EXPECT_THROW(LaurentPoly(17), VariableCountError);
}

TEST(LaurentPoly, Derivatives)
{
    EXPECT_EQ(differentiate(t(1, 0, 3), 0), t(1, 0, 2, 3));
    EXPECT_EQ(differentiate(t(1, 0, -1), 0), t(1, 0, -2, -1));
    EXPECT_TRUE(differentiate(LaurentPoly::constant(2, 5), 1).is_zero());
}

TEST(LaurentPoly, DerivativeOfF11VanishesAtOne)
{
    // -(1/384)(t+1)^4 t^{-2} (t - 4 + 1/t), expanded independently of the engine.
    const LaurentPoly one = LaurentPoly::constant(1, 1);
    const LaurentPoly closed = pow(t(1, 0) + one, 4) * t(1, 0, -2, BigRational(-1, 384)) *
                               (t(1, 0) - LaurentPoly::constant(1, 4) + t(1, 0, -1));
    const BigRational at_one[] = {BigRational(1)};
    EXPECT_TRUE(differentiate(closed, 0).evaluate(at_one).is_zero());
}

TEST(LaurentPoly, Antiderivatives)
{
    EXPECT_EQ(antiderivative(t(1, 0, 2), 0), t(1, 0, 3, BigRational(1, 3)));
    EXPECT_EQ(antiderivative(t(1, 0, -2), 0), t(1, 0, -1, -1));
    EXPECT_THROW(antiderivative(t(1, 0, -1), 0), LogTermError);
    EXPECT_THROW(antiderivative(t(2, 0, -1) * t(2, 1, 3), 0), LogTermError);
}

TEST(LaurentPoly, PartialEvaluation)
{
    EXPECT_EQ(evaluate_partial(t(2, 0) * t(2, 1), 0, BigRational(2)), t(1, 0, 1, 2));
    EXPECT_THROW(evaluate_partial(t(2, 0, -1), 0, BigRational(0)), PoleError);
    EXPECT_EQ(evaluate_partial(t(1, 0, 3), 0, BigRational(2)), LaurentPoly::constant(1, 8));
    EXPECT_EQ(evaluate_partial(t(3, 2, 2), 0, BigRational(0)), t(2, 1, 2));
}

TEST(LaurentPoly, F03RestrictedToMinusOneVanishes)
{
    EXPECT_TRUE(evaluate_partial(recursion::initial_F03(), 2, BigRational(-1)).is_zero());
}

TEST(LaurentPoly, F11AtOne)
{
    const BigRational at_one[] = {BigRational(1)};
    EXPECT_EQ(recursion::initial_F11().evaluate(at_one), BigRational(1, 12));
}

TEST(LaurentPoly, Relabel)
{
    const LaurentPoly p = t(2, 0) * t(2, 1, 3);
    const std::size_t map[] = {1, 2};
    EXPECT_EQ(relabel(p, map, 3), t(3, 1) * t(3, 2, 3));
    const std::size_t identity[] = {0, 1};
    EXPECT_EQ(relabel(p, identity, 2), p);
    const std::size_t clash[] = {1, 1};
    EXPECT_THROW(relabel(p, clash, 3), NonInjectiveMapError);
}

TEST(LaurentPoly, F03RelabelInvariant)
{
    const LaurentPoly F = recursion::initial_F03();
    const std::size_t perm[] = {2, 0, 1};
    const LaurentPoly moved = relabel(F, perm, 3);
    ASSERT_EQ(moved.size(), F.size());
    for (const auto& [e, c] : F.terms()) {
        ExponentVector image(3);
        for (std::size_t i = 0; i < 3; ++i) image[perm[i]] = e[i];
        EXPECT_EQ(moved.coefficient(image), c);
        EXPECT_EQ(F.coefficient(image), c);
    }
}

TEST(LaurentPoly, MergeSlots)
{
    const LaurentPoly p = t(3, 0, 2) * t(3, 2, -1) * t(3, 1, 5);
    EXPECT_EQ(merge_slots(p, 2, 0), t(2, 0, 1) * t(2, 1, 5));
}

TEST(LaurentPoly, DividedDifferenceExamples)
{
    EXPECT_EQ(divided_difference_even(t(2, 0, 2), 0, 1), LaurentPoly::constant(2, 1));
    EXPECT_EQ(divided_difference_even(t(2, 0, 4), 0, 1), t(2, 0, 2) + t(2, 1, 2));
    EXPECT_EQ(divided_difference_even(t(2, 0, -2), 0, 1), t(2, 0, -2, -1) * t(2, 1, -2));
    EXPECT_TRUE(divided_difference_even(LaurentPoly::constant(2, 3), 0, 1).is_zero());
    EXPECT_THROW(divided_difference_even(t(2, 0, 3), 0, 1), OddExponentError);
    EXPECT_THROW(divided_difference_even(t(2, 1, 2), 0, 1), OddExponentError);
}

TEST(LaurentPoly, DivideByVariableSum)
{
    const LaurentPoly s = t(2, 0) + t(2, 1);
    const LaurentPoly q = t(2, 0, 3) * t(2, 1, -2) - t(2, 1, 4) + LaurentPoly::constant(2, 7);
    EXPECT_EQ(divide_by_variable_sum(s * q, 0, 1), q);
    EXPECT_THROW(divide_by_variable_sum(t(2, 0) + LaurentPoly::constant(2, 1), 0, 1), NonLaurentError);
}

TEST(LaurentPoly, InvertVariables)
{
    EXPECT_EQ(invert_variables(t(2, 0, 3) * t(2, 1, -1)), t(2, 0, -3) * t(2, 1, 1));
}

TEST(LaurentPolyProperty, RingAxioms)
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(rng, 3, 6, 3), b = random_poly(rng, 3, 6, 3), c = random_poly(rng, 3, 6, 3);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(LaurentPolyProperty, DiffOfAntiderivativeIsIdentity)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        // Even exponents in slot 0 rule out t^{-1}.
        const auto p = random_poly(rng, 2, 8, 4, true);
        EXPECT_EQ(differentiate(antiderivative(p, 0), 0), p);
    }
}

TEST(LaurentPolyProperty, DividedDifferenceReconstructs)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentPoly a(3);
        const LaurentPoly raw = random_poly(rng, 3, 6, 4, true);
        for (const auto& [e, c] : raw.terms()) {
            ExponentVector f = e;
            f[1] = 0;
            a.add_term(f, c);
        }
        const LaurentPoly q = divided_difference_even(a, 0, 1);
        const std::size_t to_y[] = {1, 0, 2};
        const LaurentPoly a_y = relabel(a, to_y, 3);
        const LaurentPoly lhs = (t(3, 0, 2) - t(3, 1, 2)) * q;
        EXPECT_TRUE((lhs + a_y - a).is_zero());
    }
}

TEST(LaurentPolyProperty, EvaluationIsHomomorphism)
{
    std::mt19937 rng(5);
    const BigRational value(-3, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(rng, 3, 6, 3), b = random_poly(rng, 3, 6, 3);
        EXPECT_EQ(evaluate_partial(a * b, 1, value), evaluate_partial(a, 1, value) * evaluate_partial(b, 1, value));
        EXPECT_EQ(evaluate_partial(a + b, 1, value), evaluate_partial(a, 1, value) + evaluate_partial(b, 1, value));
    }
}
