#include <gtest/gtest.h>

#include <random>

#include "mzv/action.hpp"
#include "mzv/algebra.hpp"
#include "mzv/error.hpp"
#include "mzv/qsym.hpp"
#include "mzv/rational.hpp"
#include "test_util.hpp"

using namespace mzv;

namespace {

NCPoly P(const char* s) { return parse_poly(s); }
NCPoly W(const char* s) { return NCPoly(parse_word(s)); }

LinearOperator D1() { return derivation_from_images(NCPoly{}, W("xy")); }

}  // namespace

TEST(Rational, NormalizedAfterArithmetic) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (b == 0) b = 1;
        if (e == 0) e = 3;
        const Rational r = make_rational(a, b) * make_rational(c, e) + make_rational(a, e);
        EXPECT_GT(r.get_den(), 0);
        EXPECT_EQ(gcd(Integer(r.get_num()), Integer(r.get_den())), 1);
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
    EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
    EXPECT_EQ(to_string(make_rational(6, 3)), "2");
    EXPECT_THROW((void)parse_rational("1/0"), ParseError);
    EXPECT_THROW((void)parse_rational("a"), ParseError);
}

TEST(NCPoly, LinearOps) {
    EXPECT_EQ(poly_concat(P("x + y"), P("y")), P("xy + yy"));
    EXPECT_TRUE(poly_scale(0, P("3*xy")).is_zero());
    EXPECT_EQ(poly_concat(poly_concat(W("x"), W("y")), W("x")), W("xyx"));
    EXPECT_EQ(poly_concat(W("x"), poly_concat(W("y"), W("x"))), W("xyx"));
    EXPECT_EQ(poly_add(P("xy"), P("-xy")), NCPoly{});
}

TEST(NCPoly, TextRoundTrip) {
    const NCPoly p = P("2*xyxy + 4*xxyy - 1/3*y + 5");
    EXPECT_EQ(to_string(p), "5 - 1/3*y + 2*xyxy + 4*xxyy");
}

TEST(NCPoly, TextAndJsonRoundTripRandom) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const NCPoly p = test::random_poly(rng, 6, 4);
        EXPECT_EQ(parse_poly(to_string(p)), p);
        EXPECT_EQ(poly_from_json(to_json(p)), p);
    }
    EXPECT_EQ(to_string(NCPoly{}), "0");
    EXPECT_EQ(parse_poly("0"), NCPoly{});
}

TEST(NCPoly, ParseErrors) {
    EXPECT_THROW((void)parse_poly("2*"), ParseError);
    EXPECT_THROW((void)parse_poly("x + + y"), ParseError);
    EXPECT_THROW((void)parse_poly("xz"), ParseError);
}

TEST(NCPoly, ConcatAssociativeUnital) {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        const NCPoly a = test::random_poly(rng, 2), b = test::random_poly(rng, 2), c = test::random_poly(rng, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * NCPoly::one(), a);
        EXPECT_EQ(NCPoly::one() * a, a);
    }
}

TEST(AlgebraHom, Examples) {
    const LinearOperator psi_op = algebra_hom(P("x + y"), P("-y"));
    EXPECT_EQ(psi_op(W("xxyyy")), P("-xxyyy - xyyyy - yxyyy - yyyyy"));
    EXPECT_EQ(algebra_hom(W("x"), W("y"))(W("xyx")), W("xyx"));
    EXPECT_EQ(psi_op(psi_op(W("xyy"))), W("xyy"));
}

TEST(AlgebraHom, RespectsProducts) {
    std::mt19937 rng(5);
    const LinearOperator h = algebra_hom(P("x + 2*y"), P("xy - y"));
    for (int i = 0; i < 50; ++i) {
        const NCPoly p = test::random_poly(rng, 3), q = test::random_poly(rng, 3);
        EXPECT_EQ(h(p * q), h(p) * h(q));
    }
}

TEST(Derivation, Examples) {
    EXPECT_EQ(D1()(W("xy")), W("xxy"));
    EXPECT_TRUE(D1()(NCPoly::one()).is_zero());
    const NCPoly img = P("xxy + xyy");
    EXPECT_EQ(derivation_from_images(img, -img)(W("x")), P("xxy + xyy"));
}

TEST(Derivation, LeibnizRule) {
    std::mt19937 rng(9);
    const LinearOperator d = derivation_from_images(P("xy - 2*y"), P("x + yx"));
    for (int i = 0; i < 60; ++i) {
        const NCPoly p = test::random_poly(rng, 3), q = test::random_poly(rng, 3);
        EXPECT_EQ(d(p * q), d(p) * q + p * d(q));
    }
}

TEST(Tau, Linear) {
    EXPECT_EQ(antiauto_tau(P("xxy + xy")), P("xyy + xy"));
    EXPECT_TRUE(antiauto_tau(NCPoly{}).is_zero());
    EXPECT_EQ(antiauto_tau(P("3*xxy")), P("3*xyy"));
}

TEST(OperatorCommutator, Examples) {
    const LinearOperator Db1 = tau_conjugate(D1());
    const LinearOperator c = operator_commutator(Db1, D1());
    EXPECT_EQ(c(W("y")), Db1(W("xy")));
    EXPECT_EQ(c(W("y")), W("xyy"));
    EXPECT_TRUE(operator_commutator(D1(), D1())(W("xyxy")).is_zero());
    EXPECT_TRUE(operator_commutator(D_operator(1), D_operator(2))(W("x")).is_zero());
}

TEST(ExpOperatorSeries, Examples) {
    std::vector<std::pair<Rational, LinearOperator>> gens{{1, D1()}};
    const TruncSeries r = exp_operator_series(gens, 2)(TruncSeries(2, W("y")));
    EXPECT_EQ(r[0], W("y"));
    EXPECT_EQ(r[1], W("xy"));
    EXPECT_EQ(r[2], make_rational(1, 2) * W("xxy"));

    const TruncSeries id = exp_operator_series({}, 3)(TruncSeries(3, P("xy + y")));
    EXPECT_EQ(id, TruncSeries(3, P("xy + y")));

    std::vector<std::pair<Rational, LinearOperator>> dn;
    for (int n = 1; n <= 3; ++n) dn.emplace_back(make_rational(1, n), D_operator(n));
    EXPECT_EQ(exp_operator_series(dn, 3)(TruncSeries(3, W("y")))[1], W("xy"));
}

TEST(ExpOperatorSeries, RejectsNonRaisingGenerator) {
    std::vector<std::pair<Rational, LinearOperator>> gens{{1, LinearOperator::identity()}};
    EXPECT_THROW((void)exp_operator_series(gens, 2), ContractError);
}

TEST(ExpOperatorSeries, TruncationConsistent) {
    std::vector<std::pair<Rational, LinearOperator>> gens;
    for (int n = 1; n <= 4; ++n) gens.emplace_back(make_rational(1, n), kaneko_operator(n));
    for (const auto& w : test::words_up_to(3)) {
        const TruncSeries big = exp_operator_series(gens, 4)(TruncSeries(4, w));
        for (int k = 0; k < 4; ++k) EXPECT_EQ(big.truncated(k), exp_operator_series(gens, k)(TruncSeries(k, w)));
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank_over_rationals({W("x"), W("y")}), 2);
    EXPECT_EQ(rank_over_rationals({W("xy"), W("yx"), P("xy + yx")}), 2);
    EXPECT_EQ(rank_over_rationals({}), 0);
    EXPECT_EQ(rank_over_rationals({NCPoly{}}), 0);
}

TEST(Rank, SolveLinear) {
    RationalMatrix a{{1, 2}, {3, 4}};
    const auto v = solve_linear(a, {5, 6});
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ((*v)[0], -4);
    EXPECT_EQ((*v)[1], make_rational(9, 2));
    EXPECT_FALSE(solve_linear({{1, 1}, {1, 1}}, {1, 2}).has_value());
}

TEST(TensorPoly, BimoduleAssociativity) {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        const Word a = test::random_word(rng, 2), b = test::random_word(rng, 2);
        const Word c = test::random_word(rng, 2), d = test::random_word(rng, 2);
        const TensorPoly t(b, c);
        EXPECT_EQ((NCPoly(a) * t) * NCPoly(d), NCPoly(a) * (t * NCPoly(d)));
        EXPECT_EQ(NCPoly(a) * t, TensorPoly(a + b, c));
        EXPECT_EQ(t * NCPoly(d), TensorPoly(b, c + d));
    }
    EXPECT_EQ(mu_tilde(TensorPoly(Word("x"), Word("y"))), W("yx"));
}

TEST(TruncSeries, ProductTruncates) {
    const TruncSeries u = TruncSeries(2, W("x")) + TruncSeries(2, W("y")).shifted(1);
    const TruncSeries sq = u * u;
    EXPECT_EQ(sq.order(), 2);
    EXPECT_EQ(sq[0], W("xx"));
    EXPECT_EQ(sq[1], P("xy + yx"));
    EXPECT_EQ(sq[2], W("yy"));
    EXPECT_TRUE((u * u * u).truncated(1)[1] == P("xxy + xyx + yxx"));
}
