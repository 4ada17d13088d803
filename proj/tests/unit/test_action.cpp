#include <gtest/gtest.h>

#include <random>

#include "mzv/action.hpp"
#include "mzv/error.hpp"
#include "mzv/qsym.hpp"
#include "test_util.hpp"

using namespace mzv;

namespace {

NCPoly P(const char* s) { return parse_poly(s); }
NCPoly Z(std::initializer_list<int> parts) { return NCPoly(word_of_composition(Composition(parts))); }

// Terms of u*w having the y-degree of w.
NCPoly dot_by_star_filter(const Word& u, const Word& w) {
    const int len = w.length();
    return star(NCPoly(u), NCPoly(w)).filter([len](const Word& v) { return v.length() == len; });
}

// Σ (u'·w1)(u''·w2) over the deconcatenation coproduct.
NCPoly dot_by_coproduct(const NCPoly& u, const Word& w1, const Word& w2) {
    NCPoly out;
    for (const auto& [key, c] : coproduct(u)) out += c * (dot(NCPoly(key.first), NCPoly(w1)) * dot(NCPoly(key.second), NCPoly(w2)));
    return out;
}

}  // namespace

TEST(Dot, Examples) {
    EXPECT_EQ(dot(Z({1}), P("y")), P("xy"));
    EXPECT_EQ(dot(Z({2}), P("xy")), P("xxxy"));
    EXPECT_EQ(dot(NCPoly::one(), P("yxy")), P("yxy"));
    EXPECT_TRUE(dot(Z({3}), NCPoly::one()).is_zero());
    EXPECT_TRUE(dot(Z({3}), P("x")).is_zero());
    EXPECT_THROW((void)dot(P("yx"), P("y")), DomainError);
}

TEST(Dot, StarFilterOracle) {
    for (const auto& u : test::h1_words_up_to(4))
        for (const auto& w : test::words_up_to(4)) EXPECT_EQ(dot(u, w), dot_by_star_filter(u, w)) << to_string(u) << " . " << to_string(w);
}

TEST(Dot, CoproductLaw) {
    for (const auto& u : test::h1_words_up_to(3))
        for (const auto& w : test::words_up_to(4))
            for (std::size_t cut = 0; cut <= w.size(); ++cut)
                EXPECT_EQ(dot(u, w), dot_by_coproduct(NCPoly(u), w.substr(0, cut), w.substr(cut)));
}

TEST(Dot, IsAnAction) {
    std::mt19937 rng(101);
    for (int i = 0; i < 60; ++i) {
        const NCPoly u = test::random_h1_poly(rng, 3, 2);
        const NCPoly v = test::random_h1_poly(rng, 3, 2);
        const NCPoly w = test::random_poly(rng, 4, 2);
        EXPECT_EQ(dot(u, dot(v, w)), dot(star(u, v), w));
    }
}

TEST(Dn, Examples) {
    EXPECT_EQ(D_n(Z({4, 2}), 1), Z({5, 2}) + Z({4, 3}));
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(D_n(P("x"), n).is_zero());
    EXPECT_EQ(Dbar_n(P("x"), 1), P("xy"));
}

TEST(Dn, DualDefinitionsAgree) {
    for (int n = 1; n <= 4; ++n) {
        const LinearOperator d = D_operator(n);
        const LinearOperator db = Dbar_operator(n);
        for (const auto& w : test::words_up_to(5)) {
            EXPECT_EQ(D_n(NCPoly(w), n), d(w));
            EXPECT_EQ(Dbar_n(NCPoly(w), n), db(w));
            EXPECT_EQ(D_n(NCPoly(w), n), dot(sym_generator(SymKind::p, n), NCPoly(w)));
        }
    }
}

TEST(Sigma, Examples) {
    const TruncSeries sx = sigma_t(P("x"), 4);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(sx[n], n == 0 ? P("x") : NCPoly{});
    const TruncSeries sy = sigma_t(P("y"), 4);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(sy[n], NCPoly(Word::x_power(n) + Letter::y));
    const TruncSeries s = sigma_t(P("xy"), 3);
    const TruncSeries back = act_series([] {
        std::vector<NCPoly> g;
        for (int n = 0; n <= 3; ++n) g.push_back((n % 2 ? -1 : 1) * sym_generator(SymKind::e, n));
        return g;
    }(), s);
    EXPECT_EQ(back, TruncSeries(3, P("xy")));
}

TEST(Sigma, InversePairOnWords) {
    for (const auto& w : test::words_up_to(4)) {
        const TruncSeries s = sigma_t(NCPoly(w), 4);
        std::vector<NCPoly> g;
        for (int n = 0; n <= 4; ++n) g.push_back((n % 2 ? -1 : 1) * sym_generator(SymKind::e, n));
        EXPECT_EQ(act_series(g, s), TruncSeries(4, NCPoly(w)));
    }
}

TEST(Sigma, ExponentialOfDn) {
    std::vector<std::pair<Rational, LinearOperator>> gens;
    for (int n = 1; n <= 4; ++n) gens.emplace_back(make_rational(1, n), D_operator(n));
    const SeriesOperator e = exp_operator_series(gens, 4);
    for (const auto& w : test::words_up_to(4)) EXPECT_EQ(sigma_t(NCPoly(w), 4), e(TruncSeries(4, NCPoly(w)))) << to_string(w);
}

TEST(Kaneko, Examples) {
    const LinearOperator d1 = kaneko_operator(1);
    for (const auto& w : test::words_up_to(6)) EXPECT_EQ(d1(w), Dbar_n(NCPoly(w), 1) - D_n(NCPoly(w), 1));
    EXPECT_EQ(kaneko_partial(P("x"), 2), P("xxy + xyy"));
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(kaneko_partial(P("x + y"), n).is_zero());
}

TEST(SigmaExp, Examples) {
    const TruncSeries lhs = sigma_bar_t(sigma_t_inv(P("x"), 3));
    EXPECT_EQ(lhs[0], P("x"));
    EXPECT_EQ(lhs[1], P("xy"));
    EXPECT_EQ(lhs[2], P("xyy"));
    EXPECT_EQ(lhs[3], P("xyyy"));
    EXPECT_TRUE(sigma_exp_residual(P("x"), 3).is_zero());
    EXPECT_TRUE(sigma_exp_residual(P("x + y"), 3).is_zero());
    EXPECT_EQ(sigma_bar_t(sigma_t_inv(P("x + y"), 3)), TruncSeries(3, P("x + y")));
    EXPECT_TRUE(sigma_exp_residual(P("xy"), 2).is_zero());
}

TEST(SigmaExp, AllWordsThroughOrderThree) {
    for (const auto& w : test::words_up_to(3)) EXPECT_TRUE(sigma_exp_residual(NCPoly(w), 3).is_zero()) << to_string(w);
}

TEST(Commutators, Examples) {
    EXPECT_TRUE(partial_commutator_residual(2, P("y")).is_zero());
    EXPECT_TRUE(partial_commutator_residual(2, P("x")).is_zero());
    EXPECT_TRUE(partial_commutator_residual(3, P("xy")).is_zero());
    EXPECT_TRUE(partial_commutator_check(2, 5).empty());
    EXPECT_TRUE(partial_commutator_check(3, 5).empty());
}

TEST(Cyclic, Examples) {
    EXPECT_EQ(C(P("xxxyxy")), P("xxyxxxy + xxxxyxy"));
    EXPECT_EQ(C(Z({4, 2})), Z({5, 2}) + Z({3, 4}));
    for (int a = 0; a <= 4; ++a) EXPECT_TRUE(C(NCPoly(Word::x_power(a))).is_zero());
    for (const auto& w : test::words_up_to(5)) EXPECT_EQ(C(NCPoly(w)), mu_tilde(hatC(NCPoly(w))));
    EXPECT_EQ(C_operator(2)(Word("y")), P("xxy"));
}

TEST(Cyclic, HatCBimoduleLeibniz) {
    std::mt19937 rng(55);
    for (int i = 0; i < 80; ++i) {
        const NCPoly p = test::random_poly(rng, 3), q = test::random_poly(rng, 2);
        for (int n = 1; n <= 2; ++n) EXPECT_EQ(hatC(p * q, n), hatC(p, n) * q + p * hatC(q, n));
    }
    EXPECT_EQ(hatC(P("y"), 2), TensorPoly(Word("y"), Word("xx")));
}

TEST(Cyclic, SumIdentity) {
    for (int n = 2; n <= 5; ++n) {
        const auto [a, b] = cyclic_sum_identity(n);
        EXPECT_TRUE(a.is_zero()) << n;
        EXPECT_TRUE(b.is_zero()) << n;
    }
}
