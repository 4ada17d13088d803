#include <gtest/gtest.h>

#include <random>

#include "mzv/algebra.hpp"
#include "mzv/shuffle.hpp"
#include "test_util.hpp"

using namespace mzv;

namespace {

NCPoly P(const char* s) { return parse_poly(s); }

// Sum over all placements of u's letters among |u|+|v| slots.
NCPoly shuffle_by_interleaving(const Word& u, const Word& v) {
    const std::size_t n = u.size() + v.size();
    NCPoly out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
        std::string s;
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < n; ++k) s += (mask >> k & 1u) ? u.letters()[i++] : v.letters()[j++];
        out.add_term(Word(s), 1);
    }
    return out;
}

// Shuffle monomials in Lyndon words of total degree d: products over multisets.
void lyndon_monomials(const std::vector<Word>& lyndon, std::size_t start, int remaining, const NCPoly& acc,
                      NCPoly (*mul)(const NCPoly&, const NCPoly&), std::vector<NCPoly>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i < lyndon.size(); ++i) {
        const int w = lyndon[i].weight();
        if (w > remaining) continue;
        lyndon_monomials(lyndon, i, remaining - w, mul(acc, NCPoly(lyndon[i])), mul, out);
    }
}

NCPoly shuffle_poly(const NCPoly& a, const NCPoly& b) { return shuffle(a, b); }

}  // namespace

TEST(Shuffle, Examples) {
    EXPECT_EQ(shuffle(P("xy"), P("xy")), P("2*xyxy + 4*xxyy"));
    EXPECT_EQ(shuffle(NCPoly::one(), P("xxy")), P("xxy"));
    EXPECT_EQ(shuffle(P("xxy"), NCPoly::one()), P("xxy"));
    EXPECT_EQ(shuffle(P("x"), P("y")), P("xy + yx"));
}

TEST(Shuffle, MatchesInterleavingOracle) {
    for (const auto& u : test::words_up_to(4))
        for (const auto& v : test::words_up_to(4)) EXPECT_EQ(shuffle(u, v), shuffle_by_interleaving(u, v));
}

TEST(Shuffle, CommutativeAssociative) {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const Word a = test::random_word(rng, 2), b = test::random_word(rng, 3), c = test::random_word(rng, 2);
        EXPECT_EQ(shuffle(a, b), shuffle(b, a));
        EXPECT_EQ(shuffle(shuffle(NCPoly(a), NCPoly(b)), NCPoly(c)), shuffle(NCPoly(a), shuffle(NCPoly(b), NCPoly(c))));
    }
}

TEST(Shuffle, TauIsAutomorphism) {
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        const NCPoly p = test::random_poly(rng, 4), q = test::random_poly(rng, 3);
        EXPECT_EQ(antiauto_tau(shuffle(p, q)), shuffle(antiauto_tau(p), antiauto_tau(q)));
    }
}

TEST(Shuffle, RightRecursion) {
    EXPECT_TRUE(shuffle_right_recursion_check(Word("x"), Letter::y, Word("y"), Letter::x));
    EXPECT_TRUE(shuffle_right_recursion_check(Word{}, Letter::x, Word{}, Letter::y));
    std::mt19937 rng(23);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 100; ++i) {
        const Letter a = coin(rng) ? Letter::x : Letter::y;
        const Letter b = coin(rng) ? Letter::x : Letter::y;
        EXPECT_TRUE(shuffle_right_recursion_check(test::random_word(rng, 2), a, test::random_word(rng, 2), b));
    }
}

TEST(Shuffle, LyndonMonomialsSpan) {
    for (int d = 1; d <= 5; ++d) {
        std::vector<Word> lyndon;
        for (int k = 1; k <= d; ++k)
            for (const auto& w : lyndon_words(k)) lyndon.push_back(w);
        std::vector<NCPoly> mons;
        lyndon_monomials(lyndon, 0, d, NCPoly::one(), &shuffle_poly, mons);
        EXPECT_EQ(static_cast<int>(mons.size()), 1 << d) << "monomial count, degree " << d;
        EXPECT_EQ(rank_over_rationals(mons), 1 << d) << "degree " << d;
    }
}

TEST(Shuffle, ConvolutionIdentity) {
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(bbbl_convolution(n).is_zero()) << n;
}
