#pragma once

#include <random>
#include <string>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/words.hpp"

namespace mzv::test {

inline Word random_word(std::mt19937& rng, int weight) {
    std::string s;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < weight; ++i) s += coin(rng) ? 'x' : 'y';
    return Word(s);
}

/// Random word of weight in [0, max_weight] ending in y (or the unit).
inline Word random_h1_word(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> wd(0, max_weight);
    const int w = wd(rng);
    if (w == 0) return Word{};
    return random_word(rng, w - 1) + Letter::y;
}

inline Word random_admissible_word(std::mt19937& rng, int min_weight, int max_weight) {
    std::uniform_int_distribution<int> wd(min_weight, max_weight);
    const int w = std::max(2, wd(rng));
    return Letter::x + random_word(rng, w - 2) + Letter::y;
}

/// Small random polynomial with a few terms of weight ≤ max_weight.
inline NCPoly random_poly(std::mt19937& rng, int max_weight, int terms = 3) {
    std::uniform_int_distribution<int> wd(0, max_weight);
    std::uniform_int_distribution<int> cd(-5, 5);
    NCPoly p;
    for (int i = 0; i < terms; ++i) p.add_term(random_word(rng, wd(rng)), make_rational(cd(rng), 1 + (i % 3)));
    return p;
}

inline NCPoly random_h1_poly(std::mt19937& rng, int max_weight, int terms = 3) {
    std::uniform_int_distribution<int> cd(-5, 5);
    NCPoly p;
    for (int i = 0; i < terms; ++i) p.add_term(random_h1_word(rng, max_weight), make_rational(cd(rng), 1 + (i % 2)));
    return p;
}

/// Every word of weight ≤ max_weight, unit included.
inline std::vector<Word> words_up_to(int max_weight) {
    std::vector<Word> out;
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& w : all_words(n)) out.push_back(w);
    return out;
}

inline std::vector<Word> h1_words_up_to(int max_weight) {
    std::vector<Word> out;
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& w : h1_words(n)) out.push_back(w);
    return out;
}

}  // namespace mzv::test
