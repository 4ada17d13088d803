#include "mzv/shuffle.hpp"

#include "mzv/error.hpp"

namespace mzv {

NCPoly shuffle(const Word& u, const Word& v) {
    // memo[i][j] = suffix(u, i) ⧢ suffix(v, j); filled from the back.
    const std::size_t m = u.size();
    const std::size_t n = v.size();
    std::vector<std::vector<NCPoly>> memo(m + 1, std::vector<NCPoly>(n + 1));
    for (std::size_t i = m + 1; i-- > 0;) {
        for (std::size_t j = n + 1; j-- > 0;) {
            if (i == m) {
                memo[i][j] = NCPoly(v.substr(j));
                continue;
            }
            if (j == n) {
                memo[i][j] = NCPoly(u.substr(i));
                continue;
            }
            NCPoly acc;
            const Word a{u[i]};
            const Word b{v[j]};
            for (const auto& [w, c] : memo[i + 1][j]) acc.add_term(a + w, c);
            for (const auto& [w, c] : memo[i][j + 1]) acc.add_term(b + w, c);
            memo[i][j] = std::move(acc);
        }
    }
    return std::move(memo[0][0]);
}

NCPoly shuffle(const NCPoly& p, const NCPoly& q) {
    NCPoly out;
    for (const auto& [u, cu] : p) {
        for (const auto& [v, cv] : q) {
            NCPoly s = shuffle(u, v);
            s *= cu * cv;
            out += s;
        }
    }
    return out;
}

bool shuffle_right_recursion_check(const Word& w1, Letter a, const Word& w2, Letter b) {
    const NCPoly lhs = shuffle(w1 + a, w2 + b);
    const NCPoly rhs = shuffle(w1, w2 + b) * NCPoly(Word{a}) + shuffle(w1 + a, w2) * NCPoly(Word{b});
    return lhs == rhs;
}

NCPoly bbbl_convolution(int n) {
    if (n < 0) throw ContractError("bbbl_convolution needs n >= 0");
    const NCPoly xy(Word("xy"));
    NCPoly lhs;
    for (int r = -n; r <= n; ++r) {
        NCPoly term = shuffle(poly_power(xy, n - r), poly_power(xy, n + r));
        if (r % 2 != 0) term *= -1;
        lhs += term;
    }
    Rational four_n = 1;
    for (int i = 0; i < n; ++i) four_n *= 4;
    return lhs - four_n * poly_power(NCPoly(Word("xxyy")), n);
}

}  // namespace mzv
