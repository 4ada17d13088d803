#include "mzv/action.hpp"

#include <optional>

#include "mzv/error.hpp"
#include "mzv/qsym.hpp"

namespace mzv {

NCPoly dot(const Word& u, const Word& w) {
    if (!in_h1(u)) throw DomainError("dot: " + to_string(u) + " is not in H^1");
    const Composition zs = composition_of_word(u);
    const std::size_t m = zs.size();
    const std::size_t len = w.size();
    // memo[i][pos] = (z_{k_i}⋯z_{k_m}) · w[pos..]. Only Δ-terms whose left
    // factor is 1 or a single z_k act nontrivially on one letter.
    std::vector<std::vector<std::optional<NCPoly>>> memo(m + 1, std::vector<std::optional<NCPoly>>(len + 1));
    std::function<const NCPoly&(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t pos) -> const NCPoly& {
        auto& slot = memo[i][pos];
        if (slot) return *slot;
        if (pos == len) return slot.emplace(i == m ? NCPoly::one() : NCPoly());
        if (m - i > len - pos) return slot.emplace();
        NCPoly acc;
        const Word a{w[pos]};
        for (const auto& [v, c] : rec(i, pos + 1)) acc.add_term(a + v, c);
        if (w[pos] == Letter::y && i < m) {
            const Word head = Word::x_power(zs[i]) + Letter::y;
            for (const auto& [v, c] : rec(i + 1, pos + 1)) acc.add_term(head + v, c);
        }
        return slot.emplace(std::move(acc));
    };
    return rec(0, 0);
}

NCPoly dot(const NCPoly& u, const NCPoly& w) {
    NCPoly out;
    for (const auto& [a, ca] : u) {
        for (const auto& [b, cb] : w) {
            NCPoly d = dot(a, b);
            d *= ca * cb;
            out += d;
        }
    }
    return out;
}

NCPoly D_n(const NCPoly& w, int n) {
    if (n < 1) throw DomainError("D_n needs n >= 1");
    return dot(sym_generator(SymKind::p, n), w);
}

NCPoly Dbar_n(const NCPoly& w, int n) { return antiauto_tau(D_n(antiauto_tau(w), n)); }

LinearOperator D_operator(int n) {
    if (n < 1) throw DomainError("D_n needs n >= 1");
    return derivation_from_images(NCPoly(), NCPoly(Word::x_power(n) + Letter::y));
}

LinearOperator Dbar_operator(int n) { return tau_conjugate(D_operator(n)); }

LinearOperator kaneko_operator(int n) {
    if (n < 1) throw DomainError("kaneko_partial needs n >= 1");
    const NCPoly x(Word("x"));
    const NCPoly y(Word("y"));
    const NCPoly image = x * poly_power(x + y, n - 1) * y;
    return derivation_from_images(image, -image);
}

NCPoly kaneko_partial(const NCPoly& w, int n) { return kaneko_operator(n)(w); }

TruncSeries act_series(const std::vector<NCPoly>& g, const TruncSeries& s) {
    TruncSeries out(s.order());
    for (int m = 0; m <= s.order(); ++m) {
        if (s[m].is_zero()) continue;
        for (int n = 0; n < static_cast<int>(g.size()) && m + n <= s.order(); ++n) out[m + n] += dot(g[static_cast<std::size_t>(n)], s[m]);
    }
    return out;
}

namespace {

std::vector<NCPoly> h_series(int order) {
    std::vector<NCPoly> g;
    for (int n = 0; n <= order; ++n) g.push_back(sym_generator(SymKind::h, n));
    return g;
}

std::vector<NCPoly> e_minus_series(int order) {
    std::vector<NCPoly> g;
    for (int n = 0; n <= order; ++n) {
        NCPoly e = sym_generator(SymKind::e, n);
        if (n % 2) e *= -1;
        g.push_back(std::move(e));
    }
    return g;
}

TruncSeries tau_series(const TruncSeries& s) {
    TruncSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n) out[n] = antiauto_tau(s[n]);
    return out;
}

}  // namespace

TruncSeries sigma_t(const NCPoly& w, int order) { return act_series(h_series(order), TruncSeries(order, w)); }

TruncSeries sigma_t_inv(const NCPoly& w, int order) {
    return act_series(e_minus_series(order), TruncSeries(order, w));
}

TruncSeries sigma_bar_t(const TruncSeries& s) {
    return tau_series(act_series(h_series(s.order()), tau_series(s)));
}

TruncSeries sigma_exp_residual(const NCPoly& test, int order) {
    if (order < 1) throw DomainError("sigma_exp_residual needs order >= 1");
    const TruncSeries lhs = sigma_bar_t(sigma_t_inv(test, order));
    std::vector<std::pair<Rational, LinearOperator>> gens;
    for (int n = 1; n <= order; ++n) gens.emplace_back(make_rational(1, n), kaneko_operator(n));
    const TruncSeries rhs = exp_operator_series(gens, order)(TruncSeries(order, test));
    return lhs - rhs;
}

LinearOperator partial_commutator_formula(int n) {
    const auto D1 = D_operator(1);
    const auto B1 = Dbar_operator(1);
    const auto b1d1 = operator_commutator(B1, D1);
    if (n == 2) return Dbar_operator(2) - D_operator(2) - b1d1;
    if (n == 3) {
        const auto D2 = D_operator(2);
        const auto B2 = Dbar_operator(2);
        const Rational three_q = make_rational(3, 4);
        const Rational one_q = make_rational(1, 4);
        return Dbar_operator(3) - D_operator(3) - three_q * operator_commutator(B1, D2) -
               three_q * operator_commutator(B2, D1) + one_q * operator_commutator(b1d1, D1) -
               one_q * operator_commutator(B1, b1d1);
    }
    throw DomainError("commutator formulas are available for n = 2, 3 only");
}

NCPoly partial_commutator_residual(int n, const NCPoly& w) {
    return partial_commutator_formula(n)(w) - kaneko_partial(w, n);
}

std::vector<std::pair<Word, NCPoly>> partial_commutator_check(int n, int max_weight) {
    const auto formula = partial_commutator_formula(n);
    const auto direct = kaneko_operator(n);
    std::vector<std::pair<Word, NCPoly>> failures;
    for (int wt = 0; wt <= max_weight; ++wt) {
        for (const Word& w : all_words(wt)) {
            NCPoly r = formula(w) - direct(w);
            if (!r.is_zero()) failures.emplace_back(w, std::move(r));
        }
    }
    return failures;
}

TensorPoly hatC(const NCPoly& w, int n) {
    if (n < 1) throw DomainError("C_n needs n >= 1");
    const Word xn = Word::x_power(n);
    TensorPoly out;
    for (const auto& [word, c] : w) {
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (word[i] == Letter::y) out.add_term(word.substr(0, i + 1), xn + word.substr(i + 1), c);
        }
    }
    return out;
}

NCPoly C(const NCPoly& w, int n) { return mu_tilde(hatC(w, n)); }

LinearOperator C_operator(int n) {
    if (n < 1) throw DomainError("C_n needs n >= 1");
    return LinearOperator([n](const Word& w) { return C(NCPoly(w), n); }, n);
}

std::pair<TruncSeries, TruncSeries> cyclic_sum_identity(int n) {
    if (n < 2) throw DomainError("cyclic_sum_identity needs n >= 2");
    const int order = n;
    const NCPoly x(Word("x"));
    const NCPoly y(Word("y"));
    TruncSeries u(order, x);
    u[1] = y;
    TruncSeries upow(order, NCPoly::one());
    for (int i = 0; i < n - 2; ++i) upow = upow * u;
    const TruncSeries un1 = upow * u;  // u^{n-1}
    const TruncSeries xs(order, x);
    const TruncSeries ys(order, y);
    const TruncSeries core = make_rational(n - 1) * (xs * upow * ys);

    const auto c = C_operator(1);
    const auto tct = tau_conjugate(c);
    return {c(un1) - core.shifted(1), tct(un1) - core};
}

}  // namespace mzv
