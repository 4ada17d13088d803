#include "mzv/qsym.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace mzv {

// ---------------------------------------------------------------- star

namespace {

struct BlockView {
    bool pure_x;       // suffix has no y
    std::size_t p;     // x's before the first y
    std::size_t next;  // position after the first y
};

BlockView first_block(const Word& w, std::size_t i) {
    auto pos = w.letters().find('y', i);
    if (pos == std::string::npos) return {true, w.size() - i, w.size()};
    return {false, pos - i, pos + 1};
}

NCPoly prepend(const Word& prefix, const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p) out.add_term(prefix + w, c);
    return out;
}

}  // namespace

NCPoly star(const Word& u, const Word& v) {
    const std::size_t m = u.size();
    const std::size_t n = v.size();
    std::vector<std::vector<std::optional<NCPoly>>> memo(m + 1, std::vector<std::optional<NCPoly>>(n + 1));
    std::function<const NCPoly&(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) -> const NCPoly& {
        auto& slot = memo[i][j];
        if (slot) return *slot;
        if (i == m) return slot.emplace(v.substr(j));
        if (j == n) return slot.emplace(u.substr(i));
        const BlockView a = first_block(u, i);
        const BlockView b = first_block(v, j);
        if (a.pure_x) return slot.emplace(NCPoly(v.substr(j) + u.substr(i)));
        if (b.pure_x) return slot.emplace(NCPoly(u.substr(i) + v.substr(j)));
        NCPoly acc = prepend(Word::x_power(static_cast<int>(a.p)) + Letter::y, rec(a.next, j));
        acc += prepend(Word::x_power(static_cast<int>(b.p)) + Letter::y, rec(i, b.next));
        acc += prepend(Word::x_power(static_cast<int>(a.p + b.p + 1)) + Letter::y, rec(a.next, b.next));
        return slot.emplace(std::move(acc));
    };
    return rec(0, 0);
}

NCPoly star(const NCPoly& p, const NCPoly& q) {
    NCPoly out;
    for (const auto& [u, cu] : p) {
        for (const auto& [v, cv] : q) {
            NCPoly s = star(u, v);
            s *= cu * cv;
            out += s;
        }
    }
    return out;
}

NCPoly star_power(const NCPoly& p, int n) {
    NCPoly out = NCPoly::one();
    for (int i = 0; i < n; ++i) out = star(out, p);
    return out;
}

// ------------------------------------------------------------- QSymExpr

char basis_letter(Basis b) {
    switch (b) {
        case Basis::M: return 'M';
        case Basis::F: return 'F';
        case Basis::E: return 'E';
    }
    return '?';
}

Basis parse_basis(std::string_view text) {
    if (text == "M") return Basis::M;
    if (text == "F") return Basis::F;
    if (text == "E") return Basis::E;
    throw ParseError("basis must be M, F or E", 0);
}

Rational QSymExpr::coefficient(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSymExpr::add_term(const Composition& I, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(I, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& other) {
    const QSymExpr& o = other.basis_ == basis_ ? other : convert_basis(other, basis_);
    for (const auto& [I, c] : o.terms_) add_term(I, c);
    return *this;
}

QSymExpr& QSymExpr::operator-=(const QSymExpr& other) {
    QSymExpr o = other.basis_ == basis_ ? other : convert_basis(other, basis_);
    for (const auto& [I, c] : o.terms_) add_term(I, -c);
    return *this;
}

QSymExpr& QSymExpr::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [I, v] : terms_) v *= c;
    return *this;
}

std::string to_string(const QSymExpr& e) {
    if (e.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [I, c] : e) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) s += '-';
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        first = false;
        if (mag != 1) s += to_string(mag) + "*";
        s += basis_letter(e.basis());
        s += to_string(I);
    }
    return s;
}

QSymExpr parse_qsym(std::string_view text) {
    std::optional<QSymExpr> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    int sign = 1;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    for (;;) {
        skip();
        Rational coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            const std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
            try {
                coeff = parse_rational(text.substr(start, pos - start));
            } catch (const ParseError& e) {
                throw ParseError("bad coefficient", start + e.offset());
            }
            skip();
            if (pos >= text.size() || text[pos] != '*') throw ParseError("expected '*' after coefficient", pos);
            ++pos;
            skip();
        }
        if (pos >= text.size()) throw ParseError("expected M, F or E", pos);
        Basis b;
        try {
            b = parse_basis(text.substr(pos, 1));
        } catch (const ParseError&) {
            throw ParseError("expected M, F or E", pos);
        }
        ++pos;
        const std::size_t open = pos;
        const std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos) throw ParseError("expected ')'", text.size());
        Composition I;
        try {
            I = parse_composition(text.substr(open, close - open + 1));
        } catch (const ParseError& e) {
            throw ParseError("bad composition", open + e.offset());
        }
        pos = close + 1;
        if (!out) out.emplace(b);
        if (out->basis() != b) throw ParseError("mixed bases", open - 1);
        out->add_term(I, sign * coeff);
        skip();
        if (pos >= text.size()) break;
        if (text[pos] != '+' && text[pos] != '-') throw ParseError("expected '+' or '-'", pos);
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    return *out;
}

nlohmann::json to_json(const QSymExpr& e) {
    auto terms = nlohmann::json::array();
    for (const auto& [I, c] : e) terms.push_back({{"coeff", to_string(c)}, {"composition", I.parts()}});
    return {{"basis", std::string(1, basis_letter(e.basis()))}, {"terms", terms}};
}

namespace {

QSymExpr to_m(const QSymExpr& e) {
    if (e.basis() == Basis::M) return e;
    QSymExpr out(Basis::M);
    for (const auto& [I, c] : e) {
        const auto js = e.basis() == Basis::F ? refinements(I) : coarsenings(I);
        for (const auto& J : js) out.add_term(J, c);
    }
    return out;
}

QSymExpr from_m(const QSymExpr& e, Basis target) {
    if (target == Basis::M) return e;
    QSymExpr out(target);
    for (const auto& [I, c] : e) {
        if (target == Basis::F) {
            for (const auto& J : refinements(I)) {
                out.add_term(J, (J.length() - I.length()) % 2 ? Rational(-c) : c);
            }
        } else {
            for (const auto& J : coarsenings(I)) {
                out.add_term(J, (I.length() - J.length()) % 2 ? Rational(-c) : c);
            }
        }
    }
    return out;
}

// Quasi-shuffle of compositions, first-part recursion.
QSymExpr quasi_shuffle(const Composition& a, const Composition& b) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    using Terms = std::map<std::vector<int>, Rational>;
    std::vector<std::vector<Terms>> memo(m + 1, std::vector<Terms>(n + 1));
    auto suffix = [](const Composition& c, std::size_t i) {
        return std::vector<int>(c.parts().begin() + static_cast<std::ptrdiff_t>(i), c.parts().end());
    };
    auto push = [](Terms& into, int head, const Terms& from) {
        for (const auto& [v, c] : from) {
            std::vector<int> w;
            w.reserve(v.size() + 1);
            w.push_back(head);
            w.insert(w.end(), v.begin(), v.end());
            into[w] += c;
        }
    };
    for (std::size_t i = m + 1; i-- > 0;) {
        for (std::size_t j = n + 1; j-- > 0;) {
            Terms& t = memo[i][j];
            if (i == m) {
                t[suffix(b, j)] = 1;
            } else if (j == n) {
                t[suffix(a, i)] = 1;
            } else {
                push(t, a[i], memo[i + 1][j]);
                push(t, b[j], memo[i][j + 1]);
                push(t, a[i] + b[j], memo[i + 1][j + 1]);
            }
        }
    }
    QSymExpr out(Basis::M);
    for (const auto& [v, c] : memo[0][0]) out.add_term(Composition(v), c);
    return out;
}

}  // namespace

QSymExpr convert_basis(const QSymExpr& e, Basis target) {
    if (e.basis() == target) return e;
    return from_m(to_m(e), target);
}

QSymExpr qsym_mul(const QSymExpr& a, const QSymExpr& b) {
    const QSymExpr am = to_m(a);
    const QSymExpr bm = to_m(b);
    QSymExpr out(Basis::M);
    for (const auto& [I, ci] : am) {
        for (const auto& [J, cj] : bm) {
            QSymExpr prod = quasi_shuffle(I, J);
            prod *= ci * cj;
            out += prod;
        }
    }
    return from_m(out, a.basis());
}

Rational counit(const QSymExpr& e) { return e.coefficient(Composition{}); }

QSymExpr phi(const NCPoly& p) {
    QSymExpr out(Basis::M);
    for (const auto& [w, c] : p) out.add_term(reverse(composition_of_word(w)), c);
    return out;
}

NCPoly phi_inv(const QSymExpr& e) {
    NCPoly out;
    for (const auto& [I, c] : to_m(e)) out.add_term(word_of_composition(reverse(I)), c);
    return out;
}

// -------------------------------------------------------------- CommPoly

Rational CommPoly::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(exponents.size()) != variables_) throw ContractError("exponent vector size mismatch");
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    if (a.variables_ != b.variables_) throw ContractError("variable count mismatch");
    CommPoly out(a.variables_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::string to_string(const CommPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*t" << i + 1;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

CommPoly expand_in_variables(const QSymExpr& e, int n) {
    CommPoly out(n);
    for (const auto& [I, c] : to_m(e)) {
        const int k = I.length();
        if (k > n) continue;
        // Increasing index tuples j1 < ... < jk chosen from 0..n-1.
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<int> expo(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < k; ++i) expo[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = I[static_cast<std::size_t>(i)];
            out.add_term(expo, c);
            int pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return out;
}

// ------------------------------------------------------------ Hopf maps

TensorPoly coproduct(const NCPoly& p) {
    TensorPoly out;
    for (const auto& [w, c] : p) {
        if (!in_h1(w)) throw DomainError("coproduct: word " + to_string(w) + " is not in H^1");
        out.add_term(Word{}, w, c);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] == Letter::y) out.add_term(w.substr(0, i + 1), w.substr(i + 1), c);
        }
    }
    return out;
}

QSymExpr antipode(const QSymExpr& e, AntipodeFormula formula) {
    const QSymExpr m = to_m(e);
    if (formula == AntipodeFormula::dual) {
        QSymExpr out(Basis::E);
        for (const auto& [I, c] : m) out.add_term(reverse(I), I.length() % 2 ? Rational(-c) : c);
        return out;
    }
    QSymExpr out(Basis::M);
    for (const auto& [I, c] : m) {
        if (I.empty()) {
            out.add_term(I, c);
            continue;
        }
        const std::size_t k = I.size();
        // Each subset of the k-1 gaps is a splitting into consecutive blocks.
        for (std::size_t cuts = 0; cuts < (std::size_t{1} << (k - 1)); ++cuts) {
            QSymExpr prod = QSymExpr::unit();
            std::vector<int> block;
            int blocks = 0;
            for (std::size_t i = 0; i < k; ++i) {
                block.push_back(I[i]);
                if (i + 1 == k || (cuts & (std::size_t{1} << i))) {
                    prod = qsym_mul(prod, QSymExpr(Basis::M, Composition(block)));
                    block.clear();
                    ++blocks;
                }
            }
            prod *= (blocks % 2 ? Rational(-c) : c);
            out += prod;
        }
    }
    return out;
}

QSymExpr T_reverse(const QSymExpr& e) {
    QSymExpr out(Basis::M);
    for (const auto& [I, c] : to_m(e)) out.add_term(reverse(I), c);
    return out;
}

LinearOperator psi_operator() {
    return algebra_hom(NCPoly(Word("x")) + NCPoly(Word("y")), -NCPoly(Word("y")));
}

NCPoly psi(const NCPoly& p) { return psi_operator()(p); }

QSymExpr psi_qsym(const QSymExpr& e) {
    NCPoly words;
    for (const auto& [I, c] : to_m(e)) words.add_term(word_of_composition(I), c);
    QSymExpr out(Basis::M);
    for (const auto& [w, c] : psi(words)) out.add_term(composition_of_word(w), c);
    return convert_basis(out, e.basis());
}

NCPoly sym_generator(SymKind kind, int n) {
    if (n < 0) throw DomainError("sym_generator needs n >= 0");
    switch (kind) {
        case SymKind::e: return NCPoly(Word::y_power(n));
        case SymKind::p:
            if (n == 0) throw DomainError("p_0 is not defined");
            return NCPoly(Word::x_power(n - 1) + Letter::y);
        case SymKind::h: {
            NCPoly out;
            for (const Word& w : h1_words(n)) out.add_term(w, 1);
            return out;
        }
    }
    return {};
}

// ------------------------------------------------------------ power sums

Rational SymPowerExpr::coefficient(std::vector<int> partition) const {
    std::sort(partition.rbegin(), partition.rend());
    auto it = terms_.find(partition);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPowerExpr::add_term(std::vector<int> partition, const Rational& c) {
    if (c == 0) return;
    std::sort(partition.rbegin(), partition.rend());
    auto [it, inserted] = terms_.try_emplace(partition, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string to_string(const SymPowerExpr& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : s.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < lambda.size();) {
            std::size_t j = i;
            while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
            if (!mono.empty()) mono += '*';
            mono += "p" + std::to_string(lambda[i]);
            if (j - i > 1) mono += "^" + std::to_string(j - i);
            i = j;
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            out += (mag == 1 ? "" : to_string(mag) + "*") + mono;
        }
    }
    return out;
}

namespace {

std::string monomial_text(const std::vector<int>& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "t" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

void partitions_rec(int left, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(left - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

QSymExpr power_sum_product(const std::vector<int>& mu) {
    QSymExpr out = QSymExpr::unit();
    for (int part : mu) out = qsym_mul(out, QSymExpr(Basis::M, Composition{part}));
    return out;
}

// Exhaustive symmetry test of a homogeneous expansion; throws with a witness.
void require_symmetric(const CommPoly& p) {
    std::set<std::vector<int>> seen;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> perm = e;
        std::sort(perm.begin(), perm.end());
        if (!seen.insert(perm).second) continue;
        do {
            Rational other = p.coefficient(perm);
            if (other != c) throw NotSymmetricError(e, c, perm, other);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

}  // namespace

NotSymmetricError::NotSymmetricError(std::vector<int> first, Rational first_coeff, std::vector<int> second,
                                     Rational second_coeff)
    : DomainError("not a symmetric function: coefficient of " + monomial_text(first) + " is " +
                  to_string(first_coeff) + " but coefficient of " + monomial_text(second) + " is " +
                  to_string(second_coeff)),
      first_(std::move(first)),
      second_(std::move(second)) {}

SymPowerExpr to_power_sums(const QSymExpr& e) {
    const QSymExpr m = to_m(e);
    std::map<int, QSymExpr> by_degree;
    for (const auto& [I, c] : m) {
        auto [it, _] = by_degree.try_emplace(I.weight(), Basis::M);
        it->second.add_term(I, c);
    }
    SymPowerExpr out;
    for (const auto& [d, part] : by_degree) {
        if (d == 0) {
            out.add_term({}, part.coefficient(Composition{}));
            continue;
        }
        require_symmetric(expand_in_variables(part, d + 1));
        const auto lambdas = partitions(d);
        // Column mu: p_mu in the monomial symmetric basis, read off M_lambda.
        RationalMatrix a(lambdas.size(), std::vector<Rational>(lambdas.size()));
        for (std::size_t col = 0; col < lambdas.size(); ++col) {
            const QSymExpr pm = power_sum_product(lambdas[col]);
            for (std::size_t row = 0; row < lambdas.size(); ++row) {
                a[row][col] = pm.coefficient(Composition(lambdas[row]));
            }
        }
        std::vector<Rational> b(lambdas.size());
        for (std::size_t row = 0; row < lambdas.size(); ++row) b[row] = part.coefficient(Composition(lambdas[row]));
        auto sol = solve_linear(a, b);
        if (!sol) throw ContractError("power-sum system unexpectedly inconsistent");
        for (std::size_t col = 0; col < lambdas.size(); ++col) out.add_term(lambdas[col], (*sol)[col]);
    }
    return out;
}

QSymExpr from_power_sums(const SymPowerExpr& s) {
    QSymExpr out(Basis::M);
    for (const auto& [mu, c] : s.terms()) {
        QSymExpr term = power_sum_product(mu);
        term *= c;
        out += term;
    }
    return out;
}

// ------------------------------------------------------- H^1 = H^0[y]

namespace {

int leading_ys(const Word& w) {
    int k = 0;
    while (static_cast<std::size_t>(k) < w.size() && w[static_cast<std::size_t>(k)] == Letter::y) ++k;
    return k;
}

}  // namespace

std::vector<std::pair<NCPoly, int>> decompose_H1_over_H0(const NCPoly& w) {
    for (const auto& [word, c] : w) {
        if (!in_h1(word)) throw DomainError("decompose_H1_over_H0: word " + to_string(word) + " is not in H^1");
    }
    // y^k v with v admissible equals v * y^{*k}/k! up to terms with fewer
    // leading y's; peel off the largest k repeatedly.
    std::map<int, NCPoly> parts;
    NCPoly rem = w;
    const NCPoly y(Word("y"));
    while (!rem.is_zero()) {
        int k = 0;
        for (const auto& [word, c] : rem) k = std::max(k, leading_ys(word));
        if (k == 0) {
            parts[0] += rem;
            break;
        }
        NCPoly head;
        for (const auto& [word, c] : rem) {
            if (leading_ys(word) == k) head.add_term(word.substr(static_cast<std::size_t>(k)), c);
        }
        head *= Rational(1) / Rational(factorial(static_cast<unsigned long>(k)));
        parts[k] += head;
        rem -= star(head, star_power(y, k));
    }
    std::vector<std::pair<NCPoly, int>> out;
    for (auto& [j, c] : parts) {
        if (!c.is_zero()) out.emplace_back(std::move(c), j);
    }
    return out;
}

NCPoly recompose_H1(const std::vector<std::pair<NCPoly, int>>& parts) {
    NCPoly out;
    const NCPoly y(Word("y"));
    for (const auto& [c, j] : parts) out += star(c, star_power(y, j));
    return out;
}

}  // namespace mzv
