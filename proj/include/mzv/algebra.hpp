#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mzv/rational.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Canonical term order: weight ascending, then lexicographically
/// descending within a weight.
struct TermOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;
    }
};

/// Element of Q<x,y>: a finite exact-rational combination of words.
/// Zero coefficients are never stored.
class NCPoly {
public:
    using Terms = std::map<Word, Rational, TermOrder>;

    NCPoly() = default;
    NCPoly(const Word& w) { add_term(w, 1); }  // NOLINT(google-explicit-constructor)
    NCPoly(const Word& w, const Rational& c) { add_term(w, c); }
    static NCPoly constant(const Rational& c) { return NCPoly(Word{}, c); }
    static NCPoly one() { return constant(1); }
    static NCPoly letter(Letter a) { return NCPoly(Word{a}); }

    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Word& w) const;
    void add_term(const Word& w, const Rational& c);

    /// Largest word weight in the support, -1 for the zero polynomial.
    int max_weight() const;
    bool all_words(const std::function<bool(const Word&)>& pred) const;
    /// Terms of exactly this weight.
    NCPoly homogeneous_part(int weight) const;
    NCPoly filter(const std::function<bool(const Word&)>& pred) const;

    NCPoly& operator+=(const NCPoly& other);
    NCPoly& operator-=(const NCPoly& other);
    NCPoly& operator*=(const Rational& c);
    NCPoly operator-() const;

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const Rational& c, NCPoly p) { return p *= c; }
    friend NCPoly operator*(NCPoly p, const Rational& c) { return p *= c; }
    /// Concatenation product of the free algebra.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

    friend bool operator==(const NCPoly&, const NCPoly&) = default;

private:
    Terms terms_;
};

NCPoly poly_add(const NCPoly& p, const NCPoly& q);
NCPoly poly_scale(const Rational& c, const NCPoly& p);
NCPoly poly_concat(const NCPoly& p, const NCPoly& q);
/// p^n under concatenation.
NCPoly poly_power(const NCPoly& p, int n);
NCPoly antiauto_tau(const NCPoly& p);

/// "c1*w1 + c2*w2 - ...", canonical term order, "0" for the zero polynomial.
std::string to_string(const NCPoly& p);
/// Inverse of to_string; also accepts exponent notation in words ("3/2*x^2y").
NCPoly parse_poly(std::string_view text);
/// [{"coeff": "p/q", "word": "letters"}, ...]
nlohmann::json to_json(const NCPoly& p);
NCPoly poly_from_json(const nlohmann::json& j);

/// Element of H ⊗ H with the bimodule structure a(b⊗c) = ab⊗c, (a⊗b)c = a⊗bc.
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Rational>;

    TensorPoly() = default;
    TensorPoly(const Word& a, const Word& b, const Rational& c = 1) { add_term(a, b, c); }

    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Word& a, const Word& b) const;
    void add_term(const Word& a, const Word& b, const Rational& c);

    TensorPoly& operator+=(const TensorPoly& other);
    TensorPoly& operator-=(const TensorPoly& other);
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(const Rational& c, const TensorPoly& t);

    friend TensorPoly operator*(const NCPoly& a, const TensorPoly& t);
    friend TensorPoly operator*(const TensorPoly& t, const NCPoly& c);

    friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

private:
    Terms terms_;
};

/// a⊗b ↦ ba
NCPoly mu_tilde(const TensorPoly& t);
std::string to_string(const TensorPoly& t);

/// Truncated power series in a formal commuting variable t with NCPoly
/// coefficients; everything of t-degree above `order` is discarded.
class TruncSeries {
public:
    explicit TruncSeries(int order = 0);
    TruncSeries(int order, const NCPoly& constant_term);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const NCPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    NCPoly& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<NCPoly>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    TruncSeries truncated(int order) const;

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const Rational& c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const Rational& c, TruncSeries s) { return s *= c; }
    /// Concatenation product, t commuting with x and y.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    /// Multiply by t^k.
    TruncSeries shifted(int k) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<NCPoly> coeffs_;
};

std::string to_string(const TruncSeries& s);

/// Q-linear operator on Q<x,y>, specified by its value on words.
/// `degree` is the amount by which it raises weight when that is uniform.
class LinearOperator {
public:
    using WordFn = std::function<NCPoly(const Word&)>;

    LinearOperator() = default;
    LinearOperator(WordFn on_word, std::optional<int> degree)
        : on_word_(std::move(on_word)), degree_(degree) {}

    static LinearOperator identity();
    static LinearOperator zero(std::optional<int> degree = std::nullopt);

    NCPoly operator()(const Word& w) const { return on_word_(w); }
    NCPoly operator()(const NCPoly& p) const;
    /// Coefficient-wise application; the operator does not see t.
    TruncSeries operator()(const TruncSeries& s) const;

    std::optional<int> degree() const noexcept { return degree_; }

    friend LinearOperator operator+(const LinearOperator& f, const LinearOperator& g);
    friend LinearOperator operator-(const LinearOperator& f, const LinearOperator& g);
    friend LinearOperator operator*(const Rational& c, const LinearOperator& f);
    /// Composition f∘g.
    friend LinearOperator compose(const LinearOperator& f, const LinearOperator& g);

private:
    WordFn on_word_;
    std::optional<int> degree_;
};

/// The unique algebra endomorphism with x ↦ image_x, y ↦ image_y.
LinearOperator algebra_hom(const NCPoly& image_x, const NCPoly& image_y);
/// Leibniz extension of x ↦ dx, y ↦ dy; kills the unit word.
LinearOperator derivation_from_images(const NCPoly& dx, const NCPoly& dy);
/// p ↦ f(g(p)) − g(f(p))
LinearOperator operator_commutator(const LinearOperator& f, const LinearOperator& g);
/// τ∘f∘τ
LinearOperator tau_conjugate(const LinearOperator& f);

/// Endomorphism of truncated series (acts on t as well).
using SeriesOperator = std::function<TruncSeries(const TruncSeries&)>;

/// exp(Σ_n c_n t^n Δ_n) through t-order K, generators listed for n = 1, 2, ...
/// Every Δ_n must raise weight by at least 1; throws ContractError otherwise.
SeriesOperator exp_operator_series(const std::vector<std::pair<Rational, LinearOperator>>& generators, int order);

/// Exact rank over Q of the coefficient matrix of the given polynomials.
int rank_over_rationals(const std::vector<NCPoly>& polys);

using RationalMatrix = std::vector<std::vector<Rational>>;
int matrix_rank(RationalMatrix m);
/// Solves A v = b exactly; nullopt if inconsistent. Free variables are set to 0.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b);

}  // namespace mzv
