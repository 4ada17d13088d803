#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mzv/algebra.hpp"
#include "mzv/error.hpp"

namespace mzv {

// ------------------------------------------------------------ harmonic product

/// Harmonic (stuffle) product on all of H, from the rules
///   1*w = w*1 = w,  x^n*w = w*x^n = w x^n,
///   x^p y w1 * x^q y w2 = x^p y (w1 * x^q y w2) + x^q y (x^p y w1 * w2) + x^{p+q+1} y (w1 * w2).
NCPoly star(const Word& u, const Word& v);
NCPoly star(const NCPoly& p, const NCPoly& q);
/// p^{*n}, with p^{*0} = 1.
NCPoly star_power(const NCPoly& p, int n);

// ---------------------------------------------------------------- QSym

enum class Basis { M, F, E };

char basis_letter(Basis b);
Basis parse_basis(std::string_view text);

struct CompositionOrder {
    bool operator()(const Composition& a, const Composition& b) const {
        const int wa = a.weight();
        const int wb = b.weight();
        if (wa != wb) return wa < wb;
        return a < b;
    }
};

/// Exact linear combination of M_I, F_I or E_I.
class QSymExpr {
public:
    using Terms = std::map<Composition, Rational, CompositionOrder>;

    explicit QSymExpr(Basis basis = Basis::M) : basis_(basis) {}
    QSymExpr(Basis basis, const Composition& I, const Rational& c = 1) : basis_(basis) { add_term(I, c); }
    static QSymExpr unit(Basis basis = Basis::M) { return QSymExpr(basis, Composition{}); }

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const Composition& I) const;
    void add_term(const Composition& I, const Rational& c);

    QSymExpr& operator+=(const QSymExpr& other);
    QSymExpr& operator-=(const QSymExpr& other);
    QSymExpr& operator*=(const Rational& c);
    friend QSymExpr operator+(QSymExpr a, const QSymExpr& b) { return a += b; }
    friend QSymExpr operator-(QSymExpr a, const QSymExpr& b) { return a -= b; }
    friend QSymExpr operator*(const Rational& c, QSymExpr e) { return e *= c; }

    friend bool operator==(const QSymExpr&, const QSymExpr&) = default;

private:
    Basis basis_;
    Terms terms_;
};

std::string to_string(const QSymExpr& e);
nlohmann::json to_json(const QSymExpr& e);
/// Inverse of to_string, e.g. "M(2,3) + 3/2*M(5)". All terms must share one basis.
QSymExpr parse_qsym(std::string_view text);

QSymExpr convert_basis(const QSymExpr& e, Basis target);
/// Product via quasi-shuffle of compositions in the M basis; the result is
/// expressed in the basis of `a`.
QSymExpr qsym_mul(const QSymExpr& a, const QSymExpr& b);
/// Coefficient of the empty composition.
Rational counit(const QSymExpr& e);

/// φ(z_{i1}⋯z_{ik}) = M_{(ik,…,i1)}; throws DomainError off H^1.
QSymExpr phi(const NCPoly& p);
NCPoly phi_inv(const QSymExpr& e);

/// Commutative polynomial in t_1..t_n: exponent vector ↦ coefficient.
class CommPoly {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    explicit CommPoly(int variables = 0) : variables_(variables) {}
    int variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const std::vector<int>& exponents) const;
    void add_term(const std::vector<int>& exponents, const Rational& c);

    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly&, const CommPoly&) = default;

private:
    int variables_;
    Terms terms_;
};

std::string to_string(const CommPoly& p);

/// Expansion in n variables; M_I ↦ Σ_{j1<…<jk} t_{j1}^{i1}⋯t_{jk}^{ik}.
CommPoly expand_in_variables(const QSymExpr& e, int n);

/// Deconcatenation of z-words: Δ(z_{i1}⋯z_{ik}) = Σ_j z_{i1}⋯z_{ij} ⊗ z_{ij+1}⋯z_{ik}.
TensorPoly coproduct(const NCPoly& p);

enum class AntipodeFormula { concatsplit, dual };

/// concatsplit: S(M_I) = Σ_{I1⊔…⊔Il = I} (-1)^l M_{I1}⋯M_{Il}, result in M.
/// dual:        S(M_I) = (-1)^{l(I)} E_{reverse(I)}, result in E.
QSymExpr antipode(const QSymExpr& e, AntipodeFormula formula);

/// M_I ↦ M_{reverse(I)}; input converted to M first.
QSymExpr T_reverse(const QSymExpr& e);

/// The automorphism of Q<x,y> with x ↦ x+y, y ↦ -y.
LinearOperator psi_operator();
NCPoly psi(const NCPoly& p);
/// ψ transported to QSym through M_I ↔ word(I) (no reversal); the result is
/// given in the basis of the input.
QSymExpr psi_qsym(const QSymExpr& e);

enum class SymKind { e, h, p };

/// e_n ↦ y^n, h_n ↦ sum of all z-words of weight n, p_n ↦ z_n.
NCPoly sym_generator(SymKind kind, int n);

/// Commutative polynomial in the power sums p_1, p_2, ...; a monomial is
/// keyed by its partition (parts in decreasing order).
class SymPowerExpr {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(std::vector<int> partition) const;
    void add_term(std::vector<int> partition, const Rational& c);

    friend bool operator==(const SymPowerExpr&, const SymPowerExpr&) = default;

private:
    Terms terms_;
};

std::string to_string(const SymPowerExpr& s);

/// Thrown by to_power_sums; carries two monomials (as exponent vectors in
/// the expansion variables) that a symmetric function would weight equally.
class NotSymmetricError : public DomainError {
public:
    NotSymmetricError(std::vector<int> first, Rational first_coeff, std::vector<int> second, Rational second_coeff);
    const std::vector<int>& first() const noexcept { return first_; }
    const std::vector<int>& second() const noexcept { return second_; }

private:
    std::vector<int> first_;
    std::vector<int> second_;
};

SymPowerExpr to_power_sums(const QSymExpr& e);
/// Back to the M basis (for round trips).
QSymExpr from_power_sums(const SymPowerExpr& s);

/// w = Σ_j c_j * y^{*j} with every c_j supported on admissible words.
std::vector<std::pair<NCPoly, int>> decompose_H1_over_H0(const NCPoly& w);
NCPoly recompose_H1(const std::vector<std::pair<NCPoly, int>>& parts);

}  // namespace mzv
