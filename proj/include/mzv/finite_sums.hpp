#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/checks.hpp"
#include "mzv/rational.hpp"
#include "mzv/words.hpp"

namespace mzv {

/// Table of A_I(m) (strict) or S_I(m) (weak) for m = 0..n, over any field T.
/// `inv_pow(m, e)` must return 1/m^e. Works from the last part inwards,
/// keeping the inner sums as running prefix sums, so the cost is O(ℓ(I)·n).
template <class T, class InvPow>
std::vector<T> harmonic_table(const Composition& I, int n, bool strict, const T& zero, const T& one, InvPow inv_pow) {
    std::vector<T> cur(static_cast<std::size_t>(n) + 1, one);
    for (std::size_t j = I.size(); j-- > 0;) {
        const int e = I[j];
        std::vector<T> next(cur.size(), zero);
        for (int m = 1; m <= n; ++m) {
            const auto um = static_cast<std::size_t>(m);
            next[um] = next[um - 1] + inv_pow(m, e) * (strict ? cur[um - 1] : cur[um]);
        }
        cur = std::move(next);
    }
    return cur;
}

/// A_I(n) = Σ_{n ≥ n1 > … > nk ≥ 1} 1/(n1^{i1}⋯nk^{ik}); A_()(n) = 1.
Rational A(const Composition& I, int n);
/// S_I(n): the same with weak inequalities.
Rational S(const Composition& I, int n);
/// Double-precision A_I(m) for m = 0..n.
std::vector<double> A_table_double(const Composition& I, int n);

/// A_{I(w)}(n) extended linearly; words must lie in H^1.
Rational rho(const NCPoly& w, int n);

/// S_I(n) − Σ_{J coarsening I} A_J(n).
Rational refine_expand(const Composition& I, int n);

// ------------------------------------------------------------ sequences

/// Rational sequence n ↦ a(n), n ≥ 0, with a shared memo.
class RationalSeq {
public:
    using Generator = std::function<Rational(int)>;
    explicit RationalSeq(Generator g);
    Rational operator()(int n) const;
    Rational at(int n) const { return (*this)(n); }

private:
    struct State {
        Generator gen;
        std::vector<std::optional<Rational>> memo;
    };
    std::shared_ptr<State> state_;
};

RationalSeq A_seq(const Composition& I);
RationalSeq S_seq(const Composition& I);
/// Σa(n) = Σ_{i=0}^n a(i).
RationalSeq Sigma(const RationalSeq& a);
/// ∇a(n) = Σ_{i=0}^n C(n,i)(−1)^i a(i).
RationalSeq Nabla(const RationalSeq& a);
/// Σ^{-1}a(n) = a(n) − a(n−1), with a(−1) = 0.
RationalSeq SigmaInv(const RationalSeq& a);

/// (Σ∇S_I)(n) + S_{I*}(n).
Rational sigma_nabla_residual(const Composition& I, int n);
/// ∇S_I(n) − (1/n)∇f(n), with f = S_{(i2..ik)} if i1 = 1, else Σ^{-1}S_{(i1−1,i2..ik)}. Needs n ≥ 1.
Rational nabla_recursion_residual(const Composition& I, int n);

// ------------------------------------------------------- symmetric sums

struct SetPartition {
    std::vector<std::vector<int>> blocks;  // 1-based elements
};

/// All partitions of {1..k}, via restricted growth strings. Throws for k > 8.
std::vector<SetPartition> set_partitions(int k);
/// ∏ (|P|−1)!
Integer partition_weight(const SetPartition& pi);
/// (−1)^{k−l} ∏ (|P|−1)!
Integer partition_weight_signed(const SetPartition& pi, int k);

enum class SumVariant { A, S };

struct SidePair {
    Rational lhs;
    Rational rhs;
};

/// Σ over σ ∈ Σ_k of A or S at σ·I, against Σ_Π c(Π) or c̃(Π) times ∏ S_{(p_s)}(n).
SidePair symmetric_sum_sides(const Composition& I, int n, SumVariant variant);

// ----------------------------------------------------------------- mod p

bool is_prime(std::int64_t n);
std::vector<int> primes_up_to(int n);

/// Residue in Z/pZ, p prime.
class ModPValue {
public:
    ModPValue(std::int64_t value, std::int64_t modulus);
    std::int64_t residue() const noexcept { return residue_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    ModPValue operator+(const ModPValue& o) const;
    ModPValue operator-(const ModPValue& o) const;
    ModPValue operator*(const ModPValue& o) const;
    ModPValue operator-() const;
    ModPValue inverse() const;
    friend bool operator==(const ModPValue&, const ModPValue&) = default;

private:
    struct Unchecked {};
    ModPValue(std::int64_t value, std::int64_t modulus, Unchecked);
    std::int64_t residue_;
    std::int64_t modulus_;
};

std::string to_string(const ModPValue& v);
/// Reduces p/q mod p; throws DomainError if p divides q.
ModPValue reduce_mod(const Rational& r, std::int64_t p);

/// A_I(p−1), S_I(p−1) computed in Z/pZ.
ModPValue A_modp(const Composition& I, std::int64_t p);
ModPValue S_modp(const Composition& I, std::int64_t p);
/// ρ_{p−1}(w) in Z/pZ.
ModPValue chi_p(const NCPoly& w, std::int64_t p);

// --------------------------------------------------------- check suites

CheckReport check_refine_expand(int max_weight, int max_n);
CheckReport check_symmetric_sums(int max_length, int max_weight, int max_n);
CheckReport check_sigma_nabla(int max_weight, int max_n);
/// ∇² = id, Σ∇ = ∇Σ^{-1}, (Σ∇)² = id on a few sequences through `terms` entries.
CheckReport check_dihedral(int terms);
/// Σ_{k=1}^n (−1)^k C(n,k)/k = −Σ_{k=1}^n 1/k.
CheckReport check_euler_binomial(int max_n);

/// S_(k)(p−1) ≡ 0 for p > k+1.
CheckReport check_power_sum_vanishing(int max_k, int max_prime);
/// A_I ≡ (−1)^{|I|} A_{reverse I} and the S version.
CheckReport check_reversal_modp(int max_weight, int max_prime);
/// S_I ≡ −S_{I*}.
CheckReport check_conjugate_modp(int max_weight, int max_prime);
/// A_(n,1^k) ≡ A_(k+1,1^{n−1}) for p > max(k+1, n), n + k ≤ max_sum.
CheckReport check_hook_modp(int max_sum, int max_prime);
/// χ_p(w) = χ_p(ψ(w)) over all H^1 words, plus the reduced x²y³ relation.
CheckReport check_psi_modp(int max_weight, int min_prime, int max_prime);
/// A_I ≡ S_I ≡ 0 for I = (k^r), p > rk+1.
CheckReport check_repeated_parts_modp(int max_rk, int max_prime);

}  // namespace mzv
