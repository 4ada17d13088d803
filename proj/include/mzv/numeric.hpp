#pragma once

#include <cstdint>
#include <numbers>

#include "mzv/algebra.hpp"
#include "mzv/rational.hpp"
#include "mzv/words.hpp"

namespace mzv {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

/// A double with an absolute error bound. Arithmetic propagates bounds to
/// first order plus the product of the operand bounds.
struct ApproxValue {
    double value = 0.0;
    double error_bound = 0.0;
    bool warning = false;  // requested tolerance was not reached

    static ApproxValue exact(double v) { return {v, 0.0, false}; }

    friend ApproxValue operator+(const ApproxValue& a, const ApproxValue& b);
    friend ApproxValue operator-(const ApproxValue& a, const ApproxValue& b);
    friend ApproxValue operator*(const ApproxValue& a, const ApproxValue& b);
    friend ApproxValue operator*(double c, const ApproxValue& a);
    ApproxValue& operator+=(const ApproxValue& b) { return *this = *this + b; }
};

/// Exact Bernoulli numbers with B_1 = −1/2, from Σ_{j≤n} C(n+1,j) B_j = 0.
Rational bernoulli(int n);

struct MzvSettings {
    std::int64_t start_terms = 64;
    std::int64_t max_terms = std::int64_t{1} << 21;
    int tail_order = 40;  // powers of 1/N kept in the tail expansions
};

/// ζ(I) for admissible I (i1 ≥ 2); ζ() = 1. The sum is split at N into the
/// finite part A_I(N) and the tails of the leading indices, which are
/// expanded asymptotically in 1/N (Euler–Maclaurin). N is doubled until
/// 3·|E(2N) − E(N)| (plus a rounding allowance) is ≤ tol or N hits the cap.
/// Results are cached per composition.
ApproxValue mzv(const Composition& I, double tol = 1e-10, const MzvSettings& settings = {});

/// Σ c·ζ(w); throws DomainError naming the first non-admissible word.
ApproxValue zeta_poly(const NCPoly& p, double tol = 1e-10);

/// ζ̂ on H^1 with ζ̂(y) = γ, through the decomposition over H^0[y].
ApproxValue zeta_hat_poly(const NCPoly& p, double tol = 1e-10);

}  // namespace mzv
