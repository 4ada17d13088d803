#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mzv/numeric.hpp"

namespace mzv {

struct VerifyReport {
    std::string identity;
    std::string params;
    ApproxValue lhs;
    ApproxValue rhs;
    double difference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// pass ⇔ |lhs − rhs| ≤ tol + lhs.error_bound + rhs.error_bound.
VerifyReport make_report(std::string identity, std::string params, const ApproxValue& lhs, const ApproxValue& rhs, double tol);
nlohmann::json to_json(const VerifyReport& r);
std::string to_string(const VerifyReport& r);

inline constexpr double kDefaultTolerance = 1e-5;

// Single instances. Each refuses parameters beyond its documented cap with a DomainError.

/// ζ(w) = ζ(τw), w admissible, |w| ≤ 10.
VerifyReport verify_duality(const Word& w, double tol = kDefaultTolerance);
/// Σ_{|w|=n, ℓ(w)=k, w ∈ H^0} ζ(w) = ζ(n), 2 ≤ n ≤ 10, 1 ≤ k < n.
VerifyReport verify_sum_theorem(int n, int k, double tol = kDefaultTolerance);
/// ζ(D w) = ζ(D τw), w admissible, |w| ≤ 8.
VerifyReport verify_derivation(const Word& w, double tol = kDefaultTolerance);
/// ζ(h_i·w) = ζ(h_i·τw), w admissible, i ≥ 0, i + |w| ≤ 8.
VerifyReport verify_ohno(const Word& w, int i, double tol = kDefaultTolerance);
/// ζ(C w) = ζ(τCτ w), w ∈ H^1 not a power of y, |w| ≤ 7.
VerifyReport verify_cyclic(const Word& w, double tol = kDefaultTolerance);
/// ζ(z_n·xy^m) = ζ(z_m·xy^n), m, n ≥ 1, m + n + 1 ≤ 8.
VerifyReport verify_cyclic_action(int m, int n, double tol = kDefaultTolerance);
/// ζ(4,3^{n−1}) = ζ(3^n,1) + ζ(2,3^{n−1},2), 1 ≤ n ≤ 3.
VerifyReport verify_periodic_cyclic(int n, double tol = kDefaultTolerance);
/// Σ_{|w|=2n, ht(w)=k} (−1)^{ℓ(w)} ζ(w) = (−1)^n ζ((xy)^n) Σ_{j=0}^{n−k} C(2n+1,2j)(2−2^{2j}) B_{2j},
/// 1 ≤ k ≤ n ≤ 5.
VerifyReport verify_le_murakami(int n, int k, double tol = kDefaultTolerance);
/// ζ((x²y²)^n) = ζ((xy)^{2n})/(2n+1), 1 ≤ n ≤ 2.
VerifyReport verify_zagier_ratio(int n, double tol = kDefaultTolerance);
/// ζ((xy)^k) = π^{2k}/(2k+1)!, 1 ≤ k ≤ 5.
VerifyReport verify_pi_power(int k, double tol = kDefaultTolerance);
/// ζ(2,2) = ½(ζ(2)² − ζ(4)) = π⁴/120, through the power-sum expansion of M_(2,2).
VerifyReport verify_zeta22(double tol = kDefaultTolerance);
/// ζ̂(h_n) against the t^n coefficient of Γ(1−t) = exp(γt + Σ_{k≥2} ζ(k)t^k/k), n = 0..order ≤ 8.
std::vector<VerifyReport> verify_gamma_series(int order, double tol = kDefaultTolerance);
/// ζ(x^p y^q) against ζ of the u^p v^q coefficient of 1 − H(u)H(v)E(−(u+v)), p, q ≥ 1, p + q ≤ max_weight ≤ 7.
std::vector<VerifyReport> verify_height_one(int max_weight, double tol = kDefaultTolerance);
/// ζ(u ⧢ v − u * v) = 0 for words u ∈ H^1, v ∈ H^0, |u| + |v| ≤ max_weight ≤ 7.
std::vector<VerifyReport> verify_kernel_zero(int max_weight, double tol = kDefaultTolerance);

struct VerifyParams {
    int max_weight = 6;
    double tol = kDefaultTolerance;
    std::optional<int> order;  // gamma_series truncation (defaults to max_weight)
};

/// Names accepted by verify_batch (plus "all").
const std::vector<std::string>& identity_names();
/// Every instance of an identity with parameters inside max_weight (weight of
/// the words involved, or 2n / 4n / 3n+1 for the parametrized families).
std::vector<VerifyReport> verify_batch(const std::string& name, const VerifyParams& params);

}  // namespace mzv
