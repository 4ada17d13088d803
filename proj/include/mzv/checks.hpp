#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mzv {

/// Outcome of an exhaustive exact check.
struct CheckReport {
    std::string name;
    std::int64_t cases = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

std::string to_string(const CheckReport& r);

/// σ̄_tσ_t^{-1} = exp(Σ t^n/n ∂_n) through t-order `order` on x, y, x+y and every word of weight ≤ max_weight.
CheckReport check_sigma_exp(int max_weight, int order);
/// The ∂₂ and ∂₃ commutator formulas on every word of weight ≤ max_weight.
CheckReport check_commutators(int max_weight);
/// C(u^{n−1}) and τCτ(u^{n−1}) with u = x + ty, 2 ≤ n ≤ max_n.
CheckReport check_cyclic_sum(int max_n);
/// Σ_r (−1)^r (xy)^{n−r} ⧢ (xy)^{n+r} = 4^n (x²y²)^n for n ≤ max_n.
CheckReport check_bbbl(int max_n);

}  // namespace mzv
