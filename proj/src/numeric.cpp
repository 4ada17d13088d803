#include "mzv/numeric.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>

#include "mzv/error.hpp"
#include "mzv/finite_sums.hpp"
#include "mzv/qsym.hpp"

namespace mzv {

namespace {

// Exact rounding error of a + b (Knuth's TwoSum) and of a * b (via fma).
double sum_error(double a, double b, double s) {
    const double bb = s - a;
    return std::fabs((a - (s - bb)) + (b - bb));
}
double product_error(double a, double b, double p) { return std::fabs(std::fma(a, b, -p)); }

// The bound itself is accumulated in floating point; pad it by one ulp-scale term.
double pad(double e) { return e == 0.0 ? 0.0 : e * (1.0 + 4.0 * DBL_EPSILON); }

}  // namespace

ApproxValue operator+(const ApproxValue& a, const ApproxValue& b) {
    const double v = a.value + b.value;
    return {v, pad(a.error_bound + b.error_bound + sum_error(a.value, b.value, v)), a.warning || b.warning};
}

ApproxValue operator-(const ApproxValue& a, const ApproxValue& b) {
    const double v = a.value - b.value;
    return {v, pad(a.error_bound + b.error_bound + sum_error(a.value, -b.value, v)), a.warning || b.warning};
}

ApproxValue operator*(const ApproxValue& a, const ApproxValue& b) {
    const double v = a.value * b.value;
    const double e = std::fabs(a.value) * b.error_bound + std::fabs(b.value) * a.error_bound + a.error_bound * b.error_bound;
    return {v, pad(e + product_error(a.value, b.value, v)), a.warning || b.warning};
}

ApproxValue operator*(double c, const ApproxValue& a) {
    const double v = c * a.value;
    return {v, pad(std::fabs(c) * a.error_bound + product_error(c, a.value, v)), a.warning};
}

Rational bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli needs n >= 0");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        const auto m = cache.size();  // computing B_m
        Rational s = 0;
        for (std::size_t j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rational(Integer(static_cast<unsigned long>(m + 1))));
    }
    return cache[static_cast<std::size_t>(n)];
}

namespace {

using Series = std::vector<double>;  // coefficient of N^{-r} at index r

/// Σ_{m>N} m^{-s} ~ N^{1−s}/(s−1) − N^{−s}/2 + Σ_k B_{2k}/(2k)! (s)_{2k−1} N^{−s−2k+1}.
const Series& hurwitz_tail(int s, int order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Series> cache;
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.try_emplace({s, order});
    if (!inserted) return it->second;
    Series h(static_cast<std::size_t>(order) + 1, 0.0);
    if (s - 1 <= order) h[static_cast<std::size_t>(s - 1)] += 1.0 / (s - 1);
    if (s <= order) h[static_cast<std::size_t>(s)] -= 0.5;
    Rational rising = s;  // (s)_{2k-1}
    for (int k = 1; s + 2 * k - 1 <= order; ++k) {
        if (k > 1) rising *= Rational((s + 2 * k - 3)) * Rational(s + 2 * k - 2);
        const Rational c = bernoulli(2 * k) / Rational(factorial(static_cast<unsigned long>(2 * k))) * rising;
        h[static_cast<std::size_t>(s + 2 * k - 1)] += c.get_d();
    }
    return it->second = std::move(h);
}

double eval_series(const Series& c, double N) {
    // Horner in 1/N.
    const double inv = 1.0 / N;
    double acc = 0.0;
    for (std::size_t r = c.size(); r-- > 0;) acc = acc * inv + c[r];
    return acc;
}

/// Asymptotic expansions of T_j(N) = Σ_{n1>…>nj>N} n1^{-i1}⋯nj^{-ij}, j = 0..k.
std::vector<Series> head_tails(const Composition& I, int order) {
    std::vector<Series> T;
    Series t0(static_cast<std::size_t>(order) + 1, 0.0);
    t0[0] = 1.0;
    T.push_back(std::move(t0));
    for (std::size_t j = 0; j < I.size(); ++j) {
        const Series& prev = T.back();
        Series next(prev.size(), 0.0);
        for (std::size_t r = 0; r < prev.size(); ++r) {
            if (prev[r] == 0.0) continue;
            const int s = static_cast<int>(r) + I[j];
            if (s < 2) throw ContractError("divergent tail in mzv");
            if (s - 1 > order) continue;
            const Series& h = hurwitz_tail(s, order);
            for (std::size_t q = 0; q < h.size(); ++q) next[q] += prev[r] * h[q];
        }
        T.push_back(std::move(next));
    }
    return T;
}

/// ζ(I) ≈ Σ_j T_j(N) · A_{(i_{j+1},…,i_k)}(N), with a rounding allowance.
std::pair<double, double> split_estimate(const Composition& I, const std::vector<Series>& T, std::int64_t N) {
    const auto n = static_cast<int>(N);
    double value = 0.0;
    double magnitude = 0.0;
    for (std::size_t j = 0; j <= I.size(); ++j) {
        const Composition suffix(std::vector<int>(I.begin() + static_cast<std::ptrdiff_t>(j), I.end()));
        const double a = A_table_double(suffix, n).back();
        const double term = eval_series(T[j], static_cast<double>(N)) * a;
        value += term;
        magnitude += std::fabs(term);
    }
    const double allowance = 4.0 * DBL_EPSILON * static_cast<double>(N) * static_cast<double>(I.size() + 1) * magnitude;
    return {value, allowance};
}

std::mutex cache_mu;
std::map<Composition, ApproxValue> mzv_cache;

}  // namespace

ApproxValue mzv(const Composition& I, double tol, const MzvSettings& settings) {
    if (I.empty()) return ApproxValue::exact(1.0);
    if (I[0] < 2) throw DomainError("mzv: " + to_string(I) + " is not admissible (first part must be >= 2)");
    if (!(tol > 0)) throw DomainError("mzv needs tol > 0");
    {
        std::lock_guard lock(cache_mu);
        auto it = mzv_cache.find(I);
        if (it != mzv_cache.end() && (it->second.error_bound <= tol || it->second.warning)) return it->second;
    }
    const auto T = head_tails(I, settings.tail_order);
    ApproxValue result;
    std::int64_t N = settings.start_terms;
    auto [prev, prev_allow] = split_estimate(I, T, N);
    for (;;) {
        const auto [cur, allow] = split_estimate(I, T, 2 * N);
        const double bound = 3.0 * std::fabs(cur - prev) + allow + prev_allow;
        // Once rounding dominates, doubling only makes the bound worse.
        const bool stalled = result.error_bound > 0 && bound >= 0.5 * result.error_bound;
        if (!stalled || bound < result.error_bound) {
            result.value = cur;
            result.error_bound = bound;
        }
        if (result.error_bound <= tol) break;
        N *= 2;
        if (stalled || 2 * N > settings.max_terms) {
            result.warning = true;
            break;
        }
        prev = cur;
        prev_allow = allow;
    }
    std::lock_guard lock(cache_mu);
    auto& slot = mzv_cache[I];
    if (slot.value == 0.0 || result.error_bound < slot.error_bound) slot = result;
    return result;
}

ApproxValue zeta_poly(const NCPoly& p, double tol) {
    ApproxValue out;
    const double share = tol / static_cast<double>(std::max<std::size_t>(p.size(), 1));
    for (const auto& [w, c] : p) {
        if (!is_admissible(w)) throw DomainError("zeta: word " + to_string(w) + " is not admissible");
        const double cd = c.get_d();
        if (w.empty()) {
            out += ApproxValue::exact(cd);
            continue;
        }
        const double scale = std::max(1.0, std::fabs(cd));
        out += cd * mzv(composition_of_word(w), share / scale);
    }
    return out;
}

ApproxValue zeta_hat_poly(const NCPoly& p, double tol) {
    ApproxValue out;
    for (const auto& [c, j] : decompose_H1_over_H0(p)) {
        ApproxValue term = zeta_poly(c, tol);
        for (int i = 0; i < j; ++i) term = term * ApproxValue::exact(kEulerGamma);
        out += term;
    }
    return out;
}

}  // namespace mzv
