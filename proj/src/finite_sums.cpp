#include "mzv/finite_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "mzv/error.hpp"
#include "mzv/qsym.hpp"

namespace mzv {

namespace {

std::vector<Rational> rational_table(const Composition& I, int n, bool strict) {
    if (n < 0) throw DomainError("finite sums need n >= 0");
    return harmonic_table<Rational>(I, n, strict, Rational(0), Rational(1), [](int m, int e) {
        Integer d;
        mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(e));
        return Rational(Integer(1), d);
    });
}

Composition ones(int k) { return Composition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1)); }

Composition prepend(int head, const Composition& tail) {
    std::vector<int> parts{head};
    parts.insert(parts.end(), tail.begin(), tail.end());
    return Composition(std::move(parts));
}

Composition drop_first(const Composition& I) { return Composition(std::vector<int>(I.begin() + 1, I.end())); }

std::vector<Composition> compositions_up_to(int max_weight) {
    std::vector<Composition> out;
    for (int w = 1; w <= max_weight; ++w) {
        for (auto& I : compositions(w)) out.push_back(std::move(I));
    }
    return out;
}

}  // namespace

Rational A(const Composition& I, int n) { return rational_table(I, n, true).back(); }

Rational S(const Composition& I, int n) { return rational_table(I, n, false).back(); }

std::vector<double> A_table_double(const Composition& I, int n) {
    return harmonic_table<double>(I, n, true, 0.0, 1.0, [](int m, int e) { return std::pow(static_cast<double>(m), -e); });
}

Rational rho(const NCPoly& w, int n) {
    Rational out = 0;
    for (const auto& [word, c] : w) out += c * A(composition_of_word(word), n);
    return out;
}

Rational refine_expand(const Composition& I, int n) {
    Rational r = S(I, n);
    for (const auto& J : coarsenings(I)) r -= A(J, n);
    return r;
}

// ------------------------------------------------------------ sequences

RationalSeq::RationalSeq(Generator g) : state_(std::make_shared<State>()) { state_->gen = std::move(g); }

Rational RationalSeq::operator()(int n) const {
    if (n < 0) return 0;
    auto& memo = state_->memo;
    const auto idx = static_cast<std::size_t>(n);
    if (memo.size() <= idx) memo.resize(idx + 1);
    if (!memo[idx]) memo[idx] = state_->gen(n);
    return *memo[idx];
}

RationalSeq A_seq(const Composition& I) {
    return RationalSeq([I](int n) { return A(I, n); });
}

RationalSeq S_seq(const Composition& I) {
    return RationalSeq([I](int n) { return S(I, n); });
}

RationalSeq Sigma(const RationalSeq& a) {
    return RationalSeq([a](int n) {
        Rational s = 0;
        for (int i = 0; i <= n; ++i) s += a(i);
        return s;
    });
}

RationalSeq Nabla(const RationalSeq& a) {
    return RationalSeq([a](int n) {
        Rational s = 0;
        for (int i = 0; i <= n; ++i) {
            Rational term = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i))) * a(i);
            if (i % 2) term = -term;
            s += term;
        }
        return s;
    });
}

RationalSeq SigmaInv(const RationalSeq& a) {
    return RationalSeq([a](int n) -> Rational { return a(n) - a(n - 1); });
}

Rational sigma_nabla_residual(const Composition& I, int n) {
    return Sigma(Nabla(S_seq(I)))(n) + S(conjugate(I), n);
}

Rational nabla_recursion_residual(const Composition& I, int n) {
    if (I.empty()) throw DomainError("nabla recursion needs a nonempty composition");
    if (n < 1) throw DomainError("nabla recursion needs n >= 1");
    const RationalSeq f = I[0] == 1 ? S_seq(drop_first(I)) : SigmaInv(S_seq(prepend(I[0] - 1, drop_first(I))));
    return Nabla(S_seq(I))(n) - Nabla(f)(n) / n;
}

// ------------------------------------------------------- symmetric sums

std::vector<SetPartition> set_partitions(int k) {
    if (k < 0 || k > 8) throw DomainError("set_partitions supports 0 <= k <= 8");
    std::vector<SetPartition> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<std::size_t>(k), 0);
    for (;;) {
        const int nblocks = *std::max_element(a.begin(), a.end()) + 1;
        SetPartition pi;
        pi.blocks.resize(static_cast<std::size_t>(nblocks));
        for (int i = 0; i < k; ++i) pi.blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])].push_back(i + 1);
        out.push_back(std::move(pi));

        int i = k - 1;
        for (; i > 0; --i) {
            const auto ui = static_cast<std::size_t>(i);
            const int prefix_max = *std::max_element(a.begin(), a.begin() + i);
            if (a[ui] <= prefix_max) {
                ++a[ui];
                std::fill(a.begin() + i + 1, a.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
    return out;
}

Integer partition_weight(const SetPartition& pi) {
    Integer c = 1;
    for (const auto& b : pi.blocks) c *= factorial(b.size() - 1);
    return c;
}

Integer partition_weight_signed(const SetPartition& pi, int k) {
    Integer c = partition_weight(pi);
    if ((k - static_cast<int>(pi.blocks.size())) % 2) c = -c;
    return c;
}

SidePair symmetric_sum_sides(const Composition& I, int n, SumVariant variant) {
    const int k = I.length();
    if (k > 8) throw DomainError("symmetric_sum_sides supports length <= 8");
    SidePair out{0, 0};
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> parts;
        for (int j : perm) parts.push_back(I[static_cast<std::size_t>(j)]);
        const Composition J(std::move(parts));
        out.lhs += variant == SumVariant::A ? A(J, n) : S(J, n);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto& pi : set_partitions(k)) {
        Rational term(variant == SumVariant::A ? partition_weight_signed(pi, k) : partition_weight(pi));
        for (const auto& block : pi.blocks) {
            int p = 0;
            for (int j : block) p += I[static_cast<std::size_t>(j - 1)];
            term *= S(Composition{p}, n);
        }
        out.rhs += term;
    }
    return out;
}

// ----------------------------------------------------------------- mod p

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

ModPValue::ModPValue(std::int64_t value, std::int64_t modulus) : modulus_(modulus) {
    if (!is_prime(modulus)) throw DomainError(std::to_string(modulus) + " is not prime");
    residue_ = ((value % modulus) + modulus) % modulus;
}

ModPValue::ModPValue(std::int64_t value, std::int64_t modulus, Unchecked) : residue_(value), modulus_(modulus) {}

ModPValue ModPValue::operator+(const ModPValue& o) const {
    return {(residue_ + o.residue_) % modulus_, modulus_, Unchecked{}};
}

ModPValue ModPValue::operator-(const ModPValue& o) const {
    return {(residue_ - o.residue_ + modulus_) % modulus_, modulus_, Unchecked{}};
}

ModPValue ModPValue::operator*(const ModPValue& o) const {
    return {(residue_ * o.residue_) % modulus_, modulus_, Unchecked{}};
}

ModPValue ModPValue::operator-() const { return {(modulus_ - residue_) % modulus_, modulus_, Unchecked{}}; }

ModPValue ModPValue::inverse() const {
    if (residue_ == 0) throw DomainError("0 has no inverse mod " + std::to_string(modulus_));
    // Fermat: a^{p-2}.
    std::int64_t result = 1;
    std::int64_t base = residue_;
    for (std::int64_t e = modulus_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % modulus_;
        base = base * base % modulus_;
    }
    return {result, modulus_, Unchecked{}};
}

std::string to_string(const ModPValue& v) {
    return std::to_string(v.residue()) + " mod " + std::to_string(v.modulus());
}

ModPValue reduce_mod(const Rational& r, std::int64_t p) {
    const ModPValue zero(0, p);
    const auto up = static_cast<unsigned long>(p);
    const auto den = static_cast<std::int64_t>(mpz_fdiv_ui(r.get_den_mpz_t(), up));
    if (den == 0) throw DomainError("denominator of " + to_string(r) + " is divisible by " + std::to_string(p));
    const auto num = static_cast<std::int64_t>(mpz_fdiv_ui(r.get_num_mpz_t(), up));
    return ModPValue(num, p) * ModPValue(den, p).inverse();
}

namespace {

ModPValue modp_sum(const Composition& I, std::int64_t p, bool strict) {
    const ModPValue zero(0, p);
    const ModPValue one(1, p);
    std::vector<ModPValue> inv;
    inv.reserve(static_cast<std::size_t>(p));
    inv.push_back(zero);
    for (std::int64_t m = 1; m < p; ++m) inv.push_back(ModPValue(m, p).inverse());
    const auto table = harmonic_table<ModPValue>(I, static_cast<int>(p - 1), strict, zero, one, [&](int m, int e) {
        ModPValue r = one;
        for (int i = 0; i < e; ++i) r = r * inv[static_cast<std::size_t>(m)];
        return r;
    });
    return table.back();
}

}  // namespace

ModPValue A_modp(const Composition& I, std::int64_t p) { return modp_sum(I, p, true); }

ModPValue S_modp(const Composition& I, std::int64_t p) { return modp_sum(I, p, false); }

ModPValue chi_p(const NCPoly& w, std::int64_t p) {
    ModPValue out(0, p);
    for (const auto& [word, c] : w) out = out + reduce_mod(c, p) * A_modp(composition_of_word(word), p);
    return out;
}

// --------------------------------------------------------- check suites

namespace {

std::string describe(const Composition& I, int n) { return to_string(I) + " at n=" + std::to_string(n); }

std::string describe_p(const Composition& I, int p) { return to_string(I) + " at p=" + std::to_string(p); }

}  // namespace

CheckReport check_refine_expand(int max_weight, int max_n) {
    CheckReport rep; rep.name = "refine_expand";
    for (const auto& I : compositions_up_to(max_weight)) {
        for (int n = 0; n <= max_n; ++n) {
            ++rep.cases;
            if (refine_expand(I, n) != 0) rep.failures.push_back(describe(I, n));
        }
    }
    return rep;
}

CheckReport check_symmetric_sums(int max_length, int max_weight, int max_n) {
    CheckReport rep; rep.name = "symmetric_sums";
    for (const auto& I : compositions_up_to(max_weight)) {
        if (I.length() > max_length) continue;
        for (int n = 1; n <= max_n; ++n) {
            for (auto variant : {SumVariant::S, SumVariant::A}) {
                ++rep.cases;
                const auto sides = symmetric_sum_sides(I, n, variant);
                if (sides.lhs != sides.rhs)
                    rep.failures.push_back(describe(I, n) + (variant == SumVariant::A ? " (A)" : " (S)"));
            }
        }
    }
    return rep;
}

CheckReport check_sigma_nabla(int max_weight, int max_n) {
    CheckReport rep; rep.name = "sigma_nabla";
    for (const auto& I : compositions_up_to(max_weight)) {
        const RationalSeq lhs = Sigma(Nabla(S_seq(I)));
        const Composition Istar = conjugate(I);
        for (int n = 0; n <= max_n; ++n) {
            ++rep.cases;
            if (lhs(n) + S(Istar, n) != 0) rep.failures.push_back(describe(I, n));
        }
    }
    return rep;
}

CheckReport check_dihedral(int terms) {
    CheckReport rep; rep.name = "dihedral";
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    std::vector<Rational> values;
    for (int i = 0; i < terms; ++i) values.push_back(make_rational(num(rng), den(rng)));
    const std::vector<std::pair<std::string, RationalSeq>> seqs = {
        {"random", RationalSeq([values](int n) { return n < static_cast<int>(values.size()) ? values[static_cast<std::size_t>(n)] : Rational(0); })},
        {"S(1)", S_seq(Composition{1})},
        {"S(2,1)", S_seq(Composition{2, 1})},
        {"A(1,1)", A_seq(Composition{1, 1})},
    };
    for (const auto& [name, a] : seqs) {
        const RationalSeq nn = Nabla(Nabla(a));
        const RationalSeq sn = Sigma(Nabla(a));
        const RationalSeq ns = Nabla(SigmaInv(a));
        const RationalSeq snsn = Sigma(Nabla(sn));
        for (int n = 0; n < terms; ++n) {
            rep.cases += 3;
            if (nn(n) != a(n)) rep.failures.push_back("nabla^2 on " + name + " at n=" + std::to_string(n));
            if (sn(n) != ns(n)) rep.failures.push_back("sigma nabla on " + name + " at n=" + std::to_string(n));
            if (snsn(n) != a(n)) rep.failures.push_back("(sigma nabla)^2 on " + name + " at n=" + std::to_string(n));
        }
    }
    return rep;
}

CheckReport check_euler_binomial(int max_n) {
    CheckReport rep; rep.name = "euler_binomial";
    for (int n = 1; n <= max_n; ++n) {
        Rational lhs = 0;
        Rational harmonic = 0;
        for (int k = 1; k <= n; ++k) {
            Rational term(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), Integer(k));
            term.canonicalize();
            lhs += k % 2 ? -term : term;
            harmonic += make_rational(1, k);
        }
        ++rep.cases;
        if (lhs != -harmonic) rep.failures.push_back("n=" + std::to_string(n));
    }
    return rep;
}

CheckReport check_power_sum_vanishing(int max_k, int max_prime) {
    CheckReport rep; rep.name = "power_sum_vanishing";
    for (int k = 1; k <= max_k; ++k) {
        for (int p : primes_up_to(max_prime)) {
            if (p <= k + 1) continue;
            ++rep.cases;
            if (S_modp(Composition{k}, p).residue() != 0) rep.failures.push_back(describe_p(Composition{k}, p));
        }
    }
    return rep;
}

CheckReport check_reversal_modp(int max_weight, int max_prime) {
    CheckReport rep; rep.name = "reversal_modp";
    for (const auto& I : compositions_up_to(max_weight)) {
        const Composition R = reverse(I);
        for (int p : primes_up_to(max_prime)) {
            const auto sign = [&](const ModPValue& v) { return I.weight() % 2 ? -v : v; };
            rep.cases += 2;
            if (A_modp(I, p) != sign(A_modp(R, p))) rep.failures.push_back("A " + describe_p(I, p));
            if (S_modp(I, p) != sign(S_modp(R, p))) rep.failures.push_back("S " + describe_p(I, p));
        }
    }
    return rep;
}

CheckReport check_conjugate_modp(int max_weight, int max_prime) {
    CheckReport rep; rep.name = "conjugate_modp";
    for (const auto& I : compositions_up_to(max_weight)) {
        const Composition C = conjugate(I);
        for (int p : primes_up_to(max_prime)) {
            ++rep.cases;
            if (S_modp(I, p) != -S_modp(C, p)) rep.failures.push_back(describe_p(I, p));
        }
    }
    return rep;
}

CheckReport check_hook_modp(int max_sum, int max_prime) {
    CheckReport rep; rep.name = "hook_modp";
    for (int n = 1; n <= max_sum; ++n) {
        for (int k = 0; n + k <= max_sum; ++k) {
            const Composition lhs = prepend(n, ones(k));
            const Composition rhs = prepend(k + 1, ones(n - 1));
            for (int p : primes_up_to(max_prime)) {
                if (p <= std::max(k + 1, n)) continue;
                ++rep.cases;
                if (A_modp(lhs, p) != A_modp(rhs, p)) rep.failures.push_back(describe_p(lhs, p));
            }
        }
    }
    return rep;
}

CheckReport check_psi_modp(int max_weight, int min_prime, int max_prime) {
    CheckReport rep; rep.name = "psi_modp";
    for (int wt = 1; wt <= max_weight; ++wt) {
        for (const Word& w : h1_words(wt)) {
            const NCPoly pw = psi(NCPoly(w));
            for (int p : primes_up_to(max_prime)) {
                if (p < min_prime) continue;
                ++rep.cases;
                if (chi_p(NCPoly(w), p) != chi_p(pw, p)) rep.failures.push_back(to_string(w) + " at p=" + std::to_string(p));
            }
        }
    }
    // 2A(3,1,1) ≡ −A(2,1,1,1) − A(1,2,1,1) for p > 6.
    for (int p : primes_up_to(max_prime)) {
        if (p <= 6) continue;
        ++rep.cases;
        const ModPValue two(2, p);
        const ModPValue lhs = two * A_modp(Composition{3, 1, 1}, p);
        const ModPValue rhs = -A_modp(Composition{2, 1, 1, 1}, p) - A_modp(Composition{1, 2, 1, 1}, p);
        if (lhs != rhs) rep.failures.push_back("x^2y^3 reduced relation at p=" + std::to_string(p));
    }
    return rep;
}

CheckReport check_repeated_parts_modp(int max_rk, int max_prime) {
    CheckReport rep; rep.name = "repeated_parts_modp";
    for (int k = 1; k <= max_rk; ++k) {
        for (int r = 1; r * k <= max_rk; ++r) {
            const Composition I(std::vector<int>(static_cast<std::size_t>(r), k));
            for (int p : primes_up_to(max_prime)) {
                if (p <= r * k + 1) continue;
                rep.cases += 2;
                if (A_modp(I, p).residue() != 0) rep.failures.push_back("A " + describe_p(I, p));
                if (S_modp(I, p).residue() != 0) rep.failures.push_back("S " + describe_p(I, p));
            }
        }
    }
    return rep;
}

}  // namespace mzv
