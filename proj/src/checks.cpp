#include "mzv/checks.hpp"

#include "mzv/action.hpp"
#include "mzv/shuffle.hpp"

namespace mzv {

std::string to_string(const CheckReport& r) {
    std::string s = r.name + ": " + std::to_string(r.cases) + " cases, " + (r.pass() ? "PASS" : "FAIL");
    std::size_t shown = 0;
    for (const auto& f : r.failures) {
        if (++shown > 10) {
            s += "\n  ... " + std::to_string(r.failures.size() - 10) + " more";
            break;
        }
        s += "\n  failed: " + f;
    }
    return s;
}

CheckReport check_sigma_exp(int max_weight, int order) {
    CheckReport rep;
    rep.name = "sigma_exp";
    std::vector<NCPoly> tests{NCPoly(Word("x")), NCPoly(Word("y")), NCPoly(Word("x")) + NCPoly(Word("y"))};
    for (int wt = 0; wt <= max_weight; ++wt) {
        for (const Word& w : all_words(wt)) tests.emplace_back(w);
    }
    for (const auto& t : tests) {
        ++rep.cases;
        if (!sigma_exp_residual(t, order).is_zero()) rep.failures.push_back(to_string(t));
    }
    return rep;
}

CheckReport check_commutators(int max_weight) {
    CheckReport rep;
    rep.name = "commutators";
    for (int n : {2, 3}) {
        const auto bad = partial_commutator_check(n, max_weight);
        for (int wt = 0; wt <= max_weight; ++wt) rep.cases += static_cast<std::int64_t>(all_words(wt).size());
        for (const auto& [w, r] : bad) rep.failures.push_back("n=" + std::to_string(n) + " on " + to_string(w) + ": " + to_string(r));
    }
    return rep;
}

CheckReport check_cyclic_sum(int max_n) {
    CheckReport rep;
    rep.name = "cyclic_sum";
    for (int n = 2; n <= max_n; ++n) {
        ++rep.cases;
        const auto [c, tct] = cyclic_sum_identity(n);
        if (!c.is_zero() || !tct.is_zero()) rep.failures.push_back("n=" + std::to_string(n));
    }
    return rep;
}

CheckReport check_bbbl(int max_n) {
    CheckReport rep;
    rep.name = "bbbl";
    for (int n = 0; n <= max_n; ++n) {
        ++rep.cases;
        if (!bbbl_convolution(n).is_zero()) rep.failures.push_back("n=" + std::to_string(n));
    }
    return rep;
}

}  // namespace mzv
