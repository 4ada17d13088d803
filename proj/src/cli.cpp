#include "mzv/cli.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/action.hpp"
#include "mzv/checks.hpp"
#include "mzv/error.hpp"
#include "mzv/finite_sums.hpp"
#include "mzv/numeric.hpp"
#include "mzv/qsym.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/verify.hpp"

namespace mzv::cli {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    double tol = kDefaultTolerance;
    int max_weight = 6;
    int max_prime = 97;
    std::optional<int> order;
    int n = 1;
    std::string type = "shuffle";
    std::string to;
    std::string sum = "A";
    std::vector<std::string> pos;
};

/// Accepts "M(..)"-style QSym text (mapped through φ^{-1}) or a polynomial.
NCPoly parse_h1_operand(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && (text[first] == 'M' || text[first] == 'F' || text[first] == 'E'))
        return phi_inv(parse_qsym(text));
    return parse_poly(text);
}

void emit(std::ostream& out, const Options& o, const std::string& command, const std::string& text, json result) {
    if (o.json)
        out << json{{"command", command}, {"result", std::move(result)}}.dump(2) << "\n";
    else
        out << text << "\n";
}

json tensor_json(const TensorPoly& t) {
    auto arr = json::array();
    for (const auto& [key, c] : t.terms()) {
        arr.push_back({{"coeff", to_string(c)}, {"left", to_string(key.first)}, {"right", to_string(key.second)}});
    }
    return arr;
}

int cmd_product(const Options& o, std::ostream& out) {
    const auto& a = o.pos.at(0);
    const auto& b = o.pos.at(1);
    if (o.type == "qsym") {
        const QSymExpr r = qsym_mul(parse_qsym(a), parse_qsym(b));
        emit(out, o, "product", to_string(r), to_json(r));
        return kOk;
    }
    const NCPoly p = parse_poly(a);
    const NCPoly q = parse_poly(b);
    NCPoly r;
    if (o.type == "shuffle")
        r = shuffle(p, q);
    else if (o.type == "star")
        r = star(p, q);
    else
        throw DomainError("--type must be shuffle, star or qsym");
    emit(out, o, "product", to_string(r), to_json(r));
    return kOk;
}

int cmd_convert(const Options& o, std::ostream& out) {
    const QSymExpr e = parse_qsym(o.pos.at(0));
    if (o.to == "p") {
        const SymPowerExpr s = to_power_sums(e);
        json terms = json::array();
        for (const auto& [partition, c] : s.terms()) terms.push_back({{"coeff", to_string(c)}, {"partition", partition}});
        emit(out, o, "convert", to_string(s), json{{"basis", "p"}, {"terms", terms}});
        return kOk;
    }
    const QSymExpr r = convert_basis(e, parse_basis(o.to));
    emit(out, o, "convert", to_string(r), to_json(r));
    return kOk;
}

int cmd_act(const Options& o, std::ostream& out) {
    const NCPoly r = dot(parse_h1_operand(o.pos.at(0)), parse_poly(o.pos.at(1)));
    emit(out, o, "act", to_string(r), to_json(r));
    return kOk;
}

int cmd_derive(const Options& o, std::ostream& out) {
    const std::string& op = o.pos.at(0);
    const NCPoly w = parse_poly(o.pos.at(1));
    if (op == "hatC") {
        const TensorPoly t = hatC(w, o.n);
        emit(out, o, "derive", to_string(t), tensor_json(t));
        return kOk;
    }
    NCPoly r;
    if (op == "D")
        r = D_n(w, o.n);
    else if (op == "Dbar")
        r = Dbar_n(w, o.n);
    else if (op == "partial")
        r = kaneko_partial(w, o.n);
    else if (op == "C")
        r = C(w, o.n);
    else
        throw DomainError("derive: operator must be D, Dbar, partial, C or hatC");
    emit(out, o, "derive", to_string(r), to_json(r));
    return kOk;
}

int cmd_unary(const Options& o, std::ostream& out, const std::string& name) {
    const NCPoly w = parse_poly(o.pos.at(0));
    const NCPoly r = name == "tau" ? antiauto_tau(w) : psi(w);
    emit(out, o, name, to_string(r), to_json(r));
    return kOk;
}

int cmd_finite(const Options& o, std::ostream& out) {
    const std::string& kind = o.pos.at(0);
    const Composition I = parse_composition(o.pos.at(1));
    const int n = std::stoi(o.pos.at(2));
    Rational r;
    if (kind == "A")
        r = A(I, n);
    else if (kind == "S")
        r = S(I, n);
    else
        throw DomainError("finite: first argument must be A or S");
    emit(out, o, "finite", to_string(r), json{{"value", to_string(r)}});
    return kOk;
}

int cmd_modp(const Options& o, std::ostream& out) {
    const Composition I = parse_composition(o.pos.at(0));
    const long p = std::stol(o.pos.at(1));
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    ModPValue v(0, p);
    if (o.sum == "A")
        v = A_modp(I, p);
    else if (o.sum == "S")
        v = S_modp(I, p);
    else
        throw DomainError("--sum must be A or S");
    emit(out, o, "modp", to_string(v), json{{"residue", v.residue()}, {"modulus", v.modulus()}});
    return kOk;
}

int cmd_zeta(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string& target = o.pos.at(0);
    const auto first = target.find_first_not_of(" \t");
    const ApproxValue v = first != std::string::npos && target[first] == '('
                              ? mzv(parse_composition(target), o.tol)
                              : zeta_hat_poly(parse_poly(target), o.tol);
    if (v.warning) err << "warning: requested tolerance not reached\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15f +/- %.1e", v.value, v.error_bound);
    emit(out, o, "zeta", buf, json{{"value", v.value}, {"error_bound", v.error_bound}, {"warning", v.warning}});
    return kOk;
}

int cmd_lyndon(const Options& o, std::ostream& out) {
    const int d = std::stoi(o.pos.at(0));
    if (d < 1) throw DomainError("lyndon: degree must be >= 1");
    const auto words = lyndon_words(d);
    json arr = json::array();
    std::string text;
    for (const auto& w : words) {
        arr.push_back(to_string(w));
        if (!text.empty()) text += "\n";
        text += to_string(w);
    }
    emit(out, o, "lyndon", text, arr);
    return kOk;
}

/// Exact suites, keyed by name; each receives (max_weight, max_prime, order).
const std::map<std::string, std::function<CheckReport(int, int, int)>>& exact_suites() {
    static const std::map<std::string, std::function<CheckReport(int, int, int)>> suites = {
        {"refine_expand", [](int w, int, int) { return check_refine_expand(w, 10); }},
        {"symmetric_sums", [](int w, int, int) { return check_symmetric_sums(3, w, 8); }},
        {"sigma_nabla", [](int w, int, int) { return check_sigma_nabla(std::min(w, 5), 12); }},
        {"dihedral", [](int, int, int) { return check_dihedral(12); }},
        {"euler_binomial", [](int, int, int) { return check_euler_binomial(20); }},
        {"power_sum_vanishing", [](int w, int p, int) { return check_power_sum_vanishing(w - 1, p); }},
        {"reversal_modp", [](int w, int p, int) { return check_reversal_modp(w, p); }},
        {"conjugate_modp", [](int w, int p, int) { return check_conjugate_modp(w, p); }},
        {"hook_modp", [](int w, int p, int) { return check_hook_modp(w + 1, p); }},
        {"psi_modp", [](int w, int p, int) { return check_psi_modp(w, 7, p); }},
        {"repeated_parts_modp", [](int w, int p, int) { return check_repeated_parts_modp(w + 2, p); }},
        {"sigma_exp", [](int w, int, int k) { return check_sigma_exp(std::min(w, 4), k); }},
        {"commutators", [](int w, int, int) { return check_commutators(w); }},
        {"cyclic_sum", [](int w, int, int) { return check_cyclic_sum(w); }},
        {"bbbl", [](int, int, int) { return check_bbbl(3); }},
    };
    return suites;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const std::string& name = o.pos.at(0);
    const auto& suites = exact_suites();
    std::vector<VerifyReport> numeric;
    std::vector<CheckReport> exact;
    const int order = o.order.value_or(4);
    if (name == "all") {
        for (const auto& [n, f] : suites) exact.push_back(f(o.max_weight, o.max_prime, order));
        VerifyParams params{o.max_weight, o.tol, o.order};
        numeric = verify_batch("all", params);
    } else if (auto it = suites.find(name); it != suites.end()) {
        exact.push_back(it->second(o.max_weight, o.max_prime, order));
    } else {
        numeric = verify_batch(name, VerifyParams{o.max_weight, o.tol, o.order});
    }
    bool ok = true;
    for (const auto& r : numeric) ok = ok && r.pass;
    for (const auto& r : exact) ok = ok && r.pass();
    if (o.json) {
        json arr = json::array();
        for (const auto& r : exact)
            arr.push_back({{"identity", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"pass", r.pass()}});
        for (const auto& r : numeric) arr.push_back(to_json(r));
        out << json{{"command", "verify"}, {"pass", ok}, {"reports", arr}}.dump(2) << "\n";
    } else {
        for (const auto& r : exact) out << to_string(r) << "\n";
        for (const auto& r : numeric) out << to_string(r) << "\n";
        out << (ok ? "all passed" : "FAILURES") << " (" << exact.size() + numeric.size() << " reports)\n";
    }
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact algebra of multiple zeta values: products, QSym, operators, finite sums, numerics"};
    app.require_subcommand(1);
    Options o;
    const auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };

    auto* product = app.add_subcommand("product", "shuffle or harmonic product of two polynomials, or a QSym product");
    product->add_option("--type", o.type, "shuffle | star | qsym")->check(CLI::IsMember({"shuffle", "star", "qsym"}));
    product->add_option("operands", o.pos, "two operands")->expected(2)->required();
    json_flag(product);

    auto* convert = app.add_subcommand("convert", "change the basis of a QSym expression");
    convert->add_option("expr", o.pos, "e.g. \"M(2,2)\"")->expected(1)->required();
    convert->add_option("--to", o.to, "M | F | E | p")->required()->check(CLI::IsMember({"M", "F", "E", "p"}));
    json_flag(convert);

    auto* act = app.add_subcommand("act", "u . w, with u in H^1 (polynomial or QSym text)");
    act->add_option("operands", o.pos, "u w")->expected(2)->required();
    json_flag(act);

    auto* derive = app.add_subcommand("derive", "apply D, Dbar, partial, C or hatC (index --n)");
    derive->add_option("operands", o.pos, "operator word")->expected(2)->required();
    derive->add_option("--n", o.n, "index n >= 1");
    json_flag(derive);

    auto* tau_cmd = app.add_subcommand("tau", "the anti-automorphism x <-> y");
    tau_cmd->add_option("word", o.pos)->expected(1)->required();
    json_flag(tau_cmd);

    auto* psi_cmd = app.add_subcommand("psi", "the automorphism x -> x+y, y -> -y");
    psi_cmd->add_option("word", o.pos)->expected(1)->required();
    json_flag(psi_cmd);

    auto* finite = app.add_subcommand("finite", "exact A_I(n) or S_I(n)");
    finite->add_option("args", o.pos, "A|S \"(I)\" n")->expected(3)->required();
    json_flag(finite);

    auto* modp = app.add_subcommand("modp", "A_I(p-1) or S_I(p-1) mod p");
    modp->add_option("args", o.pos, "\"(I)\" p")->expected(2)->required();
    modp->add_option("--sum", o.sum, "A | S");
    json_flag(modp);

    auto* zeta = app.add_subcommand("zeta", "numerical zeta of a composition or polynomial");
    zeta->add_option("target", o.pos, "\"(I)\" or polynomial")->expected(1)->required();
    zeta->add_option("--tol", o.tol, "absolute tolerance");
    json_flag(zeta);

    auto* verify = app.add_subcommand("verify", "run an identity check (or 'all')");
    verify->add_option("name", o.pos)->expected(1)->required();
    verify->add_option("--max-weight", o.max_weight);
    verify->add_option("--max-prime", o.max_prime);
    verify->add_option("--tol", o.tol);
    verify->add_option("--order", o.order);
    json_flag(verify);

    auto* lyndon = app.add_subcommand("lyndon", "list the Lyndon words of a degree");
    lyndon->add_option("degree", o.pos)->expected(1)->required();
    json_flag(lyndon);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (product->parsed()) return cmd_product(o, out);
        if (convert->parsed()) return cmd_convert(o, out);
        if (act->parsed()) return cmd_act(o, out);
        if (derive->parsed()) return cmd_derive(o, out);
        if (tau_cmd->parsed()) return cmd_unary(o, out, "tau");
        if (psi_cmd->parsed()) return cmd_unary(o, out, "psi");
        if (finite->parsed()) return cmd_finite(o, out);
        if (modp->parsed()) return cmd_modp(o, out);
        if (zeta->parsed()) return cmd_zeta(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out);
        if (lyndon->parsed()) return cmd_lyndon(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace mzv::cli
