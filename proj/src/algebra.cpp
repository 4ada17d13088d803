#include "mzv/algebra.hpp"

#include <cctype>
#include <sstream>

#include "mzv/error.hpp"

namespace mzv {

// ---------------------------------------------------------------- NCPoly

Rational NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int NCPoly::max_weight() const {
    int m = -1;
    for (const auto& [w, c] : terms_) m = std::max(m, w.weight());
    return m;
}

bool NCPoly::all_words(const std::function<bool(const Word&)>& pred) const {
    for (const auto& [w, c] : terms_) {
        if (!pred(w)) return false;
    }
    return true;
}

NCPoly NCPoly::homogeneous_part(int weight) const {
    return filter([weight](const Word& w) { return w.weight() == weight; });
}

NCPoly NCPoly::filter(const std::function<bool(const Word&)>& pred) const {
    NCPoly out;
    for (const auto& [w, c] : terms_) {
        if (pred(w)) out.terms_.emplace_hint(out.terms_.end(), w, c);
    }
    return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

NCPoly NCPoly::operator-() const {
    NCPoly out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) out.add_term(u + v, cu * cv);
    }
    return out;
}

NCPoly poly_add(const NCPoly& p, const NCPoly& q) { return p + q; }
NCPoly poly_scale(const Rational& c, const NCPoly& p) { return c * p; }
NCPoly poly_concat(const NCPoly& p, const NCPoly& q) { return p * q; }

NCPoly poly_power(const NCPoly& p, int n) {
    NCPoly out = NCPoly::one();
    for (int i = 0; i < n; ++i) out = out * p;
    return out;
}

NCPoly antiauto_tau(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p) out.add_term(tau(w), c);
    return out;
}

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) s += '-';
        } else {
            s += (c < 0) ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            s += to_string(mag);
        } else if (mag == 1) {
            s += w.letters();
        } else {
            s += to_string(mag) + "*" + w.letters();
        }
    }
    return s;
}

NCPoly parse_poly(std::string_view text) {
    NCPoly out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool expect_term = true;
    bool any = false;
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        sign = text[pos] == '-' ? -1 : 1;
        ++pos;
    }
    while (true) {
        skip();
        if (pos >= text.size()) break;
        if (!expect_term) {
            if (text[pos] != '+' && text[pos] != '-') throw ParseError("expected '+' or '-'", pos);
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            expect_term = true;
            continue;
        }
        Rational coeff = 1;
        bool has_coeff = false;
        bool has_star = false;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
            try {
                coeff = parse_rational(text.substr(start, pos - start));
            } catch (const ParseError& e) {
                throw ParseError("bad coefficient", start + e.offset());
            }
            has_coeff = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
                has_star = true;
            }
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
        std::string_view word_text = text.substr(start, pos - start);
        Word w;
        try {
            w = parse_word(word_text);
        } catch (const ParseError& e) {
            throw ParseError("bad word", start + e.offset());
        }
        if ((!has_coeff || has_star) && word_text.find_first_not_of(" \t") == std::string_view::npos)
            throw ParseError("expected a term", start);
        out.add_term(w, sign * coeff);
        any = true;
        expect_term = false;
    }
    if (expect_term && any) throw ParseError("dangling sign", text.size());
    if (!any) throw ParseError("empty polynomial", 0);
    return out;
}

nlohmann::json to_json(const NCPoly& p) {
    auto j = nlohmann::json::array();
    for (const auto& [w, c] : p) j.push_back({{"coeff", to_string(c)}, {"word", w.letters()}});
    return j;
}

NCPoly poly_from_json(const nlohmann::json& j) {
    NCPoly out;
    for (const auto& term : j) {
        out.add_term(Word(term.at("word").get<std::string>()), parse_rational(term.at("coeff").get<std::string>()));
    }
    return out;
}

// ------------------------------------------------------------ TensorPoly

Rational TensorPoly::coefficient(const Word& a, const Word& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorPoly::add_term(const Word& a, const Word& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
    return *this;
}

TensorPoly operator*(const Rational& c, const TensorPoly& t) {
    TensorPoly out;
    for (const auto& [k, v] : t.terms_) out.add_term(k.first, k.second, c * v);
    return out;
}

TensorPoly operator*(const NCPoly& a, const TensorPoly& t) {
    TensorPoly out;
    for (const auto& [w, ca] : a) {
        for (const auto& [k, c] : t.terms_) out.add_term(w + k.first, k.second, ca * c);
    }
    return out;
}

TensorPoly operator*(const TensorPoly& t, const NCPoly& c) {
    TensorPoly out;
    for (const auto& [k, ct] : t.terms_) {
        for (const auto& [w, cc] : c) out.add_term(k.first, k.second + w, ct * cc);
    }
    return out;
}

NCPoly mu_tilde(const TensorPoly& t) {
    NCPoly out;
    for (const auto& [k, c] : t) out.add_term(k.second + k.first, c);
    return out;
}

std::string to_string(const TensorPoly& t) {
    if (t.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : t) {
        if (!first) s += " + ";
        first = false;
        s += to_string(c) + "*" + to_string(k.first) + "⊗" + to_string(k.second);
    }
    return s;
}

// ----------------------------------------------------------- TruncSeries

TruncSeries::TruncSeries(int order) : coeffs_(static_cast<std::size_t>(order < 0 ? 0 : order) + 1) {
    if (order < 0) throw ContractError("series order must be non-negative");
}

TruncSeries::TruncSeries(int order, const NCPoly& constant_term) : TruncSeries(order) {
    coeffs_[0] = constant_term;
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries out(order);
    for (int n = 0; n <= std::min(order, this->order()); ++n) out[n] = (*this)[n];
    return out;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    if (other.order() > order()) coeffs_.resize(other.coeffs_.size());
    for (int n = 0; n <= other.order(); ++n) (*this)[n] += other[n];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
    if (other.order() > order()) coeffs_.resize(other.coeffs_.size());
    for (int n = 0; n <= other.order(); ++n) (*this)[n] -= other[n];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int k = std::min(a.order(), b.order());
    TruncSeries out(k);
    for (int i = 0; i <= k; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= k; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncSeries TruncSeries::shifted(int k) const {
    TruncSeries out(order());
    for (int n = 0; n + k <= order(); ++n) out[n + k] = (*this)[n];
    return out;
}

std::string to_string(const TruncSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= s.order(); ++n) {
        if (s[n].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(s[n]) << ")";
        if (n > 0) os << "*t^" << n;
    }
    if (first) os << "0";
    os << " + O(t^" << s.order() + 1 << ")";
    return os.str();
}

// -------------------------------------------------------- LinearOperator

namespace {

std::optional<int> add_degrees(std::optional<int> a, std::optional<int> b) {
    if (a && b) return *a + *b;
    return std::nullopt;
}

std::optional<int> common_degree(std::optional<int> a, std::optional<int> b) {
    if (a && b && *a == *b) return a;
    return std::nullopt;
}

// Weight raise of a derivation/hom with the given images; nullopt if the
// images are not homogeneous of one common weight.
std::optional<int> image_degree(const NCPoly& ix, const NCPoly& iy) {
    std::optional<int> weight;
    for (const NCPoly* p : {&ix, &iy}) {
        for (const auto& [w, c] : *p) {
            if (weight && *weight != w.weight()) return std::nullopt;
            weight = w.weight();
        }
    }
    if (!weight) return std::nullopt;
    return *weight - 1;
}

}  // namespace

LinearOperator LinearOperator::identity() {
    return LinearOperator([](const Word& w) { return NCPoly(w); }, 0);
}

LinearOperator LinearOperator::zero(std::optional<int> degree) {
    return LinearOperator([](const Word&) { return NCPoly(); }, degree);
}

NCPoly LinearOperator::operator()(const NCPoly& p) const {
    NCPoly out;
    for (const auto& [w, c] : p) {
        NCPoly img = on_word_(w);
        img *= c;
        out += img;
    }
    return out;
}

TruncSeries LinearOperator::operator()(const TruncSeries& s) const {
    TruncSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n) out[n] = (*this)(s[n]);
    return out;
}

LinearOperator operator+(const LinearOperator& f, const LinearOperator& g) {
    return LinearOperator([f, g](const Word& w) { return f(w) + g(w); }, common_degree(f.degree(), g.degree()));
}

LinearOperator operator-(const LinearOperator& f, const LinearOperator& g) {
    return LinearOperator([f, g](const Word& w) { return f(w) - g(w); }, common_degree(f.degree(), g.degree()));
}

LinearOperator operator*(const Rational& c, const LinearOperator& f) {
    return LinearOperator([c, f](const Word& w) { return c * f(w); }, f.degree());
}

LinearOperator compose(const LinearOperator& f, const LinearOperator& g) {
    return LinearOperator([f, g](const Word& w) { return f(g(w)); }, add_degrees(f.degree(), g.degree()));
}

LinearOperator algebra_hom(const NCPoly& image_x, const NCPoly& image_y) {
    auto deg = image_degree(image_x, image_y);
    return LinearOperator(
        [image_x, image_y](const Word& w) {
            NCPoly out = NCPoly::one();
            for (char c : w.letters()) out = out * (c == 'x' ? image_x : image_y);
            return out;
        },
        deg);
}

LinearOperator derivation_from_images(const NCPoly& dx, const NCPoly& dy) {
    std::optional<int> deg = image_degree(dx, dy);
    if (dx.is_zero() && dy.is_zero()) deg = std::nullopt;
    return LinearOperator(
        [dx, dy](const Word& w) {
            NCPoly out;
            for (std::size_t i = 0; i < w.size(); ++i) {
                const NCPoly& d = (w[i] == Letter::x) ? dx : dy;
                if (d.is_zero()) continue;
                out += NCPoly(w.substr(0, i)) * d * NCPoly(w.substr(i + 1));
            }
            return out;
        },
        deg);
}

LinearOperator operator_commutator(const LinearOperator& f, const LinearOperator& g) {
    return compose(f, g) - compose(g, f);
}

LinearOperator tau_conjugate(const LinearOperator& f) {
    return LinearOperator([f](const Word& w) { return antiauto_tau(f(tau(w))); }, f.degree());
}

SeriesOperator exp_operator_series(const std::vector<std::pair<Rational, LinearOperator>>& generators, int order) {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        auto d = generators[i].second.degree();
        if (!d || *d < 1) {
            throw ContractError("generator " + std::to_string(i + 1) + " does not raise weight");
        }
    }
    return [generators, order](const TruncSeries& input) {
        const TruncSeries s = input.truncated(order);
        // X = Σ c_n t^n Δ_n; exp(X) s = Σ_j X^j s / j!, and X^j s = O(t^j).
        auto apply_x = [&](const TruncSeries& v) {
            TruncSeries out(order);
            for (std::size_t i = 0; i < generators.size(); ++i) {
                const int n = static_cast<int>(i) + 1;
                if (n > order) break;
                const auto& [c, op] = generators[i];
                for (int m = 0; m + n <= order; ++m) {
                    if (v[m].is_zero()) continue;
                    out[m + n] += c * op(v[m]);
                }
            }
            return out;
        };
        TruncSeries result = s;
        TruncSeries power = s;
        for (int j = 1; j <= order; ++j) {
            power = apply_x(power);
            power *= make_rational(1, j);
            if (power.is_zero()) break;
            result += power;
        }
        return result;
    };
}

// ------------------------------------------------------- exact elimination

int matrix_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_over_rationals(const std::vector<NCPoly>& polys) {
    std::map<Word, std::size_t> column;
    for (const auto& p : polys) {
        for (const auto& [w, c] : p) column.try_emplace(w, column.size());
    }
    RationalMatrix m(polys.size(), std::vector<Rational>(column.size()));
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [w, c] : polys[r]) m[r][column.at(w)] = c;
    }
    return matrix_rank(std::move(m));
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw ContractError("solve_linear: dimension mismatch");
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        Rational inv = 1 / a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r) {
        if (b[r] != 0) return std::nullopt;
    }
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = b[r];
    return x;
}

}  // namespace mzv
