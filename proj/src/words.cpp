#include "mzv/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mzv/error.hpp"

namespace mzv {

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

// Parses a positive decimal integer at pos; offset of the first digit on error.
int parse_positive(std::string_view text, std::size_t& pos, const char* what) {
    skip_space(text, pos);
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') throw ParseError(std::string(what) + " must be positive", pos);
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError(std::string(what) + " too large", start);
        ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    if (value < 1) throw ParseError(std::string(what) + " must be positive", start);
    return static_cast<int>(value);
}

}  // namespace

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] != 'x' && letters_[i] != 'y') throw ParseError("letter must be x or y", i);
    }
}

Word::Word(std::initializer_list<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter a : letters) letters_ += static_cast<char>(a);
}

Word Word::x_power(int n) { return Word(std::string(static_cast<std::size_t>(n), 'x'), Trusted{}); }
Word Word::y_power(int n) { return Word(std::string(static_cast<std::size_t>(n), 'y'), Trusted{}); }

int Word::length() const noexcept {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'y'));
}

int Word::height() const noexcept {
    int h = 0;
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
        if (letters_[i] == 'x' && letters_[i + 1] == 'y') ++h;
    }
    return h;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw DomainError("composition parts must be positive");
    }
}

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Composition::partial_sums() const {
    std::vector<int> cuts;
    int s = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        s += parts_[i];
        cuts.push_back(s);
    }
    return cuts;
}

Composition Composition::from_partial_sums(int weight, const std::vector<int>& cuts) {
    std::vector<int> parts;
    if (weight == 0) return Composition{};
    int prev = 0;
    for (int c : cuts) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(weight - prev);
    return Composition(std::move(parts));
}

Word parse_word(std::string_view text) {
    std::string out;
    std::size_t pos = 0;
    for (;;) {
        skip_space(text, pos);
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c != 'x' && c != 'y') throw ParseError(std::string("unexpected character '") + c + "' in word", pos);
        ++pos;
        int exponent = 1;
        skip_space(text, pos);
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exponent = parse_positive(text, pos, "exponent");
        }
        out.append(static_cast<std::size_t>(exponent), c);
    }
    return Word(std::move(out));
}

Composition parse_composition(std::string_view text) {
    std::size_t pos = 0;
    skip_space(text, pos);
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<int> parts;
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == ')') {
        ++pos;
    } else {
        for (;;) {
            parts.push_back(parse_positive(text, pos, "part"));
            skip_space(text, pos);
            if (pos >= text.size()) throw ParseError("expected ',' or ')'", pos);
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] != ',') throw ParseError("expected ',' or ')'", pos);
            ++pos;
        }
    }
    skip_space(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after composition", pos);
    return Composition(std::move(parts));
}

std::string to_string(const Word& w) { return w.empty() ? "1" : w.letters(); }

std::string to_string(const Composition& I) {
    std::string s = "(";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(I[i]);
    }
    return s + ")";
}

Gradings gradings(const Word& w) { return {w.weight(), w.length(), w.colength(), w.height()}; }

bool is_admissible(const Word& w) {
    return w.empty() || (w[0] == Letter::x && w[w.size() - 1] == Letter::y);
}

bool in_h1(const Word& w) { return w.empty() || w[w.size() - 1] == Letter::y; }

Word tau(const Word& w) {
    std::string s(w.letters().rbegin(), w.letters().rend());
    for (char& c : s) c = (c == 'x') ? 'y' : 'x';
    return Word(std::move(s));
}

Word word_of_composition(const Composition& I) {
    std::string s;
    s.reserve(static_cast<std::size_t>(I.weight()));
    for (int p : I) {
        s.append(static_cast<std::size_t>(p - 1), 'x');
        s += 'y';
    }
    return Word(std::move(s));
}

Composition composition_of_word(const Word& w) {
    if (!in_h1(w)) throw DomainError("word " + to_string(w) + " does not end in y");
    std::vector<int> parts;
    int run = 0;
    for (char c : w.letters()) {
        ++run;
        if (c == 'y') {
            parts.push_back(run);
            run = 0;
        }
    }
    return Composition(std::move(parts));
}

bool word_less(const Word& a, const Word& b) { return a < b; }

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!(w < w.substr(i))) return false;
    }
    return true;
}

std::vector<Word> lyndon_words(int degree) {
    // Duval's generation of all Lyndon words of length <= degree in
    // lexicographic order; keep those of exact length.
    std::vector<Word> out;
    if (degree < 1) return out;
    std::string w = "x";
    const auto n = static_cast<std::size_t>(degree);
    while (!w.empty()) {
        if (w.size() == n) out.emplace_back(w);
        const std::size_t m = w.size();
        while (w.size() < n) w += w[w.size() - m];
        while (!w.empty() && w.back() == 'y') w.pop_back();
        if (!w.empty()) w.back() = 'y';
    }
    return out;
}

std::vector<Word> all_words(int weight) {
    std::vector<Word> out;
    const std::size_t count = std::size_t{1} << weight;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::string s(static_cast<std::size_t>(weight), 'x');
        for (int i = 0; i < weight; ++i) {
            if (mask & (std::size_t{1} << (weight - 1 - i))) s[static_cast<std::size_t>(i)] = 'y';
        }
        out.emplace_back(std::move(s));
    }
    return out;
}

std::vector<Word> h1_words(int weight) {
    std::vector<Word> out;
    for (Word& w : all_words(weight)) {
        if (in_h1(w)) out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> admissible_words(int weight) {
    std::vector<Word> out;
    for (Word& w : all_words(weight)) {
        if (is_admissible(w)) out.push_back(std::move(w));
    }
    return out;
}

bool refines(const Composition& I, const Composition& J) {
    if (I.weight() != J.weight()) return false;
    const auto a = I.partial_sums();
    const auto b = J.partial_sums();
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Composition> coarsenings(const Composition& I) {
    if (I.empty()) return {I};
    const auto cuts = I.partial_sums();
    const std::size_t m = cuts.size();
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << m);
    for (std::size_t keep = (std::size_t{1} << m); keep-- > 0;) {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < m; ++i) {
            if (keep & (std::size_t{1} << i)) chosen.push_back(cuts[i]);
        }
        out.push_back(Composition::from_partial_sums(I.weight(), chosen));
    }
    return out;
}

std::vector<Composition> refinements(const Composition& I) {
    std::vector<std::vector<int>> acc{{}};
    for (int p : I) {
        std::vector<std::vector<int>> next;
        for (const auto& head : acc) {
            for (const Composition& piece : compositions(p)) {
                auto v = head;
                v.insert(v.end(), piece.begin(), piece.end());
                next.push_back(std::move(v));
            }
        }
        acc = std::move(next);
    }
    std::vector<Composition> out;
    out.reserve(acc.size());
    for (auto& v : acc) out.emplace_back(std::move(v));
    return out;
}

Composition conjugate(const Composition& I) {
    const int n = I.weight();
    if (n == 0) return I;
    const auto cuts = I.partial_sums();
    std::vector<int> complement;
    for (int c = 1; c < n; ++c) {
        if (!std::binary_search(cuts.begin(), cuts.end(), c)) complement.push_back(c);
    }
    return Composition::from_partial_sums(n, complement);
}

Composition reverse(const Composition& I) {
    return Composition(std::vector<int>(I.parts().rbegin(), I.parts().rend()));
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

}  // namespace mzv
