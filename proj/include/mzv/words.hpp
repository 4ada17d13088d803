#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class Letter : char { x = 'x', y = 'y' };

/// A word in the free monoid on {x, y}. The empty word is the unit 1.
///
/// Letters are stored as the characters 'x' and 'y', so the natural string
/// ordering coincides with the word order (x < y, proper prefix first).
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);
    Word(std::initializer_list<Letter> letters);

    static Word x_power(int n);
    static Word y_power(int n);

    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

    int weight() const noexcept { return static_cast<int>(letters_.size()); }
    int length() const noexcept;
    int colength() const noexcept { return weight() - length(); }
    int height() const noexcept;

    Word substr(std::size_t pos, std::size_t n = std::string::npos) const {
        return Word(letters_.substr(pos, n), Trusted{});
    }

    Word& operator+=(const Word& other) {
        letters_ += other.letters_;
        return *this;
    }
    Word& operator+=(Letter a) {
        letters_ += static_cast<char>(a);
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }
    friend Word operator+(Word a, Letter b) { return a += b; }
    friend Word operator+(Letter a, const Word& b) { return Word(std::string(1, static_cast<char>(a)) + b.letters_, Trusted{}); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    struct Trusted {};
    Word(std::string letters, Trusted) : letters_(std::move(letters)) {}

    std::string letters_;
};

/// Finite sequence of positive integers. May be empty (weight 0).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    int weight() const noexcept;
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Partial sums {i1, i1+i2, ..., i1+...+i_{k-1}} as a sorted vector.
    std::vector<int> partial_sums() const;
    static Composition from_partial_sums(int weight, const std::vector<int>& cuts);

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

struct Gradings {
    int weight;
    int length;
    int colength;
    int height;
    friend bool operator==(const Gradings&, const Gradings&) = default;
};

// Text grammar: word := factor*, factor := ('x'|'y') ['^' int>=1]; whitespace ignored.
Word parse_word(std::string_view text);
// "(i1, i2, ..., ik)", "()" for the empty composition.
Composition parse_composition(std::string_view text);

std::string to_string(const Word& w);         // expanded letters, "1" for the unit
std::string to_string(const Composition& I);  // "(4,2,1)"

Gradings gradings(const Word& w);
bool is_admissible(const Word& w);
/// w is empty or ends in y.
bool in_h1(const Word& w);
Word tau(const Word& w);

Word word_of_composition(const Composition& I);
/// Throws DomainError unless w is empty or ends in y.
Composition composition_of_word(const Word& w);

bool word_less(const Word& a, const Word& b);
bool is_lyndon(const Word& w);
/// Lyndon words of the given weight in increasing word order.
std::vector<Word> lyndon_words(int degree);

/// All 2^n words of weight n, in increasing word order.
std::vector<Word> all_words(int weight);
/// Words of weight n ending in y (plus the unit for n = 0).
std::vector<Word> h1_words(int weight);
/// Admissible words of weight n (the unit for n = 0).
std::vector<Word> admissible_words(int weight);

/// I refines J: |I| = |J| and J is obtained by summing adjacent blocks of I.
bool refines(const Composition& I, const Composition& J);
/// Every J with I ⪰ J, I itself first. 2^(l(I)-1) elements.
std::vector<Composition> coarsenings(const Composition& I);
/// Every J with J ⪰ I.
std::vector<Composition> refinements(const Composition& I);
Composition conjugate(const Composition& I);
Composition reverse(const Composition& I);
/// All compositions of n in lexicographic order (just the empty one for n = 0).
std::vector<Composition> compositions(int n);

}  // namespace mzv

template <>
struct std::hash<mzv::Word> {
    std::size_t operator()(const mzv::Word& w) const noexcept { return std::hash<std::string>{}(w.letters()); }
};

template <>
struct std::hash<mzv::Composition> {
    std::size_t operator()(const mzv::Composition& I) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int p : I) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ULL;
        return h;
    }
};
