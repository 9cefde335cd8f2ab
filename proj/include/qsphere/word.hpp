#pragma once

/**
 * @file word.hpp
 * @brief Letters z_i / z_i* and words over them.
 *
 * Words are ordered shortlex: first by length, then lexicographically on
 * (index, starred). This order fixes term order for printing and JSON.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace qsphere {

struct Letter {
    int index = 0;
    bool starred = false;

    Letter star() const { return {index, !starred}; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

    std::string str() const { return "z" + std::to_string(index) + (starred ? "'" : ""); }
};

inline Letter z(int i) { return {i, false}; }
inline Letter zs(int i) { return {i, true}; }

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word& operator*=(const Word& o) {
        letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
        return *this;
    }
    friend Word operator*(Word a, const Word& b) { return a *= b; }

    void push_back(Letter l) { letters_.push_back(l); }

    /// Letters [from, to).
    Word slice(std::size_t from, std::size_t to) const {
        return Word(std::vector<Letter>(letters_.begin() + static_cast<long>(from),
                                        letters_.begin() + static_cast<long>(to)));
    }

    /// Reverse and toggle every star: the involution on words.
    Word star() const {
        std::vector<Letter> r;
        r.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back(it->star());
        return Word(std::move(r));
    }

    int max_index() const {
        int m = -1;
        for (const auto& l : letters_) m = std::max(m, l.index);
        return m;
    }

    std::size_t count(Letter l) const {
        return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
    }

    friend bool operator==(const Word&, const Word&) = default;

    /// Shortlex.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                      b.letters_.begin(), b.letters_.end());
    }

    /// Space-separated letters with runs collapsed: "z0 z1^2 z1'".
    std::string str() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < letters_.size();) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
            if (!out.empty()) out += ' ';
            out += letters_[i].str();
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }

private:
    std::vector<Letter> letters_;
};

/// Canonical word of the basis element e(j,k,l) of the n = 1 algebra (alpha = z0, beta = z1):
/// z0^j z1^k z1*^l for j >= 0 and z1^k z1*^l z0*^{-j} for j < 0.
inline Word basis_word(long j, unsigned long k, unsigned long l) {
    std::vector<Letter> ls;
    for (long a = 0; a < j; ++a) ls.push_back(z(0));
    for (unsigned long a = 0; a < k; ++a) ls.push_back(z(1));
    for (unsigned long a = 0; a < l; ++a) ls.push_back(zs(1));
    for (long a = 0; a < -j; ++a) ls.push_back(zs(0));
    return Word(std::move(ls));
}

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = w.size();
        for (const auto& l : w) {
            std::size_t code = static_cast<std::size_t>(l.index) * 2 + (l.starred ? 1 : 0);
            h ^= code + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace qsphere
