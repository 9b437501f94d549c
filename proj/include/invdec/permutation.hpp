#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace invdec {

// A permutation of [n] in one-line notation. Positions and values are
// 1-based; the word is immutable after construction and always a bijection.
class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        if (word_.empty())
            throw std::invalid_argument("permutation: empty word");
        std::vector<char> seen(word_.size(), 0);
        for (int v : word_) {
            if (v < 1 || v > size() || seen[v - 1])
                throw std::invalid_argument("permutation: word is not a bijection of [n]");
            seen[v - 1] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(checked_size(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    // n (n-1) ... 2 1, the longest element.
    static Permutation reverse_identity(int n) {
        std::vector<int> w(checked_size(n));
        std::iota(w.rbegin(), w.rend(), 1);
        return Permutation(std::move(w));
    }

    int size() const { return static_cast<int>(word_.size()); }

    // image of position i
    int operator()(int i) const { return word_[i - 1]; }

    const std::vector<int>& word() const { return word_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (word_[i] != i + 1) return false;
        return true;
    }

    // canonical text form, e.g. "2 4 1 3"
    std::string str() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(word_[i]);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(),
                                                      b.word_.begin(), b.word_.end());
    }

private:
    static int checked_size(int n) {
        if (n < 1) throw std::invalid_argument("permutation: size must be positive");
        return n;
    }

    std::vector<int> word_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return os << p.str();
}

// Accepts whitespace-separated values ("2 4 1 3") or, for n <= 9, a compact
// digit string ("2413").
inline Permutation parse_permutation(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    if (tokens.empty())
        throw std::invalid_argument("permutation: empty input");

    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };

    std::vector<int> word;
    if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0])) {
        // compact form is unambiguous only up to n = 9
        if (tokens[0].size() > 9)
            throw std::invalid_argument("permutation: compact form only valid for n <= 9; use spaces");
        for (char c : tokens[0]) word.push_back(c - '0');
    } else {
        for (const auto& t : tokens) {
            if (!all_digits(t))
                throw std::invalid_argument("permutation: bad token '" + t + "'");
            word.push_back(std::stoi(t));
        }
    }
    return Permutation(std::move(word));
}

// (a*b)(i) = a(b(i)); b is applied first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(a.size());
    for (int i = 1; i <= a.size(); ++i) w[i - 1] = a(b(i));
    return Permutation(std::move(w));
}

inline Permutation inverse(const Permutation& p) {
    std::vector<int> w(p.size());
    for (int i = 1; i <= p.size(); ++i) w[p(i) - 1] = i;
    return Permutation(std::move(w));
}

// rev(p) = p_n ... p_1
inline Permutation reversal(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation(std::move(w));
}

// Length of the longest strictly decreasing subsequence of the word;
// equals the largest clique of the inversion graph.
inline int longest_decreasing_run(const Permutation& p) {
    const int n = p.size();
    std::vector<int> best(n, 1);
    int out = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (p.word()[j] > p.word()[i])
                best[i] = std::max(best[i], best[j] + 1);
        out = std::max(out, best[i]);
    }
    return out;
}

}  // namespace invdec
