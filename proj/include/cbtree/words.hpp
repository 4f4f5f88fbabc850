#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbtree {

// Symbols are stored as their index in the alphabet.
using Letter = std::uint8_t;

class Alphabet;
using AlphabetRef = std::shared_ptr<const Alphabet>;

/// Ordered finite set of distinct, non-empty symbol tokens.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    static AlphabetRef make(std::vector<std::string> symbols);
    /// The default {a, b}.
    static AlphabetRef binary();

    std::size_t size() const { return symbols_.size(); }
    const std::string &symbol(Letter letter) const { return symbols_.at(letter); }
    const std::vector<std::string> &symbols() const { return symbols_; }
    std::optional<Letter> find(std::string_view token) const;

    friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
    std::vector<std::string> symbols_;
};

bool same_alphabet(const AlphabetRef &lhs, const AlphabetRef &rhs);
void require_same_alphabet(const AlphabetRef &lhs, const AlphabetRef &rhs);

class FiniteWord {
public:
    explicit FiniteWord(AlphabetRef alphabet, std::vector<Letter> letters = {});

    /// Juxtaposed symbol tokens (greedy longest match), or `eps` for the empty word.
    static FiniteWord parse(std::string_view text, AlphabetRef alphabet);

    const AlphabetRef &alphabet() const { return alphabet_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter back() const { return letters_.back(); }

    void push_back(Letter letter);
    void pop_back() { letters_.pop_back(); }

    bool has_prefix(const FiniteWord &prefix) const;
    std::string str() const;

    friend bool operator==(const FiniteWord &lhs, const FiniteWord &rhs);
    /// Shortlex: shorter words first, then lexicographic in alphabet order.
    friend std::strong_ordering operator<=>(const FiniteWord &lhs, const FiniteWord &rhs);

private:
    AlphabetRef alphabet_;
    std::vector<Letter> letters_;
};

/// Ultimately periodic infinite word head·period^ω, kept in canonical form:
/// primitive period and shortest head. Equal words have equal representations.
class UPWord {
public:
    UPWord(FiniteWord head, FiniteWord period);

    /// `u(v)^w`, e.g. `ab(ba)^w` or `(a)^w`.
    static UPWord parse(std::string_view text, AlphabetRef alphabet);

    const AlphabetRef &alphabet() const { return head_.alphabet(); }
    const FiniteWord &head() const { return head_; }
    const FiniteWord &period() const { return period_; }

    /// Letter at 0-based position i.
    Letter at(std::size_t i) const;
    std::string str() const;

    friend bool operator==(const UPWord &, const UPWord &) = default;
    friend std::strong_ordering operator<=>(const UPWord &lhs, const UPWord &rhs);

private:
    FiniteWord head_;
    FiniteWord period_;
};

/// Bijection on the letters of one alphabet.
class SymbolPermutation {
public:
    SymbolPermutation(AlphabetRef alphabet, std::vector<Letter> image);

    static SymbolPermutation identity(AlphabetRef alphabet);
    /// First symbol to last, second to second-to-last, ...; the swap a<->b on {a, b}.
    static SymbolPermutation reversal(AlphabetRef alphabet);

    const AlphabetRef &alphabet() const { return alphabet_; }
    Letter operator()(Letter letter) const { return image_.at(letter); }
    SymbolPermutation inverse() const;
    bool is_involution() const;

    friend bool operator==(const SymbolPermutation &lhs, const SymbolPermutation &rhs) {
        return same_alphabet(lhs.alphabet_, rhs.alphabet_) && lhs.image_ == rhs.image_;
    }

private:
    AlphabetRef alphabet_;
    std::vector<Letter> image_;
};

FiniteWord concat(const FiniteWord &u, const FiniteWord &w);
UPWord concat(const FiniteWord &u, const UPWord &w);

FiniteWord restrict(const FiniteWord &w, std::size_t n);
FiniteWord restrict(const UPWord &w, std::size_t n);

FiniteWord corestrict(const FiniteWord &w, std::size_t n);
UPWord corestrict(const UPWord &w, std::size_t n);

FiniteWord mirror_word(const FiniteWord &w, const SymbolPermutation &p);
UPWord mirror_word(const UPWord &w, const SymbolPermutation &p);

/// The off-words w_{|k}·a with k < n and a != w_{k+1}, ordered by (k, alphabet order).
std::vector<FiniteWord> off_words(const UPWord &w, std::size_t n);

bool upword_equal(const UPWord &x, const UPWord &y);

} // namespace cbtree
