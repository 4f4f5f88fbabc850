#include "cbtree/words.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "cbtree/error.hpp"

namespace cbtree {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
        throw Error("alphabet must not be empty");
    if (symbols_.size() > std::numeric_limits<Letter>::max())
        throw Error("alphabet too large");
    std::set<std::string> seen;
    for (const auto &s : symbols_) {
        if (s.empty())
            throw Error("empty alphabet symbol");
        if (!seen.insert(s).second)
            throw Error("duplicate alphabet symbol '" + s + "'");
    }
}

AlphabetRef Alphabet::make(std::vector<std::string> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

AlphabetRef Alphabet::binary() {
    static const AlphabetRef ab = make({"a", "b"});
    return ab;
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == token)
            return static_cast<Letter>(i);
    return std::nullopt;
}

bool same_alphabet(const AlphabetRef &lhs, const AlphabetRef &rhs) {
    return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

void require_same_alphabet(const AlphabetRef &lhs, const AlphabetRef &rhs) {
    if (!same_alphabet(lhs, rhs))
        throw AlphabetMismatch();
}

// ---------------------------------------------------------------------------

FiniteWord::FiniteWord(AlphabetRef alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_)
        throw Error("word without alphabet");
    for (Letter l : letters_)
        if (l >= alphabet_->size())
            throw AlphabetMismatch("letter outside alphabet");
}

FiniteWord FiniteWord::parse(std::string_view text, AlphabetRef alphabet) {
    FiniteWord word(std::move(alphabet));
    if (text == "eps")
        return word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t best = 0;
        Letter best_letter = 0;
        for (std::size_t i = 0; i < word.alphabet_->size(); ++i) {
            const auto &sym = word.alphabet_->symbol(static_cast<Letter>(i));
            if (sym.size() > best && text.substr(pos, sym.size()) == sym) {
                best = sym.size();
                best_letter = static_cast<Letter>(i);
            }
        }
        if (best == 0)
            throw ParseError("unknown symbol in word '" + std::string(text) + "'", pos);
        word.letters_.push_back(best_letter);
        pos += best;
    }
    return word;
}

void FiniteWord::push_back(Letter letter) {
    if (letter >= alphabet_->size())
        throw AlphabetMismatch("letter outside alphabet");
    letters_.push_back(letter);
}

bool FiniteWord::has_prefix(const FiniteWord &prefix) const {
    return prefix.size() <= size() && std::equal(prefix.letters_.begin(), prefix.letters_.end(), letters_.begin());
}

std::string FiniteWord::str() const {
    if (letters_.empty())
        return "eps";
    std::string out;
    for (Letter l : letters_)
        out += alphabet_->symbol(l);
    return out;
}

bool operator==(const FiniteWord &lhs, const FiniteWord &rhs) {
    return lhs.letters_ == rhs.letters_ && same_alphabet(lhs.alphabet_, rhs.alphabet_);
}

std::strong_ordering operator<=>(const FiniteWord &lhs, const FiniteWord &rhs) {
    if (auto c = lhs.letters_.size() <=> rhs.letters_.size(); c != 0)
        return c;
    return lhs.letters_ <=> rhs.letters_;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t primitive_root_length(std::span<const Letter> v) {
    const std::size_t n = v.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i)
            periodic = v[i] == v[i - p];
        if (periodic)
            return p;
    }
    return n;
}

} // namespace

UPWord::UPWord(FiniteWord head, FiniteWord period) : head_(std::move(head)), period_(std::move(period)) {
    require_same_alphabet(head_.alphabet(), period_.alphabet());
    if (period_.empty())
        throw Error("period of an infinite word must be non-empty");

    auto letters = period_.letters();
    std::vector<Letter> root(letters.begin(), letters.begin() + primitive_root_length(letters));

    // Absorb trailing head letters into the period by rotating it right.
    std::vector<Letter> h(head_.letters().begin(), head_.letters().end());
    while (!h.empty() && h.back() == root.back()) {
        std::rotate(root.rbegin(), root.rbegin() + 1, root.rend());
        h.pop_back();
    }
    head_ = FiniteWord(head_.alphabet(), std::move(h));
    period_ = FiniteWord(period_.alphabet(), std::move(root));
}

UPWord UPWord::parse(std::string_view text, AlphabetRef alphabet) {
    const auto open = text.find('(');
    constexpr std::string_view tail = ")^w";
    if (open == std::string_view::npos || text.size() < tail.size() || text.substr(text.size() - tail.size()) != tail)
        throw ParseError("expected infinite word of the form u(v)^w, got '" + std::string(text) + "'", 0);
    auto head_text = text.substr(0, open);
    auto period_text = text.substr(open + 1, text.size() - tail.size() - open - 1);
    FiniteWord head = head_text.empty() ? FiniteWord(alphabet) : FiniteWord::parse(head_text, alphabet);
    FiniteWord period = FiniteWord::parse(period_text, alphabet);
    if (period.empty())
        throw ParseError("empty period in '" + std::string(text) + "'", open + 1);
    return UPWord(std::move(head), std::move(period));
}

Letter UPWord::at(std::size_t i) const {
    if (i < head_.size())
        return head_[i];
    return period_[(i - head_.size()) % period_.size()];
}

std::string UPWord::str() const {
    return (head_.empty() ? std::string() : head_.str()) + "(" + period_.str() + ")^w";
}

std::strong_ordering operator<=>(const UPWord &lhs, const UPWord &rhs) {
    if (auto c = lhs.head_ <=> rhs.head_; c != 0)
        return c;
    return lhs.period_ <=> rhs.period_;
}

// ---------------------------------------------------------------------------

SymbolPermutation::SymbolPermutation(AlphabetRef alphabet, std::vector<Letter> image)
    : alphabet_(std::move(alphabet)), image_(std::move(image)) {
    if (image_.size() != alphabet_->size())
        throw AlphabetMismatch("permutation size differs from alphabet size");
    std::vector<bool> hit(image_.size(), false);
    for (Letter l : image_) {
        if (l >= image_.size() || hit[l])
            throw Error("symbol map is not a bijection");
        hit[l] = true;
    }
}

SymbolPermutation SymbolPermutation::identity(AlphabetRef alphabet) {
    std::vector<Letter> image(alphabet->size());
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] = static_cast<Letter>(i);
    return {std::move(alphabet), std::move(image)};
}

SymbolPermutation SymbolPermutation::reversal(AlphabetRef alphabet) {
    std::vector<Letter> image(alphabet->size());
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] = static_cast<Letter>(image.size() - 1 - i);
    return {std::move(alphabet), std::move(image)};
}

SymbolPermutation SymbolPermutation::inverse() const {
    std::vector<Letter> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[image_[i]] = static_cast<Letter>(i);
    return {alphabet_, std::move(inv)};
}

bool SymbolPermutation::is_involution() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[image_[i]] != i)
            return false;
    return true;
}

// ---------------------------------------------------------------------------

FiniteWord concat(const FiniteWord &u, const FiniteWord &w) {
    require_same_alphabet(u.alphabet(), w.alphabet());
    std::vector<Letter> letters(u.letters().begin(), u.letters().end());
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    return FiniteWord(u.alphabet(), std::move(letters));
}

UPWord concat(const FiniteWord &u, const UPWord &w) {
    return UPWord(concat(u, w.head()), w.period());
}

FiniteWord restrict(const FiniteWord &w, std::size_t n) {
    auto l = w.letters();
    return FiniteWord(w.alphabet(), std::vector<Letter>(l.begin(), l.begin() + std::min(n, l.size())));
}

FiniteWord restrict(const UPWord &w, std::size_t n) {
    std::vector<Letter> letters(n);
    for (std::size_t i = 0; i < n; ++i)
        letters[i] = w.at(i);
    return FiniteWord(w.alphabet(), std::move(letters));
}

FiniteWord corestrict(const FiniteWord &w, std::size_t n) {
    auto l = w.letters();
    return FiniteWord(w.alphabet(), std::vector<Letter>(l.begin() + std::min(n, l.size()), l.end()));
}

UPWord corestrict(const UPWord &w, std::size_t n) {
    if (n <= w.head().size())
        return UPWord(corestrict(w.head(), n), w.period());
    const std::size_t shift = (n - w.head().size()) % w.period().size();
    std::vector<Letter> rotated(w.period().size());
    for (std::size_t i = 0; i < rotated.size(); ++i)
        rotated[i] = w.period()[(i + shift) % rotated.size()];
    return UPWord(FiniteWord(w.alphabet()), FiniteWord(w.alphabet(), std::move(rotated)));
}

FiniteWord mirror_word(const FiniteWord &w, const SymbolPermutation &p) {
    require_same_alphabet(w.alphabet(), p.alphabet());
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (Letter l : w.letters())
        letters.push_back(p(l));
    return FiniteWord(w.alphabet(), std::move(letters));
}

UPWord mirror_word(const UPWord &w, const SymbolPermutation &p) {
    return UPWord(mirror_word(w.head(), p), mirror_word(w.period(), p));
}

std::vector<FiniteWord> off_words(const UPWord &w, std::size_t n) {
    std::vector<FiniteWord> out;
    const auto sigma = w.alphabet()->size();
    out.reserve(n * (sigma - 1));
    FiniteWord prefix(w.alphabet());
    for (std::size_t k = 0; k < n; ++k) {
        const Letter next = w.at(k);
        for (std::size_t a = 0; a < sigma; ++a) {
            if (a == next)
                continue;
            FiniteWord off = prefix;
            off.push_back(static_cast<Letter>(a));
            out.push_back(std::move(off));
        }
        prefix.push_back(next);
    }
    return out;
}

bool upword_equal(const UPWord &x, const UPWord &y) {
    require_same_alphabet(x.alphabet(), y.alphabet());
    return x == y;
}

} // namespace cbtree
