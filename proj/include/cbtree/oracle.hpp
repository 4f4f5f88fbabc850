#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbtree/plugged.hpp"
#include "cbtree/regular_tree.hpp"

namespace cbtree {

/// Explicit finite set of finite words, kept in shortlex order.
class FiniteLanguage {
public:
    explicit FiniteLanguage(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
    FiniteLanguage(AlphabetRef alphabet, std::initializer_list<std::string_view> words);

    const AlphabetRef &alphabet() const { return alphabet_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    void insert(FiniteWord w);
    bool contains(const FiniteWord &w) const { return words_.count(w) != 0; }
    bool is_subset_of(const FiniteLanguage &other) const;
    /// Words of length at most d.
    FiniteLanguage up_to(std::size_t d) const;
    /// `{eps, a, ab}`.
    std::string str() const;

    friend bool operator==(const FiniteLanguage &lhs, const FiniteLanguage &rhs);

private:
    AlphabetRef alphabet_;
    std::set<FiniteWord> words_;
};

FiniteLanguage lang_union(const FiniteLanguage &l, const FiniteLanguage &m);
FiniteLanguage lang_intersection(const FiniteLanguage &l, const FiniteLanguage &m);
/// LM = {xy : x ∈ L, y ∈ M}.
FiniteLanguage concat_lang(const FiniteLanguage &l, const FiniteLanguage &m);
FiniteLanguage pref_lang(const FiniteLanguage &l);
/// u⁻¹L = {v : uv ∈ L}.
FiniteLanguage quotient_lang(const FiniteWord &u, const FiniteLanguage &l);
/// uL = {uv : v ∈ L}.
FiniteLanguage left_concat_lang(const FiniteWord &u, const FiniteLanguage &l);
/// L ∩ uΣ*.
FiniteLanguage with_prefix(const FiniteLanguage &l, const FiniteWord &u);
/// Shortlex-least word in exactly one of the two languages.
std::optional<FiniteWord> first_difference(const FiniteLanguage &l, const FiniteLanguage &m);

/// T ∩ Σ^{≤d}, by breadth-first expansion.
FiniteLanguage truncate(const TreeAutomaton &t, std::size_t d);
/// Expansion of Pref(w) ∪ ⨄ u·T_u to depth d.
FiniteLanguage truncate(const SpinePlugged &p, std::size_t d);
/// Expansion of {ε} ∪ ⨄ n·T_n to depth d, root letters restricted to n ≤ d.
/// Words are over the alphabet Σ followed by the root letters 0..d.
FiniteLanguage truncate(const RootFamily &p, std::size_t d);

/// The tree of a finite language: Pref(L) as an automaton (a trie).
TreeAutomaton trie(const FiniteLanguage &l);

/// Brute-force cone counting, kept independent of the SCC machinery in
/// `analysis`. A word is live when it can be extended by |Q| more letters.
class ConeOracle {
public:
    explicit ConeOracle(const TreeAutomaton &tree);

    /// Number of live words of length `depth` in the subtree at q (saturating).
    std::uint64_t live_width(State q, std::size_t depth) const;
    std::uint64_t live_count(std::size_t depth) const;
    /// The subtree at q is a single infinite chain.
    bool single_chain(State q) const;
    /// Some state reachable from q has two distinct letters both leading back to it.
    bool double_loop_below(State q) const;

    enum class Verdict { Isolated, NotIsolated, Inconclusive };
    struct Isolation {
        Verdict verdict = Verdict::Inconclusive;
        std::optional<std::size_t> depth;
    };
    /// Searches N ≤ d with a single-chain cone at w_{|N}. Conclusive
    /// negatives need the walk along w to revisit a (state, period phase).
    Isolation isolated(const UPWord &w, std::size_t d) const;

private:
    std::uint64_t width_from(State q, std::size_t depth) const;

    TreeAutomaton tree_;
    std::vector<bool> extendable_;
    std::vector<bool> single_chain_;
};

ConeOracle::Isolation oracle_isolated(const TreeAutomaton &t, const UPWord &w, std::size_t d);

/// Reproducible random trim automaton over `alphabet` with `max_states`
/// states before trimming; each (state, symbol) gets a uniform target with
/// probability 0.6.
TreeAutomaton random_tree(std::uint64_t seed, std::size_t max_states, const AlphabetRef &alphabet);

/// splitmix64 step; the suites derive every instance from it.
std::uint64_t mix_seed(std::uint64_t x);

/// Small deterministic generator used for instances (platform-independent).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() { return state_ = mix_seed(state_); }
    /// Uniform in [0, n).
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    bool chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

private:
    std::uint64_t state_;
};

FiniteWord random_word(SeededRng &rng, const AlphabetRef &alphabet, std::size_t max_length);
UPWord random_upword(SeededRng &rng, const AlphabetRef &alphabet, std::size_t max_head, std::size_t max_period);

/// Every canonical UP word whose head and period have length at most `bound`
/// and whose head·period is readable in T. Other UP words are not branches of T.
std::vector<UPWord> candidate_branches(const TreeAutomaton &t, std::size_t bound);

} // namespace cbtree
