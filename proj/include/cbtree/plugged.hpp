#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "cbtree/ordinal.hpp"
#include "cbtree/regular_tree.hpp"

namespace cbtree {

/// n ↦ rank of the n-th component: an explicit finite prefix followed by
/// slope·n + intercept (n counted from the start of the whole sequence).
struct RankPattern {
    std::vector<Ordinal> prefix;
    std::uint64_t slope = 0;
    std::uint64_t intercept = 0;

    static RankPattern affine(std::uint64_t slope, std::uint64_t intercept) { return {{}, slope, intercept}; }

    Ordinal at(std::size_t n) const;
    bool unbounded() const { return slope > 0; }
    /// `affine(1,1)` or `explicit(2,3,affine(1,0))`.
    std::string str() const;

    friend bool operator==(const RankPattern &, const RankPattern &) = default;
};

inline constexpr std::size_t kDefaultProbe = 12;

namespace detail {

// Memo table for generated components; readers share, writers exclude.
template <typename Key>
class ComponentCache {
public:
    template <typename Make>
    const TreeAutomaton &get(const Key &key, Make &&make) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end())
                return it->second;
        }
        TreeAutomaton built = make();
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(key, std::move(built)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, TreeAutomaton> cache_;
};

} // namespace detail

/// Pref(w) ∪ ⨄ u·T_u over the off-words u = w_{|k}·a of a spine w.
class SpinePlugged {
public:
    using Generator = std::function<TreeAutomaton(std::size_t position, Letter symbol)>;

    /// `support`: components exist only at positions k < support (nullopt: all positions).
    /// `constant_schema`: the generator ignores the position.
    SpinePlugged(UPWord spine, Generator generator, RankPattern declared_ranks,
                 std::optional<std::size_t> support = std::nullopt, bool constant_schema = false);

    const UPWord &spine() const { return spine_; }
    const AlphabetRef &alphabet() const { return spine_.alphabet(); }
    const RankPattern &declared_ranks() const { return ranks_; }
    std::optional<std::size_t> support() const { return support_; }
    bool constant_schema() const { return constant_; }

    /// T_u for u = w_{|k}·a; the empty tree when a = w_{k+1} or k is outside the support.
    const TreeAutomaton &component(std::size_t k, Letter a) const;

    /// First `count` off-positions (k, a) whose component has a branch, in
    /// (k, alphabet) order, looking at spine positions below `scan_limit`.
    std::vector<std::pair<std::size_t, Letter>> plugged_positions(std::size_t count, std::size_t scan_limit) const;

private:
    UPWord spine_;
    Generator generator_;
    RankPattern ranks_;
    std::optional<std::size_t> support_;
    bool constant_;
    std::shared_ptr<detail::ComponentCache<std::pair<std::size_t, Letter>>> cache_;
};

/// {ε} ∪ ⨄_{n∈ω} n·T_n over the countable alphabet ω ∪ Σ.
class RootFamily {
public:
    using Generator = std::function<TreeAutomaton(std::size_t n)>;

    RootFamily(Generator generator, RankPattern declared_ranks, AlphabetRef component_alphabet = Alphabet::binary());

    const AlphabetRef &component_alphabet() const { return alphabet_; }
    const RankPattern &declared_ranks() const { return ranks_; }
    const TreeAutomaton &component(std::size_t n) const;

private:
    Generator generator_;
    RankPattern ranks_;
    AlphabetRef alphabet_;
    std::shared_ptr<detail::ComponentCache<std::size_t>> cache_;
};

/// A word over ω ∪ Σ as used by RootFamily: ε, or a root letter n followed by a Σ-word.
struct RootFamilyWord {
    std::optional<std::size_t> root_letter;
    FiniteWord rest;

    /// `eps`, or the decimal root letter followed by the Σ-word, e.g. `3abb`.
    static RootFamilyWord parse(std::string_view text, AlphabetRef alphabet);
    std::string str() const;
};

/// G = ⋃ a^k({ε} ∪ b·mirror(B_{k+1})). With `support` = K+1, only the
/// components at k ≤ K are kept (the regular approximation G_K).
SpinePlugged growing_tree(std::optional<std::size_t> support = std::nullopt);
/// {ε} ∪ ⨄ n·B_n, whose rank is ω.
RootFamily omega_family();

bool member_plugged(const SpinePlugged &p, const FiniteWord &u);
bool member_plugged(const RootFamily &p, const RootFamilyWord &u);

Ordinal rank_plugged(const SpinePlugged &p, std::size_t probe = kDefaultProbe);
Ordinal rank_plugged(const RootFamily &p, std::size_t probe = kDefaultProbe);

/// The equivalent automaton, when the instance is regular (finite support or
/// constant schema); nullopt otherwise.
std::optional<TreeAutomaton> materialize(const SpinePlugged &p);

} // namespace cbtree
