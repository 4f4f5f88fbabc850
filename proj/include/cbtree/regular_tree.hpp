#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cbtree/words.hpp"

namespace cbtree {

using State = std::int32_t;
inline constexpr State kNoState = -1;

/// A tree (prefix-closed set of finite words) given as a deterministic
/// automaton with partial transitions and no acceptance marking: the tree is
/// the set of words readable from the root.
///
/// Instances are always trim. Construction drops states unreachable from the
/// root and renumbers the rest in breadth-first order (children visited in
/// alphabet order), so structurally identical graphs get identical numbering.
/// The empty tree is the automaton without a root.
class TreeAutomaton {
public:
    /// The empty tree.
    explicit TreeAutomaton(AlphabetRef alphabet);

    /// `delta` is row-major `states x |alphabet|`, kNoState for undefined.
    TreeAutomaton(AlphabetRef alphabet, std::size_t states, std::optional<State> root, std::vector<State> delta);

    const AlphabetRef &alphabet() const { return alphabet_; }
    std::size_t num_states() const { return states_; }
    std::size_t num_edges() const;
    std::optional<State> root() const { return root_; }
    bool is_empty() const { return !root_.has_value(); }

    State next(State q, Letter a) const { return delta_[static_cast<std::size_t>(q) * alphabet_->size() + a]; }
    std::span<const State> row(State q) const {
        return {delta_.data() + static_cast<std::size_t>(q) * alphabet_->size(), alphabet_->size()};
    }
    std::span<const State> transitions() const { return delta_; }

    /// State reached by reading `word` from `from`, or kNoState.
    State read_from(State from, std::span<const Letter> word) const;
    /// State reached by reading `word` from the root, or kNoState.
    State read(const FiniteWord &word) const;

private:
    AlphabetRef alphabet_;
    std::size_t states_ = 0;
    std::optional<State> root_;
    std::vector<State> delta_;
};

/// Incremental construction helper; `build` trims.
class AutomatonBuilder {
public:
    explicit AutomatonBuilder(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state();
    void add_edge(State from, Letter symbol, State to);
    /// Copies `tree` into the builder and returns the image of its root (kNoState if empty).
    State add_tree(const TreeAutomaton &tree);
    std::size_t size() const { return states_; }

    TreeAutomaton build(std::optional<State> root) const;

private:
    AlphabetRef alphabet_;
    std::size_t states_ = 0;
    std::vector<State> delta_;
};

/// Σ-indexed family of trees (T_a), possibly containing empty trees.
struct TreeFamily {
    AlphabetRef alphabet;
    std::vector<TreeAutomaton> components;

    const TreeAutomaton &operator[](Letter a) const { return components.at(a); }
};

struct EqualityResult {
    bool equal = true;
    /// Shortest (then alphabet-least) word in exactly one of the two trees.
    std::optional<FiniteWord> witness;

    explicit operator bool() const { return equal; }
};

bool member(const TreeAutomaton &t, const FiniteWord &u);
TreeAutomaton quotient(const TreeAutomaton &t, const FiniteWord &u);
/// Pref(u) ∪ u·T.
TreeAutomaton attach(const FiniteWord &u, const TreeAutomaton &t);
TreeAutomaton root_construct(const TreeFamily &family);
TreeFamily root_decompose(const TreeAutomaton &t);
TreeAutomaton mirror(const TreeAutomaton &t, const SymbolPermutation &p);
TreeAutomaton intersect(const TreeAutomaton &t1, const TreeAutomaton &t2);
TreeAutomaton unite(const TreeAutomaton &t1, const TreeAutomaton &t2);
EqualityResult equal(const TreeAutomaton &t1, const TreeAutomaton &t2);
bool branch_member(const TreeAutomaton &t, const UPWord &w);

/// Merges states with identical futures (partition refinement on the
/// partial-transition signature). Result is the unique minimal trim automaton.
TreeAutomaton minimize(const TreeAutomaton &t);

/// Keeps the states flagged in `keep` that are reachable from the root
/// through kept states only. `old_to_new`, if given, receives the renumbering
/// (kNoState for dropped states).
TreeAutomaton restrict_states(const TreeAutomaton &t, const std::vector<bool> &keep,
                              std::vector<State> *old_to_new = nullptr);

TreeAutomaton empty_tree(AlphabetRef alphabet);
TreeAutomaton epsilon_tree(AlphabetRef alphabet);
TreeAutomaton full_tree(AlphabetRef alphabet);
/// Pref(u) for a finite word u.
TreeAutomaton pref_word(const FiniteWord &u);
/// Pref(w) for an ultimately periodic w.
TreeAutomaton pref_chain(const UPWord &w);
/// H = Pref({a^ω, b^ω}) over {a, b}.
TreeAutomaton hat();
/// The n-branch tree B_n over a binary alphabet: alternating blocks a*b*a*... of n blocks.
TreeAutomaton b_tree(std::size_t n, const AlphabetRef &alphabet = Alphabet::binary());
/// Spine a^ω with a b^ω tooth at every node.
TreeAutomaton comb();

} // namespace cbtree
