#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbtree/ordinal.hpp"
#include "cbtree/regular_tree.hpp"

namespace cbtree {

/// Size of a set of infinite branches: Finite(n) < Aleph0 < Continuum.
struct Cardinality {
    enum class Kind { Finite, Aleph0, Continuum };

    Kind kind = Kind::Finite;
    std::uint64_t count = 0; // meaningful for Finite only

    static Cardinality finite(std::uint64_t n) { return {Kind::Finite, n}; }
    static Cardinality aleph0() { return {Kind::Aleph0, 0}; }
    static Cardinality continuum() { return {Kind::Continuum, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_countable() const { return kind != Kind::Continuum; }
    /// At least two branches.
    bool is_plural() const { return kind != Kind::Finite || count >= 2; }

    /// `finite:n`, `aleph0` or `continuum`.
    std::string str() const;

    friend bool operator==(const Cardinality &, const Cardinality &) = default;
    friend std::strong_ordering operator<=>(const Cardinality &lhs, const Cardinality &rhs);
};

Cardinality operator+(Cardinality lhs, Cardinality rhs);

/// Per-state view of the analysis; `dies_at` is empty for kernel states.
struct StateReport {
    State state = 0;
    bool live = false;
    Cardinality branch_class;
    bool in_kernel = false;
    std::optional<std::size_t> dies_at;
};

/// Branch classification of every state of one automaton, restricted to the
/// states flagged in a mask (all states by default). The class of q is the
/// cardinality of the branch set of the subtree rooted at q.
///
/// Classes are computed on the SCC condensation of the live subgraph. A live
/// SCC in which some state has two successors inside the SCC carries two
/// distinct cycles through a common state and yields continuum many branches;
/// a simple cycle with a live exit yields aleph0; otherwise branch counts add
/// up along the acyclic part.
class BranchAnalysis {
public:
    explicit BranchAnalysis(const TreeAutomaton &tree);
    BranchAnalysis(const TreeAutomaton &tree, const std::vector<bool> &mask);

    const TreeAutomaton &tree() const { return *tree_; }
    const Cardinality &state_class(State q) const { return classes_.at(q); }
    const std::vector<Cardinality> &classes() const { return classes_; }
    bool live(State q) const { return classes_.at(q) != Cardinality::finite(0); }
    Cardinality root_class() const;

    /// Smallest N such that the cone at w_{|N} holds w as its only branch, or
    /// nullopt when w is not isolated. Throws NotABranch.
    std::optional<std::size_t> isolation_depth(const UPWord &w) const;

    /// The unique branch below a state of class finite:1.
    UPWord unique_branch(State q) const;

private:
    const TreeAutomaton *tree_;
    std::vector<bool> mask_;
    std::vector<Cardinality> classes_;
};

/// Isolated branches of [T]. When the set is infinite, `families` describes it
/// as {x·tail : x ∈ regex} and `branches` holds the first `max_enum`
/// members by entry word.
struct IsolatedBranches {
    struct Family {
        std::string prefixes; // regular expression over the alphabet
        UPWord tail;
        std::string str() const;
    };

    bool finite = true;
    std::vector<UPWord> branches;
    std::vector<Family> families;
};

struct RankResult {
    Ordinal rank;
    bool thin = true;
};

std::vector<bool> live_states(const TreeAutomaton &t);
TreeAutomaton prune(const TreeAutomaton &t);
bool is_pruned(const TreeAutomaton &t);
Cardinality classify_branches(const TreeAutomaton &t);
std::vector<StateReport> state_reports(const TreeAutomaton &t);

bool is_isolated(const TreeAutomaton &t, const UPWord &w);
std::optional<std::size_t> isolation_depth(const TreeAutomaton &t, const UPWord &w);
IsolatedBranches isolated_branches(const TreeAutomaton &t, std::size_t max_enum = 16);

/// Pruned tree whose branches are the non-isolated branches of [T].
TreeAutomaton derive(const TreeAutomaton &t);
TreeAutomaton derive(const TreeAutomaton &t, std::size_t times);
TreeAutomaton kernel(const TreeAutomaton &t);
RankResult rank(const TreeAutomaton &t);
/// prune(T), T', T'', ... up to the first stage fixed by the derivative.
std::vector<TreeAutomaton> derivative_sequence(const TreeAutomaton &t);

/// State masks of the derivative sequence, over the states of `t`.
std::vector<std::vector<bool>> derivative_masks(const TreeAutomaton &t);

} // namespace cbtree
