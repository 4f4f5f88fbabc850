#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbtree/oracle.hpp"

namespace cbtree {

struct LawResult {
    std::string law;
    std::uint64_t seed = 0;
    bool pass = true;
    std::optional<std::string> witness;
};

/// Collects law outcomes for one instance. When `mutate` names a law, that
/// law's left-hand side is corrupted before comparison (harness self-test).
class LawCollector {
public:
    LawCollector(std::uint64_t seed, std::optional<std::string> mutate = std::nullopt)
        : seed_(seed), mutate_(std::move(mutate)) {}

    void check(const std::string &law, bool pass, std::optional<std::string> witness = std::nullopt);
    void check_equal(const std::string &law, FiniteLanguage lhs, const FiniteLanguage &rhs);
    void check_subset(const std::string &law, FiniteLanguage lhs, const FiniteLanguage &rhs);
    void check_equal(const std::string &law, const TreeAutomaton &lhs, const TreeAutomaton &rhs);
    /// Every truncation built by a tree law must be prefix-closed.
    void check_prefix_closed(const FiniteLanguage &l);

    /// All results, with the prefix-closedness checks folded into one `pref.closed` entry.
    std::vector<LawResult> take();

private:
    bool mutated(const std::string &law) const { return mutate_ && *mutate_ == law; }
    void corrupt(FiniteLanguage &l) const;

    std::uint64_t seed_;
    std::optional<std::string> mutate_;
    std::vector<LawResult> results_;
    bool prefix_closed_ok_ = true;
    std::optional<std::string> prefix_closed_witness_;
    bool prefix_closed_seen_ = false;
};

struct WordInstance {
    FiniteWord u, v;
    FiniteLanguage l, m, superset;
};

struct TreeInstance {
    TreeAutomaton tree;
    TreeAutomaton other;
    FiniteWord u, v;
    std::optional<UPWord> branch;
    std::vector<TreeAutomaton> family;
    std::vector<UPWord> samples;
    SymbolPermutation permutation;
    std::size_t depth = 0;
};

WordInstance make_word_instance(std::uint64_t seed);
TreeInstance make_tree_instance(std::uint64_t seed, std::size_t max_states = 6);

/// Word-level identities: u(vL) = (uv)L, u⁻¹(v⁻¹L) = (vu)⁻¹L, uu⁻¹L = L ∩ uΣ*,
/// u⁻¹uL = L, and the four closure properties of Pref.
std::vector<LawResult> law_suite_words(const WordInstance &inst, std::uint64_t seed,
                                       const std::optional<std::string> &mutate = std::nullopt);
/// Root and along-branch decompositions, attach/quotient, and the truncation
/// semantics of every construction.
std::vector<LawResult> law_suite_trees(const TreeInstance &inst, std::uint64_t seed,
                                       const std::optional<std::string> &mutate = std::nullopt);
/// Derivative, isolation and classification against the cone oracle, plus
/// commutation of the derivative with attach, quotient and mirror.
std::vector<LawResult> law_suite_derivative(const TreeInstance &inst, std::uint64_t seed,
                                            const std::optional<std::string> &mutate = std::nullopt);
/// Pruning idempotence and the pruned-tree / branch-set correspondence.
std::vector<LawResult> law_suite_prune(const TreeInstance &inst, std::uint64_t seed,
                                       const std::optional<std::string> &mutate = std::nullopt);

enum class Execution { Serial, Parallel };

struct SuiteConfig {
    std::uint64_t seed = 0;
    std::size_t count = 200;
    std::size_t max_states = 6;
    Execution execution = Execution::Parallel;
    std::optional<std::string> mutate;
};

struct SuiteReport {
    std::vector<LawResult> results;

    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
    void append(const SuiteReport &other);
};

/// Seeds config.seed .. config.seed+count-1, merged in seed order whatever the execution mode.
SuiteReport run_word_suite(const SuiteConfig &config);
SuiteReport run_tree_suite(const SuiteConfig &config);
SuiteReport run_derivative_suite(const SuiteConfig &config);
SuiteReport run_prune_suite(const SuiteConfig &config);
SuiteReport run_all_suites(const SuiteConfig &config);

} // namespace cbtree
