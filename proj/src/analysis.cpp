#include "cbtree/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "cbtree/error.hpp"

namespace cbtree {

std::string Cardinality::str() const {
    switch (kind) {
    case Kind::Finite:
        return "finite:" + std::to_string(count);
    case Kind::Aleph0:
        return "aleph0";
    case Kind::Continuum:
        return "continuum";
    }
    return {};
}

std::strong_ordering operator<=>(const Cardinality &lhs, const Cardinality &rhs) {
    if (auto c = lhs.kind <=> rhs.kind; c != 0)
        return c;
    return lhs.count <=> rhs.count;
}

Cardinality operator+(Cardinality lhs, Cardinality rhs) {
    if (lhs.kind != Cardinality::Kind::Finite || rhs.kind != Cardinality::Kind::Finite)
        return std::max(lhs, rhs);
    if (lhs.count > std::numeric_limits<std::uint64_t>::max() - rhs.count)
        throw std::overflow_error("finite branch count overflows 64 bits");
    return Cardinality::finite(lhs.count + rhs.count);
}

namespace {

// Strongly connected components of the mask-induced subgraph, in reverse
// topological order (every SCC precedes the SCCs that can reach it).
std::vector<std::vector<State>> strongly_connected(const TreeAutomaton &t, const std::vector<bool> &mask) {
    const std::size_t n = t.num_states();
    const std::size_t sigma = t.alphabet()->size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::vector<std::vector<State>> sccs;
    int counter = 0;

    struct Frame {
        State q;
        std::size_t next_letter;
    };
    for (std::size_t s = 0; s < n; ++s) {
        if (!mask[s] || index[s] != -1)
            continue;
        std::vector<Frame> call{{static_cast<State>(s), 0}};
        index[s] = low[s] = counter++;
        stack.push_back(static_cast<State>(s));
        on_stack[s] = true;
        while (!call.empty()) {
            Frame &f = call.back();
            if (f.next_letter < sigma) {
                const State r = t.next(f.q, static_cast<Letter>(f.next_letter++));
                if (r == kNoState || !mask[r])
                    continue;
                if (index[r] == -1) {
                    index[r] = low[r] = counter++;
                    stack.push_back(r);
                    on_stack[r] = true;
                    call.push_back({r, 0});
                } else if (on_stack[r]) {
                    low[f.q] = std::min(low[f.q], index[r]);
                }
                continue;
            }
            const State q = f.q;
            call.pop_back();
            if (!call.empty())
                low[call.back().q] = std::min(low[call.back().q], low[q]);
            if (low[q] == index[q]) {
                std::vector<State> scc;
                State r;
                do {
                    r = stack.back();
                    stack.pop_back();
                    on_stack[r] = false;
                    scc.push_back(r);
                } while (r != q);
                std::sort(scc.begin(), scc.end());
                sccs.push_back(std::move(scc));
            }
        }
    }
    return sccs;
}

std::vector<bool> reachable_within(const TreeAutomaton &t, const std::vector<bool> &mask) {
    std::vector<bool> seen(t.num_states(), false);
    if (t.is_empty() || !mask[*t.root()])
        return seen;
    std::vector<State> todo{*t.root()};
    seen[*t.root()] = true;
    while (!todo.empty()) {
        const State q = todo.back();
        todo.pop_back();
        for (State r : t.row(q))
            if (r != kNoState && mask[r] && !seen[r]) {
                seen[r] = true;
                todo.push_back(r);
            }
    }
    return seen;
}

std::vector<bool> next_derivative_mask(const TreeAutomaton &t, const std::vector<bool> &mask) {
    BranchAnalysis stage(t, mask);
    std::vector<bool> plural(t.num_states(), false);
    for (std::size_t q = 0; q < plural.size(); ++q)
        plural[q] = mask[q] && stage.state_class(static_cast<State>(q)).is_plural();
    BranchAnalysis kept(t, plural);
    std::vector<bool> live(t.num_states(), false);
    for (std::size_t q = 0; q < live.size(); ++q)
        live[q] = plural[q] && kept.live(static_cast<State>(q));
    return reachable_within(t, live);
}

// Minimal regular-expression strings for the state-elimination below.
struct Rx {
    std::string text;
    int precedence = 2; // 0 union, 1 concatenation, 2 atom
    bool epsilon = false;
};

std::string wrap(const Rx &r, int at_least) {
    return r.precedence < at_least ? "(" + r.text + ")" : r.text;
}

Rx rx_union(const std::optional<Rx> &x, const Rx &y) {
    if (!x)
        return y;
    if (x->text == y.text && x->epsilon == y.epsilon)
        return *x;
    return {(x->epsilon ? "eps" : x->text) + "|" + (y.epsilon ? "eps" : y.text), 0, false};
}

Rx rx_concat(const Rx &x, const Rx &y) {
    if (x.epsilon)
        return y;
    if (y.epsilon)
        return x;
    return {wrap(x, 1) + wrap(y, 1), 1, false};
}

Rx rx_star(const std::optional<Rx> &x) {
    if (!x || x->epsilon)
        return {"", 2, true};
    return {wrap(*x, 2) + "*", 2, false};
}

} // namespace

// ---------------------------------------------------------------------------

BranchAnalysis::BranchAnalysis(const TreeAutomaton &tree)
    : BranchAnalysis(tree, std::vector<bool>(tree.num_states(), true)) {}

BranchAnalysis::BranchAnalysis(const TreeAutomaton &tree, const std::vector<bool> &mask)
    : tree_(&tree), mask_(mask), classes_(tree.num_states(), Cardinality::finite(0)) {
    if (mask_.size() != tree.num_states())
        throw Error("state mask size mismatch");
    const std::size_t n = tree.num_states();
    std::vector<int> scc_of(n, -1);
    const auto sccs = strongly_connected(tree, mask_);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (State q : sccs[c])
            scc_of[q] = static_cast<int>(c);

    for (std::size_t c = 0; c < sccs.size(); ++c) {
        const auto &members = sccs[c];
        bool cyclic = members.size() > 1;
        bool branching = false;
        for (State q : members) {
            std::size_t inner = 0;
            for (State r : tree.row(q))
                if (r != kNoState && mask_[r] && scc_of[r] == static_cast<int>(c))
                    ++inner;
            cyclic = cyclic || inner > 0;
            branching = branching || inner >= 2;
        }

        if (!cyclic) {
            const State q = members.front();
            Cardinality sum = Cardinality::finite(0);
            for (State r : tree.row(q))
                if (r != kNoState && mask_[r])
                    sum = sum + classes_[r];
            classes_[q] = sum;
            continue;
        }

        Cardinality cls = Cardinality::finite(1);
        if (branching) {
            cls = Cardinality::continuum();
        } else {
            for (State q : members)
                for (State r : tree.row(q))
                    if (r != kNoState && mask_[r] && scc_of[r] != static_cast<int>(c) && live(r))
                        cls = std::max({cls, Cardinality::aleph0(), classes_[r]});
        }
        for (State q : members)
            classes_[q] = cls;
    }
}

Cardinality BranchAnalysis::root_class() const {
    const auto &t = *tree_;
    if (t.is_empty() || !mask_[*t.root()])
        return Cardinality::finite(0);
    return classes_[*t.root()];
}

std::optional<std::size_t> BranchAnalysis::isolation_depth(const UPWord &w) const {
    const auto &t = *tree_;
    require_same_alphabet(t.alphabet(), w.alphabet());
    if (!branch_member(t, w) || root_class() == Cardinality::finite(0))
        throw NotABranch(w.str() + " is not a branch of the tree");
    const std::size_t head = w.head().size();
    const std::size_t period = w.period().size();
    std::set<std::pair<State, std::size_t>> seen;
    State q = *t.root();
    for (std::size_t n = 0;; ++n) {
        if (q == kNoState || !mask_[q])
            throw NotABranch(w.str() + " is not a branch of the tree");
        if (classes_[q] == Cardinality::finite(1))
            return n;
        if (n >= head && !seen.emplace(q, (n - head) % period).second)
            return std::nullopt;
        q = t.next(q, w.at(n));
    }
}

UPWord BranchAnalysis::unique_branch(State q) const {
    const auto &t = *tree_;
    if (classes_.at(q) != Cardinality::finite(1))
        throw Error("state does not carry exactly one branch");
    std::map<State, std::size_t> visited;
    std::vector<Letter> letters;
    while (visited.emplace(q, letters.size()).second) {
        State next = kNoState;
        for (std::size_t a = 0; a < t.alphabet()->size(); ++a) {
            const State r = t.next(q, static_cast<Letter>(a));
            if (r != kNoState && mask_[r] && live(r)) {
                letters.push_back(static_cast<Letter>(a));
                next = r;
                break;
            }
        }
        q = next;
    }
    const std::size_t loop = visited.at(q);
    return UPWord(FiniteWord(t.alphabet(), {letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(loop)}),
                  FiniteWord(t.alphabet(), {letters.begin() + static_cast<std::ptrdiff_t>(loop), letters.end()}));
}

std::string IsolatedBranches::Family::str() const {
    return "{" + (prefixes.empty() ? std::string("eps") : prefixes) + "}" + tail.str();
}

// ---------------------------------------------------------------------------

std::vector<bool> live_states(const TreeAutomaton &t) {
    BranchAnalysis analysis(t);
    std::vector<bool> live(t.num_states());
    for (std::size_t q = 0; q < live.size(); ++q)
        live[q] = analysis.live(static_cast<State>(q));
    return live;
}

TreeAutomaton prune(const TreeAutomaton &t) {
    return restrict_states(t, live_states(t));
}

bool is_pruned(const TreeAutomaton &t) {
    for (std::size_t q = 0; q < t.num_states(); ++q) {
        const auto row = t.row(static_cast<State>(q));
        if (std::all_of(row.begin(), row.end(), [](State r) { return r == kNoState; }))
            return false;
    }
    return true;
}

Cardinality classify_branches(const TreeAutomaton &t) {
    return BranchAnalysis(t).root_class();
}

std::vector<std::vector<bool>> derivative_masks(const TreeAutomaton &t) {
    std::vector<std::vector<bool>> masks{reachable_within(t, live_states(t))};
    for (;;) {
        auto next = next_derivative_mask(t, masks.back());
        if (next == masks.back())
            return masks;
        masks.push_back(std::move(next));
    }
}

std::vector<StateReport> state_reports(const TreeAutomaton &t) {
    BranchAnalysis analysis(t);
    const auto masks = derivative_masks(t);
    std::vector<StateReport> reports;
    for (std::size_t q = 0; q < t.num_states(); ++q) {
        StateReport r;
        r.state = static_cast<State>(q);
        r.branch_class = analysis.state_class(r.state);
        r.live = analysis.live(r.state);
        r.in_kernel = masks.back()[q];
        if (!r.in_kernel) {
            std::size_t k = 0;
            while (masks[k][q])
                ++k;
            r.dies_at = k;
        }
        reports.push_back(r);
    }
    return reports;
}

std::optional<std::size_t> isolation_depth(const TreeAutomaton &t, const UPWord &w) {
    return BranchAnalysis(t).isolation_depth(w);
}

bool is_isolated(const TreeAutomaton &t, const UPWord &w) {
    return isolation_depth(t, w).has_value();
}

IsolatedBranches isolated_branches(const TreeAutomaton &t, std::size_t max_enum) {
    BranchAnalysis analysis(t);
    IsolatedBranches result;
    const Cardinality top = analysis.root_class();
    if (top == Cardinality::finite(0))
        return result;
    if (top == Cardinality::finite(1)) {
        result.branches.push_back(analysis.unique_branch(*t.root()));
        return result;
    }

    const std::size_t n = t.num_states();
    const std::size_t sigma = t.alphabet()->size();
    auto plural = [&](State q) { return analysis.state_class(q).is_plural(); };
    auto entry = [&](State q) { return q != kNoState && analysis.state_class(q) == Cardinality::finite(1); };

    // Plural states reachable from the root through plural states that can
    // still step into a finite:1 state.
    std::vector<bool> mask(n);
    for (std::size_t q = 0; q < n; ++q)
        mask[q] = plural(static_cast<State>(q));
    const auto reach = reachable_within(t, mask);
    std::vector<bool> useful(n, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t q = 0; q < n; ++q) {
            if (!reach[q] || useful[q])
                continue;
            for (State r : t.row(static_cast<State>(q)))
                if (entry(r) || (r != kNoState && useful[r])) {
                    useful[q] = changed = true;
                    break;
                }
        }
    }

    const auto sccs = strongly_connected(t, useful);
    result.finite = std::none_of(sccs.begin(), sccs.end(), [&](const auto &scc) {
        if (scc.size() > 1)
            return true;
        const auto row = t.row(scc.front());
        return std::find(row.begin(), row.end(), scc.front()) != row.end();
    });

    auto branch_for = [&](std::vector<Letter> word, Letter a, State q) {
        word.push_back(a);
        return concat(FiniteWord(t.alphabet(), std::move(word)), analysis.unique_branch(q));
    };

    // Entry words in shortlex order, layer by layer.
    std::vector<std::pair<std::vector<Letter>, State>> layer;
    if (useful[*t.root()])
        layer.push_back({{}, *t.root()});
    const std::size_t limit = result.finite ? std::numeric_limits<std::size_t>::max() : max_enum;
    while (!layer.empty() && result.branches.size() < limit) {
        std::vector<std::pair<std::vector<Letter>, State>> next;
        for (const auto &[word, q] : layer)
            for (std::size_t a = 0; a < sigma && result.branches.size() < limit; ++a) {
                const State r = t.next(q, static_cast<Letter>(a));
                if (entry(r))
                    result.branches.push_back(branch_for(word, static_cast<Letter>(a), r));
                else if (r != kNoState && useful[r]) {
                    auto longer = word;
                    longer.push_back(static_cast<Letter>(a));
                    next.emplace_back(std::move(longer), r);
                }
            }
        layer = std::move(next);
    }

    if (result.finite) {
        std::sort(result.branches.begin(), result.branches.end());
        result.branches.erase(std::unique(result.branches.begin(), result.branches.end()), result.branches.end());
        return result;
    }

    // One family per entry edge (p, a, q): {x·a·tail(q) : x spells a useful path root -> p}.
    for (std::size_t p = 0; p < n; ++p) {
        if (!useful[p])
            continue;
        for (std::size_t a = 0; a < sigma; ++a) {
            const State q = t.next(static_cast<State>(p), static_cast<Letter>(a));
            if (!entry(q))
                continue;
            // State elimination over useful states; index n is the source, n+1 the sink.
            std::vector<std::vector<std::optional<Rx>>> edge(n + 2, std::vector<std::optional<Rx>>(n + 2));
            edge[n][*t.root()] = Rx{"", 2, true};
            edge[p][n + 1] = Rx{"", 2, true};
            for (std::size_t s = 0; s < n; ++s) {
                if (!useful[s])
                    continue;
                for (std::size_t b = 0; b < sigma; ++b) {
                    const State r = t.next(static_cast<State>(s), static_cast<Letter>(b));
                    if (r != kNoState && useful[r])
                        edge[s][r] = rx_union(edge[s][r], Rx{t.alphabet()->symbol(static_cast<Letter>(b)), 2, false});
                }
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (!useful[k])
                    continue;
                const Rx loop = rx_star(edge[k][k]);
                for (std::size_t i = 0; i < n + 2; ++i) {
                    if (i == k || !edge[i][k])
                        continue;
                    for (std::size_t j = 0; j < n + 2; ++j) {
                        if (j == k || !edge[k][j])
                            continue;
                        edge[i][j] = rx_union(edge[i][j], rx_concat(rx_concat(*edge[i][k], loop), *edge[k][j]));
                    }
                }
                for (std::size_t i = 0; i < n + 2; ++i)
                    edge[i][k].reset(), edge[k][i].reset();
            }
            const Rx &paths = *edge[n][n + 1];
            result.families.push_back(
                {paths.epsilon ? std::string() : paths.text,
                 concat(FiniteWord(t.alphabet(), {static_cast<Letter>(a)}), analysis.unique_branch(q))});
        }
    }
    return result;
}

TreeAutomaton derive(const TreeAutomaton &t) {
    const auto first = reachable_within(t, live_states(t));
    return restrict_states(t, next_derivative_mask(t, first));
}

TreeAutomaton derive(const TreeAutomaton &t, std::size_t times) {
    auto current = prune(t);
    for (std::size_t i = 0; i < times; ++i)
        current = derive(current);
    return current;
}

TreeAutomaton kernel(const TreeAutomaton &t) {
    return restrict_states(t, derivative_masks(t).back());
}

RankResult rank(const TreeAutomaton &t) {
    const auto masks = derivative_masks(t);
    const auto &last = masks.back();
    return {Ordinal::finite(masks.size() - 1), std::none_of(last.begin(), last.end(), [](bool b) { return b; })};
}

std::vector<TreeAutomaton> derivative_sequence(const TreeAutomaton &t) {
    std::vector<TreeAutomaton> out;
    for (const auto &mask : derivative_masks(t))
        out.push_back(restrict_states(t, mask));
    return out;
}

} // namespace cbtree
