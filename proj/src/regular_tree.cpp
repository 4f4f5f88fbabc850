#include "cbtree/regular_tree.hpp"

#include <deque>
#include <map>
#include <queue>
#include <utility>

#include "cbtree/error.hpp"

namespace cbtree {

TreeAutomaton::TreeAutomaton(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_)
        throw Error("tree without alphabet");
}

TreeAutomaton::TreeAutomaton(AlphabetRef alphabet, std::size_t states, std::optional<State> root,
                             std::vector<State> delta)
    : alphabet_(std::move(alphabet)) {
    if (!alphabet_)
        throw Error("tree without alphabet");
    const std::size_t sigma = alphabet_->size();
    if (delta.size() != states * sigma)
        throw Error("transition table size mismatch");
    for (State target : delta)
        if (target != kNoState && (target < 0 || static_cast<std::size_t>(target) >= states))
            throw Error("transition target out of range");
    if (!root)
        return;
    if (*root < 0 || static_cast<std::size_t>(*root) >= states)
        throw Error("root out of range");

    // Trim and renumber in BFS order.
    std::vector<State> renumber(states, kNoState);
    std::vector<State> order;
    renumber[*root] = 0;
    order.push_back(*root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const State q = order[i];
        for (std::size_t a = 0; a < sigma; ++a) {
            const State r = delta[static_cast<std::size_t>(q) * sigma + a];
            if (r != kNoState && renumber[r] == kNoState) {
                renumber[r] = static_cast<State>(order.size());
                order.push_back(r);
            }
        }
    }
    states_ = order.size();
    delta_.assign(states_ * sigma, kNoState);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t a = 0; a < sigma; ++a) {
            const State r = delta[static_cast<std::size_t>(order[i]) * sigma + a];
            delta_[i * sigma + a] = r == kNoState ? kNoState : renumber[r];
        }
    root_ = 0;
}

std::size_t TreeAutomaton::num_edges() const {
    std::size_t n = 0;
    for (State r : delta_)
        n += r != kNoState;
    return n;
}

State TreeAutomaton::read_from(State from, std::span<const Letter> word) const {
    State q = from;
    for (Letter a : word) {
        if (q == kNoState)
            break;
        q = next(q, a);
    }
    return q;
}

State TreeAutomaton::read(const FiniteWord &word) const {
    require_same_alphabet(alphabet_, word.alphabet());
    if (!root_)
        return kNoState;
    return read_from(*root_, word.letters());
}

// ---------------------------------------------------------------------------

State AutomatonBuilder::add_state() {
    delta_.resize(delta_.size() + alphabet_->size(), kNoState);
    return static_cast<State>(states_++);
}

void AutomatonBuilder::add_edge(State from, Letter symbol, State to) {
    delta_.at(static_cast<std::size_t>(from) * alphabet_->size() + symbol) = to;
}

State AutomatonBuilder::add_tree(const TreeAutomaton &tree) {
    require_same_alphabet(alphabet_, tree.alphabet());
    if (tree.is_empty())
        return kNoState;
    const auto offset = static_cast<State>(states_);
    for (std::size_t q = 0; q < tree.num_states(); ++q)
        add_state();
    const std::size_t sigma = alphabet_->size();
    for (std::size_t q = 0; q < tree.num_states(); ++q)
        for (std::size_t a = 0; a < sigma; ++a) {
            const State r = tree.next(static_cast<State>(q), static_cast<Letter>(a));
            if (r != kNoState)
                add_edge(static_cast<State>(q) + offset, static_cast<Letter>(a), r + offset);
        }
    return *tree.root() + offset;
}

TreeAutomaton AutomatonBuilder::build(std::optional<State> root) const {
    if (root && *root == kNoState)
        root.reset();
    return TreeAutomaton(alphabet_, states_, root, delta_);
}

// ---------------------------------------------------------------------------

bool member(const TreeAutomaton &t, const FiniteWord &u) {
    return t.read(u) != kNoState;
}

TreeAutomaton quotient(const TreeAutomaton &t, const FiniteWord &u) {
    const State q = t.read(u);
    if (q == kNoState)
        return TreeAutomaton(t.alphabet());
    return TreeAutomaton(t.alphabet(), t.num_states(), q, {t.transitions().begin(), t.transitions().end()});
}

TreeAutomaton attach(const FiniteWord &u, const TreeAutomaton &t) {
    require_same_alphabet(u.alphabet(), t.alphabet());
    if (u.empty())
        return t;
    AutomatonBuilder b(t.alphabet());
    const State sub = b.add_tree(t);
    const State root = b.add_state();
    State q = root;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        const State r = b.add_state();
        b.add_edge(q, u[i], r);
        q = r;
    }
    b.add_edge(q, u.back(), sub != kNoState ? sub : b.add_state());
    return b.build(root);
}

TreeAutomaton root_construct(const TreeFamily &family) {
    if (family.components.size() != family.alphabet->size())
        throw AlphabetMismatch("family is not indexed by the alphabet");
    AutomatonBuilder b(family.alphabet);
    const State root = b.add_state();
    for (std::size_t a = 0; a < family.components.size(); ++a) {
        const State sub = b.add_tree(family.components[a]);
        if (sub != kNoState)
            b.add_edge(root, static_cast<Letter>(a), sub);
    }
    return b.build(root);
}

TreeFamily root_decompose(const TreeAutomaton &t) {
    if (t.is_empty())
        throw EmptyTreeError("root decomposition of the empty tree");
    TreeFamily family{t.alphabet(), {}};
    for (std::size_t a = 0; a < t.alphabet()->size(); ++a)
        family.components.push_back(quotient(t, FiniteWord(t.alphabet(), {static_cast<Letter>(a)})));
    return family;
}

TreeAutomaton mirror(const TreeAutomaton &t, const SymbolPermutation &p) {
    require_same_alphabet(t.alphabet(), p.alphabet());
    if (t.is_empty())
        return t;
    const std::size_t sigma = t.alphabet()->size();
    std::vector<State> delta(t.num_states() * sigma, kNoState);
    for (std::size_t q = 0; q < t.num_states(); ++q)
        for (std::size_t a = 0; a < sigma; ++a)
            delta[q * sigma + p(static_cast<Letter>(a))] = t.next(static_cast<State>(q), static_cast<Letter>(a));
    return TreeAutomaton(t.alphabet(), t.num_states(), t.root(), std::move(delta));
}

namespace {

// Reachable product over pairs; `keep_partial` admits pairs where one side is undefined.
TreeAutomaton product(const TreeAutomaton &t1, const TreeAutomaton &t2, bool keep_partial) {
    require_same_alphabet(t1.alphabet(), t2.alphabet());
    const AlphabetRef &alphabet = t1.alphabet();
    const State r1 = t1.root().value_or(kNoState);
    const State r2 = t2.root().value_or(kNoState);
    if (keep_partial ? (r1 == kNoState && r2 == kNoState) : (r1 == kNoState || r2 == kNoState))
        return TreeAutomaton(alphabet);

    AutomatonBuilder b(alphabet);
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>> queue;
    auto visit = [&](State p, State q) {
        auto [it, fresh] = index.try_emplace({p, q}, kNoState);
        if (fresh) {
            it->second = b.add_state();
            queue.emplace_back(p, q);
        }
        return it->second;
    };
    const State root = visit(r1, r2);
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        const State from = index.at({p, q});
        for (std::size_t a = 0; a < alphabet->size(); ++a) {
            const auto letter = static_cast<Letter>(a);
            const State p2 = p == kNoState ? kNoState : t1.next(p, letter);
            const State q2 = q == kNoState ? kNoState : t2.next(q, letter);
            const bool defined = keep_partial ? (p2 != kNoState || q2 != kNoState) : (p2 != kNoState && q2 != kNoState);
            if (defined)
                b.add_edge(from, letter, visit(p2, q2));
        }
    }
    return b.build(root);
}

} // namespace

TreeAutomaton intersect(const TreeAutomaton &t1, const TreeAutomaton &t2) {
    return product(t1, t2, false);
}

TreeAutomaton unite(const TreeAutomaton &t1, const TreeAutomaton &t2) {
    return product(t1, t2, true);
}

EqualityResult equal(const TreeAutomaton &t1, const TreeAutomaton &t2) {
    require_same_alphabet(t1.alphabet(), t2.alphabet());
    const AlphabetRef &alphabet = t1.alphabet();
    if (t1.is_empty() != t2.is_empty())
        return {false, FiniteWord(alphabet)};
    if (t1.is_empty())
        return {};

    // BFS over synchronous pairs; parents give back the witness.
    struct Node {
        State p, q;
        std::size_t parent;
        Letter via;
    };
    std::vector<Node> nodes{{*t1.root(), *t2.root(), 0, 0}};
    std::map<std::pair<State, State>, std::size_t> seen{{{*t1.root(), *t2.root()}, 0}};
    auto spell = [&](std::size_t i, Letter last) {
        std::vector<Letter> rev{last};
        for (; i != 0; i = nodes[i].parent)
            rev.push_back(nodes[i].via);
        return FiniteWord(alphabet, {rev.rbegin(), rev.rend()});
    };
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t a = 0; a < alphabet->size(); ++a) {
            const auto letter = static_cast<Letter>(a);
            const State p = t1.next(nodes[i].p, letter);
            const State q = t2.next(nodes[i].q, letter);
            if ((p == kNoState) != (q == kNoState))
                return {false, spell(i, letter)};
            if (p == kNoState)
                continue;
            if (seen.try_emplace({p, q}, nodes.size()).second)
                nodes.push_back({p, q, i, letter});
        }
    }
    return {};
}

bool branch_member(const TreeAutomaton &t, const UPWord &w) {
    State q = t.read(w.head());
    if (q == kNoState)
        return false;
    const std::size_t period = w.period().size();
    std::vector<bool> seen(t.num_states() * period, false);
    for (std::size_t phase = 0;; phase = (phase + 1) % period) {
        const std::size_t key = static_cast<std::size_t>(q) * period + phase;
        if (seen[key])
            return true;
        seen[key] = true;
        q = t.next(q, w.period()[phase]);
        if (q == kNoState)
            return false;
    }
}

TreeAutomaton minimize(const TreeAutomaton &t) {
    if (t.is_empty())
        return t;
    const std::size_t n = t.num_states();
    const std::size_t sigma = t.alphabet()->size();
    std::vector<State> block(n, 0);
    std::size_t blocks = 1;
    for (;;) {
        std::map<std::vector<State>, State> signatures;
        std::vector<State> refined(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<State> sig{block[q]};
            for (std::size_t a = 0; a < sigma; ++a) {
                const State r = t.next(static_cast<State>(q), static_cast<Letter>(a));
                sig.push_back(r == kNoState ? kNoState : block[r]);
            }
            refined[q] = signatures.try_emplace(std::move(sig), static_cast<State>(signatures.size())).first->second;
        }
        block = std::move(refined);
        if (signatures.size() == blocks)
            break;
        blocks = signatures.size();
    }
    std::vector<State> delta(blocks * sigma, kNoState);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t a = 0; a < sigma; ++a) {
            const State r = t.next(static_cast<State>(q), static_cast<Letter>(a));
            if (r != kNoState)
                delta[static_cast<std::size_t>(block[q]) * sigma + a] = block[r];
        }
    return TreeAutomaton(t.alphabet(), blocks, block[*t.root()], std::move(delta));
}

TreeAutomaton restrict_states(const TreeAutomaton &t, const std::vector<bool> &keep, std::vector<State> *old_to_new) {
    const std::size_t n = t.num_states();
    const std::size_t sigma = t.alphabet()->size();
    if (old_to_new)
        old_to_new->assign(n, kNoState);
    if (t.is_empty() || !keep.at(*t.root()))
        return TreeAutomaton(t.alphabet());

    std::vector<State> delta(n * sigma, kNoState);
    for (std::size_t q = 0; q < n; ++q) {
        if (!keep[q])
            continue;
        for (std::size_t a = 0; a < sigma; ++a) {
            const State r = t.next(static_cast<State>(q), static_cast<Letter>(a));
            if (r != kNoState && keep[r])
                delta[q * sigma + a] = r;
        }
    }
    TreeAutomaton result(t.alphabet(), n, t.root(), std::move(delta));
    if (old_to_new) {
        // The constructor renumbers by BFS; replay it to recover the map.
        std::vector<State> order{*t.root()};
        (*old_to_new)[*t.root()] = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t a = 0; a < sigma; ++a) {
                const State r = t.next(order[i], static_cast<Letter>(a));
                if (r != kNoState && keep[r] && (*old_to_new)[r] == kNoState) {
                    (*old_to_new)[r] = static_cast<State>(order.size());
                    order.push_back(r);
                }
            }
    }
    return result;
}

// ---------------------------------------------------------------------------

TreeAutomaton empty_tree(AlphabetRef alphabet) {
    return TreeAutomaton(std::move(alphabet));
}

TreeAutomaton epsilon_tree(AlphabetRef alphabet) {
    AutomatonBuilder b(std::move(alphabet));
    return b.build(b.add_state());
}

TreeAutomaton full_tree(AlphabetRef alphabet) {
    AutomatonBuilder b(alphabet);
    const State q = b.add_state();
    for (std::size_t a = 0; a < alphabet->size(); ++a)
        b.add_edge(q, static_cast<Letter>(a), q);
    return b.build(q);
}

TreeAutomaton pref_word(const FiniteWord &u) {
    return attach(u, epsilon_tree(u.alphabet()));
}

TreeAutomaton pref_chain(const UPWord &w) {
    AutomatonBuilder b(w.alphabet());
    const std::size_t h = w.head().size();
    const std::size_t p = w.period().size();
    for (std::size_t i = 0; i < h + p; ++i)
        b.add_state();
    for (std::size_t i = 0; i + 1 < h + p; ++i)
        b.add_edge(static_cast<State>(i), w.at(i), static_cast<State>(i + 1));
    b.add_edge(static_cast<State>(h + p - 1), w.at(h + p - 1), static_cast<State>(h));
    return b.build(0);
}

TreeAutomaton hat() {
    const auto ab = Alphabet::binary();
    AutomatonBuilder b(ab);
    const State root = b.add_state();
    const State left = b.add_state();
    const State right = b.add_state();
    b.add_edge(root, 0, left);
    b.add_edge(root, 1, right);
    b.add_edge(left, 0, left);
    b.add_edge(right, 1, right);
    return b.build(root);
}

TreeAutomaton b_tree(std::size_t n, const AlphabetRef &alphabet) {
    if (alphabet->size() != 2)
        throw AlphabetMismatch("B(n) needs a binary alphabet");
    AutomatonBuilder b(alphabet);
    if (n == 0)
        return b.build(std::nullopt);
    for (std::size_t i = 0; i < n; ++i)
        b.add_state();
    // Block i loops on a for even i and on b for odd i.
    for (std::size_t i = 0; i < n; ++i) {
        const auto loop = static_cast<Letter>(i % 2);
        b.add_edge(static_cast<State>(i), loop, static_cast<State>(i));
        if (i + 1 < n)
            b.add_edge(static_cast<State>(i), static_cast<Letter>(1 - loop), static_cast<State>(i + 1));
    }
    return b.build(0);
}

TreeAutomaton comb() {
    AutomatonBuilder b(Alphabet::binary());
    const State spine = b.add_state();
    const State tooth = b.add_state();
    b.add_edge(spine, 0, spine);
    b.add_edge(spine, 1, tooth);
    b.add_edge(tooth, 1, tooth);
    return b.build(spine);
}

} // namespace cbtree
