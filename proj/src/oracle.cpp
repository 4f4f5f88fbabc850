#include "cbtree/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "cbtree/error.hpp"

namespace cbtree {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

FiniteWord append(const FiniteWord &u, Letter a) {
    FiniteWord out = u;
    out.push_back(a);
    return out;
}

} // namespace

FiniteLanguage::FiniteLanguage(AlphabetRef alphabet, std::initializer_list<std::string_view> words)
    : alphabet_(std::move(alphabet)) {
    for (auto w : words)
        insert(FiniteWord::parse(w, alphabet_));
}

void FiniteLanguage::insert(FiniteWord w) {
    require_same_alphabet(alphabet_, w.alphabet());
    words_.insert(std::move(w));
}

bool FiniteLanguage::is_subset_of(const FiniteLanguage &other) const {
    return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

FiniteLanguage FiniteLanguage::up_to(std::size_t d) const {
    FiniteLanguage out(alphabet_);
    for (const auto &w : words_)
        if (w.size() <= d)
            out.words_.insert(w);
    return out;
}

std::string FiniteLanguage::str() const {
    std::string out = "{";
    for (const auto &w : words_)
        out += (out.size() > 1 ? ", " : "") + w.str();
    return out + "}";
}

bool operator==(const FiniteLanguage &lhs, const FiniteLanguage &rhs) {
    return same_alphabet(lhs.alphabet_, rhs.alphabet_) && lhs.words_ == rhs.words_;
}

FiniteLanguage lang_union(const FiniteLanguage &l, const FiniteLanguage &m) {
    FiniteLanguage out = l;
    for (const auto &w : m)
        out.insert(w);
    return out;
}

FiniteLanguage lang_intersection(const FiniteLanguage &l, const FiniteLanguage &m) {
    FiniteLanguage out(l.alphabet());
    for (const auto &w : l)
        if (m.contains(w))
            out.insert(w);
    return out;
}

FiniteLanguage concat_lang(const FiniteLanguage &l, const FiniteLanguage &m) {
    FiniteLanguage out(l.alphabet());
    for (const auto &x : l)
        for (const auto &y : m)
            out.insert(concat(x, y));
    return out;
}

FiniteLanguage pref_lang(const FiniteLanguage &l) {
    FiniteLanguage out(l.alphabet());
    for (const auto &w : l)
        for (std::size_t n = 0; n <= w.size(); ++n)
            out.insert(restrict(w, n));
    return out;
}

FiniteLanguage quotient_lang(const FiniteWord &u, const FiniteLanguage &l) {
    FiniteLanguage out(l.alphabet());
    for (const auto &w : l)
        if (w.has_prefix(u))
            out.insert(corestrict(w, u.size()));
    return out;
}

FiniteLanguage left_concat_lang(const FiniteWord &u, const FiniteLanguage &l) {
    FiniteLanguage out(l.alphabet());
    for (const auto &w : l)
        out.insert(concat(u, w));
    return out;
}

FiniteLanguage with_prefix(const FiniteLanguage &l, const FiniteWord &u) {
    FiniteLanguage out(l.alphabet());
    for (const auto &w : l)
        if (w.has_prefix(u))
            out.insert(w);
    return out;
}

std::optional<FiniteWord> first_difference(const FiniteLanguage &l, const FiniteLanguage &m) {
    std::optional<FiniteWord> best;
    auto consider = [&](const FiniteLanguage &a, const FiniteLanguage &b) {
        for (const auto &w : a)
            if (!b.contains(w)) {
                if (!best || w < *best)
                    best = w;
                return;
            }
    };
    consider(l, m);
    consider(m, l);
    return best;
}

// ---------------------------------------------------------------------------

FiniteLanguage truncate(const TreeAutomaton &t, std::size_t d) {
    FiniteLanguage out(t.alphabet());
    if (t.is_empty())
        return out;
    std::vector<std::pair<FiniteWord, State>> layer{{FiniteWord(t.alphabet()), *t.root()}};
    for (std::size_t depth = 0;; ++depth) {
        for (const auto &entry : layer)
            out.insert(entry.first);
        if (depth == d)
            break;
        std::vector<std::pair<FiniteWord, State>> next;
        for (const auto &[w, q] : layer)
            for (std::size_t a = 0; a < t.alphabet()->size(); ++a) {
                const State r = t.next(q, static_cast<Letter>(a));
                if (r != kNoState)
                    next.emplace_back(append(w, static_cast<Letter>(a)), r);
            }
        layer = std::move(next);
    }
    return out;
}

FiniteLanguage truncate(const SpinePlugged &p, std::size_t d) {
    const UPWord &w = p.spine();
    FiniteLanguage out(p.alphabet());
    for (std::size_t n = 0; n <= d; ++n)
        out.insert(restrict(w, n));
    for (const auto &u : off_words(w, d)) {
        const TreeAutomaton &component = p.component(u.size() - 1, u.back());
        if (!component.is_empty())
            out = lang_union(out, left_concat_lang(u, truncate(component, d - u.size())));
    }
    return out;
}

FiniteLanguage truncate(const RootFamily &p, std::size_t d) {
    const auto &sigma = p.component_alphabet();
    std::vector<std::string> symbols = sigma->symbols();
    for (std::size_t n = 0; n <= d; ++n)
        symbols.push_back(std::to_string(n));
    const auto extended = Alphabet::make(std::move(symbols));

    FiniteLanguage out(extended);
    out.insert(FiniteWord(extended));
    if (d == 0)
        return out;
    for (std::size_t n = 0; n <= d; ++n) {
        const auto &component = p.component(n);
        if (component.is_empty())
            continue;
        for (const auto &v : truncate(component, d - 1)) {
            std::vector<Letter> letters{static_cast<Letter>(sigma->size() + n)};
            letters.insert(letters.end(), v.letters().begin(), v.letters().end());
            out.insert(FiniteWord(extended, std::move(letters)));
        }
    }
    return out;
}

TreeAutomaton trie(const FiniteLanguage &l) {
    AutomatonBuilder b(l.alphabet());
    if (l.empty())
        return b.build(std::nullopt);
    const State root = b.add_state();
    // Shortlex order visits every parent before its children.
    std::map<FiniteWord, State> node{{FiniteWord(l.alphabet()), root}};
    for (const auto &w : pref_lang(l)) {
        if (w.empty())
            continue;
        const State parent = node.at(restrict(w, w.size() - 1));
        const State child = b.add_state();
        b.add_edge(parent, w.back(), child);
        node.emplace(w, child);
    }
    return b.build(root);
}

// ---------------------------------------------------------------------------

ConeOracle::ConeOracle(const TreeAutomaton &tree) : tree_(tree) {
    const std::size_t n = tree.num_states();
    // extendable[q]: some path of length n starts at q.
    std::vector<bool> ext(n, true);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<bool> longer(n, false);
        for (std::size_t q = 0; q < n; ++q)
            for (State r : tree.row(static_cast<State>(q)))
                if (r != kNoState && ext[r])
                    longer[q] = true;
        ext = std::move(longer);
    }
    extendable_ = std::move(ext);

    single_chain_.assign(n, false);
    for (std::size_t q = 0; q < n; ++q) {
        bool single = extendable_[q];
        for (std::size_t k = 1; single && k <= n + 1; ++k)
            single = width_from(static_cast<State>(q), k) == 1;
        single_chain_[q] = single;
    }
}

std::uint64_t ConeOracle::width_from(State q, std::size_t depth) const {
    const auto &t = tree_;
    std::vector<std::uint64_t> paths(t.num_states(), 0);
    paths[q] = 1;
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<std::uint64_t> next(t.num_states(), 0);
        for (std::size_t s = 0; s < paths.size(); ++s) {
            if (paths[s] == 0)
                continue;
            for (State r : t.row(static_cast<State>(s)))
                if (r != kNoState)
                    next[r] = saturating_add(next[r], paths[s]);
        }
        paths = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < paths.size(); ++s)
        if (extendable_[s])
            total = saturating_add(total, paths[s]);
    return total;
}

std::uint64_t ConeOracle::live_width(State q, std::size_t depth) const {
    return width_from(q, depth);
}

std::uint64_t ConeOracle::live_count(std::size_t depth) const {
    return tree_.is_empty() ? 0 : width_from(*tree_.root(), depth);
}

bool ConeOracle::single_chain(State q) const {
    return single_chain_.at(q);
}

bool ConeOracle::double_loop_below(State q) const {
    const auto &t = tree_;
    auto reach = [&](State from) {
        std::vector<bool> seen(t.num_states(), false);
        std::vector<State> todo{from};
        seen[from] = true;
        while (!todo.empty()) {
            const State s = todo.back();
            todo.pop_back();
            for (State r : t.row(s))
                if (r != kNoState && !seen[r]) {
                    seen[r] = true;
                    todo.push_back(r);
                }
        }
        return seen;
    };
    const auto below = reach(q);
    for (std::size_t s = 0; s < below.size(); ++s) {
        if (!below[s])
            continue;
        std::size_t returning = 0;
        for (State r : t.row(static_cast<State>(s)))
            if (r != kNoState && reach(r)[s])
                ++returning;
        if (returning >= 2)
            return true;
    }
    return false;
}

ConeOracle::Isolation ConeOracle::isolated(const UPWord &w, std::size_t d) const {
    const auto &t = tree_;
    require_same_alphabet(t.alphabet(), w.alphabet());
    if (t.is_empty())
        throw NotABranch(w.str() + " is not a branch of the empty tree");
    const std::size_t head = w.head().size();
    std::set<std::pair<State, std::size_t>> seen;
    State q = *t.root();
    for (std::size_t n = 0; n <= d; ++n) {
        if (q == kNoState)
            throw NotABranch(w.str() + " leaves the tree");
        if (single_chain_[q])
            return {Verdict::Isolated, n};
        if (n >= head && !seen.emplace(q, (n - head) % w.period().size()).second)
            return {Verdict::NotIsolated, std::nullopt};
        q = t.next(q, w.at(n));
    }
    return {};
}

ConeOracle::Isolation oracle_isolated(const TreeAutomaton &t, const UPWord &w, std::size_t d) {
    return ConeOracle(t).isolated(w, d);
}

// ---------------------------------------------------------------------------

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

TreeAutomaton random_tree(std::uint64_t seed, std::size_t max_states, const AlphabetRef &alphabet) {
    if (max_states == 0)
        throw Error("random_tree needs at least one state");
    SeededRng rng(seed);
    const std::size_t sigma = alphabet->size();
    std::vector<State> delta(max_states * sigma, kNoState);
    for (auto &target : delta)
        if (rng.chance(0.6))
            target = static_cast<State>(rng.below(max_states));
    return TreeAutomaton(alphabet, max_states, 0, std::move(delta));
}

FiniteWord random_word(SeededRng &rng, const AlphabetRef &alphabet, std::size_t max_length) {
    const std::size_t length = rng.below(max_length + 1);
    std::vector<Letter> letters(length);
    for (auto &l : letters)
        l = static_cast<Letter>(rng.below(alphabet->size()));
    return FiniteWord(alphabet, std::move(letters));
}

UPWord random_upword(SeededRng &rng, const AlphabetRef &alphabet, std::size_t max_head, std::size_t max_period) {
    FiniteWord head = random_word(rng, alphabet, max_head);
    FiniteWord period(alphabet);
    const std::size_t length = 1 + rng.below(max_period);
    for (std::size_t i = 0; i < length; ++i)
        period.push_back(static_cast<Letter>(rng.below(alphabet->size())));
    return UPWord(std::move(head), std::move(period));
}

namespace {

bool primitive(const std::vector<Letter> &v) {
    const std::size_t n = v.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i)
            periodic = v[i] == v[i - p];
        if (periodic)
            return false;
    }
    return true;
}

} // namespace

std::vector<UPWord> candidate_branches(const TreeAutomaton &t, std::size_t bound) {
    std::vector<UPWord> out;
    if (t.is_empty())
        return out;
    const std::size_t sigma = t.alphabet()->size();
    std::vector<Letter> head, period;

    // Periods readable from `from`; only canonical (head, period) pairs are emitted.
    auto periods = [&](auto &&self, State q) -> void {
        if (!period.empty() && primitive(period) && (head.empty() || head.back() != period.back()))
            out.emplace_back(FiniteWord(t.alphabet(), head), FiniteWord(t.alphabet(), period));
        if (period.size() == bound)
            return;
        for (std::size_t a = 0; a < sigma; ++a) {
            const State r = t.next(q, static_cast<Letter>(a));
            if (r == kNoState)
                continue;
            period.push_back(static_cast<Letter>(a));
            self(self, r);
            period.pop_back();
        }
    };
    auto heads = [&](auto &&self, State q) -> void {
        periods(periods, q);
        if (head.size() == bound)
            return;
        for (std::size_t a = 0; a < sigma; ++a) {
            const State r = t.next(q, static_cast<Letter>(a));
            if (r == kNoState)
                continue;
            head.push_back(static_cast<Letter>(a));
            self(self, r);
            head.pop_back();
        }
    };
    heads(heads, *t.root());
    return out;
}

} // namespace cbtree
