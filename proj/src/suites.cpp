#include "cbtree/suites.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "cbtree/analysis.hpp"
#include "cbtree/error.hpp"

namespace cbtree {

void LawCollector::check(const std::string &law, bool pass, std::optional<std::string> witness) {
    if (mutated(law)) {
        pass = !pass;
        if (!witness)
            witness = "mutated";
    }
    results_.push_back({law, seed_, pass, pass ? std::nullopt : std::move(witness)});
}

void LawCollector::corrupt(FiniteLanguage &l) const {
    // A word far below any truncation depth used by the suites.
    l.insert(FiniteWord(l.alphabet(), std::vector<Letter>(64, 0)));
}

void LawCollector::check_equal(const std::string &law, FiniteLanguage lhs, const FiniteLanguage &rhs) {
    if (mutated(law))
        corrupt(lhs);
    const auto diff = first_difference(lhs, rhs);
    results_.push_back({law, seed_, !diff, diff ? std::optional(diff->str()) : std::nullopt});
}

void LawCollector::check_subset(const std::string &law, FiniteLanguage lhs, const FiniteLanguage &rhs) {
    if (mutated(law))
        corrupt(lhs);
    for (const auto &w : lhs)
        if (!rhs.contains(w)) {
            results_.push_back({law, seed_, false, w.str()});
            return;
        }
    results_.push_back({law, seed_, true, std::nullopt});
}

void LawCollector::check_equal(const std::string &law, const TreeAutomaton &lhs, const TreeAutomaton &rhs) {
    const auto r = equal(lhs, rhs);
    std::optional<std::string> witness;
    if (r.witness)
        witness = r.witness->str();
    check(law, r.equal, std::move(witness));
}

void LawCollector::check_prefix_closed(const FiniteLanguage &l) {
    prefix_closed_seen_ = true;
    if (!prefix_closed_ok_)
        return;
    for (const auto &w : l)
        if (!w.empty() && !l.contains(restrict(w, w.size() - 1))) {
            prefix_closed_ok_ = false;
            prefix_closed_witness_ = w.str();
            return;
        }
}

std::vector<LawResult> LawCollector::take() {
    if (prefix_closed_seen_) {
        check("pref.closed", prefix_closed_ok_, prefix_closed_witness_);
        prefix_closed_seen_ = false;
    }
    return std::move(results_);
}

// ---------------------------------------------------------------------------

namespace {

// Truncations stay below this many words; deeper levels of bushy trees are skipped.
constexpr std::uint64_t kWordBudget = 20000;

AlphabetRef pick_alphabet(SeededRng &rng) {
    static const AlphabetRef ternary = Alphabet::make({"a", "b", "c"});
    return rng.chance(0.5) ? Alphabet::binary() : ternary;
}

FiniteLanguage random_language(SeededRng &rng, const AlphabetRef &alphabet, std::size_t max_size) {
    FiniteLanguage l(alphabet);
    const std::size_t n = rng.below(max_size + 1);
    for (std::size_t i = 0; i < n; ++i)
        l.insert(random_word(rng, alphabet, 4));
    return l;
}

FiniteLanguage singleton(const FiniteWord &w) {
    FiniteLanguage l(w.alphabet());
    l.insert(w);
    return l;
}

FiniteWord letter_word(const AlphabetRef &alphabet, Letter a) { return FiniteWord(alphabet, {a}); }

// Position of the first letter where x and w differ (both canonical and distinct).
std::size_t divergence(const UPWord &x, const UPWord &w) {
    const std::size_t bound = x.head().size() + w.head().size() + x.period().size() * w.period().size() + 1;
    for (std::size_t i = 0; i < bound; ++i)
        if (x.at(i) != w.at(i))
            return i;
    return bound;
}

// U = ⋃_n w_{|n} T_n with T_n = family[n mod |family|], by subset construction
// over the chain of w and copies of the family members.
TreeAutomaton overflow_union(const UPWord &w, const std::vector<TreeAutomaton> &family) {
    const auto &alphabet = w.alphabet();
    const std::size_t h = w.head().size();
    const std::size_t cycle = std::lcm(w.period().size(), family.size());
    const int chain_end = static_cast<int>(h + cycle);
    using Item = std::pair<int, State>; // (-1, chain index) or (member, state)
    using Subset = std::vector<Item>;

    AutomatonBuilder b(alphabet);
    std::map<Subset, State> index;
    std::vector<Subset> todo;
    auto intern = [&](Subset s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        auto [it, fresh] = index.try_emplace(s, kNoState);
        if (fresh) {
            it->second = b.add_state();
            todo.push_back(s);
        }
        return it->second;
    };
    intern({{-1, 0}});
    while (!todo.empty()) {
        const Subset s = todo.back();
        todo.pop_back();
        const State from = index.at(s);
        for (std::size_t a = 0; a < alphabet->size(); ++a) {
            const auto letter = static_cast<Letter>(a);
            Subset next;
            for (const auto &[kind, q] : s) {
                if (kind >= 0) {
                    const State r = family[kind].next(q, letter);
                    if (r != kNoState)
                        next.emplace_back(kind, r);
                    continue;
                }
                if (w.at(q) == letter)
                    next.emplace_back(-1, q + 1 < chain_end ? q + 1 : static_cast<State>(h));
                const auto &member = family[q % family.size()];
                if (!member.is_empty()) {
                    const State r = member.next(*member.root(), letter);
                    if (r != kNoState)
                        next.emplace_back(static_cast<int>(q % family.size()), r);
                }
            }
            if (!next.empty())
                b.add_edge(from, letter, intern(std::move(next)));
        }
    }
    return b.build(0);
}

// Same set of live words (extendable by |Q| letters) up to length d, by a
// breadth-first walk over pairs of states.
bool same_live_words(const TreeAutomaton &t1, const TreeAutomaton &t2, std::size_t d) {
    const ConeOracle o1(t1), o2(t2);
    auto live = [](const ConeOracle &o, State q) {
        return q != kNoState && o.live_width(q, 0) > 0;
    };
    auto start = [](const TreeAutomaton &t) { return t.root() ? *t.root() : kNoState; };
    std::set<std::pair<State, State>> layer{{start(t1), start(t2)}};
    for (std::size_t k = 0; k <= d && !layer.empty(); ++k) {
        std::set<std::pair<State, State>> next;
        for (const auto &[p, q] : layer) {
            const bool l1 = live(o1, p), l2 = live(o2, q);
            if (l1 != l2)
                return false;
            if (!l1)
                continue;
            for (std::size_t a = 0; a < t1.alphabet()->size(); ++a)
                next.emplace(t1.next(p, static_cast<Letter>(a)), t2.next(q, static_cast<Letter>(a)));
        }
        layer = std::move(next);
    }
    return true;
}

// Number of words of length at most d (saturating).
std::uint64_t words_up_to(const TreeAutomaton &t, std::size_t d) {
    if (t.is_empty())
        return 0;
    std::vector<std::uint64_t> paths(t.num_states(), 0);
    paths[*t.root()] = 1;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < d && total < kWordBudget; ++k) {
        std::vector<std::uint64_t> next(t.num_states(), 0);
        for (std::size_t q = 0; q < paths.size(); ++q)
            for (State r : t.row(static_cast<State>(q)))
                if (r != kNoState)
                    next[r] += paths[q];
        paths = std::move(next);
        for (auto p : paths)
            total += p;
    }
    return total;
}

std::string verdict_str(ConeOracle::Verdict v) {
    switch (v) {
    case ConeOracle::Verdict::Isolated:
        return "isolated";
    case ConeOracle::Verdict::NotIsolated:
        return "not-isolated";
    default:
        return "inconclusive";
    }
}

} // namespace

WordInstance make_word_instance(std::uint64_t seed) {
    SeededRng rng(seed);
    const auto alphabet = pick_alphabet(rng);
    WordInstance inst{random_word(rng, alphabet, 4), random_word(rng, alphabet, 4), random_language(rng, alphabet, 12),
                      random_language(rng, alphabet, 3), FiniteLanguage(alphabet)};
    inst.superset = lang_union(inst.l, random_language(rng, alphabet, 4));
    return inst;
}

TreeInstance make_tree_instance(std::uint64_t seed, std::size_t max_states) {
    SeededRng rng(seed);
    const auto alphabet = pick_alphabet(rng);
    TreeAutomaton tree = random_tree(rng.next(), 1 + rng.below(max_states), alphabet);
    TreeAutomaton other = random_tree(rng.next(), 1 + rng.below(max_states), alphabet);
    FiniteWord u = random_word(rng, alphabet, 3);
    FiniteWord v = random_word(rng, alphabet, 3);

    auto candidates = candidate_branches(tree, tree.num_states());
    std::vector<UPWord> branches;
    std::copy_if(candidates.begin(), candidates.end(), std::back_inserter(branches),
                 [&](const UPWord &w) { return branch_member(tree, w); });
    std::optional<UPWord> branch;
    if (!branches.empty())
        branch = branches[rng.below(branches.size())];

    std::vector<TreeAutomaton> family;
    for (int i = 0; i < 4; ++i)
        family.push_back(random_tree(rng.next(), 1 + rng.below(3), alphabet));

    std::vector<UPWord> samples;
    for (int i = 0; i < 64; ++i)
        samples.push_back(random_upword(rng, alphabet, 4, 4));
    samples.insert(samples.end(), candidates.begin(), candidates.end());
    const auto more = candidate_branches(other, other.num_states());
    samples.insert(samples.end(), more.begin(), more.end());
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    std::vector<Letter> image(alphabet->size());
    std::iota(image.begin(), image.end(), Letter{0});
    for (std::size_t i = image.size(); i > 1; --i)
        std::swap(image[i - 1], image[rng.below(i)]);

    std::size_t depth = 2 * tree.num_states() + 4;
    while (depth > 2 && std::max(words_up_to(tree, depth + 3), words_up_to(other, depth)) > kWordBudget)
        --depth;
    return {std::move(tree),    std::move(other),   std::move(u),
            std::move(v),       std::move(branch),  std::move(family),
            std::move(samples), SymbolPermutation(alphabet, std::move(image)), depth};
}

// ---------------------------------------------------------------------------

std::vector<LawResult> law_suite_words(const WordInstance &inst, std::uint64_t seed,
                                       const std::optional<std::string> &mutate) {
    LawCollector c(seed, mutate);
    const auto &[u, v, l, m, superset] = inst;
    c.check_equal("prop1.1", left_concat_lang(u, left_concat_lang(v, l)), left_concat_lang(concat(u, v), l));
    c.check_equal("prop1.2", quotient_lang(u, quotient_lang(v, l)), quotient_lang(concat(v, u), l));
    c.check_equal("prop1.3", left_concat_lang(u, quotient_lang(u, l)), with_prefix(l, u));
    c.check_equal("prop1.4", quotient_lang(u, left_concat_lang(u, l)), l);
    c.check_subset("pref.1", l, pref_lang(l));
    c.check_subset("pref.2", pref_lang(l), pref_lang(superset));
    c.check_equal("pref.3", pref_lang(pref_lang(l)), pref_lang(l));
    if (!m.empty())
        c.check_equal("pref.4", pref_lang(concat_lang(l, m)), lang_union(pref_lang(l), concat_lang(l, pref_lang(m))));
    return c.take();
}

std::vector<LawResult> law_suite_trees(const TreeInstance &inst, std::uint64_t seed,
                                       const std::optional<std::string> &mutate) {
    LawCollector c(seed, mutate);
    const auto &t = inst.tree;
    const auto &alphabet = t.alphabet();
    const std::size_t d = inst.depth;
    const auto tl = truncate(t, d);
    const auto ol = truncate(inst.other, d);
    c.check_prefix_closed(tl);
    c.check_prefix_closed(ol);

    // {ε} ∪ ⨄ a·T_a, recomputed from truncations.
    auto reassemble = [&](const TreeFamily &f, std::size_t depth) {
        FiniteLanguage out(alphabet);
        out.insert(FiniteWord(alphabet));
        if (depth == 0)
            return out;
        for (std::size_t a = 0; a < alphabet->size(); ++a)
            out = lang_union(out, left_concat_lang(letter_word(alphabet, static_cast<Letter>(a)),
                                                   truncate(f[static_cast<Letter>(a)], depth - 1)));
        return out;
    };

    if (!t.is_empty()) {
        const auto f = root_decompose(t);
        c.check_equal("root.decompose", reassemble(f, d), tl);
    }

    TreeFamily family{alphabet, {}};
    for (std::size_t a = 0; a < alphabet->size(); ++a)
        family.components.push_back(a + 1 == alphabet->size() && inst.u.size() % 2 == 1 ? empty_tree(alphabet)
                                                                                      : inst.family[a]);
    const auto constructed = root_construct(family);
    const auto cl = truncate(constructed, d);
    c.check_prefix_closed(cl);
    c.check_equal("root.construct", cl, reassemble(family, d));

    if (!t.is_empty())
        c.check_equal("attach.quotient", quotient(attach(inst.u, t), inst.u), t);

    const auto al = truncate(attach(inst.u, t), d);
    c.check_prefix_closed(al);
    c.check_equal("trunc.attach", al,
                  lang_union(pref_lang(singleton(inst.u)), left_concat_lang(inst.u, tl)).up_to(d));

    const auto ql = truncate(quotient(t, inst.u), d);
    c.check_prefix_closed(ql);
    c.check_equal("trunc.quotient", ql, quotient_lang(inst.u, truncate(t, d + inst.u.size())));

    const auto il = truncate(intersect(t, inst.other), d);
    const auto ul = truncate(unite(t, inst.other), d);
    c.check_prefix_closed(il);
    c.check_prefix_closed(ul);
    c.check_equal("trunc.intersect", il, lang_intersection(tl, ol));
    c.check_equal("trunc.union", ul, lang_union(tl, ol));

    {
        const auto both = intersect(t, inst.other);
        const auto either = unite(t, inst.other);
        std::optional<std::string> union_witness, inter_witness;
        for (const auto &w : inst.samples) {
            const bool in1 = branch_member(t, w), in2 = branch_member(inst.other, w);
            if (!union_witness && branch_member(either, w) != (in1 || in2))
                union_witness = w.str();
            if (!inter_witness && branch_member(both, w) != (in1 && in2))
                inter_witness = w.str();
        }
        c.check("branch.union", !union_witness, union_witness);
        c.check("branch.intersect", !inter_witness, inter_witness);
    }

    c.check_equal("quotient.compose", quotient(quotient(t, inst.u), inst.v), quotient(t, concat(inst.u, inst.v)));

    if (inst.branch) {
        const UPWord &w = *inst.branch;
        // T = Pref(w) ∪ ⨄_{u ∈ w°} u·u⁻¹T
        FiniteLanguage offs = pref_lang(singleton(restrict(w, d)));
        for (const auto &x : off_words(w, d))
            offs = lang_union(offs, left_concat_lang(x, truncate(quotient(t, x), d - x.size())));
        c.check_prefix_closed(offs);
        c.check_equal("stream.offwords", offs, tl);

        // T = ⨄_n w_{|n}({ε} ∪ ⨄_{a ≠ w_{n+1}} a·(w_{|n}a)⁻¹T)
        FiniteLanguage levels(alphabet);
        for (std::size_t n = 0; n <= d; ++n) {
            const FiniteWord prefix = restrict(w, n);
            FiniteLanguage level(alphabet);
            level.insert(FiniteWord(alphabet));
            if (n < d)
                for (std::size_t a = 0; a < alphabet->size(); ++a) {
                    const auto letter = static_cast<Letter>(a);
                    if (letter == w.at(n))
                        continue;
                    const auto aw = letter_word(alphabet, letter);
                    level = lang_union(
                        level, left_concat_lang(aw, truncate(quotient(t, concat(prefix, aw)), d - n - 1)));
                }
            levels = lang_union(levels, left_concat_lang(prefix, level));
        }
        c.check_equal("stream.levels", levels, tl);
    }

    // Overflow form: ⋃_n w_{|n}T_n along any UP word, components need not be disjoint.
    {
        const UPWord w = inst.branch ? *inst.branch : inst.samples.front();
        const std::size_t depth = std::min<std::size_t>(d, 10);
        const auto &members = inst.family;
        FiniteLanguage expected(alphabet);
        for (std::size_t n = 0; n <= depth; ++n)
            expected = lang_union(expected,
                                  left_concat_lang(restrict(w, n), truncate(members[n % members.size()], depth - n)));
        c.check_prefix_closed(expected);
        const auto u = overflow_union(w, members);
        c.check_equal("branch.construct", truncate(u, depth), expected);

        bool ok = true;
        std::optional<std::string> witness;
        for (const auto &x : inst.samples) {
            if (!same_alphabet(x.alphabet(), alphabet))
                continue;
            bool rhs = x == w;
            if (!rhs) {
                const std::size_t stop = divergence(x, w);
                for (std::size_t n = 0; n <= stop && !rhs; ++n)
                    rhs = branch_member(members[n % members.size()], corestrict(x, n));
            }
            if (branch_member(u, x) != rhs) {
                ok = false;
                witness = x.str();
                break;
            }
        }
        c.check("branch.construct.branches", ok, witness);
    }
    return c.take();
}

std::vector<LawResult> law_suite_derivative(const TreeInstance &inst, std::uint64_t seed,
                                            const std::optional<std::string> &mutate) {
    LawCollector c(seed, mutate);
    const auto &t = inst.tree;
    const auto derived = derive(t);
    const ConeOracle oracle(t);
    const BranchAnalysis analysis(t);

    bool member_ok = true, oracle_ok = true;
    std::optional<std::string> member_witness, oracle_witness;
    for (const auto &w : inst.samples) {
        const bool in_t = branch_member(t, w);
        const bool iso = in_t && analysis.isolation_depth(w).has_value();
        if (member_ok && branch_member(derived, w) != (in_t && !iso)) {
            member_ok = false;
            member_witness = w.str();
        }
        if (!in_t || !oracle_ok)
            continue;
        const std::size_t bound = w.head().size() + t.num_states() * w.period().size() + 1;
        const auto verdict = oracle.isolated(w, bound);
        if (verdict.verdict == ConeOracle::Verdict::Inconclusive)
            continue;
        const bool agree = (verdict.verdict == ConeOracle::Verdict::Isolated) == iso &&
                           (!iso || verdict.depth == analysis.isolation_depth(w));
        if (!agree) {
            oracle_ok = false;
            oracle_witness = w.str() + " oracle " + verdict_str(verdict.verdict);
        }
    }
    c.check("derive.membership", member_ok, member_witness);
    c.check("isolated.oracle", oracle_ok, oracle_witness);

    // Live-cone widths settle to n for finite:n classes and keep growing otherwise.
    bool growth_ok = true, continuum_ok = true;
    std::optional<std::string> growth_witness, continuum_witness;
    const std::size_t states = t.num_states();
    for (std::size_t q = 0; q < states; ++q) {
        const auto state = static_cast<State>(q);
        const Cardinality &cls = analysis.state_class(state);
        std::vector<std::uint64_t> widths;
        for (std::size_t k = states; k <= 2 * states + 1; ++k)
            widths.push_back(oracle.live_width(state, k));
        const bool constant = std::all_of(widths.begin(), widths.end(), [&](auto x) { return x == widths.front(); });
        const bool agree = cls.is_finite() ? constant && widths.front() == cls.count : !constant;
        if (growth_ok && !agree) {
            growth_ok = false;
            growth_witness = "state " + std::to_string(q) + " " + cls.str();
        }
        if (continuum_ok && oracle.double_loop_below(state) != (cls.kind == Cardinality::Kind::Continuum)) {
            continuum_ok = false;
            continuum_witness = "state " + std::to_string(q) + " " + cls.str();
        }
    }
    c.check("classify.growth", growth_ok, growth_witness);
    c.check("classify.continuum", continuum_ok, continuum_witness);

    c.check_equal("derive.attach", derive(attach(inst.u, t)), prune(attach(inst.u, derived)));
    c.check_equal("derive.quotient", derive(quotient(t, inst.u)), quotient(derived, inst.u));
    c.check_equal("derive.mirror", derive(mirror(t, inst.permutation)), mirror(derived, inst.permutation));

    c.check_equal("analysis.subset", intersect(derived, t), derived);
    const auto k = kernel(t);
    c.check_equal("analysis.kernel_fixpoint", derive(k), k);
    std::vector<bool> continuum(states);
    for (std::size_t q = 0; q < states; ++q)
        continuum[q] = analysis.state_class(static_cast<State>(q)).kind == Cardinality::Kind::Continuum;
    c.check_equal("analysis.kernel_states", restrict_states(t, continuum), k);

    const auto r = rank(t);
    const Cardinality total = classify_branches(t);
    c.check("analysis.thin", r.thin == total.is_countable() && r.thin == k.is_empty(), r.rank.str() + " " + total.str());
    c.check("analysis.rank_bound", r.rank.is_finite() && r.rank.to_finite() <= states, r.rank.str());
    if (r.rank.is_finite()) {
        const std::size_t n = r.rank.to_finite();
        const bool settles = equal(derive(t, n), k).equal;
        const bool strict = n == 0 || !equal(derive(t, n - 1), k).equal;
        c.check("analysis.rank_stage", settles && strict, r.rank.str());
    }

    const auto seq = derivative_sequence(t);
    bool decreasing = !seq.empty() && equal(derive(seq.back()), seq.back()).equal;
    for (std::size_t i = 1; i < seq.size() && decreasing; ++i)
        decreasing = equal(intersect(seq[i], seq[i - 1]), seq[i]).equal && !equal(seq[i], seq[i - 1]).equal;
    c.check("analysis.sequence", decreasing, std::to_string(seq.size()) + " stages");
    return c.take();
}

std::vector<LawResult> law_suite_prune(const TreeInstance &inst, std::uint64_t seed,
                                       const std::optional<std::string> &mutate) {
    LawCollector c(seed, mutate);
    const auto &t = inst.tree;
    const auto pruned = prune(t);
    c.check_equal("prune.idempotent", prune(pruned), pruned);
    c.check("prune.pruned", is_pruned(pruned));

    bool branches_ok = true;
    std::optional<std::string> witness;
    for (const auto &w : inst.samples)
        if (branch_member(pruned, w) != branch_member(t, w)) {
            branches_ok = false;
            witness = w.str();
            break;
        }
    c.check("prune.branches", branches_ok, witness);

    // Same sampled branches and same live cones force the same pruned tree.
    // The decorated copy only adds finite words, so the antecedent holds for it.
    const TreeAutomaton decorated = unite(t, pref_word(concat(inst.u, inst.v)));
    bool bijection_ok = true;
    std::optional<std::string> bijection_witness;
    for (const TreeAutomaton *o : {&inst.other, &decorated}) {
        const std::size_t depth = 2 * std::max(t.num_states(), o->num_states());
        const bool same_branches = std::all_of(inst.samples.begin(), inst.samples.end(), [&](const UPWord &w) {
            return branch_member(t, w) == branch_member(*o, w);
        });
        if (!same_branches || !same_live_words(t, *o, depth))
            continue;
        const auto r = equal(pruned, prune(*o));
        if (!r.equal) {
            bijection_ok = false;
            bijection_witness = r.witness ? r.witness->str() : "eps";
        }
    }
    c.check("prune.bijection", bijection_ok, bijection_witness);
    return c.take();
}

// ---------------------------------------------------------------------------

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const LawResult &r) { return !r.pass; }));
}

void SuiteReport::append(const SuiteReport &other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
}

namespace {

SuiteReport run_seeds(const SuiteConfig &config, const char *suite,
                      const std::function<std::vector<LawResult>(std::uint64_t)> &one) {
    const auto count = static_cast<std::int64_t>(config.count);
    std::vector<std::vector<LawResult>> per_seed(config.count);
    const bool parallel = config.execution == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
        try {
            per_seed[i] = one(seed);
        } catch (const std::exception &e) {
            per_seed[i] = {{std::string(suite) + ".error", seed, false, e.what()}};
        }
    }
    SuiteReport report;
    for (auto &results : per_seed)
        report.results.insert(report.results.end(), std::make_move_iterator(results.begin()),
                              std::make_move_iterator(results.end()));
    return report;
}

} // namespace

SuiteReport run_word_suite(const SuiteConfig &config) {
    return run_seeds(config, "words", [&](std::uint64_t seed) {
        return law_suite_words(make_word_instance(seed), seed, config.mutate);
    });
}

SuiteReport run_tree_suite(const SuiteConfig &config) {
    return run_seeds(config, "trees", [&](std::uint64_t seed) {
        return law_suite_trees(make_tree_instance(seed, config.max_states), seed, config.mutate);
    });
}

SuiteReport run_derivative_suite(const SuiteConfig &config) {
    return run_seeds(config, "derivative", [&](std::uint64_t seed) {
        return law_suite_derivative(make_tree_instance(seed, config.max_states), seed, config.mutate);
    });
}

SuiteReport run_prune_suite(const SuiteConfig &config) {
    return run_seeds(config, "prune", [&](std::uint64_t seed) {
        return law_suite_prune(make_tree_instance(seed, config.max_states), seed, config.mutate);
    });
}

SuiteReport run_all_suites(const SuiteConfig &config) {
    SuiteReport report = run_word_suite(config);
    report.append(run_tree_suite(config));
    report.append(run_derivative_suite(config));
    report.append(run_prune_suite(config));
    return report;
}

} // namespace cbtree
