#include "cbtree/plugged.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cbtree/analysis.hpp"
#include "cbtree/error.hpp"

namespace cbtree {

Ordinal RankPattern::at(std::size_t n) const {
    if (n < prefix.size())
        return prefix[n];
    return Ordinal::finite(slope * n + intercept);
}

std::string RankPattern::str() const {
    std::string affine = "affine(" + std::to_string(slope) + "," + std::to_string(intercept) + ")";
    if (prefix.empty())
        return affine;
    std::string out = "explicit(";
    for (const auto &r : prefix)
        out += r.str() + ",";
    return out + affine + ")";
}

// ---------------------------------------------------------------------------

SpinePlugged::SpinePlugged(UPWord spine, Generator generator, RankPattern declared_ranks,
                           std::optional<std::size_t> support, bool constant_schema)
    : spine_(std::move(spine)), generator_(std::move(generator)), ranks_(std::move(declared_ranks)),
      support_(support), constant_(constant_schema),
      cache_(std::make_shared<detail::ComponentCache<std::pair<std::size_t, Letter>>>()) {
    if (!generator_)
        throw Error("plugged tree without component generator");
}

const TreeAutomaton &SpinePlugged::component(std::size_t k, Letter a) const {
    const bool off = a != spine_.at(k) && (!support_ || k < *support_);
    return cache_->get({k, a}, [&] {
        if (!off)
            return empty_tree(alphabet());
        TreeAutomaton t = generator_(k, a);
        require_same_alphabet(t.alphabet(), alphabet());
        return t;
    });
}

std::vector<std::pair<std::size_t, Letter>> SpinePlugged::plugged_positions(std::size_t count,
                                                                             std::size_t scan_limit) const {
    std::vector<std::pair<std::size_t, Letter>> out;
    const std::size_t end = support_ ? std::min(scan_limit, *support_) : scan_limit;
    for (std::size_t k = 0; k < end && out.size() < count; ++k)
        for (std::size_t a = 0; a < alphabet()->size() && out.size() < count; ++a) {
            const auto letter = static_cast<Letter>(a);
            if (classify_branches(component(k, letter)) != Cardinality::finite(0))
                out.emplace_back(k, letter);
        }
    return out;
}

RootFamily::RootFamily(Generator generator, RankPattern declared_ranks, AlphabetRef component_alphabet)
    : generator_(std::move(generator)), ranks_(std::move(declared_ranks)), alphabet_(std::move(component_alphabet)),
      cache_(std::make_shared<detail::ComponentCache<std::size_t>>()) {
    if (!generator_)
        throw Error("root family without component generator");
}

const TreeAutomaton &RootFamily::component(std::size_t n) const {
    return cache_->get(n, [&] {
        TreeAutomaton t = generator_(n);
        require_same_alphabet(t.alphabet(), alphabet_);
        return t;
    });
}

RootFamilyWord RootFamilyWord::parse(std::string_view text, AlphabetRef alphabet) {
    if (text == "eps")
        return {std::nullopt, FiniteWord(std::move(alphabet))};
    std::size_t digits = 0;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
    if (digits == 0)
        throw ParseError("root-family word must start with a root letter", 0);
    const auto letter = std::stoull(std::string(text.substr(0, digits)));
    auto rest = text.substr(digits);
    return {letter, rest.empty() ? FiniteWord(alphabet) : FiniteWord::parse(rest, alphabet)};
}

std::string RootFamilyWord::str() const {
    if (!root_letter)
        return "eps";
    return std::to_string(*root_letter) + (rest.empty() ? std::string() : rest.str());
}

// ---------------------------------------------------------------------------

SpinePlugged growing_tree(std::optional<std::size_t> support) {
    const auto ab = Alphabet::binary();
    const auto swap = SymbolPermutation::reversal(ab);
    return SpinePlugged(
        UPWord::parse("(a)^w", ab), [swap](std::size_t k, Letter) { return mirror(b_tree(k + 1), swap); },
        RankPattern::affine(1, 1), support);
}

RootFamily omega_family() {
    return RootFamily([](std::size_t n) { return b_tree(n); }, RankPattern::affine(1, 0));
}

bool member_plugged(const SpinePlugged &p, const FiniteWord &u) {
    require_same_alphabet(p.alphabet(), u.alphabet());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != p.spine().at(i))
            return member(p.component(i, u[i]), corestrict(u, i + 1));
    return true;
}

bool member_plugged(const RootFamily &p, const RootFamilyWord &u) {
    if (!u.root_letter)
        return true;
    return member(p.component(*u.root_letter), u.rest);
}

namespace {

std::vector<RankResult> component_ranks(std::size_t count, const std::function<const TreeAutomaton &(std::size_t)> &at) {
    std::vector<RankResult> out(count);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i)
        out[i] = rank(at(i));
    return out;
}

void verify_probe(const RankPattern &pattern, const std::vector<RankResult> &computed, std::size_t probe) {
    for (std::size_t n = 0; n < computed.size() && n <= probe; ++n)
        if (computed[n].rank != pattern.at(n))
            throw ProbeMismatch("declared rank " + pattern.at(n).str() + " but computed " + computed[n].rank.str(), n);
}

// Supremum of all pattern values when it is attained, else the strict supremum.
Ordinal pattern_sup(const RankPattern &pattern) {
    Ordinal best = pattern.unbounded() ? Ordinal::omega() : Ordinal::finite(pattern.intercept);
    for (const auto &r : pattern.prefix)
        best = ord_max(best, r);
    return best;
}

} // namespace

Ordinal rank_plugged(const SpinePlugged &p, std::size_t probe) {
    const UPWord &w = p.spine();
    if (p.support()) {
        const auto positions = p.plugged_positions(std::numeric_limits<std::size_t>::max(), *p.support());
        const auto ranks = component_ranks(positions.size(), [&](std::size_t i) -> const TreeAutomaton & {
            return p.component(positions[i].first, positions[i].second);
        });
        verify_probe(p.declared_ranks(), ranks, probe);
        // The spine is isolated beyond the support and dies at the first stage.
        Ordinal result = Ordinal::finite(1);
        for (const auto &r : ranks)
            result = ord_max(result, r.rank);
        return result;
    }

    const std::size_t scan = 64 * (probe + 1) + w.head().size() + w.period().size();
    const auto positions = p.plugged_positions(probe + 1, scan);
    if (positions.size() < probe + 1)
        throw ProbeMismatch("fewer plugged components than the probe requires", positions.size());
    const auto ranks = component_ranks(positions.size(), [&](std::size_t i) -> const TreeAutomaton & {
        return p.component(positions[i].first, positions[i].second);
    });
    verify_probe(p.declared_ranks(), ranks, probe);

    const RankPattern &pattern = p.declared_ranks();
    const bool thin = std::all_of(ranks.begin(), ranks.end(), [](const RankResult &r) { return r.thin; });
    if (!thin)
        return pattern_sup(pattern); // the spine stays in the kernel

    // The spine survives while cofinally many components do, so it dies one
    // stage after the least c with only finitely many ranks above c.
    const Ordinal c = sup_affine(pattern.slope, pattern.intercept);
    Ordinal result = succ(c);
    for (const auto &r : pattern.prefix)
        if (r > c)
            result = ord_max(result, r);
    return result;
}

Ordinal rank_plugged(const RootFamily &p, std::size_t probe) {
    const auto ranks = component_ranks(probe + 1, [&](std::size_t n) -> const TreeAutomaton & { return p.component(n); });
    verify_probe(p.declared_ranks(), ranks, probe);
    return pattern_sup(p.declared_ranks());
}

std::optional<TreeAutomaton> materialize(const SpinePlugged &p) {
    const UPWord &w = p.spine();
    const auto &alphabet = p.alphabet();
    if (p.support()) {
        TreeAutomaton result = pref_chain(w);
        for (std::size_t k = 0; k < *p.support(); ++k)
            for (std::size_t a = 0; a < alphabet->size(); ++a) {
                const auto &comp = p.component(k, static_cast<Letter>(a));
                if (!comp.is_empty() && a != w.at(k)) {
                    auto off = restrict(w, k);
                    off.push_back(static_cast<Letter>(a));
                    result = unite(result, attach(off, comp));
                }
            }
        return result;
    }
    if (!p.constant_schema())
        return std::nullopt;

    AutomatonBuilder b(alphabet);
    const std::size_t h = w.head().size();
    const std::size_t n = h + w.period().size();
    for (std::size_t i = 0; i < n; ++i)
        b.add_state();
    for (std::size_t i = 0; i < n; ++i) {
        b.add_edge(static_cast<State>(i), w.at(i), static_cast<State>(i + 1 < n ? i + 1 : h));
        for (std::size_t a = 0; a < alphabet->size(); ++a) {
            if (a == w.at(i))
                continue;
            const State sub = b.add_tree(p.component(i, static_cast<Letter>(a)));
            if (sub != kNoState)
                b.add_edge(static_cast<State>(i), static_cast<Letter>(a), sub);
        }
    }
    return b.build(0);
}

} // namespace cbtree
