#include <doctest.h>

#include "cbtree/analysis.hpp"
#include "cbtree/error.hpp"
#include "cbtree/oracle.hpp"
#include "cbtree/plugged.hpp"

using namespace cbtree;

namespace {
const AlphabetRef ab = Alphabet::binary();
FiniteWord W(const char *s) { return FiniteWord::parse(s, ab); }
UPWord U(const char *s) { return UPWord::parse(s, ab); }
} // namespace

TEST_CASE("rank patterns") {
    const auto p = RankPattern::affine(1, 1);
    CHECK(p.at(0) == Ordinal::finite(1));
    CHECK(p.at(5) == Ordinal::finite(6));
    CHECK(p.str() == "affine(1,1)");
    const RankPattern q{{Ordinal::finite(2), Ordinal::omega()}, 1, 0};
    CHECK(q.at(1) == Ordinal::omega());
    CHECK(q.at(4) == Ordinal::finite(4));
    CHECK(q.str() == "explicit(2,w,affine(1,0))");
}

TEST_CASE("growing tree components") {
    const auto g = growing_tree();
    CHECK(g.component(0, 0).is_empty()); // on the spine
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(rank(g.component(k, 1)).rank == Ordinal::finite(k + 1));
    CHECK(member_plugged(g, W("aaaaa")));
    CHECK(member_plugged(g, W("aab")));
    CHECK_FALSE(member_plugged(g, W("ba")));
    CHECK(member_plugged(g, W("abab")) == member(mirror(b_tree(2), SymbolPermutation::reversal(ab)), W("ab")));
}

TEST_CASE("plugged ranks") {
    CHECK(rank_plugged(growing_tree()) == succ(Ordinal::omega()));
    CHECK(rank_plugged(omega_family()) == Ordinal::omega());
    for (std::size_t k = 0; k <= 6; ++k) {
        const auto gk = growing_tree(k + 1);
        CHECK(rank_plugged(gk) == Ordinal::finite(k + 1));
        const auto m = materialize(gk);
        REQUIRE(m);
        CHECK(rank(*m).rank == Ordinal::finite(k + 1));
    }
}

TEST_CASE("comb as a plugged tree") {
    const SpinePlugged c(U("(a)^w"), [](std::size_t, Letter) { return pref_chain(U("(b)^w")); },
                         RankPattern::affine(0, 1), std::nullopt, true);
    CHECK(rank_plugged(c) == Ordinal::finite(2));
    const auto m = materialize(c);
    REQUIRE(m);
    CHECK(equal(*m, comb()));
    CHECK(rank(*m).rank == rank_plugged(c));
}

TEST_CASE("non-thin components keep the spine") {
    const SpinePlugged p(U("(a)^w"), [](std::size_t, Letter) { return full_tree(ab); }, RankPattern::affine(0, 0),
                         std::nullopt, true);
    CHECK(rank_plugged(p) == Ordinal());
    CHECK(rank(*materialize(p)).rank == Ordinal());
}

TEST_CASE("probe mismatch") {
    const SpinePlugged bad(U("(a)^w"), [](std::size_t k, Letter) { return b_tree(k + 1); },
                           RankPattern::affine(1, 2));
    CHECK_THROWS_AS(rank_plugged(bad), ProbeMismatch);
    try {
        rank_plugged(bad, 3);
    } catch (const ProbeMismatch &e) {
        CHECK(e.index() == 0);
    }
    const RootFamily wrong([](std::size_t n) { return b_tree(n); }, RankPattern::affine(1, 0));
    CHECK_NOTHROW(rank_plugged(wrong, 8));
}

TEST_CASE("plugged truncations") {
    CHECK(truncate(growing_tree(), 2) == FiniteLanguage(ab, {"eps", "a", "b", "aa", "ab", "bb"}));
    const auto r = truncate(omega_family(), 2);
    CHECK(r.contains(FiniteWord::parse("1a", r.alphabet())));
    CHECK(r.contains(FiniteWord::parse("2b", r.alphabet())));
    CHECK_FALSE(r.contains(FiniteWord::parse("0", r.alphabet())));
    CHECK(member_plugged(omega_family(), RootFamilyWord::parse("3abb", ab)));
    CHECK_FALSE(member_plugged(omega_family(), RootFamilyWord::parse("0", ab)));
    CHECK(RootFamilyWord::parse("3abb", ab).str() == "3abb");
}

TEST_CASE("materialize needs a regular instance") {
    CHECK_FALSE(materialize(growing_tree()));
}

TEST_CASE("concurrent component generation") {
    const auto g = growing_tree();
    const auto first = rank_plugged(g);
    CHECK(rank_plugged(g) == first);
}
