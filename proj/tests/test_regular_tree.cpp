#include <doctest.h>

#include "cbtree/error.hpp"
#include "cbtree/oracle.hpp"
#include "cbtree/regular_tree.hpp"

using namespace cbtree;

namespace {
const AlphabetRef ab = Alphabet::binary();
FiniteWord W(const char *s) { return FiniteWord::parse(s, ab); }
UPWord U(const char *s) { return UPWord::parse(s, ab); }
FiniteLanguage L(std::initializer_list<std::string_view> words) { return FiniteLanguage(ab, words); }
} // namespace

TEST_CASE("construction trims and renumbers") {
    // state 2 is unreachable, state 1 is reached from 0 by b
    const TreeAutomaton t(ab, 3, 0, {kNoState, 1, kNoState, kNoState, 0, 0});
    CHECK(t.num_states() == 2);
    CHECK(t.num_edges() == 1);
    CHECK(truncate(t, 3) == L({"eps", "b"}));
    CHECK_THROWS(TreeAutomaton(ab, 1, 0, {0}));
    CHECK_THROWS(TreeAutomaton(ab, 1, 0, {0, 3}));
    CHECK(TreeAutomaton(ab, 2, std::nullopt, {0, 1, 1, 0}).is_empty());
}

TEST_CASE("builders") {
    CHECK(truncate(empty_tree(ab), 5).empty());
    CHECK(truncate(epsilon_tree(ab), 5) == L({"eps"}));
    CHECK(truncate(full_tree(ab), 1) == L({"eps", "a", "b"}));
    CHECK(truncate(hat(), 2) == L({"eps", "a", "b", "aa", "bb"}));
    CHECK(truncate(b_tree(2), 2) == L({"eps", "a", "b", "aa", "ab", "bb"}));
    CHECK(b_tree(0).is_empty());
    CHECK(b_tree(2).num_states() == 2);
    CHECK(truncate(pref_word(W("ab")), 5) == L({"eps", "a", "ab"}));
    CHECK(truncate(pref_chain(U("a(b)^w")), 3) == L({"eps", "a", "ab", "abb"}));
    CHECK(truncate(comb(), 2) == L({"eps", "a", "b", "aa", "ab", "bb"}));
    CHECK_THROWS_AS(b_tree(2, Alphabet::make({"a", "b", "c"})), Error);
}

TEST_CASE("membership") {
    CHECK(member(b_tree(2), W("aabb")));
    CHECK_FALSE(member(b_tree(2), W("aba")));
    CHECK_FALSE(member(empty_tree(ab), W("eps")));
    CHECK(branch_member(hat(), U("(a)^w")));
    CHECK_FALSE(branch_member(hat(), U("a(b)^w")));
    CHECK(branch_member(b_tree(2), U("aaa(b)^w")));
    CHECK_FALSE(branch_member(b_tree(2), U("(ab)^w")));
    CHECK(branch_member(full_tree(ab), U("(ab)^w")));
}

TEST_CASE("quotient and attach") {
    CHECK(equal(quotient(b_tree(2), W("ab")), pref_chain(U("(b)^w"))));
    CHECK(quotient(hat(), W("ab")).is_empty());
    CHECK(truncate(attach(W("ab"), hat()), 3) == L({"eps", "a", "ab", "aba", "abb"}));
    CHECK(truncate(attach(W("ab"), empty_tree(ab)), 5) == L({"eps", "a", "ab"}));
    CHECK(equal(quotient(attach(W("ba"), comb()), W("ba")), comb()));
}

TEST_CASE("root construct and decompose") {
    const auto f = root_decompose(hat());
    CHECK(equal(f[0], pref_chain(U("(a)^w"))));
    CHECK(equal(f[1], pref_chain(U("(b)^w"))));
    CHECK(equal(root_construct(f), hat()));
    CHECK_THROWS_AS(root_decompose(empty_tree(ab)), EmptyTreeError);
    CHECK(equal(root_construct({ab, {empty_tree(ab), empty_tree(ab)}}), epsilon_tree(ab)));
}

TEST_CASE("union, intersection, mirror") {
    const auto swap = SymbolPermutation::reversal(ab);
    CHECK(equal(mirror(hat(), swap), hat()));
    CHECK(truncate(mirror(b_tree(2), swap), 2) == L({"eps", "a", "b", "ba", "bb", "aa"}));
    CHECK(equal(unite(pref_chain(U("(a)^w")), pref_chain(U("(b)^w"))), hat()));
    CHECK(equal(intersect(hat(), b_tree(2)), hat()));
    CHECK(equal(intersect(hat(), empty_tree(ab)), empty_tree(ab)));
    CHECK(equal(unite(hat(), empty_tree(ab)), hat()));
    CHECK_THROWS_AS(unite(hat(), full_tree(Alphabet::make({"a", "b", "c"}))), AlphabetMismatch);
}

TEST_CASE("equality witness is shortest") {
    const auto r = equal(b_tree(2), hat());
    CHECK_FALSE(r);
    REQUIRE(r.witness);
    CHECK(*r.witness == W("ab"));
    CHECK(equal(b_tree(3), b_tree(3)));
    const auto e = equal(empty_tree(ab), epsilon_tree(ab));
    REQUIRE(e.witness);
    CHECK(e.witness->empty());
}

TEST_CASE("minimize") {
    // a^* written with two alternating states
    const TreeAutomaton t(ab, 2, 0, {1, kNoState, 0, kNoState});
    CHECK(t.num_states() == 2);
    CHECK(minimize(t).num_states() == 1);
    CHECK(equal(minimize(t), t));
    CHECK(minimize(unite(hat(), hat())).num_states() == 3);
}

TEST_CASE("restrict_states") {
    std::vector<State> image;
    const auto t = restrict_states(hat(), {true, true, false}, &image);
    CHECK(equal(t, pref_chain(U("(a)^w"))));
    CHECK(image[2] == kNoState);
}

TEST_CASE("trie of a finite language") {
    const auto l = L({"ab", "b"});
    CHECK(truncate(trie(l), 9) == pref_lang(l));
    CHECK(trie(FiniteLanguage(ab)).is_empty());
}
