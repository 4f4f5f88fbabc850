#include <doctest.h>

#include "cbtree/analysis.hpp"
#include "cbtree/error.hpp"
#include "cbtree/oracle.hpp"

using namespace cbtree;

namespace {
const AlphabetRef ab = Alphabet::binary();
FiniteWord W(const char *s) { return FiniteWord::parse(s, ab); }
UPWord U(const char *s) { return UPWord::parse(s, ab); }
} // namespace

TEST_CASE("cardinality arithmetic") {
    CHECK(Cardinality::finite(2) + Cardinality::finite(3) == Cardinality::finite(5));
    CHECK(Cardinality::finite(2) + Cardinality::aleph0() == Cardinality::aleph0());
    CHECK(Cardinality::aleph0() + Cardinality::continuum() == Cardinality::continuum());
    CHECK(Cardinality::finite(7) < Cardinality::aleph0());
    CHECK(Cardinality::aleph0().str() == "aleph0");
    CHECK(Cardinality::finite(1).str() == "finite:1");
    CHECK_FALSE(Cardinality::finite(1).is_plural());
}

TEST_CASE("prune") {
    CHECK(prune(pref_word(W("ab"))).is_empty());
    CHECK(is_pruned(hat()));
    CHECK(is_pruned(full_tree(ab)));
    CHECK_FALSE(is_pruned(pref_word(W("ab"))));
    CHECK(is_pruned(empty_tree(ab)));
    const auto decorated = unite(hat(), pref_word(W("abab")));
    CHECK(equal(prune(decorated), hat()));
}

TEST_CASE("classification") {
    CHECK(classify_branches(hat()) == Cardinality::finite(2));
    CHECK(classify_branches(b_tree(2)) == Cardinality::aleph0());
    CHECK(classify_branches(full_tree(ab)) == Cardinality::continuum());
    CHECK(classify_branches(empty_tree(ab)) == Cardinality::finite(0));
    CHECK(classify_branches(pref_word(W("ab"))) == Cardinality::finite(0));
    CHECK(classify_branches(comb()) == Cardinality::aleph0());
    CHECK(classify_branches(b_tree(1)) == Cardinality::finite(1));
    // a cycle through one state with two letters back into it
    CHECK(classify_branches(TreeAutomaton(ab, 1, 0, {0, 0})) == Cardinality::continuum());
    // two distinct states in one SCC, each with a single inner edge: aleph0 via exit
    CHECK(classify_branches(TreeAutomaton(ab, 3, 0, {1, 2, 0, kNoState, kNoState, 2})) == Cardinality::aleph0());
}

TEST_CASE("isolation") {
    CHECK(is_isolated(hat(), U("(a)^w")));
    CHECK(isolation_depth(hat(), U("(a)^w")) == 1u);
    CHECK_FALSE(is_isolated(full_tree(ab), U("(ab)^w")));
    CHECK_FALSE(is_isolated(b_tree(2), U("(a)^w")));
    CHECK(is_isolated(b_tree(2), U("aa(b)^w")));
    CHECK(isolation_depth(b_tree(2), U("aa(b)^w")) == 3u);
    CHECK(isolation_depth(b_tree(1), U("(a)^w")) == 0u);
    CHECK_THROWS_AS(is_isolated(hat(), U("a(b)^w")), NotABranch);
}

TEST_CASE("isolated branches") {
    const auto h = isolated_branches(hat());
    CHECK(h.finite);
    REQUIRE(h.branches.size() == 2);
    CHECK(h.branches[0] == U("(a)^w"));
    CHECK(h.branches[1] == U("(b)^w"));

    CHECK(isolated_branches(full_tree(ab)).branches.empty());

    const auto b2 = isolated_branches(b_tree(2), 4);
    CHECK_FALSE(b2.finite);
    REQUIRE(b2.families.size() == 1);
    CHECK(b2.families[0].str() == "{a*}(b)^w");
    REQUIRE(b2.branches.size() == 4);
    CHECK(b2.branches[0] == U("(b)^w"));
    CHECK(b2.branches[3] == U("aaa(b)^w"));
}

TEST_CASE("derivative and kernel") {
    CHECK(derive(hat()).is_empty());
    for (std::size_t n = 0; n < 8; ++n)
        CHECK(equal(derive(b_tree(n + 1)), b_tree(n)));
    CHECK(equal(derive(full_tree(ab)), full_tree(ab)));
    CHECK(equal(derive(comb()), pref_chain(U("(a)^w"))));
    CHECK(derive(b_tree(5), 5).is_empty());
    CHECK(equal(derive(b_tree(5), 0), b_tree(5)));
    CHECK(kernel(b_tree(4)).is_empty());
    CHECK(equal(kernel(full_tree(ab)), full_tree(ab)));

    // Pref(a)∪aΣ* under a, B(2) under b: only the full part survives
    const auto t = root_construct({ab, {full_tree(ab), b_tree(2)}});
    CHECK(equal(kernel(t), attach(W("a"), full_tree(ab))));
}

TEST_CASE("rank") {
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto r = rank(b_tree(n));
        CHECK(r.rank == Ordinal::finite(n));
        CHECK(r.thin);
    }
    CHECK(rank(hat()).rank == Ordinal::finite(1));
    CHECK(rank(full_tree(ab)).rank == Ordinal());
    CHECK_FALSE(rank(full_tree(ab)).thin);
    CHECK(rank(comb()).rank == Ordinal::finite(2));
    CHECK(rank(empty_tree(ab)).rank == Ordinal());
}

TEST_CASE("derivative sequence") {
    CHECK(derivative_sequence(b_tree(3)).size() == 4);
    CHECK(derivative_sequence(b_tree(3)).back().is_empty());
    CHECK(derivative_sequence(full_tree(ab)).size() == 1);
    const auto c = derivative_sequence(comb());
    REQUIRE(c.size() == 3);
    CHECK(equal(c[0], comb()));
    CHECK(equal(c[1], pref_chain(U("(a)^w"))));
    CHECK(c[2].is_empty());
}

TEST_CASE("state reports") {
    const auto reports = state_reports(b_tree(2));
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].branch_class == Cardinality::aleph0());
    CHECK(reports[0].dies_at == 2u);
    CHECK(reports[1].dies_at == 1u);
    const auto full = state_reports(full_tree(ab));
    CHECK(full[0].in_kernel);
    CHECK_FALSE(full[0].dies_at);
}

TEST_CASE("analysis agrees with the cone oracle on random trees") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto t = random_tree(seed, 5, ab);
        const ConeOracle oracle(t);
        const BranchAnalysis analysis(t);
        for (std::size_t q = 0; q < t.num_states(); ++q) {
            const auto cls = analysis.state_class(static_cast<State>(q));
            CHECK(oracle.double_loop_below(static_cast<State>(q)) == (cls == Cardinality::continuum()));
            if (cls.is_finite())
                CHECK(oracle.live_width(static_cast<State>(q), 2 * t.num_states()) == cls.count);
        }
    }
}
