#include <doctest.h>

#include "cbtree/serialize.hpp"
#include "cbtree/suites.hpp"

using namespace cbtree;

namespace {
const AlphabetRef ab = Alphabet::binary();
FiniteWord W(const char *s) { return FiniteWord::parse(s, ab); }

bool all_pass(const std::vector<LawResult> &results) {
    for (const auto &r : results)
        if (!r.pass) {
            MESSAGE(to_json(r));
            return false;
        }
    return !results.empty();
}
} // namespace

TEST_CASE("word laws on a fixed instance") {
    WordInstance inst{W("a"), W("b"), FiniteLanguage(ab, {"eps", "a"}), FiniteLanguage(ab, {"b"}),
                      FiniteLanguage(ab, {"eps", "a", "bb"})};
    CHECK(all_pass(law_suite_words(inst, 0)));
    inst.u = W("eps");
    CHECK(all_pass(law_suite_words(inst, 0)));
}

TEST_CASE("pref.4 is skipped for empty M") {
    WordInstance inst{W("a"), W("b"), FiniteLanguage(ab, {"a"}), FiniteLanguage(ab), FiniteLanguage(ab, {"a"})};
    for (const auto &r : law_suite_words(inst, 0))
        CHECK(r.law != "pref.4");
}

TEST_CASE("mutation is detected with a witness") {
    const auto inst = make_word_instance(7);
    const auto results = law_suite_words(inst, 7, std::string("prop1.3"));
    bool found = false;
    for (const auto &r : results)
        if (r.law == "prop1.3") {
            found = true;
            CHECK_FALSE(r.pass);
            CHECK(r.witness);
        } else {
            CHECK(r.pass);
        }
    CHECK(found);
}

TEST_CASE("tree laws on hat and B(3)") {
    auto inst = make_tree_instance(3);
    inst.tree = hat();
    inst.other = b_tree(3);
    inst.u = W("ab");
    inst.v = W("b");
    inst.branch = UPWord::parse("(a)^w", ab);
    inst.family = {hat(), b_tree(1), epsilon_tree(ab), full_tree(ab)};
    inst.samples = {UPWord::parse("(a)^w", ab), UPWord::parse("b(a)^w", ab), UPWord::parse("(ab)^w", ab)};
    inst.permutation = SymbolPermutation::reversal(ab);
    inst.depth = 6;
    CHECK(all_pass(law_suite_trees(inst, 0)));
    CHECK(all_pass(law_suite_derivative(inst, 0)));
    CHECK(all_pass(law_suite_prune(inst, 0)));

    inst.tree = b_tree(3);
    inst.other = hat();
    inst.depth = 8;
    CHECK(all_pass(law_suite_trees(inst, 0)));
    CHECK(all_pass(law_suite_derivative(inst, 0)));
}

TEST_CASE("instances are reproducible") {
    const auto a = make_tree_instance(11);
    const auto b = make_tree_instance(11);
    CHECK(equal(a.tree, b.tree));
    CHECK(a.samples == b.samples);
    CHECK(a.depth == b.depth);
}

TEST_CASE("random suites pass") {
    SuiteConfig config;
    config.count = 30;
    const auto report = run_all_suites(config);
    CHECK(report.failures() == 0);
}

TEST_CASE("parallel report equals the serial reference") {
    SuiteConfig config;
    config.seed = 100;
    config.count = 25;
    config.execution = Execution::Serial;
    const auto serial = run_all_suites(config);
    config.execution = Execution::Parallel;
    const auto parallel = run_all_suites(config);
    REQUIRE(serial.results.size() == parallel.results.size());
    for (std::size_t i = 0; i < serial.results.size(); ++i)
        CHECK(to_json(serial.results[i]) == to_json(parallel.results[i]));
}

TEST_CASE("law result JSON") {
    CHECK(to_json(LawResult{"prop1.3", 4, true, std::nullopt}) ==
          R"({"law":"prop1.3","seed":4,"pass":true,"witness":null})");
    CHECK(to_json(LawResult{"pref.1", 0, false, "ab"}) == R"({"law":"pref.1","seed":0,"pass":false,"witness":"ab"})");
}
