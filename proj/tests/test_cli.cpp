#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cbtree/cli.hpp"
#include "cbtree/dsl.hpp"
#include "cbtree/error.hpp"
#include "cbtree/regular_tree.hpp"
#include "cbtree/serialize.hpp"

using namespace cbtree;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "cbtree");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("documented examples") {
    CHECK(run({"B(4)", "rank"}).out == "4 (thin)\n");
    CHECK(run({"G", "rank"}).out == "w+1\n");
    CHECK(run({"hat", "classify"}).out == "finite:2\n");
    CHECK(run({"full", "rank"}).out == "0\n");
    CHECK(run({"rootfam(family=B(n), ranks=affine(1,0))", "rank"}).out == "w\n");
    CHECK(run({"hat", "isolated"}).out == "(a)^w\n(b)^w\n");
    CHECK(run({"B(2)", "isolated", "--max-enum", "2"}).out == "infinite\nfamily {a*}(b)^w\n(b)^w\na(b)^w\n");
    CHECK(run({"hat", "isolated", "(a)^w"}).out == "true (N=1)\n");
    CHECK(run({"B(2)", "member", "aab"}).out == "true\n");
    CHECK(run({"B(2)", "branch", "(ab)^w"}).out == "false\n");
    CHECK(run({"G", "member", "ba"}).out == "false\n");
    CHECK(run({"G", "branch", "(a)^w"}).out == "true\n");
    CHECK(run({"rootfam(family=B(n), ranks=affine(1,0))", "branch", "2a(b)^w"}).out == "true\n");
    CHECK(run({"empty", "render", "--depth", "5"}).out == "(empty)\n");
    CHECK(run({"B(3)", "derive", "2", "--format", "json"}).out == export_json(b_tree(1)) + "\n");
}

TEST_CASE("classify report lines") {
    const auto r = run({"B(2)", "classify", "--report"});
    CHECK(r.out == "{\"state\":0,\"live\":true,\"class\":\"aleph0\",\"kernel\":false,\"dies_at\":2}\n"
                   "{\"state\":1,\"live\":true,\"class\":\"finite:1\",\"kernel\":false,\"dies_at\":1}\n");
    CHECK(run({"full", "classify", "--report"}).out ==
          "{\"state\":0,\"live\":true,\"class\":\"continuum\",\"kernel\":true,\"dies_at\":\"kernel\"}\n");
}

TEST_CASE("golden renderings") {
    const std::string dir = CBTREE_GOLDEN_DIR;
    const std::pair<const char *, const char *> trees[] = {{"hat", "hat"}, {"B(2)", "b2"}, {"G", "g"}};
    for (const auto &[expr, name] : trees) {
        CHECK(run({expr, "render", "--depth", "4"}).out == slurp(dir + "/" + name + "_ascii_d4.txt"));
        CHECK(run({expr, "render", "--format", "dot", "--depth", "4"}).out == slurp(dir + "/" + name + "_dot_d4.dot"));
    }
    const auto dot = run({"B(2)", "render", "--format", "dot", "--depth", "2"}).out;
    CHECK(std::count(dot.begin(), dot.end(), '>') == 5);
}

TEST_CASE("json export and import round trip") {
    CHECK(run({"hat", "export-json"}).out ==
          "{\"alphabet\":[\"a\",\"b\"],\"states\":3,\"root\":0,\"edges\":[[0,\"a\",1],[0,\"b\",2],[1,\"a\",1],[2,\"b\",2]]}\n");
    CHECK(run({"empty", "export-json"}).out == "{\"alphabet\":[\"a\",\"b\"],\"states\":0,\"edges\":[]}\n");
    const auto path = (std::filesystem::temp_directory_path() / "cbtree_roundtrip.json").string();
    for (const char *expr : {"hat", "B(5)", "comb", "empty", "union(ab.full, pref(b(ab)^w))", "alphabet {x,y,z} full"}) {
        const auto exported = run({expr, "export-json"}).out;
        std::ofstream(path) << exported;
        CHECK(run({"@" + path, "export-json"}).out == exported);
        CHECK(equal(import_json(exported), std::get<TreeAutomaton>(eval(expr))));
    }
    std::filesystem::remove(path);
    CHECK(run({"plug(spine=(a)^w, family=pref((b)^w), ranks=affine(0,1))", "export-json"}).out ==
          run({"comb", "export-json"}).out);
}

TEST_CASE("import validation") {
    CHECK_THROWS_AS(import_json("{"), ParseError);
    CHECK_THROWS_AS(import_json(R"({"alphabet":["a"],"states":1,"root":2,"edges":[]})"), ParseError);
    CHECK_THROWS_AS(import_json(R"({"alphabet":["a"],"states":1,"root":0,"edges":[[0,"b",0]]})"), ParseError);
    CHECK_THROWS_AS(import_json(R"({"alphabet":["a"],"states":1,"root":0,"edges":[[0,"a",0],[0,"a",1]]})"),
                    ParseError);
    CHECK_THROWS_AS(import_json(R"({"states":1})"), ParseError);
}

TEST_CASE("exit codes") {
    CHECK(run({"hat", "rank"}).code == kExitOk);
    CHECK(run({"check-laws", "--count", "3"}).code == kExitOk);
    CHECK(run({"check-laws", "--count", "3", "--mutate", "prop1.1"}).code == kExitLawFailure);
    CHECK(run({"B(", "rank"}).code == kExitUsage);
    CHECK(run({"hat", "frobnicate"}).code == kExitUsage);
    CHECK(run({"hat"}).code == kExitUsage);
    CHECK(run({"mirror(G)", "rank"}).code == kExitUsage);
    CHECK(run({"G", "derive"}).code == kExitUsage);
    CHECK(run({"hat", "rank", "--depth", "x"}).code == kExitUsage);
    CHECK(run({"@/nonexistent.json", "rank"}).code == kExitUsage);
    CHECK(run({"plug(spine=(a)^w, family=B(k+1), ranks=affine(1,2))", "rank"}).code == kExitProbeMismatch);
    const auto e = run({"hat", "member", "ac"});
    CHECK(e.code == kExitUsage);
    CHECK(e.err.rfind("cbtree: ", 0) == 0);
}

TEST_CASE("check-laws output is deterministic") {
    const auto a = run({"check-laws", "--seed", "5", "--count", "4"});
    const auto b = run({"check-laws", "--seed", "5", "--count", "4"});
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"law\":\"prop1.1\",\"seed\":5,\"pass\":true,\"witness\":null") != std::string::npos);
}
