// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "cbtree/analysis.hpp"
#include "cbtree/dsl.hpp"
#include "cbtree/plugged.hpp"
#include "cbtree/serialize.hpp"
#include "cbtree/suites.hpp"

using namespace cbtree;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Shell {
    int code;
    std::string out;
};

Shell shell(const std::string &args) {
    const std::string cmd = std::string(CBTREE_BINARY) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void report_suite(Outcome &o, const SuiteReport &r, const std::string &what) {
    for (const auto &x : r.results)
        o.require(x.pass, what + ": " + to_json(x));
}

Outcome a1() {
    Outcome o;
    for (std::size_t n = 0; n <= 8; ++n) {
        const auto r = rank(b_tree(n));
        o.require(r.rank == Ordinal::finite(n) && r.thin, "rank(B(" + std::to_string(n) + ")) = " + r.rank.str());
    }
    for (std::size_t n = 0; n <= 7; ++n)
        o.require(equal(derive(b_tree(n + 1)), b_tree(n)).equal, "derive(B(" + std::to_string(n + 1) + "))");
    return o;
}

Outcome a2() {
    Outcome o;
    const auto h = hat();
    const auto ab = h.alphabet();
    o.require(classify_branches(h) == Cardinality::finite(2), "classify");
    const auto iso = isolated_branches(h);
    o.require(iso.finite && iso.branches ==
                                std::vector<UPWord>{UPWord::parse("(a)^w", ab), UPWord::parse("(b)^w", ab)},
              "isolated branches");
    o.require(rank(h).rank == Ordinal::finite(1), "rank");
    o.require(derive(h).is_empty(), "derive");
    return o;
}

Outcome a3() {
    Outcome o;
    o.require(rank_plugged(growing_tree(), 12) == succ(Ordinal::omega()), "rank_plugged(G)");
    for (std::size_t k = 0; k <= 6; ++k) {
        const auto gk = materialize(growing_tree(k + 1));
        o.require(gk && rank(*gk).rank == Ordinal::finite(k + 1), "rank(G_" + std::to_string(k) + ")");
    }
    o.require(rank_plugged(omega_family(), 12) == Ordinal::omega(), "rank_plugged(rootfam B(n))");
    return o;
}

Outcome a4() {
    Outcome o;
    SuiteConfig words;
    words.count = 500;
    report_suite(o, run_word_suite(words), "words");
    SuiteConfig trees;
    trees.count = 200;
    report_suite(o, run_tree_suite(trees), "trees");
    return o;
}

Outcome a5() {
    Outcome o;
    SuiteConfig config;
    config.count = 200;
    report_suite(o, run_derivative_suite(config), "derivative");
    return o;
}

Outcome a6() {
    Outcome o;
    SuiteConfig config;
    config.count = 200;
    report_suite(o, run_prune_suite(config), "prune");
    return o;
}

Outcome a7() {
    Outcome o;
    const std::string dir = CBTREE_GOLDEN_DIR;
    const std::pair<const char *, const char *> trees[] = {{"hat", "hat"}, {"'B(2)'", "b2"}, {"G", "g"}};
    for (const auto &[expr, name] : trees) {
        const auto ascii = shell(std::string(expr) + " render --depth 4");
        o.require(ascii.code == 0 && ascii.out == slurp(dir + "/" + name + "_ascii_d4.txt"), std::string(name) + " ascii");
        const auto dot = shell(std::string(expr) + " render --format dot --depth 4");
        o.require(dot.code == 0 && dot.out == slurp(dir + "/" + name + "_dot_d4.dot"), std::string(name) + " dot");
    }

    const std::string path = "acceptance_roundtrip.json";
    for (const char *expr : {"hat", "'B(4)'", "comb", "empty", "'union(ab.full, pref(b(ab)^w))'"}) {
        const auto exported = shell(std::string(expr) + " export-json");
        std::ofstream(path) << exported.out;
        const auto again = shell("@" + path + " export-json");
        o.require(exported.code == 0 && again.code == 0 && again.out == exported.out,
                  std::string("round trip ") + expr);
    }
    std::remove(path.c_str());

    o.require(shell("hat rank").code == 0, "exit 0");
    o.require(shell("check-laws --count 2 --mutate prop1.2").code == 1, "exit 1");
    o.require(shell("'B(' rank").code == 2, "exit 2 (parse)");
    o.require(shell("'mirror(G)' rank").code == 2, "exit 2 (representation)");
    o.require(shell("'plug(spine=(a)^w, family=B(k+1), ranks=affine(1,2))' rank").code == 3, "exit 3");
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char *id;
        const char *name;
        double limit_seconds; // 0: untimed
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"A1", "rank ladder B(n)", 1, a1},
        {"A2", "hat", 0, a2},
        {"A3", "plugged ordinals", 5, a3},
        {"A4", "algebra suites", 30, a4},
        {"A5", "derivative/classification oracle", 60, a5},
        {"A6", "pruning bijection", 0, a6},
        {"A7", "CLI contract", 0, a7},
    };
    bool all = true;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0)
            o.require(seconds < c.limit_seconds, "took longer than " + std::to_string(c.limit_seconds) + "s");
        all = all && o.pass;
        std::printf("%s %s %s (%.2fs)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, seconds,
                    o.pass ? "" : " ", o.detail.c_str());
    }
    return all ? 0 : 1;
}
