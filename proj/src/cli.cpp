#include "cbtree/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cbtree/analysis.hpp"
#include "cbtree/dsl.hpp"
#include "cbtree/error.hpp"
#include "cbtree/render.hpp"
#include "cbtree/serialize.hpp"
#include "cbtree/suites.hpp"

namespace cbtree {

namespace {

struct Options {
    std::vector<std::string> positionals;
    std::size_t depth = 4;
    std::string format;
    std::uint64_t seed = 0;
    std::size_t count = 200;
    std::size_t max_enum = 16;
    std::size_t probe = kDefaultProbe;
    bool report = false;
    std::string mutate;
};

class UsageError : public Error {
public:
    using Error::Error;
};

const TreeAutomaton &regular(const TreeValue &value, const std::string &command) {
    if (const auto *t = std::get_if<TreeAutomaton>(&value))
        return *t;
    throw RepresentationMismatch(command + " applies to regular trees only");
}

TreeValue load(const std::string &source) {
    if (!source.empty() && source.front() == '@') {
        std::ifstream in(source.substr(1));
        if (!in)
            throw UsageError("cannot read " + source.substr(1));
        std::stringstream buffer;
        buffer << in.rdbuf();
        return import_json(buffer.str());
    }
    return eval(source);
}

FiniteLanguage truncation(const TreeValue &value, std::size_t depth) {
    return std::visit([&](const auto &v) { return truncate(v, depth); }, value);
}

// Branches of a plugged tree: the spine itself, or an off-word followed by a branch of its component.
bool plugged_branch(const SpinePlugged &p, const UPWord &w) {
    if (w == p.spine())
        return true;
    const auto &spine = p.spine();
    const std::size_t bound = w.head().size() + spine.head().size() + w.period().size() * spine.period().size() + 1;
    for (std::size_t k = 0; k < bound; ++k)
        if (w.at(k) != spine.at(k))
            return branch_member(p.component(k, w.at(k)), corestrict(w, k + 1));
    return true;
}

bool root_family_branch(const RootFamily &p, const std::string &text) {
    std::size_t digits = 0;
    while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
    if (digits == 0)
        throw ParseError("branch must start with a root letter", 0);
    const auto n = std::stoull(text.substr(0, digits));
    return branch_member(p.component(n), UPWord::parse(text.substr(digits), p.component_alphabet()));
}

std::string show_tree(const TreeAutomaton &t, const Options &o) {
    if (o.format.empty() || o.format == "json")
        return export_json(t) + "\n";
    const auto l = truncate(t, o.depth);
    return o.format == "dot" ? render_dot(l) : render_ascii(l);
}

int check_laws(const Options &o, std::ostream &out, std::ostream &err) {
    SuiteConfig config;
    config.seed = o.seed;
    config.count = o.count;
    if (!o.mutate.empty())
        config.mutate = o.mutate;
    const auto report = run_all_suites(config);
    for (const auto &r : report.results)
        out << to_json(r) << '\n';
    err << report.results.size() << " law checks, " << report.failures() << " failures\n";
    return report.ok() ? kExitOk : kExitLawFailure;
}

int dispatch(const Options &o, std::ostream &out, std::ostream &err) {
    const auto &pos = o.positionals;
    if (!pos.empty() && pos.front() == "check-laws") {
        if (pos.size() != 1)
            throw UsageError("check-laws takes no argument");
        return check_laws(o, out, err);
    }
    if (pos.size() < 2)
        throw UsageError("expected an expression and a command");
    const std::string &command = pos[1];
    const std::optional<std::string> arg = pos.size() > 2 ? std::optional(pos[2]) : std::nullopt;
    if (pos.size() > 3)
        throw UsageError("too many arguments");
    auto no_arg = [&] {
        if (arg)
            throw UsageError(command + " takes no argument");
    };
    auto need_arg = [&] {
        if (!arg)
            throw UsageError(command + " needs an argument");
        return *arg;
    };
    if (!o.format.empty() && o.format != "ascii" && o.format != "dot" && o.format != "json")
        throw UsageError("unknown format '" + o.format + "'");

    if (command == "check-laws") {
        no_arg();
        return check_laws(o, out, err);
    }
    const TreeValue value = load(pos[0]);

    if (command == "rank") {
        no_arg();
        if (const auto *t = std::get_if<TreeAutomaton>(&value)) {
            const auto r = rank(*t);
            out << r.rank.str() << (r.thin ? " (thin)" : "") << '\n';
        } else if (const auto *p = std::get_if<SpinePlugged>(&value)) {
            out << rank_plugged(*p, o.probe).str() << '\n';
        } else {
            out << rank_plugged(std::get<RootFamily>(value), o.probe).str() << '\n';
        }
    } else if (command == "derive") {
        std::size_t times = 1;
        if (arg) {
            try {
                times = std::stoull(*arg);
            } catch (const std::exception &) {
                throw UsageError("derive count must be a natural number");
            }
        }
        out << show_tree(derive(regular(value, command), times), o);
    } else if (command == "prune") {
        no_arg();
        out << show_tree(prune(regular(value, command)), o);
    } else if (command == "kernel") {
        no_arg();
        out << show_tree(kernel(regular(value, command)), o);
    } else if (command == "classify") {
        no_arg();
        const auto &t = regular(value, command);
        if (o.report)
            for (const auto &r : state_reports(t))
                out << to_json(r) << '\n';
        else
            out << classify_branches(t).str() << '\n';
    } else if (command == "member") {
        const auto text = need_arg();
        bool in = false;
        if (const auto *t = std::get_if<TreeAutomaton>(&value))
            in = member(*t, FiniteWord::parse(text, t->alphabet()));
        else if (const auto *p = std::get_if<SpinePlugged>(&value))
            in = member_plugged(*p, FiniteWord::parse(text, p->alphabet()));
        else {
            const auto &f = std::get<RootFamily>(value);
            in = member_plugged(f, RootFamilyWord::parse(text, f.component_alphabet()));
        }
        out << (in ? "true" : "false") << '\n';
    } else if (command == "branch") {
        const auto text = need_arg();
        bool in = false;
        if (const auto *t = std::get_if<TreeAutomaton>(&value))
            in = branch_member(*t, UPWord::parse(text, t->alphabet()));
        else if (const auto *p = std::get_if<SpinePlugged>(&value))
            in = plugged_branch(*p, UPWord::parse(text, p->alphabet()));
        else
            in = root_family_branch(std::get<RootFamily>(value), text);
        out << (in ? "true" : "false") << '\n';
    } else if (command == "isolated") {
        const auto &t = regular(value, command);
        if (arg) {
            const auto w = UPWord::parse(*arg, t.alphabet());
            if (!branch_member(t, w)) {
                err << "cbtree: " << w.str() << " is not a branch\n";
                return kExitUsage;
            }
            const auto n = isolation_depth(t, w);
            out << (n ? "true (N=" + std::to_string(*n) + ")" : "false") << '\n';
        } else {
            const auto iso = isolated_branches(t, o.max_enum);
            if (!iso.finite) {
                out << "infinite\n";
                for (const auto &f : iso.families)
                    out << "family " << f.str() << '\n';
            }
            for (const auto &w : iso.branches)
                out << w.str() << '\n';
        }
    } else if (command == "render") {
        no_arg();
        const auto l = truncation(value, o.depth);
        if (o.format == "dot")
            out << render_dot(l);
        else if (o.format.empty() || o.format == "ascii") {
            const char *color = std::getenv("CBTREE_COLOR");
            out << render_ascii(l, color && std::string(color) == "1");
        } else
            throw UsageError("render formats are ascii and dot");
    } else if (command == "export-json") {
        no_arg();
        if (const auto *t = std::get_if<TreeAutomaton>(&value)) {
            out << export_json(*t) << '\n';
        } else if (const auto *p = std::get_if<SpinePlugged>(&value)) {
            const auto m = materialize(*p);
            if (!m)
                throw RepresentationMismatch("this plugged tree has no finite automaton");
            out << export_json(*m) << '\n';
        } else {
            throw RepresentationMismatch("root families have no finite automaton");
        }
    } else {
        throw UsageError("unknown command '" + command + "'");
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cantor-Bendixson analysis of regular and plugged trees", "cbtree"};
    Options o;
    app.add_option("args", o.positionals, "<expr-or-@file> <command> [argument]")->required();
    app.add_option("--depth", o.depth, "truncation depth for render");
    app.add_option("--format", o.format, "ascii, dot or json");
    app.add_option("--seed", o.seed, "first check-laws seed");
    app.add_option("--count", o.count, "check-laws instances per suite");
    app.add_option("--max-enum", o.max_enum, "isolated branches listed for infinite sets");
    app.add_option("--probe", o.probe, "last component index checked against the declared ranks");
    app.add_flag("--report", o.report, "classify: per-state JSON lines");
    app.add_option("--mutate", o.mutate)->group("");
    app.footer("commands: rank derive [k] prune kernel classify member <u> branch <w> isolated [w]\n"
               "          render export-json check-laws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    try {
        return dispatch(o, out, err);
    } catch (const ProbeMismatch &e) {
        err << "cbtree: probe mismatch: " << e.what() << '\n';
        return kExitProbeMismatch;
    } catch (const std::exception &e) {
        err << "cbtree: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace cbtree
