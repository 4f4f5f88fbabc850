#include "cbtree/serialize.hpp"

#include <json.hpp>

#include "cbtree/error.hpp"

namespace cbtree {

using nlohmann::ordered_json;

std::string export_json(const TreeAutomaton &tree) {
    const TreeAutomaton t = minimize(tree);
    ordered_json j;
    j["alphabet"] = t.alphabet()->symbols();
    j["states"] = t.num_states();
    if (t.root())
        j["root"] = *t.root();
    auto edges = ordered_json::array();
    for (std::size_t q = 0; q < t.num_states(); ++q)
        for (std::size_t a = 0; a < t.alphabet()->size(); ++a) {
            const State r = t.next(static_cast<State>(q), static_cast<Letter>(a));
            if (r != kNoState)
                edges.push_back(ordered_json::array({q, t.alphabet()->symbol(static_cast<Letter>(a)), r}));
        }
    j["edges"] = std::move(edges);
    return j.dump();
}

TreeAutomaton import_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw ParseError("malformed JSON", e.byte);
    }
    try {
        const auto alphabet = Alphabet::make(j.at("alphabet").get<std::vector<std::string>>());
        const auto states = j.at("states").get<std::size_t>();
        std::optional<State> root;
        if (j.contains("root")) {
            root = j["root"].get<State>();
            if (*root < 0 || static_cast<std::size_t>(*root) >= states)
                throw ParseError("root out of range", 0);
        }
        std::vector<State> delta(states * alphabet->size(), kNoState);
        for (const auto &e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw ParseError("edge must be [src, symbol, dst]", 0);
            const auto src = e[0].get<State>();
            const auto dst = e[2].get<State>();
            const auto letter = alphabet->find(e[1].get<std::string>());
            if (!letter)
                throw ParseError("unknown symbol '" + e[1].get<std::string>() + "'", 0);
            if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= states ||
                static_cast<std::size_t>(dst) >= states)
                throw ParseError("edge state out of range", 0);
            State &slot = delta[static_cast<std::size_t>(src) * alphabet->size() + *letter];
            if (slot != kNoState && slot != dst)
                throw ParseError("nondeterministic edge", 0);
            slot = dst;
        }
        return TreeAutomaton(alphabet, states, root, std::move(delta));
    } catch (const ordered_json::exception &e) {
        throw ParseError(std::string("bad automaton JSON: ") + e.what(), 0);
    }
}

std::string to_json(const StateReport &report) {
    ordered_json j;
    j["state"] = report.state;
    j["live"] = report.live;
    j["class"] = report.branch_class.str();
    j["kernel"] = report.in_kernel;
    if (report.dies_at)
        j["dies_at"] = *report.dies_at;
    else
        j["dies_at"] = "kernel";
    return j.dump();
}

std::string to_json(const LawResult &result) {
    ordered_json j;
    j["law"] = result.law;
    j["seed"] = result.seed;
    j["pass"] = result.pass;
    j["witness"] = result.witness ? ordered_json(*result.witness) : ordered_json(nullptr);
    return j.dump();
}

} // namespace cbtree
