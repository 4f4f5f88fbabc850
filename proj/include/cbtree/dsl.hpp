#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cbtree/plugged.hpp"
#include "cbtree/regular_tree.hpp"

namespace cbtree {

/// slope·var + intercept; `var` is empty for constants.
struct NatExpr {
    std::uint64_t slope = 0;
    std::uint64_t intercept = 0;
    std::string var;

    static NatExpr constant(std::uint64_t n) { return {0, n, {}}; }
    std::string str() const;

    friend bool operator==(const NatExpr &, const NatExpr &) = default;
};

struct TreeExpr {
    enum class Kind {
        Empty, Epsilon, Full, Hat, Comb, Growing, BTree, Pref, Attach, Quot, Root,
        Mirror, Union, Inter, Prune, Derive, Kernel, Plug, RootFam
    };

    Kind kind = Kind::Empty;
    std::string word;                 // Pref: up word text; Attach, Quot: finite word; Plug: spine
    NatExpr nat;                      // BTree size, Derive count
    bool has_nat = false;             // derive(e) vs derive(e, n)
    std::vector<std::string> symbols; // Root labels, parallel to args
    std::vector<TreeExpr> args;
    RankPattern ranks;                // Plug, RootFam
    std::optional<std::size_t> support;

    friend bool operator==(const TreeExpr &, const TreeExpr &) = default;
};

/// An expression with an optional `alphabet {…}` directive (default {a, b}).
struct Program {
    std::optional<std::vector<std::string>> alphabet;
    TreeExpr expr;

    friend bool operator==(const Program &, const Program &) = default;
};

/// Throws ParseError with the byte offset of the offending token.
Program parse_program(std::string_view text);
std::string print(const TreeExpr &e);
std::string print(const Program &p);

using TreeValue = std::variant<TreeAutomaton, SpinePlugged, RootFamily>;

/// Regular combinators give automata; `G`, `plug` and `rootfam` give plugged
/// values. Regular-only combinators on plugged values throw RepresentationMismatch.
TreeValue eval(const Program &p);
TreeValue eval(std::string_view text);

} // namespace cbtree
