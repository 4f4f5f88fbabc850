#pragma once

#include <string>
#include <string_view>

#include "cbtree/analysis.hpp"
#include "cbtree/suites.hpp"

namespace cbtree {

/// `{"alphabet":["a","b"],"states":N,"root":0,"edges":[[src,"sym",dst],...]}`, one line,
/// edges sorted by (src, symbol). The automaton is minimized first; the empty
/// tree has no "root" key.
std::string export_json(const TreeAutomaton &t);
/// Inverse of export_json. Throws ParseError on malformed input.
TreeAutomaton import_json(std::string_view text);

std::string to_json(const StateReport &report);
std::string to_json(const LawResult &result);

} // namespace cbtree
