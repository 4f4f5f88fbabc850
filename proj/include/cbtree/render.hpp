#pragma once

#include <string>

#include "cbtree/oracle.hpp"

namespace cbtree {

/// Indented drawing of a finite tree, children in alphabet order; `(empty)` for ∅.
std::string render_ascii(const FiniteLanguage &tree, bool color = false);
/// `digraph tree { ... }` with one node per word and edges u -> ua labelled a.
std::string render_dot(const FiniteLanguage &tree);

} // namespace cbtree
