#include "cbtree/render.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace cbtree {

namespace {

std::map<FiniteWord, std::vector<FiniteWord>> children_of(const FiniteLanguage &tree) {
    std::map<FiniteWord, std::vector<FiniteWord>> children;
    for (const auto &w : tree)
        if (!w.empty())
            children[restrict(w, w.size() - 1)].push_back(w);
    return children;
}

} // namespace

std::string render_ascii(const FiniteLanguage &tree, bool color) {
    if (tree.empty())
        return "(empty)\n";
    const auto children = children_of(tree);
    const char *on = color ? "\x1b[36m" : "";
    const char *off = color ? "\x1b[0m" : "";
    std::ostringstream out;
    auto draw = [&](auto &&self, const FiniteWord &node, const std::string &indent) -> void {
        const auto it = children.find(node);
        if (it == children.end())
            return;
        for (std::size_t i = 0; i < it->second.size(); ++i) {
            const bool last = i + 1 == it->second.size();
            out << indent << "+-- " << on << it->second[i].str() << off << '\n';
            self(self, it->second[i], indent + (last ? "    " : "|   "));
        }
    };
    const FiniteWord root(tree.alphabet());
    out << on << root.str() << off << '\n';
    draw(draw, root, "");
    return out.str();
}

std::string render_dot(const FiniteLanguage &tree) {
    std::ostringstream out;
    out << "digraph tree {\n";
    for (const auto &w : tree)
        out << "  \"" << w.str() << "\";\n";
    for (const auto &w : tree)
        if (!w.empty())
            out << "  \"" << restrict(w, w.size() - 1).str() << "\" -> \"" << w.str() << "\" [label=\""
                << tree.alphabet()->symbol(w.back()) << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace cbtree
