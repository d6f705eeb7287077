#include <sstream>

#include "core/internal.hpp"

namespace rbt {

// Graphviz text for the current tree. Red nodes carry both a label tag and a
// fill color so they stand out with or without color output; the sentinel is
// omitted entirely.
std::string Tree::to_dot() const {
    const NodeStore& s = store_;
    std::ostringstream os;
    os << "digraph rbtree {\n";
    os << "  node [shape=circle, style=filled, fontcolor=white];\n";

    std::vector<NodeHandle> stack;
    if (!is_nil(root_)) stack.push_back(root_);
    while (!stack.empty()) {
        NodeHandle h = stack.back();
        stack.pop_back();
        const Node& n = s[h];
        const bool red = n.color == Color::Red;
        os << "  n" << n.key << " [label=\"" << n.key << " ["
           << (red ? "red" : "black") << "]\", fillcolor="
           << (red ? "red" : "black") << "];\n";
        if (!is_nil(n.left)) {
            os << "  n" << n.key << " -> n" << s[n.left].key << ";\n";
            stack.push_back(n.left);
        }
        if (!is_nil(n.right)) {
            os << "  n" << n.key << " -> n" << s[n.right].key << ";\n";
            stack.push_back(n.right);
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace rbt
