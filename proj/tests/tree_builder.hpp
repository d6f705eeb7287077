#pragma once

#include "core/tree.hpp"

// Hand-assembly of trees for tests that need exact shapes and colors.

namespace rbt::test {

inline NodeHandle mk(Tree& t, std::int64_t key, Color c, NodeHandle l = kNil,
                     NodeHandle r = kNil) {
    NodeHandle h = t.store().allocate(key, c);
    if (!is_nil(l)) {
        t.store()[h].left = l;
        t.store()[l].parent = h;
    }
    if (!is_nil(r)) {
        t.store()[h].right = r;
        t.store()[r].parent = h;
    }
    return h;
}

inline std::size_t count_nodes(const Tree& t, NodeHandle h) {
    if (is_nil(h)) return 0;
    return 1 + count_nodes(t, t.store()[h].left) +
           count_nodes(t, t.store()[h].right);
}

// Installs h as the root and fixes the size counter.
inline void finish(Tree& t, NodeHandle h) {
    t.set_root(h);
    t.set_size(count_nodes(t, h));
}

}  // namespace rbt::test
