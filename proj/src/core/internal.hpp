#pragma once

#include "core/tree.hpp"

// Shared plumbing for the per-variant insert/delete implementations.

namespace rbt::detail {

inline bool is_red(const NodeStore& s, NodeHandle h) {
    return s[h].color == Color::Red;
}
inline bool is_black(const NodeStore& s, NodeHandle h) {
    return s[h].color == Color::Black;
}

// All recoloring funnels through here so the recolor counter stays honest.
// The sentinel is never recolored.
inline void set_color(Tree& t, NodeHandle h, Color c) {
    assert(!is_nil(h));
    if (t.store()[h].color != c) {
        t.store()[h].color = c;
        t.stats_mut().recolors++;
    }
}
inline void set_red(Tree& t, NodeHandle h) { set_color(t, h, Color::Red); }
inline void set_black(Tree& t, NodeHandle h) { set_color(t, h, Color::Black); }

struct Locate {
    NodeHandle node = kNil;    // the key's node, or kNil
    NodeHandle parent = kNil;  // attachment point when not found
    bool went_left = false;    // side of `parent` the key belongs on
};

Locate bst_locate(const Tree& t, std::int64_t key);

// Attaches a fresh red node at the position described by `loc`.
NodeHandle attach_red_leaf(Tree& t, const Locate& loc, std::int64_t key);

NodeHandle subtree_min(const NodeStore& s, NodeHandle h);

// Points parent's child slot (or the root) at `child`; fixes child's parent
// link. `old_child` identifies which slot to overwrite.
void replace_child(Tree& t, NodeHandle parent, NodeHandle old_child,
                   NodeHandle child);

// Variant entry points.
bool rb_insert(Tree& t, std::int64_t key);
bool rb_delete(Tree& t, std::int64_t key);
bool llrb_insert(Tree& t, std::int64_t key);
bool llrb_delete(Tree& t, std::int64_t key);
bool rb23_insert(Tree& t, std::int64_t key);
bool rb23_delete(Tree& t, std::int64_t key);
bool rb234_delete(Tree& t, std::int64_t key);

// Shared by the three parent-link variants: finds the key, retargets a
// degree-2 node to its successor, and removes the final leaf or degree-1
// node. Reports where a black-leaf removal left a deficiency.
struct LeafRemoval {
    bool removed = false;       // key was present
    bool needs_fixup = false;   // a black leaf went away
    NodeHandle parent = kNil;   // parent of the removed black leaf
    bool was_left = false;      // side the leaf hung on
};
LeafRemoval delete_to_leaf(Tree& t, std::int64_t key);

}  // namespace rbt::detail
