#include "core/internal.hpp"

// Classic red-black tree: bottom-up insert fix-up over parent links, and the
// textbook delete fix-up driven by the deficient position and its sibling.
// Both loops are iterative; each rule fired bumps fixup_steps once.

namespace rbt::detail {

namespace {

void rb_insert_fixup(Tree& t, NodeHandle z) {
    NodeStore& s = t.store();
    while (is_red(s, s[z].parent)) {
        NodeHandle p = s[z].parent;
        NodeHandle g = s[p].parent;  // red parent is never the root
        t.stats_mut().fixup_steps++;
        if (p == s[g].left) {
            NodeHandle u = s[g].right;
            if (is_red(s, u)) {  // red uncle: push blackness down, ascend
                set_black(t, p);
                set_black(t, u);
                set_red(t, g);
                z = g;
            } else {
                if (z == s[p].right) {  // inner child: straighten first
                    z = p;
                    rotate_left(t, z);
                    p = s[z].parent;
                }
                set_black(t, p);
                set_red(t, g);
                rotate_right(t, g);
            }
        } else {
            NodeHandle u = s[g].left;
            if (is_red(s, u)) {
                set_black(t, p);
                set_black(t, u);
                set_red(t, g);
                z = g;
            } else {
                if (z == s[p].left) {
                    z = p;
                    rotate_right(t, z);
                    p = s[z].parent;
                }
                set_black(t, p);
                set_red(t, g);
                rotate_left(t, g);
            }
        }
    }
    set_black(t, t.root());
}

// x is the root of the deficient subtree; it may be the nil handle standing
// in for a removed black leaf, so its parent and side are carried alongside
// instead of being read through the sentinel.
void rb_delete_fixup(Tree& t, NodeHandle x, NodeHandle p, bool x_is_left) {
    NodeStore& s = t.store();
    while (x != t.root() && !is_red(s, x)) {
        if (x_is_left) {
            NodeHandle w = s[p].right;
            if (is_red(s, w)) {  // red sibling: make it black
                t.stats_mut().fixup_steps++;
                set_black(t, w);
                set_red(t, p);
                rotate_left(t, p);
                w = s[p].right;
            }
            if (!is_red(s, s[w].left) && !is_red(s, s[w].right)) {
                // both nephews black: recolor, deficiency climbs
                t.stats_mut().fixup_steps++;
                set_red(t, w);
                x = p;
                p = s[x].parent;
                x_is_left = s[p].left == x;
            } else {
                if (!is_red(s, s[w].right)) {  // near nephew red only
                    t.stats_mut().fixup_steps++;
                    set_black(t, s[w].left);
                    set_red(t, w);
                    rotate_right(t, w);
                    w = s[p].right;
                }
                // far nephew red: terminal rotation
                t.stats_mut().fixup_steps++;
                set_color(t, w, s[p].color);
                set_black(t, p);
                set_black(t, s[w].right);
                rotate_left(t, p);
                x = t.root();
            }
        } else {
            NodeHandle w = s[p].left;
            if (is_red(s, w)) {
                t.stats_mut().fixup_steps++;
                set_black(t, w);
                set_red(t, p);
                rotate_right(t, p);
                w = s[p].left;
            }
            if (!is_red(s, s[w].left) && !is_red(s, s[w].right)) {
                t.stats_mut().fixup_steps++;
                set_red(t, w);
                x = p;
                p = s[x].parent;
                x_is_left = s[p].left == x;
            } else {
                if (!is_red(s, s[w].left)) {
                    t.stats_mut().fixup_steps++;
                    set_black(t, s[w].right);
                    set_red(t, w);
                    rotate_left(t, w);
                    w = s[p].left;
                }
                t.stats_mut().fixup_steps++;
                set_color(t, w, s[p].color);
                set_black(t, p);
                set_black(t, s[w].left);
                rotate_right(t, p);
                x = t.root();
            }
        }
    }
    if (!is_nil(x)) set_black(t, x);
}

}  // namespace

bool rb_insert(Tree& t, std::int64_t key) {
    Locate loc = bst_locate(t, key);
    if (!is_nil(loc.node)) return false;
    NodeHandle z = attach_red_leaf(t, loc, key);
    rb_insert_fixup(t, z);
    return true;
}

bool rb_delete(Tree& t, std::int64_t key) {
    LeafRemoval r = delete_to_leaf(t, key);
    if (r.removed && r.needs_fixup)
        rb_delete_fixup(t, kNil, r.parent, r.was_left);
    return r.removed;
}

}  // namespace rbt::detail
