#include <cstdio>
#include <cstdlib>
#include <utility>

#include "core/internal.hpp"

// 2-3 red-black tree: a symmetric red-black tree in which no node has two
// red children, so a black node plus its red children reads as a 2-3 tree
// node. Insertion splits overfull compound nodes on the way up; deletion is
// parity-seeking: either repair the deficient subtree in place, or make its
// sibling equally deficient and hand the problem to the parent.
//
// The same delete loop also serves the 2-3-4 variant, where a sibling with
// two red children is legal and resolves through the far-child rule.

namespace rbt::detail {

namespace {

NodeHandle sibling_of(const NodeStore& s, NodeHandle p, bool x_is_left) {
    return x_is_left ? s[p].right : s[p].left;
}

// Counts black nodes per path under h (h's own color included when black).
// Returns -1 if the paths disagree.
int black_paths(const NodeStore& s, NodeHandle h) {
    if (is_nil(h)) return 0;
    int l = black_paths(s, s[h].left);
    int r = black_paths(s, s[h].right);
    if (l < 0 || r < 0 || l != r) return -1;
    return l + (s[h].color == Color::Black ? 1 : 0);
}

// Fuzz-mode audit of the deficiency invariant: the subtree at x is one
// black short of its sibling, both internally uniform. Trips in any build
// type; the flag that enables it is off by default.
void audit_deficiency(const Tree& t, NodeHandle x, NodeHandle p,
                      bool x_is_left) {
    const NodeStore& s = t.store();
    NodeHandle y = sibling_of(s, p, x_is_left);
    int bx = black_paths(s, x);
    int by = black_paths(s, y);
    if (bx < 0 || by < 0 || by != bx + 1) {
        std::fprintf(stderr,
                     "deficiency audit failed: x paths=%d sibling paths=%d\n",
                     bx, by);
        std::abort();
    }
}

struct Deficiency {
    NodeHandle x;    // root of the deficient subtree; may be the sentinel
    NodeHandle p;    // its parent, tracked outside the sentinel
    bool x_is_left;  // which side of p the deficiency hangs on
};

// Parity-seeking fix-up after removing a black leaf. `allow_two_red` relaxes
// the 2-3 constraint for the 2-3-4 variant.
void parity_delete_fixup(Tree& t, Deficiency d, bool allow_two_red) {
    NodeStore& s = t.store();
    NodeHandle x = d.x;
    NodeHandle p = d.p;
    bool x_is_left = d.x_is_left;

    while (x != t.root()) {
        if (t.deficiency_audit()) audit_deficiency(t, x, p, x_is_left);

        if (is_red(s, x)) {  // absorb the missing black into x
            t.stats_mut().fixup_steps++;
            set_black(t, x);
            return;
        }

        NodeHandle y = sibling_of(s, p, x_is_left);
        assert(!is_nil(y));

        if (is_black(s, y)) {
            NodeHandle near = x_is_left ? s[y].left : s[y].right;
            NodeHandle far = x_is_left ? s[y].right : s[y].left;
            if (!allow_two_red) assert(!(is_red(s, near) && is_red(s, far)));

            if (!is_red(s, near) && !is_red(s, far)) {
                // Make the sibling deficient too; the parent inherits the
                // problem. A red parent resolves it on the next pass.
                t.stats_mut().fixup_steps++;
                set_red(t, y);
                x = p;
                p = s[x].parent;
                x_is_left = !is_nil(p) && s[p].left == x;
                continue;
            }

            // A red child of y pays for the missing black. Reddening y
            // first creates the transient double red the rotations consume.
            t.stats_mut().fixup_steps++;
            Color parent_color = s[p].color;
            set_red(t, y);
            if (is_red(s, far)) {
                // far child red: one rotation at the parent settles it
                if (x_is_left)
                    rotate_left(t, p);
                else
                    rotate_right(t, p);
                set_color(t, y, parent_color);
                set_black(t, p);
                set_black(t, far);
            } else {
                // near child red: lift it to the top with two rotations
                if (x_is_left) {
                    rotate_right(t, y);
                    rotate_left(t, p);
                } else {
                    rotate_left(t, y);
                    rotate_right(t, p);
                }
                set_color(t, near, parent_color);
                set_black(t, p);
                set_black(t, y);
            }
            return;
        }

        // Red sibling: its parent and children are black. Rotate the parent
        // so x faces one of y's black children, then retry.
        t.stats_mut().fixup_steps++;
        assert(is_black(s, p));
        if (x_is_left)
            rotate_left(t, p);
        else
            rotate_right(t, p);
        set_black(t, y);
        set_red(t, p);
        // x and p are unchanged; only the sibling differs now.
    }
}

// Split an overfull compound node: x and its parent are both red. The
// middle key of {x, parent, grandparent} rises, stays red, and gets two
// black children. Returns the risen node, the next fix-up subject.
NodeHandle split_four_node(Tree& t, NodeHandle x) {
    NodeStore& s = t.store();
    NodeHandle p = s[x].parent;
    NodeHandle g = s[p].parent;  // red parent is never the root
    assert(is_black(s, g));
    bool p_is_left = s[g].left == p;
    assert(!is_red(s, p_is_left ? s[g].right : s[g].left));

    if (p_is_left) {
        if (x == s[p].right) {  // inner: straighten into the outer form
            rotate_left(t, p);
            std::swap(x, p);
        }
        rotate_right(t, g);
    } else {
        if (x == s[p].left) {
            rotate_right(t, p);
            std::swap(x, p);
        }
        rotate_left(t, g);
    }
    set_black(t, x);
    set_black(t, g);
    return p;
}

void rb23_insert_fixup(Tree& t, NodeHandle x) {
    NodeStore& s = t.store();
    while (x != t.root() && is_red(s, x)) {
        NodeHandle p = s[x].parent;
        if (is_red(s, p)) {
            t.stats_mut().fixup_steps++;
            x = split_four_node(t, x);
            continue;
        }
        NodeHandle sib = sibling_of(s, p, s[p].left == x);
        if (is_red(s, sib)) {  // two red children under p: color flip
            t.stats_mut().fixup_steps++;
            set_red(t, p);
            set_black(t, x);
            set_black(t, sib);
            x = p;
            continue;
        }
        break;  // x red but alone under a black parent: legal
    }
    set_black(t, t.root());
}

}  // namespace

bool rb23_insert(Tree& t, std::int64_t key) {
    Locate loc = bst_locate(t, key);
    if (!is_nil(loc.node)) return false;
    NodeHandle z = attach_red_leaf(t, loc, key);
    rb23_insert_fixup(t, z);
    return true;
}

bool rb23_delete(Tree& t, std::int64_t key) {
    LeafRemoval r = delete_to_leaf(t, key);
    if (r.removed && r.needs_fixup)
        parity_delete_fixup(t, {kNil, r.parent, r.was_left}, false);
    return r.removed;
}

bool rb234_delete(Tree& t, std::int64_t key) {
    LeafRemoval r = delete_to_leaf(t, key);
    if (r.removed && r.needs_fixup)
        parity_delete_fixup(t, {kNil, r.parent, r.was_left}, true);
    return r.removed;
}

}  // namespace rbt::detail
