#include "core/internal.hpp"

// Left-leaning red-black tree, kept deliberately close to the published
// recursive formulation: rebalancing runs on the unwind at every level with
// no short-circuit, and the top-down delete restructures the search path
// whether or not the key exists. This variant is the measured baseline, not
// an optimization target. The only departures are nil-sentinel guards around
// the places where the original dereferences absent children.

namespace rbt::detail {

namespace {

// Rotations here recolor the way the LLRB operations expect: the lifted
// node takes the old root's color and the old root turns red.
NodeHandle llrb_rotate_left(Tree& t, NodeHandle h) {
    NodeHandle x = rotate_left(t, h);
    set_color(t, x, t.store()[h].color);
    set_red(t, h);
    return x;
}

NodeHandle llrb_rotate_right(Tree& t, NodeHandle h) {
    NodeHandle x = rotate_right(t, h);
    set_color(t, x, t.store()[h].color);
    set_red(t, h);
    return x;
}

void flip_colors(Tree& t, NodeHandle h) {
    NodeStore& s = t.store();
    auto flip = [&](NodeHandle n) {
        if (!is_nil(n))
            set_color(t, n, is_red(s, n) ? Color::Black : Color::Red);
    };
    flip(h);
    flip(s[h].left);
    flip(s[h].right);
}

void link_left(Tree& t, NodeHandle h, NodeHandle child) {
    t.store()[h].left = child;
    if (!is_nil(child)) t.store()[child].parent = h;
}

void link_right(Tree& t, NodeHandle h, NodeHandle child) {
    t.store()[h].right = child;
    if (!is_nil(child)) t.store()[child].parent = h;
}

NodeHandle fix_up(Tree& t, NodeHandle h) {
    NodeStore& s = t.store();
    t.stats_mut().fixup_steps++;
    if (is_red(s, s[h].right)) h = llrb_rotate_left(t, h);
    if (is_red(s, s[h].left) && is_red(s, s[s[h].left].left))
        h = llrb_rotate_right(t, h);
    if (is_red(s, s[h].left) && is_red(s, s[h].right)) flip_colors(t, h);
    return h;
}

NodeHandle insert_rec(Tree& t, NodeHandle h, std::int64_t key,
                      bool& inserted) {
    NodeStore& s = t.store();
    if (is_nil(h)) {
        inserted = true;
        t.set_size(t.size() + 1);
        return s.allocate(key, Color::Red);
    }
    if (key < s[h].key) {
        link_left(t, h, insert_rec(t, s[h].left, key, inserted));
    } else if (key > s[h].key) {
        link_right(t, h, insert_rec(t, s[h].right, key, inserted));
    }
    // The same three unguarded rules run on every unwind level, even where
    // nothing changed. A node with two red children pays two rotations that
    // cancel out before the flip; that cost is part of the algorithm being
    // measured, not something to optimize away.
    return fix_up(t, h);
}

NodeHandle move_red_left(Tree& t, NodeHandle h) {
    NodeStore& s = t.store();
    flip_colors(t, h);
    if (is_red(s, s[s[h].right].left)) {
        link_right(t, h, llrb_rotate_right(t, s[h].right));
        h = llrb_rotate_left(t, h);
        flip_colors(t, h);
    }
    return h;
}

NodeHandle move_red_right(Tree& t, NodeHandle h) {
    NodeStore& s = t.store();
    flip_colors(t, h);
    if (is_red(s, s[s[h].left].left)) {
        h = llrb_rotate_right(t, h);
        flip_colors(t, h);
    }
    return h;
}

NodeHandle delete_min_rec(Tree& t, NodeHandle h) {
    NodeStore& s = t.store();
    if (is_nil(s[h].left)) {
        s.release(h);
        return kNil;
    }
    if (!is_red(s, s[h].left) && !is_red(s, s[s[h].left].left))
        h = move_red_left(t, h);
    link_left(t, h, delete_min_rec(t, s[h].left));
    return fix_up(t, h);
}

NodeHandle delete_rec(Tree& t, NodeHandle h, std::int64_t key,
                      bool& removed) {
    NodeStore& s = t.store();
    if (is_nil(h)) return kNil;  // key not on this path
    if (key < s[h].key) {
        if (!is_nil(s[h].left)) {
            if (!is_red(s, s[h].left) && !is_red(s, s[s[h].left].left))
                h = move_red_left(t, h);
            link_left(t, h, delete_rec(t, s[h].left, key, removed));
        }
    } else {
        if (is_red(s, s[h].left)) h = llrb_rotate_right(t, h);
        if (key == s[h].key && is_nil(s[h].right)) {
            assert(is_nil(s[h].left));  // red left was rotated away above
            removed = true;
            t.set_size(t.size() - 1);
            s.release(h);
            return kNil;
        }
        if (!is_nil(s[h].right)) {
            if (!is_red(s, s[h].right) && !is_red(s, s[s[h].right].left))
                h = move_red_right(t, h);
            if (key == s[h].key) {
                removed = true;
                t.set_size(t.size() - 1);
                s[h].key = s[subtree_min(s, s[h].right)].key;
                link_right(t, h, delete_min_rec(t, s[h].right));
            } else {
                link_right(t, h, delete_rec(t, s[h].right, key, removed));
            }
        }
    }
    return fix_up(t, h);
}

}  // namespace

bool llrb_insert(Tree& t, std::int64_t key) {
    bool inserted = false;
    NodeHandle r = insert_rec(t, t.root(), key, inserted);
    t.set_root(r);
    t.store()[r].parent = kNil;
    set_black(t, r);
    return inserted;
}

bool llrb_delete(Tree& t, std::int64_t key) {
    if (is_nil(t.root())) return false;
    NodeStore& s = t.store();
    // The descent insists on a red to work with, so the root may be
    // temporarily reddened even when the key is absent.
    if (!is_red(s, s[t.root()].left) && !is_red(s, s[t.root()].right))
        set_red(t, t.root());
    bool removed = false;
    NodeHandle r = delete_rec(t, t.root(), key, removed);
    t.set_root(r);
    if (!is_nil(r)) {
        s[r].parent = kNil;
        set_black(t, r);
    }
    return removed;
}

}  // namespace rbt::detail
