#include "core/tree.hpp"

#include <utility>

#include "core/internal.hpp"

namespace rbt {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::RB: return "rb";
        case Variant::LLRB: return "llrb";
        case Variant::RB23: return "rb23";
        case Variant::RB234: return "rb234";
    }
    return "?";
}

namespace detail {

Locate bst_locate(const Tree& t, std::int64_t key) {
    const NodeStore& s = t.store();
    Locate loc;
    NodeHandle h = t.root();
    while (!is_nil(h)) {
        if (key == s[h].key) {
            loc.node = h;
            return loc;
        }
        loc.parent = h;
        loc.went_left = key < s[h].key;
        h = loc.went_left ? s[h].left : s[h].right;
    }
    return loc;
}

NodeHandle attach_red_leaf(Tree& t, const Locate& loc, std::int64_t key) {
    NodeStore& s = t.store();
    NodeHandle n = s.allocate(key, Color::Red, loc.parent);
    if (is_nil(loc.parent)) {
        t.set_root(n);
    } else if (loc.went_left) {
        s[loc.parent].left = n;
    } else {
        s[loc.parent].right = n;
    }
    t.set_size(t.size() + 1);
    return n;
}

NodeHandle subtree_min(const NodeStore& s, NodeHandle h) {
    while (!is_nil(s[h].left)) h = s[h].left;
    return h;
}

void replace_child(Tree& t, NodeHandle parent, NodeHandle old_child,
                   NodeHandle child) {
    NodeStore& s = t.store();
    if (is_nil(parent)) {
        t.set_root(child);
    } else if (s[parent].left == old_child) {
        s[parent].left = child;
    } else {
        s[parent].right = child;
    }
    if (!is_nil(child)) s[child].parent = parent;
}

LeafRemoval delete_to_leaf(Tree& t, std::int64_t key) {
    NodeStore& s = t.store();
    LeafRemoval out;

    Locate loc = bst_locate(t, key);
    NodeHandle z = loc.node;
    if (is_nil(z)) return out;
    out.removed = true;

    if (!is_nil(s[z].left) && !is_nil(s[z].right)) {
        // Degree 2: take the successor's key, then delete the successor.
        NodeHandle m = subtree_min(s, s[z].right);
        s[z].key = s[m].key;
        z = m;
    }

    NodeHandle child = !is_nil(s[z].left) ? s[z].left : s[z].right;
    if (!is_nil(child)) {
        // Degree 1 is always a black node over a single red leaf.
        assert(s[z].color == Color::Black);
        assert(s[child].color == Color::Red);
        assert(is_nil(s[child].left) && is_nil(s[child].right));
        s[z].key = s[child].key;
        s[z].left = s[z].right = kNil;
        s.release(child);
        t.set_size(t.size() - 1);
        return out;
    }

    // Leaf. A red one just goes; a black one leaves a deficiency behind.
    NodeHandle p = s[z].parent;
    bool was_left = !is_nil(p) && s[p].left == z;
    bool was_black = s[z].color == Color::Black;
    replace_child(t, p, z, kNil);
    s.release(z);
    t.set_size(t.size() - 1);
    if (was_black && !is_nil(p)) {
        out.needs_fixup = true;
        out.parent = p;
        out.was_left = was_left;
    }
    return out;
}

}  // namespace detail

using detail::bst_locate;

NodeHandle rotate_left(Tree& t, NodeHandle h) {
    NodeStore& s = t.store();
    if (is_nil(h) || is_nil(s[h].right)) {
        assert(!"rotate_left: pivot or its right child is nil");
        return kNil;
    }
    NodeHandle r = s[h].right;
    s[h].right = s[r].left;
    if (!is_nil(s[r].left)) s[s[r].left].parent = h;
    detail::replace_child(t, s[h].parent, h, r);
    s[r].left = h;
    s[h].parent = r;
    t.stats_mut().rotations++;
    t.notify_rotation('L', h);
    return r;
}

NodeHandle rotate_right(Tree& t, NodeHandle h) {
    NodeStore& s = t.store();
    if (is_nil(h) || is_nil(s[h].left)) {
        assert(!"rotate_right: pivot or its left child is nil");
        return kNil;
    }
    NodeHandle l = s[h].left;
    s[h].left = s[l].right;
    if (!is_nil(s[l].right)) s[s[l].right].parent = h;
    detail::replace_child(t, s[h].parent, h, l);
    s[l].right = h;
    s[h].parent = l;
    t.stats_mut().rotations++;
    t.notify_rotation('R', h);
    return l;
}

bool Tree::insert(std::int64_t key) {
    switch (variant_) {
        case Variant::RB:
        case Variant::RB234: return detail::rb_insert(*this, key);
        case Variant::LLRB: return detail::llrb_insert(*this, key);
        case Variant::RB23: return detail::rb23_insert(*this, key);
    }
    return false;
}

bool Tree::erase(std::int64_t key) {
    switch (variant_) {
        case Variant::RB: return detail::rb_delete(*this, key);
        case Variant::LLRB: return detail::llrb_delete(*this, key);
        case Variant::RB23: return detail::rb23_delete(*this, key);
        case Variant::RB234: return detail::rb234_delete(*this, key);
    }
    return false;
}

bool Tree::contains(std::int64_t key) const {
    return !is_nil(bst_locate(*this, key).node);
}

int Tree::height() const {
    struct Rec {
        const NodeStore& s;
        int walk(NodeHandle h) const {
            if (is_nil(h)) return 0;
            return 1 + std::max(walk(s[h].left), walk(s[h].right));
        }
    } rec{store_};
    return rec.walk(root_);
}

void Tree::inorder_keys_into(std::vector<std::int64_t>& out) const {
    out.clear();
    out.reserve(size_);
    // Iterative inorder; the explicit stack keeps deep trees off the C stack.
    std::vector<NodeHandle> stack;
    NodeHandle h = root_;
    while (!is_nil(h) || !stack.empty()) {
        while (!is_nil(h)) {
            stack.push_back(h);
            h = store_[h].left;
        }
        h = stack.back();
        stack.pop_back();
        out.push_back(store_[h].key);
        h = store_[h].right;
    }
}

std::vector<std::int64_t> Tree::inorder_keys() const {
    std::vector<std::int64_t> out;
    inorder_keys_into(out);
    return out;
}

Tree Tree::clone_as(Variant v) const {
    Tree t(v);
    t.store_ = store_;
    t.root_ = root_;
    t.size_ = size_;
    return t;  // fresh stats
}

bool Tree::same_shape(const Tree& other) const {
    struct Rec {
        const NodeStore& a;
        const NodeStore& b;
        bool walk(NodeHandle x, NodeHandle y) const {
            if (is_nil(x) || is_nil(y)) return is_nil(x) && is_nil(y);
            if (a[x].key != b[y].key || a[x].color != b[y].color) return false;
            return walk(a[x].left, b[y].left) && walk(a[x].right, b[y].right);
        }
    } rec{store_, other.store_};
    return rec.walk(root_, other.root_);
}

}  // namespace rbt
