#include <optional>

#include "core/internal.hpp"

namespace rbt {
namespace {

using detail::is_red;

struct Auditor {
    const Tree& t;
    const NodeStore& s;
    Audit out;

    void flag(char rule, NodeHandle h, std::string detail) {
        out.violations.push_back({rule, h, std::move(detail)});
    }

    // Returns {black height, node height} of the subtree at h.
    std::pair<int, int> walk(NodeHandle h, NodeHandle parent,
                             std::optional<std::int64_t> lo,
                             std::optional<std::int64_t> hi) {
        if (is_nil(h)) return {0, 0};
        const Node& n = s[h];
        out.count++;

        if (n.parent != parent)
            flag('l', h, "parent link does not match the path");
        if (lo && n.key <= *lo)
            flag('a', h, "key breaks the search order (too small)");
        if (hi && n.key >= *hi)
            flag('a', h, "key breaks the search order (too large)");
        if (n.color == Color::Red && !is_nil(parent) && is_red(s, parent))
            flag('c', h, "red node under a red parent");
        if (t.variant() == Variant::RB23 && is_red(s, n.left) &&
            is_red(s, n.right))
            flag('e', h, "node with two red children");
        if (t.variant() == Variant::LLRB && is_red(s, n.right))
            flag('f', n.right, "red right child");

        auto [lb, lh] = walk(n.left, h, lo, n.key);
        auto [rb, rh] = walk(n.right, h, n.key, hi);
        if (lb != rb)
            flag('d', h, "black path counts differ between children");
        int self = n.color == Color::Black ? 1 : 0;
        return {self + std::max(lb, rb), 1 + std::max(lh, rh)};
    }
};

}  // namespace

Audit Tree::audit() const {
    Auditor a{*this, store_, {}};
    if (!store_.nil_intact())
        a.flag('n', kNil, "sentinel recolored or relinked");
    if (!is_nil(root_)) {
        if (store_[root_].color != Color::Black)
            a.flag('b', root_, "root is not black");
        auto [bh, h] = a.walk(root_, kNil, std::nullopt, std::nullopt);
        a.out.black_height = bh;
        a.out.height = h;
    }
    if (a.out.count != size_)
        a.flag('s', root_, "size counter does not match reachable nodes");
    return std::move(a.out);
}

}  // namespace rbt
