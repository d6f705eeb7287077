#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace rbt {

enum class Color : std::uint8_t { Red, Black };

// Index into a NodeStore. Handle 0 is the store's nil sentinel, which is
// valid to dereference and permanently black.
struct NodeHandle {
    std::uint32_t index = 0;
    friend bool operator==(NodeHandle, NodeHandle) = default;
};

inline constexpr NodeHandle kNil{0};

inline bool is_nil(NodeHandle h) { return h.index == 0; }

struct Node {
    std::int64_t key = 0;
    NodeHandle left{};
    NodeHandle right{};
    NodeHandle parent{};
    Color color = Color::Black;
};

// Arena of nodes addressed by handles. Slot 0 holds the shared nil sentinel;
// freed slots are recycled through a free list so long runs stay bounded.
class NodeStore {
public:
    NodeStore() : nodes_(1) {}

    NodeHandle allocate(std::int64_t key, Color color,
                        NodeHandle parent = kNil) {
        NodeHandle h;
        if (!free_.empty()) {
            h.index = free_.back();
            free_.pop_back();
        } else {
            h.index = static_cast<std::uint32_t>(nodes_.size());
            nodes_.emplace_back();
        }
        Node& n = nodes_[h.index];
        n = Node{};
        n.key = key;
        n.color = color;
        n.parent = parent;
        return h;
    }

    void release(NodeHandle h) {
        assert(!is_nil(h));
        nodes_[h.index] = Node{};
        free_.push_back(h.index);
    }

    Node& operator[](NodeHandle h) { return nodes_[h.index]; }
    const Node& operator[](NodeHandle h) const { return nodes_[h.index]; }

    const Node& nil() const { return nodes_[0]; }

    // Live nodes, excluding the sentinel.
    std::size_t allocated() const { return nodes_.size() - 1 - free_.size(); }

    bool nil_intact() const {
        const Node& n = nodes_[0];
        return n.color == Color::Black && is_nil(n.left) && is_nil(n.right) &&
               is_nil(n.parent);
    }

    // The fix-up loops never recolor the sentinel, but a few of them lean on
    // its parent field transiently; this puts it back.
    void reset_nil() {
        nodes_[0] = Node{};
    }

private:
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> free_;
};

}  // namespace rbt
