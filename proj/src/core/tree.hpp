#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/store.hpp"

namespace rbt {

enum class Variant : std::uint8_t { RB, LLRB, RB23, RB234 };

const char* variant_name(Variant v);

// Instrumentation counters. `rotations` bumps exactly once per rotation
// primitive call; `recolors` once per color write that changes a node's
// color; `fixup_steps` once per rebalancing rule fired (one per repaired
// level for the recursive variant).
struct OpStats {
    std::uint64_t rotations = 0;
    std::uint64_t recolors = 0;
    std::uint64_t fixup_steps = 0;

    friend OpStats operator-(const OpStats& a, const OpStats& b) {
        return {a.rotations - b.rotations, a.recolors - b.recolors,
                a.fixup_steps - b.fixup_steps};
    }
    friend bool operator==(const OpStats&, const OpStats&) = default;
};

// One broken structural rule.
//   a  BST order          b  root not black     c  red node, red parent
//   d  black-path mismatch e  two red children  f  red right child
//   l  parent link wrong   n  sentinel damaged  s  size counter wrong
struct Violation {
    char rule = '?';
    NodeHandle node{};
    std::string detail;
};

// Everything a single walk of the tree can tell us.
struct Audit {
    std::vector<Violation> violations;
    int height = 0;        // nodes on the longest root-to-leaf path
    int black_height = 0;  // black nodes on any root-to-external path
    std::size_t count = 0; // reachable nodes
};

// An ordered set of 64-bit keys kept as one of four red-black variants.
// Single writer per tree; concurrent reads are fine while no writer runs.
class Tree {
public:
    explicit Tree(Variant v) : variant_(v) {}

    Variant variant() const { return variant_; }

    bool insert(std::int64_t key);
    bool erase(std::int64_t key);
    bool contains(std::int64_t key) const;

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    int height() const;

    const OpStats& stats() const { return stats_; }
    void reset_stats() { stats_ = OpStats{}; }

    Audit audit() const;
    std::vector<Violation> validate() const { return audit().violations; }

    std::vector<std::int64_t> inorder_keys() const;
    void inorder_keys_into(std::vector<std::int64_t>& out) const;

    std::string to_dot() const;

    Tree clone() const { return clone_as(variant_); }
    Tree clone_as(Variant v) const;

    // Same structure, keys and colors; stats are not compared.
    bool same_shape(const Tree& other) const;

    // Low-level surface used by the per-variant algorithms, the validator
    // and tests that assemble trees by hand.
    NodeStore& store() { return store_; }
    const NodeStore& store() const { return store_; }
    NodeHandle root() const { return root_; }
    void set_root(NodeHandle h) { root_ = h; }
    void set_size(std::size_t n) { size_ = n; }
    OpStats& stats_mut() { return stats_; }

    // When set, the parity-seeking delete re-counts black paths under the
    // deficient node and its sibling at every loop iteration. Costly; meant
    // for fuzzing.
    void set_deficiency_audit(bool on) { deficiency_audit_ = on; }
    bool deficiency_audit() const { return deficiency_audit_; }

    // Observer invoked after every rotation with 'L' or 'R' and the pivot
    // (the node that moved down). Plain function pointer to keep the
    // rotation hot path flat.
    using RotationHook = void (*)(void* ctx, char direction, NodeHandle pivot);
    void set_rotation_hook(RotationHook hook, void* ctx) {
        rotation_hook_ = hook;
        rotation_hook_ctx_ = ctx;
    }
    void notify_rotation(char direction, NodeHandle pivot) const {
        if (rotation_hook_) rotation_hook_(rotation_hook_ctx_, direction, pivot);
    }

private:
    NodeStore store_;
    NodeHandle root_ = kNil;
    Variant variant_;
    std::size_t size_ = 0;
    OpStats stats_;
    bool deficiency_audit_ = false;
    RotationHook rotation_hook_ = nullptr;
    void* rotation_hook_ctx_ = nullptr;
};

// Rotation primitives. They move links and
// update parent pointers only; callers recolor explicitly. Both return the
// new subtree root and bump stats. Preconditions: `h` and the child being
// lifted are non-nil; violations assert in debug builds and are rejected
// (kNil returned, no mutation) in release builds.
NodeHandle rotate_left(Tree& t, NodeHandle h);
NodeHandle rotate_right(Tree& t, NodeHandle h);

}  // namespace rbt
