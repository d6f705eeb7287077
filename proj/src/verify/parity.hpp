#pragma once

#include <cstdint>
#include <string>

namespace rbt {

struct ParityReport {
    bool ok = true;
    std::string message;  // offending op/key and DOT dumps on failure
};

// Runs the same insert-all-then-delete-all key sequence through the classic
// variant and the parity-seeking 2-3-4 variant, requiring identical per-op
// rotation counts, identical cumulative counts and identical final shape.
ParityReport paired_rotation_check(std::size_t n, std::uint64_t seed);

// Builds 2-3 trees of `tree_size` keys, clones each, and deletes one shared
// key with the classic fix-up on one copy and the parity-seeking fix-up on
// the other; rotation counts must match in every trial. Separates algorithm
// behavior from the different trees each insert builds.
ParityReport shared_tree_delete_check(std::size_t tree_size,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace rbt
