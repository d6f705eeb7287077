#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/tree.hpp"
#include "verify/script.hpp"

namespace rbt {

struct DiffOptions {
    // Re-verify the deficiency invariant inside every parity-seeking delete.
    bool deficiency_audit = false;
    // Test hook, called before each op with the tree under test; used to
    // inject faults and prove the runner notices them.
    std::function<void(Tree&, std::size_t)> before_op;
    // Skip the greedy shrink (useful when the hook is index-sensitive).
    bool no_shrink = false;
};

struct Divergence {
    std::size_t op_index = 0;
    Variant variant = Variant::RB;
    std::string kind;    // "result", "contents", "size", "invariant", "steps"
    std::string detail;
};

struct DiffReport {
    bool clean = true;
    std::vector<Divergence> divergences;  // first one per affected variant
    OpScript minimized;                   // reproduces divergences.front()
    std::string rng;                      // generator identity
    // Largest per-op fixup_steps relative to 2*max(height before, after);
    // anything above 1.0 counts as a bound violation.
    double worst_step_ratio = 0.0;
    std::uint64_t step_bound_violations = 0;

    std::string summary() const;
};

// Replays the script against each variant and the oracle set, checking
// result agreement, contents, size, every structural invariant and the
// fix-up step bound after every single op. On divergence the script is
// greedily shrunk (op removal) to a minimal reproduction.
DiffReport differential_run(const OpScript& script,
                            const std::vector<Variant>& variants,
                            const DiffOptions& options = {});

}  // namespace rbt
