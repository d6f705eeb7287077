#include "verify/differential.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "verify/oracle.hpp"
#include "verify/rng.hpp"

namespace rbt {

namespace {

struct StepTracking {
    double worst_ratio = 0.0;
    std::uint64_t violations = 0;
};

// One pass over the tree checking everything the runner needs per op:
// structural rules, parent links, contents against the sorted oracle, node
// count and height. Flat and allocation-free; the slow audit() runs only
// when this walk finds something wrong, to produce the detailed report.
struct FastCheck {
    const NodeStore& s;
    Variant variant;
    const std::vector<std::int64_t>& expected;  // sorted oracle contents
    std::size_t matched = 0;
    bool structure_ok = true;
    bool content_ok = true;
    int height = 0;

    // black height of the subtree, or -1 on a black-path mismatch
    int walk(NodeHandle h, NodeHandle parent, bool parent_red, int depth) {
        const Node& n = s[h];
        if (n.parent != parent) structure_ok = false;
        const bool red = n.color == Color::Red;
        if (red && parent_red) structure_ok = false;
        const bool left_red = !is_nil(n.left) && s[n.left].color == Color::Red;
        const bool right_red =
            !is_nil(n.right) && s[n.right].color == Color::Red;
        if (variant == Variant::RB23 && left_red && right_red)
            structure_ok = false;
        if (variant == Variant::LLRB && right_red) structure_ok = false;

        int lb = 0;
        if (!is_nil(n.left)) lb = walk(n.left, h, red, depth + 1);
        if (matched < expected.size() && expected[matched] == n.key)
            matched++;
        else
            content_ok = false;
        int rb = 0;
        if (!is_nil(n.right)) rb = walk(n.right, h, red, depth + 1);
        if (lb != rb || lb < 0) {
            structure_ok = false;
            return -1;
        }
        if (depth > height) height = depth;
        return lb + (red ? 0 : 1);
    }
};

// Runs one variant over the whole script; stops at the first divergence.
std::optional<Divergence> replay(const OpScript& script, Variant variant,
                                 const DiffOptions& opt, StepTracking* steps) {
    Tree tree(variant);
    tree.set_deficiency_audit(opt.deficiency_audit);
    OracleSet oracle;
    int prev_height = 0;

    for (std::size_t i = 0; i < script.ops.size(); i++) {
        if (opt.before_op) opt.before_op(tree, i);
        const Op& op = script.ops[i];
        OpStats before = tree.stats();

        bool got = false, want = false;
        switch (op.kind) {
            case Op::Kind::Insert:
                got = tree.insert(op.key);
                want = oracle.insert(op.key);
                break;
            case Op::Kind::Delete:
                got = tree.erase(op.key);
                want = oracle.erase(op.key);
                break;
            case Op::Kind::Search:
                got = tree.contains(op.key);
                want = oracle.contains(op.key);
                break;
        }

        auto fail = [&](std::string kind,
                        std::string detail) -> std::optional<Divergence> {
            return Divergence{i, variant, std::move(kind), std::move(detail)};
        };

        if (got != want)
            return fail("result", "tree said " + std::to_string(got) +
                                      ", oracle said " + std::to_string(want));

        FastCheck check{tree.store(), variant, oracle.contents(), 0, true,
                        true, 0};
        bool root_black = is_nil(tree.root()) ||
                          tree.store()[tree.root()].color == Color::Black;
        if (!is_nil(tree.root())) check.walk(tree.root(), kNil, false, 1);
        bool nil_ok = tree.store().nil_intact();

        if (!check.structure_ok || !root_black || !nil_ok) {
            // regenerate the precise report with the full validator
            std::ostringstream os;
            for (const Violation& v : tree.audit().violations)
                os << "[" << v.rule << " @" << v.node.index << " " << v.detail
                   << "] ";
            return fail("invariant", os.str());
        }
        if (tree.size() != oracle.size())
            return fail("size", std::to_string(tree.size()) + " vs oracle " +
                                    std::to_string(oracle.size()));
        if (!check.content_ok || check.matched != oracle.size())
            return fail("contents", "inorder keys differ from oracle");

        if (steps) {
            std::uint64_t used = (tree.stats() - before).fixup_steps;
            int h = std::max(prev_height, check.height);
            double bound = 2.0 * std::max(h, 1);
            double ratio = static_cast<double>(used) / bound;
            steps->worst_ratio = std::max(steps->worst_ratio, ratio);
            if (used > static_cast<std::uint64_t>(bound)) {
                steps->violations++;
                return fail("steps",
                            std::to_string(used) + " fix-up steps on a tree "
                            "of height " + std::to_string(h));
            }
        }
        prev_height = check.height;
    }
    return std::nullopt;
}

// Greedy shrink by op removal: repeatedly drop any op whose removal keeps
// the script diverging, until no single removal does.
OpScript shrink(const OpScript& script, Variant variant,
                const DiffOptions& opt) {
    OpScript cur = script;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = cur.ops.size(); i > 0; i--) {
            OpScript candidate = cur;
            candidate.ops.erase(candidate.ops.begin() +
                                static_cast<std::ptrdiff_t>(i - 1));
            if (replay(candidate, variant, opt, nullptr)) {
                cur = std::move(candidate);
                progress = true;
            }
        }
    }
    return cur;
}

}  // namespace

std::string DiffReport::summary() const {
    std::ostringstream os;
    if (clean) {
        os << "clean (rng=" << rng << ")";
        return os.str();
    }
    for (const Divergence& d : divergences)
        os << variant_name(d.variant) << " diverged at op " << d.op_index
           << " (" << d.kind << "): " << d.detail << "\n";
    os << "rng=" << rng << "; minimized reproduction ("
       << minimized.ops.size() << " ops):\n" << minimized.to_text();
    return os.str();
}

DiffReport differential_run(const OpScript& script,
                            const std::vector<Variant>& variants,
                            const DiffOptions& options) {
    DiffReport report;
    report.rng = SplitMix64::name();
    StepTracking steps;

    for (Variant v : variants) {
        if (auto d = replay(script, v, options, &steps)) {
            report.clean = false;
            report.divergences.push_back(*d);
        }
    }
    report.worst_step_ratio = steps.worst_ratio;
    report.step_bound_violations = steps.violations;

    if (!report.clean && !options.no_shrink)
        report.minimized =
            shrink(script, report.divergences.front().variant, options);
    else if (!report.clean)
        report.minimized = script;
    return report;
}

}  // namespace rbt
