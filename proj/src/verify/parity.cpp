#include "verify/parity.hpp"

#include <sstream>

#include "core/tree.hpp"
#include "verify/rng.hpp"
#include "verify/script.hpp"

namespace rbt {

ParityReport paired_rotation_check(std::size_t n, std::uint64_t seed) {
    ParityReport report;
    auto [ins, del] = random_key_orders(seed, n);

    Tree a(Variant::RB);
    Tree b(Variant::RB234);

    auto step = [&](std::int64_t key, bool deleting,
                    const char* phase) -> bool {
        std::uint64_t ra0 = a.stats().rotations;
        std::uint64_t rb0 = b.stats().rotations;
        if (deleting) {
            a.erase(key);
            b.erase(key);
        } else {
            a.insert(key);
            b.insert(key);
        }
        std::uint64_t ra = a.stats().rotations - ra0;
        std::uint64_t rb = b.stats().rotations - rb0;
        if (ra == rb) return true;
        std::ostringstream os;
        os << "rotation counts split on " << phase << " of key " << key
           << ": rb=" << ra << " rb234=" << rb << "\n"
           << "rb tree:\n" << a.to_dot() << "rb234 tree:\n" << b.to_dot();
        report.ok = false;
        report.message = os.str();
        return false;
    };

    for (std::int64_t k : ins)
        if (!step(k, false, "insert")) return report;
    if (!a.same_shape(b)) {
        report.ok = false;
        report.message = "shapes differ after the insert phase\nrb tree:\n" +
                         a.to_dot() + "rb234 tree:\n" + b.to_dot();
        return report;
    }
    for (std::int64_t k : del)
        if (!step(k, true, "delete")) return report;
    if (a.stats().rotations != b.stats().rotations) {
        report.ok = false;
        report.message = "cumulative rotation totals differ";
        return report;
    }
    if (!a.same_shape(b)) {
        report.ok = false;
        report.message = "final shapes differ\nrb tree:\n" + a.to_dot() +
                         "rb234 tree:\n" + b.to_dot();
    }
    return report;
}

ParityReport shared_tree_delete_check(std::size_t tree_size,
                                      std::size_t trials,
                                      std::uint64_t seed) {
    ParityReport report;
    SplitMix64 rng(seed);

    for (std::size_t trial = 0; trial < trials; trial++) {
        auto [keys, unused] = random_key_orders(rng.next(), tree_size);
        Tree built(Variant::RB23);
        for (std::int64_t k : keys) built.insert(k);

        // A valid 2-3 tree is also a valid classic tree, so both delete
        // algorithms start from the identical structure.
        Tree classic = built.clone_as(Variant::RB);
        Tree parity = built.clone_as(Variant::RB23);
        std::int64_t victim = keys[rng.below(keys.size())];

        classic.erase(victim);
        parity.erase(victim);
        if (classic.stats().rotations != parity.stats().rotations) {
            std::ostringstream os;
            os << "trial " << trial << ": deleting " << victim
               << " cost rb=" << classic.stats().rotations
               << " rotations vs rb23=" << parity.stats().rotations << "\n"
               << "rb result:\n" << classic.to_dot() << "rb23 result:\n"
               << parity.to_dot();
            report.ok = false;
            report.message = os.str();
            return report;
        }
    }
    return report;
}

}  // namespace rbt
