#include "verify/script.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "verify/rng.hpp"

namespace rbt {

std::string OpScript::to_text() const {
    std::ostringstream os;
    os << "SEED " << seed << "\n";
    for (const Op& op : ops)
        os << static_cast<char>(op.kind) << " " << op.key << "\n";
    return os.str();
}

std::optional<OpScript> OpScript::parse(const std::string& text,
                                        std::string* error) {
    auto fail = [&](std::size_t line_no,
                    const std::string& why) -> std::optional<OpScript> {
        if (error)
            *error = "line " + std::to_string(line_no) + ": " + why;
        return std::nullopt;
    };

    OpScript script;
    std::istringstream is(text);
    std::string line;
    std::size_t line_no = 0;
    bool seen_seed = false;
    while (std::getline(is, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "SEED") {
            std::uint64_t s;
            if (!(ls >> s)) return fail(line_no, "bad SEED value");
            script.seed = s;
            seen_seed = true;
            continue;
        }
        if (tag != "I" && tag != "D" && tag != "S")
            return fail(line_no, "unknown op '" + tag + "'");
        std::int64_t key;
        if (!(ls >> key)) return fail(line_no, "missing key");
        script.ops.push_back({static_cast<Op::Kind>(tag[0]), key});
    }
    if (!seen_seed && script.ops.empty())
        return fail(0, "empty script");
    return script;
}

OpScript random_script(std::uint64_t seed, std::size_t ops,
                       std::int64_t key_range) {
    SplitMix64 rng(seed);
    OpScript script;
    script.seed = seed;
    script.ops.reserve(ops);

    // Generation-time bookkeeping of keys believed live; replay never needs
    // it because every op is materialized.
    std::vector<std::int64_t> live;
    std::unordered_set<std::int64_t> live_set;

    for (std::size_t i = 0; i < ops; i++) {
        std::uint64_t dice = rng.below(100);
        auto random_key = [&] {
            return static_cast<std::int64_t>(
                rng.below(static_cast<std::uint64_t>(key_range)));
        };
        if (dice < 45) {
            std::int64_t k = random_key();
            script.ops.push_back({Op::Kind::Insert, k});
            if (live_set.insert(k).second) live.push_back(k);
        } else if (dice < 90) {
            std::int64_t k;
            if (!live.empty() && rng.below(2) == 0) {
                std::size_t at = rng.below(live.size());
                k = live[at];
                live[at] = live.back();
                live.pop_back();
                live_set.erase(k);
            } else {
                k = random_key();
                if (live_set.erase(k)) {
                    auto it = std::find(live.begin(), live.end(), k);
                    *it = live.back();
                    live.pop_back();
                }
            }
            script.ops.push_back({Op::Kind::Delete, k});
        } else {
            script.ops.push_back({Op::Kind::Search, random_key()});
        }
    }
    return script;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
random_key_orders(std::uint64_t seed, std::size_t n) {
    SplitMix64 rng(seed);
    std::vector<std::int64_t> insert_order;
    insert_order.reserve(n);
    std::unordered_set<std::int64_t> seen;
    seen.reserve(n * 2);
    while (insert_order.size() < n) {
        auto k = static_cast<std::int64_t>(rng.next());
        if (seen.insert(k).second) insert_order.push_back(k);
    }
    std::vector<std::int64_t> delete_order = insert_order;
    for (std::size_t i = delete_order.size(); i > 1; i--)
        std::swap(delete_order[i - 1], delete_order[rng.below(i)]);
    return {std::move(insert_order), std::move(delete_order)};
}

OpScript insert_delete_script(std::uint64_t seed, std::size_t n) {
    auto [ins, del] = random_key_orders(seed, n);
    OpScript script;
    script.seed = seed;
    script.ops.reserve(2 * n);
    for (std::int64_t k : ins) script.ops.push_back({Op::Kind::Insert, k});
    for (std::int64_t k : del) script.ops.push_back({Op::Kind::Delete, k});
    return script;
}

}  // namespace rbt
