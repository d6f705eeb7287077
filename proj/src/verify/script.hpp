#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rbt {

// A replayable operation sequence. The text form is line oriented:
//
//   SEED 42
//   I 17
//   D 17
//   S 3
//
// `SEED` records the generator seed the script came from (0 for hand-written
// scripts); I/D/S are insert, delete and search.
struct Op {
    enum class Kind : char { Insert = 'I', Delete = 'D', Search = 'S' };
    Kind kind;
    std::int64_t key;
    friend bool operator==(const Op&, const Op&) = default;
};

struct OpScript {
    std::uint64_t seed = 0;
    std::vector<Op> ops;

    std::string to_text() const;
    static std::optional<OpScript> parse(const std::string& text,
                                         std::string* error = nullptr);
};

// Mixed workload over [0, key_range): 45% inserts, 45% deletes, 10%
// searches. Half of the deletes target keys believed live so the tree keeps
// real substance to tear down; the rest probe arbitrary keys, hitting the
// not-found paths. Same seed, same script, on any platform.
OpScript random_script(std::uint64_t seed, std::size_t ops,
                       std::int64_t key_range);

// Table-style workload: n distinct keys inserted in random order, then
// deleted in an independent random order.
OpScript insert_delete_script(std::uint64_t seed, std::size_t n);

// The n distinct keys and both orders, for callers that drive trees
// directly. Insertion order is the first vector; deletion order the second.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
random_key_orders(std::uint64_t seed, std::size_t n);

}  // namespace rbt
