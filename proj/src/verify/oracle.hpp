#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace rbt {

// Reference ordered set: a plain sorted vector. Slow on purpose — every
// operation is obviously correct by inspection, which is the whole point of
// checking the trees against it.
class OracleSet {
public:
    bool insert(std::int64_t key) {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
        if (it != keys_.end() && *it == key) return false;
        keys_.insert(it, key);
        return true;
    }

    bool erase(std::int64_t key) {
        auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
        if (it == keys_.end() || *it != key) return false;
        keys_.erase(it);
        return true;
    }

    bool contains(std::int64_t key) const {
        return std::binary_search(keys_.begin(), keys_.end(), key);
    }

    std::size_t size() const { return keys_.size(); }
    const std::vector<std::int64_t>& contents() const { return keys_; }

private:
    std::vector<std::int64_t> keys_;
};

}  // namespace rbt
