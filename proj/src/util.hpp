#ifndef IRVZONES_SRC_UTIL_HPP
#define IRVZONES_SRC_UTIL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace irvz {

// Insert-only map from uint64 keys to dense uint32 indices. Open addressing
// with generation stamps so reset() is O(1); sized for hot DP loops where
// clearing a std::unordered_map every layer would dominate.
class KeyIndex {
public:
    KeyIndex() { rehash(64); }

    void reset() {
        ++epoch_;
        count_ = 0;
        if (epoch_ == 0) {  // stamp wrap: force full clear
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }

    // Returns the index assigned to key; sets inserted for first sightings.
    std::uint32_t insert(std::uint64_t key, std::uint32_t next_index,
                         bool& inserted) {
        if (count_ * 10 >= slots_.size() * 7) grow();
        std::size_t mask = slots_.size() - 1;
        std::size_t pos = mix(key) & mask;
        while (true) {
            if (stamp_[pos] != epoch_) {
                stamp_[pos] = epoch_;
                slots_[pos] = key;
                vals_[pos] = next_index;
                ++count_;
                inserted = true;
                return next_index;
            }
            if (slots_[pos] == key) {
                inserted = false;
                return vals_[pos];
            }
            pos = (pos + 1) & mask;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    void rehash(std::size_t n) {
        slots_.assign(n, 0);
        vals_.assign(n, 0);
        stamp_.assign(n, 0);
        epoch_ = 1;
        count_ = 0;
    }

    void grow() {
        std::vector<std::uint64_t> keys;
        std::vector<std::uint32_t> vals;
        keys.reserve(count_);
        vals.reserve(count_);
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (stamp_[i] == epoch_) {
                keys.push_back(slots_[i]);
                vals.push_back(vals_[i]);
            }
        }
        rehash(slots_.size() * 2);
        std::size_t mask = slots_.size() - 1;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            std::size_t pos = mix(keys[i]) & mask;
            while (stamp_[pos] == epoch_) pos = (pos + 1) & mask;
            stamp_[pos] = epoch_;
            slots_[pos] = keys[i];
            vals_[pos] = vals[i];
            ++count_;
        }
    }

    std::vector<std::uint64_t> slots_;
    std::vector<std::uint32_t> vals_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::size_t count_ = 0;
};

// Runs fn(item, worker) for item in [0, count). Results must not depend on
// the worker assignment; with jobs <= 1 everything runs on worker 0.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t, int)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    int workers = static_cast<int>(
        std::min<std::size_t>(count, static_cast<std::size_t>(jobs)));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i, w);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace irvz

#endif
