#ifndef QLINES_UTIL_HPP
#define QLINES_UTIL_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qlines {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct Config {
    u64 seed = 0;             // drives equal-degree splitting and sampling
    unsigned max_degree = 4;  // default sweep tower depth K
    bool force_sweep = false; // override the per-cell work bound
};

inline unsigned thread_count() {
    if (const char* env = std::getenv("QLINES_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Chunked index-parallel loop. Results must be merged deterministically by
// the caller; body(i) must not touch shared mutable state without locking.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned nt = thread_count();
    if (nt <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

inline u64 fnv1a(const void* data, std::size_t len, u64 h = 14695981039346656037ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline u64 fnv1a(const std::string& s, u64 h = 14695981039346656037ull) {
    return fnv1a(s.data(), s.size(), h);
}

} // namespace qlines

#endif
