#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperdeg {

// Exit-code classes used by the CLI: 1 / 2 / 3.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// A violated "can never happen" check: either a bug or a falsified claim.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > UINT64_MAX / num)
            throw BudgetError("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                              ") overflows 64 bits");
        r = r * num / i;  // divisible at each step: r is C(n-k+i, i)
    }
    return r;
}

// 64-bit FNV-1a, used for cache payload digests.
inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

inline long long vector_sum(const std::vector<int>& v) {
    long long s = 0;
    for (int x : v) s += x;
    return s;
}

}  // namespace hyperdeg
