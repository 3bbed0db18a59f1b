#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace thh {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Thrown when a finite-precision or brute-force cross-check disagrees.
class verification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_prime(i64 n);
i64 ipow(i64 b, int e);  // throws on overflow past 2^62
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, u64 e, i64 m);
i64 invmod(i64 a, i64 m);
i64 reduce(i64 a, i64 m);  // into [0, m)
int vp(i64 x, i64 p);      // x != 0
std::vector<i64> prime_factors(i64 n);  // distinct, ascending; |n| >= 1

}  // namespace thh
