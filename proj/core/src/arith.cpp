#include "thh/arith.hpp"

#include <cstdlib>

namespace thh {

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 ipow(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (b != 0 && r > (i64(1) << 62) / std::llabs(b)) throw std::overflow_error("ipow overflow");
        r *= b;
    }
    return r;
}

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<__int128>(a) * b % m); }

i64 reduce(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

i64 powmod(i64 a, u64 e, i64 m) {
    i64 r = 1 % m;
    a = reduce(a, m);
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, y = 1, aa = reduce(a, m);
    while (aa) {
        i64 q = g / aa;
        i64 t = g - q * aa; g = aa; aa = t;
        t = x - q * y; x = y; y = t;
    }
    if (g != 1) throw std::domain_error("invmod: not a unit");
    return reduce(x, m);
}

int vp(i64 x, i64 p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    n = std::llabs(n);
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace thh
