#include "thh/finite_fields.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace thh {
namespace fp {

using thh::mulmod;
using thh::powmod;

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly from_ints(const std::vector<i64>& c, i64 p) {
    FpPoly f(c.size());
    for (size_t i = 0; i < c.size(); ++i) f[i] = reduce(c[i], p);
    trim(f);
    return f;
}

FpPoly add(const FpPoly& a, const FpPoly& b, i64 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, i64 p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = reduce(r[i] - b[i], p);
    trim(r);
    return r;
}

FpPoly scale(const FpPoly& a, i64 c, i64 p) {
    FpPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], reduce(c, p), p);
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

void divmod(const FpPoly& a, const FpPoly& b, i64 p, FpPoly& q, FpPoly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    int db = deg(b);
    if (deg(a) < db) {
        q.clear();
        return;
    }
    q.assign(a.size() - b.size() + 1, 0);
    i64 li = invmod(b.back(), p);
    for (int i = deg(r); i >= db; --i) {
        i64 c = mulmod(r[i], li, p);
        q[i - db] = c;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] = reduce(r[i - db + j] - mulmod(c, b[j], p), p);
    }
    trim(q);
    trim(r);
}

FpPoly mod(const FpPoly& a, const FpPoly& b, i64 p) {
    FpPoly q, r;
    divmod(a, b, p, q, r);
    return r;
}

FpPoly div(const FpPoly& a, const FpPoly& b, i64 p) {
    FpPoly q, r;
    divmod(a, b, p, q, r);
    return q;
}

FpPoly monic(const FpPoly& a, i64 p) {
    if (a.empty()) return a;
    return scale(a, invmod(a.back(), p), p);
}

FpPoly gcd(FpPoly a, FpPoly b, i64 p) {
    while (!b.empty()) {
        FpPoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

FpPoly deriv(const FpPoly& a, i64 p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], static_cast<i64>(i) % p, p);
    trim(r);
    return r;
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, i64 p) { return mod(mul(a, b, p), m, p); }

FpPoly powmod(FpPoly base, u64 e, const FpPoly& m, i64 p) {
    FpPoly r = mod(FpPoly{1}, m, p);
    base = mod(base, m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

namespace {
// x^(p^k) mod m
FpPoly frob_x(const FpPoly& m, i64 p, int k) {
    FpPoly h = mod(FpPoly{0, 1}, m, p);
    for (int i = 0; i < k; ++i) h = powmod(h, static_cast<u64>(p), m, p);
    return h;
}
}  // namespace

bool is_irreducible(const FpPoly& f0, i64 p) {
    FpPoly f = monic(f0, p);
    int n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const FpPoly x{0, 1};
    if (sub(frob_x(f, p, n), mod(x, f, p), p) != FpPoly{}) return false;
    for (i64 q : prime_factors(n)) {
        FpPoly g = gcd(f, sub(frob_x(f, p, n / static_cast<int>(q)), x, p), p);
        if (deg(g) != 0) return false;
    }
    return true;
}

}  // namespace fp

namespace {

using namespace fp;

void squarefree(const FpPoly& f, int mult, i64 p, std::vector<std::pair<FpPoly, int>>& out) {
    if (deg(f) <= 0) return;
    FpPoly df = deriv(f, p);
    auto pth_root = [&](const FpPoly& g) {
        FpPoly h;
        for (size_t i = 0; i < g.size(); i += static_cast<size_t>(p)) h.push_back(g[i]);
        trim(h);
        return h;
    };
    if (df.empty()) {
        squarefree(pth_root(f), mult * static_cast<int>(p), p, out);
        return;
    }
    FpPoly c = gcd(f, df, p);
    FpPoly w = div(f, c, p);
    int i = 1;
    while (deg(w) > 0) {
        FpPoly y = gcd(w, c, p);
        FpPoly z = div(w, y, p);
        if (deg(z) > 0) out.emplace_back(monic(z, p), mult * i);
        ++i;
        w = y;
        c = div(c, y, p);
    }
    if (deg(c) > 0) squarefree(pth_root(c), mult * static_cast<int>(p), p, out);
}

void equal_degree(const FpPoly& f, int d, i64 p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    int n = deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        FpPoly a(n);
        for (auto& c : a) c = static_cast<i64>(rng() % static_cast<u64>(p));
        trim(a);
        if (deg(a) < 1) continue;
        FpPoly s = a, t = a;
        FpPoly g;
        if (p == 2) {
            for (int i = 1; i < d; ++i) {
                t = mulmod(t, t, f, p);
                s = add(s, t, p);
            }
            g = gcd(f, s, p);
        } else {
            for (int i = 1; i < d; ++i) {
                t = powmod(t, static_cast<u64>(p), f, p);
                s = mulmod(s, t, f, p);
            }
            FpPoly b = powmod(s, static_cast<u64>((p - 1) / 2), f, p);
            g = gcd(f, sub(b, FpPoly{1}, p), p);
        }
        if (deg(g) > 0 && deg(g) < n) {
            equal_degree(g, d, p, rng, out);
            equal_degree(div(f, g, p), d, p, rng, out);
            return;
        }
    }
}

void distinct_degree(FpPoly f, i64 p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    const FpPoly x{0, 1};
    FpPoly h = mod(x, f, p);
    int d = 0;
    while (2 * (d + 1) <= deg(f)) {
        ++d;
        h = powmod(h, static_cast<u64>(p), f, p);
        FpPoly g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) {
            equal_degree(g, d, p, rng, out);
            f = div(f, g, p);
            h = mod(h, f, p);
        }
    }
    if (deg(f) > 0) out.push_back(monic(f, p));
}

bool factor_less(const std::pair<FpPoly, int>& a, const std::pair<FpPoly, int>& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
}

}  // namespace

FpPolyFactorization factor_poly(const FpPoly& f0, i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("factor_poly: p is not prime");
    FpPoly f = f0;
    for (auto& c : f) c = reduce(c, p);
    trim(f);
    if (f.empty()) throw std::invalid_argument("factor_poly: zero polynomial");
    FpPolyFactorization res;
    res.lead = f.back();
    f = monic(f, p);
    std::vector<std::pair<FpPoly, int>> parts;
    squarefree(f, 1, p, parts);
    std::mt19937_64 rng(0x7468685f73656564ULL);
    for (auto& [g, m] : parts) {
        std::vector<FpPoly> irr;
        distinct_degree(g, p, rng, irr);
        for (auto& h : irr) res.factors.emplace_back(monic(h, p), m);
    }
    std::sort(res.factors.begin(), res.factors.end(), factor_less);
    return res;
}

FqField::FqField(i64 p, FpPoly modulus) : p_(p), mod_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("FqField: p is not prime");
    fp::trim(mod_);
    r_ = fp::deg(mod_);
    if (r_ < 1 || mod_.back() != 1) throw std::invalid_argument("FqField: modulus must be monic of degree >= 1");
}

u64 FqField::size() const { return static_cast<u64>(ipow(p_, r_)); }

FqElem FqField::zero() const { return FqElem{std::vector<i64>(r_, 0)}; }

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::gen() const { return from_poly(FpPoly{0, 1}); }

FqElem FqField::from_int(i64 a) const {
    FqElem e = zero();
    e.c[0] = reduce(a, p_);
    return e;
}

FqElem FqField::from_poly(const FpPoly& f) const {
    FpPoly g = fp::mod(fp::from_ints(f, p_), mod_, p_);
    FqElem e = zero();
    for (size_t i = 0; i < g.size(); ++i) e.c[i] = g[i];
    return e;
}

FqElem FqField::element(u64 index) const {
    FqElem e = zero();
    for (int i = 0; i < r_; ++i) {
        e.c[i] = static_cast<i64>(index % static_cast<u64>(p_));
        index /= static_cast<u64>(p_);
    }
    return e;
}

bool FqField::is_zero(const FqElem& x) const {
    for (i64 c : x.c)
        if (c) return false;
    return true;
}

FqElem FqField::add(const FqElem& a, const FqElem& b) const {
    FqElem e = zero();
    for (int i = 0; i < r_; ++i) e.c[i] = (a.c[i] + b.c[i]) % p_;
    return e;
}

FqElem FqField::sub(const FqElem& a, const FqElem& b) const {
    FqElem e = zero();
    for (int i = 0; i < r_; ++i) e.c[i] = reduce(a.c[i] - b.c[i], p_);
    return e;
}

FqElem FqField::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FqField::scale(const FqElem& a, i64 c) const {
    FqElem e = zero();
    for (int i = 0; i < r_; ++i) e.c[i] = mulmod(a.c[i], reduce(c, p_), p_);
    return e;
}

FqElem FqField::mul(const FqElem& a, const FqElem& b) const {
    std::vector<i64> t(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < r_; ++j) t[i + j] = (t[i + j] + mulmod(a.c[i], b.c[j], p_)) % p_;
    }
    for (int k = 2 * r_ - 2; k >= r_; --k) {
        i64 c = t[k];
        if (!c) continue;
        for (int j = 0; j < r_; ++j) t[k - r_ + j] = reduce(t[k - r_ + j] - mulmod(c, mod_[j], p_), p_);
        t[k] = 0;
    }
    FqElem e = zero();
    for (int i = 0; i < r_; ++i) e.c[i] = t[i];
    return e;
}

FqElem FqField::pow(const FqElem& a, u64 e) const {
    FqElem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FqElem FqField::inv(const FqElem& a) const {
    // extended Euclid: s*a + t*mod = 1
    FpPoly r0 = mod_, r1 = fp::from_ints(a.c, p_);
    if (r1.empty()) throw std::domain_error("FqField::inv: zero");
    FpPoly s0{}, s1{1};
    while (!r1.empty()) {
        FpPoly q, r;
        fp::divmod(r0, r1, p_, q, r);
        FpPoly s = fp::sub(s0, fp::mul(q, s1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant
    return from_poly(fp::scale(s0, invmod(r0[0], p_), p_));
}

FqField fq_make(i64 p, int r) {
    if (!is_prime(p)) throw std::invalid_argument("fq_make: p is not prime");
    if (p >= (i64(1) << 31)) throw std::invalid_argument("fq_make: p must be below 2^31");
    if (r < 1) throw std::invalid_argument("fq_make: r must be >= 1");
    // odometer over (c_0, ..., c_{r-1}) with c_0 most significant
    std::vector<i64> c(r, 0);
    for (;;) {
        FpPoly f(c.begin(), c.end());
        f.push_back(1);
        if (fp::is_irreducible(f, p)) return FqField(p, f);
        int i = r - 1;
        while (i >= 0 && ++c[i] == p) c[i--] = 0;
        if (i < 0) throw std::logic_error("fq_make: no irreducible polynomial found");
    }
}

FqElem frobenius(const FqField& F, const FqElem& x, int k) {
    k %= F.r();
    if (k < 0) k += F.r();
    FqElem y = x;
    for (int i = 0; i < k; ++i) y = F.pow(y, static_cast<u64>(F.p()));
    return y;
}

FqElem trace_rel(const FqField& F, const FqElem& x, int sub_r) {
    if (sub_r < 1 || F.r() % sub_r != 0) throw std::invalid_argument("trace_rel: sub_r must divide r");
    FqElem s = F.zero(), y = x;
    for (int i = 0; i < F.r() / sub_r; ++i) {
        s = F.add(s, y);
        y = frobenius(F, y, sub_r);
    }
    return s;
}

}  // namespace thh
