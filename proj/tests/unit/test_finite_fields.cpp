#include <doctest.h>

#include <set>

#include "thh/finite_fields.hpp"

using namespace thh;

namespace {

// Oracle: a polynomial of degree <= 3 is irreducible iff it has no root.
bool no_roots(const FpPoly& f, i64 p) {
    for (i64 x = 0; x < p; ++x) {
        i64 v = 0;
        for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        if (v == 0) return false;
    }
    return true;
}

// Oracle: smallest monic irreducible quadratic by root search, coefficient list compared low degree first.
FpPoly smallest_irreducible_quadratic(i64 p) {
    for (i64 c = 0; c < p; ++c)
        for (i64 b = 0; b < p; ++b) {
            FpPoly f{c, b, 1};
            if (no_roots(f, p)) return f;
        }
    return {};
}

}  // namespace

TEST_CASE("fq_make picks the smallest irreducible modulus") {
    CHECK(fq_make(3, 1).modulus() == FpPoly{0, 1});
    CHECK(fq_make(3, 2).modulus() == FpPoly{1, 0, 1});
    CHECK(fq_make(2, 2).modulus() == FpPoly{1, 1, 1});
    for (i64 p : {2, 3, 5, 7}) CHECK(fq_make(p, 2).modulus() == smallest_irreducible_quadratic(p));
}

TEST_CASE("is_irreducible agrees with root search in degrees 2 and 3") {
    for (i64 p : {2, 3, 5})
        for (int deg : {2, 3}) {
            const int count = deg == 2 ? p * p : p * p * p;
            for (int idx = 0; idx < count; ++idx) {
                FpPoly f(deg + 1, 0);
                int x = idx;
                for (int i = 0; i < deg; ++i, x /= static_cast<int>(p)) f[i] = x % p;
                f[deg] = 1;
                CHECK(fp::is_irreducible(f, p) == no_roots(f, p));
            }
        }
}

TEST_CASE("frobenius and trace in F_9") {
    FqField F = fq_make(3, 2);
    FqElem t = F.gen();
    CHECK(frobenius(F, F.one(), 1) == F.one());
    CHECK(frobenius(F, t, 1) == F.neg(t));
    CHECK(trace_rel(F, F.one(), 1) == F.from_int(2));
    CHECK(F.is_zero(trace_rel(F, t, 1)));
    for (u64 i = 0; i < F.size(); ++i) {
        FqElem x = F.element(i);
        CHECK(frobenius(F, x, 2) == x);
        CHECK(frobenius(F, x, 1) == F.pow(x, 3));
    }
}

TEST_CASE("trace onto the prime field is surjective") {
    for (auto [p, r] : {std::pair<i64, int>{2, 3}, {3, 2}, {5, 2}}) {
        FqField F = fq_make(p, r);
        std::set<std::vector<i64>> image;
        for (u64 i = 0; i < F.size(); ++i) image.insert(trace_rel(F, F.element(i), 1).c);
        CHECK(image.size() == static_cast<size_t>(p));
    }
}

TEST_CASE("field axioms on F_8 and F_25") {
    for (auto [p, r] : {std::pair<i64, int>{2, 3}, {5, 2}}) {
        FqField F = fq_make(p, r);
        for (u64 i = 1; i < F.size(); ++i) {
            FqElem x = F.element(i);
            CHECK(F.mul(x, F.inv(x)) == F.one());
            CHECK(F.pow(x, F.size() - 1) == F.one());
        }
    }
}

TEST_CASE("factor_poly examples and products") {
    auto f5 = factor_poly({1, 0, 1}, 5);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].first == FpPoly{2, 1});
    CHECK(f5.factors[1].first == FpPoly{3, 1});
    auto f3 = factor_poly({1, 0, 1}, 3);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].second == 1);
    auto f2 = factor_poly({0, 0, 1}, 2);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == FpPoly{0, 1});
    CHECK(f2.factors[0].second == 2);

    // product of the factors reproduces the input
    for (i64 p : {2, 3, 7}) {
        FpPoly f{1, 3, 0, 5, 2, 0, 1};
        f = fp::from_ints(f, p);
        auto fac = factor_poly(f, p);
        FpPoly prod{fac.lead};
        for (auto& [g, m] : fac.factors) {
            CHECK(fp::is_irreducible(g, p));
            for (int k = 0; k < m; ++k) prod = fp::mul(prod, g, p);
        }
        CHECK(prod == f);
    }
}
