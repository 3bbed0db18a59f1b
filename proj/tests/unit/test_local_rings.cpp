#include <doctest.h>

#include <random>

#include "thh/local_rings.hpp"

using namespace thh;

namespace {

Tower fix(const std::vector<std::vector<i64>>& P, i64 p, int n, int K = 0) { return Tower::make(p, 1, P, n, K); }

ChainRing::Elem random_elem(const ChainRing& R, std::mt19937_64& rng) {
    ChainRing::Elem x = R.zero();
    for (size_t j = 0; j < R.size() / R.D(); ++j) {
        WittRing::Elem w = R.W().zero();
        for (auto& c : w) c = static_cast<i64>(rng() % static_cast<u64>(ipow(R.p(), R.K())));
        R.set_coeff(x, static_cast<int>(j), w);
    }
    return x;
}

}  // namespace

TEST_CASE("towers from the fixture data") {
    Tower a = fix({{-3}, {1}}, 3, 2, 4), b = fix({{-3}, {0}, {1}}, 3, 2, 4), d = fix({{-2}, {0}, {1}}, 2, 3, 5);
    CHECK(a.d() == 1);
    CHECK(b.d() == 2);
    CHECK(d.d() == 2);
    CHECK(a.F_T().r() == 2);
    CHECK(d.F_T().r() == 3);
    // pi^2 = 3 in S for FIX-B
    const ChainRing& S = b.S();
    CHECK(S.mul(S.pi(), S.pi()) == S.from_int(3));
    CHECK_THROWS_AS(Tower::make(3, 1, {{-9}, {0}, {1}}, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Tower::make(4, 1, {{-4}, {1}}, 2, 0), std::invalid_argument);
}

TEST_CASE("valuations") {
    for (Tower t : {fix({{-3}, {1}}, 3, 2), fix({{-3}, {0}, {1}}, 3, 2), fix({{-2}, {0}, {1}}, 2, 3)}) {
        const ChainRing& S = t.S();
        CHECK(S.val(S.pi()) == 1);
        CHECK(S.val(S.from_int(t.p())) == t.d());
        CHECK(S.val(S.zero()) == S.cap());
        CHECK_FALSE(valuation_pi(S, S.zero()).has_value());
    }
}

TEST_CASE("different valuation") {
    CHECK(different_valuation(fix({{-3}, {1}}, 3, 2)) == 0);
    CHECK(different_valuation(fix({{-2}, {1}}, 2, 2)) == 0);
    CHECK(different_valuation(fix({{-3}, {0}, {1}}, 3, 2)) == 1);
    CHECK(different_valuation(fix({{-2}, {0}, {1}}, 2, 3, 2)) == 3);
}

TEST_CASE("ring axioms on random elements of T") {
    std::mt19937_64 rng(7);
    for (Tower t : {fix({{-3}, {0}, {1}}, 3, 2), fix({{-2}, {0}, {1}}, 2, 3)}) {
        const ChainRing& T = t.T();
        for (int i = 0; i < 20; ++i) {
            auto x = random_elem(T, rng), y = random_elem(T, rng), z = random_elem(T, rng);
            CHECK(T.mul(T.mul(x, y), z) == T.mul(x, T.mul(y, z)));
            CHECK(T.mul(x, T.add(y, z)) == T.add(T.mul(x, y), T.mul(x, z)));
            CHECK(T.mul(x, y) == T.mul(y, x));
            CHECK(T.mul(x, T.one()) == x);
        }
    }
}

TEST_CASE("sigma and trace") {
    std::mt19937_64 rng(11);
    Tower a = fix({{-3}, {1}}, 3, 2);
    const ChainRing& T = a.T();
    CHECK(a.sigma(T.one()) == T.one());
    CHECK(a.sigma(T.pi()) == T.pi());
    for (int i = 0; i < 20; ++i) {
        auto x = random_elem(T, rng);
        CHECK(a.sigma(a.sigma(x)) == x);
        CHECK(a.trace(a.sigma(x)) == a.trace(x));
    }
    for (Tower t : {a, fix({{-3}, {0}, {1}}, 3, 2), fix({{-2}, {0}, {1}}, 2, 3)}) {
        CHECK(trace_T_S(t, t.T().one()) == t.S().from_int(t.n()));
        // s_coords round trip and the trace of beta^k lies in S
        for (int k = 0; k < t.n(); ++k) CHECK(t.from_s_coords(t.s_coords(t.beta_pow(k))) == t.beta_pow(k));
    }
}

TEST_CASE("trace mod pi reaches every residue of S") {
    for (Tower t : {fix({{-3}, {1}}, 3, 2), fix({{-2}, {1}}, 2, 2), fix({{-2}, {0}, {1}}, 2, 3)}) {
        // the trace is S-linear, so a basis element with unit trace makes the residue map onto F_S
        bool unit = false;
        for (int k = 0; k < t.n(); ++k) unit = unit || t.S().val(trace_T_S(t, t.beta_pow(k))) == 0;
        CHECK(unit);
    }
}

TEST_CASE("precision change keeps the presentation") {
    Tower b = fix({{-3}, {0}, {1}}, 3, 2, 4);
    Tower b6 = b.with_precision(6);
    CHECK(b6.K() == 6);
    CHECK(b6.S().cap() == 12);
    CHECK(different_valuation(b6) == different_valuation(b));
}
