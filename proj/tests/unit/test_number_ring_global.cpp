#include <doctest.h>

#include <random>

#include "thh/number_ring_global.hpp"

using namespace thh;

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

mpz_class det(Mat m) {
    // cofactor expansion; fine for the 3x3 and smaller minors used here
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    mpz_class s = 0;
    for (size_t c = 0; c < n; ++c) {
        Mat sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<mpz_class> row;
            for (size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(row);
        }
        s += (c % 2 ? -1 : 1) * m[0][c] * det(sub);
    }
    return s;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Oracle: invariant factors from determinantal divisors (gcd of k x k minors).
std::vector<mpz_class> snf_by_minors(const Mat& m) {
    const int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    std::vector<mpz_class> dk{1}, out;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        mpz_class g = 0;
        for (auto& r : rs)
            for (auto& c : cs) {
                Mat sub(k, std::vector<mpz_class>(k));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
                mpz_class d = det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            }
        if (g == 0) break;
        out.push_back(g / dk.back());
        dk.push_back(g);
    }
    return out;
}

GlobalAlgebraSpec fixE() {
    GlobalAlgebraSpec g;
    g.center.f = {0, 1};
    g.ramification.push_back({{2, 0}, 2, std::nullopt});
    return g;
}

}  // namespace

TEST_CASE("integer SNF agrees with determinantal divisors") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 1 + rng() % 3, c = 1 + rng() % 3;
        Mat m(r, std::vector<mpz_class>(c));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long>(rng() % 25) - 12;
        std::vector<mpz_class> want = snf_by_minors(m);
        CHECK(integer_snf(m) == want);
    }
}

TEST_CASE("prime factorization in V") {
    NumberRingSpec gi{{1, 0, 1}};
    PrimeDecomposition p5 = factor_prime(gi, 5);
    REQUIRE(p5.factors.size() == 2);
    CHECK(p5.factors[0].e == 1);
    CHECK(p5.factors[0].f == 1);
    PrimeDecomposition p2 = factor_prime(gi, 2);
    REQUIRE(p2.factors.size() == 1);
    CHECK(p2.factors[0].e == 2);
    CHECK(p2.factors[0].f == 1);
    CHECK(p2.p_maximal);
    PrimeDecomposition p3 = factor_prime(gi, 3);
    REQUIRE(p3.factors.size() == 1);
    CHECK(p3.factors[0].f == 2);
    CHECK(discriminant(gi) == -4);
    CHECK_THROWS_AS(factor_prime(NumberRingSpec{{-5, 0, 1}}, 2), not_p_maximal);
    CHECK(dedekind_p_maximal(NumberRingSpec{{-5, 0, 1}}, 5));
    CHECK_THROWS_AS(certify_irreducible(NumberRingSpec{{1, 0, 0, 0, 1}}), uncertified);
    CHECK_NOTHROW(certify_irreducible(NumberRingSpec{{-2, 0, 0, 1}}));
}

TEST_CASE("thh and hh of V") {
    NumberRingSpec z{{0, 1}}, gi{{1, 0, 1}};
    for (int a = 1; a <= 6; ++a) CHECK(thh_V(z, 2 * a - 1) == make_group(0, {a}));
    CHECK(thh_V(gi, 1) == make_group(0, {2, 2}));
    CHECK(thh_V(gi, 3).torsion_order() == 16);
    for (int i = 2; i <= 8; i += 2) CHECK(thh_V(gi, i) == AbelianGroupFG{});
    CHECK(thh_V(gi, 0) == make_group(2, {}));
    CHECK(hh_V(gi, 1) == make_group(0, {2, 2}));
    CHECK(hh_V(gi, 3) == make_group(0, {2, 2}));
    // cubic field: order of the odd groups is a^3 |disc|
    NumberRingSpec c{{-2, 0, 0, 1}};
    for (int a = 1; a <= 4; ++a) CHECK(thh_V(c, 2 * a - 1).torsion_order() == mpz_class(a * a * a * 108));
}

TEST_CASE("global groups of FIX-E") {
    GlobalAlgebraSpec g = fixE();
    CHECK(thh_U(g, 0) == make_group(1, {2}));
    CHECK(thh_U(g, 2) == make_group(0, {2}));
    CHECK(thh_U(g, 3) == make_group(0, {2}));
    CHECK(thh_U(g, 4) == make_group(0, {2}));
    CHECK(thh_U(g, 7) == make_group(0, {4}));
    CHECK(thh_U(g, 2).str() == "Z/2");
    CHECK(thh_U(g, 0).str() == "Z + Z/2");
    for (int i = 1; i <= 8; ++i) CHECK(local_global_consistency(g, i).ok);
}

TEST_CASE("no ramification gives thh of V") {
    GlobalAlgebraSpec g;
    g.center.f = {1, 0, 1};
    for (int i = 0; i <= 8; ++i) CHECK(thh_U(g, i) == thh_V(g.center, i));
    for (int i = 2; i <= 8; i += 2) {
        ConsistencyReport r = local_global_consistency(g, i);
        CHECK(r.ok);
    }
}

TEST_CASE("validation") {
    GlobalAlgebraSpec bad = fixE();
    bad.ramification[0].e = 1;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    GlobalAlgebraSpec idx = fixE();
    idx.ramification[0].id.index = 3;
    CHECK_THROWS(validate(idx));
    CHECK_THROWS_AS(validate(NumberRingSpec{{1, 2}}), std::invalid_argument);
}
