#include <doctest.h>

#include <random>

#include "thh/fp_linalg.hpp"

using namespace thh;

namespace {

// Oracle: textbook row reduction.
int naive_rank(std::vector<std::vector<i64>> a, i64 p) {
    int rank = 0;
    const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] % p) piv = r;
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        const i64 inv = invmod(a[rank][c], p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] % p == 0) continue;
            const i64 f = a[r][c] * inv % p;
            for (int k = 0; k < cols; ++k) a[r][k] = reduce(a[r][k] - f * a[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

SparseFpMatrix to_sparse(const std::vector<std::vector<i64>>& a) {
    SparseFpMatrix m;
    m.rows = static_cast<int>(a.size());
    m.cols = static_cast<int>(a[0].size());
    m.col.resize(m.cols);
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < m.rows; ++r)
            if (a[r][c]) m.col[c].push_back({r, static_cast<std::uint32_t>(a[r][c])});
    return m;
}

}  // namespace

TEST_CASE("rank_mod_p matches row reduction on random sparse matrices") {
    std::mt19937_64 rng(12345);
    for (i64 p : {2, 3, 5}) {
        for (int trial = 0; trial < 60; ++trial) {
            const int rows = 1 + rng() % 40, cols = 1 + rng() % 40;
            std::vector<std::vector<i64>> a(rows, std::vector<i64>(cols, 0));
            const int density = 1 + rng() % 5;
            for (auto& row : a)
                for (auto& x : row)
                    if (static_cast<int>(rng() % 10) < density) x = rng() % p;
            const int want = naive_rank(a, p);
            CHECK(rank_mod_p(to_sparse(a), p) == want);
            CHECK(rank_dense_mod_p(a, p) == want);
            auto ns = nullspace_mod_p(a, cols, p);
            CHECK(static_cast<int>(ns.size()) == cols - want);
            for (const auto& v : ns)
                for (const auto& row : a) {
                    i64 s = 0;
                    for (int c = 0; c < cols; ++c) s = (s + row[c] * v[c]) % p;
                    CHECK(s == 0);
                }
        }
    }
}

TEST_CASE("rank of the identity and the zero matrix") {
    std::vector<std::vector<i64>> id(7, std::vector<i64>(7, 0)), z(3, std::vector<i64>(5, 0));
    for (int i = 0; i < 7; ++i) id[i][i] = 1;
    CHECK(rank_mod_p(to_sparse(id), 2) == 7);
    CHECK(rank_mod_p(to_sparse(z), 3) == 0);
}
