#include "thh/fp_linalg.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace thh {

namespace {

int rank_gf2(std::vector<std::vector<u64>>& rows, int ncols) {
    const int words = (ncols + 63) / 64;
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        const int w = c >> 6;
        const u64 bit = u64(1) << (c & 63);
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r][w] & bit) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        const u64* src = rows[rank].data();
        for (int r = rank + 1; r < nrows; ++r) {
            if (!(rows[r][w] & bit)) continue;
            u64* dst = rows[r].data();
            for (int k = w; k < words; ++k) dst[k] ^= src[k];
        }
        ++rank;
    }
    return rank;
}

template <typename T>
int rank_small_p(std::vector<std::vector<T>>& rows, int ncols, int p) {
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> inv(p, 0);
    for (int a = 1; a < p; ++a) inv[a] = static_cast<int>(invmod(a, p));
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        auto& src = rows[rank];
        const int s = inv[src[c]];
        for (int k = c; k < ncols; ++k) src[k] = static_cast<T>((src[k] * s) % p);
        for (int r = rank + 1; r < nrows; ++r) {
            const int f = rows[r][c];
            if (!f) continue;
            const int g = p - f;
            T* dst = rows[r].data();
            for (int k = c; k < ncols; ++k) dst[k] = static_cast<T>((dst[k] + g * src[k]) % p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_mod_p(const SparseFpMatrix& m, i64 p, RankStats* stats) {
    const int R = m.rows, C = m.cols;
    std::vector<std::vector<int>> rowadj(R);
    std::vector<int> rowcnt(R, 0), colcnt(C, 0);
    std::vector<char> rowalive(R, 1), colalive(C, 1);
    for (int c = 0; c < C; ++c) {
        for (auto& [r, v] : m.col[c]) {
            rowadj[r].push_back(c);
            ++rowcnt[r];
        }
        colcnt[c] = static_cast<int>(m.col[c].size());
    }
    int rank = 0;
    std::deque<int> cq, rq;
    for (int c = 0; c < C; ++c) {
        if (colcnt[c] == 0) colalive[c] = 0;
        else if (colcnt[c] == 1) cq.push_back(c);
    }
    for (int r = 0; r < R; ++r) {
        if (rowcnt[r] == 0) rowalive[r] = 0;
        else if (rowcnt[r] == 1) rq.push_back(r);
    }
    auto kill_row = [&](int r) {
        rowalive[r] = 0;
        for (int c : rowadj[r]) {
            if (!colalive[c]) continue;
            if (--colcnt[c] == 0) colalive[c] = 0;
            else if (colcnt[c] == 1) cq.push_back(c);
        }
    };
    auto kill_col = [&](int c) {
        colalive[c] = 0;
        for (auto& [r, v] : m.col[c]) {
            if (!rowalive[r]) continue;
            if (--rowcnt[r] == 0) rowalive[r] = 0;
            else if (rowcnt[r] == 1) rq.push_back(r);
        }
    };
    while (!cq.empty() || !rq.empty()) {
        if (!cq.empty()) {
            int c = cq.front();
            cq.pop_front();
            if (!colalive[c] || colcnt[c] != 1) continue;
            int row = -1;
            for (auto& [r, v] : m.col[c])
                if (rowalive[r]) row = r;
            ++rank;
            colalive[c] = 0;
            kill_row(row);
        } else {
            int r = rq.front();
            rq.pop_front();
            if (!rowalive[r] || rowcnt[r] != 1) continue;
            int colx = -1;
            for (int c : rowadj[r])
                if (colalive[c]) colx = c;
            ++rank;
            rowalive[r] = 0;
            kill_col(colx);
        }
    }

    std::vector<int> rmap(R, -1);
    int nr = 0, nc = 0;
    for (int r = 0; r < R; ++r)
        if (rowalive[r]) rmap[r] = nr++;
    std::vector<int> alive_cols;
    for (int c = 0; c < C; ++c)
        if (colalive[c]) alive_cols.push_back(c);
    nc = static_cast<int>(alive_cols.size());
    if (stats) *stats = {rank, nr, nc};
    if (nr == 0 || nc == 0) return rank;
    // the dense core: vectors indexed by the shorter side
    const bool by_cols = nc >= nr;  // one vector per column, length nr
    const int nvec = by_cols ? nc : nr, len = by_cols ? nr : nc;
    if (static_cast<double>(nvec) * len > 4e9) throw std::length_error("rank_mod_p: dense core too large");
    if (p == 2) {
        std::vector<std::vector<u64>> vecs(nvec, std::vector<u64>((len + 63) / 64, 0));
        for (int k = 0; k < nc; ++k)
            for (auto& [r, v] : m.col[alive_cols[k]]) {
                if (rmap[r] < 0) continue;
                int a = by_cols ? k : rmap[r], b = by_cols ? rmap[r] : k;
                vecs[a][b >> 6] ^= u64(1) << (b & 63);
            }
        return rank + rank_gf2(vecs, len);
    }
    if (p < 128) {
        std::vector<std::vector<std::uint8_t>> vecs(nvec, std::vector<std::uint8_t>(len, 0));
        for (int k = 0; k < nc; ++k)
            for (auto& [r, v] : m.col[alive_cols[k]]) {
                if (rmap[r] < 0) continue;
                int a = by_cols ? k : rmap[r], b = by_cols ? rmap[r] : k;
                vecs[a][b] = static_cast<std::uint8_t>((vecs[a][b] + v) % p);
            }
        return rank + rank_small_p(vecs, len, static_cast<int>(p));
    }
    std::vector<std::vector<i64>> rows(nvec, std::vector<i64>(len, 0));
    for (int k = 0; k < nc; ++k)
        for (auto& [r, v] : m.col[alive_cols[k]]) {
            if (rmap[r] < 0) continue;
            int a = by_cols ? k : rmap[r], b = by_cols ? rmap[r] : k;
            rows[a][b] = (rows[a][b] + v) % p;
        }
    return rank + rank_dense_mod_p(std::move(rows), p);
}

int rank_dense_mod_p(std::vector<std::vector<i64>> rows, i64 p) {
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    if (nrows == 0) return 0;
    const int ncols = static_cast<int>(rows[0].size());
    for (auto& row : rows)
        for (auto& v : row) v = reduce(v, p);
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        i64 s = invmod(rows[rank][c], p);
        for (int k = c; k < ncols; ++k) rows[rank][k] = mulmod(rows[rank][k], s, p);
        for (int r = rank + 1; r < nrows; ++r) {
            i64 f = rows[r][c];
            if (!f) continue;
            for (int k = c; k < ncols; ++k) rows[r][k] = reduce(rows[r][k] - mulmod(f, rows[rank][k], p), p);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<i64>> nullspace_mod_p(std::vector<std::vector<i64>> rows, int ncols, i64 p) {
    for (auto& row : rows)
        for (auto& v : row) v = reduce(v, p);
    std::vector<int> pivcol;
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        i64 s = invmod(rows[rank][c], p);
        for (int k = 0; k < ncols; ++k) rows[rank][k] = mulmod(rows[rank][k], s, p);
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || !rows[r][c]) continue;
            i64 f = rows[r][c];
            for (int k = 0; k < ncols; ++k) rows[r][k] = reduce(rows[r][k] - mulmod(f, rows[rank][k], p), p);
        }
        pivcol.push_back(c);
        ++rank;
    }
    std::vector<char> is_piv(ncols, 0);
    for (int c : pivcol) is_piv[c] = 1;
    std::vector<std::vector<i64>> basis;
    for (int fcol = 0; fcol < ncols; ++fcol) {
        if (is_piv[fcol]) continue;
        std::vector<i64> v(ncols, 0);
        v[fcol] = 1;
        for (int i = 0; i < rank; ++i) v[pivcol[i]] = reduce(-rows[i][fcol], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace thh
