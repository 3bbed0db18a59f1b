#include "thh/chain_homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace thh {

CMatrix identity(int n, const ChainRing& R) {
    CMatrix m(n, n, R);
    for (int i = 0; i < n; ++i) m.at(i, i) = R.one();
    return m;
}

CMatrix matmul(const CMatrix& x, const CMatrix& y, const ChainRing& R) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: shape mismatch");
    CMatrix z(x.rows, y.cols, R);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (R.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j) {
                const auto& ykj = y.at(k, j);
                if (R.is_zero(ykj)) continue;
                z.at(i, j) = R.add(z.at(i, j), R.mul(xik, ykj));
            }
        }
    return z;
}

CMatrix hcat(const CMatrix& x, const CMatrix& y, const ChainRing& R) {
    if (x.rows != y.rows) throw std::invalid_argument("hcat: row mismatch");
    CMatrix z(x.rows, x.cols + y.cols, R);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
    }
    return z;
}

CMatrix row_range(const CMatrix& x, int r0, int r1, const ChainRing& R) {
    CMatrix z(r1 - r0, x.cols, R);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < x.cols; ++j) z.at(i - r0, j) = x.at(i, j);
    return z;
}

CMatrix col_range(const CMatrix& x, int c0, int c1, const ChainRing& R) {
    CMatrix z(x.rows, c1 - c0, R);
    for (int i = 0; i < x.rows; ++i)
        for (int j = c0; j < c1; ++j) z.at(i, j - c0) = x.at(i, j);
    return z;
}

CMatrix truncate(const CMatrix& x, const ChainRing& from, const ChainRing& to) {
    CMatrix z(x.rows, x.cols, to);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = from.truncate(x.a[i], to);
    return z;
}

bool is_zero(const CMatrix& x, const ChainRing& R) {
    return std::all_of(x.a.begin(), x.a.end(), [&](const ChainRing::Elem& e) { return R.is_zero(e); });
}

bool equal(const CMatrix& x, const CMatrix& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }

namespace {

struct Elim {
    const ChainRing& R;
    CMatrix A;
    bool tr;
    CMatrix P, Q, U, V;

    Elim(const CMatrix& m, const ChainRing& ring, bool transforms) : R(ring), A(m), tr(transforms) {
        if (tr) {
            P = identity(m.rows, R);
            U = identity(m.rows, R);
            Q = identity(m.cols, R);
            V = identity(m.cols, R);
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
        if (!tr) return;
        for (int c = 0; c < P.cols; ++c) std::swap(P.at(i, c), P.at(j, c));
        for (int r = 0; r < U.rows; ++r) std::swap(U.at(r, i), U.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        if (!tr) return;
        for (int r = 0; r < Q.rows; ++r) std::swap(Q.at(r, i), Q.at(r, j));
        for (int c = 0; c < V.cols; ++c) std::swap(V.at(i, c), V.at(j, c));
    }
    // row i *= s, s a unit with inverse si
    void scale_row(int i, const ChainRing::Elem& s, const ChainRing::Elem& si) {
        for (int c = 0; c < A.cols; ++c) A.at(i, c) = R.mul(A.at(i, c), s);
        if (!tr) return;
        for (int c = 0; c < P.cols; ++c) P.at(i, c) = R.mul(P.at(i, c), s);
        for (int r = 0; r < U.rows; ++r) U.at(r, i) = R.mul(U.at(r, i), si);
    }
    // row i -= f * row t
    void sub_row(int i, int t, const ChainRing::Elem& f) {
        for (int c = 0; c < A.cols; ++c)
            if (!R.is_zero(A.at(t, c))) A.at(i, c) = R.sub(A.at(i, c), R.mul(f, A.at(t, c)));
        if (!tr) return;
        for (int c = 0; c < P.cols; ++c)
            if (!R.is_zero(P.at(t, c))) P.at(i, c) = R.sub(P.at(i, c), R.mul(f, P.at(t, c)));
        for (int r = 0; r < U.rows; ++r)
            if (!R.is_zero(U.at(r, i))) U.at(r, t) = R.add(U.at(r, t), R.mul(f, U.at(r, i)));
    }
    // col j -= f * col t
    void sub_col(int j, int t, const ChainRing::Elem& f) {
        for (int r = 0; r < A.rows; ++r)
            if (!R.is_zero(A.at(r, t))) A.at(r, j) = R.sub(A.at(r, j), R.mul(f, A.at(r, t)));
        if (!tr) return;
        for (int r = 0; r < Q.rows; ++r)
            if (!R.is_zero(Q.at(r, t))) Q.at(r, j) = R.sub(Q.at(r, j), R.mul(f, Q.at(r, t)));
        for (int c = 0; c < V.cols; ++c)
            if (!R.is_zero(V.at(j, c))) V.at(t, c) = R.add(V.at(t, c), R.mul(f, V.at(j, c)));
    }
};

}  // namespace

SNFResult snf(const CMatrix& m, const ChainRing& R, bool transforms) {
    Elim e(m, R, transforms);
    SNFResult res;
    const int cap = R.cap();
    const int lim = std::min(m.rows, m.cols);
    for (int t = 0; t < lim; ++t) {
        int bi = -1, bj = -1, bv = cap;
        for (int i = t; i < m.rows && bv > 0; ++i)
            for (int j = t; j < m.cols; ++j) {
                int v = R.val(e.A.at(i, j));
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (bi < 0) break;
        e.swap_rows(t, bi);
        e.swap_cols(t, bj);
        ChainRing::Elem u = R.div_pi_pow(e.A.at(t, t), bv);
        ChainRing::Elem ui = R.unit_inv(u);
        e.scale_row(t, ui, u);
        for (int i = t + 1; i < m.rows; ++i)
            if (!R.is_zero(e.A.at(i, t))) e.sub_row(i, t, R.div_pi_pow(e.A.at(i, t), bv));
        for (int j = t + 1; j < m.cols; ++j)
            if (!R.is_zero(e.A.at(t, j))) e.sub_col(j, t, R.div_pi_pow(e.A.at(t, j), bv));
        res.diag.push_back(bv);
        ++res.rank;
    }
    while (static_cast<int>(res.diag.size()) < lim) res.diag.push_back(cap);
    if (transforms) {
        res.P = std::move(e.P);
        res.Q = std::move(e.Q);
        res.U = std::move(e.U);
        res.V = std::move(e.V);
    }
    return res;
}

CMatrix diag_matrix(const SNFResult& s, int rows, int cols, const ChainRing& R) {
    CMatrix D(rows, cols, R);
    for (size_t i = 0; i < s.diag.size(); ++i)
        if (s.diag[i] < R.cap()) D.at(static_cast<int>(i), static_cast<int>(i)) = R.pi_pow(s.diag[i]);
    return D;
}

CMatrix kernel(const CMatrix& m, const ChainRing& R) {
    SNFResult s = snf(m, R, true);
    std::vector<CMatrix> cols;
    std::vector<int> which;
    std::vector<int> shift;
    for (int j = 0; j < m.cols; ++j) {
        if (j < s.rank) {
            if (s.diag[j] == 0) continue;
            which.push_back(j);
            shift.push_back(R.cap() - s.diag[j]);
        } else {
            which.push_back(j);
            shift.push_back(0);
        }
    }
    CMatrix K(m.cols, static_cast<int>(which.size()), R);
    for (size_t c = 0; c < which.size(); ++c) {
        ChainRing::Elem f = R.pi_pow(shift[c]);
        for (int r = 0; r < m.cols; ++r) K.at(r, static_cast<int>(c)) = R.mul(s.Q.at(r, which[c]), f);
    }
    return K;
}

LocalModule cokernel(const CMatrix& rel, const ChainRing& R) {
    SNFResult s = snf(rel, R, false);
    LocalModule mod;
    for (int i = 0; i < s.rank; ++i) mod.pi_lengths.push_back(s.diag[i]);
    for (int i = s.rank; i < rel.rows; ++i) mod.pi_lengths.push_back(R.cap());
    mod.normalize();
    return mod;
}

LocalModule subquotient(const CMatrix& X, const CMatrix& Y, const ChainRing& R) {
    if (X.cols == 0) return {};
    CMatrix K = kernel(hcat(X, Y, R), R);
    return cokernel(row_range(K, 0, X.cols, R), R);
}

CMatrix Complex::diff(int i) const {
    const ChainRing& R = *ring;
    if (i <= lo || i > hi()) return CMatrix(rank(i - 1), rank(i), R);
    return d[i - lo];
}

bool Complex::is_complex() const {
    const ChainRing& R = *ring;
    for (int i = lo + 2; i <= hi(); ++i)
        if (!is_zero(matmul(diff(i - 1), diff(i), R), R)) return false;
    return true;
}

LocalModule homology(const Complex& c, int i) { return homology(c, i, CMatrix(c.rank(i), 0, *c.ring)); }

LocalModule homology(const Complex& c, int i, const CMatrix& extra) {
    const ChainRing& R = *c.ring;
    CMatrix di = c.diff(i), dn = hcat(extra, c.diff(i + 1), R);
    if (!R.dvr_model()) return subquotient(kernel(di, R), dn, R);

    SNFResult s = snf(di, R, true);
    int ni = c.rank(i);
    CMatrix coords = matmul(s.V, dn, R);  // coordinates in the basis Q
    CMatrix restricted = row_range(coords, s.rank, ni, R);
    SNFResult t = snf(restricted, R, false);
    LocalModule mod;
    for (int j = 0; j < t.rank; ++j) mod.pi_lengths.push_back(t.diag[j]);
    mod.at_cap = (ni - s.rank) - t.rank;
    mod.normalize();
    return mod;
}

LocalModule image_in_homology(const Complex& c, int i, const CMatrix& x) {
    const ChainRing& R = *c.ring;
    CMatrix di = c.diff(i), dn = c.diff(i + 1);
    if (!R.dvr_model()) return subquotient(x, dn, R);
    SNFResult s = snf(di, R, true);
    const int ni = c.rank(i);
    CMatrix xs = row_range(matmul(s.V, x, R), s.rank, ni, R);
    CMatrix bs = row_range(matmul(s.V, dn, R), s.rank, ni, R);
    return subquotient(xs, bs, R);
}

}  // namespace thh
