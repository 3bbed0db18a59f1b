#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "thh/local_rings.hpp"

namespace thh {

// Dense matrix over a ChainRing, row-major.
struct CMatrix {
    int rows = 0, cols = 0;
    std::vector<ChainRing::Elem> a;

    CMatrix() = default;
    CMatrix(int r, int c, const ChainRing& R) : rows(r), cols(c), a(static_cast<size_t>(r) * c, R.zero()) {}
    ChainRing::Elem& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const ChainRing::Elem& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

CMatrix identity(int n, const ChainRing& R);
CMatrix matmul(const CMatrix& x, const CMatrix& y, const ChainRing& R);
CMatrix hcat(const CMatrix& x, const CMatrix& y, const ChainRing& R);
CMatrix row_range(const CMatrix& x, int r0, int r1, const ChainRing& R);
CMatrix col_range(const CMatrix& x, int c0, int c1, const ChainRing& R);
CMatrix truncate(const CMatrix& x, const ChainRing& from, const ChainRing& to);
bool is_zero(const CMatrix& x, const ChainRing& R);
bool equal(const CMatrix& x, const CMatrix& y);

struct SNFResult {
    std::vector<int> diag;  // pi-valuations of the diagonal, ascending; cap() marks a zero entry
    int rank = 0;           // number of diagonal entries below the cap
    CMatrix U, V;           // input = U * D * V
    CMatrix P, Q;           // P * input * Q = D
};

// Pivot on minimal valuation (row-major ties), normalize the pivot to pi^v, clear row and column.
SNFResult snf(const CMatrix& m, const ChainRing& R, bool transforms = true);
CMatrix diag_matrix(const SNFResult& s, int rows, int cols, const ChainRing& R);

// Kernel generators (columns) of m in the honest finite ring.
CMatrix kernel(const CMatrix& m, const ChainRing& R);
// Cyclic decomposition of R^rows / span(columns of rel).
LocalModule cokernel(const CMatrix& rel, const ChainRing& R);
// X / Y for column-generated submodules Y <= X of R^rows.
LocalModule subquotient(const CMatrix& X, const CMatrix& Y, const ChainRing& R);

struct Complex {
    std::shared_ptr<const ChainRing> ring;
    int lo = 0;
    std::vector<int> ranks;  // rank of C_{lo+i}
    std::vector<CMatrix> d;  // d[i] : C_{lo+i} -> C_{lo+i-1}; d[0] unused

    int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }
    int rank(int i) const { return (i < lo || i > hi()) ? 0 : ranks[i - lo]; }
    // d_i with zero maps at the ends of the range
    CMatrix diff(int i) const;
    bool is_complex() const;  // d_{i-1} d_i == 0 for all i
};

// H_i. Over an honest finite ring this is ker/im. Over a finite-precision DVR model the
// answer is read from elementary divisors: free kernel rank minus image rank goes to at_cap.
LocalModule homology(const Complex& c, int i);
// H_i with the columns of extra added to the boundaries (extra must consist of cycles).
LocalModule homology(const Complex& c, int i, const CMatrix& extra);
// Submodule of H_i generated by the cycles x.
LocalModule image_in_homology(const Complex& c, int i, const CMatrix& x);

}  // namespace thh
