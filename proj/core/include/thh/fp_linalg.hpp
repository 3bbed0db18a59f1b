#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "thh/arith.hpp"

namespace thh {

// Column-sparse matrix over F_p; entries are nonzero residues.
struct SparseFpMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, std::uint32_t>>> col;
};

struct RankStats {
    int peeled = 0;  // pivots found by singleton peeling
    int core_rows = 0, core_cols = 0;
};

// Singleton peeling, then dense elimination of the remaining core
// (packed bit rows for p = 2, byte rows otherwise).
int rank_mod_p(const SparseFpMatrix& m, i64 p, RankStats* stats = nullptr);

// Dense helpers for small systems. Rows are reduced mod p in place.
int rank_dense_mod_p(std::vector<std::vector<i64>> rows, i64 p);
// Basis of the right null space {x : A x = 0}, as vectors.
std::vector<std::vector<i64>> nullspace_mod_p(std::vector<std::vector<i64>> rows, int ncols, i64 p);

}  // namespace thh
