#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thh/local_rings.hpp"

namespace thh {

// Finite free algebra over Z/p^K (K = 1: over F_p) given by structure constants.
struct StructureAlgebra {
    i64 p = 2;
    int K = 1;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<i64> table;  // table[(a*dim + b)*dim + c]: coefficient of e_c in e_a e_b
    std::vector<i64> unit;
    // Optional additive grading on basis elements that products respect; empty means none.
    std::vector<int> weight;
    // Optional frame of orthogonal idempotents summing to 1: each basis element b satisfies
    // b = e_{left[b]} b e_{right[b]}, and in_frame marks the idempotents themselves.
    std::vector<int> left, right;
    std::vector<char> in_frame;

    i64 q() const { return ipow(p, K); }
    i64 coef(int a, int b, int c) const { return table[(static_cast<size_t>(a) * dim + b) * dim + c]; }
    i64& coef(int a, int b, int c) { return table[(static_cast<size_t>(a) * dim + b) * dim + c]; }
    std::vector<i64> mul(const std::vector<i64>& x, const std::vector<i64>& y) const;
    // nonzero (c, coefficient) pairs of e_a e_b
    std::vector<std::pair<int, i64>> product(int a, int b) const;
    bool has_frame() const { return !in_frame.empty(); }
};

// Basis t^u pi^j x^k ordered by (k, j, u), index (k*d + j)*(r*n) + u; index 0 is the unit.
StructureAlgebra build_modp(const Tower& t);
StructureAlgebra build_integral(const Tower& t);
StructureAlgebra reduce_mod_p(const StructureAlgebra& a);

bool check_associative(const StructureAlgebra& a);
bool check_unit(const StructureAlgebra& a);
bool check_weight_grading(const StructureAlgebra& a);
// Dimension over F_p of the center (K = 1 only).
int center_dim(const StructureAlgebra& a);

struct SplitResult {
    // Monoid algebra of the split basis e_i pi^j x^k over F_p, ordered by (k, j, i).
    // Its F_T-extension is F_T (x)_{F_S} A/(p).
    StructureAlgebra algebra;
    bool phi_multiplicative = false;
    bool phi_bijective = false;
    bool weakly_monoidal = false;
    bool idempotent_shift = false;  // e_i x = x e_{i-1}
};
SplitResult split_scalars(const Tower& t);

std::string algebra_to_json(const StructureAlgebra& a);
StructureAlgebra algebra_from_json(const std::string& text);

}  // namespace thh
