#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thh/local_rings.hpp"

namespace thh {

// Degree -> module. A free S summand is reported through at_cap = 1.
using LocalGraded = std::map<int, LocalModule>;

LocalModule thh_S(const Tower& t, int i);
LocalModule thh_S_modp(const Tower& t, int i);
LocalModule hh_A(const Tower& t, int i);
LocalModule hh_A_modp(const Tower& t, int i);
LocalModule thh_A_modp(const Tower& t, int i);
LocalModule thh_A(const Tower& t, int i);

// Mod p Hochschild homology of S itself: S/(p) in degree 0, S/(p, P'(pi)) in odd, Ann(P'(pi)) in even degrees.
LocalModule hh_S_modp(const Tower& t, int i);

LocalGraded evaluate(LocalModule (*f)(const Tower&, int), const Tower& t, int max_i);

// S-ranks (numbers of cyclic summands) and S-lengths on both sides of the universal coefficient sequence.
struct UctRow {
    int degree = 0;
    int modp_rank = 0;    // summands of thh_A_modp(i)
    int tensor = 0;       // summands of thh_A(i), free included
    int tor = 0;          // torsion summands of thh_A(i-1)
    int modp_length = 0;  // length of thh_A_modp(i)
    int uct_length = 0;   // length of thh_A(i) / p plus the p-torsion of thh_A(i-1)
    bool ok = false;
};

struct UctReport {
    std::vector<UctRow> rows;
    bool ok = true;
};

UctReport uct_check(const Tower& t, int max_i);

// Expected E-infinity of the spectral sequence converging to THH(A) with coefficients in S.
using BidegreeTable = std::map<std::pair<int, int>, LocalModule>;
BidegreeTable einfty_pattern(const Tower& t, int max_total);

// v_pi of the integer a in S (d * v_p(a)).
int pi_valuation_of_int(const Tower& t, long long a);

}  // namespace thh
