#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "thh/chain_homology.hpp"

namespace thh {

// HH_i(A/(p)) = Z/B inside T/(p) = (S/(p))^n, in small-complex coordinates.
struct HHClasses {
    CMatrix Z, B;
    LocalModule module;
};

// Both rows of E^2 agree; degree m is the sum over j of u^j HH_{m-2j}, component j occupying
// coordinates [j*n, (j+1)*n) of the ambient (S/(p))^{n*(m/2+1)}.
struct TwoRowPage {
    std::shared_ptr<const ChainRing> ring;  // S/(p)
    int n = 0, r = 1, max_total = 0;
    std::vector<HHClasses> hh;  // HH_0 .. HH_{max_total+1}
    std::vector<LocalModule> row;  // E^2_{m,0} = E^2_{m,1} as S/(p)-modules, m <= max_total+1

    int components(int m) const { return m / 2 + 1; }
    int dim(int m) const { return r * row.at(m).length_sum(); }  // F_p-dimension
    CMatrix cycles(int m) const;     // block diagonal of the component Z's
    CMatrix boundaries(int m) const; // block diagonal of the component B's
};

TwoRowPage build_E2(const Tower& t, int max_total);

// d^2 : E^2_{m,0} -> E^2_{m-2,1} on ambient coordinates, m >= 2: u^j[c] -> j u^{j-1}[c] - u^j[c].
CMatrix d2(const TwoRowPage& page, int m);

struct Einfty {
    std::map<std::pair<int, int>, LocalModule> terms;  // (s, t) -> module, t in {0, 1}
    std::map<int, int> rank_d2;                        // source degree m -> F_p-rank
};

Einfty compute_Einfty(const TwoRowPage& page);

struct ModpGradedResult {
    std::vector<LocalModule> degree;      // THH_i(A, A/(p)) for i <= max_total
    std::vector<bool> extension_merged;   // the nontrivial extension was applied in this degree
};

// Throws verification_error when E-infinity does not have the expected two-row shape.
ModpGradedResult assemble(const Tower& t, const TwoRowPage& page, const Einfty& e);

// Rank-nullity: sum of E-infinity in total degree i equals E^2 minus the d^2 ranks touching it.
bool rank_nullity_holds(const TwoRowPage& page, const Einfty& e, int i);

}  // namespace thh
