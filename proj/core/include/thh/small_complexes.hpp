#pragma once

#include <functional>
#include <vector>

#include "thh/chain_homology.hpp"

namespace thh {

enum class Flavor { integral, modp };

// Matrix over S of an S-linear map T -> T in the basis beta^k.
CMatrix s_linear_matrix(const Tower& t, const std::function<ChainRing::Elem(const ChainRing::Elem&)>& f);

// T in degrees 0..length-1 with d_odd = pi(1 - sigma^{-1}) and d_even = P'(pi) Tr.
Complex small_complex(const Tower& t, Flavor fl, int length);
// T in degrees 0..length-1 with d_odd = Tr and d_even = 1 - sigma^{-1}, over S_K.
Complex resolution_complex(const Tower& t, int length);
// ker(1 - sigma^{-1}) on T is free of rank one, spanned by the embedded 1.
bool resolution_kernel_is_S(const Tower& t);

std::vector<LocalModule> hh_A_via_small(const Tower& t, Flavor fl, int max_degree);

// Top row of the comparison diagram: T with d_odd = 0, d_even = P'(pi).
Complex comparison_source(const Tower& t, Flavor fl, int length);

struct InducedMap {
    int degree = 0;
    LocalModule source;    // homology of the top row
    LocalModule target;    // homology of the small complex
    LocalModule image;     // image of the induced map
    LocalModule cokernel;  // target / image
    // mod p only: target = s_part (+) complement, s_part the classes of S.1, complement those of ker Tr
    LocalModule s_part, complement;
    bool direct_sum = false;    // s_part and complement span the target with no overlap
    bool onto_s_part = false;   // image + complement = target
};

struct ComparisonReport {
    bool chain_map = false;  // bottom d o v == v o top d in every degree
    std::vector<InducedMap> maps;
};

// Vertical maps: identity in even degrees, Tr in odd degrees.
ComparisonReport themap_induced(const Tower& t, Flavor fl, int max_degree);

// F_p-dimensions of T/(p, pi ker Tr) and T/(p, pi Tr(T)).
int dim_T_mod_p_pi_ker_tr(const Tower& t);
int dim_T_mod_p_pi_tr(const Tower& t);

}  // namespace thh
