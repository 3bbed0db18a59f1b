#pragma once

#include <cstddef>
#include <vector>

#include "thh/chain_homology.hpp"
#include "thh/cyclic_algebra.hpp"
#include "thh/fp_linalg.hpp"

namespace thh {

struct HochschildOptions {
    std::size_t cap = 2'000'000;  // largest allowed chain group dimension
    bool use_frame = true;        // tensor over the idempotent frame when the algebra has one
    bool use_weights = true;      // split differentials by the weight grading
    int threads = 1;
};

// Normalized Hochschild complex with coefficients in the algebra itself:
// C_k = A (x) Abar^{(x)k}, Abar = A / (unit or frame).
struct HochschildChains {
    int degree = 0;
    long long dim = 0;
    // tuples grouped by weight block; each tuple is degree+1 basis indices
    std::vector<int> block_weight;
    std::vector<std::vector<int>> block_tuples;  // flattened, stride degree+1
};

HochschildChains hochschild_chains(const StructureAlgebra& a, int k, const HochschildOptions& opt = {});
// d_k : C_k -> C_{k-1}, one sparse F_p matrix per weight block (rows and columns local to the block).
std::vector<SparseFpMatrix> hochschild_differential(const StructureAlgebra& a, const HochschildChains& src,
                                                    const HochschildChains& dst,
                                                    const HochschildOptions& opt = {});

struct HochschildReport {
    std::vector<long long> chain_dims;  // C_0 .. C_{max+1}
    std::vector<long long> ranks;       // rank d_0 .. d_{max+1}, rank d_0 = 0
    std::vector<long long> hh;          // dim_{F_p} HH_0 .. HH_max
};

// F_p-dimensions of HH_k(A) for k <= max_degree (K = 1 only). Throws std::length_error past the cap.
HochschildReport hochschild_homology(const StructureAlgebra& a, int max_degree, const HochschildOptions& opt = {});

// Dense unnormalized complex over Z/p^K through degree max_degree + 1, for small algebras.
Complex hochschild_complex(const StructureAlgebra& a, int max_degree, std::size_t cap = 2'000'000);

// Z/p^K as an honest chain ring.
std::shared_ptr<const ChainRing> prime_chain_ring(i64 p, int K);

}  // namespace thh
