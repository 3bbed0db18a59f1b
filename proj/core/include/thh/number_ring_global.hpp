#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thh/finite_fields.hpp"
#include "thh/local_rings.hpp"

namespace thh {

// Z[theta] is not p-maximal, so Z[x]/f does not model the ring of integers at p.
class not_p_maximal : public std::runtime_error {
public:
    explicit not_p_maximal(i64 p);
    i64 p;
};

// No prime <= 100 certifies irreducibility of f over Q.
class uncertified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// V = Z[x]/f, f monic, coefficients low degree first.
struct NumberRingSpec {
    std::vector<i64> f;
    int degree() const { return static_cast<int>(f.size()) - 1; }
};

struct PrimeIdealId {
    i64 p = 0;
    int index = 0;  // position in factor_poly order of f mod p
    bool operator==(const PrimeIdealId&) const = default;
};

struct RamifiedPrime {
    PrimeIdealId id;
    int e = 2;  // local index of the division algebra
    std::optional<std::vector<std::vector<i64>>> local_eisenstein;
};

struct GlobalAlgebraSpec {
    NumberRingSpec center;
    std::vector<RamifiedPrime> ramification;
};

struct PrimeFactor {
    FpPoly g;
    int e = 1;  // ramification index in V
    int f = 1;  // residue degree
};

struct PrimeDecomposition {
    i64 p = 0;
    std::vector<PrimeFactor> factors;
    bool p_maximal = false;
};

struct AbelianGroupFG {
    int free_rank = 0;
    std::vector<mpz_class> invariants;  // each > 1, d_1 | d_2 | ...

    std::vector<std::pair<mpz_class, int>> prime_powers() const;  // sorted by prime, then exponent
    mpz_class torsion_order() const;
    std::string str() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"
    bool operator==(const AbelianGroupFG& o) const {
        return free_rank == o.free_rank && invariants == o.invariants;
    }
};

AbelianGroupFG make_group(int free_rank, std::vector<mpz_class> orders);  // any cyclic orders

// Integer Smith normal form: nonzero diagonal in divisibility order (absolute values).
std::vector<mpz_class> integer_snf(std::vector<std::vector<mpz_class>> m);
// Cokernel of an integer matrix acting on Z^rows.
AbelianGroupFG integer_cokernel(const std::vector<std::vector<mpz_class>>& m);

// Matrix of multiplication by g(theta) on the power basis of V.
std::vector<std::vector<mpz_class>> multiplication_matrix(const NumberRingSpec& spec, const std::vector<mpz_class>& g);
mpz_class discriminant(const NumberRingSpec& spec);
void validate(const NumberRingSpec& spec);           // monic, degree >= 1
void certify_irreducible(const NumberRingSpec& spec);  // throws uncertified

PrimeDecomposition factor_prime(const NumberRingSpec& spec, i64 p);  // throws not_p_maximal
bool dedekind_p_maximal(const NumberRingSpec& spec, i64 p);

AbelianGroupFG thh_V(const NumberRingSpec& spec, int i);
AbelianGroupFG hh_V(const NumberRingSpec& spec, int i);
AbelianGroupFG thh_U(const GlobalAlgebraSpec& g, int i);
AbelianGroupFG hh_U(const GlobalAlgebraSpec& g, int i);

void validate(const GlobalAlgebraSpec& g);

struct ConsistencyItem {
    PrimeIdealId id;
    std::string check;  // "even" or "odd"
    std::string local, global;
    bool ok = false;
    bool skipped = false;  // no local data for a wild prime
};

struct ConsistencyReport {
    std::vector<ConsistencyItem> items;
    bool ok = true;
};

ConsistencyReport local_global_consistency(const GlobalAlgebraSpec& g, int i);

// Local tower at a ramified prime: the supplied Eisenstein polynomial, or z - p when P is unramified over p.
std::optional<Tower> local_tower(const GlobalAlgebraSpec& g, const RamifiedPrime& rp);

}  // namespace thh
