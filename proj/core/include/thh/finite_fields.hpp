#pragma once

#include <utility>
#include <vector>

#include "thh/arith.hpp"

namespace thh {

// Dense polynomial over F_p, low degree first, no trailing zeros (zero poly is empty).
using FpPoly = std::vector<i64>;

namespace fp {
void trim(FpPoly& f);
int deg(const FpPoly& f);
FpPoly add(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly sub(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly mul(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly scale(const FpPoly& a, i64 c, i64 p);
void divmod(const FpPoly& a, const FpPoly& b, i64 p, FpPoly& q, FpPoly& r);
FpPoly mod(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly div(const FpPoly& a, const FpPoly& b, i64 p);
FpPoly monic(const FpPoly& a, i64 p);
FpPoly gcd(FpPoly a, FpPoly b, i64 p);
FpPoly deriv(const FpPoly& a, i64 p);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, i64 p);
FpPoly powmod(FpPoly base, u64 e, const FpPoly& m, i64 p);
FpPoly from_ints(const std::vector<i64>& c, i64 p);  // reduces and trims
bool is_irreducible(const FpPoly& f, i64 p);
}  // namespace fp

struct FpPolyFactorization {
    i64 lead = 1;
    std::vector<std::pair<FpPoly, int>> factors;  // monic irreducible, multiplicity
};

// Distinct-degree then equal-degree splitting with a fixed-seed generator.
// Factors are ordered by degree, then coefficients (low degree first).
FpPolyFactorization factor_poly(const FpPoly& f, i64 p);

struct FqElem {
    std::vector<i64> c;  // length r, reduced mod p
    bool operator==(const FqElem& o) const { return c == o.c; }
    bool operator!=(const FqElem& o) const { return c != o.c; }
    bool operator<(const FqElem& o) const { return c < o.c; }
};

class FqField {
public:
    FqField() = default;
    FqField(i64 p, FpPoly modulus);

    i64 p() const { return p_; }
    int r() const { return r_; }
    const FpPoly& modulus() const { return mod_; }
    u64 size() const;  // p^r, throws if it does not fit

    FqElem zero() const;
    FqElem one() const;
    FqElem gen() const;  // class of t
    FqElem from_int(i64 a) const;
    FqElem from_poly(const FpPoly& f) const;
    FqElem element(u64 index) const;  // base-p digits, low degree first
    bool is_zero(const FqElem& x) const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem scale(const FqElem& a, i64 c) const;
    FqElem pow(const FqElem& a, u64 e) const;
    FqElem inv(const FqElem& a) const;

private:
    i64 p_ = 0;
    int r_ = 0;
    FpPoly mod_;
};

FqField fq_make(i64 p, int r);
FqElem frobenius(const FqField& F, const FqElem& x, int k);
FqElem trace_rel(const FqField& F, const FqElem& x, int sub_r);

}  // namespace thh
