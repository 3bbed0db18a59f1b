#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thh/finite_fields.hpp"

namespace thh {

// Unramified extension of Z/p^K with residue field F (modulus lifted with the same digits).
class WittRing {
public:
    using Elem = std::vector<i64>;

    WittRing(FqField F, int K);

    i64 p() const { return p_; }
    i64 q() const { return q_; }
    int K() const { return K_; }
    int D() const { return D_; }
    const FqField& residue_field() const { return F_; }
    const std::vector<i64>& modulus() const { return mod_; }

    Elem zero() const { return Elem(D_, 0); }
    Elem one() const { return from_int(1); }
    Elem gen() const;
    Elem from_int(i64 a) const;
    Elem from_ints(const std::vector<i64>& poly) const;  // integer poly in the generator
    bool is_zero(const Elem& x) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, i64 c) const;
    Elem pow(const Elem& a, u64 e) const;

    FqElem residue(const Elem& x) const;
    Elem lift(const FqElem& x) const;
    bool is_unit(const Elem& x) const;
    Elem inv(const Elem& x) const;
    int val_p(const Elem& x) const;  // K when zero

    // Frobenius lift: the automorphism sending the generator to the Hensel root near gen^p.
    const Elem& frobenius_image() const { return frob_cols_.size() > 1 ? frob_cols_[1] : frob_cols_[0]; }
    Elem frob(const Elem& x, int k = 1) const;
    // Evaluate an integer polynomial at y.
    Elem eval_int_poly(const std::vector<i64>& f, const Elem& y) const;
    Elem hensel_root(const std::vector<i64>& f, const Elem& approx) const;

private:
    FqField F_;
    i64 p_ = 0, q_ = 1;
    int K_ = 0, D_ = 0;
    std::vector<i64> mod_;
    std::vector<Elem> frob_cols_;  // images of gen^i
};

// Reduce an integer polynomial modulo a monic integer polynomial, coefficients mod q.
std::vector<i64> reduce_int_poly(const std::vector<i64>& f, const std::vector<i64>& monic_mod, i64 q);

// W[pi]/(P) with P Eisenstein over W, truncated mod p^K: a chain ring with uniformizer pi.
// With dvr_model set, the ring stands in for the complete DVR (finite-precision model);
// otherwise it is an honest finite quotient such as S/(p).
class ChainRing {
public:
    using Elem = std::vector<i64>;  // index j*D + i for pi^j t^i

    ChainRing(std::shared_ptr<const WittRing> W, std::vector<WittRing::Elem> low, WittRing::Elem u0,
              bool dvr_model);

    const WittRing& W() const { return *W_; }
    std::shared_ptr<const WittRing> W_ptr() const { return W_; }
    int d() const { return d_; }
    int D() const { return W_->D(); }
    int K() const { return W_->K(); }
    i64 p() const { return W_->p(); }
    int cap() const { return d_ * K(); }
    bool dvr_model() const { return dvr_; }
    size_t size() const { return static_cast<size_t>(d_) * D(); }
    const std::vector<WittRing::Elem>& eisenstein_low() const { return low_; }
    const WittRing::Elem& u0() const { return u0_; }

    Elem zero() const { return Elem(size(), 0); }
    Elem one() const { return from_int(1); }
    Elem pi() const;
    Elem from_int(i64 a) const;
    Elem from_witt(const WittRing::Elem& w) const;
    WittRing::Elem coeff(const Elem& x, int j) const;
    void set_coeff(Elem& x, int j, const WittRing::Elem& w) const;
    bool is_zero(const Elem& x) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, i64 c) const;
    Elem pi_pow(int v) const;

    int val(const Elem& x) const;  // cap() for zero
    Elem div_pi(const Elem& x) const;  // requires val >= 1; exact: result * pi == x
    Elem div_pi_pow(const Elem& x, int v) const;
    Elem unit_inv(const Elem& x) const;
    FqElem residue(const Elem& x) const;

    // Same presentation at a lower precision K2 <= K; elements reduce coefficientwise.
    ChainRing truncated(int K2, bool dvr_model) const;
    Elem truncate(const Elem& x, const ChainRing& target) const;

private:
    std::shared_ptr<const WittRing> W_;
    std::vector<WittRing::Elem> low_;  // c_0..c_{d-1}
    WittRing::Elem u0_;                // c_0 / p
    Elem p_over_pi_;
    int d_ = 0;
    bool dvr_ = false;
};

struct LocalModule {
    std::vector<int> pi_lengths;  // cyclic summands S/(pi^j), sorted descending
    int at_cap = 0;               // summands reaching the precision bound (free candidates)

    void normalize();
    int length_sum() const;
    int num_summands() const { return static_cast<int>(pi_lengths.size()) + at_cap; }
    bool operator==(const LocalModule& o) const { return pi_lengths == o.pi_lengths && at_cap == o.at_cap; }
    std::string str() const;
};

LocalModule make_module(std::vector<int> lengths, int at_cap = 0);

struct TowerSpec {
    i64 p = 0;
    int r = 1;
    std::vector<std::vector<i64>> eisenstein;  // c_0..c_{d-1}, 1 ; each an integer poly in the Witt generator
    int n = 1;
    int K = 0;  // 0: automatic
    int gen_exp = 1;
};

class Tower {
public:
    static Tower make(const TowerSpec& spec);
    static Tower make(i64 p, int r, const std::vector<std::vector<i64>>& P, int n, int K, int gen_exp = 1);

    const TowerSpec& spec() const { return spec_; }
    i64 p() const { return spec_.p; }
    int r() const { return spec_.r; }
    int n() const { return spec_.n; }
    int d() const { return d_; }
    int K() const { return spec_.K; }
    int gen_exp() const { return spec_.gen_exp; }

    const FqField& F_S() const { return R_->residue_field(); }
    const FqField& F_T() const { return Wp_->residue_field(); }
    const WittRing& R() const { return *R_; }
    const WittRing& Wp() const { return *Wp_; }
    const ChainRing& S() const { return *S_; }
    const ChainRing& T() const { return *T_; }
    std::shared_ptr<const ChainRing> S_ptr() const { return S_; }
    std::shared_ptr<const ChainRing> T_ptr() const { return T_; }
    // S/(p) as an honest finite chain ring.
    std::shared_ptr<const ChainRing> S_modp() const { return S1_; }
    const WittRing::Elem& rho() const { return rho_; }  // image of R's generator in W'

    ChainRing::Elem sigma(const ChainRing::Elem& x) const;
    ChainRing::Elem sigma_pow(const ChainRing::Elem& x, int k) const;
    ChainRing::Elem sigma_inv(const ChainRing::Elem& x) const { return sigma_pow(x, n() - 1); }
    ChainRing::Elem trace(const ChainRing::Elem& x) const;  // in T
    ChainRing::Elem embed(const ChainRing::Elem& s) const;  // S -> T
    WittRing::Elem embed_witt(const WittRing::Elem& w) const;  // R -> W'
    // T is free over S with basis beta^k = (W' generator)^k, k < n.
    std::vector<ChainRing::Elem> s_coords(const ChainRing::Elem& x) const;
    ChainRing::Elem from_s_coords(const std::vector<ChainRing::Elem>& s) const;
    ChainRing::Elem beta_pow(int k) const;
    ChainRing::Elem P_prime_at_pi() const;  // in S

    Tower with_precision(int K2) const;

private:
    TowerSpec spec_;
    int d_ = 0;
    std::shared_ptr<const WittRing> R_, Wp_;
    std::shared_ptr<const ChainRing> S_, T_, S1_;
    WittRing::Elem rho_;
    std::vector<std::vector<i64>> sigma_mat_;  // columns: sigma(gen'^i)
    std::vector<std::vector<i64>> minv_;       // W' coords -> (k, a) coords, row index k*r + a
};

ChainRing::Elem trace_T_S(const Tower& t, const ChainRing::Elem& x);
std::optional<int> valuation_pi(const ChainRing& ring, const ChainRing::Elem& x);
// v_pi(P'(pi)); raises precision internally until the value is below the cap.
int different_valuation(const Tower& t);
int default_precision(const TowerSpec& spec);

// Inverse of a square matrix over Z/q, q = p^K, invertible mod p. Row-major rows.
std::vector<std::vector<i64>> invert_mod_q(std::vector<std::vector<i64>> a, i64 p, i64 q);

}  // namespace thh
