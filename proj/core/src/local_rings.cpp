#include "thh/local_rings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace thh {

namespace {
int newton_steps(int prec) {
    int s = 1;
    while ((1 << (s - 1)) < prec) ++s;
    return s + 1;
}
}  // namespace

std::vector<i64> reduce_int_poly(const std::vector<i64>& f0, const std::vector<i64>& m, i64 q) {
    std::vector<i64> f(f0.size());
    for (size_t i = 0; i < f0.size(); ++i) f[i] = reduce(f0[i], q);
    int dm = static_cast<int>(m.size()) - 1;
    for (int k = static_cast<int>(f.size()) - 1; k >= dm; --k) {
        i64 c = f[k];
        if (!c) continue;
        for (int j = 0; j <= dm; ++j) f[k - dm + j] = reduce(f[k - dm + j] - mulmod(c, reduce(m[j], q), q), q);
    }
    f.resize(dm, 0);
    return f;
}

// ---------------------------------------------------------------- WittRing

WittRing::WittRing(FqField F, int K) : F_(std::move(F)), p_(F_.p()), K_(K), D_(F_.r()) {
    if (K < 1) throw std::invalid_argument("WittRing: precision must be >= 1");
    q_ = ipow(p_, K);
    if (q_ > (i64(1) << 61)) throw std::invalid_argument("WittRing: p^K too large");
    mod_ = F_.modulus();
    frob_cols_.assign(D_, zero());
    frob_cols_[0] = one();
    if (D_ > 1) {
        Elem y = hensel_root(mod_, lift(F_.pow(F_.gen(), static_cast<u64>(p_))));
        for (int i = 1; i < D_; ++i) frob_cols_[i] = mul(frob_cols_[i - 1], y);
    }
}

WittRing::Elem WittRing::gen() const { return from_ints({0, 1}); }

WittRing::Elem WittRing::from_int(i64 a) const {
    Elem e = zero();
    e[0] = reduce(a, q_);
    return e;
}

WittRing::Elem WittRing::from_ints(const std::vector<i64>& poly) const {
    Elem e = reduce_int_poly(poly, mod_, q_);
    e.resize(D_, 0);
    return e;
}

bool WittRing::is_zero(const Elem& x) const {
    return std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; });
}

WittRing::Elem WittRing::add(const Elem& a, const Elem& b) const {
    Elem e(D_);
    for (int i = 0; i < D_; ++i) {
        e[i] = a[i] + b[i];
        if (e[i] >= q_) e[i] -= q_;
    }
    return e;
}

WittRing::Elem WittRing::sub(const Elem& a, const Elem& b) const {
    Elem e(D_);
    for (int i = 0; i < D_; ++i) {
        e[i] = a[i] - b[i];
        if (e[i] < 0) e[i] += q_;
    }
    return e;
}

WittRing::Elem WittRing::neg(const Elem& a) const { return sub(zero(), a); }

WittRing::Elem WittRing::scale(const Elem& a, i64 c) const {
    Elem e(D_);
    c = reduce(c, q_);
    for (int i = 0; i < D_; ++i) e[i] = mulmod(a[i], c, q_);
    return e;
}

WittRing::Elem WittRing::mul(const Elem& a, const Elem& b) const {
    if (D_ == 1) return Elem{mulmod(a[0], b[0], q_)};
    std::vector<i64> t(2 * D_ - 1, 0);
    for (int i = 0; i < D_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < D_; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j], q_)) % q_;
    }
    for (int k = 2 * D_ - 2; k >= D_; --k) {
        i64 c = t[k];
        if (!c) continue;
        for (int j = 0; j < D_; ++j) t[k - D_ + j] = reduce(t[k - D_ + j] - mulmod(c, mod_[j], q_), q_);
    }
    t.resize(D_);
    return t;
}

WittRing::Elem WittRing::pow(const Elem& a, u64 e) const {
    Elem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FqElem WittRing::residue(const Elem& x) const {
    FqElem e = F_.zero();
    for (int i = 0; i < D_; ++i) e.c[i] = x[i] % p_;
    return e;
}

WittRing::Elem WittRing::lift(const FqElem& x) const {
    Elem e = zero();
    for (int i = 0; i < D_; ++i) e[i] = x.c[i];
    return e;
}

bool WittRing::is_unit(const Elem& x) const { return !F_.is_zero(residue(x)); }

WittRing::Elem WittRing::inv(const Elem& x) const {
    if (!is_unit(x)) throw std::domain_error("WittRing::inv: not a unit");
    Elem z = lift(F_.inv(residue(x)));
    Elem two = from_int(2);
    for (int s = 0; s < newton_steps(K_); ++s) z = mul(z, sub(two, mul(x, z)));
    return z;
}

int WittRing::val_p(const Elem& x) const {
    int v = K_;
    for (i64 c : x)
        if (c) v = std::min(v, vp(c, p_));
    return v;
}

WittRing::Elem WittRing::frob(const Elem& x, int k) const {
    Elem y = x;
    for (int s = 0; s < k; ++s) {
        Elem z = zero();
        for (int i = 0; i < D_; ++i)
            if (y[i]) z = add(z, scale(frob_cols_[i], y[i]));
        y = std::move(z);
    }
    return y;
}

WittRing::Elem WittRing::eval_int_poly(const std::vector<i64>& f, const Elem& y) const {
    Elem acc = zero();
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) acc = add(mul(acc, y), from_int(f[i]));
    return acc;
}

WittRing::Elem WittRing::hensel_root(const std::vector<i64>& f, const Elem& approx) const {
    std::vector<i64> df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(reduce(f[i] * static_cast<i64>(i), q_));
    Elem y = approx;
    for (int s = 0; s < newton_steps(K_); ++s) y = sub(y, mul(eval_int_poly(f, y), inv(eval_int_poly(df, y))));
    if (!is_zero(eval_int_poly(f, y))) throw std::logic_error("hensel_root: no convergence");
    return y;
}

// ---------------------------------------------------------------- ChainRing

ChainRing::ChainRing(std::shared_ptr<const WittRing> W, std::vector<WittRing::Elem> low, WittRing::Elem u0,
                     bool dvr_model)
    : W_(std::move(W)), low_(std::move(low)), u0_(std::move(u0)), d_(static_cast<int>(low_.size())),
      dvr_(dvr_model) {
    if (d_ < 1) throw std::invalid_argument("ChainRing: Eisenstein degree must be >= 1");
    // p / pi = -(pi^{d-1} + c_{d-1} pi^{d-2} + ... + c_1) / u0
    WittRing::Elem ui = W_->inv(u0_);
    p_over_pi_ = zero();
    for (int j = 1; j <= d_; ++j) {
        WittRing::Elem cj = (j == d_) ? W_->one() : low_[j];
        set_coeff(p_over_pi_, j - 1, W_->neg(W_->mul(cj, ui)));
    }
}

ChainRing::Elem ChainRing::pi() const {
    if (d_ == 1) return from_witt(W_->neg(low_[0]));
    Elem e = zero();
    e[D()] = 1;
    return e;
}

ChainRing::Elem ChainRing::from_int(i64 a) const { return from_witt(W_->from_int(a)); }

ChainRing::Elem ChainRing::from_witt(const WittRing::Elem& w) const {
    Elem e = zero();
    set_coeff(e, 0, w);
    return e;
}

WittRing::Elem ChainRing::coeff(const Elem& x, int j) const {
    return WittRing::Elem(x.begin() + j * D(), x.begin() + (j + 1) * D());
}

void ChainRing::set_coeff(Elem& x, int j, const WittRing::Elem& w) const {
    std::copy(w.begin(), w.end(), x.begin() + j * D());
}

bool ChainRing::is_zero(const Elem& x) const {
    return std::all_of(x.begin(), x.end(), [](i64 c) { return c == 0; });
}

ChainRing::Elem ChainRing::add(const Elem& a, const Elem& b) const {
    i64 q = W_->q();
    Elem e(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        e[i] = a[i] + b[i];
        if (e[i] >= q) e[i] -= q;
    }
    return e;
}

ChainRing::Elem ChainRing::sub(const Elem& a, const Elem& b) const {
    i64 q = W_->q();
    Elem e(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        e[i] = a[i] - b[i];
        if (e[i] < 0) e[i] += q;
    }
    return e;
}

ChainRing::Elem ChainRing::neg(const Elem& a) const { return sub(zero(), a); }

ChainRing::Elem ChainRing::scale(const Elem& a, i64 c) const {
    i64 q = W_->q();
    c = reduce(c, q);
    Elem e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = mulmod(a[i], c, q);
    return e;
}

ChainRing::Elem ChainRing::mul(const Elem& a, const Elem& b) const {
    const WittRing& W = *W_;
    if (d_ == 1) return W.mul(a, b);
    std::vector<WittRing::Elem> t(2 * d_ - 1, W.zero());
    for (int i = 0; i < d_; ++i) {
        WittRing::Elem ai = coeff(a, i);
        if (W.is_zero(ai)) continue;
        for (int j = 0; j < d_; ++j) {
            WittRing::Elem bj = coeff(b, j);
            if (W.is_zero(bj)) continue;
            t[i + j] = W.add(t[i + j], W.mul(ai, bj));
        }
    }
    for (int k = 2 * d_ - 2; k >= d_; --k) {
        if (W.is_zero(t[k])) continue;
        for (int j = 0; j < d_; ++j) t[k - d_ + j] = W.sub(t[k - d_ + j], W.mul(t[k], low_[j]));
    }
    Elem e = zero();
    for (int j = 0; j < d_; ++j) set_coeff(e, j, t[j]);
    return e;
}

ChainRing::Elem ChainRing::pi_pow(int v) const {
    Elem e = one(), pp = pi();
    for (int i = 0; i < v; ++i) e = mul(e, pp);
    return e;
}

int ChainRing::val(const Elem& x) const {
    int best = cap();
    for (int j = 0; j < d_; ++j) {
        int vj = W_->val_p(coeff(x, j));
        if (vj < K()) best = std::min(best, d_ * vj + j);
    }
    return best;
}

ChainRing::Elem ChainRing::div_pi(const Elem& x) const {
    const WittRing& W = *W_;
    WittRing::Elem x0 = coeff(x, 0);
    WittRing::Elem q0 = W.zero();
    for (int i = 0; i < D(); ++i) {
        if (x0[i] % W.p()) throw std::domain_error("div_pi: element is a unit");
        q0[i] = x0[i] / W.p();
    }
    Elem y = zero();
    for (int j = 0; j + 1 < d_; ++j) set_coeff(y, j, coeff(x, j + 1));
    return add(y, mul(from_witt(q0), p_over_pi_));
}

ChainRing::Elem ChainRing::div_pi_pow(const Elem& x, int v) const {
    Elem y = x;
    for (int i = 0; i < v; ++i) y = div_pi(y);
    return y;
}

ChainRing::Elem ChainRing::unit_inv(const Elem& x) const {
    const WittRing& W = *W_;
    WittRing::Elem x0 = coeff(x, 0);
    if (!W.is_unit(x0)) throw std::domain_error("unit_inv: not a unit");
    Elem z = from_witt(W.lift(W.residue_field().inv(W.residue(x0))));
    Elem two = from_int(2);
    for (int s = 0; s < newton_steps(cap()); ++s) z = mul(z, sub(two, mul(x, z)));
    return z;
}

FqElem ChainRing::residue(const Elem& x) const { return W_->residue(coeff(x, 0)); }

ChainRing ChainRing::truncated(int K2, bool dvr_model) const {
    if (K2 > K() || K2 < 1) throw std::invalid_argument("truncated: bad precision");
    auto W2 = std::make_shared<const WittRing>(W_->residue_field(), K2);
    i64 q2 = W2->q();
    auto red = [&](const WittRing::Elem& w) {
        WittRing::Elem o(w.size());
        for (size_t i = 0; i < w.size(); ++i) o[i] = w[i] % q2;
        return o;
    };
    std::vector<WittRing::Elem> low;
    for (auto& c : low_) low.push_back(red(c));
    return ChainRing(W2, low, red(u0_), dvr_model);
}

ChainRing::Elem ChainRing::truncate(const Elem& x, const ChainRing& target) const {
    i64 q2 = target.W().q();
    Elem o(x.size());
    for (size_t i = 0; i < x.size(); ++i) o[i] = x[i] % q2;
    return o;
}

// ---------------------------------------------------------------- LocalModule

void LocalModule::normalize() {
    pi_lengths.erase(std::remove_if(pi_lengths.begin(), pi_lengths.end(), [](int v) { return v <= 0; }),
                     pi_lengths.end());
    std::sort(pi_lengths.begin(), pi_lengths.end(), std::greater<int>());
}

int LocalModule::length_sum() const { return std::accumulate(pi_lengths.begin(), pi_lengths.end(), 0); }

std::string LocalModule::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < pi_lengths.size(); ++i) os << (i ? "," : "") << pi_lengths[i];
    os << "]";
    if (at_cap) os << "+cap" << at_cap;
    return os.str();
}

LocalModule make_module(std::vector<int> lengths, int at_cap) {
    LocalModule m{std::move(lengths), at_cap};
    m.normalize();
    return m;
}

// ---------------------------------------------------------------- Tower

std::vector<std::vector<i64>> invert_mod_q(std::vector<std::vector<i64>> a, i64 p, i64 q) {
    size_t n = a.size();
    std::vector<std::vector<i64>> inv(n, std::vector<i64>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1 % q;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] % p == 0) ++piv;
        if (piv == n) throw std::domain_error("invert_mod_q: singular mod p");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        i64 s = invmod(a[c][c], q);
        for (size_t j = 0; j < n; ++j) {
            a[c][j] = mulmod(a[c][j], s, q);
            inv[c][j] = mulmod(inv[c][j], s, q);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            i64 f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = reduce(a[i][j] - mulmod(f, a[c][j], q), q);
                inv[i][j] = reduce(inv[i][j] - mulmod(f, inv[c][j], q), q);
            }
        }
    }
    return inv;
}

Tower Tower::make(i64 p, int r, const std::vector<std::vector<i64>>& P, int n, int K, int gen_exp) {
    TowerSpec s;
    s.p = p;
    s.r = r;
    s.eisenstein = P;
    s.n = n;
    s.K = K;
    s.gen_exp = gen_exp;
    return make(s);
}

Tower Tower::make(const TowerSpec& spec0) {
    TowerSpec spec = spec0;
    if (!is_prime(spec.p)) throw std::invalid_argument("tower: p is not prime");
    if (spec.r < 1) throw std::invalid_argument("tower: r must be >= 1");
    if (spec.n < 1) throw std::invalid_argument("tower: n must be >= 1");
    if (spec.K < 0) throw std::invalid_argument("tower: precision must be >= 1");
    if (std::gcd(spec.gen_exp, spec.n) != 1) throw std::invalid_argument("tower: generator exponent must be prime to n");
    if (spec.eisenstein.size() < 2) throw std::invalid_argument("tower: Eisenstein polynomial must have degree >= 1");
    {
        std::vector<i64> lead = spec.eisenstein.back();
        while (!lead.empty() && lead.back() == 0) lead.pop_back();
        if (lead != std::vector<i64>{1}) throw std::invalid_argument("tower: Eisenstein polynomial must be monic");
    }
    if (spec.K == 0) spec.K = default_precision(spec);

    Tower t;
    t.spec_ = spec;
    t.d_ = static_cast<int>(spec.eisenstein.size()) - 1;
    const i64 p = spec.p;
    const int r = spec.r, n = spec.n, K = spec.K;
    FqField FS = fq_make(p, r);
    FqField FT = fq_make(p, r * n);
    t.R_ = std::make_shared<const WittRing>(FS, K);
    t.Wp_ = std::make_shared<const WittRing>(FT, K);
    const WittRing& R = *t.R_;
    const WittRing& Wp = *t.Wp_;

    std::vector<WittRing::Elem> low;
    for (int j = 0; j < t.d_; ++j) {
        WittRing::Elem c = R.from_ints(spec.eisenstein[j]);
        if (R.val_p(c) < 1) throw std::invalid_argument("tower: P is not Eisenstein (coefficient not divisible by p)");
        low.push_back(c);
    }
    std::vector<i64> c0 = reduce_int_poly(spec.eisenstein[0], FS.modulus(), ipow(p, K + 1));
    c0.resize(r, 0);
    WittRing::Elem u0 = R.zero();
    for (int i = 0; i < r; ++i) u0[i] = (c0[i] / p) % R.q();
    if (!R.is_unit(u0)) throw std::invalid_argument("tower: P is not Eisenstein (constant term divisible by p^2)");

    // embedding R -> W': Hensel-lift the first root of F_S's modulus in F_T
    std::optional<FqElem> root;
    u64 total = FT.size();
    if (total > (u64(1) << 24)) throw std::invalid_argument("tower: residue field too large for root search");
    for (u64 idx = 0; idx < total && !root; ++idx) {
        FqElem z = FT.element(idx);
        FqElem acc = FT.zero();
        for (int i = static_cast<int>(FS.modulus().size()) - 1; i >= 0; --i)
            acc = FT.add(FT.mul(acc, z), FT.from_int(FS.modulus()[i]));
        if (FT.is_zero(acc)) root = z;
    }
    t.rho_ = Wp.hensel_root(FS.modulus(), Wp.lift(*root));

    std::vector<WittRing::Elem> lowT;
    for (auto& c : low) lowT.push_back(t.embed_witt(c));
    t.S_ = std::make_shared<const ChainRing>(t.R_, low, u0, true);
    t.T_ = std::make_shared<const ChainRing>(t.Wp_, lowT, t.embed_witt(u0), true);
    t.S1_ = std::make_shared<const ChainRing>(t.S_->truncated(1, false));

    int D = r * n;
    int shift = static_cast<int>((static_cast<i64>(r) * (((spec.gen_exp % n) + n) % n)) % D);
    t.sigma_mat_.clear();
    WittRing::Elem g = Wp.gen(), gi = Wp.one();
    for (int i = 0; i < D; ++i) {
        t.sigma_mat_.push_back(Wp.frob(gi, shift));
        gi = Wp.mul(gi, g);
    }

    std::vector<std::vector<i64>> M(D, std::vector<i64>(D, 0));
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < r; ++a) {
            WittRing::Elem v = Wp.mul(Wp.pow(t.rho_, a), Wp.pow(g, k));
            for (int i = 0; i < D; ++i) M[i][k * r + a] = v[i];
        }
    t.minv_ = invert_mod_q(M, p, Wp.q());
    return t;
}

WittRing::Elem Tower::embed_witt(const WittRing::Elem& w) const {
    const WittRing& Wp = *Wp_;
    WittRing::Elem acc = Wp.zero(), rp = Wp.one();
    for (int a = 0; a < r(); ++a) {
        if (w[a]) acc = Wp.add(acc, Wp.scale(rp, w[a]));
        rp = Wp.mul(rp, rho_);
    }
    return acc;
}

ChainRing::Elem Tower::embed(const ChainRing::Elem& s) const {
    ChainRing::Elem x = T_->zero();
    for (int j = 0; j < d_; ++j) T_->set_coeff(x, j, embed_witt(S_->coeff(s, j)));
    return x;
}

ChainRing::Elem Tower::sigma(const ChainRing::Elem& x) const {
    const WittRing& Wp = *Wp_;
    ChainRing::Elem y = T_->zero();
    for (int j = 0; j < d_; ++j) {
        WittRing::Elem c = T_->coeff(x, j), o = Wp.zero();
        for (int i = 0; i < Wp.D(); ++i)
            if (c[i]) o = Wp.add(o, Wp.scale(sigma_mat_[i], c[i]));
        T_->set_coeff(y, j, o);
    }
    return y;
}

ChainRing::Elem Tower::sigma_pow(const ChainRing::Elem& x, int k) const {
    k %= n();
    if (k < 0) k += n();
    ChainRing::Elem y = x;
    for (int i = 0; i < k; ++i) y = sigma(y);
    return y;
}

ChainRing::Elem Tower::trace(const ChainRing::Elem& x) const {
    ChainRing::Elem s = T_->zero(), y = x;
    for (int i = 0; i < n(); ++i) {
        s = T_->add(s, y);
        y = sigma(y);
    }
    return s;
}

std::vector<ChainRing::Elem> Tower::s_coords(const ChainRing::Elem& x) const {
    const int D = Wp_->D();
    const i64 q = Wp_->q();
    std::vector<ChainRing::Elem> out(n(), S_->zero());
    for (int j = 0; j < d_; ++j) {
        WittRing::Elem c = T_->coeff(x, j);
        for (int row = 0; row < D; ++row) {
            i64 acc = 0;
            for (int i = 0; i < D; ++i)
                if (c[i]) acc = (acc + mulmod(minv_[row][i], c[i], q)) % q;
            int k = row / r(), a = row % r();
            out[k][j * r() + a] = acc;
        }
    }
    return out;
}

ChainRing::Elem Tower::beta_pow(int k) const {
    return T_->from_witt(Wp_->pow(Wp_->gen(), static_cast<u64>(k)));
}

ChainRing::Elem Tower::from_s_coords(const std::vector<ChainRing::Elem>& s) const {
    ChainRing::Elem x = T_->zero();
    for (int k = 0; k < n(); ++k) x = T_->add(x, T_->mul(embed(s[k]), beta_pow(k)));
    return x;
}

ChainRing::Elem Tower::P_prime_at_pi() const {
    const ChainRing& S = *S_;
    ChainRing::Elem acc = S.zero(), pp = S.one(), pi = S.pi();
    for (int j = 1; j <= d_; ++j) {
        WittRing::Elem cj = (j == d_) ? R_->one() : S.eisenstein_low()[j];
        acc = S.add(acc, S.mul(S.from_witt(R_->scale(cj, j)), pp));
        pp = S.mul(pp, pi);
    }
    return acc;
}

Tower Tower::with_precision(int K2) const {
    TowerSpec s = spec_;
    s.K = K2;
    return make(s);
}

ChainRing::Elem trace_T_S(const Tower& t, const ChainRing::Elem& x) { return t.s_coords(t.trace(x))[0]; }

std::optional<int> valuation_pi(const ChainRing& ring, const ChainRing::Elem& x) {
    int v = ring.val(x);
    if (v >= ring.cap()) return std::nullopt;
    return v;
}

int different_valuation(const Tower& t0) {
    Tower t = t0;
    for (;;) {
        int v = t.S().val(t.P_prime_at_pi());
        if (v < t.S().cap()) return v;
        t = t.with_precision(2 * t.K());
    }
}

int default_precision(const TowerSpec& spec) {
    TowerSpec s = spec;
    s.K = 4;
    return std::max(4, different_valuation(Tower::make(s)) + 2);
}

}  // namespace thh
