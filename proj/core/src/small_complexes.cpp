#include "thh/small_complexes.hpp"

#include <stdexcept>

namespace thh {

CMatrix s_linear_matrix(const Tower& t, const std::function<ChainRing::Elem(const ChainRing::Elem&)>& f) {
    const ChainRing& S = t.S();
    const int n = t.n();
    CMatrix m(n, n, S);
    for (int k = 0; k < n; ++k) {
        auto c = t.s_coords(f(t.beta_pow(k)));
        for (int i = 0; i < n; ++i) m.at(i, k) = c[i];
    }
    return m;
}

namespace {

CMatrix scalar_matrix(const Tower& t, const ChainRing::Elem& s) {
    CMatrix m(t.n(), t.n(), t.S());
    for (int i = 0; i < t.n(); ++i) m.at(i, i) = s;
    return m;
}

CMatrix pi_one_minus_sigma_inv(const Tower& t, bool with_pi) {
    const ChainRing& T = t.T();
    const ChainRing::Elem pi = T.pi();
    return s_linear_matrix(t, [&](const ChainRing::Elem& x) {
        ChainRing::Elem y = T.sub(x, t.sigma_inv(x));
        return with_pi ? T.mul(pi, y) : y;
    });
}

CMatrix trace_matrix(const Tower& t) {
    return s_linear_matrix(t, [&](const ChainRing::Elem& x) { return t.trace(x); });
}

std::shared_ptr<const ChainRing> flavor_ring(const Tower& t, Flavor fl) {
    return fl == Flavor::integral ? t.S_ptr() : t.S_modp();
}

Complex periodic(const Tower& t, Flavor fl, int length, const CMatrix& odd, const CMatrix& even) {
    if (length < 2) throw std::invalid_argument("periodic complex: length must be >= 2");
    auto R = flavor_ring(t, fl);
    Complex c;
    c.ring = R;
    c.lo = 0;
    c.ranks.assign(length, t.n());
    c.d.emplace_back();
    CMatrix o = fl == Flavor::integral ? odd : truncate(odd, t.S(), *R);
    CMatrix e = fl == Flavor::integral ? even : truncate(even, t.S(), *R);
    for (int i = 1; i < length; ++i) c.d.push_back(i % 2 ? o : e);
    if (!c.is_complex()) throw verification_error("periodic complex: d o d is not zero");
    return c;
}

// Cycle generators: over a DVR model only the free part of the kernel is genuine.
CMatrix cycles(const Complex& c, int i) {
    const ChainRing& R = *c.ring;
    CMatrix d = c.diff(i);
    if (!R.dvr_model()) return kernel(d, R);
    SNFResult s = snf(d, R, true);
    return col_range(s.Q, s.rank, d.cols, R);
}


// Generators of span(U) ∩ span(V) over an honest ring.
CMatrix intersect(const CMatrix& U, const CMatrix& V, const ChainRing& R) {
    CMatrix k = kernel(hcat(U, V, R), R);
    return matmul(U, row_range(k, 0, U.cols, R), R);
}

CMatrix dvr_kernel(const CMatrix& m, const ChainRing& R) {
    SNFResult s = snf(m, R, true);
    return col_range(s.Q, s.rank, m.cols, R);
}

}  // namespace

Complex small_complex(const Tower& t, Flavor fl, int length) {
    return periodic(t, fl, length, pi_one_minus_sigma_inv(t, true), matmul(scalar_matrix(t, t.P_prime_at_pi()), trace_matrix(t), t.S()));
}

Complex resolution_complex(const Tower& t, int length) {
    return periodic(t, Flavor::integral, length, trace_matrix(t), pi_one_minus_sigma_inv(t, false));
}

bool resolution_kernel_is_S(const Tower& t) {
    const ChainRing& S = t.S();
    CMatrix m = pi_one_minus_sigma_inv(t, false);
    SNFResult s = snf(m, S, true);
    if (m.cols - s.rank != 1) return false;
    for (int i = 1; i < t.n(); ++i)
        if (!S.is_zero(s.Q.at(i, m.cols - 1))) return false;
    return S.val(s.Q.at(0, m.cols - 1)) == 0;
}

std::vector<LocalModule> hh_A_via_small(const Tower& t, Flavor fl, int max_degree) {
    Complex c = small_complex(t, fl, max_degree + 2);
    std::vector<LocalModule> out;
    for (int i = 0; i <= max_degree; ++i) out.push_back(homology(c, i));
    return out;
}

Complex comparison_source(const Tower& t, Flavor fl, int length) {
    return periodic(t, fl, length, CMatrix(t.n(), t.n(), t.S()), scalar_matrix(t, t.P_prime_at_pi()));
}

ComparisonReport themap_induced(const Tower& t, Flavor fl, int max_degree) {
    const int length = max_degree + 2;
    Complex top = comparison_source(t, fl, length), bot = small_complex(t, fl, length);
    const ChainRing& R = *bot.ring;
    CMatrix tr = trace_matrix(t);
    if (fl == Flavor::modp) tr = truncate(tr, t.S(), R);
    CMatrix id = identity(t.n(), R);
    auto vert = [&](int i) -> const CMatrix& { return i % 2 ? tr : id; };

    ComparisonReport rep;
    rep.chain_map = true;
    for (int i = 1; i < length; ++i)
        if (!equal(matmul(bot.diff(i), vert(i), R), matmul(vert(i - 1), top.diff(i), R))) rep.chain_map = false;
    if (!rep.chain_map) throw verification_error("themap_induced: vertical maps do not form a chain map");

    for (int i = 0; i <= max_degree; ++i) {
        InducedMap m;
        m.degree = i;
        m.source = homology(top, i);
        m.target = homology(bot, i);
        CMatrix x = matmul(vert(i), cycles(top, i), R);
        CMatrix b = bot.diff(i + 1);
        m.image = image_in_homology(bot, i, x);
        m.cokernel = homology(bot, i, x);
        if (fl == Flavor::modp) {
            const ChainRing& S = t.S();
            const int n = t.n();
            CMatrix z = cycles(bot, i);
            CMatrix tr_int = trace_matrix(t);
            CMatrix xs_span(n, 1, R), ys_span(n, 0, R);
            if (i % 2) {
                // im Tr = S.1; its complement is spanned by beta^1..beta^{n-1}, scaled by pi^{d-1}
                xs_span.at(0, 0) = R.one();
                ys_span = CMatrix(n, n - 1, R);
                for (int k = 1; k < n; ++k) ys_span.at(k, k - 1) = R.pi_pow(t.d() - 1);
            } else {
                int u = -1;
                for (int k = 0; k < n && u < 0; ++k)
                    if (S.val(tr_int.at(0, k)) == 0) u = k;
                if (u < 0) throw verification_error("themap_induced: no basis vector of unit trace");
                xs_span.at(u, 0) = R.one();
                ys_span = truncate(dvr_kernel(tr_int, S), S, R);
            }
            CMatrix xs = intersect(xs_span, z, R), ys = intersect(ys_span, z, R);
            m.s_part = subquotient(xs, b, R);
            m.complement = subquotient(ys, b, R);
            const int total = m.target.length_sum();
            m.direct_sum = subquotient(hcat(xs, ys, R), b, R).length_sum() == total &&
                           m.s_part.length_sum() + m.complement.length_sum() == total;
            m.onto_s_part = subquotient(hcat(x, ys, R), b, R).length_sum() == total;
        }
        rep.maps.push_back(std::move(m));
    }
    return rep;
}

namespace {

int dim_T_mod_p_quotient(const Tower& t, const CMatrix& gens) {
    auto R1 = t.S_modp();
    CMatrix g = truncate(gens, t.S(), *R1);
    return t.r() * cokernel(g, *R1).length_sum();
}

}  // namespace

int dim_T_mod_p_pi_ker_tr(const Tower& t) {
    const ChainRing& S = t.S();
    CMatrix tr = trace_matrix(t);
    CMatrix ker = dvr_kernel(tr, S);
    return dim_T_mod_p_quotient(t, matmul(scalar_matrix(t, S.pi()), ker, S));
}

int dim_T_mod_p_pi_tr(const Tower& t) {
    const ChainRing& S = t.S();
    return dim_T_mod_p_quotient(t, matmul(scalar_matrix(t, S.pi()), trace_matrix(t), S));
}

}  // namespace thh
