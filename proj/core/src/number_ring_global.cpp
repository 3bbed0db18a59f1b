#include "thh/number_ring_global.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "thh/closed_forms.hpp"

namespace thh {

using ZMatrix = std::vector<std::vector<mpz_class>>;
using ZPoly = std::vector<mpz_class>;

not_p_maximal::not_p_maximal(i64 p_)
    : std::runtime_error("NOT_P_MAXIMAL(" + std::to_string(p_) + "): Z[theta] is not p-maximal"), p(p_) {}

namespace {

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    ztrim(c);
    return c;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

ZPoly to_z(const std::vector<i64>& f) {
    ZPoly z;
    for (i64 c : f) z.emplace_back(static_cast<long>(c));
    ztrim(z);
    return z;
}

ZPoly lift(const FpPoly& f) {
    ZPoly z;
    for (i64 c : f) z.emplace_back(static_cast<long>(c));
    return z;
}

FpPoly reduce_z(const ZPoly& f, i64 p) {
    FpPoly r;
    const mpz_class pp(static_cast<long>(p));
    for (const mpz_class& c : f) {
        mpz_class m = c % pp;
        if (m < 0) m += pp;
        r.push_back(m.get_si());
    }
    fp::trim(r);
    return r;
}

ZPoly derivative(const NumberRingSpec& spec) {
    ZPoly df;
    for (size_t k = 1; k < spec.f.size(); ++k) df.push_back(mpz_class(static_cast<long>(spec.f[k])) * static_cast<long>(k));
    ztrim(df);
    return df;
}

mpz_class bareiss_det(ZMatrix m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Distinct prime factors by trial division up to the first probable-prime cofactor.
std::vector<mpz_class> prime_factors_z(mpz_class n) {
    std::vector<mpz_class> out;
    n = abs(n);
    for (mpz_class q = 2; n > 1; ++q) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            out.push_back(n);
            break;
        }
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

i64 as_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("prime does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

void certify_primes_of_disc(const NumberRingSpec& spec) {
    for (const mpz_class& q : prime_factors_z(discriminant(spec))) factor_prime(spec, as_i64(q));
}

AbelianGroupFG odd_group(const NumberRingSpec& spec, long c) {
    validate(spec);
    ZPoly df = derivative(spec);
    if (df.empty()) throw std::domain_error("f'(theta) = 0: f is inseparable");
    for (mpz_class& x : df) x *= c;
    certify_primes_of_disc(spec);
    return integer_cokernel(multiplication_matrix(spec, df));
}

AbelianGroupFG even_torsion(const GlobalAlgebraSpec& g, int free_rank) {
    std::vector<mpz_class> orders;
    for (const RamifiedPrime& rp : g.ramification) {
        PrimeDecomposition dec = factor_prime(g.center, rp.id.p);
        const int f = dec.factors.at(rp.id.index).f;
        for (int k = 0; k < (rp.e - 1) * f; ++k) orders.emplace_back(static_cast<long>(rp.id.p));
    }
    return make_group(free_rank, std::move(orders));
}

}  // namespace

std::vector<std::pair<mpz_class, int>> AbelianGroupFG::prime_powers() const {
    std::vector<std::pair<mpz_class, int>> out;
    for (const mpz_class& d : invariants)
        for (const mpz_class& q : prime_factors_z(d)) {
            int e = 0;
            mpz_class x = d;
            while (x % q == 0) {
                x /= q;
                ++e;
            }
            out.emplace_back(q, e);
        }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class AbelianGroupFG::torsion_order() const {
    mpz_class o = 1;
    for (const mpz_class& d : invariants) o *= d;
    return o;
}

std::string AbelianGroupFG::str() const {
    std::ostringstream s;
    bool first = true;
    if (free_rank > 0) {
        s << "Z";
        if (free_rank > 1) s << "^" << free_rank;
        first = false;
    }
    for (const mpz_class& d : invariants) {
        s << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return first ? "0" : s.str();
}

AbelianGroupFG make_group(int free_rank, std::vector<mpz_class> orders) {
    if (free_rank < 0) throw std::invalid_argument("make_group: negative free rank");
    ZMatrix m(orders.size(), std::vector<mpz_class>(orders.size(), 0));
    for (size_t i = 0; i < orders.size(); ++i) m[i][i] = orders[i];
    AbelianGroupFG g = integer_cokernel(m);
    g.free_rank += free_rank;
    return g;
}

std::vector<mpz_class> integer_snf(ZMatrix m) {
    const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<mpz_class> diag;
    for (size_t t = 0; t < std::min(rows, cols); ++t) {
        // pivot: smallest nonzero absolute value in the remaining block
        for (;;) {
            size_t pi = rows, pj = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) return diag;
            std::swap(m[t], m[pi]);
            for (auto& row : m) std::swap(row[t], row[pj]);
            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                if (q != 0)
                    for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                if (q != 0)
                    for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any entry not divisible by the pivot into row t
            bool divides = true;
            for (size_t i = t + 1; i < rows && divides; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(m[t][t]));
    }
    return diag;
}

AbelianGroupFG integer_cokernel(const ZMatrix& m) {
    AbelianGroupFG g;
    std::vector<mpz_class> d = integer_snf(m);
    g.free_rank = static_cast<int>(m.size() - d.size());
    for (const mpz_class& x : d)
        if (x != 1) g.invariants.push_back(x);
    return g;
}

void validate(const NumberRingSpec& spec) {
    if (spec.f.size() < 2) throw std::invalid_argument("center polynomial must have degree >= 1");
    if (spec.f.back() != 1) throw std::invalid_argument("center polynomial must be monic");
}

std::vector<std::vector<mpz_class>> multiplication_matrix(const NumberRingSpec& spec, const std::vector<mpz_class>& g) {
    validate(spec);
    const int m = spec.degree();
    const ZPoly f = to_z(spec.f);
    ZMatrix out(m, std::vector<mpz_class>(m, 0));
    for (int k = 0; k < m; ++k) {
        // g(theta) * theta^k reduced mod f
        ZPoly x(k, 0);
        x.insert(x.end(), g.begin(), g.end());
        ztrim(x);
        for (int top = static_cast<int>(x.size()) - 1; top >= m; --top) {
            mpz_class c = x[top];
            if (c == 0) continue;
            for (int j = 0; j <= m; ++j) x[top - m + j] -= c * f[j];
        }
        for (int i = 0; i < m && i < static_cast<int>(x.size()); ++i) out[i][k] = x[i];
    }
    return out;
}

mpz_class discriminant(const NumberRingSpec& spec) {
    const int m = spec.degree();
    mpz_class norm = bareiss_det(multiplication_matrix(spec, derivative(spec)));
    return (m * (m - 1) / 2) % 2 ? mpz_class(-norm) : norm;
}

void certify_irreducible(const NumberRingSpec& spec) {
    validate(spec);
    if (spec.degree() == 1) return;
    const mpz_class disc = discriminant(spec);
    for (i64 q = 2; q <= 100; ++q) {
        if (!is_prime(q) || disc % static_cast<long>(q) == 0) continue;
        if (fp::is_irreducible(fp::from_ints(spec.f, q), q)) return;
    }
    throw uncertified("UNCERTIFIED: f is not irreducible modulo any prime <= 100 not dividing disc(f)");
}

bool dedekind_p_maximal(const NumberRingSpec& spec, i64 p) {
    const ZPoly f = to_z(spec.f);
    FpPolyFactorization fac = factor_poly(reduce_z(f, p), p);
    ZPoly g{1}, h{1};
    FpPoly gbar{1}, hbar{1};
    for (const auto& [gi, e] : fac.factors) {
        g = zmul(g, lift(gi));
        gbar = fp::mul(gbar, gi, p);
        for (int k = 1; k < e; ++k) {
            h = zmul(h, lift(gi));
            hbar = fp::mul(hbar, gi, p);
        }
    }
    ZPoly diff = zsub(f, zmul(g, h));
    for (mpz_class& c : diff) {
        if (c % static_cast<long>(p) != 0) throw std::logic_error("dedekind: f - gh not divisible by p");
        c /= static_cast<long>(p);
    }
    FpPoly F = reduce_z(diff, p);
    FpPoly d = fp::gcd(fp::gcd(F, gbar, p), hbar, p);
    return fp::deg(d) == 0;
}

PrimeDecomposition factor_prime(const NumberRingSpec& spec, i64 p) {
    validate(spec);
    if (!is_prime(p)) throw std::invalid_argument("factor_prime: " + std::to_string(p) + " is not prime");
    PrimeDecomposition dec;
    dec.p = p;
    for (const auto& [gi, e] : factor_poly(fp::from_ints(spec.f, p), p).factors)
        dec.factors.push_back({gi, e, fp::deg(gi)});
    dec.p_maximal = dedekind_p_maximal(spec, p);
    if (!dec.p_maximal) throw not_p_maximal(p);
    return dec;
}

AbelianGroupFG thh_V(const NumberRingSpec& spec, int i) {
    validate(spec);
    if (i == 0) return make_group(spec.degree(), {});
    if (i < 0 || i % 2 == 0) return {};
    return odd_group(spec, (i + 1) / 2);
}

AbelianGroupFG hh_V(const NumberRingSpec& spec, int i) {
    validate(spec);
    if (i == 0) return make_group(spec.degree(), {});
    if (i < 0 || i % 2 == 0) return {};
    return odd_group(spec, 1);
}

void validate(const GlobalAlgebraSpec& g) {
    certify_irreducible(g.center);
    for (size_t a = 0; a < g.ramification.size(); ++a) {
        const RamifiedPrime& rp = g.ramification[a];
        if (rp.e < 2) throw std::invalid_argument("ramification index e_P must be >= 2");
        PrimeDecomposition dec = factor_prime(g.center, rp.id.p);
        if (rp.id.index < 0 || rp.id.index >= static_cast<int>(dec.factors.size()))
            throw std::invalid_argument("prime ideal index out of range for p = " + std::to_string(rp.id.p));
        for (size_t b = 0; b < a; ++b)
            if (g.ramification[b].id == rp.id) throw std::invalid_argument("duplicate ramified prime ideal");
    }
}

AbelianGroupFG thh_U(const GlobalAlgebraSpec& g, int i) {
    validate(g);
    if (i < 0) return {};
    if (i == 0) return even_torsion(g, g.center.degree());
    if (i % 2) return thh_V(g.center, i);
    return even_torsion(g, 0);
}

AbelianGroupFG hh_U(const GlobalAlgebraSpec& g, int i) {
    validate(g);
    if (i < 0) return {};
    if (i == 0) return even_torsion(g, g.center.degree());
    if (i % 2) return hh_V(g.center, i);
    return even_torsion(g, 0);
}

std::optional<Tower> local_tower(const GlobalAlgebraSpec& g, const RamifiedPrime& rp) {
    PrimeDecomposition dec = factor_prime(g.center, rp.id.p);
    const PrimeFactor& pf = dec.factors.at(rp.id.index);
    std::vector<std::vector<i64>> eis;
    if (rp.local_eisenstein)
        eis = *rp.local_eisenstein;
    else if (pf.e == 1)
        eis = {{-rp.id.p}, {1}};
    else
        return std::nullopt;
    if (static_cast<int>(eis.size()) - 1 != pf.e)
        throw std::invalid_argument("local Eisenstein polynomial degree differs from e(P|p)");
    return Tower::make(rp.id.p, pf.f, eis, rp.e, 0);
}

ConsistencyReport local_global_consistency(const GlobalAlgebraSpec& g, int i) {
    if (i < 1) throw std::invalid_argument("local_global_consistency: degree must be >= 1");
    validate(g);
    ConsistencyReport rep;
    const AbelianGroupFG global = thh_U(g, i);
    std::map<i64, bool> odd_done;
    for (const RamifiedPrime& rp : g.ramification) {
        const i64 p = rp.id.p;
        PrimeDecomposition dec = factor_prime(g.center, p);
        ConsistencyItem item;
        item.id = rp.id;
        if (i % 2 == 0) {
            item.check = "even";
            // local answer F_S^{e_P - 1} with |F_S| = p^{f_P}; compare with the P-part of the global group
            const int f = dec.factors.at(rp.id.index).f;
            std::optional<Tower> t = local_tower(g, rp);
            int local_copies = (rp.e - 1) * f;
            if (t) {
                LocalModule m = thh_A(*t, i);
                local_copies = m.length_sum() * t->r();
                if (m.at_cap != 0 || std::any_of(m.pi_lengths.begin(), m.pi_lengths.end(), [](int l) { return l != 1; }))
                    local_copies = -1;
            }
            int global_copies = 0;
            bool elementary = true;
            for (const auto& [q, e] : global.prime_powers())
                if (q == static_cast<long>(p)) {
                    ++global_copies;
                    elementary = elementary && e == 1;
                }
            // the global group sums every ramified P over p; isolate this P's share
            int others = 0;
            for (const RamifiedPrime& o : g.ramification)
                if (o.id.p == p && !(o.id == rp.id)) others += (o.e - 1) * dec.factors.at(o.id.index).f;
            item.local = "F_" + std::to_string(p) + "^" + std::to_string(local_copies);
            item.global = "(Z/" + std::to_string(p) + ")^" + std::to_string(global_copies - others);
            item.ok = elementary && local_copies == global_copies - others;
        } else {
            if (odd_done[p]) continue;
            odd_done[p] = true;
            item.check = "odd";
            const int a = (i + 1) / 2;
            int global_exp = 0;
            for (const auto& [q, e] : global.prime_powers())
                if (q == static_cast<long>(p)) global_exp += e;
            // log_p of |S_P/(a P'(pi))| summed over all P | p, scaled by the residue degree
            int local_exp = 0;
            for (int idx = 0; idx < static_cast<int>(dec.factors.size()); ++idx) {
                const PrimeFactor& pf = dec.factors[idx];
                int diff = -1;
                const RamifiedPrime* supplied = nullptr;
                for (const RamifiedPrime& o : g.ramification)
                    if (o.id.p == p && o.id.index == idx) supplied = &o;
                if (supplied) {
                    if (std::optional<Tower> t = local_tower(g, *supplied)) diff = different_valuation(*t);
                } else if (pf.e == 1) {
                    diff = 0;
                }
                if (diff < 0 && pf.e % p != 0) diff = pf.e - 1;
                if (diff < 0) {
                    item.skipped = true;
                    continue;
                }
                local_exp += pf.f * (pf.e * vp(a, p) + diff);
            }
            item.local = std::to_string(p) + "^" + std::to_string(local_exp);
            item.global = std::to_string(p) + "^" + std::to_string(global_exp);
            item.ok = item.skipped || local_exp == global_exp;
        }
        rep.ok = rep.ok && item.ok;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

}  // namespace thh
