#include "thh/cyclic_algebra.hpp"

#include <json.hpp>
#include <stdexcept>

#include "thh/fp_linalg.hpp"

namespace thh {

std::vector<i64> StructureAlgebra::mul(const std::vector<i64>& x, const std::vector<i64>& y) const {
    const i64 m = q();
    std::vector<i64> z(dim, 0);
    for (int a = 0; a < dim; ++a) {
        if (!x[a]) continue;
        for (int b = 0; b < dim; ++b) {
            if (!y[b]) continue;
            const i64 s = mulmod(x[a], y[b], m);
            for (int c = 0; c < dim; ++c) {
                const i64 t = coef(a, b, c);
                if (t) z[c] = (z[c] + mulmod(s, t, m)) % m;
            }
        }
    }
    return z;
}

std::vector<std::pair<int, i64>> StructureAlgebra::product(int a, int b) const {
    std::vector<std::pair<int, i64>> out;
    for (int c = 0; c < dim; ++c)
        if (i64 t = coef(a, b, c)) out.emplace_back(c, t);
    return out;
}

namespace {

StructureAlgebra build_from_tower(const Tower& t, bool modp) {
    const ChainRing& T = t.T();
    const int n = t.n(), d = t.d(), D = T.D();
    StructureAlgebra alg;
    alg.p = t.p();
    alg.K = modp ? 1 : T.K();
    alg.dim = n * d * D;
    alg.table.assign(static_cast<size_t>(alg.dim) * alg.dim * alg.dim, 0);
    const i64 m = alg.q();
    auto index = [&](int k, int j, int u) { return (k * d + j) * D + u; };
    auto elem = [&](int j, int u) {
        ChainRing::Elem e = T.zero();
        e[static_cast<size_t>(j) * D + u] = 1;
        return e;
    };
    std::vector<ChainRing::Elem> basis(static_cast<size_t>(d) * D);
    for (int j = 0; j < d; ++j)
        for (int u = 0; u < D; ++u) basis[j * D + u] = elem(j, u);
    // sigma^{-k} of each T basis element
    std::vector<std::vector<ChainRing::Elem>> twisted(n);
    for (int k = 0; k < n; ++k)
        for (auto& b : basis) twisted[k].push_back(t.sigma_pow(b, -k));
    const ChainRing::Elem pi = T.pi();
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < d; ++j)
            for (int u = 0; u < D; ++u) {
                const int a = index(k, j, u);
                for (int k2 = 0; k2 < n; ++k2)
                    for (int j2 = 0; j2 < d; ++j2)
                        for (int u2 = 0; u2 < D; ++u2) {
                            const int b = index(k2, j2, u2);
                            ChainRing::Elem y = T.mul(basis[j * D + u], twisted[k][j2 * D + u2]);
                            int kk = k + k2;
                            if (kk >= n) {
                                y = T.mul(y, pi);
                                kk -= n;
                            }
                            for (int J = 0; J < d; ++J)
                                for (int U = 0; U < D; ++U) {
                                    i64 v = reduce(y[static_cast<size_t>(J) * D + U], m);
                                    if (v) alg.coef(a, b, index(kk, J, U)) = v;
                                }
                        }
            }
    alg.unit.assign(alg.dim, 0);
    alg.unit[0] = 1;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < d; ++j)
            for (int u = 0; u < D; ++u)
                alg.labels.push_back("t^" + std::to_string(u) + " pi^" + std::to_string(j) + " x^" + std::to_string(k));
    if (modp) {
        alg.weight.resize(alg.dim);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < d; ++j)
                for (int u = 0; u < D; ++u) alg.weight[index(k, j, u)] = n * j + k;
    }
    return alg;
}

}  // namespace

StructureAlgebra build_modp(const Tower& t) {
    StructureAlgebra a = build_from_tower(t, true);
    if (!check_associative(a)) throw verification_error("build_modp: multiplication is not associative");
    return a;
}

StructureAlgebra build_integral(const Tower& t) {
    StructureAlgebra a = build_from_tower(t, false);
    if (!check_associative(a)) throw verification_error("build_integral: multiplication is not associative");
    return a;
}

StructureAlgebra reduce_mod_p(const StructureAlgebra& a) {
    StructureAlgebra b = a;
    b.K = 1;
    for (auto& v : b.table) v = reduce(v, b.p);
    for (auto& v : b.unit) v = reduce(v, b.p);
    return b;
}

bool check_associative(const StructureAlgebra& a) {
    const int n = a.dim;
    const i64 m = a.q();
    std::vector<std::vector<std::pair<int, i64>>> prod(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) prod[x * n + y] = a.product(x, y);
    std::vector<i64> lhs(n), rhs(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (auto& [c, s] : prod[x * n + y])
                    for (auto& [e, t] : prod[c * n + z]) lhs[e] = (lhs[e] + mulmod(s, t, m)) % m;
                for (auto& [c, s] : prod[y * n + z])
                    for (auto& [e, t] : prod[x * n + c]) rhs[e] = (rhs[e] + mulmod(s, t, m)) % m;
                if (lhs != rhs) return false;
            }
    return true;
}

bool check_unit(const StructureAlgebra& a) {
    for (int b = 0; b < a.dim; ++b) {
        std::vector<i64> e(a.dim, 0);
        e[b] = 1;
        if (a.mul(a.unit, e) != e || a.mul(e, a.unit) != e) return false;
    }
    return true;
}

bool check_weight_grading(const StructureAlgebra& a) {
    if (a.weight.empty()) return true;
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            for (auto& [c, s] : a.product(x, y))
                if (a.weight[c] != a.weight[x] + a.weight[y]) return false;
    return true;
}

int center_dim(const StructureAlgebra& a) {
    if (a.K != 1) throw std::invalid_argument("center_dim: algebra must be over F_p");
    std::vector<std::vector<i64>> rows;
    for (int b = 0; b < a.dim; ++b)
        for (int c = 0; c < a.dim; ++c) {
            std::vector<i64> row(a.dim);
            for (int z = 0; z < a.dim; ++z) row[z] = reduce(a.coef(z, b, c) - a.coef(b, z, c), a.p);
            rows.push_back(std::move(row));
        }
    return a.dim - rank_dense_mod_p(std::move(rows), a.p);
}

namespace {

// Gaussian elimination over F_q on a dense matrix of field elements.
int rank_over(const FqField& F, std::vector<std::vector<FqElem>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!F.is_zero(m[r][c])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        FqElem inv = F.inv(m[rank][c]);
        for (int r = rank + 1; r < rows; ++r) {
            if (F.is_zero(m[r][c])) continue;
            FqElem f = F.mul(m[r][c], inv);
            for (int k = c; k < cols; ++k) m[r][k] = F.sub(m[r][k], F.mul(f, m[rank][k]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

SplitResult split_scalars(const Tower& t) {
    const int n = t.n(), d = t.d();
    const FqField& FT = t.F_T();
    SplitResult res;
    StructureAlgebra& s = res.algebra;
    s.p = t.p();
    s.K = 1;
    s.dim = n * n * d;
    auto sidx = [&](int i, int j, int k) { return (k * d + j) * n + i; };
    s.table.assign(static_cast<size_t>(s.dim) * s.dim * s.dim, 0);
    s.weight.resize(s.dim);
    s.left.resize(s.dim);
    s.right.resize(s.dim);
    s.in_frame.assign(s.dim, 0);
    s.unit.assign(s.dim, 0);
    s.labels.resize(s.dim);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < n; ++i) {
                const int a = sidx(i, j, k);
                s.weight[a] = n * j + k;
                s.left[a] = i;
                s.right[a] = ((i - k) % n + n) % n;
                s.in_frame[a] = (j == 0 && k == 0);
                if (s.in_frame[a]) s.unit[a] = 1;
                s.labels[a] = "e_" + std::to_string(i) + " pi^" + std::to_string(j) + " x^" + std::to_string(k);
                for (int k2 = 0; k2 < n; ++k2)
                    for (int j2 = 0; j2 < d; ++j2)
                        for (int i2 = 0; i2 < n; ++i2) {
                            if (i != (i2 + k) % n) continue;
                            int e = j + j2, kk = k + k2;
                            if (kk >= n) {
                                kk -= n;
                                ++e;
                            }
                            if (e >= d) continue;
                            s.coef(a, sidx(i2, j2, k2), sidx(i, e, kk)) = 1;
                        }
            }

    // closure of the basis under products
    res.weakly_monoidal = check_associative(s) && check_unit(s);
    for (int a = 0; a < s.dim && res.weakly_monoidal; ++a)
        for (int b = 0; b < s.dim; ++b) {
            auto pr = s.product(a, b);
            if (pr.size() > 1 || (pr.size() == 1 && pr[0].second != 1)) {
                res.weakly_monoidal = false;
                break;
            }
        }

    res.idempotent_shift = true;
    if (n > 1) {
        std::vector<i64> x(s.dim, 0);
        for (int i = 0; i < n; ++i) x[sidx(i, 0, 1)] = 1;
        for (int i = 0; i < n; ++i) {
            std::vector<i64> ei(s.dim, 0), ej(s.dim, 0);
            ei[sidx(i, 0, 0)] = 1;
            ej[sidx((i - 1 + n) % n, 0, 0)] = 1;
            if (s.mul(ei, x) != s.mul(x, ej)) res.idempotent_shift = false;
        }
    }

    // phi on the F_S-basis beta^m pi^j x^k of A/(p), computed against build_modp's table
    const WittRing& Wp = t.Wp();
    const ChainRing& T = t.T();
    const int D = T.D();
    auto sig = [&](const FqElem& x, int i) { return T.residue(t.sigma_pow(T.from_witt(Wp.lift(x)), i)); };
    auto phi_of = [&](const std::vector<FqElem>& coeffs) {
        // coeffs[k*d + j] in F_T  ->  split vector over F_T
        std::vector<FqElem> v(s.dim, FT.zero());
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < d; ++j) {
                const FqElem& c = coeffs[k * d + j];
                if (FT.is_zero(c)) continue;
                for (int i = 0; i < n; ++i) v[sidx(i, j, k)] = sig(c, i);
            }
        return v;
    };
    StructureAlgebra A = build_modp(t);
    auto amod_to_ft = [&](const std::vector<i64>& vec) {
        std::vector<FqElem> out(static_cast<size_t>(n) * d, FT.zero());
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < d; ++j) {
                FpPoly poly(D, 0);
                for (int u = 0; u < D; ++u) poly[u] = vec[(k * d + j) * D + u];
                out[k * d + j] = FT.from_poly(fp::from_ints(poly, t.p()));
            }
        return out;
    };
    auto basis_vec = [&](int m, int j, int k) {
        // beta^m as F_p coordinates in build_modp's basis
        FqElem b = FT.pow(FT.gen(), static_cast<u64>(m));
        std::vector<i64> v(A.dim, 0);
        for (int u = 0; u < D; ++u) v[(k * d + j) * D + u] = b.c[u];
        return v;
    };
    std::vector<std::vector<FqElem>> phi_cols;
    std::vector<std::vector<i64>> abasis;
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < d; ++j)
            for (int m = 0; m < n; ++m) {
                abasis.push_back(basis_vec(m, j, k));
                phi_cols.push_back(phi_of(amod_to_ft(abasis.back())));
            }
    auto split_mul = [&](const std::vector<FqElem>& x, const std::vector<FqElem>& y) {
        std::vector<FqElem> z(s.dim, FT.zero());
        for (int a = 0; a < s.dim; ++a) {
            if (FT.is_zero(x[a])) continue;
            for (int b = 0; b < s.dim; ++b) {
                if (FT.is_zero(y[b])) continue;
                for (auto& [c, v] : s.product(a, b)) z[c] = FT.add(z[c], FT.scale(FT.mul(x[a], y[b]), v));
            }
        }
        return z;
    };
    res.phi_multiplicative = true;
    for (size_t u = 0; u < abasis.size() && res.phi_multiplicative; ++u)
        for (size_t v = 0; v < abasis.size(); ++v) {
            auto lhs = phi_of(amod_to_ft(A.mul(abasis[u], abasis[v])));
            auto rhs = split_mul(phi_cols[u], phi_cols[v]);
            if (lhs != rhs) {
                res.phi_multiplicative = false;
                break;
            }
        }
    res.phi_bijective = rank_over(FT, phi_cols) == s.dim && static_cast<int>(phi_cols.size()) == s.dim;
    return res;
}

std::string algebra_to_json(const StructureAlgebra& a) {
    nlohmann::ordered_json j;
    j["p"] = a.p;
    j["K"] = a.K;
    j["dim"] = a.dim;
    j["labels"] = a.labels;
    j["unit"] = a.unit;
    nlohmann::ordered_json tab = nlohmann::ordered_json::array();
    for (int x = 0; x < a.dim; ++x) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int y = 0; y < a.dim; ++y) {
            std::vector<i64> v(a.dim);
            for (int c = 0; c < a.dim; ++c) v[c] = a.coef(x, y, c);
            row.push_back(v);
        }
        tab.push_back(row);
    }
    j["table"] = tab;
    if (!a.weight.empty()) j["weights"] = a.weight;
    if (a.has_frame()) {
        j["frame"] = {{"left", a.left}, {"right", a.right}, {"idempotent", std::vector<int>(a.in_frame.begin(), a.in_frame.end())}};
    }
    return j.dump(2);
}

StructureAlgebra algebra_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("algebra json: ") + e.what());
    }
    try {
        StructureAlgebra a;
        a.p = j.at("p").get<i64>();
        a.K = j.value("K", 1);
        if (!is_prime(a.p) || a.K < 1) throw std::invalid_argument("algebra json: bad ring");
        const i64 m = a.q();
        const auto& tab = j.at("table");
        a.dim = j.contains("dim") ? j.at("dim").get<int>() : static_cast<int>(tab.size());
        if (a.dim < 1 || static_cast<int>(tab.size()) != a.dim) throw std::invalid_argument("algebra json: table shape");
        a.table.assign(static_cast<size_t>(a.dim) * a.dim * a.dim, 0);
        for (int x = 0; x < a.dim; ++x) {
            if (static_cast<int>(tab[x].size()) != a.dim) throw std::invalid_argument("algebra json: table shape");
            for (int y = 0; y < a.dim; ++y) {
                if (static_cast<int>(tab[x][y].size()) != a.dim) throw std::invalid_argument("algebra json: table shape");
                for (int c = 0; c < a.dim; ++c) a.coef(x, y, c) = reduce(tab[x][y][c].get<i64>(), m);
            }
        }
        if (j.contains("unit")) {
            a.unit = j.at("unit").get<std::vector<i64>>();
            if (static_cast<int>(a.unit.size()) != a.dim) throw std::invalid_argument("algebra json: unit shape");
            for (auto& v : a.unit) v = reduce(v, m);
        } else {
            a.unit.assign(a.dim, 0);
            a.unit[0] = 1;
        }
        if (j.contains("labels")) a.labels = j.at("labels").get<std::vector<std::string>>();
        else
            for (int x = 0; x < a.dim; ++x) a.labels.push_back("b" + std::to_string(x));
        if (j.contains("weights")) {
            a.weight = j.at("weights").get<std::vector<int>>();
            if (static_cast<int>(a.weight.size()) != a.dim) throw std::invalid_argument("algebra json: weights shape");
        }
        if (j.contains("frame")) {
            const auto& f = j.at("frame");
            a.left = f.at("left").get<std::vector<int>>();
            a.right = f.at("right").get<std::vector<int>>();
            auto idem = f.at("idempotent").get<std::vector<int>>();
            if (static_cast<int>(a.left.size()) != a.dim || static_cast<int>(a.right.size()) != a.dim ||
                static_cast<int>(idem.size()) != a.dim)
                throw std::invalid_argument("algebra json: frame shape");
            a.in_frame.assign(idem.begin(), idem.end());
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("algebra json: ") + e.what());
    }
}

}  // namespace thh
