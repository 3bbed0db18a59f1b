#include "thh/hochschild.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace thh {

std::shared_ptr<const ChainRing> prime_chain_ring(i64 p, int K) {
    auto W = std::make_shared<const WittRing>(fq_make(p, 1), K);
    return std::make_shared<const ChainRing>(W, std::vector<WittRing::Elem>{W->from_int(-p)}, W->from_int(-1), false);
}

namespace {

struct Layout {
    int dim = 0;
    bool frame = false;
    std::vector<char> trivial;  // excluded from positions >= 1
    std::vector<int> left, right, weight;
    std::vector<std::vector<std::pair<int, i64>>> prod;
};

Layout make_layout(const StructureAlgebra& a, const HochschildOptions& opt) {
    Layout L;
    L.dim = a.dim;
    L.frame = opt.use_frame && a.has_frame();
    L.trivial.assign(a.dim, 0);
    if (L.frame) {
        L.trivial = a.in_frame;
        L.left = a.left;
        L.right = a.right;
    } else {
        bool unit_is_e0 = a.unit[0] == 1 && std::all_of(a.unit.begin() + 1, a.unit.end(), [](i64 v) { return v == 0; });
        if (unit_is_e0) L.trivial[0] = 1;
        L.left.assign(a.dim, 0);
        L.right.assign(a.dim, 0);
    }
    L.weight = (opt.use_weights && !a.weight.empty()) ? a.weight : std::vector<int>(a.dim, 0);
    L.prod.resize(static_cast<size_t>(a.dim) * a.dim);
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y) {
            auto pr = a.product(x, y);
            for (auto& [c, v] : pr) v = reduce(v, a.p);
            pr.erase(std::remove_if(pr.begin(), pr.end(), [](auto& e) { return e.second == 0; }), pr.end());
            L.prod[static_cast<size_t>(x) * a.dim + y] = std::move(pr);
        }
    return L;
}

// Number of tuples in C_k, saturating.
double count_chains(const Layout& L, int k) {
    int nid = 1;
    for (int b = 0; b < L.dim; ++b) nid = std::max({nid, L.left[b] + 1, L.right[b] + 1});
    // M[l][r]: nontrivial elements from l to r
    std::vector<std::vector<double>> M(nid, std::vector<double>(nid, 0)), P(nid, std::vector<double>(nid, 0));
    for (int b = 0; b < L.dim; ++b)
        if (!L.trivial[b]) M[L.left[b]][L.right[b]] += 1;
    for (int i = 0; i < nid; ++i) P[i][i] = 1;
    for (int s = 0; s < k; ++s) {
        std::vector<std::vector<double>> Q(nid, std::vector<double>(nid, 0));
        for (int i = 0; i < nid; ++i)
            for (int j = 0; j < nid; ++j)
                for (int l = 0; l < nid; ++l) Q[i][l] += P[i][j] * M[j][l];
        P = std::move(Q);
    }
    double total = 0;
    for (int b = 0; b < L.dim; ++b) total += P[L.right[b]][L.left[b]];
    return total;
}

HochschildChains enumerate(const Layout& L, int k, std::size_t cap) {
    const double count = count_chains(L, k);
    if (count > static_cast<double>(cap))
        throw std::length_error("hochschild: C_" + std::to_string(k) + " has dimension " +
                                std::to_string(static_cast<long long>(count)) + ", above the cap " + std::to_string(cap));
    HochschildChains ch;
    ch.degree = k;
    std::map<int, std::vector<int>> blocks;
    std::vector<int> tup(k + 1);
    auto rec = [&](auto&& self, int pos, int wsum) -> void {
        if (pos == k + 1) {
            if (L.right[tup[k]] != L.left[tup[0]]) return;
            auto& v = blocks[wsum];
            v.insert(v.end(), tup.begin(), tup.end());
            return;
        }
        for (int b = 0; b < L.dim; ++b) {
            if (pos > 0 && (L.trivial[b] || L.right[tup[pos - 1]] != L.left[b])) continue;
            tup[pos] = b;
            self(self, pos + 1, wsum + L.weight[b]);
        }
    };
    rec(rec, 0, 0);
    for (auto& [w, v] : blocks) {
        ch.block_weight.push_back(w);
        ch.dim += static_cast<long long>(v.size()) / (k + 1);
        ch.block_tuples.push_back(std::move(v));
    }
    return ch;
}

struct TupleIndex {
    int stride = 1;
    int dim = 0;
    bool dense = false;
    std::vector<int> dense_loc;
    std::unordered_map<u64, int> sparse_loc;

    u64 code(const int* t) const {
        u64 c = 0;
        for (int i = stride - 1; i >= 0; --i) c = c * dim + t[i];
        return c;
    }
    int find(const int* t) const {
        u64 c = code(t);
        if (dense) return dense_loc[c];
        auto it = sparse_loc.find(c);
        return it == sparse_loc.end() ? -1 : it->second;
    }
};

// local index within its block for every tuple of dst
TupleIndex index_chains(const HochschildChains& ch, int dim) {
    TupleIndex ix;
    ix.stride = ch.degree + 1;
    ix.dim = dim;
    double space = 1;
    for (int i = 0; i < ix.stride; ++i) space *= dim;
    ix.dense = space <= static_cast<double>(1 << 24);
    if (ix.dense) ix.dense_loc.assign(static_cast<size_t>(space), -1);
    for (const auto& v : ch.block_tuples) {
        const int cnt = static_cast<int>(v.size()) / ix.stride;
        for (int i = 0; i < cnt; ++i) {
            u64 c = ix.code(&v[static_cast<size_t>(i) * ix.stride]);
            if (ix.dense) ix.dense_loc[c] = i;
            else ix.sparse_loc.emplace(c, i);
        }
    }
    return ix;
}

SparseFpMatrix differential_block(const Layout& L, i64 p, const HochschildChains& src, size_t b,
                                  const HochschildChains& dst, const TupleIndex& dix) {
    const int k = src.degree;
    SparseFpMatrix m;
    const auto& tuples = src.block_tuples[b];
    m.cols = static_cast<int>(tuples.size()) / (k + 1);
    m.col.resize(m.cols);
    auto it = std::find(dst.block_weight.begin(), dst.block_weight.end(), src.block_weight[b]);
    m.rows = it == dst.block_weight.end() ? 0
                                          : static_cast<int>(dst.block_tuples[it - dst.block_weight.begin()].size()) / k;
    std::vector<int> out(k);
    std::vector<std::pair<int, i64>> acc;
    for (int c = 0; c < m.cols; ++c) {
        const int* t = &tuples[static_cast<size_t>(c) * (k + 1)];
        acc.clear();
        auto emit = [&](i64 coef) {
            int r = dix.find(out.data());
            if (r < 0 || r >= m.rows) throw std::logic_error("hochschild: face outside the chain basis");
            acc.emplace_back(r, coef);
        };
        for (int i = 0; i < k; ++i) {
            const i64 sign = (i % 2 == 0) ? 1 : p - 1;
            for (auto& [prod, v] : L.prod[static_cast<size_t>(t[i]) * L.dim + t[i + 1]]) {
                if (i > 0 && L.trivial[prod]) continue;
                for (int j = 0; j < i; ++j) out[j] = t[j];
                out[i] = prod;
                for (int j = i + 2; j <= k; ++j) out[j - 1] = t[j];
                emit(mulmod(sign, v, p));
            }
        }
        const i64 sign = (k % 2 == 0) ? 1 : p - 1;
        for (auto& [prod, v] : L.prod[static_cast<size_t>(t[k]) * L.dim + t[0]]) {
            out[0] = prod;
            for (int j = 1; j < k; ++j) out[j] = t[j];
            emit(mulmod(sign, v, p));
        }
        std::sort(acc.begin(), acc.end());
        auto& col = m.col[c];
        for (size_t i = 0; i < acc.size();) {
            size_t j = i;
            i64 s = 0;
            while (j < acc.size() && acc[j].first == acc[i].first) s = (s + acc[j++].second) % p;
            if (s) col.emplace_back(acc[i].first, static_cast<std::uint32_t>(s));
            i = j;
        }
    }
    return m;
}

}  // namespace

HochschildChains hochschild_chains(const StructureAlgebra& a, int k, const HochschildOptions& opt) {
    return enumerate(make_layout(a, opt), k, opt.cap);
}

std::vector<SparseFpMatrix> hochschild_differential(const StructureAlgebra& a, const HochschildChains& src,
                                                    const HochschildChains& dst, const HochschildOptions& opt) {
    if (src.degree != dst.degree + 1 || src.degree < 1) throw std::invalid_argument("hochschild_differential: degrees");
    Layout L = make_layout(a, opt);
    TupleIndex dix = index_chains(dst, a.dim);
    std::vector<SparseFpMatrix> out;
    for (size_t b = 0; b < src.block_tuples.size(); ++b) out.push_back(differential_block(L, a.p, src, b, dst, dix));
    return out;
}

HochschildReport hochschild_homology(const StructureAlgebra& a, int max_degree, const HochschildOptions& opt) {
    if (a.K != 1) throw std::invalid_argument("hochschild_homology: algebra must be over F_p");
    if (max_degree < 0) throw std::invalid_argument("hochschild_homology: negative degree");
    Layout L = make_layout(a, opt);
    HochschildReport rep;
    rep.ranks.push_back(0);
    HochschildChains prev = enumerate(L, 0, opt.cap);
    rep.chain_dims.push_back(prev.dim);
    for (int k = 1; k <= max_degree + 1; ++k) {
        HochschildChains cur = enumerate(L, k, opt.cap);
        rep.chain_dims.push_back(cur.dim);
        TupleIndex dix = index_chains(prev, a.dim);
        std::atomic<size_t> next{0};
        std::atomic<long long> total{0};
        std::exception_ptr err;
        std::mutex err_mu;
        auto work = [&] {
            for (size_t b; (b = next++) < cur.block_tuples.size();) {
                try {
                    SparseFpMatrix m = differential_block(L, a.p, cur, b, prev, dix);
                    total += rank_mod_p(m, a.p);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mu);
                    err = std::current_exception();
                }
            }
        };
        const int nt = std::max(1, opt.threads);
        std::vector<std::thread> pool;
        for (int i = 1; i < nt; ++i) pool.emplace_back(work);
        work();
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
        rep.ranks.push_back(total);
        prev = std::move(cur);
    }
    for (int k = 0; k <= max_degree; ++k) rep.hh.push_back(rep.chain_dims[k] - rep.ranks[k] - rep.ranks[k + 1]);
    return rep;
}

Complex hochschild_complex(const StructureAlgebra& a, int max_degree, std::size_t cap) {
    auto R = prime_chain_ring(a.p, a.K);
    const int dim = a.dim;
    Complex c;
    c.ring = R;
    c.lo = 0;
    std::vector<long long> dims;
    for (int k = 0; k <= max_degree + 1; ++k) {
        double sz = 1;
        for (int i = 0; i <= k; ++i) sz *= dim;
        if (sz > static_cast<double>(cap)) throw std::length_error("hochschild_complex: chain group above the cap");
        dims.push_back(static_cast<long long>(sz));
        c.ranks.push_back(static_cast<int>(sz));
    }
    c.d.emplace_back();
    const i64 q = a.q();
    for (int k = 1; k <= max_degree + 1; ++k) {
        CMatrix m(c.ranks[k - 1], c.ranks[k], *R);
        std::vector<int> t(k + 1), out(k);
        for (int col = 0; col < c.ranks[k]; ++col) {
            int x = col;
            for (int i = 0; i <= k; ++i) {
                t[i] = x % dim;
                x /= dim;
            }
            auto add = [&](i64 coef) {
                int row = 0;
                for (int i = k - 1; i >= 0; --i) row = row * dim + out[i];
                auto& e = m.at(row, col);
                e = R->add(e, R->from_int(coef));
            };
            for (int i = 0; i < k; ++i)
                for (int pc = 0; pc < dim; ++pc) {
                    i64 v = a.coef(t[i], t[i + 1], pc);
                    if (!v) continue;
                    for (int j = 0; j < i; ++j) out[j] = t[j];
                    out[i] = pc;
                    for (int j = i + 2; j <= k; ++j) out[j - 1] = t[j];
                    add(i % 2 == 0 ? v : reduce(-v, q));
                }
            for (int pc = 0; pc < dim; ++pc) {
                i64 v = a.coef(t[k], t[0], pc);
                if (!v) continue;
                out[0] = pc;
                for (int j = 1; j < k; ++j) out[j] = t[j];
                add(k % 2 == 0 ? v : reduce(-v, q));
            }
        }
        c.d.push_back(std::move(m));
    }
    return c;
}

}  // namespace thh
