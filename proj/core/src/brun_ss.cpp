#include "thh/brun_ss.hpp"

#include <algorithm>

#include "thh/small_complexes.hpp"

namespace thh {

namespace {

CMatrix block_diag(const std::vector<const CMatrix*>& blocks, int n, const ChainRing& R) {
    int cols = 0;
    for (const CMatrix* b : blocks) cols += b->cols;
    CMatrix m(n * static_cast<int>(blocks.size()), cols, R);
    int c0 = 0;
    for (size_t j = 0; j < blocks.size(); ++j) {
        const CMatrix& b = *blocks[j];
        for (int i = 0; i < b.rows; ++i)
            for (int c = 0; c < b.cols; ++c) m.at(static_cast<int>(j) * n + i, c0 + c) = b.at(i, c);
        c0 += b.cols;
    }
    return m;
}

LocalModule span_module(const CMatrix& X, const CMatrix& Y, const ChainRing& R) {
    return subquotient(hcat(X, Y, R), Y, R);
}

LocalModule sum(const LocalModule& a, const LocalModule& b) {
    std::vector<int> l = a.pi_lengths;
    l.insert(l.end(), b.pi_lengths.begin(), b.pi_lengths.end());
    return make_module(std::move(l), a.at_cap + b.at_cap);
}

}  // namespace

CMatrix TwoRowPage::cycles(int m) const {
    std::vector<const CMatrix*> b;
    for (int j = 0; j < components(m); ++j) b.push_back(&hh.at(m - 2 * j).Z);
    return block_diag(b, n, *ring);
}

CMatrix TwoRowPage::boundaries(int m) const {
    std::vector<const CMatrix*> b;
    for (int j = 0; j < components(m); ++j) b.push_back(&hh.at(m - 2 * j).B);
    return block_diag(b, n, *ring);
}

TwoRowPage build_E2(const Tower& t, int max_total) {
    if (max_total < 0) throw std::invalid_argument("build_E2: negative degree");
    TwoRowPage page;
    page.ring = t.S_modp();
    page.n = t.n();
    page.r = t.r();
    page.max_total = max_total;
    const ChainRing& R = *page.ring;
    Complex c = small_complex(t, Flavor::modp, max_total + 3);
    for (int i = 0; i <= max_total + 1; ++i) {
        HHClasses h;
        h.Z = kernel(c.diff(i), R);
        h.B = c.diff(i + 1);
        h.module = span_module(h.Z, h.B, R);
        page.hh.push_back(std::move(h));
    }
    for (int m = 0; m <= max_total + 1; ++m) {
        LocalModule e;
        for (int j = 0; j < page.components(m); ++j) e = sum(e, page.hh[m - 2 * j].module);
        page.row.push_back(e);
    }
    return page;
}

CMatrix d2(const TwoRowPage& page, int m) {
    if (m < 2) throw std::invalid_argument("d2: source degree must be >= 2");
    const ChainRing& R = *page.ring;
    const int n = page.n;
    CMatrix D(n * page.components(m - 2), n * page.components(m), R);
    for (int j = 0; j < page.components(m); ++j) {
        if (j >= 1)
            for (int i = 0; i < n; ++i) D.at((j - 1) * n + i, j * n + i) = R.from_int(j);
        if (m - 2 * j >= 2)
            for (int i = 0; i < n; ++i) D.at(j * n + i, j * n + i) = R.neg(R.one());
    }
    return D;
}

Einfty compute_Einfty(const TwoRowPage& page) {
    const ChainRing& R = *page.ring;
    Einfty e;
    const int top = page.max_total + 1;
    for (int m = 0; m <= std::min(1, top); ++m) e.terms[{m, 0}] = page.row[m];
    for (int m = 2; m <= top; ++m) {
        CMatrix D = d2(page, m);
        CMatrix zs = page.cycles(m), bs = page.boundaries(m);
        CMatrix zt = page.cycles(m - 2), bt = page.boundaries(m - 2);
        CMatrix dz = matmul(D, zs, R);
        CMatrix k = kernel(hcat(dz, bt, R), R);
        CMatrix ker = matmul(zs, row_range(k, 0, zs.cols, R), R);
        LocalModule kmod = span_module(ker, bs, R);
        LocalModule img = span_module(dz, bt, R);
        LocalModule cok = span_module(zt, hcat(bt, dz, R), R);
        if (kmod.length_sum() + img.length_sum() != page.row[m].length_sum() ||
            img.length_sum() + cok.length_sum() != page.row[m - 2].length_sum())
            throw verification_error("compute_Einfty: d2 kernel/image/cokernel lengths are inconsistent");
        e.terms[{m, 0}] = kmod;
        e.terms[{m - 2, 1}] = cok;
        e.rank_d2[m] = page.r * img.length_sum();
    }
    return e;
}

bool rank_nullity_holds(const TwoRowPage& page, const Einfty& e, int i) {
    auto dim = [&](int s, int t) {
        auto it = e.terms.find({s, t});
        return it == e.terms.end() ? 0 : page.r * it->second.length_sum();
    };
    auto rk = [&](int m) {
        auto it = e.rank_d2.find(m);
        return it == e.rank_d2.end() ? 0 : it->second;
    };
    int e2 = page.dim(i) + (i >= 1 ? page.dim(i - 1) : 0);
    return dim(i, 0) + dim(i - 1, 1) == e2 - rk(i) - rk(i + 1);
}

ModpGradedResult assemble(const Tower& t, const TwoRowPage& page, const Einfty& e) {
    const i64 p = t.p();
    const int d = t.d();
    const bool tame = d % p != 0;
    auto term = [&](int s, int tt) {
        auto it = e.terms.find({s, tt});
        return it == e.terms.end() ? LocalModule{} : it->second;
    };
    // expected shape: row 1 is F_S exactly at s = 2k-2 with p | k and p not dividing d
    for (int s = 0; s < page.max_total; ++s) {
        LocalModule got = term(s, 1);
        const int k = (s + 2) / 2;
        bool expect = s % 2 == 0 && k % p == 0 && tame;
        if (got != (expect ? make_module({1}) : LocalModule{}))
            throw verification_error("assemble: unexpected E-infinity in row 1 at s = " + std::to_string(s));
    }
    for (int s = 0; s <= page.max_total; ++s) {
        LocalModule want = (s % 2 == 0 && (s / 2) % p == 0) ? page.hh[0].module : page.hh[s].module;
        if (term(s, 0) != want)
            throw verification_error("assemble: unexpected E-infinity in row 0 at s = " + std::to_string(s));
    }

    ModpGradedResult out;
    for (int i = 0; i <= page.max_total; ++i) {
        LocalModule top = term(i, 0), low = i >= 1 ? term(i - 1, 1) : LocalModule{};
        bool merge = i % 2 == 1 && ((i + 1) / 2) % p == 0 && tame && low.num_summands() > 0 &&
                     top.num_summands() > 0;
        if (merge) {
            std::vector<int> l = top.pi_lengths;
            if (d > 1) {
                auto it = std::find(l.begin(), l.end(), d - 1);
                if (it == l.end()) throw verification_error("assemble: no summand of length d-1 to extend");
                l.erase(it);
            }
            l.push_back(d);
            out.degree.push_back(make_module(std::move(l)));
        } else {
            out.degree.push_back(sum(top, low));
        }
        out.extension_merged.push_back(merge);
    }
    return out;
}

}  // namespace thh
