#include "thh/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace thh {

namespace {

LocalModule with_residue_copies(std::vector<int> lengths, int copies, int at_cap = 0) {
    for (int k = 0; k < copies; ++k) lengths.push_back(1);
    std::erase(lengths, 0);
    return make_module(std::move(lengths), at_cap);
}

LocalModule cyclic(int length) { return with_residue_copies({length}, 0); }

bool wild(const Tower& t) { return t.d() % t.p() == 0; }

}  // namespace

int pi_valuation_of_int(const Tower& t, long long a) {
    if (a == 0) throw std::invalid_argument("pi_valuation_of_int: zero has no finite valuation");
    int v = 0;
    while (a % t.p() == 0) {
        a /= t.p();
        ++v;
    }
    return t.d() * v;
}

LocalModule thh_S(const Tower& t, int i) {
    if (i < 0) return {};
    if (i == 0) return make_module({}, 1);
    if (i % 2 == 0) return {};
    const int a = (i + 1) / 2;
    return cyclic(pi_valuation_of_int(t, a) + different_valuation(t));
}

LocalModule thh_S_modp(const Tower& t, int i) {
    if (i < 0) return {};
    const int d = t.d();
    if (wild(t) || i == 0) return cyclic(d);
    const int k = (i + 1) / 2;  // i = 2k - 1 or 2k
    return cyclic(k % t.p() == 0 ? d : d - 1);
}

LocalModule hh_S_modp(const Tower& t, int i) {
    if (i < 0) return {};
    const int d = t.d();
    if (i == 0) return cyclic(d);
    // S/(p, P'(pi)) and the annihilator of P'(pi) in S/(p) both have length min(d, v(P'(pi)))
    return cyclic(std::min(d, different_valuation(t)));
}

LocalModule hh_A(const Tower& t, int i) {
    if (i < 0) return {};
    if (i == 0) return with_residue_copies({}, t.n() - 1, 1);
    if (i % 2) return cyclic(different_valuation(t));
    return with_residue_copies({}, t.n() - 1);
}

LocalModule hh_A_modp(const Tower& t, int i) {
    if (i < 0) return {};
    return with_residue_copies(hh_S_modp(t, i).pi_lengths, t.n() - 1);
}

LocalModule thh_A_modp(const Tower& t, int i) {
    if (i < 0) return {};
    return with_residue_copies(thh_S_modp(t, i).pi_lengths, t.n() - 1);
}

LocalModule thh_A(const Tower& t, int i) {
    if (i < 0) return {};
    if (i == 0) return with_residue_copies({}, t.n() - 1, 1);
    if (i % 2) return thh_S(t, i);
    return with_residue_copies({}, t.n() - 1);
}

LocalGraded evaluate(LocalModule (*f)(const Tower&, int), const Tower& t, int max_i) {
    LocalGraded g;
    for (int i = 0; i <= max_i; ++i) g[i] = f(t, i);
    return g;
}

UctReport uct_check(const Tower& t, int max_i) {
    UctReport rep;
    for (int i = 0; i <= max_i; ++i) {
        UctRow row;
        row.degree = i;
        const LocalModule m = thh_A_modp(t, i), cur = thh_A(t, i), prev = thh_A(t, i - 1);
        row.modp_rank = m.num_summands();
        row.tensor = cur.num_summands();
        row.tor = static_cast<int>(prev.pi_lengths.size());
        row.modp_length = m.length_sum();
        row.uct_length = cur.at_cap * t.d();
        for (int l : cur.pi_lengths) row.uct_length += std::min(l, t.d());
        for (int l : prev.pi_lengths) row.uct_length += std::min(l, t.d());
        row.ok = row.modp_rank == row.tensor + row.tor && row.modp_length == row.uct_length;
        rep.ok = rep.ok && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

BidegreeTable einfty_pattern(const Tower& t, int max_total) {
    BidegreeTable e;
    const int n1 = t.n() - 1;
    const LocalModule residue = with_residue_copies({}, n1);
    e[{0, 0}] = with_residue_copies({}, n1, 1);
    for (int s = 1; s <= max_total; s += 2) {
        const int a = (s + 1) / 2;
        LocalModule col0 = cyclic(pi_valuation_of_int(t, a) + different_valuation(t));
        if (col0.num_summands() > 0) e[{0, s}] = col0;
    }
    if (n1 == 0) return e;
    if (t.d() > 1) {
        for (int s = 1; s + 1 <= max_total; s += 2) e[{1, s}] = residue;
        return e;
    }
    const i64 p = t.p();
    for (int b = 1; b < p && 2 * b <= max_total; ++b) e[{2 * b, 0}] = residue;
    for (i64 s = 2 * p - 1; s <= max_total; s += 2 * p)
        for (int b = 0; b < p && 2 * b + 1 + s <= max_total; ++b) e[{2 * b + 1, static_cast<int>(s)}] = residue;
    return e;
}

}  // namespace thh
