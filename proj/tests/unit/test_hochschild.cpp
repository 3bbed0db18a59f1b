#include <doctest.h>

#include "thh/cyclic_algebra.hpp"
#include "thh/fp_linalg.hpp"
#include "thh/hochschild.hpp"

using namespace thh;

namespace {

StructureAlgebra make_algebra(i64 p, int dim) {
    StructureAlgebra a;
    a.p = p;
    a.dim = dim;
    a.table.assign(static_cast<size_t>(dim) * dim * dim, 0);
    a.unit.assign(dim, 0);
    a.unit[0] = 1;
    for (int i = 0; i < dim; ++i) a.labels.push_back("b" + std::to_string(i));
    return a;
}

// F_p[x]/(x^m) on the basis x^i.
StructureAlgebra truncated_poly(i64 p, int m) {
    StructureAlgebra a = make_algebra(p, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; i + j < m; ++j) a.coef(i, j, i + j) = 1;
    return a;
}

// F_9 = F_3[t]/(t^2 + 1).
StructureAlgebra f9() {
    StructureAlgebra a = make_algebra(3, 2);
    a.coef(0, 0, 0) = 1;
    a.coef(0, 1, 1) = 1;
    a.coef(1, 0, 1) = 1;
    a.coef(1, 1, 0) = 2;
    return a;
}

// Oracle for degree 0: dim A - dim [A, A].
long long commutator_quotient_dim(const StructureAlgebra& a) {
    std::vector<std::vector<i64>> rows;
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y) {
            std::vector<i64> row(a.dim);
            for (int c = 0; c < a.dim; ++c) row[c] = reduce(a.coef(x, y, c) - a.coef(y, x, c), a.p);
            rows.push_back(row);
        }
    return a.dim - rank_dense_mod_p(rows, a.p);
}

HochschildOptions plain() {
    HochschildOptions o;
    o.use_frame = false;
    return o;
}

}  // namespace

TEST_CASE("commutative examples") {
    CHECK(hochschild_homology(f9(), 3, plain()).hh == std::vector<long long>{2, 0, 0, 0});
    // k[x]/(x^m): m, then m-1 in every positive degree when p does not divide m, else m
    CHECK(hochschild_homology(truncated_poly(3, 2), 5, plain()).hh == std::vector<long long>{2, 1, 1, 1, 1, 1});
    CHECK(hochschild_homology(truncated_poly(2, 2), 5, plain()).hh == std::vector<long long>{2, 2, 2, 2, 2, 2});
    CHECK(hochschild_homology(truncated_poly(3, 3), 4, plain()).hh == std::vector<long long>{3, 3, 3, 3, 3});
    CHECK(hochschild_homology(truncated_poly(5, 3), 4, plain()).hh == std::vector<long long>{3, 2, 2, 2, 2});
}

TEST_CASE("degree 0 equals the commutator quotient") {
    for (Tower t : {Tower::make(3, 1, {{-3}, {1}}, 2, 0), Tower::make(3, 1, {{-3}, {0}, {1}}, 2, 0),
                    Tower::make(2, 1, {{-2}, {0}, {1}}, 3, 0)}) {
        StructureAlgebra a = build_modp(t);
        CHECK(hochschild_homology(a, 0, plain()).hh.at(0) == commutator_quotient_dim(a));
    }
}

TEST_CASE("frozen oracle dimensions of the fixture algebras") {
    // split monoid algebras, frame-relative complex; values frozen from the oracle
    struct Row {
        Tower t;
        std::vector<long long> hh;
    };
    std::vector<Row> rows{{Tower::make(3, 1, {{-3}, {1}}, 2, 0), {2, 1, 1, 1, 1, 1}},
                          {Tower::make(3, 1, {{-3}, {0}, {1}}, 2, 0), {3, 2, 2, 2, 2, 2}},
                          {Tower::make(2, 1, {{-2}, {1}}, 2, 0), {2, 1, 1, 1, 1, 1}},
                          {Tower::make(2, 1, {{-2}, {0}, {1}}, 3, 0), {4, 4, 4, 4}}};
    for (const Row& r : rows) {
        StructureAlgebra a = split_scalars(r.t).algebra;
        CHECK(hochschild_homology(a, static_cast<int>(r.hh.size()) - 1).hh == r.hh);
    }
    // plain complex of A/(p) agrees where it is affordable
    CHECK(hochschild_homology(build_modp(rows[0].t), 4, plain()).hh == std::vector<long long>{2, 1, 1, 1, 1});
    CHECK(hochschild_homology(build_modp(rows[3].t), 1, plain()).hh == std::vector<long long>{4, 4});
}

TEST_CASE("options do not change the answer") {
    StructureAlgebra a = split_scalars(Tower::make(3, 1, {{-3}, {0}, {1}}, 2, 0)).algebra;
    HochschildOptions o1, o2;
    o2.use_weights = false;
    o2.threads = 4;
    HochschildOptions o3 = plain();
    auto h = hochschild_homology(a, 3, o1).hh;
    CHECK(hochschild_homology(a, 3, o2).hh == h);
    CHECK(hochschild_homology(a, 3, o3).hh == h);
}

TEST_CASE("dense complex is a complex; the cap is enforced") {
    Complex c = hochschild_complex(truncated_poly(3, 2), 3);
    CHECK(c.is_complex());
    Complex d = hochschild_complex(build_modp(Tower::make(3, 1, {{-3}, {1}}, 2, 0)), 2);
    CHECK(d.is_complex());
    HochschildOptions tiny;
    tiny.cap = 10;
    CHECK_THROWS_AS(hochschild_homology(build_modp(Tower::make(3, 1, {{-3}, {1}}, 2, 0)), 4, tiny), std::length_error);
}
