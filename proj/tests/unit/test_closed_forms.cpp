#include <doctest.h>

#include "thh/closed_forms.hpp"
#include "thh/small_complexes.hpp"

using namespace thh;

namespace {

Tower fixA() { return Tower::make(3, 1, {{-3}, {1}}, 2, 0); }
Tower fixB() { return Tower::make(3, 1, {{-3}, {0}, {1}}, 2, 0); }
Tower fixC() { return Tower::make(2, 1, {{-2}, {1}}, 2, 0); }
Tower fixD() { return Tower::make(2, 1, {{-2}, {0}, {1}}, 3, 0); }

}  // namespace

TEST_CASE("thh of S") {
    CHECK(thh_S(fixA(), 1).num_summands() == 0);
    CHECK(thh_S(fixA(), 5) == make_module({1}));
    CHECK(thh_S(fixB(), 1) == make_module({1}));
    CHECK(thh_S(fixB(), 2).num_summands() == 0);
    CHECK(thh_S(fixA(), 0) == make_module({}, 1));
}

TEST_CASE("thh of S mod p") {
    for (int i = 0; i <= 8; ++i) CHECK(thh_S_modp(fixD(), i) == make_module({2}));
    CHECK(thh_S_modp(fixA(), 2).num_summands() == 0);
    CHECK(thh_S_modp(fixB(), 6) == make_module({2}));
    CHECK(thh_S_modp(fixB(), 5) == make_module({2}));
    CHECK(thh_S_modp(fixB(), 3) == make_module({1}));
    CHECK(thh_S_modp(fixB(), 0) == make_module({2}));
}

TEST_CASE("hh and thh of A") {
    CHECK(hh_A(fixA(), 2) == make_module({1}));
    CHECK(hh_A(fixD(), 1) == make_module({3}));
    CHECK(hh_A(fixA(), 0) == make_module({1}, 1));
    CHECK(hh_A_modp(fixB(), 1) == make_module({1, 1}));
    CHECK(thh_A(fixA(), 3).num_summands() == 0);
    CHECK(thh_A(fixA(), 2) == make_module({1}));
    CHECK(thh_A(fixD(), 1) == make_module({3}));
}

TEST_CASE("integral HH closed form agrees with the small complex at d*K >= 8") {
    for (Tower t0 : {fixA(), fixB(), fixC(), fixD()}) {
        Tower t = t0.with_precision(std::max(t0.K(), (8 + t0.d() - 1) / t0.d()));
        auto h = hh_A_via_small(t, Flavor::integral, 6);
        const int dv = different_valuation(t);
        for (int i = 0; i <= 6; ++i) {
            CHECK(h[i] == hh_A(t, i));
            if (i == 0) CHECK(h[i] == make_module(std::vector<int>(t.n() - 1, 1), 1));
            else if (i % 2) CHECK(h[i] == make_module({dv}));
            else CHECK(h[i] == make_module(std::vector<int>(t.n() - 1, 1)));
        }
    }
}

TEST_CASE("mod p HH closed form agrees with the small complex") {
    for (Tower t : {fixA(), fixB(), fixC(), fixD()}) {
        auto h = hh_A_via_small(t, Flavor::modp, 8);
        for (int i = 0; i <= 8; ++i) CHECK(h[i] == hh_A_modp(t, i));
    }
}

TEST_CASE("uct accounting") {
    for (Tower t : {fixA(), fixB(), fixC(), fixD()}) {
        UctReport r = uct_check(t, 12);
        CHECK(r.ok);
        CHECK(r.rows.size() == 13);
    }
}

TEST_CASE("E-infinity pattern") {
    BidegreeTable b = einfty_pattern(fixB(), 10);
    CHECK(b.at({1, 1}) == make_module({1}));
    CHECK(b.at({1, 3}) == make_module({1}));
    BidegreeTable a = einfty_pattern(fixA(), 12);
    CHECK(a.at({2, 0}) == make_module({1}));
    CHECK(a.at({4, 0}) == make_module({1}));
    CHECK(a.count({6, 0}) == 0);
    CHECK(a.at({3, 5}) == make_module({1}));
    CHECK(a.count({3, 3}) == 0);
}

TEST_CASE("pi valuation of integers") {
    CHECK(pi_valuation_of_int(fixB(), 9) == 4);
    CHECK(pi_valuation_of_int(fixB(), 2) == 0);
    CHECK(pi_valuation_of_int(fixD(), 4) == 4);
}
