#include <doctest.h>

#include "thh/closed_forms.hpp"
#include "thh/small_complexes.hpp"

using namespace thh;

namespace {

Tower fixA(int K = 4) { return Tower::make(3, 1, {{-3}, {1}}, 2, K); }
Tower fixB(int K = 4) { return Tower::make(3, 1, {{-3}, {0}, {1}}, 2, K); }
Tower fixC(int K = 4) { return Tower::make(2, 1, {{-2}, {1}}, 2, K); }
Tower fixD(int K = 5) { return Tower::make(2, 1, {{-2}, {0}, {1}}, 3, K); }

}  // namespace

TEST_CASE("mod p small complex of FIX-A") {
    Tower t = fixA();
    Complex c = small_complex(t, Flavor::modp, 8);
    CHECK(c.is_complex());
    // the odd differential pi(1 - sigma^-1) vanishes mod 3
    CHECK(is_zero(c.diff(1), *c.ring));
    auto h = hh_A_via_small(t, Flavor::modp, 6);
    CHECK(h[0].length_sum() == 2);
    for (int i = 1; i <= 6; ++i) CHECK(h[i].length_sum() == 1);
}

TEST_CASE("integral small complex") {
    auto b = hh_A_via_small(fixB(), Flavor::integral, 4);
    CHECK(b[1] == make_module({1}));
    CHECK(b[2] == make_module({1}));
    auto d = hh_A_via_small(fixD(), Flavor::integral, 4);
    CHECK(d[1] == make_module({3}));
    CHECK(d[2] == make_module({1, 1}));
    auto a = hh_A_via_small(fixA(), Flavor::integral, 2);
    CHECK(a[0] == make_module({1}, 1));
    CHECK(a[1].num_summands() == 0);
}

TEST_CASE("resolution is exact and its kernel is S") {
    for (Tower t : {fixA(), fixB(), fixC(), fixD(), fixA(5), fixD(6)}) {
        CHECK(resolution_kernel_is_S(t));
        Complex c = resolution_complex(t, 7);
        CHECK(c.is_complex());
        for (int i = 1; i <= 5; ++i) CHECK(homology(c, i).num_summands() == 0);
    }
}

TEST_CASE("induced maps") {
    for (Tower t : {fixA(), fixB(), fixC(), fixD()}) {
        ComparisonReport z = themap_induced(t, Flavor::integral, 5);
        ComparisonReport m = themap_induced(t, Flavor::modp, 5);
        CHECK(z.chain_map);
        CHECK(m.chain_map);
        for (const InducedMap& im : z.maps) {
            if (im.degree > 0 && im.degree % 2 == 0) CHECK(im.image.num_summands() == 0);
            if (im.degree % 2 == 1) CHECK(im.cokernel.num_summands() == 0);
        }
        for (const InducedMap& im : m.maps) {
            if (im.degree == 0) continue;
            CHECK(im.direct_sum);
            CHECK(im.onto_s_part);
            CHECK(im.s_part == hh_S_modp(t, im.degree));
        }
        CHECK(m.maps[0].cokernel.num_summands() == 0);
        CHECK(m.maps[0].target.length_sum() * t.r() == dim_T_mod_p_pi_ker_tr(t));
    }
    // the two degree-0 quotients agree except for FIX-D
    CHECK(dim_T_mod_p_pi_tr(fixA()) == 2);
    CHECK(dim_T_mod_p_pi_tr(fixB()) == 3);
    CHECK(dim_T_mod_p_pi_tr(fixC()) == 2);
    CHECK(dim_T_mod_p_pi_tr(fixD()) == 5);
    CHECK(dim_T_mod_p_pi_ker_tr(fixD()) == 4);
}

TEST_CASE("precision stability of the small complex") {
    for (Tower t : {fixB(), fixD()})
        for (Flavor f : {Flavor::integral, Flavor::modp})
            CHECK(hh_A_via_small(t, f, 6) == hh_A_via_small(t.with_precision(t.K() + 1), f, 6));
}
