#include <doctest.h>

#include "gradua/gmodule.hpp"

using namespace gradua;

namespace {

RingPtr ring_q8() {
    return RingPresentation::create(prime_field(2), {"x", "y", "z"}, {1, 1, 4},
                                    {"x^2+x*y+y^2", "x^2*y+x*y^2"});
}

} // namespace

TEST_CASE("injective hull at the closed point of the quaternion ring") {
    auto R = ring_q8();
    HomIdeal m = HomIdeal::parse(R, {"x", "y"});
    auto hull = injective_hull_closed_point(R, m, -8, 8);

    // localized ring table (invert z), third suspension
    auto self = ModulePresentation::free_module(R, {0});
    auto expander = [&](int64_t a, int64_t b) { return degreewise_expand(self, a, b); };
    auto localized = localize_invert(expander, R->ctx().parse("z"), -11, 11);
    auto shifted = shift(localized, 3);
    for (int64_t n = -8; n <= 8; ++n) CHECK(hull.dim_at(n) == shifted.dim_at(n));
}

TEST_CASE("graded field is its own injective hull") {
    auto R = RingPresentation::create(prime_field(2), {"z"}, {1}, {});
    auto hull = injective_hull_closed_point(R, zero_ideal(R), -4, 4);
    for (int64_t n = -4; n <= 4; ++n) CHECK(hull.dim_at(n) == 1);
}

TEST_CASE("rank-two example over F_2[z,w]/(w^2)") {
    auto R = RingPresentation::create(prime_field(2), {"z", "w"}, {1, 1}, {"w^2"});
    HomIdeal m = HomIdeal::parse(R, {"w"});
    auto hull = injective_hull_closed_point(R, m, -4, 4);
    auto self = ModulePresentation::free_module(R, {0});
    auto expander = [&](int64_t a, int64_t b) { return degreewise_expand(self, a, b); };
    auto localized = localize_invert(expander, R->ctx().parse("z"), -6, 6);
    auto shifted = shift(localized, 1);
    for (int64_t n = -4; n <= 4; ++n) CHECK(hull.dim_at(n) == shifted.dim_at(n));
}

TEST_CASE("hull outside Krull dimension one is out of scope") {
    auto R = RingPresentation::create(prime_field(2), {"x", "y"}, {1, 1}, {});
    CHECK_THROWS_AS(injective_hull_closed_point(R, zero_ideal(R), -2, 2), Error);
}

TEST_CASE("hom into the injective hull") {
    auto R = ring_q8();
    HomIdeal m = HomIdeal::parse(R, {"x", "y"});

    SUBCASE("N = A/m gives the residue field table: dim 1 in degrees = 0 mod 4") {
        auto N = ModulePresentation::cyclic(R, {R->ctx().parse("x"), R->ctx().parse("y")});
        auto H = hom_into_injective(N, m, -8, 8);
        for (int64_t n = -8; n <= 8; ++n) CHECK(H.dim_at(n) == (n % 4 == 0 ? 1 : 0));
    }

    SUBCASE("support away from the point gives zero") {
        auto N = ModulePresentation::cyclic(R, {R->ctx().parse("z")});
        auto H = hom_into_injective(N, m, -6, 6);
        CHECK(H.table().empty());
    }

    SUBCASE("Lemma-style equality: table equals the dual of the localized expansion") {
        // N = A_K/m^2 over F_2(t)[a,b] at m = (b + a t)
        auto RK = RingPresentation::create(rational_function_field(2, {"t"}), {"a", "b"}, {1, 1},
                                           {});
        const RingCtx& C = RK->ctx();
        GPoly u = C.parse("b+a*t");
        GPoly u2 = C.mul(u, u);
        auto N = ModulePresentation::cyclic(RK, {u2});
        HomIdeal mK(RK, {u});
        auto H = hom_into_injective(N, mK, -5, 5);

        // independent route: expand N, localize at a by brute force, dualize
        auto expander = [&](int64_t lo, int64_t hi) { return degreewise_expand(N, lo, hi); };
        auto loc = localize_invert(expander, C.parse("a"), -5, 5);
        auto dual = graded_matlis_dual(loc);
        for (int64_t n = -5; n <= 5; ++n) CHECK(H.dim_at(n) == dual.dim_at(n));
        // and the localized module itself is two-dimensional in every degree
        for (int64_t n = -5; n <= 5; ++n) CHECK(loc.dim_at(n) == 2);
    }
}
