#include <doctest.h>

#include "gradua/stmod.hpp"

using namespace gradua;

namespace {

FDModule jordan_block(const AlgebraPtr& z4, size_t size) {
    const Field& F = *z4->field();
    Matrix g(z4->field(), size, size);
    for (size_t i = 0; i < size; ++i) g.at(i, i) = F.one();
    for (size_t i = 0; i + 1 < size; ++i) g.at(i, i + 1) = F.one();
    std::vector<Matrix> act;
    Matrix cur = Matrix::identity(z4->field(), size);
    for (size_t i = 0; i < 4; ++i) {
        act.push_back(cur);
        cur = cur.mul(g);
    }
    return make_module(z4, std::move(act));
}

// does the middle term decompose into the given Jordan types?
bool middle_is(const AlgebraPtr& z4, const FDModule& e, std::vector<size_t> types) {
    auto pieces = decompose(e);
    if (pieces.size() != types.size()) return false;
    std::vector<size_t> dims;
    for (const auto& p : pieces) dims.push_back(p.dim());
    std::sort(dims.begin(), dims.end());
    std::sort(types.begin(), types.end());
    if (dims != types) return false;
    for (const auto& p : pieces) {
        bool matched = false;
        for (size_t t : types)
            if (p.dim() == t && stably_isomorphic(p, jordan_block(z4, t)) )
                matched = true;
        if (p.dim() == 4) matched = is_projective_module(p);
        if (!matched) return false;
    }
    return true;
}

} // namespace

TEST_CASE("AR triangles over F_2[Z/4] against the Jordan family") {
    auto Z4 = group_algebra_cyclic(prime_field(2), 4);
    std::vector<FDModule> family;
    for (size_t s = 1; s <= 4; ++s) family.push_back(jordan_block(Z4, s));

    SUBCASE("J_1: middle term J_2") {
        auto tri = ar_triangle(jordan_block(Z4, 1), family);
        CHECK(tri.non_split);
        CHECK(tri.almost_split_verified);
        CHECK(tri.middle.dim() == 2);
        CHECK(middle_is(Z4, tri.middle, {2}));
        CHECK(stably_isomorphic(tri.tau_term, jordan_block(Z4, 1)));
    }

    SUBCASE("J_2: middle term J_1 + J_3") {
        auto tri = ar_triangle(jordan_block(Z4, 2), family);
        CHECK(tri.non_split);
        CHECK(tri.almost_split_verified);
        CHECK(tri.middle.dim() == 4);
        CHECK(middle_is(Z4, tri.middle, {1, 3}));
    }

    SUBCASE("J_3: middle term J_2 + projective J_4") {
        auto tri = ar_triangle(jordan_block(Z4, 3), family);
        CHECK(tri.non_split);
        CHECK(tri.almost_split_verified);
        CHECK(tri.middle.dim() == 6);
        CHECK(middle_is(Z4, tri.middle, {2, 4}));
        // the stable middle drops the projective part
        CHECK(strip_projectives(tri.middle).dim() == 2);
    }

    SUBCASE("projective input is rejected") {
        CHECK_THROWS_AS(ar_triangle(jordan_block(Z4, 4), family), Error);
    }

    SUBCASE("decomposable input is rejected") {
        FDModule sum = direct_sum(jordan_block(Z4, 1), jordan_block(Z4, 2));
        CHECK_THROWS_AS(ar_triangle(sum, family), Error);
    }
}

TEST_CASE("periodicity spot checks") {
    auto F2 = prime_field(2);

    SUBCASE("Z/4 with the Serre exponent: r = 2, the square of Omega") {
        auto Z4 = group_algebra_cyclic(F2, 4);
        std::vector<FDModule> samples = {jordan_block(Z4, 1), jordan_block(Z4, 2),
                                         jordan_block(Z4, 3)};
        CHECK(periodicity_check(Z4, samples, 1, 8) == 2);
    }

    SUBCASE("quaternion group on {k}: r = 4") {
        auto Q8 = group_algebra_quaternion8(F2);
        std::vector<FDModule> samples = {trivial_module(Q8)};
        CHECK(periodicity_check(Q8, samples, 1, 8) == 4);
    }

    SUBCASE("Klein four on {k//b}: Omega-period 1") {
        auto V = klein_four_algebra(F2);
        const Field& F = *V->field();
        FDModule kb = koszul_object(V, coh_class(V, 1, {F.one(), F.zero()}));
        CHECK(periodicity_check(V, {kb}, 1, 8) == 1);
    }
}
