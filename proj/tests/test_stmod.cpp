#include <doctest.h>

#include "gradua/stmod.hpp"

using namespace gradua;

namespace {

FDModule jordan_block(const AlgebraPtr& z4, size_t size) {
    // k[x]/(x^4)-module J_size: x = g - 1 acts as a nilpotent Jordan block
    const Field& F = *z4->field();
    Matrix g(z4->field(), size, size);
    for (size_t i = 0; i < size; ++i) g.at(i, i) = F.one();
    for (size_t i = 0; i + 1 < size; ++i) g.at(i, i + 1) = F.one();
    // actions of group elements 1, g, g^2, g^3
    std::vector<Matrix> act;
    Matrix cur = Matrix::identity(z4->field(), size);
    for (size_t i = 0; i < 4; ++i) {
        act.push_back(cur);
        cur = cur.mul(g);
    }
    return make_module(z4, std::move(act));
}

} // namespace

TEST_CASE("projective covers") {
    auto F2 = prime_field(2);

    SUBCASE("k over Klein four: free of rank 1") {
        auto A = klein_four_algebra(F2);
        auto pc = projective_cover(trivial_module(A));
        CHECK(pc.cover.dim() == 4);
        CHECK(rank_of(pc.epi) == 1);
    }

    SUBCASE("J_2 over F_2[Z/4]: free rank 1") {
        auto A = group_algebra_cyclic(F2, 4);
        auto pc = projective_cover(jordan_block(A, 2));
        CHECK(pc.cover.dim() == 4);
    }

    SUBCASE("k + k: free rank 2") {
        auto A = klein_four_algebra(F2);
        FDModule kk = direct_sum(trivial_module(A), trivial_module(A));
        auto pc = projective_cover(kk);
        CHECK(pc.cover.dim() == 8);
    }

    SUBCASE("cover kernel is superfluous (inside the radical)") {
        auto A = klein_four_algebra(F2);
        auto pc = projective_cover(trivial_module(A));
        Matrix ker = rank_kernel(pc.epi).kernel;
        Matrix rad = radical_subspace(pc.cover);
        CHECK(rank_of(rad.hcat(ker)) == rank_of(rad));
    }
}

TEST_CASE("syzygies") {
    auto F2 = prime_field(2);
    auto V = klein_four_algebra(F2);

    SUBCASE("Omega^1 k over Klein four has dimension 3") {
        FDModule o1 = syzygy(trivial_module(V), 1);
        CHECK(o1.dim() == 3);
    }

    SUBCASE("Omega^4 k = k over the quaternion group") {
        auto Q = group_algebra_quaternion8(F2);
        FDModule o4 = syzygy(trivial_module(Q), 4);
        CHECK(o4.dim() == 1);
        CHECK(stably_isomorphic(o4, trivial_module(Q)));
    }

    SUBCASE("Omega^{-1} Omega^1 M = M stably, random M") {
        for (uint64_t seed : {3u, 7u, 11u}) {
            FDModule M = strip_projectives(random_module(V, seed, 8));
            if (M.dim() == 0) continue;
            FDModule back = syzygy(syzygy(M, 1), -1);
            CHECK(stably_isomorphic(back, M));
        }
    }

    SUBCASE("syzygy output carries no projective summands") {
        FDModule o1 = syzygy(trivial_module(V), 1);
        CHECK(strip_projectives(o1).dim() == o1.dim());
    }
}

TEST_CASE("stable hom") {
    auto F2 = prime_field(2);
    auto V = klein_four_algebra(F2);
    FDModule k = trivial_module(V);

    CHECK(stable_hom(k, k).dim() == 1);
    CHECK(stable_hom(k, syzygy(k, -1)).dim() == 2); // H^1 of Klein four is 2-dim
    CHECK(stable_hom(regular_module(V), k).dim() == 0);
    CHECK(stable_hom(k, regular_module(V)).dim() == 0);

    SUBCASE("stable hom is Omega-invariant") {
        for (uint64_t seed : {5u, 9u}) {
            FDModule M = random_module(V, seed, 8);
            FDModule N = random_module(V, seed + 100, 8);
            CHECK(stable_hom(M, N).dim() ==
                  stable_hom(syzygy(M, 1), syzygy(N, 1)).dim());
        }
    }
}

TEST_CASE("minimal resolutions and cohomology") {
    auto F2 = prime_field(2);

    SUBCASE("Klein four Betti numbers 1,2,3,4,...") {
        auto V = klein_four_algebra(F2);
        const auto& res = minimal_resolution(V, 5);
        for (size_t i = 0; i <= 5; ++i) CHECK(res.betti[i] == i + 1);
    }

    SUBCASE("quaternion cohomology dims 1,2,2,1,1,2,2,1 for i = 0..7") {
        auto Q = group_algebra_quaternion8(F2);
        std::vector<size_t> expect = {1, 2, 2, 1, 1, 2, 2, 1};
        for (size_t i = 0; i < expect.size(); ++i) CHECK(cohomology_dim(Q, i) == expect[i]);
    }

    SUBCASE("Z/2: all Betti numbers 1") {
        auto A = group_algebra_cyclic(F2, 2);
        for (size_t i = 0; i <= 6; ++i) CHECK(cohomology_dim(A, i) == 1);
    }

    SUBCASE("Ext vs stable Hom in positive degrees") {
        auto V = klein_four_algebra(F2);
        FDModule k = trivial_module(V);
        for (size_t i = 1; i <= 4; ++i)
            CHECK(cohomology_dim(V, i) == stable_hom(syzygy(k, int(i)), k).dim());
    }

    SUBCASE("ring presentation checks") {
        auto V = klein_four_algebra(F2);
        auto kab = RingPresentation::create(F2, {"a", "b"}, {1, 1}, {});
        auto chk = cohomology_ring_check(V, kab, 6);
        CHECK(chk.pass());

        auto Q = group_algebra_quaternion8(F2);
        auto hq8 = RingPresentation::create(F2, {"x", "y", "z"}, {1, 1, 4},
                                            {"x^2+x*y+y^2", "x^2*y+x*y^2"});
        auto chk2 = cohomology_ring_check(Q, hq8, 8);
        CHECK(chk2.relations_vanish);
        CHECK(chk2.hilbert_matches);

        // a wrong presentation fails
        auto wrong = RingPresentation::create(F2, {"x", "y"}, {1, 1}, {"x^2"});
        CHECK(!cohomology_ring_check(V, wrong, 5).pass());
    }
}

TEST_CASE("decomposition and projectivity") {
    auto F2 = prime_field(2);
    auto A = group_algebra_cyclic(F2, 4);

    SUBCASE("Jordan blocks are indecomposable; sums split") {
        CHECK(indecomposable_check(jordan_block(A, 2)));
        FDModule sum = direct_sum(jordan_block(A, 1), jordan_block(A, 1));
        CHECK(!indecomposable_check(sum));
        CHECK(decompose(sum).size() == 2);
    }

    SUBCASE("free modules are projective; Jordan blocks are not") {
        CHECK(is_projective_module(regular_module(A)));
        CHECK(!is_projective_module(jordan_block(A, 2)));
        CHECK(is_projective_module(jordan_block(A, 4)));
    }

    SUBCASE("stripping removes exactly the free summands") {
        FDModule m = direct_sum(jordan_block(A, 2), jordan_block(A, 4));
        FDModule s = strip_projectives(m);
        CHECK(s.dim() == 2);
    }

    SUBCASE("free rank 1 over Klein four is indecomposable") {
        auto V = klein_four_algebra(F2);
        CHECK(indecomposable_check(regular_module(V)));
    }
}
