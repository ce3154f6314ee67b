#include <doctest.h>

#include <random>

#include "gradua/matrix.hpp"

using namespace gradua;

namespace {

// Independent oracle: plain Gaussian elimination with field division at
// every step. Deliberately naive; kept separate from the library path.
size_t naive_rank(const Matrix& m) {
    const Field& F = *m.field();
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<FE>> a(rows, std::vector<FE>(cols, F.zero()));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && F.is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        FE inv = F.inv(a[rank][c]);
        for (size_t j = 0; j < cols; ++j) a[rank][j] = F.mul(a[rank][j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || F.is_zero(a[i][c])) continue;
            FE f = a[i][c];
            for (size_t j = 0; j < cols; ++j)
                a[i][j] = F.sub(a[i][j], F.mul(f, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

Matrix random_matrix(const FieldPtr& Fp, size_t r, size_t c, std::mt19937_64& rng) {
    const Field& F = *Fp;
    Matrix m(Fp, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) {
            if (F.nvars() == 0) {
                m.at(i, j) = F.from_int(int64_t(rng() % F.p()));
            } else {
                TPoly p;
                for (int e = 0; e <= 1; ++e)
                    p = F.tadd(p, F.tscale(F.tvar(0, uint32_t(e)), uint32_t(rng() % F.p())));
                m.at(i, j) = F.from_tpoly(p);
            }
        }
    return m;
}

} // namespace

TEST_CASE("rank_kernel basics") {
    auto F2 = prime_field(2);
    Matrix id = Matrix::identity(F2, 3);
    auto rk = rank_kernel(id);
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.cols() == 0);

    // [[t,1],[t^2,t]] over F_2(t): rank 1, kernel spanned by (1, t)
    auto Ft = rational_function_field(2, {"t"});
    const Field& F = *Ft;
    Matrix m(Ft, 2, 2);
    m.at(0, 0) = F.from_tpoly(F.tvar(0));
    m.at(0, 1) = F.one();
    m.at(1, 0) = F.from_tpoly(F.tvar(0, 2));
    m.at(1, 1) = F.from_tpoly(F.tvar(0));
    auto rk2 = rank_kernel(m);
    CHECK(rk2.rank == 1);
    REQUIRE(rk2.kernel.cols() == 1);
    // normalize the basis vector to first coordinate 1
    FE k0 = rk2.kernel.at(0, 0), k1 = rk2.kernel.at(1, 0);
    REQUIRE(!F.is_zero(k0));
    FE ratio = F.div(k1, k0);
    CHECK(F.to_string(ratio) == "t");
    // kernel vectors map to zero
    CHECK(m.mul(rk2.kernel).is_zero());
}

TEST_CASE("rank + kernel dimension = cols on random matrices") {
    auto F5 = prime_field(5);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        Matrix m = random_matrix(F5, r, c, rng);
        auto rk = rank_kernel(m);
        CHECK(rk.rank + rk.kernel.cols() == c);
        CHECK(m.mul(rk.kernel).is_zero());
    }
}

TEST_CASE("rank agrees with the naive elimination oracle (100 fixed-seed matrices)") {
    std::vector<FieldPtr> fields = {prime_field(2), prime_field(5),
                                    rational_function_field(2, {"t"})};
    std::mt19937_64 rng(20240101);
    int count = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const FieldPtr& Fp = fields[trial % fields.size()];
        size_t maxd = Fp->nvars() == 0 ? 12 : 6;
        size_t r = 1 + rng() % maxd, c = 1 + rng() % maxd;
        Matrix m = random_matrix(Fp, r, c, rng);
        CHECK(rank_of(m) == naive_rank(m));
        ++count;
    }
    CHECK(count == 100);
}

TEST_CASE("solve_linear") {
    auto F2 = prime_field(2);
    const Field& F = *F2;

    Matrix id = Matrix::identity(F2, 3);
    std::vector<FE> b = {F.one(), F.zero(), F.one()};
    auto x = solve_linear(id, b);
    REQUIRE(x.has_value());
    for (size_t i = 0; i < 3; ++i) CHECK(F.eq((*x)[i], b[i]));

    Matrix bad(F2, 2, 2);
    bad.at(0, 0) = bad.at(0, 1) = bad.at(1, 0) = bad.at(1, 1) = F.one();
    auto none = solve_linear(bad, {F.one(), F.zero()});
    CHECK(!none.has_value());

    auto Ft = rational_function_field(2, {"t"});
    const Field& G = *Ft;
    Matrix d(Ft, 2, 2);
    d.at(0, 0) = G.from_tpoly(G.tvar(0));
    d.at(1, 1) = G.one();
    auto y = solve_linear(d, {G.one(), G.one()});
    REQUIRE(y.has_value());
    CHECK(G.to_string((*y)[0]) == "1/t");
    CHECK(G.to_string((*y)[1]) == "1");
}

TEST_CASE("inconsistent system has rank([a|b]) > rank(a)") {
    auto F2 = prime_field(2);
    const Field& F = *F2;
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        Matrix a = random_matrix(F2, 4 + rng() % 4, 3 + rng() % 4, rng);
        std::vector<FE> b;
        for (size_t r = 0; r < a.rows(); ++r) b.push_back(F.from_int(int64_t(rng() % 2)));
        Matrix bm(F2, a.rows(), 1);
        for (size_t r = 0; r < a.rows(); ++r) bm.at(r, 0) = b[r];
        auto x = solve_linear(a, b);
        size_t ra = rank_of(a), rab = rank_of(a.hcat(bm));
        if (x.has_value()) {
            CHECK(ra == rab);
        } else {
            CHECK(rab > ra);
        }
    }
}

TEST_CASE("mixed fields are rejected") {
    auto F2 = prime_field(2);
    auto F5 = prime_field(5);
    Matrix a = Matrix::identity(F2, 2), b = Matrix::identity(F5, 2);
    CHECK_THROWS_AS(a.mul(b), Error);
}
