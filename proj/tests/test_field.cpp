#include <doctest.h>

#include <random>

#include "gradua/field.hpp"

using namespace gradua;

namespace {

FE parse_tp(const Field& F, std::initializer_list<std::pair<int, int>> terms) {
    // univariate helper: list of (exponent, coefficient)
    TPoly p;
    for (auto [e, c] : terms) {
        TPoly t = F.tscale(F.tvar(0, uint32_t(e)), uint32_t(c));
        p = F.tadd(p, t);
    }
    return F.from_tpoly(p);
}

FE random_ratfunc(const Field& F, std::mt19937_64& rng) {
    auto randPoly = [&](int maxdeg, bool nonzero) {
        TPoly p;
        for (int e = 0; e <= maxdeg; ++e)
            p = F.tadd(p, F.tscale(F.tvar(0, uint32_t(e)), uint32_t(rng() % F.p())));
        if (nonzero && p.is_zero()) p = F.tconst(1);
        return p;
    };
    return F.make(randPoly(2, false), randPoly(1, true));
}

} // namespace

TEST_CASE("normalize cancels common factors and fixes the zero form") {
    auto Fp = rational_function_field(2, {"t"});
    const Field& F = *Fp;

    // (t^2+t)/(t+1) = t
    FE a = F.make(F.tadd(F.tvar(0, 2), F.tvar(0, 1)), F.tadd(F.tvar(0, 1), F.tconst(1)));
    CHECK(F.to_string(a) == "t");

    // 0/(t^3+1) = 0/1
    FE z = F.make(F.tzero(), F.tadd(F.tvar(0, 3), F.tconst(1)));
    CHECK(F.is_zero(z));
    CHECK(F.to_string(z.den) == "1");

    // (t^3+t)/(t^2+1) = t
    FE b = F.make(F.tadd(F.tvar(0, 3), F.tvar(0, 1)), F.tadd(F.tvar(0, 2), F.tconst(1)));
    CHECK(F.to_string(b) == "t");

    CHECK_THROWS_AS(F.make(F.tconst(1), F.tzero()), Error);
}

TEST_CASE("normalize is idempotent on random elements") {
    auto Fp = rational_function_field(2, {"t"});
    const Field& F = *Fp;
    std::mt19937_64 rng(42);
    for (int i = 0; i < 50; ++i) {
        FE a = random_ratfunc(F, rng);
        FE b = F.normalize(a);
        CHECK(F.eq(a, b));
        CHECK(F.eq(F.normalize(b), b));
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    for (uint32_t p : {2u, 5u}) {
        auto Fp = rational_function_field(p, {"t"});
        const Field& F = *Fp;
        std::mt19937_64 rng(7 + p);
        for (int i = 0; i < 30; ++i) {
            FE a = random_ratfunc(F, rng), b = random_ratfunc(F, rng), c = random_ratfunc(F, rng);
            CHECK(F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c))));
            CHECK(F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
            CHECK(F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
            CHECK(F.eq(F.add(a, b), F.add(b, a)));
            CHECK(F.eq(F.mul(a, b), F.mul(b, a)));
            if (!F.is_zero(a)) CHECK(F.is_one(F.mul(a, F.inv(a))));
        }
    }
}

TEST_CASE("multivariate gcd over two transcendentals") {
    auto Fp = rational_function_field(2, {"t1", "t2"});
    const Field& F = *Fp;
    TPoly t1 = F.tvar(0), t2 = F.tvar(1);
    TPoly s = F.tadd(t1, t2);
    TPoly a = F.tmul(s, t1);            // t1^2 + t1 t2
    TPoly b = F.tmul(s, F.tmul(t2, t2)); // t2^2 (t1 + t2)
    TPoly g = F.tgcd(a, b);
    CHECK(F.teq(g, s));

    FE q = F.make(a, b); // t1 / t2^2
    CHECK(F.to_string(q) == "t1/t2^2");
}

TEST_CASE("characteristic must be prime, transcendentals distinct") {
    CHECK_THROWS_AS(prime_field(6), Error);
    CHECK_THROWS_AS(rational_function_field(2, {"t", "t"}), Error);
    CHECK_NOTHROW(prime_field(5));
    (void)parse_tp;
}
