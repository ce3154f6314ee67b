#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gradua/fileio.hpp"
#include "gradua/stmod.hpp"

using namespace gradua;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/gradua_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("ring files load with field, generators and relations") {
    TempFile f("ring.json", R"({
      "field": {"char": 2, "transcendentals": ["t"]},
      "generators": [{"name": "a", "degree": 1}, {"name": "b", "degree": 1}],
      "relations": ["b+a*t"]
    })");
    RingPtr R = load_ring(f.path);
    CHECK(R->ctx().ngens() == 2);
    CHECK(R->field()->desc().transcendentals == std::vector<std::string>{"t"});
    CHECK(R->relations().size() == 1);

    TempFile bad("badring.json", R"({"generators": []})");
    CHECK_THROWS_AS(load_ring(bad.path), Error);
}

TEST_CASE("ideal and module files") {
    TempFile rf("ring2.json", R"({
      "field": {"char": 2},
      "generators": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}],
      "relations": []
    })");
    RingPtr R = load_ring(rf.path);

    TempFile idl("ideal.json", R"({"generators": ["x^2", "x*y"]})");
    HomIdeal I = load_ideal(idl.path, R);
    CHECK(I.gens().size() == 2);
    CHECK(I.contains(R->ctx().parse("x^2*y")));

    TempFile mf("module.json", R"({
      "generator_degrees": [0, 1],
      "relations_matrix": [["x^2", "0"], ["x", "x"]]
    })");
    ModulePresentation M = load_module(mf.path, R);
    CHECK(M.ngens() == 2);
    CHECK(M.nrels() == 2);
    auto E = degreewise_expand(M, 0, 3);
    CHECK(E.dim_at(0) == 1);

    TempFile inconsistent("module_bad.json", R"({
      "generator_degrees": [0, 1],
      "relations_matrix": [["x", "0"], ["y", "x"]]
    })");
    CHECK_THROWS_AS(load_module(inconsistent.path, R), Error);
}

TEST_CASE("algebra files with Hopf data round-trip through the engines") {
    TempFile af("algebra.json", R"({
      "name": "z2",
      "field": {"char": 2},
      "dim": 2,
      "basis": ["e", "g"],
      "mul": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]],
      "unit": [1, 0],
      "comul": [[0,0,0,1],[1,1,1,1]],
      "counit": [1, 1],
      "antipode": [[1,0],[0,1]]
    })");
    AlgebraPtr A = load_algebra(af.path);
    CHECK(A->dim() == 2);
    CHECK(A->has_hopf());
    // the augmentation radical was inferred for the group-like table
    CHECK(A->radical_gens().size() == 1);
    FDModule k = trivial_module(A);
    CHECK(syzygy(k, 1).dim() == 1);

    TempFile bad("badalg.json", R"({
      "field": {"char": 2}, "dim": 2, "basis": ["e", "n"],
      "mul": [[0,0,0,1],[0,1,1,1],[1,0,1,1]]
    })");
    // non-group-like (n*n missing means n*n = 0) without radical data
    CHECK_THROWS_AS(load_algebra(bad.path), Error);
}

TEST_CASE("fd module files validate against the algebra") {
    TempFile af("algebra2.json", R"({
      "field": {"char": 2},
      "dim": 2,
      "basis": ["e", "g"],
      "mul": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,1]]
    })");
    AlgebraPtr A = load_algebra(af.path);

    TempFile mf("fdmod.json", R"({
      "dim": 2,
      "actions": {"e": [[1,0],[0,1]], "g": [[1,1],[0,1]]}
    })");
    FDModule M = load_fdmodule(mf.path, A);
    CHECK(M.dim() == 2);
    CHECK(is_projective_module(M));

    TempFile bad("badmod.json", R"({
      "dim": 2,
      "actions": {"e": [[1,0],[0,1]], "g": [[1,1],[0,0]]}
    })");
    CHECK_THROWS_AS(load_fdmodule(bad.path, A), Error);
}

TEST_CASE("degreewise serialization has window, dims and actions") {
    auto R = RingPresentation::create(prime_field(2), {"x"}, {1}, {});
    auto M = ModulePresentation::free_module(R, {0});
    auto E = degreewise_expand(M, 0, 2);
    std::string j = degreewise_to_json(E);
    CHECK(j.find("\"window\"") != std::string::npos);
    CHECK(j.find("\"dims\"") != std::string::npos);
    CHECK(j.find("\"actions\"") != std::string::npos);
}
