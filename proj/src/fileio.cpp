#include "gradua/fileio.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace gradua {

namespace {

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::UsageError, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(ErrorKind::UsageError, "malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

FieldPtr field_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.contains("char"))
        fail(ErrorKind::UsageError, path + ": field.char missing");
    uint32_t p = j.at("char").get<uint32_t>();
    std::vector<std::string> trans;
    if (j.contains("transcendentals"))
        for (const auto& t : j.at("transcendentals")) trans.push_back(t.get<std::string>());
    return make_field(FieldDescriptor{p, std::move(trans)});
}

FE parse_scalar(const Field& F, const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return F.from_int(v.get<int64_t>());
    if (v.is_string()) {
        // coefficients may mention the transcendentals; reuse the polynomial
        // parser through a generator-free ring context
        RingCtx ctx(std::make_shared<Field>(F.desc()), {}, {});
        GPoly g = ctx.parse(v.get<std::string>());
        if (g.is_zero()) return F.zero();
        return g.t.front().c;
    }
    fail(ErrorKind::UsageError, where + ": scalar must be an integer or string");
}

} // namespace

RingPtr load_ring(const std::string& path) {
    auto j = read_json(path);
    if (!j.contains("field") || !j.contains("generators"))
        fail(ErrorKind::UsageError, path + ": ring file needs field and generators");
    FieldPtr F = field_from_json(j.at("field"), path);
    std::vector<std::string> names;
    std::vector<int> degs;
    for (const auto& g : j.at("generators")) {
        if (!g.contains("name") || !g.contains("degree"))
            fail(ErrorKind::UsageError, path + ": generator entries need name and degree");
        names.push_back(g.at("name").get<std::string>());
        degs.push_back(g.at("degree").get<int>());
    }
    std::vector<std::string> rels;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) rels.push_back(r.get<std::string>());
    return RingPresentation::create(std::move(F), std::move(names), std::move(degs),
                                    std::move(rels));
}

HomIdeal load_ideal(const std::string& path, RingPtr ring) {
    auto j = read_json(path);
    if (!j.contains("generators"))
        fail(ErrorKind::UsageError, path + ": ideal file needs generators");
    std::vector<std::string> gens;
    for (const auto& g : j.at("generators")) gens.push_back(g.get<std::string>());
    return HomIdeal::parse(std::move(ring), gens);
}

ModulePresentation load_module(const std::string& path, RingPtr ring_hint) {
    auto j = read_json(path);
    RingPtr ring = ring_hint;
    if (!ring) {
        if (!j.contains("ring"))
            fail(ErrorKind::UsageError, path + ": module file needs a ring reference");
        std::filesystem::path base = std::filesystem::path(path).parent_path();
        ring = load_ring((base / j.at("ring").get<std::string>()).string());
    }
    std::vector<int64_t> degs;
    if (j.contains("generator_degrees"))
        for (const auto& d : j.at("generator_degrees")) degs.push_back(d.get<int64_t>());
    if (degs.empty()) degs.push_back(0);
    std::vector<std::vector<GPoly>> pres(degs.size());
    if (j.contains("relations_matrix")) {
        const auto& m = j.at("relations_matrix");
        if (m.size() != degs.size())
            fail(ErrorKind::UsageError,
                 path + ": relations_matrix rows must match generator_degrees");
        for (size_t i = 0; i < degs.size(); ++i)
            for (const auto& entry : m[i])
                pres[i].push_back(ring->ctx().parse(entry.get<std::string>()));
    }
    return ModulePresentation::make(std::move(ring), std::move(degs), std::move(pres));
}

AlgebraPtr load_algebra(const std::string& path) {
    auto j = read_json(path);
    for (const char* key : {"field", "dim", "basis", "mul"})
        if (!j.contains(key)) fail(ErrorKind::UsageError, path + ": algebra file needs " + key);
    FieldPtr Fp = field_from_json(j.at("field"), path);
    const Field& F = *Fp;
    size_t dim = j.at("dim").get<size_t>();
    std::vector<std::string> basis;
    for (const auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
    if (basis.size() != dim) fail(ErrorKind::UsageError, path + ": basis length != dim");

    std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul(
        dim, std::vector<std::vector<std::pair<uint32_t, FE>>>(dim));
    for (const auto& e : j.at("mul")) {
        if (!e.is_array() || e.size() != 4)
            fail(ErrorKind::UsageError, path + ": mul entries are [i, j, k, c]");
        size_t i = e[0].get<size_t>(), jj = e[1].get<size_t>(), k = e[2].get<size_t>();
        if (i >= dim || jj >= dim || k >= dim)
            fail(ErrorKind::UsageError, path + ": mul index out of range");
        mul[i][jj].push_back({uint32_t(k), parse_scalar(F, e[3], path + ".mul")});
    }

    std::vector<FE> unit(dim, F.zero());
    if (j.contains("unit")) {
        size_t i = 0;
        for (const auto& u : j.at("unit")) unit[i++] = parse_scalar(F, u, path + ".unit");
    } else {
        unit[0] = F.one();
    }

    std::optional<HopfData> hopf;
    if (j.contains("comul")) {
        HopfData H;
        H.comul.resize(dim);
        for (const auto& e : j.at("comul")) {
            size_t i = e[0].get<size_t>(), a = e[1].get<size_t>(), b = e[2].get<size_t>();
            H.comul[i].push_back({uint32_t(a), uint32_t(b), parse_scalar(F, e[3], path)});
        }
        if (!j.contains("counit") || !j.contains("antipode"))
            fail(ErrorKind::UsageError, path + ": Hopf data needs counit and antipode");
        for (const auto& c : j.at("counit")) H.counit.push_back(parse_scalar(F, c, path));
        Matrix S(Fp, dim, dim);
        const auto& sa = j.at("antipode");
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c) S.at(r, c) = parse_scalar(F, sa[r][c], path);
        H.antipode = std::move(S);
        hopf = std::move(H);
    }

    std::vector<std::vector<FE>> rad;
    if (j.contains("radical")) {
        for (const auto& row : j.at("radical")) {
            std::vector<FE> v;
            for (const auto& x : row) v.push_back(parse_scalar(F, x, path + ".radical"));
            if (v.size() != dim) fail(ErrorKind::UsageError, path + ": radical vector length");
            rad.push_back(std::move(v));
        }
    } else {
        // group-algebra pattern: every product is a single basis element with
        // coefficient one and the basis is closed; then the augmentation
        // ideal generates the radical in the modular p-power case
        bool groupLike = true;
        for (size_t i = 0; i < dim && groupLike; ++i)
            for (size_t jj = 0; jj < dim && groupLike; ++jj)
                if (mul[i][jj].size() != 1 || !F.is_one(mul[i][jj][0].second)) groupLike = false;
        if (groupLike && dim % F.p() == 0) {
            for (size_t i = 0; i < dim; ++i) {
                if (!F.is_zero(unit[i])) continue;
                std::vector<FE> v(dim, F.zero());
                for (size_t u = 0; u < dim; ++u)
                    if (!F.is_zero(unit[u])) v[u] = F.neg(unit[u]);
                v[i] = F.one();
                rad.push_back(std::move(v));
            }
        } else if (!groupLike) {
            fail(ErrorKind::UsageError,
                 path + ": non-group-like algebra files must declare \"radical\" generators");
        }
    }
    std::string name = j.value("name", std::filesystem::path(path).stem().string());
    return AlgebraDatum::create(std::move(Fp), std::move(basis), std::move(mul), std::move(unit),
                                std::move(hopf), std::move(rad), name);
}

FDModule load_fdmodule(const std::string& path, AlgebraPtr algebra_hint) {
    auto j = read_json(path);
    AlgebraPtr A = algebra_hint;
    if (!A) {
        if (!j.contains("algebra"))
            fail(ErrorKind::UsageError, path + ": module file needs an algebra reference");
        std::filesystem::path base = std::filesystem::path(path).parent_path();
        A = load_algebra((base / j.at("algebra").get<std::string>()).string());
    }
    const Field& F = *A->field();
    size_t dim = j.at("dim").get<size_t>();
    if (!j.contains("actions")) fail(ErrorKind::UsageError, path + ": module file needs actions");
    std::vector<Matrix> act(A->dim(), Matrix(A->field(), dim, dim));
    const auto& actions = j.at("actions");
    for (size_t i = 0; i < A->dim(); ++i) {
        const std::string& label = A->basis()[i];
        if (!actions.contains(label))
            fail(ErrorKind::UsageError, path + ": missing action for basis element " + label);
        const auto& mer = actions.at(label);
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                act[i].at(r, c) = parse_scalar(F, mer[r][c], path + ".actions");
    }
    return make_module(std::move(A), std::move(act));
}

std::string degreewise_to_json(const DegreewiseModule& m) {
    nlohmann::json out;
    out["window"] = {m.lo, m.hi};
    nlohmann::json dims = nlohmann::json::object();
    for (const auto& [n, d] : m.table()) dims[std::to_string(n)] = d;
    out["dims"] = dims;
    nlohmann::json actions = nlohmann::json::object();
    const RingCtx& R = m.ring->ctx();
    const Field& F = *m.ring->field();
    for (size_t g = 0; g < R.ngens(); ++g) {
        nlohmann::json perDeg = nlohmann::json::object();
        for (int64_t n = m.lo; n <= m.hi; ++n) {
            if (!m.has_action(g, n)) continue;
            const Matrix& a = m.action(g, n);
            if (a.rows() == 0 || a.cols() == 0) continue;
            nlohmann::json rows = nlohmann::json::array();
            for (size_t r = 0; r < a.rows(); ++r) {
                nlohmann::json row = nlohmann::json::array();
                for (size_t c = 0; c < a.cols(); ++c) row.push_back(F.to_string(a.at(r, c)));
                rows.push_back(row);
            }
            perDeg[std::to_string(n)] = rows;
        }
        actions[R.names()[g]] = perDeg;
    }
    out["actions"] = actions;
    return out.dump(2) + "\n";
}

} // namespace gradua
