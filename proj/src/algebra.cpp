#include "gradua/algebra.hpp"

#include <algorithm>

#include "gradua/error.hpp"
#include "gradua/stmod_internal.hpp"

namespace gradua {

const HopfData& AlgebraDatum::hopf() const {
    if (!hopf_) fail(ErrorKind::CapabilityError, "algebra carries no Hopf data");
    return *hopf_;
}

AlgebraPtr AlgebraDatum::create(FieldPtr field, std::vector<std::string> basis,
                                std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul,
                                std::vector<FE> unit, std::optional<HopfData> hopf,
                                std::vector<std::vector<FE>> radical_gens, std::string name) {
    auto a = std::shared_ptr<AlgebraDatum>(new AlgebraDatum());
    a->field_ = std::move(field);
    a->basis_ = std::move(basis);
    a->mul_ = std::move(mul);
    a->unit_ = std::move(unit);
    a->hopf_ = std::move(hopf);
    a->radical_gens_ = std::move(radical_gens);
    a->name_ = std::move(name);
    a->cache_ = std::make_shared<CacheBox>();

    const Field& F = *a->field_;
    size_t n = a->basis_.size();
    if (a->mul_.size() != n || a->unit_.size() != n)
        fail(ErrorKind::MalformedElement, "algebra tables have inconsistent sizes");
    for (const auto& row : a->mul_)
        if (row.size() != n) fail(ErrorKind::MalformedElement, "ragged multiplication table");

    // left and right multiplication matrices
    for (size_t i = 0; i < n; ++i) {
        Matrix L(a->field_, n, n), R(a->field_, n, n);
        for (size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : a->mul_[i][j]) L.at(k, j) = F.add(L.at(k, j), c);
            for (const auto& [k, c] : a->mul_[j][i]) R.at(k, j) = F.add(R.at(k, j), c);
        }
        a->lmul_.push_back(std::move(L));
        a->rmul_.push_back(std::move(R));
    }
    a->validate();
    return a;
}

std::vector<FE> AlgebraDatum::product(const std::vector<FE>& x, const std::vector<FE>& y) const {
    const Field& F = *field_;
    std::vector<FE> out(dim(), F.zero());
    for (size_t i = 0; i < dim(); ++i) {
        if (F.is_zero(x[i])) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (F.is_zero(y[j])) continue;
            FE c = F.mul(x[i], y[j]);
            for (const auto& [k, s] : mul_[i][j]) out[k] = F.add(out[k], F.mul(c, s));
        }
    }
    return out;
}

Matrix AlgebraDatum::lmul_of(const std::vector<FE>& a) const {
    const Field& F = *field_;
    Matrix out(field_, dim(), dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (F.is_zero(a[i])) continue;
        out = out.add(lmul_[i].scale(a[i]));
    }
    return out;
}

void AlgebraDatum::validate() const {
    const Field& F = *field_;
    size_t n = dim();

    // unit law
    Matrix unitL(field_, n, n);
    for (size_t i = 0; i < n; ++i)
        if (!F.is_zero(unit_[i])) unitL = unitL.add(lmul_[i].scale(unit_[i]));
    if (!unitL.equals(Matrix::identity(field_, n)))
        fail(ErrorKind::MalformedElement, "unit does not act as the identity");

    // associativity on basis triples: L_{e_i e_j} = L_i L_j
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Matrix lhs(field_, n, n);
            for (const auto& [k, c] : mul_[i][j]) lhs = lhs.add(lmul_[k].scale(c));
            if (!lhs.equals(lmul_[i].mul(lmul_[j])))
                fail(ErrorKind::MalformedElement, "associativity fails on a basis triple");
        }

    if (hopf_) {
        const HopfData& H = *hopf_;
        if (H.comul.size() != n || H.counit.size() != n || H.antipode.rows() != n ||
            H.antipode.cols() != n)
            fail(ErrorKind::MalformedElement, "Hopf tables have inconsistent sizes");

        // coassociativity and counit law on every basis element
        for (size_t i = 0; i < n; ++i) {
            std::map<std::tuple<uint32_t, uint32_t, uint32_t>, FE> lhs, rhs;
            for (const auto& [j, k, c] : H.comul[i]) {
                for (const auto& [a, b, d] : H.comul[j]) {
                    auto key = std::make_tuple(a, b, k);
                    FE v = F.mul(c, d);
                    auto it = lhs.find(key);
                    lhs[key] = it == lhs.end() ? v : F.add(it->second, v);
                }
                for (const auto& [a, b, d] : H.comul[k]) {
                    auto key = std::make_tuple(j, a, b);
                    FE v = F.mul(c, d);
                    auto it = rhs.find(key);
                    rhs[key] = it == rhs.end() ? v : F.add(it->second, v);
                }
            }
            for (const auto& [k, v] : lhs) {
                auto it = rhs.find(k);
                if ((it == rhs.end() && !F.is_zero(v)) ||
                    (it != rhs.end() && !F.eq(v, it->second)))
                    fail(ErrorKind::MalformedElement, "comultiplication is not coassociative");
            }
            for (const auto& [k, v] : rhs)
                if (!lhs.count(k) && !F.is_zero(v))
                    fail(ErrorKind::MalformedElement, "comultiplication is not coassociative");

            // (counit (x) id) Delta = id
            std::vector<FE> rec(n, F.zero());
            for (const auto& [j, k, c] : H.comul[i])
                rec[k] = F.add(rec[k], F.mul(c, H.counit[j]));
            for (size_t k = 0; k < n; ++k) {
                FE want = k == i ? F.one() : F.zero();
                if (!F.eq(rec[k], want))
                    fail(ErrorKind::MalformedElement, "counit law fails");
            }

            // antipode law: m (S (x) id) Delta = unit * counit
            std::vector<FE> anti(n, F.zero());
            for (const auto& [j, k, c] : H.comul[i]) {
                // S(e_j) * e_k
                std::vector<FE> se(n, F.zero());
                for (size_t r = 0; r < n; ++r) se[r] = H.antipode.at(r, j);
                for (size_t r = 0; r < n; ++r) {
                    if (F.is_zero(se[r])) continue;
                    for (const auto& [t, s] : mul_[r][k])
                        anti[t] = F.add(anti[t], F.mul(F.mul(c, se[r]), s));
                }
            }
            for (size_t k = 0; k < n; ++k) {
                FE want = F.mul(H.counit[i], unit_[k]);
                if (!F.eq(anti[k], want))
                    fail(ErrorKind::MalformedElement, "antipode law fails");
            }
        }
    }

    // radical generators must be nilpotent as an ideal (checked cheaply:
    // the span closure under multiplication is nilpotent)
    if (!radical_gens_.empty()) {
        Matrix span(field_, n, 0);
        for (const auto& r : radical_gens_) {
            Matrix v(field_, n, 1);
            for (size_t i = 0; i < n; ++i) v.at(i, 0) = r[i];
            span = span.hcat(v);
        }
        // two-sided ideal closure
        while (true) {
            auto piv = column_basis(span);
            Matrix basis(field_, n, piv.size());
            for (size_t c = 0; c < piv.size(); ++c)
                for (size_t r = 0; r < n; ++r) basis.at(r, c) = span.at(r, piv[c]);
            Matrix grown = basis;
            for (size_t i = 0; i < n; ++i) {
                grown = grown.hcat(lmul_[i].mul(basis));
                grown = grown.hcat(rmul_[i].mul(basis));
            }
            if (rank_of(grown) == piv.size()) {
                span = std::move(basis);
                break;
            }
            span = std::move(grown);
        }
        // nilpotency: powers of the ideal vanish
        Matrix cur = span;
        for (size_t iter = 0; iter <= n && cur.cols() > 0; ++iter) {
            Matrix next(field_, n, 0);
            for (size_t c = 0; c < cur.cols(); ++c) {
                std::vector<FE> a(n);
                for (size_t r = 0; r < n; ++r) a[r] = cur.at(r, c);
                Matrix la = lmul_of(a);
                next = next.hcat(la.mul(span));
            }
            auto piv = column_basis(next);
            Matrix nb(field_, n, piv.size());
            for (size_t c = 0; c < piv.size(); ++c)
                for (size_t r = 0; r < n; ++r) nb.at(r, c) = next.at(r, piv[c]);
            cur = std::move(nb);
        }
        if (cur.cols() > 0)
            fail(ErrorKind::MalformedElement, "declared radical generators are not nilpotent");
    }
}

AlgebraPtr AlgebraDatum::extend_scalars(const std::vector<std::string>& newTrans) const {
    FieldDescriptor d = field_->desc();
    for (const auto& t : newTrans) d.transcendentals.push_back(t);
    FieldPtr K = make_field(d);
    // coefficients embed verbatim: same variable prefix
    auto remap = [&](const FE& x) { return x; };
    std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul(dim());
    for (size_t i = 0; i < dim(); ++i) {
        mul[i].resize(dim());
        for (size_t j = 0; j < dim(); ++j)
            for (const auto& [k, c] : mul_[i][j]) mul[i][j].push_back({k, remap(c)});
    }
    std::vector<FE> unit;
    for (const auto& u : unit_) unit.push_back(remap(u));
    std::optional<HopfData> hopf;
    if (hopf_) {
        HopfData H;
        H.comul.resize(dim());
        for (size_t i = 0; i < dim(); ++i)
            for (const auto& [j, k, c] : hopf_->comul[i]) H.comul[i].push_back({j, k, remap(c)});
        for (const auto& c : hopf_->counit) H.counit.push_back(remap(c));
        Matrix S(K, dim(), dim());
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < dim(); ++j) S.at(i, j) = remap(hopf_->antipode.at(i, j));
        H.antipode = std::move(S);
        hopf = std::move(H);
    }
    std::vector<std::vector<FE>> rad;
    for (const auto& r : radical_gens_) {
        std::vector<FE> v;
        for (const auto& x : r) v.push_back(remap(x));
        rad.push_back(std::move(v));
    }
    return create(K, basis_, std::move(mul), std::move(unit), std::move(hopf), std::move(rad),
                  name_ + "_ext");
}

AlgebraPtr AlgebraDatum::opposite() const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        if (cache_->opposite) return cache_->opposite;
    }
    std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul(dim());
    for (size_t i = 0; i < dim(); ++i) {
        mul[i].resize(dim());
        for (size_t j = 0; j < dim(); ++j) mul[i][j] = mul_[j][i];
    }
    auto op = create(field_, basis_, std::move(mul), unit_, std::nullopt, radical_gens_,
                     name_ + "_op");
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->opposite) cache_->opposite = op;
    return cache_->opposite;
}

// ------------------------------------------------------- group algebras

namespace {

struct SmallGroup {
    size_t n = 0;
    std::vector<std::vector<uint32_t>> mul; // mul[i][j]
    std::string name;

    uint32_t inverse(uint32_t i) const {
        for (uint32_t j = 0; j < n; ++j)
            if (mul[i][j] == 0) return j;
        fail(ErrorKind::MalformedElement, "group element without inverse");
    }
};

SmallGroup cyclic_group(uint32_t n) {
    SmallGroup g;
    g.n = n;
    g.mul.assign(n, std::vector<uint32_t>(n));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) g.mul[i][j] = (i + j) % n;
    g.name = "Z" + std::to_string(n);
    return g;
}

SmallGroup product_group(const SmallGroup& a, const SmallGroup& b) {
    SmallGroup g;
    g.n = a.n * b.n;
    g.mul.assign(g.n, std::vector<uint32_t>(g.n));
    auto id = [&](uint32_t x, uint32_t y) { return x * uint32_t(b.n) + y; };
    for (uint32_t x1 = 0; x1 < a.n; ++x1)
        for (uint32_t y1 = 0; y1 < b.n; ++y1)
            for (uint32_t x2 = 0; x2 < a.n; ++x2)
                for (uint32_t y2 = 0; y2 < b.n; ++y2)
                    g.mul[id(x1, y1)][id(x2, y2)] = id(a.mul[x1][x2], b.mul[y1][y2]);
    g.name = a.name + "x" + b.name;
    return g;
}

SmallGroup quaternion_group() {
    // elements 1,-1,i,-i,j,-j,k,-k as 0..7
    SmallGroup g;
    g.n = 8;
    g.name = "Q8";
    g.mul.assign(8, std::vector<uint32_t>(8));
    // base table on {1,i,j,k} with signs
    auto base = [&](uint32_t a, uint32_t b, int& sign) -> uint32_t {
        // 0=1,1=i,2=j,3=k
        static const int s[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        static const uint32_t t[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        sign = s[a][b];
        return t[a][b];
    };
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) {
            uint32_t ba = a >> 1, bb = b >> 1;
            int sign;
            uint32_t core = base(ba, bb, sign);
            bool negate = ((a & 1) ^ (b & 1)) != 0;
            if (sign < 0) negate = !negate;
            g.mul[a][b] = core * 2 + (negate ? 1 : 0);
        }
    return g;
}

SmallGroup dihedral8_group() {
    // r^a s^b, a mod 4, b mod 2; s r = r^{-1} s
    SmallGroup g;
    g.n = 8;
    g.name = "D8";
    auto id = [](uint32_t a, uint32_t b) { return a * 2 + b; };
    g.mul.assign(8, std::vector<uint32_t>(8));
    for (uint32_t a1 = 0; a1 < 4; ++a1)
        for (uint32_t b1 = 0; b1 < 2; ++b1)
            for (uint32_t a2 = 0; a2 < 4; ++a2)
                for (uint32_t b2 = 0; b2 < 2; ++b2) {
                    uint32_t a = b1 ? (a1 + 4 - a2) % 4 : (a1 + a2) % 4;
                    uint32_t b = (b1 + b2) % 2;
                    g.mul[id(a1, b1)][id(a2, b2)] = id(a, b);
                }
    return g;
}

bool is_p_power(size_t n, uint32_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

AlgebraPtr from_group(FieldPtr field, const SmallGroup& g) {
    const Field& F = *field;
    size_t n = g.n;
    std::vector<std::string> basis;
    for (size_t i = 0; i < n; ++i) basis.push_back("g" + std::to_string(i));
    std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul(n);
    for (size_t i = 0; i < n; ++i) {
        mul[i].resize(n);
        for (size_t j = 0; j < n; ++j) mul[i][j] = {{g.mul[i][j], F.one()}};
    }
    std::vector<FE> unit(n, F.zero());
    unit[0] = F.one();

    HopfData H;
    H.comul.resize(n);
    for (uint32_t i = 0; i < n; ++i) H.comul[i] = {{i, i, F.one()}};
    H.counit.assign(n, F.one());
    Matrix S(field, n, n);
    for (uint32_t i = 0; i < n; ++i) S.at(g.inverse(i), i) = F.one();
    H.antipode = std::move(S);

    std::vector<std::vector<FE>> rad;
    if (n % F.p() == 0) {
        if (!is_p_power(n, F.p()))
            fail(ErrorKind::CapabilityError,
                 "group order divisible by the characteristic must be a p-power here");
        for (size_t i = 1; i < n; ++i) {
            std::vector<FE> v(n, F.zero());
            v[i] = F.one();
            v[0] = F.neg(F.one());
            rad.push_back(std::move(v));
        }
    }
    // else: semisimple group algebra, radical zero (stable category trivial)
    return AlgebraDatum::create(std::move(field), std::move(basis), std::move(mul),
                                std::move(unit), std::move(H), std::move(rad), g.name);
}

} // namespace

AlgebraPtr group_algebra_cyclic(FieldPtr field, uint32_t n) {
    return from_group(std::move(field), cyclic_group(n));
}

AlgebraPtr group_algebra_elementary_abelian(FieldPtr field, uint32_t p, uint32_t rank) {
    if (rank == 0) fail(ErrorKind::MalformedElement, "rank must be positive");
    SmallGroup g = cyclic_group(p);
    for (uint32_t i = 1; i < rank; ++i) g = product_group(g, cyclic_group(p));
    return from_group(std::move(field), g);
}

AlgebraPtr group_algebra_quaternion8(FieldPtr field) {
    if (field->p() != 2)
        fail(ErrorKind::CapabilityError, "quaternion constructor is for characteristic two");
    return from_group(std::move(field), quaternion_group());
}

AlgebraPtr group_algebra_dihedral8(FieldPtr field) {
    if (field->p() != 2)
        fail(ErrorKind::CapabilityError, "dihedral constructor is for characteristic two");
    return from_group(std::move(field), dihedral8_group());
}

AlgebraPtr klein_four_algebra(FieldPtr field) {
    return group_algebra_elementary_abelian(std::move(field), 2, 2);
}

AlgebraPtr group_algebra_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    // tensor product of group algebras = algebra of the product group; done
    // at the structure-constant level to keep non-group inputs usable
    if (!(a->field()->desc() == b->field()->desc()))
        fail(ErrorKind::FieldMismatch, "product over different fields");
    const Field& F = *a->field();
    size_t na = a->dim(), nb = b->dim();
    size_t n = na * nb;
    auto id = [&](size_t i, size_t j) { return uint32_t(i * nb + j); };
    std::vector<std::string> basis;
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) basis.push_back(a->basis()[i] + "." + b->basis()[j]);
    std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul(n);
    for (size_t i1 = 0; i1 < na; ++i1)
        for (size_t j1 = 0; j1 < nb; ++j1) {
            mul[id(i1, j1)].resize(n);
            for (size_t i2 = 0; i2 < na; ++i2)
                for (size_t j2 = 0; j2 < nb; ++j2) {
                    auto& out = mul[id(i1, j1)][id(i2, j2)];
                    for (const auto& [ka, ca] : a->mul(i1, i2))
                        for (const auto& [kb, cb] : b->mul(j1, j2))
                            out.push_back({id(ka, kb), F.mul(ca, cb)});
                }
        }
    std::vector<FE> unit(n, F.zero());
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) unit[id(i, j)] = F.mul(a->unit()[i], b->unit()[j]);

    std::optional<HopfData> hopf;
    if (a->has_hopf() && b->has_hopf()) {
        HopfData H;
        H.comul.resize(n);
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < nb; ++j)
                for (const auto& [p1, q1, c1] : a->hopf().comul[i])
                    for (const auto& [p2, q2, c2] : b->hopf().comul[j])
                        H.comul[id(i, j)].push_back({id(p1, p2), id(q1, q2), F.mul(c1, c2)});
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < nb; ++j)
                H.counit.push_back(F.mul(a->hopf().counit[i], b->hopf().counit[j]));
        Matrix S(a->field(), n, n);
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < nb; ++j)
                for (size_t r = 0; r < na; ++r)
                    for (size_t s = 0; s < nb; ++s)
                        S.at(id(r, s), id(i, j)) =
                            F.mul(a->hopf().antipode.at(r, i), b->hopf().antipode.at(s, j));
        H.antipode = std::move(S);
        hopf = std::move(H);
    }

    // radical of a tensor product of local augmented algebras: generated by
    // rad(a) (x) 1 and 1 (x) rad(b)
    std::vector<std::vector<FE>> rad;
    for (const auto& r : a->radical_gens()) {
        std::vector<FE> v(n, F.zero());
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < nb; ++j) v[id(i, j)] = F.mul(r[i], b->unit()[j]);
        rad.push_back(std::move(v));
    }
    for (const auto& r : b->radical_gens()) {
        std::vector<FE> v(n, F.zero());
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < nb; ++j) v[id(i, j)] = F.mul(a->unit()[i], r[j]);
        rad.push_back(std::move(v));
    }
    return AlgebraDatum::create(a->field(), std::move(basis), std::move(mul), std::move(unit),
                                std::move(hopf), std::move(rad),
                                a->name() + "x" + b->name());
}

AlgebraPtr restricted_borel_algebra(FieldPtr field) {
    if (field->p() != 2)
        fail(ErrorKind::CapabilityError, "the restricted Borel example lives in characteristic two");
    const Field& F = *field;
    // basis 1, x, y, xy with x^2 = x, y^2 = 0, yx = xy + y
    auto fe = [&](int v) { return F.from_int(v); };
    std::vector<std::string> basis = {"1", "x", "y", "xy"};
    std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul(4);
    for (auto& row : mul) row.resize(4);
    auto set = [&](size_t i, size_t j, std::vector<std::pair<uint32_t, int>> val) {
        for (auto [k, c] : val) mul[i][j].push_back({uint32_t(k), fe(c)});
    };
    for (size_t j = 0; j < 4; ++j) set(0, j, {{uint32_t(j), 1}});
    set(1, 0, {{1, 1}});
    set(1, 1, {{1, 1}});       // x x = x
    set(1, 2, {{3, 1}});       // x y = xy
    set(1, 3, {{3, 1}});       // x xy = xy
    set(2, 0, {{2, 1}});
    set(2, 1, {{3, 1}, {2, 1}}); // y x = xy + y
    set(2, 2, {});             // y y = 0
    set(2, 3, {});             // y xy = 0
    set(3, 0, {{3, 1}});
    set(3, 1, {});             // xy x = 0
    set(3, 2, {});             // xy y = 0
    set(3, 3, {});             // xy xy = 0
    std::vector<FE> unit = {F.one(), F.zero(), F.zero(), F.zero()};

    HopfData H;
    H.comul.resize(4);
    // primitives x, y; Delta is an algebra map
    H.comul[0] = {{0, 0, F.one()}};
    H.comul[1] = {{1, 0, F.one()}, {0, 1, F.one()}};
    H.comul[2] = {{2, 0, F.one()}, {0, 2, F.one()}};
    H.comul[3] = {{3, 0, F.one()}, {1, 2, F.one()}, {2, 1, F.one()}, {0, 3, F.one()}};
    H.counit = {F.one(), F.zero(), F.zero(), F.zero()};
    Matrix S(field, 4, 4);
    S.at(0, 0) = F.one();
    S.at(1, 1) = F.one();
    S.at(2, 2) = F.one();
    S.at(3, 3) = F.one(); // S(xy) = yx = xy + y
    S.at(2, 3) = F.one();
    H.antipode = std::move(S);

    std::vector<std::vector<FE>> rad = {{F.zero(), F.zero(), F.one(), F.zero()},
                                        {F.zero(), F.zero(), F.zero(), F.one()}};
    return AlgebraDatum::create(std::move(field), std::move(basis), std::move(mul),
                                std::move(unit), std::move(H), std::move(rad), "u(b2)");
}

} // namespace gradua
