#include <random>

#include "gradua/stmod_internal.hpp"

namespace gradua {

namespace {

void validate_module(const FDModule& m) {
    const AlgebraDatum& A = *m.algebra;
    const Field& F = *A.field();
    size_t n = A.dim(), d = m.dim();
    if (m.action.size() != n) fail(ErrorKind::MalformedElement, "one action matrix per basis element");
    for (const auto& a : m.action)
        if (a.rows() != d || a.cols() != d)
            fail(ErrorKind::MalformedElement, "action matrices must be square of the module dimension");
    // unit acts as identity
    Matrix u(A.field(), d, d);
    for (size_t i = 0; i < n; ++i)
        if (!F.is_zero(A.unit()[i])) u = u.add(m.action[i].scale(A.unit()[i]));
    if (!u.equals(Matrix::identity(A.field(), d)))
        fail(ErrorKind::MalformedElement, "unit does not act as the identity on the module");
    // structure constants
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Matrix want(A.field(), d, d);
            for (const auto& [k, c] : A.mul(i, j)) want = want.add(m.action[k].scale(c));
            if (!m.action[i].mul(m.action[j]).equals(want))
                fail(ErrorKind::MalformedElement, "module action violates the structure constants");
        }
}

} // namespace

Matrix FDModule::action_of(const std::vector<FE>& elem) const {
    const Field& F = *algebra->field();
    Matrix out(algebra->field(), dim(), dim());
    for (size_t i = 0; i < elem.size(); ++i)
        if (!F.is_zero(elem[i])) out = out.add(action[i].scale(elem[i]));
    return out;
}

FDModule make_module(AlgebraPtr algebra, std::vector<Matrix> action) {
    FDModule m{std::move(algebra), std::move(action)};
    validate_module(m);
    return m;
}

FDModule make_module_unchecked(AlgebraPtr algebra, std::vector<Matrix> action) {
    return FDModule{std::move(algebra), std::move(action)};
}

FDModule trivial_module(const AlgebraPtr& a) {
    if (!a->has_hopf())
        fail(ErrorKind::CapabilityError, "trivial module needs the counit");
    std::vector<Matrix> act;
    for (size_t i = 0; i < a->dim(); ++i) {
        Matrix m(a->field(), 1, 1);
        m.at(0, 0) = a->hopf().counit[i];
        act.push_back(std::move(m));
    }
    return make_module_unchecked(a, std::move(act));
}

FDModule regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> act;
    for (size_t i = 0; i < a->dim(); ++i) act.push_back(a->lmul(i));
    return make_module_unchecked(a, std::move(act));
}

FDModule zero_module(const AlgebraPtr& a) {
    std::vector<Matrix> act(a->dim(), Matrix(a->field(), 0, 0));
    return make_module_unchecked(a, std::move(act));
}

FDModule direct_sum(const FDModule& m, const FDModule& n) {
    if (m.algebra != n.algebra) fail(ErrorKind::FieldMismatch, "direct sum over different algebras");
    size_t d = m.dim() + n.dim();
    std::vector<Matrix> act;
    for (size_t i = 0; i < m.algebra->dim(); ++i) {
        Matrix a(m.algebra->field(), d, d);
        for (size_t r = 0; r < m.dim(); ++r)
            for (size_t c = 0; c < m.dim(); ++c) a.at(r, c) = m.action[i].at(r, c);
        for (size_t r = 0; r < n.dim(); ++r)
            for (size_t c = 0; c < n.dim(); ++c)
                a.at(m.dim() + r, m.dim() + c) = n.action[i].at(r, c);
        act.push_back(std::move(a));
    }
    return make_module_unchecked(m.algebra, std::move(act));
}

FDModule submodule(const FDModule& m, const Matrix& basisCols) {
    std::vector<Matrix> act;
    for (size_t i = 0; i < m.algebra->dim(); ++i) {
        Matrix moved = m.action[i].mul(basisCols);
        auto sol = solve_matrix(basisCols, moved);
        if (!sol) fail(ErrorKind::MalformedElement, "subspace is not action-stable");
        act.push_back(std::move(*sol));
    }
    return make_module_unchecked(m.algebra, std::move(act));
}

std::vector<FE> ModQuotient::project(std::vector<FE> v, const Field& F) const {
    for (size_t r = 0; r < pivots.size(); ++r) {
        const FE& c = v[pivots[r]];
        if (F.is_zero(c)) continue;
        FE f = c;
        for (size_t j = 0; j < rows.cols(); ++j)
            if (!F.is_zero(rows.at(r, j))) v[j] = F.sub(v[j], F.mul(f, rows.at(r, j)));
    }
    std::vector<FE> out;
    out.reserve(freeCoords.size());
    for (size_t j : freeCoords) out.push_back(v[j]);
    return out;
}

Matrix ModQuotient::project_matrix(const Matrix& columns, const Field& F) const {
    Matrix out(columns.field(), freeCoords.size(), columns.cols());
    for (size_t c = 0; c < columns.cols(); ++c) {
        std::vector<FE> v(columns.rows());
        for (size_t r = 0; r < columns.rows(); ++r) v[r] = columns.at(r, c);
        auto q = project(std::move(v), F);
        for (size_t r = 0; r < q.size(); ++r) out.at(r, c) = q[r];
    }
    return out;
}

ModQuotient mod_quotient(const Matrix& subspaceCols) {
    Echelon e = reduced_echelon(subspaceCols.transpose());
    ModQuotient q;
    q.pivots = e.pivots;
    Matrix rows(subspaceCols.field(), e.pivots.size(), subspaceCols.rows());
    for (size_t r = 0; r < e.pivots.size(); ++r)
        for (size_t j = 0; j < subspaceCols.rows(); ++j) rows.at(r, j) = e.rref.at(r, j);
    q.rows = std::move(rows);
    std::vector<bool> isPivot(subspaceCols.rows(), false);
    for (size_t p : e.pivots) isPivot[p] = true;
    for (size_t j = 0; j < subspaceCols.rows(); ++j)
        if (!isPivot[j]) q.freeCoords.push_back(j);
    return q;
}

FDModule quotient_module(const FDModule& m, const Matrix& basisCols) {
    const Field& F = *m.algebra->field();
    ModQuotient q = mod_quotient(basisCols);
    std::vector<Matrix> act;
    for (size_t i = 0; i < m.algebra->dim(); ++i) {
        Matrix a(m.algebra->field(), q.freeCoords.size(), q.freeCoords.size());
        for (size_t c = 0; c < q.freeCoords.size(); ++c) {
            std::vector<FE> v(m.dim(), F.zero());
            v[q.freeCoords[c]] = F.one();
            auto img = m.action[i].apply(v);
            auto proj = q.project(std::move(img), F);
            for (size_t r = 0; r < proj.size(); ++r) a.at(r, c) = proj[r];
        }
        act.push_back(std::move(a));
    }
    return make_module_unchecked(m.algebra, std::move(act));
}

FDModule base_change_module(const FDModule& m, const AlgebraPtr& extended) {
    if (extended->dim() != m.algebra->dim())
        fail(ErrorKind::FieldMismatch, "extended algebra has a different basis");
    std::vector<Matrix> act;
    for (size_t i = 0; i < m.algebra->dim(); ++i) {
        Matrix a(extended->field(), m.dim(), m.dim());
        for (size_t r = 0; r < m.dim(); ++r)
            for (size_t c = 0; c < m.dim(); ++c) a.at(r, c) = m.action[i].at(r, c);
        act.push_back(std::move(a));
    }
    return make_module_unchecked(extended, std::move(act));
}

Matrix submodule_closure(const FDModule& m, const Matrix& seed) {
    Matrix span = seed;
    while (true) {
        auto piv = column_basis(span);
        Matrix basis(m.algebra->field(), m.dim(), piv.size());
        for (size_t c = 0; c < piv.size(); ++c)
            for (size_t r = 0; r < m.dim(); ++r) basis.at(r, c) = span.at(r, piv[c]);
        Matrix grown = basis;
        for (size_t i = 0; i < m.algebra->dim(); ++i)
            grown = grown.hcat(m.action[i].mul(basis));
        if (rank_of(grown) == piv.size()) return basis;
        span = std::move(grown);
    }
}

Matrix radical_subspace(const FDModule& m) {
    Matrix seed(m.algebra->field(), m.dim(), 0);
    for (const auto& r : m.algebra->radical_gens()) {
        Matrix img = m.action_of(r);
        seed = seed.hcat(img);
    }
    if (seed.cols() == 0) return seed;
    return submodule_closure(m, seed);
}

Matrix socle_subspace(const FDModule& m) {
    const Field& F = *m.algebra->field();
    Matrix stacked(m.algebra->field(), 0, m.dim());
    for (const auto& r : m.algebra->radical_gens()) {
        Matrix a = m.action_of(r);
        stacked = stacked.rows() == 0 ? a : stacked.vcat(a);
    }
    if (stacked.rows() == 0) return Matrix::identity(m.algebra->field(), m.dim());
    (void)F;
    return rank_kernel(stacked).kernel;
}

std::vector<Matrix> hom_space(const FDModule& m, const FDModule& n) {
    if (m.algebra != n.algebra) fail(ErrorKind::FieldMismatch, "hom over different algebras");
    const Field& F = *m.algebra->field();
    size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return {};
    size_t unknowns = dm * dn; // X is dn x dm, column-major by source index
    size_t nb = m.algebra->dim();
    Matrix sys(m.algebra->field(), nb * unknowns, unknowns);
    size_t rowBase = 0;
    for (size_t i = 0; i < nb; ++i) {
        // condition: act_n(i) X - X act_m(i) = 0
        for (size_t c = 0; c < dm; ++c)
            for (size_t r = 0; r < dn; ++r) {
                size_t row = rowBase + c * dn + r;
                // (act_n X)_{r,c} = sum_s actn[r,s] X[s,c]
                for (size_t s = 0; s < dn; ++s) {
                    const FE& v = n.action[i].at(r, s);
                    if (!F.is_zero(v)) {
                        size_t col = c * dn + s;
                        sys.at(row, col) = F.add(sys.at(row, col), v);
                    }
                }
                // (X act_m)_{r,c} = sum_t X[r,t] actm[t,c]
                for (size_t t = 0; t < dm; ++t) {
                    const FE& v = m.action[i].at(t, c);
                    if (!F.is_zero(v)) {
                        size_t col = t * dn + r;
                        sys.at(row, col) = F.sub(sys.at(row, col), v);
                    }
                }
            }
        rowBase += unknowns;
    }
    auto rk = rank_kernel(sys);
    std::vector<Matrix> out;
    for (size_t kc = 0; kc < rk.kernel.cols(); ++kc) {
        Matrix X(m.algebra->field(), dn, dm);
        for (size_t c = 0; c < dm; ++c)
            for (size_t r = 0; r < dn; ++r) X.at(r, c) = rk.kernel.at(c * dn + r, kc);
        out.push_back(std::move(X));
    }
    return out;
}

FDModule random_module(const AlgebraPtr& a, uint64_t seed, size_t max_dim) {
    std::mt19937_64 rng(seed);
    const Field& F = *a->field();
    for (int attempt = 0; attempt < 64; ++attempt) {
        size_t rank = 1 + rng() % 3;
        FDModule free = regular_module(a);
        for (size_t i = 1; i < rank; ++i) free = direct_sum(free, regular_module(a));
        size_t seeds = 1 + rng() % (rank + 1);
        Matrix seedCols(a->field(), free.dim(), seeds);
        for (size_t c = 0; c < seeds; ++c)
            for (size_t r = 0; r < free.dim(); ++r)
                seedCols.at(r, c) = F.from_int(int64_t(rng() % F.p()));
        Matrix sub = submodule_closure(free, seedCols);
        if (sub.cols() == free.dim()) continue; // quotient would vanish
        FDModule q = quotient_module(free, sub);
        if (q.dim() >= 1 && q.dim() <= max_dim) return q;
    }
    fail(ErrorKind::ResourceError, "random module search exhausted its attempts");
}

} // namespace gradua
