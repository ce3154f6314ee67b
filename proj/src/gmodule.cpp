#include "gradua/gmodule.hpp"

#include <algorithm>

#include "gradua/gmodule_detail.hpp"

namespace gradua {

ModulePresentation ModulePresentation::make(RingPtr ring, std::vector<int64_t> gen_degrees,
                                            std::vector<std::vector<GPoly>> pres) {
    ModulePresentation m;
    m.ring = std::move(ring);
    m.gen_degrees = std::move(gen_degrees);
    m.pres = std::move(pres);
    const RingCtx& R = m.ring->ctx();
    if (!m.pres.empty() && m.pres.size() != m.gen_degrees.size())
        fail(ErrorKind::PresentationError, "presentation row count != generator count");
    size_t ncols = m.pres.empty() ? 0 : m.pres[0].size();
    for (const auto& row : m.pres)
        if (row.size() != ncols)
            fail(ErrorKind::PresentationError, "ragged presentation matrix");
    for (size_t j = 0; j < ncols; ++j) {
        std::optional<int64_t> rd;
        for (size_t i = 0; i < m.pres.size(); ++i) {
            const GPoly& e = m.pres[i][j];
            if (e.is_zero()) continue;
            int64_t d = 0;
            if (!R.homogeneous(e, &d))
                fail(ErrorKind::PresentationError, "inhomogeneous presentation entry");
            int64_t total = d + m.gen_degrees[i];
            if (rd && *rd != total)
                fail(ErrorKind::PresentationError, "presentation column with mixed degrees");
            rd = total;
        }
        m.rel_degrees.push_back(rd.value_or(m.gen_degrees.empty() ? 0 : m.gen_degrees[0]));
    }
    return m;
}

ModulePresentation ModulePresentation::free_module(RingPtr ring, std::vector<int64_t> degs) {
    std::vector<std::vector<GPoly>> pres(degs.size());
    return make(std::move(ring), std::move(degs), std::move(pres));
}

ModulePresentation ModulePresentation::cyclic(RingPtr ring, const std::vector<GPoly>& ideal_gens) {
    std::vector<std::vector<GPoly>> pres(1);
    pres[0] = ideal_gens;
    return make(std::move(ring), {0}, std::move(pres));
}

bool DegreewiseModule::has_action(size_t g, int64_t n) const {
    int64_t w = ring->ctx().degrees()[g];
    return in_window(n) && in_window(n + w);
}

std::map<int64_t, int64_t> DegreewiseModule::table() const {
    std::map<int64_t, int64_t> t;
    for (int64_t n = lo; n <= hi; ++n)
        if (dim_at(n) != 0) t[n] = dim_at(n);
    return t;
}

DegreewiseModule DegreewiseModule::restricted(int64_t nlo, int64_t nhi) const {
    if (nlo < lo || nhi > hi) fail(ErrorKind::DimensionMismatch, "restriction outside window");
    DegreewiseModule r;
    r.ring = ring;
    r.lo = nlo;
    r.hi = nhi;
    for (int64_t n = nlo; n <= nhi; ++n) r.dims.push_back(dim_at(n));
    r.act.resize(ring->ctx().ngens());
    for (size_t g = 0; g < r.act.size(); ++g) {
        int64_t w = ring->ctx().degrees()[g];
        for (int64_t n = nlo; n <= nhi; ++n) {
            if (n + w <= nhi)
                r.act[g].push_back(action(g, n));
            else
                r.act[g].push_back(Matrix(ring->field(), 0, size_t(dim_at(n))));
        }
    }
    return r;
}

bool same_table(const DegreewiseModule& a, const DegreewiseModule& b) {
    if (a.lo != b.lo || a.hi != b.hi) return false;
    for (int64_t n = a.lo; n <= a.hi; ++n)
        if (a.dim_at(n) != b.dim_at(n)) return false;
    return true;
}

DegreewiseModule shift(const DegreewiseModule& m, int64_t j) {
    DegreewiseModule r;
    r.ring = m.ring;
    r.lo = m.lo - j;
    r.hi = m.hi - j;
    r.dims = m.dims;
    r.act = m.act;
    return r;
}

DegreewiseModule graded_matlis_dual(const DegreewiseModule& m) {
    DegreewiseModule r;
    r.ring = m.ring;
    r.lo = -m.hi;
    r.hi = -m.lo;
    const RingCtx& R = m.ring->ctx();
    for (int64_t n = r.lo; n <= r.hi; ++n) r.dims.push_back(m.dim_at(-n));
    r.act.resize(R.ngens());
    for (size_t g = 0; g < R.ngens(); ++g) {
        int64_t w = R.degrees()[g];
        for (int64_t n = r.lo; n <= r.hi; ++n) {
            // dual action at n is the transpose of the action -n-w -> -n
            if (n + w <= r.hi && m.in_window(-n - w)) {
                r.act[g].push_back(m.action(g, -n - w).transpose());
            } else {
                r.act[g].push_back(Matrix(m.ring->field(), 0, size_t(r.dims[size_t(n - r.lo)])));
            }
        }
    }
    return r;
}

// ------------------------------------------------------------- expansion

namespace detail {

FreeBasis free_basis(const RingPtr& ring, const std::vector<int64_t>& gen_degrees, int64_t n) {
    FreeBasis fb;
    for (size_t i = 0; i < gen_degrees.size(); ++i) {
        for (const auto& mono : ring->basis_of_degree(n - gen_degrees[i])) {
            fb.index[{i, mono.e}] = fb.elems.size();
            fb.elems.push_back({i, mono});
        }
    }
    return fb;
}

size_t FreeBasis::find(size_t gen, const GMono& m) const {
    auto it = index.find({gen, m.e});
    if (it == index.end()) fail(ErrorKind::DimensionMismatch, "internal: basis lookup");
    return it->second;
}

std::vector<FE> coords_of(const RingPtr& ring, const FreeBasis& fb,
                          const std::vector<GPoly>& vec) {
    const Field& F = *ring->field();
    std::vector<FE> out(fb.elems.size(), F.zero());
    for (size_t i = 0; i < vec.size(); ++i) {
        GPoly red = ring->reduce(vec[i]);
        for (const auto& t : red.t) out[fb.find(i, t.m)] = t.c;
    }
    return out;
}

std::vector<FE> QuotientSpace::project(std::vector<FE> v, const Field& F) const {
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

QuotientSpace make_quotient(const Matrix& columns) {
    Echelon e = reduced_echelon(columns.transpose());
    QuotientSpace q;
    q.pivots = e.pivots;
    Matrix rows(columns.field(), e.pivots.size(), columns.rows());
    for (size_t r = 0; r < e.pivots.size(); ++r)
        for (size_t j = 0; j < columns.rows(); ++j) rows.at(r, j) = e.rref.at(r, j);
    q.rows = std::move(rows);
    std::vector<bool> isPivot(columns.rows(), false);
    for (size_t p : e.pivots) isPivot[p] = true;
    for (size_t j = 0; j < columns.rows(); ++j)
        if (!isPivot[j]) q.freeCoords.push_back(j);
    return q;
}

Piece make_piece(const ModulePresentation& m, int64_t n) {
    const RingPtr& ring = m.ring;
    Piece p;
    p.f0 = free_basis(ring, m.gen_degrees, n);
    std::vector<std::vector<FE>> image;
    for (size_t j = 0; j < m.nrels(); ++j) {
        for (const auto& mono : ring->basis_of_degree(n - m.rel_degrees[j])) {
            std::vector<GPoly> vec(m.ngens());
            for (size_t i = 0; i < m.ngens(); ++i)
                vec[i] = ring->ctx().term_mul({mono, ring->field()->one()}, m.pres[i][j]);
            image.push_back(coords_of(ring, p.f0, vec));
        }
    }
    Matrix cols(ring->field(), p.f0.elems.size(), image.size());
    for (size_t c = 0; c < image.size(); ++c)
        for (size_t r = 0; r < p.f0.elems.size(); ++r) cols.at(r, c) = image[c][r];
    p.quo = make_quotient(cols);
    return p;
}

} // namespace detail

DegreewiseModule degreewise_expand(const ModulePresentation& m, int64_t lo, int64_t hi,
                                   const ExpandLimits& limits) {
    if (hi < lo) fail(ErrorKind::DimensionMismatch, "empty window");
    if (hi - lo > limits.max_window_span)
        fail(ErrorKind::ResourceError, "window exceeds the expansion budget");
    const RingPtr& ring = m.ring;
    const RingCtx& R = ring->ctx();
    const Field& F = *ring->field();

    std::vector<detail::Piece> pieces;
    for (int64_t n = lo; n <= hi; ++n) pieces.push_back(detail::make_piece(m, n));

    DegreewiseModule out;
    out.ring = ring;
    out.lo = lo;
    out.hi = hi;
    for (const auto& p : pieces) out.dims.push_back(int64_t(p.quo.dim()));

    out.act.resize(R.ngens());
    for (size_t g = 0; g < R.ngens(); ++g) {
        int64_t w = R.degrees()[g];
        for (int64_t n = lo; n <= hi; ++n) {
            if (n + w > hi) {
                out.act[g].push_back(
                    Matrix(ring->field(), 0, pieces[size_t(n - lo)].quo.dim()));
                continue;
            }
            const detail::Piece& src = pieces[size_t(n - lo)];
            const detail::Piece& dst = pieces[size_t(n + w - lo)];
            Matrix mat(ring->field(), dst.quo.dim(), src.quo.dim());
            for (size_t c = 0; c < src.quo.dim(); ++c) {
                auto [gi, mono] = src.f0.elems[src.quo.freeCoords[c]];
                GPoly shifted;
                shifted.t.push_back({R.mono_mul(mono, R.mono_var(g)), F.one()});
                GPoly red = ring->reduce(shifted);
                std::vector<FE> vec(dst.f0.elems.size(), F.zero());
                for (const auto& t : red.t) vec[dst.f0.find(gi, t.m)] = t.c;
                auto q = dst.quo.project(std::move(vec), F);
                for (size_t r = 0; r < q.size(); ++r) mat.at(r, c) = q[r];
            }
            out.act[g].push_back(std::move(mat));
        }
    }
    return out;
}

Matrix poly_action(const DegreewiseModule& m, const GPoly& f, int64_t n) {
    const RingCtx& R = m.ring->ctx();
    int64_t d = 0;
    if (!R.homogeneous(f, &d)) fail(ErrorKind::PresentationError, "inhomogeneous action element");
    if (!m.in_window(n) || !m.in_window(n + d))
        fail(ErrorKind::DimensionMismatch, "action outside window");
    Matrix acc(m.ring->field(), size_t(m.dim_at(n + d)), size_t(m.dim_at(n)));
    for (const auto& t : f.t) {
        Matrix cur = Matrix::identity(m.ring->field(), size_t(m.dim_at(n)));
        int64_t at = n;
        for (size_t g = 0; g < t.m.e.size(); ++g) {
            for (uint32_t rep = 0; rep < t.m.e[g]; ++rep) {
                cur = m.action(g, at).mul(cur);
                at += R.degrees()[g];
            }
        }
        acc = acc.add(cur.scale(t.c));
    }
    return acc;
}

} // namespace gradua
