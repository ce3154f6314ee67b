#include <algorithm>

#include "gradua/genpoint.hpp"
#include "gradua/gmodule_detail.hpp"

namespace gradua {

namespace {

int max_gen_degree(const RingCtx& R) {
    int m = 1;
    for (int d : R.degrees()) m = std::max(m, d);
    return m;
}

} // namespace

DegreewiseModule localize_invert(const std::function<DegreewiseModule(int64_t, int64_t)>& expand,
                                 const GPoly& u, int64_t lo, int64_t hi,
                                 const LocalizeConfig& cfg) {
    if (u.is_zero()) fail(ErrorKind::MalformedElement, "cannot invert zero");
    DegreewiseModule probe = expand(0, 0);
    const RingPtr ring = probe.ring;
    const RingCtx& R = ring->ctx();
    const Field& F = *ring->field();
    int64_t w = 0;
    if (!R.homogeneous(u, &w) || w < 1)
        fail(ErrorKind::PresentationError, "localization needs a positive-degree element");

    int64_t wg = max_gen_degree(R);
    int64_t probeHi = hi + wg;

    // The piece of M_u at degree n is the colimit of M^{n+jw} along
    // multiplication by u. With a common shift of j steps it is realized as
    // the image of u^j : M^{n+jw} -> M^{n+2jw}; j grows until every window
    // piece has settled (both the shift and the stabilizing power).
    int J = 0;
    std::vector<size_t> ranks;
    DegreewiseModule M;
    int stableCount = 0;
    for (int tryJ = 1; tryJ <= cfg.max_power; ++tryJ) {
        M = expand(lo, probeHi + 2 * int64_t(tryJ) * w);
        std::vector<size_t> cur;
        for (int64_t n = lo; n <= probeHi; ++n) {
            Matrix comp = Matrix::identity(ring->field(), size_t(M.dim_at(n + int64_t(tryJ) * w)));
            int64_t at = n + int64_t(tryJ) * w;
            for (int pow = 0; pow < tryJ; ++pow) {
                comp = poly_action(M, u, at).mul(comp);
                at += w;
            }
            cur.push_back(rank_of(comp));
        }
        if (!ranks.empty() && cur == ranks) {
            ++stableCount;
            if (stableCount >= cfg.stable_runs) {
                J = tryJ;
                break;
            }
        } else {
            stableCount = 0;
        }
        ranks = cur;
    }
    if (J == 0)
        fail(ErrorKind::NonStabilized, "localization ranks did not stabilize below the cap");

    M = expand(lo, probeHi + 2 * int64_t(J) * w);
    const int64_t shift = int64_t(J) * w;

    // stabilized pieces: image of u^J from the shifted window degree
    std::vector<Matrix> basis; // per n in [lo, probeHi], inside M^{n+2Jw}
    for (int64_t n = lo; n <= probeHi; ++n) {
        Matrix comp = Matrix::identity(ring->field(), size_t(M.dim_at(n + shift)));
        int64_t at = n + shift;
        for (int pow = 0; pow < J; ++pow) {
            comp = poly_action(M, u, at).mul(comp);
            at += w;
        }
        auto piv = column_basis(comp);
        Matrix b(ring->field(), comp.rows(), piv.size());
        for (size_t c = 0; c < piv.size(); ++c)
            for (size_t r = 0; r < comp.rows(); ++r) b.at(r, c) = comp.at(r, piv[c]);
        basis.push_back(std::move(b));
    }

    DegreewiseModule out;
    out.ring = ring;
    out.lo = lo;
    out.hi = hi;
    for (int64_t n = lo; n <= hi; ++n) out.dims.push_back(int64_t(basis[size_t(n - lo)].cols()));
    out.act.resize(R.ngens());
    for (size_t g = 0; g < R.ngens(); ++g) {
        int64_t d = R.degrees()[g];
        for (int64_t n = lo; n <= hi; ++n) {
            const Matrix& src = basis[size_t(n - lo)];
            if (n + d > hi) {
                out.act[g].push_back(Matrix(ring->field(), 0, src.cols()));
                continue;
            }
            const Matrix& dst = basis[size_t(n + d - lo)];
            Matrix moved = M.action(g, n + 2 * shift).mul(src);
            auto sol = solve_matrix(dst, moved);
            if (!sol)
                fail(ErrorKind::DimensionMismatch,
                     "internal: localized action left the stabilized image");
            out.act[g].push_back(std::move(*sol));
        }
    }
    (void)F;
    return out;
}

DegreewiseModule injective_hull_closed_point(const RingPtr& ring, const HomIdeal& m, int64_t lo,
                                             int64_t hi) {
    if (krull_dimension(ring) != 1)
        fail(ErrorKind::OutOfScope,
             "injective hull is materialized only for Krull dimension one; use "
             "hom_into_injective instead");
    auto us = noether_normalize(ring, m);
    if (us.size() != 1)
        fail(ErrorKind::CertificationError, "closed point needs a one-element Noether system");
    const GPoly& u = us[0];

    ModulePresentation self = ModulePresentation::free_module(ring, {0});
    auto expander = [&](int64_t a, int64_t b) { return degreewise_expand(self, a, b); };
    DegreewiseModule localized = localize_invert(expander, u, -hi, -lo);
    return graded_matlis_dual(localized);
}

DegreewiseModule hom_into_injective(const ModulePresentation& n, const HomIdeal& m, int64_t lo,
                                    int64_t hi, const HomIntoInjectiveConfig& cfg) {
    const RingPtr& ring = n.ring;
    const RingCtx& R = ring->ctx();
    if (m.ring() != ring) fail(ErrorKind::FieldMismatch, "point over a different ring");
    if (krull_dimension(hilbert_series(ring, m.gens(), 1)) != 1)
        fail(ErrorKind::DimensionMismatch, "hom_into_injective needs a closed point");

    auto us = noether_normalize(ring, m);
    if (us.size() != 1)
        fail(ErrorKind::CertificationError, "closed point needs a one-element Noether system");
    const GPoly& u = us[0];

    int64_t wlo = -hi, whi = -lo;

    auto expandN = [&](int64_t a, int64_t b) { return degreewise_expand(n, a, b); };
    DegreewiseModule locN = localize_invert(expandN, u, wlo, whi, cfg.localize);

    // find s with m^s killing the localization (dims of N/m^s N match after
    // inverting u on the whole comparison window)
    for (int s = 1; s <= cfg.s_cap; ++s) {
        // append columns: m^s products times each module generator
        std::vector<GPoly> products;
        {
            std::vector<GPoly> cur = {R.one()};
            for (int rep = 0; rep < s; ++rep) {
                std::vector<GPoly> next;
                for (const auto& c : cur)
                    for (const auto& g : m.gens()) next.push_back(ring->reduce(R.mul(c, g)));
                cur = std::move(next);
            }
            products = cur;
        }
        std::vector<std::vector<GPoly>> pres = n.pres;
        if (pres.empty()) pres.resize(n.ngens());
        for (size_t gi = 0; gi < n.ngens(); ++gi)
            for (const auto& p : products)
                for (size_t row = 0; row < n.ngens(); ++row)
                    pres[row].push_back(row == gi ? p : GPoly{});
        ModulePresentation quot = ModulePresentation::make(ring, n.gen_degrees, pres);

        auto expandQ = [&](int64_t a, int64_t b) { return degreewise_expand(quot, a, b); };
        DegreewiseModule locQ = localize_invert(expandQ, u, wlo, whi, cfg.localize);
        if (same_table(locQ, locN)) return graded_matlis_dual(locQ);
    }
    fail(ErrorKind::CertificationError,
         "no power of the point annihilates the localized module below the cap");
}

int64_t local_rank_at_zero(const ModulePresentation& m) {
    const RingPtr& ring = m.ring;
    const RingCtx& R = ring->ctx();

    size_t rows = m.ngens(), cols = m.nrels();
    std::vector<std::vector<GPoly>> a(rows, std::vector<GPoly>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) a[i][j] = ring->reduce(m.pres[i][j]);

    // rank over the graded fraction field: largest nonvanishing minor, with
    // normal forms taken in the quotient domain at every expansion step
    std::function<GPoly(const std::vector<size_t>&, const std::vector<size_t>&)> det =
        [&](const std::vector<size_t>& ri, const std::vector<size_t>& ci) -> GPoly {
        if (ri.size() == 1) return a[ri[0]][ci[0]];
        GPoly acc;
        for (size_t k = 0; k < ri.size(); ++k) {
            const GPoly& e = a[ri[k]][ci[0]];
            if (e.is_zero()) continue;
            std::vector<size_t> subr;
            for (size_t t = 0; t < ri.size(); ++t)
                if (t != k) subr.push_back(ri[t]);
            std::vector<size_t> subc(ci.begin() + 1, ci.end());
            GPoly sub = det(subr, subc);
            GPoly term = ring->reduce(R.mul(e, sub));
            acc = k % 2 == 0 ? R.add(acc, term) : R.sub(acc, term);
        }
        return ring->reduce(acc);
    };

    size_t maxk = std::min(rows, cols);
    for (size_t k = maxk; k >= 1; --k) {
        // all k-subsets of rows and columns
        std::vector<size_t> ri(k), ci(k);
        std::function<bool(std::vector<size_t>&, size_t, size_t)> init =
            [&](std::vector<size_t>& v, size_t n, size_t) {
                for (size_t t = 0; t < v.size(); ++t) v[t] = t;
                return v.size() <= n;
            };
        auto next = [&](std::vector<size_t>& v, size_t n) {
            size_t i = v.size();
            while (i-- > 0) {
                if (v[i] != i + n - v.size()) {
                    ++v[i];
                    for (size_t j = i + 1; j < v.size(); ++j) v[j] = v[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        if (!init(ri, rows, k)) continue;
        do {
            if (!init(ci, cols, k)) break;
            do {
                if (!det(ri, ci).is_zero()) return int64_t(rows) - int64_t(k);
            } while (next(ci, cols));
        } while (next(ri, rows));
    }
    return int64_t(rows);
}

} // namespace gradua
