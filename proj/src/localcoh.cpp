#include <algorithm>
#include <sstream>

#include "gradua/gmodule_detail.hpp"

namespace gradua {

namespace {

using detail::FreeBasis;
using detail::free_basis;

int max_gen_degree(const RingCtx& R) {
    int m = 1;
    for (int d : R.degrees()) m = std::max(m, d);
    return m;
}

// matrix of a free-module map (polynomial entries) on one degree piece
Matrix step_matrix(const RingPtr& ring, const std::vector<int64_t>& curDegs,
                   const std::vector<int64_t>& nextDegs,
                   const std::vector<std::vector<GPoly>>& mat, const FreeBasis& curB,
                   const FreeBasis& nextB) {
    const RingCtx& R = ring->ctx();
    const Field& F = *ring->field();
    (void)curDegs;
    (void)nextDegs;
    Matrix out(ring->field(), curB.elems.size(), nextB.elems.size());
    for (size_t c = 0; c < nextB.elems.size(); ++c) {
        auto [j, mono] = nextB.elems[c];
        std::vector<GPoly> vec(mat.size());
        for (size_t i = 0; i < mat.size(); ++i)
            vec[i] = R.term_mul({mono, F.one()}, mat[i][j]);
        auto coords = detail::coords_of(ring, curB, vec);
        for (size_t r = 0; r < coords.size(); ++r) out.at(r, c) = coords[r];
    }
    return out;
}

// polynomial vector from coordinates in a free-basis piece
std::vector<GPoly> vector_of(const RingPtr& ring, const FreeBasis& fb, size_t ngens,
                             const std::vector<FE>& coords) {
    const RingCtx& R = ring->ctx();
    const Field& F = *ring->field();
    std::vector<std::vector<GTerm>> terms(ngens);
    for (size_t k = 0; k < coords.size(); ++k) {
        if (F.is_zero(coords[k])) continue;
        auto [i, mono] = fb.elems[k];
        terms[i].push_back({mono, coords[k]});
    }
    std::vector<GPoly> out(ngens);
    for (size_t i = 0; i < ngens; ++i) out[i] = R.from_terms(std::move(terms[i]));
    return out;
}

} // namespace

GradedResolution resolve(const ModulePresentation& m, size_t length, int64_t degree_cap) {
    const RingPtr& ring = m.ring;
    const RingCtx& R = ring->ctx();
    const Field& F = *ring->field();

    GradedResolution res;
    res.ring = ring;
    res.degree_cap = degree_cap;
    res.step_degrees.push_back(m.gen_degrees);

    // current step data: generators of F_cur and the map F_cur -> F_prev;
    // for the first round the "map" is the presentation itself, minimalized
    std::vector<int64_t> curDegs = m.gen_degrees;

    // candidate kernel generators for round 0: presentation columns
    struct PendingMap {
        std::vector<int64_t> srcDegs;
        std::vector<std::vector<GPoly>> mat; // rows = target gens
    };

    const int gap = 2 * max_gen_degree(R) + 2;

    for (size_t step = 0; step < length; ++step) {
        const std::vector<int64_t>& tgtDegs = res.step_degrees[step];
        std::vector<int64_t> newDegs;
        std::vector<std::vector<GPoly>> newMat(tgtDegs.size());

        // chosen generators of the kernel, degree by degree
        std::vector<std::vector<GPoly>> chosen; // each = vector over tgt gens
        std::vector<int64_t> chosenDegs;

        int64_t minDeg = tgtDegs.empty() ? 0 : *std::min_element(tgtDegs.begin(), tgtDegs.end());
        int64_t lastFound = minDeg - 1;
        for (int64_t n = minDeg; n <= degree_cap; ++n) {
            if (lastFound >= minDeg && n - lastFound > gap) break;
            FreeBasis tgtB = free_basis(ring, tgtDegs, n);
            if (tgtB.elems.empty()) continue;

            // kernel piece of the differential at this degree
            Matrix ker(ring->field(), tgtB.elems.size(), 0);
            if (step == 0) {
                // kernel of F_0 -> M is the image of the presentation columns
                std::vector<std::vector<FE>> cols;
                for (size_t j = 0; j < m.nrels(); ++j)
                    for (const auto& mono : ring->basis_of_degree(n - m.rel_degrees[j])) {
                        std::vector<GPoly> vec(m.ngens());
                        for (size_t i = 0; i < m.ngens(); ++i)
                            vec[i] = R.term_mul({mono, F.one()}, m.pres[i][j]);
                        cols.push_back(detail::coords_of(ring, tgtB, vec));
                    }
                Matrix all(ring->field(), tgtB.elems.size(), cols.size());
                for (size_t c = 0; c < cols.size(); ++c)
                    for (size_t r = 0; r < cols[c].size(); ++r) all.at(r, c) = cols[c][r];
                auto piv = column_basis(all);
                Matrix sel(ring->field(), tgtB.elems.size(), piv.size());
                for (size_t c = 0; c < piv.size(); ++c)
                    for (size_t r = 0; r < tgtB.elems.size(); ++r)
                        sel.at(r, c) = all.at(r, piv[c]);
                ker = std::move(sel);
            } else {
                const auto& prevDegs = res.step_degrees[step - 1];
                FreeBasis prevB = free_basis(ring, prevDegs, n);
                Matrix phi = step_matrix(ring, prevDegs, tgtDegs, res.maps[step - 1], prevB, tgtB);
                ker = rank_kernel(phi).kernel;
            }
            if (ker.cols() == 0) continue;

            // span of the already-chosen generators inside this degree
            std::vector<std::vector<FE>> old;
            for (size_t s = 0; s < chosen.size(); ++s) {
                for (const auto& mono : ring->basis_of_degree(n - chosenDegs[s])) {
                    if (R.wdeg(mono) == 0) continue; // proper multiples only
                    std::vector<GPoly> vec(tgtDegs.size());
                    for (size_t i = 0; i < tgtDegs.size(); ++i)
                        vec[i] = R.term_mul({mono, F.one()}, chosen[s][i]);
                    old.push_back(detail::coords_of(ring, tgtB, vec));
                }
            }
            Matrix span(ring->field(), tgtB.elems.size(), old.size());
            for (size_t c = 0; c < old.size(); ++c)
                for (size_t r = 0; r < old[c].size(); ++r) span.at(r, c) = old[c][r];

            size_t baseRank = rank_of(span);
            for (size_t c = 0; c < ker.cols(); ++c) {
                Matrix cand(ring->field(), tgtB.elems.size(), 1);
                for (size_t r = 0; r < tgtB.elems.size(); ++r) cand.at(r, 0) = ker.at(r, c);
                Matrix trial = span.hcat(cand);
                size_t newRank = rank_of(trial);
                if (newRank == baseRank) continue;
                span = std::move(trial);
                baseRank = newRank;
                std::vector<FE> coords(tgtB.elems.size());
                for (size_t r = 0; r < tgtB.elems.size(); ++r) coords[r] = cand.at(r, 0);
                chosen.push_back(vector_of(ring, tgtB, tgtDegs.size(), coords));
                chosenDegs.push_back(n);
                lastFound = n;
            }
        }

        for (size_t i = 0; i < tgtDegs.size(); ++i) {
            newMat[i].resize(chosen.size());
            for (size_t jcol = 0; jcol < chosen.size(); ++jcol) newMat[i][jcol] = chosen[jcol][i];
        }
        res.step_degrees.push_back(chosenDegs);
        res.maps.push_back(std::move(newMat));
        if (chosenDegs.empty()) {
            // kernel exhausted: pad remaining steps with zero modules
            while (res.step_degrees.size() <= length) {
                res.step_degrees.push_back({});
                res.maps.push_back(std::vector<std::vector<GPoly>>(
                    res.step_degrees[res.step_degrees.size() - 2].size()));
            }
            break;
        }
    }
    return res;
}

// ----------------------------------------------------------------- Ext

namespace {

struct HomPiece {
    // coordinates: one block per generator of F_i, block g = N^{n + a_g}
    std::vector<int64_t> offsets;
    size_t total = 0;
};

HomPiece hom_piece(const std::vector<int64_t>& gdegs, const DegreewiseModule& N, int64_t n) {
    HomPiece h;
    for (int64_t a : gdegs) {
        h.offsets.push_back(int64_t(h.total));
        h.total += size_t(N.dim_at(n + a));
    }
    return h;
}

// differential Hom(F_i, N)^n -> Hom(F_{i+1}, N)^n from the map F_{i+1} -> F_i
Matrix hom_differential(const DegreewiseModule& N, const std::vector<int64_t>& curDegs,
                        const std::vector<int64_t>& nextDegs,
                        const std::vector<std::vector<GPoly>>& mat, int64_t n) {
    HomPiece src = hom_piece(curDegs, N, n);
    HomPiece dst = hom_piece(nextDegs, N, n);
    Matrix out(N.ring->field(), dst.total, src.total);
    for (size_t l = 0; l < nextDegs.size(); ++l) {
        for (size_t j = 0; j < curDegs.size(); ++j) {
            const GPoly& entry = mat[j][l];
            if (entry.is_zero()) continue;
            if (N.dim_at(n + curDegs[j]) == 0 || N.dim_at(n + nextDegs[l]) == 0) continue;
            Matrix blk = poly_action(N, entry, n + curDegs[j]);
            for (size_t r = 0; r < blk.rows(); ++r)
                for (size_t c = 0; c < blk.cols(); ++c)
                    out.at(size_t(dst.offsets[l]) + r, size_t(src.offsets[j]) + c) = blk.at(r, c);
        }
    }
    return out;
}

struct SubquotientPiece {
    Matrix reps;       // ambient x dim, chosen representatives
    Matrix boundaries; // ambient x b, spanning the subspace divided out
};

// express ambient vectors in representative coordinates (modulo boundaries)
std::optional<Matrix> subq_coords(const SubquotientPiece& p, const Matrix& vectors) {
    Matrix sys = p.boundaries.hcat(p.reps);
    auto sol = solve_matrix(sys, vectors);
    if (!sol) return std::nullopt;
    Matrix out(vectors.field(), p.reps.cols(), vectors.cols());
    for (size_t r = 0; r < p.reps.cols(); ++r)
        for (size_t c = 0; c < vectors.cols(); ++c)
            out.at(r, c) = sol->at(p.boundaries.cols() + r, c);
    return out;
}

} // namespace

DegreewiseModule ext_modules(const ModulePresentation& m, const ModulePresentation& nmod,
                             size_t i, int64_t lo, int64_t hi) {
    const RingPtr& ring = m.ring;
    const RingCtx& R = ring->ctx();
    if (nmod.ring != ring) fail(ErrorKind::FieldMismatch, "Ext over different rings");

    int64_t degcap = hi + 4;
    for (int64_t d : m.rel_degrees) degcap += d;
    degcap += (int64_t(i) + 2) * max_gen_degree(R);
    GradedResolution res = resolve(m, i + 1, degcap);

    const auto& gi = res.step_degrees[i];
    const auto& giPrev = i > 0 ? res.step_degrees[i - 1] : std::vector<int64_t>{};
    const auto& giNext = res.step_degrees[i + 1];

    int64_t minA = 0, maxA = 0;
    auto acc = [&](const std::vector<int64_t>& v) {
        for (int64_t a : v) {
            minA = std::min(minA, a);
            maxA = std::max(maxA, a);
        }
    };
    acc(gi);
    acc(giPrev);
    acc(giNext);
    int64_t w = max_gen_degree(R);
    DegreewiseModule N = degreewise_expand(nmod, lo + minA, hi + maxA + w);

    std::vector<SubquotientPiece> pieces;
    DegreewiseModule out;
    out.ring = ring;
    out.lo = lo;
    out.hi = hi;

    for (int64_t n = lo; n <= hi; ++n) {
        HomPiece hp = hom_piece(gi, N, n);
        Matrix dOut = hom_differential(N, gi, giNext, res.maps[i], n);
        Matrix cocycles = rank_kernel(dOut).kernel;
        Matrix boundaries(ring->field(), hp.total, 0);
        if (i > 0) {
            Matrix dIn = hom_differential(N, giPrev, gi, res.maps[i - 1], n);
            auto piv = column_basis(dIn);
            Matrix b(ring->field(), hp.total, piv.size());
            for (size_t c = 0; c < piv.size(); ++c)
                for (size_t r = 0; r < hp.total; ++r) b.at(r, c) = dIn.at(r, piv[c]);
            boundaries = std::move(b);
        }
        // representatives: cocycle columns extending the boundary span
        Matrix span = boundaries;
        size_t rank = rank_of(span);
        Matrix reps(ring->field(), hp.total, 0);
        for (size_t c = 0; c < cocycles.cols(); ++c) {
            Matrix cand(ring->field(), hp.total, 1);
            for (size_t r = 0; r < hp.total; ++r) cand.at(r, 0) = cocycles.at(r, c);
            Matrix trial = span.hcat(cand);
            size_t nr = rank_of(trial);
            if (nr == rank) continue;
            rank = nr;
            span = std::move(trial);
            reps = reps.hcat(cand);
        }
        pieces.push_back({reps, boundaries});
        out.dims.push_back(int64_t(reps.cols()));
    }

    // induced generator actions on the subquotients
    out.act.resize(R.ngens());
    for (size_t g = 0; g < R.ngens(); ++g) {
        int64_t wg = R.degrees()[g];
        for (int64_t n = lo; n <= hi; ++n) {
            size_t src = size_t(n - lo);
            if (n + wg > hi) {
                out.act[g].push_back(Matrix(ring->field(), 0, pieces[src].reps.cols()));
                continue;
            }
            size_t dst = size_t(n + wg - lo);
            // block-diagonal post-composition with the action on N
            HomPiece hsrc = hom_piece(gi, N, n);
            HomPiece hdst = hom_piece(gi, N, n + wg);
            Matrix big(ring->field(), hdst.total, hsrc.total);
            for (size_t j = 0; j < gi.size(); ++j) {
                if (N.dim_at(n + gi[j]) == 0 || N.dim_at(n + wg + gi[j]) == 0) continue;
                Matrix blk = N.action(g, n + gi[j]);
                for (size_t r = 0; r < blk.rows(); ++r)
                    for (size_t c = 0; c < blk.cols(); ++c)
                        big.at(size_t(hdst.offsets[j]) + r, size_t(hsrc.offsets[j]) + c) =
                            blk.at(r, c);
            }
            Matrix moved = big.mul(pieces[src].reps);
            auto coords = subq_coords(pieces[dst], moved);
            if (!coords)
                fail(ErrorKind::DimensionMismatch, "internal: Ext action left the subquotient");
            out.act[g].push_back(std::move(*coords));
        }
    }
    return out;
}

// ------------------------------------------------------ local cohomology

LocalCohomology local_cohomology_irrelevant(const ModulePresentation& m, int64_t lo, int64_t hi,
                                            const LocalCohomologyConfig& cfg,
                                            const std::vector<GPoly>* noether_system) {
    const RingPtr& ring = m.ring;
    const RingCtx& R = ring->ctx();
    int d = krull_dimension(ring);

    LocalCohomology out;
    if (noether_system) {
        if (int(noether_system->size()) != d)
            fail(ErrorKind::PresentationError, "Noether system size must match the dimension");
        for (const auto& u : *noether_system)
            if (u.is_zero())
                fail(ErrorKind::PresentationError, "zero element in the supplied system");
        if (!is_finite_dimensional(hilbert_series(ring, *noether_system, 1)))
            fail(ErrorKind::PresentationError, "supplied system has an infinite fiber");
        out.noether_system = *noether_system;
    } else if (d > 0) {
        out.noether_system = noether_normalize(ring, zero_ideal(ring));
    }

    std::vector<std::vector<DegreewiseModule>> history;
    for (int s = 1; s <= cfg.s_cap; ++s) {
        std::vector<GPoly> powers;
        for (const auto& u : out.noether_system) {
            GPoly p = R.one();
            for (int rep = 0; rep < s; ++rep) p = R.mul(p, u);
            powers.push_back(ring->reduce(p));
        }
        ModulePresentation quot = ModulePresentation::cyclic(ring, powers);
        std::vector<DegreewiseModule> hs;
        for (int i = 0; i <= d; ++i) hs.push_back(ext_modules(quot, m, size_t(i), lo, hi));
        history.push_back(std::move(hs));

        if (int(history.size()) >= cfg.stable_runs) {
            bool stable = true;
            for (int back = 1; back < cfg.stable_runs && stable; ++back) {
                const auto& a = history[history.size() - 1];
                const auto& b = history[history.size() - 1 - size_t(back)];
                for (int i = 0; i <= d && stable; ++i)
                    if (!same_table(a[size_t(i)], b[size_t(i)])) stable = false;
            }
            if (stable) {
                out.h = history.back();
                out.stabilized_at = s - cfg.stable_runs + 1;
                return out;
            }
        }
        if (d == 0) {
            // no Noether system: every s computes the same Ext against R
            out.h = history.back();
            out.stabilized_at = 1;
            return out;
        }
    }
    std::ostringstream os;
    os << "local cohomology did not stabilize below s = " << cfg.s_cap << "; last tables:";
    for (size_t i = 0; i < history.back().size(); ++i) {
        os << " H^" << i << " dims";
        for (int64_t n = lo; n <= hi; ++n) os << " " << history.back()[i].dim_at(n);
        os << ";";
    }
    fail(ErrorKind::NonStabilized, os.str());
}

std::map<int64_t, int64_t> torsion_submodule_table(const ModulePresentation& m, int64_t lo,
                                                   int64_t hi) {
    const RingPtr& ring = m.ring;
    int d = krull_dimension(ring);
    if (d == 0) {
        auto M = degreewise_expand(m, lo, hi);
        return M.table();
    }
    auto us = noether_normalize(ring, zero_ideal(ring));
    const RingCtx& R = ring->ctx();
    int64_t wmax = 1;
    for (const auto& u : us) {
        int64_t du = 0;
        R.homogeneous(u, &du);
        wmax = std::max(wmax, du);
    }
    const int scap = 12;
    auto M = degreewise_expand(m, lo, hi + wmax * scap);
    std::map<int64_t, int64_t> out;
    for (int64_t n = lo; n <= hi; ++n) {
        // elements killed by u_i^scap for every i; annihilator chains in a
        // single degree can pause and then grow, so the cap power is applied
        // directly instead of an early-stability break
        Matrix stacked(ring->field(), 0, size_t(M.dim_at(n)));
        for (const auto& u : us) {
            GPoly p = R.one();
            for (int rep = 0; rep < scap; ++rep) p = R.mul(p, u);
            p = ring->reduce(p);
            stacked = stacked.rows() == 0 ? poly_action(M, p, n)
                                          : stacked.vcat(poly_action(M, p, n));
        }
        size_t kdim = rank_kernel(stacked).kernel.cols();
        if (kdim > 0) out[n] = int64_t(kdim);
    }
    return out;
}

GorensteinReport gorenstein_check_irrelevant(const RingPtr& ring, int64_t lo, int64_t hi,
                                             const LocalCohomologyConfig& cfg) {
    GorensteinReport rep;
    rep.ring = ring;
    rep.dimension = krull_dimension(ring);

    ModulePresentation self = ModulePresentation::free_module(ring, {0});
    LocalCohomology lc = local_cohomology_irrelevant(self, lo, hi, cfg);

    bool lowerVanish = true;
    for (int i = 0; i < rep.dimension; ++i)
        if (!lc.h[size_t(i)].table().empty()) lowerVanish = false;

    const DegreewiseModule& hd = lc.h[size_t(rep.dimension)];
    auto hdTable = hd.table();
    rep.hd_table = hdTable;
    if (hdTable.empty()) {
        rep.pass = false;
        rep.detail = "top local cohomology vanishes on the window";
        return rep;
    }
    rep.a_invariant = hdTable.rbegin()->first;

    // H^d should match the graded dual of the ring, twisted by the
    // a-invariant: dim H^d at n equals dim_ring at (a - n)
    auto hs = hilbert_series(ring, {}, std::max<int64_t>(hi + std::abs(rep.a_invariant) + 8, 16));
    bool match = true;
    for (int64_t n = lo; n <= hi; ++n) {
        int64_t want = 0;
        int64_t at = rep.a_invariant - n;
        if (at >= 0) want = hs.dim_at(at);
        if (hd.dim_at(n) != want) match = false;
        if (want != 0) rep.dual_table[n] = want;
    }
    rep.pass = lowerVanish && match;
    if (!lowerVanish) rep.detail = "lower local cohomology does not vanish";
    else if (!match) rep.detail = "top local cohomology is not a twisted dual of the ring";
    else rep.detail = "matched with twist " + std::to_string(rep.a_invariant);
    return rep;
}

} // namespace gradua
