#include <functional>
#include <random>
#include <sstream>

#include "gradua/stmod_internal.hpp"

namespace gradua {

namespace {

bool algebra_is_local(const AlgebraPtr& a) {
    FDModule reg = regular_module(a);
    return radical_subspace(reg).cols() == a->dim() - 1;
}

FDModule simple_top_module(const AlgebraPtr& a) {
    // unique simple of a local algebra: A / rad A
    FDModule reg = regular_module(a);
    return quotient_module(reg, radical_subspace(reg));
}

FDModule free_module_over(const AlgebraPtr& a, size_t rank) {
    FDModule f = regular_module(a);
    FDModule out = rank == 0 ? zero_module(a) : f;
    for (size_t i = 1; i < rank; ++i) out = direct_sum(out, f);
    return out;
}

} // namespace

ProjectiveCover projective_cover(const FDModule& m) {
    const AlgebraPtr& A = m.algebra;
    const Field& F = *A->field();
    if (m.dim() == 0) return {zero_module(A), Matrix(A->field(), 0, 0)};

    Matrix rad = radical_subspace(m);
    ModQuotient top = mod_quotient(rad);
    size_t t = top.freeCoords.size();

    if (algebra_is_local(A)) {
        // cover is free; generator images are lifts of a top basis
        FDModule P = free_module_over(A, t);
        Matrix epi(A->field(), m.dim(), P.dim());
        for (size_t c = 0; c < t; ++c) {
            std::vector<FE> v(m.dim(), F.zero());
            v[top.freeCoords[c]] = F.one();
            // column block c: e_j . v for each algebra basis element j
            for (size_t j = 0; j < A->dim(); ++j) {
                auto img = m.action[j].apply(v);
                for (size_t r = 0; r < m.dim(); ++r)
                    epi.at(r, c * A->dim() + j) = img[r];
            }
        }
        if (rank_of(epi) != m.dim())
            fail(ErrorKind::MalformedElement, "internal: cover epi not surjective");
        return {std::move(P), std::move(epi)};
    }

    // general self-injective case: match indecomposable projectives to the
    // simple summands of the top, then lift through a linear solve
    FDModule topMod = quotient_module(m, rad);
    std::vector<FDModule> simples = decompose(topMod);
    FDModule P = zero_module(A);
    const auto& projs = [&]() -> const std::vector<FDModule>& {
        auto& box = A->cache();
        std::lock_guard<std::mutex> lock(box.mu);
        if (!box.indecomposable_projectives)
            box.indecomposable_projectives =
                std::make_shared<const std::vector<FDModule>>(decompose(regular_module(A)));
        return *box.indecomposable_projectives;
    }();
    std::vector<const FDModule*> picked;
    for (const auto& s : simples) {
        const FDModule* match = nullptr;
        for (const auto& p : projs) {
            FDModule ptop = quotient_module(p, radical_subspace(p));
            if (ptop.dim() != s.dim()) continue;
            if (!hom_space(ptop, s).empty() && stably_isomorphic(ptop, s)) {
                match = &p;
                break;
            }
        }
        if (!match)
            fail(ErrorKind::MalformedElement, "no projective covers a top summand");
        picked.push_back(match);
        P = P.dim() == 0 ? *match : direct_sum(P, *match);
    }

    // solve for an epi P -> m hitting the top: build Hom(P, m) and require
    // the composite to the top of m to be the assembled map onto the simples
    auto homs = hom_space(P, m);
    if (homs.empty()) fail(ErrorKind::MalformedElement, "no maps from the candidate cover");
    // greedy: find a combination with full image mod radical
    std::mt19937_64 rng(17);
    for (int attempt = 0; attempt < 512; ++attempt) {
        Matrix cand(A->field(), m.dim(), P.dim());
        for (const auto& h : homs) {
            uint32_t c = uint32_t(rng() % F.p());
            if (attempt < int(homs.size()))
                c = (size_t(attempt) < homs.size() && &h == &homs[size_t(attempt)]) ? 1 : 0;
            if (c != 0) cand = cand.add(h.scale(F.from_int(c)));
        }
        Matrix composite = top.project_matrix(cand, F);
        if (rank_of(composite) == t && rank_of(cand) == m.dim())
            return {P, cand};
    }
    fail(ErrorKind::MalformedElement, "cover lifting search failed");
}

std::vector<FDModule> decompose(const FDModule& m) {
    if (m.dim() == 0) return {};
    const Field& F = *m.algebra->field();
    auto endos = hom_space(m, m);
    if (endos.size() <= 1) return {m};

    Matrix id = Matrix::identity(m.algebra->field(), m.dim());

    auto try_split = [&](const Matrix& phi) -> std::optional<std::pair<Matrix, Matrix>> {
        // Fitting: a high power splits m into kernel and image
        Matrix pw = phi;
        size_t steps = 1;
        while (steps < 2 * m.dim()) {
            pw = pw.mul(pw);
            steps *= 2;
        }
        size_t r = rank_of(pw);
        if (r == 0 || r == m.dim()) return std::nullopt;
        auto ker = rank_kernel(pw).kernel;
        auto piv = column_basis(pw);
        Matrix im(m.algebra->field(), m.dim(), piv.size());
        for (size_t c = 0; c < piv.size(); ++c)
            for (size_t row = 0; row < m.dim(); ++row) im.at(row, c) = pw.at(row, piv[c]);
        if (rank_of(ker.hcat(im)) != m.dim()) return std::nullopt;
        return std::make_pair(ker, im);
    };

    std::vector<Matrix> candidates;
    for (const auto& h : endos) candidates.push_back(h);
    for (size_t i = 0; i < endos.size(); ++i)
        for (size_t j = i + 1; j < endos.size() && candidates.size() < 400; ++j) {
            candidates.push_back(endos[i].add(endos[j]));
            candidates.push_back(endos[i].mul(endos[j]));
        }
    std::mt19937_64 rng(23);
    for (int k = 0; k < 80; ++k) {
        Matrix c(m.algebra->field(), m.dim(), m.dim());
        for (const auto& h : endos)
            if (rng() % F.p() != 0) c = c.add(h.scale(F.from_int(int64_t(rng() % F.p()))));
        candidates.push_back(std::move(c));
    }

    for (const auto& base : candidates) {
        for (uint32_t lam = 0; lam < F.p(); ++lam) {
            Matrix phi = lam == 0 ? base : base.sub(id.scale(F.from_int(lam)));
            auto split = try_split(phi);
            if (!split) continue;
            FDModule a = submodule(m, split->first);
            FDModule b = submodule(m, split->second);
            std::vector<FDModule> out = decompose(a);
            for (auto& piece : decompose(b)) out.push_back(std::move(piece));
            return out;
        }
    }
    return {m};
}

namespace {

// module isomorphism via an invertible intertwiner
bool modules_isomorphic(const FDModule& m, const FDModule& n, uint64_t seed) {
    if (m.dim() != n.dim()) return false;
    if (m.dim() == 0) return true;
    const Field& F = *m.algebra->field();
    auto homs = hom_space(m, n);
    if (homs.empty()) return false;
    for (const auto& h : homs)
        if (rank_of(h) == m.dim()) return true;
    for (size_t i = 0; i < homs.size(); ++i)
        for (size_t j = i + 1; j < homs.size(); ++j)
            if (rank_of(homs[i].add(homs[j])) == m.dim()) return true;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 240; ++k) {
        Matrix c(m.algebra->field(), m.dim(), n.dim());
        for (const auto& h : homs)
            if (rng() % 2) c = c.add(h.scale(F.from_int(int64_t(1 + rng() % (F.p() - 1 + 1)))));
        if (c.rows() == c.cols() && rank_of(c) == m.dim()) return true;
    }
    // distinguish by cheap invariants before giving up
    auto fingerprint = [](const FDModule& x) {
        std::vector<size_t> f;
        f.push_back(x.dim());
        f.push_back(radical_subspace(x).cols());
        f.push_back(socle_subspace(x).cols());
        f.push_back(hom_space(x, x).size());
        return f;
    };
    if (fingerprint(m) != fingerprint(n) || hom_space(m, n).size() != hom_space(n, m).size())
        return false;
    fail(ErrorKind::Inconclusive, "isomorphism test inconclusive: invariants match but no "
                                  "invertible intertwiner was found");
}

} // namespace

bool is_projective_module(const FDModule& m) {
    if (m.dim() == 0) return true;
    auto& box = m.algebra->cache();
    std::shared_ptr<const std::vector<FDModule>> projs;
    {
        std::lock_guard<std::mutex> lock(box.mu);
        if (!box.indecomposable_projectives)
            box.indecomposable_projectives = std::make_shared<const std::vector<FDModule>>(
                decompose(regular_module(m.algebra)));
        projs = box.indecomposable_projectives;
    }
    for (const auto& piece : decompose(m)) {
        bool matched = false;
        for (const auto& p : *projs)
            if (piece.dim() == p.dim() && modules_isomorphic(piece, p, 5)) {
                matched = true;
                break;
            }
        if (!matched) return false;
    }
    return true;
}

FDModule strip_projectives(const FDModule& m) {
    if (m.dim() == 0) return m;
    auto& box = m.algebra->cache();
    std::shared_ptr<const std::vector<FDModule>> projs;
    {
        std::lock_guard<std::mutex> lock(box.mu);
        if (!box.indecomposable_projectives)
            box.indecomposable_projectives = std::make_shared<const std::vector<FDModule>>(
                decompose(regular_module(m.algebra)));
        projs = box.indecomposable_projectives;
    }
    FDModule out = zero_module(m.algebra);
    for (const auto& piece : decompose(m)) {
        bool isProj = false;
        for (const auto& p : *projs)
            if (piece.dim() == p.dim() && modules_isomorphic(piece, p, 7)) {
                isProj = true;
                break;
            }
        if (!isProj) out = out.dim() == 0 ? piece : direct_sum(out, piece);
    }
    return out;
}

FDModule syzygy(const FDModule& m, int n) {
    FDModule cur = strip_projectives(m);
    if (n == 0) return cur;
    if (n > 0) {
        for (int i = 0; i < n; ++i) {
            if (cur.dim() == 0) break;
            ProjectiveCover pc = projective_cover(cur);
            Matrix ker = rank_kernel(pc.epi).kernel;
            cur = submodule(pc.cover, ker);
        }
        return cur;
    }
    // cosyzygy through the opposite-algebra duality
    AlgebraPtr op = m.algebra->opposite();
    for (int i = 0; i < -n; ++i) {
        if (cur.dim() == 0) break;
        FDModule d = dual_to_op(cur);
        d.algebra = op;
        ProjectiveCover pc = projective_cover(d);
        Matrix ker = rank_kernel(pc.epi).kernel;
        FDModule omega = submodule(pc.cover, ker);
        cur = dual_from_op(omega, m.algebra);
    }
    return cur;
}

StableHom stable_hom(const FDModule& m, const FDModule& n) {
    StableHom out;
    auto homs = hom_space(m, n);
    out.hom_dim = homs.size();
    if (homs.empty()) return out;
    if (n.dim() == 0) return out;

    ProjectiveCover pc = projective_cover(n);
    std::vector<Matrix> phomGens;
    if (pc.cover.dim() > 0) {
        auto lift = hom_space(m, pc.cover);
        for (const auto& psi : lift) phomGens.push_back(pc.epi.mul(psi));
    }

    // vectorize and compute the span of PHom inside Hom
    const Field& F = *m.algebra->field();
    size_t len = m.dim() * n.dim();
    auto vec = [&](const Matrix& x) {
        std::vector<FE> v(len, F.zero());
        for (size_t r = 0; r < n.dim(); ++r)
            for (size_t c = 0; c < m.dim(); ++c) v[c * n.dim() + r] = x.at(r, c);
        return v;
    };
    Matrix span(m.algebra->field(), len, phomGens.size());
    for (size_t k = 0; k < phomGens.size(); ++k) {
        auto v = vec(phomGens[k]);
        for (size_t r = 0; r < len; ++r) span.at(r, k) = v[r];
    }
    out.phom_dim = rank_of(span);

    auto piv = column_basis(span);
    Matrix acc(m.algebra->field(), len, piv.size());
    for (size_t c = 0; c < piv.size(); ++c)
        for (size_t r = 0; r < len; ++r) acc.at(r, c) = span.at(r, piv[c]);
    size_t rank = acc.cols();
    for (const auto& h : homs) {
        auto v = vec(h);
        Matrix cand(m.algebra->field(), len, 1);
        for (size_t r = 0; r < len; ++r) cand.at(r, 0) = v[r];
        Matrix trial = acc.hcat(cand);
        size_t nr = rank_of(trial);
        if (nr > rank) {
            rank = nr;
            acc = std::move(trial);
            out.class_reps.push_back(h);
        }
    }
    return out;
}

bool stably_isomorphic(const FDModule& m, const FDModule& n, uint64_t seed) {
    FDModule a = strip_projectives(m);
    FDModule b = strip_projectives(n);
    if (a.dim() != b.dim()) return false;
    if (a.dim() == 0) return true;
    return modules_isomorphic(a, b, seed);
}

// ------------------------------------------------- resolution / cohomology

const ResolutionDatum& minimal_resolution(const AlgebraPtr& a, size_t length) {
    if (!algebra_is_local(a))
        fail(ErrorKind::CapabilityError,
             "minimal-resolution machinery assumes a local algebra");
    auto& box = a->cache();
    std::lock_guard<std::mutex> lock(box.mu);
    if (box.resolution && box.resolution->betti.size() > length) return *box.resolution;

    auto res = std::make_shared<ResolutionDatum>();
    res->syzygies.push_back(simple_top_module(a));
    for (size_t i = 0; i <= length; ++i) {
        const FDModule& syz = res->syzygies.back();
        ProjectiveCover pc = projective_cover(syz);
        res->betti.push_back(pc.cover.dim() / a->dim());
        if (i > 0) {
            // differential P_i -> P_{i-1}: embed the syzygy then apply its
            // inclusion into the previous cover
            const Matrix& incl = res->inclusions[i - 1];
            res->differential.push_back(incl.mul(pc.epi));
        } else {
            res->differential.push_back(pc.epi);
        }
        Matrix ker = rank_kernel(pc.epi).kernel;
        res->inclusions.push_back(ker);
        res->syzygies.push_back(submodule(pc.cover, ker));
        res->covers.push_back(std::move(pc));
    }
    box.resolution = res;
    return *box.resolution;
}

size_t cohomology_dim(const AlgebraPtr& a, size_t i) {
    return minimal_resolution(a, i + 1).betti[i];
}

CohomologyClass coh_class(const AlgebraPtr& a, size_t degree, std::vector<FE> coeffs) {
    if (coeffs.size() != cohomology_dim(a, degree))
        fail(ErrorKind::DimensionMismatch, "class coefficient count != dim H^degree");
    return {degree, std::move(coeffs)};
}

namespace {

// augmentation A -> A/rad = k as a row vector on algebra coordinates
std::vector<FE> augmentation_row(const AlgebraPtr& a) {
    FDModule reg = regular_module(a);
    ModQuotient q = mod_quotient(radical_subspace(reg));
    // one free coordinate: the projection is that coordinate after killing
    // the pivot part
    const Field& F = *a->field();
    std::vector<FE> row(a->dim(), F.zero());
    for (size_t j = 0; j < a->dim(); ++j) {
        std::vector<FE> v(a->dim(), F.zero());
        v[j] = F.one();
        auto p = q.project(std::move(v), F);
        row[j] = p.empty() ? F.zero() : p[0];
    }
    return row;
}

// the class as a vector-space functional on P_degree (kills the radical)
std::vector<FE> class_functional(const AlgebraPtr& a, const CohomologyClass& x) {
    const Field& F = *a->field();
    auto aug = augmentation_row(a);
    std::vector<FE> row(x.functional.size() * a->dim(), F.zero());
    for (size_t c = 0; c < x.functional.size(); ++c)
        for (size_t j = 0; j < a->dim(); ++j)
            row[c * a->dim() + j] = F.mul(x.functional[c], aug[j]);
    return row;
}

std::string class_key(const AlgebraPtr& a, const CohomologyClass& x) {
    std::ostringstream os;
    os << x.degree;
    for (const auto& c : x.functional) os << "|" << a->field()->to_string(c);
    return os.str();
}

// chain lift of a degree-d class: maps P_{d+s} -> P_s for s = 0..upTo
std::shared_ptr<const std::vector<Matrix>> chain_lift(const AlgebraPtr& a,
                                                      const CohomologyClass& x, size_t upTo) {
    auto key = std::make_pair(x.degree, class_key(a, x));
    {
        auto& box = a->cache();
        std::lock_guard<std::mutex> lock(box.mu);
        auto it = box.lifts.find(key);
        if (it != box.lifts.end() && it->second->size() > upTo) return it->second;
    }
    const ResolutionDatum& res = minimal_resolution(a, x.degree + upTo + 1);
    const Field& F = *a->field();

    auto lifts = std::make_shared<std::vector<Matrix>>();
    // s = 0: solve eps_0 . L0 = functional, L0 in Hom(P_d, P_0)
    {
        const FDModule& Pd = res.covers[x.degree].cover;
        const FDModule& P0 = res.covers[0].cover;
        auto funct = class_functional(a, x);
        auto homs = hom_space(Pd, P0);
        // affine solve: sum c_k (eps0 . h_k) = funct as row maps P_d -> k
        const Matrix& eps0 = res.covers[0].epi; // 1 x dim P0
        Matrix sys(a->field(), Pd.dim(), homs.size());
        for (size_t k = 0; k < homs.size(); ++k) {
            Matrix comp = eps0.mul(homs[k]); // 1 x dim Pd
            for (size_t c = 0; c < Pd.dim(); ++c) sys.at(c, k) = comp.at(0, c);
        }
        auto sol = solve_linear(sys, funct);
        if (!sol) fail(ErrorKind::DimensionMismatch, "internal: class lift has no solution");
        Matrix L0(a->field(), P0.dim(), Pd.dim());
        for (size_t k = 0; k < homs.size(); ++k)
            if (!F.is_zero((*sol)[k])) L0 = L0.add(homs[k].scale((*sol)[k]));
        lifts->push_back(std::move(L0));
    }
    for (size_t s = 1; s <= upTo; ++s) {
        const FDModule& src = res.covers[x.degree + s].cover;
        const FDModule& dst = res.covers[s].cover;
        const Matrix& dSrc = res.differential[x.degree + s]; // P_{d+s} -> P_{d+s-1}
        const Matrix& dDst = res.differential[s];            // P_s -> P_{s-1}
        Matrix target = (*lifts)[s - 1].mul(dSrc);           // P_{d+s} -> P_{s-1}
        auto homs = hom_space(src, dst);
        // solve sum c_k (dDst . h_k) = target entrywise
        size_t len = target.rows() * target.cols();
        Matrix sys(a->field(), len, homs.size());
        std::vector<FE> rhs(len, F.zero());
        for (size_t r = 0; r < target.rows(); ++r)
            for (size_t c = 0; c < target.cols(); ++c) rhs[r * target.cols() + c] = target.at(r, c);
        for (size_t k = 0; k < homs.size(); ++k) {
            Matrix comp = dDst.mul(homs[k]);
            for (size_t r = 0; r < comp.rows(); ++r)
                for (size_t c = 0; c < comp.cols(); ++c)
                    sys.at(r * comp.cols() + c, k) = comp.at(r, c);
        }
        auto sol = solve_linear(sys, rhs);
        if (!sol) fail(ErrorKind::DimensionMismatch, "internal: chain lift has no solution");
        Matrix L(a->field(), dst.dim(), src.dim());
        for (size_t k = 0; k < homs.size(); ++k)
            if (!F.is_zero((*sol)[k])) L = L.add(homs[k].scale((*sol)[k]));
        lifts->push_back(std::move(L));
    }
    auto& box = a->cache();
    std::lock_guard<std::mutex> lock(box.mu);
    auto it = box.lifts.find(key);
    if (it == box.lifts.end() || it->second->size() < lifts->size()) box.lifts[key] = lifts;
    return box.lifts[key];
}

} // namespace

CohomologyClass coh_product(const AlgebraPtr& a, const CohomologyClass& x,
                            const CohomologyClass& y) {
    // (y x): functional of y composed with the degree-|y| lift of x
    auto lifts = chain_lift(a, x, y.degree);
    const Matrix& Lx = (*lifts)[y.degree]; // P_{|x|+|y|} -> P_{|y|}
    auto fy = class_functional(a, y);
    const Field& F = *a->field();
    size_t total = x.degree + y.degree;
    const ResolutionDatum& res = minimal_resolution(a, total + 1);
    size_t b = res.betti[total];
    // composite functional on P_total, then read off generator coefficients
    std::vector<FE> comp(Lx.cols(), F.zero());
    for (size_t c = 0; c < Lx.cols(); ++c) {
        FE acc = F.zero();
        for (size_t r = 0; r < Lx.rows(); ++r)
            if (!F.is_zero(fy[r])) acc = F.add(acc, F.mul(fy[r], Lx.at(r, c)));
        comp[c] = acc;
    }
    // coefficients: evaluate at the generator coordinates (copy c, unit)
    std::vector<FE> coeffs(b, F.zero());
    const auto& unit = a->unit();
    for (size_t copy = 0; copy < b; ++copy) {
        FE acc = F.zero();
        for (size_t j = 0; j < a->dim(); ++j)
            if (!F.is_zero(unit[j])) acc = F.add(acc, F.mul(unit[j], comp[copy * a->dim() + j]));
        coeffs[copy] = acc;
    }
    return {total, std::move(coeffs)};
}

CohomologyClass coh_eval(const AlgebraPtr& a, const RingPtr& presented, const GPoly& f) {
    const RingCtx& R = presented->ctx();
    const Field& F = *a->field();
    int64_t deg = 0;
    if (!R.homogeneous(f, &deg))
        fail(ErrorKind::PresentationError, "cohomology evaluation needs a homogeneous polynomial");
    if (f.is_zero()) return {0, {}};

    // assign ring generators to resolution-basis classes in declared order
    std::map<int64_t, size_t> used;
    std::vector<CohomologyClass> genClasses;
    for (size_t g = 0; g < R.ngens(); ++g) {
        int64_t d = R.degrees()[g];
        size_t idx = used[d]++;
        size_t dim = cohomology_dim(a, size_t(d));
        if (idx >= dim)
            fail(ErrorKind::PresentationError,
                 "presentation has more generators in one degree than H^* provides");
        std::vector<FE> coeffs(dim, F.zero());
        coeffs[idx] = F.one();
        genClasses.push_back({size_t(d), std::move(coeffs)});
    }

    size_t total = size_t(deg);
    std::vector<FE> acc(cohomology_dim(a, total), F.zero());
    for (const auto& term : f.t) {
        std::optional<CohomologyClass> cur;
        for (size_t g = 0; g < R.ngens(); ++g)
            for (uint32_t e = 0; e < term.m.e[g]; ++e)
                cur = cur ? coh_product(a, genClasses[g], *cur) : genClasses[g];
        if (!cur) cur = CohomologyClass{0, {F.one()}}; // constant term, degree zero
        for (size_t i = 0; i < acc.size(); ++i)
            acc[i] = F.add(acc[i], F.mul(term.c, i < cur->functional.size() ? cur->functional[i]
                                                                            : F.zero()));
    }
    return {total, std::move(acc)};
}

RingPresentationCheck cohomology_ring_check(const AlgebraPtr& a, const RingPtr& presented,
                                            size_t cap) {
    RingPresentationCheck out;
    const Field& F = *a->field();
    for (size_t i = 0; i <= cap; ++i) out.computed_dims.push_back(cohomology_dim(a, i));
    auto hs = hilbert_series(presented, {}, int64_t(cap));
    for (size_t i = 0; i <= cap; ++i) out.presented_dims.push_back(hs.dim_at(int64_t(i)));
    out.hilbert_matches = true;
    for (size_t i = 0; i <= cap; ++i)
        if (int64_t(out.computed_dims[i]) != out.presented_dims[i]) out.hilbert_matches = false;

    out.relations_vanish = true;
    for (const auto& rel : presented->relations()) {
        int64_t d = 0;
        presented->ctx().homogeneous(rel, &d);
        if (size_t(d) > cap) continue;
        CohomologyClass v = coh_eval(a, presented, rel);
        for (const auto& c : v.functional)
            if (!F.is_zero(c)) out.relations_vanish = false;
    }
    return out;
}

} // namespace gradua
