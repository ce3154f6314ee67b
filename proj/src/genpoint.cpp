#include "gradua/genpoint.hpp"

#include <algorithm>
#include <numeric>

#include "gradua/matrix.hpp"

namespace gradua {

namespace {

int max_gen_degree(const RingCtx& R) {
    int m = 1;
    for (int d : R.degrees()) m = std::max(m, d);
    return m;
}

GPoly lift_to(const RingCtx& target, const GPoly& f) {
    std::vector<GTerm> terms;
    for (const auto& t : f.t) terms.push_back({t.m, t.c});
    return target.from_terms(std::move(terms));
}

// dims of ring/m in high degrees settle into: value c at multiples of e,
// zero elsewhere; (c, e) is the residue-field data
ResidueData residue_from_dims(const std::map<int64_t, int64_t>& dims, int64_t hi) {
    int64_t lo = hi / 2;
    std::vector<int64_t> nonzero;
    for (int64_t n = lo; n <= hi; ++n)
        if (dims.count(n) && dims.at(n) > 0) nonzero.push_back(n);
    if (nonzero.empty())
        fail(ErrorKind::CertificationError, "residue field: quotient vanishes in high degrees");
    int64_t e = 0;
    for (size_t i = 1; i < nonzero.size(); ++i) {
        int64_t gap = nonzero[i] - nonzero[i - 1];
        e = e == 0 ? gap : std::gcd(e, gap);
    }
    if (e == 0) e = 1;
    int64_t c = dims.at(nonzero.back());
    for (int64_t n : nonzero)
        if (dims.at(n) != c)
            fail(ErrorKind::CertificationError, "residue field: dimensions not periodic");
    return {int(c), int(e)};
}

} // namespace

ResidueData residue_field_data(const RingPtr& ring, const HomIdeal& m) {
    auto hsProbe = hilbert_series(ring, m.gens(), 1);
    if (krull_dimension(hsProbe) != 1)
        fail(ErrorKind::DimensionMismatch, "residue data needs a closed point (dim ring/m = 1)");
    int64_t hi = 8 * max_gen_degree(ring->ctx()) + 24;
    auto hs = hilbert_series(ring, m.gens(), hi);
    return residue_from_dims(hs.window_dims, hi);
}

GenericPointCertificate generic_closed_point(const RingPtr& ring, const HomIdeal& p,
                                             const GenPointConfig& cfg) {
    const RingCtx& R = ring->ctx();
    const Field& F = R.F();

    GenericPointCertificate cert;
    cert.base_ring = ring;
    cert.base_prime = p;
    int bound = cfg.degree_bound > 0 ? cfg.degree_bound : 2 * max_gen_degree(R);
    cert.degree_bound_used = bound;

    // p must not contain every positive-degree element
    bool allGensIn = true;
    for (size_t i = 0; i < R.ngens() && allGensIn; ++i)
        if (!p.contains(R.var(i))) allGensIn = false;
    if (allGensIn)
        fail(ErrorKind::PreconditionError, "prime contains the whole irrelevant ideal");

    int d = krull_dimension(hilbert_series(ring, p.gens(), 1));
    cert.dimension_d = d;

    if (d == 1) {
        // p already closed: trivial certificate over the base field
        cert.degenerate = true;
        cert.extended_ring = ring;
        cert.q_ideal = p;
        cert.m_ideal = p;
        cert.residue = residue_field_data(ring, p);
        cert.checks_passed.push_back("degenerate: prime already closed");
        return cert;
    }
    if (d < 1) fail(ErrorKind::PreconditionError, "prime has zero-dimensional quotient");

    cert.noether_elements = noether_normalize(ring, p, cfg.noether);

    std::vector<std::string> tnames;
    if (d == 2) {
        tnames.push_back("t");
    } else {
        for (int i = 1; i < d; ++i) tnames.push_back("t" + std::to_string(i));
    }
    RingPtr ext = ring->extend_scalars(tnames);
    cert.extended_ring = ext;
    const RingCtx& RK = ext->ctx();
    const Field& K = RK.F();
    size_t baseVars = F.nvars();

    std::vector<GPoly> qgens;
    for (const auto& g : p.gens()) qgens.push_back(lift_to(RK, g));
    GPoly a0 = lift_to(RK, cert.noether_elements[0]);
    for (int i = 1; i < d; ++i) {
        GPoly ai = lift_to(RK, cert.noether_elements[size_t(i)]);
        FE ti = K.from_tpoly(K.tvar(baseVars + size_t(i) - 1));
        GPoly b = RK.sub(ai, RK.scale(a0, ti));
        cert.shear_elements.push_back(b);
        qgens.push_back(b);
    }
    cert.q_ideal = HomIdeal(ext, qgens);

    // bounded search for explicit radical generators beyond q
    std::vector<GPoly> mgens = qgens;
    HomIdeal m(ext, mgens);
    for (int64_t n = 1; n <= bound; ++n) {
        // standard monomials modulo the current m-basis
        std::vector<GMono> candidates;
        {
            const auto& gb = m.groebner_basis();
            for (const auto& mono : ext->basis_of_degree(n)) {
                bool red = false;
                for (const auto& g : gb)
                    if (RK.divides(g.lt().m, mono)) { red = true; break; }
                if (!red) candidates.push_back(mono);
            }
        }
        bool added = false;
        for (const auto& mono : candidates) {
            GPoly f;
            f.t.push_back({mono, K.one()});
            if (m.contains(f)) continue;
            if (radical_membership(f, cert.q_ideal)) {
                mgens.push_back(f);
                added = true;
            }
        }
        if (added) m = HomIdeal(ext, mgens);
    }
    cert.m_ideal = m;

    // --- certificate checks ---

    // generators of p lie in sqrt(q)
    for (const auto& g : p.gens())
        if (!radical_membership(lift_to(RK, g), cert.q_ideal))
            fail(ErrorKind::CertificationError,
                 "base prime generator escaped the radical of q: " + R.to_string(g));
    cert.checks_passed.push_back("p subset sqrt(q)");

    // m cap A = p degreewise up to the bound: transcendental-coefficient
    // matching turns membership of F_p-rational elements in m into an exact
    // F_p-linear system per degree
    FieldPtr basePrime = prime_field(F.p());
    for (int64_t n = 1; n <= bound; ++n) {
        const auto& baseMons = ring->basis_of_degree(n);
        if (baseMons.empty()) continue;
        // per target monomial, product of all coefficient denominators, so
        // every normal form can be cleared to polynomial coefficients
        std::map<std::vector<uint32_t>, TPoly> denProd;
        std::vector<GPoly> nfs(baseMons.size());
        for (size_t j = 0; j < baseMons.size(); ++j) {
            nfs[j] = m.normal_form(lift_to(RK, GPoly{{GTerm{baseMons[j], F.one()}}}));
            for (const auto& t : nfs[j].t) {
                auto& slot = denProd[t.m.e];
                slot = slot.is_zero() ? t.c.den : K.tmul(slot, t.c.den);
            }
        }
        std::map<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>,
                 std::map<size_t, uint32_t>>
            linRows;
        for (size_t j = 0; j < baseMons.size(); ++j) {
            for (const auto& t : nfs[j].t) {
                TPoly cleared = K.tmul(t.c.num, K.tdiv_exact(denProd[t.m.e], t.c.den));
                for (const auto& tt : cleared.t)
                    linRows[{t.m.e, tt.m.e}][j] = tt.c;
            }
        }
        Matrix sys(basePrime, linRows.size(), baseMons.size());
        {
            size_t r = 0;
            for (const auto& [key, row] : linRows) {
                for (const auto& [j, c] : row) sys.at(r, j) = basePrime->from_int(c);
                ++r;
            }
        }
        auto rk = rank_kernel(sys);
        for (size_t kc = 0; kc < rk.kernel.cols(); ++kc) {
            std::vector<GTerm> terms;
            for (size_t j = 0; j < baseMons.size(); ++j) {
                const FE& coef = rk.kernel.at(j, kc);
                if (basePrime->is_zero(coef)) continue;
                terms.push_back({baseMons[j], F.from_int(coef.num.constant_value())});
            }
            GPoly candidate = R.from_terms(std::move(terms));
            if (!p.contains(candidate))
                fail(ErrorKind::CertificationError,
                     "m cap A strictly larger than p; witness " + R.to_string(candidate) +
                         " in degree " + std::to_string(n));
        }
    }
    cert.checks_passed.push_back("m cap A = p up to degree bound");

    // dim ext/m = 1 and residue data
    if (krull_dimension(hilbert_series(ext, cert.m_ideal.gens(), 1)) != 1)
        fail(ErrorKind::CertificationError, "q does not cut the fiber down to a closed point");
    cert.checks_passed.push_back("dim A_K/m = 1");
    cert.residue = residue_field_data(ext, cert.m_ideal);
    if (cert.residue.degree0_extension != 1)
        fail(ErrorKind::CertificationError, "degree-zero residue extension is not trivial");
    cert.checks_passed.push_back("degree-zero residue extension trivial");

    // bounded zero-divisor probe: no graded zero divisors among low degrees
    {
        const RingCtx& RE = ext->ctx();
        bool domainLike = true;
        for (int64_t n = 1; n <= std::min<int64_t>(bound, 4) && domainLike; ++n) {
            const auto& gb = cert.m_ideal.groebner_basis();
            std::vector<GMono> std_n;
            for (const auto& mono : ext->basis_of_degree(n)) {
                bool red = false;
                for (const auto& g : gb)
                    if (RE.divides(g.lt().m, mono)) { red = true; break; }
                if (!red) std_n.push_back(mono);
            }
            for (const auto& a : std_n)
                for (const auto& b : std_n) {
                    GPoly prod;
                    prod.t.push_back({RE.mono_mul(a, b), RE.F().one()});
                    if (cert.m_ideal.contains(prod)) { domainLike = false; break; }
                }
        }
        if (!domainLike)
            fail(ErrorKind::CertificationError,
                 "graded zero divisor below the degree bound: m is not prime");
        cert.checks_passed.push_back("no graded zero divisors up to the probe bound");
    }

    return cert;
}

} // namespace gradua
