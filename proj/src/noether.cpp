#include <algorithm>
#include <random>

#include "gradua/ring.hpp"

namespace gradua {

namespace {

bool finite_fiber(const RingPtr& ring, const HomIdeal& p, const std::vector<GPoly>& cand) {
    std::vector<GPoly> extra = p.gens();
    for (const auto& c : cand) extra.push_back(c);
    return is_finite_dimensional(hilbert_series(ring, extra, 1));
}

} // namespace

std::vector<GPoly> noether_normalize(const RingPtr& ring, const HomIdeal& p,
                                     const NoetherConfig& cfg) {
    const RingCtx& R = ring->ctx();
    const Field& F = R.F();
    int d = krull_dimension(hilbert_series(ring, p.gens(), 1));
    if (d <= 0) return {};

    // standard monomials of ring/p per degree drive the candidate pool
    std::vector<GPoly> pgb;
    {
        std::vector<GPoly> all = ring->relations();
        for (const auto& g : p.gens()) all.push_back(g);
        pgb = groebner(R, std::move(all));
    }
    auto monomials_of_degree = [&](int64_t n) {
        std::vector<GMono> raw = ring->basis_of_degree(n);
        std::vector<GMono> out;
        for (const auto& m : raw) {
            bool reducible = false;
            for (const auto& g : pgb)
                if (R.divides(g.lt().m, m)) { reducible = true; break; }
            if (!reducible) out.push_back(m);
        }
        // declared generator order first, so a_0 follows the presentation
        std::reverse(out.begin(), out.end());
        return out;
    };

    std::mt19937_64 rng(cfg.seed);
    for (int64_t D = 1; D <= cfg.max_degree; ++D) {
        auto mons = monomials_of_degree(D);
        if (mons.size() < size_t(1)) continue;
        std::vector<GPoly> pool;
        for (const auto& m : mons) {
            GPoly g;
            g.t.push_back({m, F.one()});
            pool.push_back(g);
        }

        // plain monomial tuples first, in order
        if (pool.size() >= size_t(d)) {
            std::vector<size_t> idx;
            idx.resize(size_t(d));
            for (int i = 0; i < d; ++i) idx[size_t(i)] = size_t(i);
            auto next_combo = [&]() -> bool {
                int i = d - 1;
                while (i >= 0 && idx[size_t(i)] == pool.size() - size_t(d - 1 - i) - 1) --i;
                if (i < 0) return false;
                ++idx[size_t(i)];
                for (int j = i + 1; j < d; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
                return true;
            };
            int tried = 0;
            do {
                std::vector<GPoly> cand;
                for (int i = 0; i < d; ++i) cand.push_back(pool[idx[size_t(i)]]);
                if (finite_fiber(ring, p, cand)) return cand;
            } while (++tried < 64 && next_combo());
        }

        // fixed-seed random F_p combinations of the degree-D monomials
        for (int attempt = 0; attempt < cfg.random_attempts; ++attempt) {
            std::vector<GPoly> cand;
            for (int i = 0; i < d; ++i) {
                std::vector<GTerm> terms;
                bool nonzero = false;
                for (const auto& m : mons) {
                    uint32_t c = uint32_t(rng() % F.p());
                    if (c == 0) continue;
                    terms.push_back({m, F.from_int(c)});
                    nonzero = true;
                }
                if (!nonzero && !mons.empty()) terms.push_back({mons[0], F.one()});
                cand.push_back(R.from_terms(std::move(terms)));
            }
            if (finite_fiber(ring, p, cand)) return cand;
        }
    }
    fail(ErrorKind::NormalizationNotFound,
         "no same-degree Noether system found within the configured search bounds");
}

} // namespace gradua
