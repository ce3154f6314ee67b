#include <algorithm>

#include "gradua/ring.hpp"

namespace gradua {

namespace {

using ZPoly = std::vector<int64_t>; // integer polynomial, index = degree

ZPoly zshift_sub(const ZPoly& a, const ZPoly& b, int64_t shift) {
    // a - t^shift * b
    ZPoly r = a;
    if (r.size() < b.size() + size_t(shift)) r.resize(b.size() + size_t(shift), 0);
    for (size_t i = 0; i < b.size(); ++i) r[i + size_t(shift)] -= b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<GMono> minimalize(const RingCtx& R, std::vector<GMono> gens) {
    std::sort(gens.begin(), gens.end(),
              [&](const GMono& a, const GMono& b) { return R.cmp(a, b) < 0; });
    std::vector<GMono> out;
    for (const auto& m : gens) {
        bool dominated = false;
        for (const auto& o : out)
            if (R.divides(o, m)) { dominated = true; break; }
        if (!dominated) out.push_back(m);
    }
    return out;
}

// Numerator of the Hilbert series of R/(monomial ideal) over the full
// denominator prod(1 - t^{w_i}): peel generators one at a time through
// N(I + m) = N(I) - t^{deg m} N(I : m).
ZPoly monomial_numerator(const RingCtx& R, std::vector<GMono> gens) {
    gens = minimalize(R, gens);
    if (gens.empty()) return {1};
    // unit ideal
    for (const auto& g : gens)
        if (R.wdeg(g) == 0) return {};
    GMono last = gens.back();
    gens.pop_back();
    ZPoly without = monomial_numerator(R, gens);
    std::vector<GMono> colon;
    for (const auto& g : gens) {
        GMono q;
        q.e.resize(g.e.size());
        for (size_t i = 0; i < g.e.size(); ++i)
            q.e[i] = g.e[i] > last.e[i] ? g.e[i] - last.e[i] : 0;
        colon.push_back(std::move(q));
    }
    ZPoly colonNum = monomial_numerator(R, colon);
    return zshift_sub(without, colonNum, R.wdeg(last));
}

} // namespace

int64_t HilbertSeries::dim_at(int64_t n) const {
    auto it = window_dims.find(n);
    return it == window_dims.end() ? 0 : it->second;
}

HilbertSeries hilbert_series(const RingPtr& ring, const std::vector<GPoly>& extra,
                             int64_t window_hi) {
    const RingCtx& R = ring->ctx();
    std::vector<GPoly> all = ring->relations();
    for (const auto& g : extra) all.push_back(g);
    auto gb = extra.empty() ? ring->ring_groebner() : groebner(R, std::move(all));

    std::vector<GMono> lts;
    for (const auto& g : gb) lts.push_back(g.lt().m);

    HilbertSeries hs;
    hs.numerator = monomial_numerator(R, lts);
    for (int d : R.degrees()) hs.denominator_degrees.push_back(d);
    std::sort(hs.denominator_degrees.begin(), hs.denominator_degrees.end());

    // power-series expansion on the window
    std::vector<int64_t> series(size_t(window_hi) + 1, 0);
    for (size_t i = 0; i < hs.numerator.size() && int64_t(i) <= window_hi; ++i)
        series[i] = hs.numerator[i];
    for (int d : hs.denominator_degrees) {
        // multiply by 1/(1 - t^d)
        for (size_t n = size_t(d); n <= size_t(window_hi); ++n) series[n] += series[n - size_t(d)];
    }
    for (int64_t n = 0; n <= window_hi; ++n) hs.window_dims[n] = series[size_t(n)];
    return hs;
}

int krull_dimension(const HilbertSeries& hs) {
    // pole order of the series at t = 1
    ZPoly num = hs.numerator;
    if (num.empty()) return 0; // zero ring
    int cancelled = 0;
    while (true) {
        int64_t at1 = 0;
        for (int64_t c : num) at1 += c;
        if (at1 != 0) break;
        // divide by (1 - t): q(t) with num = (1-t) q; q_i = sum_{j<=i} num_j
        ZPoly q(num.size() ? num.size() - 1 : 0, 0);
        int64_t acc = 0;
        for (size_t i = 0; i + 1 < num.size(); ++i) {
            acc += num[i];
            q[i] = acc;
        }
        num = q;
        while (!num.empty() && num.back() == 0) num.pop_back();
        ++cancelled;
        if (num.empty()) break;
    }
    return int(hs.denominator_degrees.size()) - cancelled;
}

int krull_dimension(const RingPtr& ring) { return krull_dimension(hilbert_series(ring)); }

bool is_finite_dimensional(const HilbertSeries& hs) { return krull_dimension(hs) <= 0; }

} // namespace gradua
