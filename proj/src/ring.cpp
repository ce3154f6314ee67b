#include "gradua/ring.hpp"

#include <algorithm>

#include "gradua/matrix.hpp"

namespace gradua {

RingPresentation::RingPresentation(RingCtx ctx, std::vector<GPoly> relations)
    : ctx_(std::move(ctx)), relations_(std::move(relations)) {
    const bool char2 = ctx_.F().p() == 2;
    if (!char2) {
        for (int d : ctx_.degrees())
            if (d % 2 != 0)
                fail(ErrorKind::PresentationError,
                     "odd-degree generators need characteristic two (strictly "
                     "commutative presentations only)");
    }
    for (const auto& r : relations_) {
        int64_t d = 0;
        if (!ctx_.homogeneous(r, &d))
            fail(ErrorKind::PresentationError, "inhomogeneous relation " + ctx_.to_string(r));
        if (!r.is_zero() && d == 0)
            fail(ErrorKind::PresentationError, "degree-zero relation breaks connectedness");
    }
}

RingPtr RingPresentation::create(FieldPtr field, std::vector<std::string> gen_names,
                                 std::vector<int> gen_degrees,
                                 std::vector<std::string> relations) {
    RingCtx ctx(std::move(field), std::move(gen_names), std::move(gen_degrees));
    std::vector<GPoly> rels;
    for (const auto& s : relations) rels.push_back(ctx.parse(s));
    return RingPtr(new RingPresentation(std::move(ctx), std::move(rels)));
}

RingPtr RingPresentation::create_from_polys(FieldPtr field, std::vector<std::string> gen_names,
                                            std::vector<int> gen_degrees,
                                            std::vector<GPoly> relations) {
    RingCtx ctx(std::move(field), std::move(gen_names), std::move(gen_degrees));
    return RingPtr(new RingPresentation(std::move(ctx), std::move(relations)));
}

const std::vector<GPoly>& RingPresentation::ring_groebner() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!gb_) gb_ = groebner(ctx_, relations_);
    return *gb_;
}

GPoly RingPresentation::reduce(const GPoly& f) const { return normal_form(ctx_, f, ring_groebner()); }

namespace {

void enumerate_monomials(const RingCtx& R, const std::vector<GPoly>& gb, int64_t target,
                         size_t var, GMono& cur, int64_t deg, std::vector<GMono>& out) {
    if (deg == target) {
        for (const auto& g : gb)
            if (R.divides(g.lt().m, cur)) return;
        out.push_back(cur);
        return;
    }
    if (var >= R.ngens()) return;
    int64_t w = R.degrees()[var];
    for (uint32_t e = 0;; ++e) {
        int64_t nd = deg + int64_t(e) * w;
        if (nd > target) break;
        cur.e[var] = e;
        enumerate_monomials(R, gb, target, var + 1, cur, nd, out);
    }
    cur.e[var] = 0;
}

} // namespace

const std::vector<GMono>& RingPresentation::basis_of_degree(int64_t n) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = basisCache_.find(n);
        if (it != basisCache_.end()) return it->second;
    }
    std::vector<GMono> out;
    if (n >= 0) {
        GMono cur = ctx_.mono_one();
        enumerate_monomials(ctx_, ring_groebner(), n, 0, cur, 0, out);
        std::sort(out.begin(), out.end(),
                  [this](const GMono& a, const GMono& b) { return ctx_.cmp(a, b) < 0; });
    }
    std::lock_guard<std::mutex> lock(mu_);
    return basisCache_.emplace(n, std::move(out)).first->second;
}

RingPtr RingPresentation::extend_scalars(const std::vector<std::string>& new_trans) const {
    FieldDescriptor d = ctx_.F().desc();
    for (const auto& t : new_trans) d.transcendentals.push_back(t);
    FieldPtr bigger = make_field(d);
    // relations carry over: rebuild coefficients over the larger field
    RingCtx nctx(bigger, ctx_.names(), ctx_.degrees());
    std::vector<GPoly> rels;
    for (const auto& r : relations_) {
        std::vector<GTerm> terms;
        for (const auto& t : r.t) {
            // old-field elements embed verbatim (same variable prefix)
            terms.push_back({t.m, t.c});
        }
        rels.push_back(nctx.from_terms(std::move(terms)));
    }
    return RingPtr(new RingPresentation(std::move(nctx), std::move(rels)));
}

// ------------------------------------------------------------------ ideals

HomIdeal::HomIdeal(RingPtr ring, std::vector<GPoly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

HomIdeal HomIdeal::parse(RingPtr ring, const std::vector<std::string>& gens) {
    std::vector<GPoly> ps;
    for (const auto& s : gens) ps.push_back(ring->ctx().parse(s));
    return HomIdeal(std::move(ring), std::move(ps));
}

const std::vector<GPoly>& HomIdeal::groebner_basis() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) {
        std::vector<GPoly> all = ring_->relations();
        for (const auto& g : gens_) all.push_back(g);
        cache_->gb =
            std::make_shared<const std::vector<GPoly>>(groebner(ring_->ctx(), std::move(all)));
    }
    return *cache_->gb;
}

GPoly HomIdeal::normal_form(const GPoly& f) const {
    return gradua::normal_form(ring_->ctx(), f, groebner_basis());
}

bool HomIdeal::contains(const GPoly& f) const { return normal_form(f).is_zero(); }

bool HomIdeal::is_unit_ideal() const {
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].t.size() == 1 &&
           ring_->ctx().wdeg(gb[0].lt().m) == 0;
}

bool HomIdeal::same_ideal(const HomIdeal& other) const {
    for (const auto& g : other.gens())
        if (!contains(g)) return false;
    for (const auto& g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

HomIdeal zero_ideal(RingPtr ring) { return HomIdeal(std::move(ring), {}); }

std::vector<GPoly> groebner_basis(const HomIdeal& ideal) {
    const RingCtx& R = ideal.ring()->ctx();
    for (const auto& g : ideal.gens())
        if (!R.homogeneous(g))
            fail(ErrorKind::PresentationError,
                 "inhomogeneous ideal generator " + R.to_string(g));
    return ideal.groebner_basis();
}

GPoly normal_form(const GPoly& f, const HomIdeal& ideal) { return ideal.normal_form(f); }

// ----------------------------------------------------------- ideal arith

namespace {

// Elements g of degree n with g*f_j in I for all j, as an F-linear kernel on
// the standard monomials of the ambient quotient ring.
std::vector<GPoly> colon_degree_piece(const RingPtr& ring, const HomIdeal& I,
                                      const std::vector<GPoly>& fs, int64_t n) {
    const RingCtx& R = ring->ctx();
    const Field& F = R.F();
    const auto& mons = ring->basis_of_degree(n);
    if (mons.empty()) return {};

    // one block of constraint rows per f_j, indexed by the target-degree basis
    std::vector<Matrix> blocks;
    for (const auto& f : fs) {
        int64_t fd = 0;
        R.homogeneous(f, &fd);
        const auto& target = ring->basis_of_degree(n + fd);
        Matrix block(R.field(), target.size(), mons.size());
        for (size_t c = 0; c < mons.size(); ++c) {
            GPoly prod = I.normal_form(R.term_mul({mons[c], F.one()}, f));
            for (const auto& t : prod.t) {
                auto it = std::lower_bound(target.begin(), target.end(), t.m,
                                           [&](const GMono& a, const GMono& b) {
                                               return R.cmp(a, b) < 0;
                                           });
                if (it == target.end() || !(*it == t.m))
                    fail(ErrorKind::PresentationError, "internal: basis lookup failed");
                block.at(size_t(it - target.begin()), c) = t.c;
            }
        }
        blocks.push_back(std::move(block));
    }
    Matrix sys(R.field(), 0, mons.size());
    for (auto& b : blocks) sys = sys.rows() == 0 ? b : sys.vcat(b);
    if (sys.rows() == 0) {
        // no conditions: everything qualifies
        std::vector<GPoly> out;
        for (const auto& m : mons) {
            GPoly g;
            g.t.push_back({m, F.one()});
            out.push_back(g);
        }
        return out;
    }
    auto rk = rank_kernel(sys);
    std::vector<GPoly> out;
    for (size_t kcol = 0; kcol < rk.kernel.cols(); ++kcol) {
        std::vector<GTerm> terms;
        for (size_t r = 0; r < mons.size(); ++r)
            if (!F.is_zero(rk.kernel.at(r, kcol)))
                terms.push_back({mons[r], rk.kernel.at(r, kcol)});
        out.push_back(R.canonical(R.from_terms(std::move(terms))));
    }
    return out;
}

HomIdeal colon_bounded(const HomIdeal& I, const HomIdeal& J, int64_t bound) {
    const RingPtr& ring = I.ring();
    std::vector<GPoly> found = I.gens();
    HomIdeal current(ring, found);
    for (int64_t n = 0; n <= bound; ++n) {
        auto piece = colon_degree_piece(ring, I, J.gens(), n);
        bool added = false;
        for (auto& g : piece) {
            if (current.contains(g)) continue;
            found.push_back(g);
            added = true;
        }
        if (added) current = HomIdeal(ring, found);
    }
    return current;
}

} // namespace

HomIdeal ideal_arith(const HomIdeal& i, const HomIdeal& j, IdealOp op, int64_t degree_bound) {
    if (i.ring() != j.ring())
        fail(ErrorKind::FieldMismatch, "ideal arithmetic across different rings");
    const RingCtx& R = i.ring()->ctx();
    switch (op) {
    case IdealOp::Sum: {
        std::vector<GPoly> gens = i.gens();
        for (const auto& g : j.gens()) gens.push_back(g);
        return HomIdeal(i.ring(), std::move(gens));
    }
    case IdealOp::Product: {
        std::vector<GPoly> gens;
        for (const auto& a : i.gens())
            for (const auto& b : j.gens()) gens.push_back(R.mul(a, b));
        return HomIdeal(i.ring(), std::move(gens));
    }
    case IdealOp::Colon:
        if (j.gens().empty())
            fail(ErrorKind::UsageError, "colon by the zero ideal");
        return colon_bounded(i, j, degree_bound);
    case IdealOp::Saturation: {
        HomIdeal cur = i;
        for (int iter = 0; iter < 64; ++iter) {
            HomIdeal next = colon_bounded(cur, j, degree_bound);
            if (next.same_ideal(cur)) return cur;
            cur = next;
        }
        fail(ErrorKind::ResourceError, "saturation colon chain did not stabilize");
    }
    }
    fail(ErrorKind::UsageError, "unknown ideal operation");
}

bool radical_membership(const GPoly& f, const HomIdeal& ideal) {
    const RingPtr& ring = ideal.ring();
    const RingCtx& R = ring->ctx();
    if (f.is_zero()) return true;
    if (ideal.contains(f)) return true;

    // Rabinowitsch: 1 in (relations + I + (1 - y f)) inside R[y]
    std::vector<std::string> names = R.names();
    names.push_back("_rad");
    std::vector<int> degs = R.degrees();
    degs.push_back(1);
    RingCtx ext(R.field(), names, degs);
    size_t yi = names.size() - 1;

    auto lift = [&](const GPoly& g) {
        std::vector<GTerm> terms;
        for (const auto& t : g.t) {
            GMono m = t.m;
            m.e.push_back(0);
            terms.push_back({std::move(m), t.c});
        }
        return ext.from_terms(std::move(terms));
    };

    std::vector<GPoly> gens;
    for (const auto& r : ring->relations()) gens.push_back(lift(r));
    for (const auto& g : ideal.gens()) gens.push_back(lift(g));
    gens.push_back(ext.sub(ext.one(), ext.mul(ext.var(yi), lift(f))));

    auto gb = groebner(ext, std::move(gens));
    for (const auto& g : gb)
        if (!g.is_zero() && ext.wdeg(g.lt().m) == 0) return true;
    return false;
}

} // namespace gradua
