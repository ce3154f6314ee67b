#include "gradua/field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gradua {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t TMono::degree() const {
    uint64_t s = 0;
    for (uint32_t x : e) s += x;
    return s;
}

int tmono_cmp(const TMono& a, const TMono& b) {
    uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // grevlex tie-break: last nonzero entry of a-b negative means a > b
    size_t n = std::max(a.e.size(), b.e.size());
    for (size_t i = n; i-- > 0;) {
        uint32_t ai = i < a.e.size() ? a.e[i] : 0;
        uint32_t bi = i < b.e.size() ? b.e[i] : 0;
        if (ai != bi) return ai < bi ? 1 : -1;
    }
    return 0;
}

bool tmono_divides(const TMono& a, const TMono& b) {
    for (size_t i = 0; i < a.e.size(); ++i) {
        uint32_t bi = i < b.e.size() ? b.e[i] : 0;
        if (a.e[i] > bi) return false;
    }
    return true;
}

TMono tmono_mul(const TMono& a, const TMono& b) {
    TMono r;
    r.e.resize(std::max(a.e.size(), b.e.size()), 0);
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = (i < a.e.size() ? a.e[i] : 0) + (i < b.e.size() ? b.e[i] : 0);
    return r;
}

TMono tmono_div(const TMono& b, const TMono& a) {
    TMono r;
    r.e.resize(b.e.size(), 0);
    for (size_t i = 0; i < b.e.size(); ++i)
        r.e[i] = b.e[i] - (i < a.e.size() ? a.e[i] : 0);
    while (!r.e.empty() && r.e.back() == 0) r.e.pop_back();
    return r;
}

Field::Field(FieldDescriptor d) : desc_(std::move(d)), p_(desc_.characteristic) {
    if (!is_prime(p_))
        fail(ErrorKind::MalformedElement, "field characteristic must be prime");
    for (size_t i = 0; i < desc_.transcendentals.size(); ++i)
        for (size_t j = i + 1; j < desc_.transcendentals.size(); ++j)
            if (desc_.transcendentals[i] == desc_.transcendentals[j])
                fail(ErrorKind::MalformedElement, "duplicate transcendental name");
}

uint32_t Field::cinv(uint32_t a) const {
    a %= p_;
    if (a == 0) fail(ErrorKind::MalformedElement, "division by zero in F_p");
    // extended Euclid
    int64_t t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += p_;
    return uint32_t(t);
}

TPoly Field::tconst(uint64_t c) const {
    uint32_t v = uint32_t(c % p_);
    TPoly r;
    if (v != 0) r.t.push_back({TMono{}, v});
    return r;
}

TPoly Field::tvar(size_t i, uint32_t exp) const {
    if (i >= nvars()) fail(ErrorKind::MalformedElement, "transcendental index out of range");
    TPoly r;
    if (exp == 0) return tconst(1);
    TMono m;
    m.e.resize(i + 1, 0);
    m.e[i] = exp;
    r.t.push_back({std::move(m), 1});
    return r;
}

TPoly Field::tadd(const TPoly& a, const TPoly& b) const {
    TPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) { r.t.push_back(a.t[i++]); continue; }
        if (i == a.t.size()) { r.t.push_back(b.t[j++]); continue; }
        int c = tmono_cmp(a.t[i].m, b.t[j].m);
        if (c > 0) r.t.push_back(a.t[i++]);
        else if (c < 0) r.t.push_back(b.t[j++]);
        else {
            uint32_t s = cadd(a.t[i].c, b.t[j].c);
            if (s != 0) r.t.push_back({a.t[i].m, s});
            ++i; ++j;
        }
    }
    return r;
}

TPoly Field::tneg(const TPoly& a) const {
    TPoly r = a;
    for (auto& t : r.t) t.c = cneg(t.c);
    return r;
}

TPoly Field::tsub(const TPoly& a, const TPoly& b) const { return tadd(a, tneg(b)); }

TPoly Field::tscale(const TPoly& a, uint32_t c) const {
    c %= p_;
    if (c == 0) return {};
    TPoly r = a;
    for (auto& t : r.t) t.c = cmul(t.c, c);
    return r;
}

TPoly Field::tmul(const TPoly& a, const TPoly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<TMono, uint32_t, decltype([](const TMono& x, const TMono& y) {
                 return tmono_cmp(x, y) > 0;
             })>
        acc;
    for (const auto& ta : a.t)
        for (const auto& tb : b.t) {
            TMono m = tmono_mul(ta.m, tb.m);
            uint32_t& slot = acc[m];
            slot = cadd(slot, cmul(ta.c, tb.c));
        }
    TPoly r;
    for (auto& [m, c] : acc)
        if (c != 0) r.t.push_back({m, c});
    return r;
}

TPoly Field::tdiv_exact(const TPoly& a, const TPoly& b) const {
    if (b.is_zero()) fail(ErrorKind::MalformedElement, "polynomial division by zero");
    TPoly rem = a, q;
    std::vector<TPoly::Term> qt;
    while (!rem.is_zero()) {
        const auto& lr = rem.t.front();
        const auto& lb = b.t.front();
        if (!tmono_divides(lb.m, lr.m))
            fail(ErrorKind::MalformedElement, "inexact polynomial division");
        TPoly::Term step{tmono_div(lr.m, lb.m), cmul(lr.c, cinv(lb.c))};
        TPoly stepPoly;
        stepPoly.t.push_back(step);
        qt.push_back(step);
        rem = tsub(rem, tmul(stepPoly, b));
    }
    q.t = std::move(qt);
    std::sort(q.t.begin(), q.t.end(),
              [](const TPoly::Term& x, const TPoly::Term& y) { return tmono_cmp(x.m, y.m) > 0; });
    return q;
}

namespace {

// Univariate view in the top variable for gcd computations: coefficients are
// TPolys in the remaining variables.
size_t top_var(const TPoly& a) {
    size_t v = 0;
    for (const auto& t : a.t)
        for (size_t i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i] > 0) v = std::max(v, i + 1);
    return v; // 0 means constant
}

std::map<uint32_t, TPoly> split_by_var(const Field& F, const TPoly& a, size_t var) {
    std::map<uint32_t, TPoly> coeffs;
    for (const auto& t : a.t) {
        uint32_t ev = var < t.m.e.size() ? t.m.e[var] : 0;
        TPoly::Term rest = t;
        if (var < rest.m.e.size()) rest.m.e[var] = 0;
        while (!rest.m.e.empty() && rest.m.e.back() == 0) rest.m.e.pop_back();
        TPoly one;
        one.t.push_back(rest);
        coeffs[ev] = F.tadd(coeffs[ev], one);
    }
    return coeffs;
}

TPoly join_by_var(const Field& F, const std::map<uint32_t, TPoly>& coeffs, size_t var) {
    TPoly r;
    for (const auto& [ev, c] : coeffs) {
        TPoly shifted = F.tmul(c, F.tvar(var, ev == 0 ? 0u : ev));
        if (ev == 0) shifted = c;
        r = F.tadd(r, shifted);
    }
    return r;
}

} // namespace

TPoly Field::tgcd(const TPoly& a, const TPoly& b) const {
    if (a.is_zero()) return tmonic(b);
    if (b.is_zero()) return tmonic(a);
    if (a.is_constant() || b.is_constant()) return tconst(1);

    size_t va = top_var(a), vb = top_var(b);
    size_t v = std::max(va, vb) - 1; // highest variable index present

    auto ca = split_by_var(*this, a, v);
    auto cb = split_by_var(*this, b, v);
    if (ca.rbegin()->first == 0 || cb.rbegin()->first == 0) {
        // one of them does not involve v at all: gcd divides its coefficients
        const TPoly& flat = ca.rbegin()->first == 0 ? a : b;
        const auto& other = ca.rbegin()->first == 0 ? cb : ca;
        TPoly g = flat;
        for (const auto& [ev, c] : other) g = tgcd(g, c);
        return tmonic(g);
    }

    auto content = [&](const std::map<uint32_t, TPoly>& cs) {
        TPoly g;
        for (const auto& [ev, c] : cs) g = tgcd(g, c);
        return g;
    };
    TPoly conta = content(ca), contb = content(cb);
    TPoly contg = tgcd(conta, contb);

    auto primitive = [&](const std::map<uint32_t, TPoly>& cs, const TPoly& cont) {
        std::map<uint32_t, TPoly> r;
        for (const auto& [ev, c] : cs) r[ev] = tdiv_exact(c, cont);
        return r;
    };
    auto A = primitive(ca, conta);
    auto B = primitive(cb, contb);
    if (A.rbegin()->first < B.rbegin()->first) std::swap(A, B);

    // primitive PRS
    while (true) {
        if (B.empty()) break;
        uint32_t degA = A.rbegin()->first, degB = B.rbegin()->first;
        if (degB == 0) {
            // B primitive and constant in v => gcd of primitive parts is in
            // the smaller variables
            TPoly g = B.rbegin()->second;
            for (const auto& [ev, c] : A) g = tgcd(g, c);
            A.clear();
            A[0] = g;
            break;
        }
        if (degA < degB) std::swap(A, B);
        // pseudo-remainder of A by B
        TPoly lcB = B.rbegin()->second;
        std::map<uint32_t, TPoly> R = A;
        uint32_t dA = R.empty() ? 0 : R.rbegin()->first;
        while (!R.empty() && R.rbegin()->first >= B.rbegin()->first) {
            uint32_t shift = R.rbegin()->first - B.rbegin()->first;
            TPoly lead = R.rbegin()->second;
            // R = lcB * R - lead * v^shift * B
            std::map<uint32_t, TPoly> R2;
            for (const auto& [ev, c] : R) R2[ev] = tmul(c, lcB);
            for (const auto& [ev, c] : B) {
                TPoly sub = tmul(c, lead);
                R2[ev + shift] = tsub(R2.count(ev + shift) ? R2[ev + shift] : TPoly{}, sub);
            }
            R.clear();
            for (auto& [ev, c] : R2)
                if (!c.is_zero()) R[ev] = c;
            if (!R.empty() && R.rbegin()->first == dA && dA >= B.rbegin()->first) {
                // no progress possible only if cancellation failed; cannot
                // happen for exact pseudo-division
            }
            if (!R.empty()) dA = R.rbegin()->first;
        }
        // primitive part of R
        if (R.empty()) {
            A = B;
            B.clear();
            break;
        }
        TPoly contR;
        for (const auto& [ev, c] : R) contR = tgcd(contR, c);
        for (auto& [ev, c] : R) c = tdiv_exact(c, contR);
        A = B;
        B = R;
    }
    TPoly prim = join_by_var(*this, A, v);
    return tmonic(tmul(contg, prim));
}

TPoly Field::tmonic(const TPoly& a) const {
    if (a.is_zero()) return a;
    return tscale(a, cinv(a.t.front().c));
}

bool Field::teq(const TPoly& a, const TPoly& b) const {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].c != b.t[i].c || !(a.t[i].m == b.t[i].m)) return false;
    return true;
}

FE Field::zero() const { return {TPoly{}, tconst(1)}; }
FE Field::one() const { return {tconst(1), tconst(1)}; }

FE Field::from_int(int64_t n) const {
    int64_t v = n % int64_t(p_);
    if (v < 0) v += p_;
    return {tconst(uint64_t(v)), tconst(1)};
}

FE Field::from_tpoly(TPoly n) const { return {std::move(n), tconst(1)}; }

FE Field::make(TPoly n, TPoly d) const {
    if (d.is_zero())
        fail(ErrorKind::MalformedElement, "rational function with zero denominator");
    if (n.is_zero()) return zero();
    TPoly g = tgcd(n, d);
    if (!g.is_constant() || g.constant_value() != 1) {
        n = tdiv_exact(n, g);
        d = tdiv_exact(d, g);
    }
    uint32_t lc = d.t.front().c;
    if (lc != 1) {
        uint32_t ilc = cinv(lc);
        n = tscale(n, ilc);
        d = tscale(d, ilc);
    }
    return {std::move(n), std::move(d)};
}

FE Field::add(const FE& a, const FE& b) const {
    return make(tadd(tmul(a.num, b.den), tmul(b.num, a.den)), tmul(a.den, b.den));
}

FE Field::sub(const FE& a, const FE& b) const {
    return make(tsub(tmul(a.num, b.den), tmul(b.num, a.den)), tmul(a.den, b.den));
}

FE Field::neg(const FE& a) const { return {tneg(a.num), a.den}; }

FE Field::mul(const FE& a, const FE& b) const {
    if (a.num.is_zero() || b.num.is_zero()) return zero();
    return make(tmul(a.num, b.num), tmul(a.den, b.den));
}

FE Field::div(const FE& a, const FE& b) const {
    if (b.num.is_zero()) fail(ErrorKind::MalformedElement, "division by zero");
    if (a.num.is_zero()) return zero();
    return make(tmul(a.num, b.den), tmul(a.den, b.num));
}

FE Field::inv(const FE& a) const {
    if (a.num.is_zero()) fail(ErrorKind::MalformedElement, "inverse of zero");
    return make(a.den, a.num);
}

bool Field::is_one(const FE& a) const {
    return a.num.is_constant() && a.num.constant_value() == 1 && a.den.is_constant() &&
           a.den.constant_value() == 1;
}

bool Field::eq(const FE& a, const FE& b) const {
    // canonical forms compare structurally
    return teq(a.num, b.num) && teq(a.den, b.den);
}

std::string Field::to_string(const TPoly& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.t) {
        if (!first) os << "+";
        first = false;
        bool printedCoeff = false;
        if (t.c != 1 || t.m.degree() == 0) {
            os << t.c;
            printedCoeff = true;
        }
        bool any = false;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (printedCoeff || any) os << "*";
            os << desc_.transcendentals[i];
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            any = true;
        }
    }
    return os.str();
}

std::string Field::to_string(const FE& a) const {
    std::string n = to_string(a.num);
    if (a.den.is_constant() && a.den.constant_value() == 1) return n;
    std::string d = to_string(a.den);
    std::string ln = a.num.t.size() > 1 ? "(" + n + ")" : n;
    std::string ld = a.den.t.size() > 1 ? "(" + d + ")" : d;
    return ln + "/" + ld;
}

size_t Field::var_index(const std::string& name) const {
    for (size_t i = 0; i < desc_.transcendentals.size(); ++i)
        if (desc_.transcendentals[i] == name) return i;
    return size_t(-1);
}

FieldPtr make_field(FieldDescriptor d) { return std::make_shared<Field>(std::move(d)); }

FieldPtr prime_field(uint32_t p) { return make_field(FieldDescriptor{p, {}}); }

FieldPtr rational_function_field(uint32_t p, std::vector<std::string> vars) {
    return make_field(FieldDescriptor{p, std::move(vars)});
}

} // namespace gradua
