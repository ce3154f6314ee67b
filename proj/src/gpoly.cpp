#include "gradua/gpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gradua/error.hpp"

namespace gradua {

RingCtx::RingCtx(FieldPtr field, std::vector<std::string> names, std::vector<int> degrees)
    : field_(std::move(field)), names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size())
        fail(ErrorKind::PresentationError, "generator names/degrees length mismatch");
    for (int d : degrees_)
        if (d < 1) fail(ErrorKind::PresentationError, "generator degrees must be >= 1");
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                fail(ErrorKind::PresentationError, "duplicate generator name " + names_[i]);
}

int64_t RingCtx::wdeg(const GMono& m) const {
    int64_t s = 0;
    for (size_t i = 0; i < m.e.size(); ++i) s += int64_t(m.e[i]) * degrees_[i];
    return s;
}

int RingCtx::cmp(const GMono& a, const GMono& b) const {
    int64_t da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

bool RingCtx::divides(const GMono& a, const GMono& b) const {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

GMono RingCtx::mono_mul(const GMono& a, const GMono& b) const {
    GMono r;
    r.e.resize(ngens());
    for (size_t i = 0; i < ngens(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

GMono RingCtx::mono_div(const GMono& b, const GMono& a) const {
    GMono r;
    r.e.resize(ngens());
    for (size_t i = 0; i < ngens(); ++i) r.e[i] = b.e[i] - a.e[i];
    return r;
}

GMono RingCtx::mono_lcm(const GMono& a, const GMono& b) const {
    GMono r;
    r.e.resize(ngens());
    for (size_t i = 0; i < ngens(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

GMono RingCtx::mono_one() const {
    GMono r;
    r.e.assign(ngens(), 0);
    return r;
}

GMono RingCtx::mono_var(size_t i, uint32_t exp) const {
    GMono r = mono_one();
    r.e[i] = exp;
    return r;
}

GPoly RingCtx::one() const {
    GPoly r;
    r.t.push_back({mono_one(), F().one()});
    return r;
}

GPoly RingCtx::var(size_t i, uint32_t exp) const {
    if (i >= ngens()) fail(ErrorKind::PresentationError, "generator index out of range");
    if (exp == 0) return one();
    GPoly r;
    r.t.push_back({mono_var(i, exp), F().one()});
    return r;
}

GPoly RingCtx::from_terms(std::vector<GTerm> terms) const {
    std::sort(terms.begin(), terms.end(),
              [this](const GTerm& x, const GTerm& y) { return cmp(x.m, y.m) > 0; });
    GPoly r;
    for (auto& t : terms) {
        if (F().is_zero(t.c)) continue;
        if (!r.t.empty() && r.t.back().m == t.m) {
            r.t.back().c = F().add(r.t.back().c, t.c);
            if (F().is_zero(r.t.back().c)) r.t.pop_back();
        } else {
            r.t.push_back(std::move(t));
        }
    }
    return r;
}

GPoly RingCtx::add(const GPoly& a, const GPoly& b) const {
    GPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) { r.t.push_back(a.t[i++]); continue; }
        if (i == a.t.size()) { r.t.push_back(b.t[j++]); continue; }
        int c = cmp(a.t[i].m, b.t[j].m);
        if (c > 0) r.t.push_back(a.t[i++]);
        else if (c < 0) r.t.push_back(b.t[j++]);
        else {
            FE s = F().add(a.t[i].c, b.t[j].c);
            if (!F().is_zero(s)) r.t.push_back({a.t[i].m, std::move(s)});
            ++i; ++j;
        }
    }
    return r;
}

GPoly RingCtx::neg(const GPoly& a) const {
    GPoly r = a;
    for (auto& t : r.t) t.c = F().neg(t.c);
    return r;
}

GPoly RingCtx::sub(const GPoly& a, const GPoly& b) const { return add(a, neg(b)); }

GPoly RingCtx::scale(const GPoly& a, const FE& c) const {
    if (F().is_zero(c)) return {};
    GPoly r = a;
    for (auto& t : r.t) t.c = F().mul(t.c, c);
    return r;
}

GPoly RingCtx::term_mul(const GTerm& t, const GPoly& a) const {
    GPoly r;
    r.t.reserve(a.t.size());
    for (const auto& u : a.t) r.t.push_back({mono_mul(t.m, u.m), F().mul(t.c, u.c)});
    return r;
}

GPoly RingCtx::mul(const GPoly& a, const GPoly& b) const {
    GPoly r;
    for (const auto& t : a.t) r = add(r, term_mul(t, b));
    return r;
}

bool RingCtx::eq(const GPoly& a, const GPoly& b) const {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (!(a.t[i].m == b.t[i].m) || !F().eq(a.t[i].c, b.t[i].c)) return false;
    return true;
}

bool RingCtx::homogeneous(const GPoly& a, int64_t* deg) const {
    if (a.is_zero()) {
        if (deg) *deg = 0;
        return true;
    }
    int64_t d = wdeg(a.t.front().m);
    for (const auto& t : a.t)
        if (wdeg(t.m) != d) return false;
    if (deg) *deg = d;
    return true;
}

GPoly RingCtx::canonical(const GPoly& a) const {
    if (a.is_zero()) return a;
    const Field& k = F();
    TPoly denprod = k.tconst(1);
    for (const auto& t : a.t) denprod = k.tmul(denprod, t.c.den);
    std::vector<TPoly> nums(a.t.size());
    TPoly content;
    for (size_t i = 0; i < a.t.size(); ++i) {
        nums[i] = k.tmul(a.t[i].c.num, k.tdiv_exact(denprod, a.t[i].c.den));
        content = k.tgcd(content, nums[i]);
    }
    GPoly r = a;
    for (size_t i = 0; i < r.t.size(); ++i)
        r.t[i].c = k.from_tpoly(k.tdiv_exact(nums[i], content));
    uint32_t lc = r.t.front().c.num.t.front().c;
    if (lc != 1) {
        FE s = k.from_int(k.cinv(lc));
        for (auto& t : r.t) t.c = k.mul(t.c, s);
    }
    return r;
}

// --------------------------------------------------------------- parsing

namespace {

struct Parser {
    const RingCtx& R;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    GPoly expr() {
        GPoly acc = term();
        while (true) {
            if (eat('+')) acc = R.add(acc, term());
            else if (eat('-')) acc = R.sub(acc, term());
            else break;
        }
        return acc;
    }

    GPoly term() {
        GPoly acc = factor();
        while (eat('*')) acc = R.mul(acc, factor());
        return acc;
    }

    GPoly factor() {
        skip();
        if (pos >= s.size()) fail(ErrorKind::UsageError, "unexpected end of polynomial");
        if (eat('(')) {
            GPoly inner = expr();
            if (!eat(')')) fail(ErrorKind::UsageError, "missing ')' in polynomial");
            return maybe_pow(inner);
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + uint64_t(s[pos++] - '0');
            GPoly r;
            FE fe = R.F().from_int(int64_t(v % R.F().p()));
            if (!R.F().is_zero(fe)) r.t.push_back({R.mono_one(), fe});
            return maybe_pow(r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                name += s[pos++];
            uint32_t e = read_pow();
            for (size_t i = 0; i < R.ngens(); ++i)
                if (R.names()[i] == name) return R.var(i, e);
            size_t ti = R.F().var_index(name);
            if (ti != size_t(-1)) {
                GPoly r;
                r.t.push_back({R.mono_one(), R.F().from_tpoly(R.F().tvar(ti, e))});
                return r;
            }
            fail(ErrorKind::UsageError, "unknown name '" + name + "' in polynomial");
        }
        fail(ErrorKind::UsageError, std::string("unexpected character '") + c + "' in polynomial");
    }

    uint32_t read_pow() {
        if (!eat('^')) return 1;
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail(ErrorKind::UsageError, "exponent expected after '^'");
        uint32_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + uint32_t(s[pos++] - '0');
        return v;
    }

    GPoly maybe_pow(const GPoly& base) {
        uint32_t e = read_pow();
        if (e == 1) return base;
        GPoly r = R.one();
        for (uint32_t i = 0; i < e; ++i) r = R.mul(r, base);
        return r;
    }
};

} // namespace

GPoly RingCtx::parse(const std::string& text) const {
    Parser p{*this, text};
    GPoly r = p.expr();
    p.skip();
    if (p.pos != text.size())
        fail(ErrorKind::UsageError, "trailing characters in polynomial '" + text + "'");
    return r;
}

std::string RingCtx::to_string(const GPoly& a) const {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.t) {
        if (!first) os << "+";
        first = false;
        std::string cs = F().to_string(t.c);
        bool coeffPrinted = false;
        bool monoTrivial = wdeg(t.m) == 0;
        if (cs != "1" || monoTrivial) {
            bool needParens = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
            if (needParens) os << "(" << cs << ")";
            else os << cs;
            coeffPrinted = true;
        }
        bool any = false;
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (coeffPrinted || any) os << "*";
            os << names_[i];
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            any = true;
        }
    }
    return os.str();
}

// ------------------------------------------------------------- division

GPoly normal_form(const RingCtx& R, const GPoly& f, const std::vector<GPoly>& gs) {
    const Field& k = R.F();
    GPoly rem;
    GPoly cur = f;
    while (!cur.is_zero()) {
        const GTerm& lt = cur.lt();
        bool reduced = false;
        for (const auto& g : gs) {
            if (g.is_zero()) continue;
            if (!R.divides(g.lt().m, lt.m)) continue;
            GTerm q{R.mono_div(lt.m, g.lt().m), k.div(lt.c, g.lt().c)};
            cur = R.sub(cur, R.term_mul(q, g));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.t.push_back(lt);
            cur.t.erase(cur.t.begin());
        }
    }
    return rem;
}

// ------------------------------------------------------------ Buchberger

std::vector<GPoly> groebner(const RingCtx& R, std::vector<GPoly> gens) {
    const Field& k = R.F();
    std::vector<GPoly> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        GPoly r = normal_form(R, g, G);
        if (!r.is_zero()) G.push_back(R.canonical(r));
    }

    struct Pair {
        size_t i, j;
        GMono lcm;
        int64_t deg;
    };
    std::vector<Pair> queue;
    auto make_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            GMono l = R.mono_lcm(G[i].lt().m, G[j].lt().m);
            // product criterion: coprime leading terms
            if (l == R.mono_mul(G[i].lt().m, G[j].lt().m)) continue;
            queue.push_back({i, j, l, R.wdeg(l)});
        }
    };
    for (size_t j = 0; j < G.size(); ++j) make_pairs(j);

    while (!queue.empty()) {
        // normal selection: smallest lcm degree first, then index order
        size_t best = 0;
        for (size_t i = 1; i < queue.size(); ++i) {
            const Pair &a = queue[i], &b = queue[best];
            if (a.deg < b.deg || (a.deg == b.deg && (a.j < b.j || (a.j == b.j && a.i < b.i))))
                best = i;
        }
        Pair pr = queue[best];
        queue.erase(queue.begin() + long(best));

        const GPoly &f = G[pr.i], &g = G[pr.j];
        GTerm tf{R.mono_div(pr.lcm, f.lt().m), k.inv(f.lt().c)};
        GTerm tg{R.mono_div(pr.lcm, g.lt().m), k.inv(g.lt().c)};
        GPoly s = R.sub(R.term_mul(tf, f), R.term_mul(tg, g));
        GPoly r = normal_form(R, s, G);
        if (!r.is_zero()) {
            G.push_back(R.canonical(r));
            make_pairs(G.size() - 1);
        }
    }

    // prune redundant leading terms, then fully reduce: the reduced basis
    std::vector<GPoly> kept;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!R.divides(G[j].lt().m, G[i].lt().m)) continue;
            if (!(G[j].lt().m == G[i].lt().m) || j < i) redundant = true;
        }
        if (!redundant) kept.push_back(G[i]);
    }
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<GPoly> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        GPoly r = normal_form(R, kept[i], others);
        kept[i] = r.is_zero() ? r : R.canonical(r);
    }
    std::erase_if(kept, [](const GPoly& g) { return g.is_zero(); });
    std::sort(kept.begin(), kept.end(),
              [&](const GPoly& a, const GPoly& b) { return R.cmp(a.lt().m, b.lt().m) < 0; });
    return kept;
}

} // namespace gradua
