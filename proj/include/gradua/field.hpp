#ifndef GRADUA_FIELD_HPP
#define GRADUA_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gradua/error.hpp"

namespace gradua {

/// Coefficient field description: F_p or a purely transcendental extension
/// F_p(t_1,...,t_r).
struct FieldDescriptor {
    uint32_t characteristic = 2;
    std::vector<std::string> transcendentals;

    bool operator==(const FieldDescriptor&) const = default;
};

bool is_prime(uint32_t n);

/// Monomial in the transcendentals, as a dense exponent vector.
struct TMono {
    std::vector<uint32_t> e;

    uint64_t degree() const;
    bool operator==(const TMono&) const = default;
};

// degrevlex; returns <0, 0, >0 like strcmp
int tmono_cmp(const TMono& a, const TMono& b);
bool tmono_divides(const TMono& a, const TMono& b); // a | b
TMono tmono_mul(const TMono& a, const TMono& b);
TMono tmono_div(const TMono& b, const TMono& a);    // b / a, assumes a | b

/// Polynomial over F_p in the transcendentals. Terms are kept sorted in
/// strictly descending degrevlex order; coefficients are nonzero residues.
struct TPoly {
    struct Term {
        TMono m;
        uint32_t c = 0;
    };
    std::vector<Term> t;

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].m.degree() == 0); }
    uint32_t constant_value() const { return t.empty() ? 0u : t[0].c; }
    uint64_t degree() const { return t.empty() ? 0 : t.front().m.degree(); }
};

/// Element of F_p(t_1,...,t_r), kept in canonical form: gcd(num, den) = 1,
/// den has leading coefficient 1, zero is 0/1.
struct FE {
    TPoly num;
    TPoly den;
};

/// Arithmetic context for one field descriptor. All scalar values (TPoly,
/// FE) are plain data; every operation goes through a Field instance.
class Field {
public:
    explicit Field(FieldDescriptor d);

    const FieldDescriptor& desc() const { return desc_; }
    uint32_t p() const { return desc_.characteristic; }
    size_t nvars() const { return desc_.transcendentals.size(); }

    // residues mod p
    uint32_t cadd(uint32_t a, uint32_t b) const { return (a + b) % p_; }
    uint32_t csub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
    uint32_t cmul(uint32_t a, uint32_t b) const { return uint32_t((uint64_t(a) * b) % p_); }
    uint32_t cneg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t cinv(uint32_t a) const;

    // polynomials in the transcendentals
    TPoly tzero() const { return {}; }
    TPoly tconst(uint64_t c) const;
    TPoly tvar(size_t i, uint32_t exp = 1) const;
    TPoly tadd(const TPoly& a, const TPoly& b) const;
    TPoly tsub(const TPoly& a, const TPoly& b) const;
    TPoly tneg(const TPoly& a) const;
    TPoly tmul(const TPoly& a, const TPoly& b) const;
    TPoly tscale(const TPoly& a, uint32_t c) const;
    /// Exact division; errors out if b does not divide a.
    TPoly tdiv_exact(const TPoly& a, const TPoly& b) const;
    /// gcd, normalized to leading coefficient 1. gcd(0, b) = monic b.
    TPoly tgcd(const TPoly& a, const TPoly& b) const;
    TPoly tmonic(const TPoly& a) const;
    bool teq(const TPoly& a, const TPoly& b) const;

    // field elements
    FE zero() const;
    FE one() const;
    FE from_int(int64_t n) const;
    FE from_tpoly(TPoly n) const;
    /// Builds n/d in canonical form; d = 0 is a malformed-element error.
    FE make(TPoly n, TPoly d) const;
    FE normalize(const FE& a) const { return make(a.num, a.den); }

    FE add(const FE& a, const FE& b) const;
    FE sub(const FE& a, const FE& b) const;
    FE neg(const FE& a) const;
    FE mul(const FE& a, const FE& b) const;
    FE div(const FE& a, const FE& b) const;
    FE inv(const FE& a) const;
    bool is_zero(const FE& a) const { return a.num.is_zero(); }
    bool is_one(const FE& a) const;
    bool eq(const FE& a, const FE& b) const;

    std::string to_string(const TPoly& a) const;
    std::string to_string(const FE& a) const;

    /// Index of a transcendental by name, or npos.
    size_t var_index(const std::string& name) const;

private:
    FieldDescriptor desc_;
    uint32_t p_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(FieldDescriptor d);
/// F_p with no transcendentals.
FieldPtr prime_field(uint32_t p);
/// F_p(t_1,...,t_r) with the given variable names.
FieldPtr rational_function_field(uint32_t p, std::vector<std::string> vars);

} // namespace gradua

#endif
