#ifndef GRADUA_GPOLY_HPP
#define GRADUA_GPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gradua/field.hpp"

namespace gradua {

/// Monomial in the ring generators (dense exponent vector, fixed width).
struct GMono {
    std::vector<uint32_t> e;

    bool operator==(const GMono&) const = default;
};

struct GTerm {
    GMono m;
    FE c;
};

/// Polynomial in the ring generators over the coefficient field. Terms are
/// sorted strictly descending in the ring's weighted grevlex order.
struct GPoly {
    std::vector<GTerm> t;

    bool is_zero() const { return t.empty(); }
    const GTerm& lt() const { return t.front(); }
};

/// Polynomial-ring context: coefficient field plus named generators with
/// positive degrees. The monomial order is graded reverse lexicographic with
/// the declared generator order, graded by the generator degrees; it is fixed
/// once per ring and shared by every computation downstream.
class RingCtx {
public:
    RingCtx(FieldPtr field, std::vector<std::string> names, std::vector<int> degrees);

    const FieldPtr& field() const { return field_; }
    const Field& F() const { return *field_; }
    size_t ngens() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }

    int64_t wdeg(const GMono& m) const;
    /// >0 if a comes later (is larger) in the order, 0 on equality.
    int cmp(const GMono& a, const GMono& b) const;
    bool divides(const GMono& a, const GMono& b) const;
    GMono mono_mul(const GMono& a, const GMono& b) const;
    GMono mono_div(const GMono& b, const GMono& a) const;
    GMono mono_lcm(const GMono& a, const GMono& b) const;
    GMono mono_one() const;
    GMono mono_var(size_t i, uint32_t exp = 1) const;

    GPoly zero() const { return {}; }
    GPoly one() const;
    GPoly var(size_t i, uint32_t exp = 1) const;
    GPoly from_terms(std::vector<GTerm> terms) const; // collects and sorts
    GPoly add(const GPoly& a, const GPoly& b) const;
    GPoly sub(const GPoly& a, const GPoly& b) const;
    GPoly neg(const GPoly& a) const;
    GPoly mul(const GPoly& a, const GPoly& b) const;
    GPoly scale(const GPoly& a, const FE& c) const;
    GPoly term_mul(const GTerm& t, const GPoly& a) const;
    bool eq(const GPoly& a, const GPoly& b) const;

    /// Weighted degree if homogeneous (zero polynomial reports true, deg 0).
    bool homogeneous(const GPoly& a, int64_t* deg = nullptr) const;

    /// Clears coefficient denominators, divides out the content and makes
    /// the leading coefficient monic; the canonical unit-normal form.
    GPoly canonical(const GPoly& a) const;

    GPoly parse(const std::string& text) const;
    std::string to_string(const GPoly& a) const;

private:
    FieldPtr field_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

/// Full multivariate division remainder of f by the (ordered) set gs.
GPoly normal_form(const RingCtx& R, const GPoly& f, const std::vector<GPoly>& gs);

/// Reduced Groebner basis; result is canonically normalized and sorted by
/// ascending leading term. Inputs need not be homogeneous.
std::vector<GPoly> groebner(const RingCtx& R, std::vector<GPoly> gens);

} // namespace gradua

#endif
