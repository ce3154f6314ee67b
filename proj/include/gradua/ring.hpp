#ifndef GRADUA_RING_HPP
#define GRADUA_RING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gradua/gpoly.hpp"

namespace gradua {

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

/// Finitely generated graded-commutative connected k-algebra, presented as a
/// quotient of a weighted polynomial ring by homogeneous relations. Only
/// strictly commutative presentations are supported (characteristic two, or
/// all generators in even degree).
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    static RingPtr create(FieldPtr field, std::vector<std::string> gen_names,
                          std::vector<int> gen_degrees, std::vector<std::string> relations);
    static RingPtr create_from_polys(FieldPtr field, std::vector<std::string> gen_names,
                                     std::vector<int> gen_degrees, std::vector<GPoly> relations);

    const RingCtx& ctx() const { return ctx_; }
    const FieldPtr& field() const { return ctx_.field(); }
    const std::vector<GPoly>& relations() const { return relations_; }

    /// Reduced Groebner basis of the defining relations; cached.
    const std::vector<GPoly>& ring_groebner() const;

    /// Remainder modulo the defining relations only.
    GPoly reduce(const GPoly& f) const;

    /// Standard monomials of the quotient in one weighted degree; cached.
    const std::vector<GMono>& basis_of_degree(int64_t n) const;

    /// The same ring over an extension field obtained by appending
    /// transcendentals; relations are carried over verbatim.
    RingPtr extend_scalars(const std::vector<std::string>& new_transcendentals) const;

private:
    RingPresentation(RingCtx ctx, std::vector<GPoly> relations);

    RingCtx ctx_;
    std::vector<GPoly> relations_;
    mutable std::mutex mu_;
    mutable std::optional<std::vector<GPoly>> gb_;
    mutable std::map<int64_t, std::vector<GMono>> basisCache_;
};

/// Homogeneous ideal in a RingPresentation. Membership and normal forms are
/// computed against the Groebner basis of (relations + generators) in the
/// ambient polynomial ring; the basis is computed once per ideal.
class HomIdeal {
public:
    HomIdeal() = default;
    HomIdeal(RingPtr ring, std::vector<GPoly> gens);

    static HomIdeal parse(RingPtr ring, const std::vector<std::string>& gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<GPoly>& gens() const { return gens_; }

    /// Reduced Groebner basis of relations + generators.
    const std::vector<GPoly>& groebner_basis() const;
    GPoly normal_form(const GPoly& f) const;
    bool contains(const GPoly& f) const;
    bool is_unit_ideal() const;
    /// Equality as ideals of the ring (mutual membership).
    bool same_ideal(const HomIdeal& other) const;

private:
    struct Cache {
        std::mutex mu;
        std::shared_ptr<const std::vector<GPoly>> gb; // set once, shared by copies
    };

    RingPtr ring_;
    std::vector<GPoly> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Zero ideal of a ring.
HomIdeal zero_ideal(RingPtr ring);

/// Rejects inhomogeneous generators, then returns the reduced basis.
std::vector<GPoly> groebner_basis(const HomIdeal& ideal);

GPoly normal_form(const GPoly& f, const HomIdeal& ideal);

enum class IdealOp { Sum, Product, Colon, Saturation };

/// Sum and product are generator arithmetic. Colon and saturation are
/// computed degreewise up to the supplied bound (spec default: twice the
/// largest generator degree times a small margin), which is exact for the
/// desk-scale ideals this tool handles.
HomIdeal ideal_arith(const HomIdeal& i, const HomIdeal& j, IdealOp op, int64_t degree_bound);

/// Decides f in sqrt(ideal) by the Rabinowitsch trick in an extended ring.
bool radical_membership(const GPoly& f, const HomIdeal& ideal);

/// Hilbert series of a quotient by the given Groebner basis leading terms.
struct HilbertSeries {
    std::vector<int64_t> numerator;       // integer polynomial in t
    std::vector<int> denominator_degrees; // denominator = prod (1 - t^d)
    std::map<int64_t, int64_t> window_dims;

    int64_t dim_at(int64_t n) const;
};

HilbertSeries hilbert_series(const RingPtr& ring, const std::vector<GPoly>& extra_ideal_gens = {},
                             int64_t window_hi = 12);
int krull_dimension(const HilbertSeries& hs);
int krull_dimension(const RingPtr& ring);
/// True when the quotient is a finite-dimensional vector space.
bool is_finite_dimensional(const HilbertSeries& hs);

struct NoetherConfig {
    int max_degree = 16;
    int random_attempts = 200;
    uint64_t seed = 1;
};

/// Same-degree elements a_0..a_{d-1} whose images make the quotient by
/// p + (a) finite dimensional; d is the Krull dimension of ring/p. Reports
/// a normalization-not-found error when the bounded search fails.
std::vector<GPoly> noether_normalize(const RingPtr& ring, const HomIdeal& p,
                                     const NoetherConfig& cfg = {});

} // namespace gradua

#endif
