#ifndef GRADUA_ALGEBRA_HPP
#define GRADUA_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>

#include "gradua/matrix.hpp"

namespace gradua {

class AlgebraDatum;
using AlgebraPtr = std::shared_ptr<const AlgebraDatum>;

struct HopfData {
    // comul[i]: Delta(e_i) = sum of c * e_j (x) e_k
    std::vector<std::vector<std::tuple<uint32_t, uint32_t, FE>>> comul;
    std::vector<FE> counit;
    Matrix antipode;
};

/// Finite-dimensional algebra by structure constants, optionally with Hopf
/// data. Associativity, unit laws and (when present) the Hopf laws are
/// checked exactly at construction. Radical generators come from the
/// constructor family; self-injectivity is a constructor-family assertion.
class AlgebraDatum : public std::enable_shared_from_this<AlgebraDatum> {
public:
    static AlgebraPtr create(FieldPtr field, std::vector<std::string> basis,
                             std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul,
                             std::vector<FE> unit, std::optional<HopfData> hopf,
                             std::vector<std::vector<FE>> radical_gens, std::string name);

    const FieldPtr& field() const { return field_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::string& name() const { return name_; }
    bool has_hopf() const { return hopf_.has_value(); }
    const HopfData& hopf() const;
    const std::vector<std::vector<FE>>& radical_gens() const { return radical_gens_; }

    /// product e_i * e_j as a sparse vector
    const std::vector<std::pair<uint32_t, FE>>& mul(size_t i, size_t j) const {
        return mul_[i][j];
    }
    const std::vector<FE>& unit() const { return unit_; }

    /// left/right multiplication matrices by basis elements
    const Matrix& lmul(size_t i) const { return lmul_[i]; }
    const Matrix& rmul(size_t i) const { return rmul_[i]; }
    Matrix lmul_of(const std::vector<FE>& a) const;
    std::vector<FE> product(const std::vector<FE>& a, const std::vector<FE>& b) const;

    /// the same structure constants over an extension field with appended
    /// transcendentals
    AlgebraPtr extend_scalars(const std::vector<std::string>& new_transcendentals) const;
    /// opposite algebra (reversed multiplication); Hopf data is dropped
    AlgebraPtr opposite() const;

    /// per-algebra cache slot for derived structures (covers, resolutions);
    /// guarded by a mutex, single writer per key
    struct CacheBox;
    CacheBox& cache() const { return *cache_; }

private:
    AlgebraDatum() = default;
    void validate() const;

    FieldPtr field_;
    std::vector<std::string> basis_;
    std::vector<std::vector<std::vector<std::pair<uint32_t, FE>>>> mul_;
    std::vector<FE> unit_;
    std::optional<HopfData> hopf_;
    std::vector<std::vector<FE>> radical_gens_;
    std::string name_;
    std::vector<Matrix> lmul_, rmul_;
    std::shared_ptr<CacheBox> cache_;
};

/// group-algebra constructors (group-like Hopf structure)
AlgebraPtr group_algebra_cyclic(FieldPtr field, uint32_t n);
AlgebraPtr group_algebra_elementary_abelian(FieldPtr field, uint32_t p, uint32_t rank);
AlgebraPtr group_algebra_quaternion8(FieldPtr field);
AlgebraPtr group_algebra_dihedral8(FieldPtr field);
AlgebraPtr group_algebra_product(const AlgebraPtr& a, const AlgebraPtr& b);
AlgebraPtr klein_four_algebra(FieldPtr field);

/// restricted Borel u(b) in characteristic two: [x,y] = y, x^[2] = x,
/// y^[2] = 0; the nontrivial-modular-character example
AlgebraPtr restricted_borel_algebra(FieldPtr field);

/// Finite-dimensional module: action matrices for every algebra basis
/// element, checked against the structure constants at construction.
struct FDModule {
    AlgebraPtr algebra;
    std::vector<Matrix> action; // one square matrix per basis element

    size_t dim() const { return action.empty() ? 0 : action[0].cols(); }
    Matrix action_of(const std::vector<FE>& elem) const;
};

FDModule make_module(AlgebraPtr algebra, std::vector<Matrix> action);
FDModule trivial_module(const AlgebraPtr& a);          // via the counit
FDModule regular_module(const AlgebraPtr& a);          // A over itself
FDModule zero_module(const AlgebraPtr& a);
FDModule direct_sum(const FDModule& m, const FDModule& n);
/// submodule spanned by the given basis columns (must be action-stable)
FDModule submodule(const FDModule& m, const Matrix& basisCols);
/// quotient by an action-stable subspace
FDModule quotient_module(const FDModule& m, const Matrix& basisCols);
FDModule base_change_module(const FDModule& m, const AlgebraPtr& extended);

/// closure of the given columns under the algebra action, as a basis matrix
Matrix submodule_closure(const FDModule& m, const Matrix& seed);
Matrix radical_subspace(const FDModule& m);   // rad(A) * M
Matrix socle_subspace(const FDModule& m);     // killed by rad(A)

/// basis of Hom_A(m, n) as matrices n.dim x m.dim
std::vector<Matrix> hom_space(const FDModule& m, const FDModule& n);

/// fixed-seed random quotient of a free module, dimension capped
FDModule random_module(const AlgebraPtr& a, uint64_t seed, size_t max_dim = 12);

} // namespace gradua

#endif
