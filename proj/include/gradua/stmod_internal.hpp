#ifndef GRADUA_STMOD_INTERNAL_HPP
#define GRADUA_STMOD_INTERNAL_HPP

#include <map>

#include "gradua/stmod.hpp"

namespace gradua {

/// Per-algebra cache of derived structures. One mutex, single writer per
/// entry; entries are immutable once published.
struct AlgebraDatum::CacheBox {
    std::mutex mu;
    std::shared_ptr<const std::vector<FDModule>> indecomposable_projectives;
    std::shared_ptr<const ResolutionDatum> resolution;
    std::shared_ptr<const AlgebraDatum> opposite;
    std::shared_ptr<const FDModule> dual_regular; // D(A) with its two actions
    std::shared_ptr<const std::vector<Matrix>> dual_regular_right;
    // chain lifts keyed by (degree, functional fingerprint)
    std::map<std::pair<size_t, std::string>, std::shared_ptr<const std::vector<Matrix>>> lifts;
};

FDModule make_module_unchecked(AlgebraPtr algebra, std::vector<Matrix> action);

/// complement coordinates modulo an action-stable subspace
struct ModQuotient {
    Matrix rows;                // RREF rows of the subspace
    std::vector<size_t> pivots;
    std::vector<size_t> freeCoords;

    std::vector<FE> project(std::vector<FE> v, const Field& F) const;
    Matrix project_matrix(const Matrix& columns, const Field& F) const;
};

ModQuotient mod_quotient(const Matrix& subspaceCols);

} // namespace gradua

#endif
