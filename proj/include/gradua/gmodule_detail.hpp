#ifndef GRADUA_GMODULE_DETAIL_HPP
#define GRADUA_GMODULE_DETAIL_HPP

#include "gradua/gmodule.hpp"

namespace gradua::detail {

/// Basis of one degree piece of a graded free module: (generator, monomial).
struct FreeBasis {
    std::vector<std::pair<size_t, GMono>> elems;
    std::map<std::pair<size_t, std::vector<uint32_t>>, size_t> index;

    size_t find(size_t gen, const GMono& m) const;
};

FreeBasis free_basis(const RingPtr& ring, const std::vector<int64_t>& gen_degrees, int64_t n);

std::vector<FE> coords_of(const RingPtr& ring, const FreeBasis& fb, const std::vector<GPoly>& vec);

/// Coordinates on a complement of a subspace, via RREF row elimination.
struct QuotientSpace {
    Matrix rows;
    std::vector<size_t> pivots;
    std::vector<size_t> freeCoords;

    size_t dim() const { return freeCoords.size(); }
    std::vector<FE> project(std::vector<FE> v, const Field& F) const;
};

QuotientSpace make_quotient(const Matrix& columns);

struct Piece {
    FreeBasis f0;
    QuotientSpace quo;
};

Piece make_piece(const ModulePresentation& m, int64_t n);

} // namespace gradua::detail

#endif
