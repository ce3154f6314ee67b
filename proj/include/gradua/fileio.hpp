#ifndef GRADUA_FILEIO_HPP
#define GRADUA_FILEIO_HPP

#include <string>

#include "gradua/algebra.hpp"
#include "gradua/gmodule.hpp"
#include "gradua/ring.hpp"

namespace gradua {

/// {"field": {"char": 2, "transcendentals": ["t"]},
///  "generators": [{"name": "x", "degree": 1}, ...],
///  "relations": ["x^2+x*y+y^2", ...]}
RingPtr load_ring(const std::string& path);

/// {"generators": ["...", ...]}
HomIdeal load_ideal(const std::string& path, RingPtr ring);

/// {"ring": "<ring-file>", "generator_degrees": [0, 1],
///  "relations_matrix": [["x", "0"], ["y", "x"]]}
ModulePresentation load_module(const std::string& path, RingPtr ring_hint = nullptr);

/// {"field": {...}, "dim": n, "basis": [...], "mul": [[i, j, k, "c"], ...],
///  "unit": ["..."], optional "comul"/"counit"/"antipode"/"radical"}
AlgebraPtr load_algebra(const std::string& path);

/// {"algebra": "<algebra-file>", "dim": m, "actions": {"label": [[..]], ...}}
FDModule load_fdmodule(const std::string& path, AlgebraPtr algebra_hint = nullptr);

std::string degreewise_to_json(const DegreewiseModule& m);

} // namespace gradua

#endif
