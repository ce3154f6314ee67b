#ifndef GRADUA_GMODULE_HPP
#define GRADUA_GMODULE_HPP

#include <functional>
#include <map>
#include <optional>

#include "gradua/matrix.hpp"
#include "gradua/ring.hpp"

namespace gradua {

/// Finitely presented graded module: cokernel of a homogeneous matrix
/// between graded free modules. Column j is a relation; entry (i, j) is
/// homogeneous of degree (relation degree j) - (generator degree i).
struct ModulePresentation {
    RingPtr ring;
    std::vector<int64_t> gen_degrees;
    std::vector<std::vector<GPoly>> pres; // gen_degrees.size() rows
    std::vector<int64_t> rel_degrees;     // inferred at construction

    static ModulePresentation make(RingPtr ring, std::vector<int64_t> gen_degrees,
                                   std::vector<std::vector<GPoly>> pres);
    static ModulePresentation free_module(RingPtr ring, std::vector<int64_t> gen_degrees);
    /// ring / ideal as a cyclic module with its generator in degree 0.
    static ModulePresentation cyclic(RingPtr ring, const std::vector<GPoly>& ideal_gens);

    size_t ngens() const { return gen_degrees.size(); }
    size_t nrels() const { return rel_degrees.size(); }
};

/// Graded module materialized degreewise on a window. Pieces are abstract
/// coordinate spaces; action(g, n) maps the piece at n to the piece at
/// n + |g| whenever both ends lie inside the window.
struct DegreewiseModule {
    RingPtr ring;
    int64_t lo = 0, hi = -1;
    std::vector<int64_t> dims;                 // index n - lo
    std::vector<std::vector<Matrix>> act;      // [gen][n - lo]

    bool in_window(int64_t n) const { return n >= lo && n <= hi; }
    int64_t dim_at(int64_t n) const { return in_window(n) ? dims[size_t(n - lo)] : 0; }
    const Matrix& action(size_t g, int64_t n) const { return act[g][size_t(n - lo)]; }
    bool has_action(size_t g, int64_t n) const;
    std::map<int64_t, int64_t> table() const;
    DegreewiseModule restricted(int64_t nlo, int64_t nhi) const;
};

bool same_table(const DegreewiseModule& a, const DegreewiseModule& b);

/// (shift_j M)^n = M^{n+j}; the suspension convention used throughout.
DegreewiseModule shift(const DegreewiseModule& m, int64_t j);

/// Graded vector-space dual: piece at n is the dual of the piece at -n,
/// action maps are the transposes with shifted indexing.
DegreewiseModule graded_matlis_dual(const DegreewiseModule& m);

struct ExpandLimits {
    int64_t max_window_span = 4096;
};

/// Cokernel of the presentation computed degreewise by exact linear algebra.
DegreewiseModule degreewise_expand(const ModulePresentation& m, int64_t lo, int64_t hi,
                                   const ExpandLimits& limits = {});

/// Action of a homogeneous ring element on a window piece, as a matrix.
Matrix poly_action(const DegreewiseModule& m, const GPoly& f, int64_t n);

// ------------------------------------------------------------ resolutions

/// Graded free resolution built degreewise: generator degrees per step and
/// the connecting matrices with polynomial entries. Kernel generators are
/// collected up to the degree cap; new generators are always chosen in a
/// complement of R_{>=1} times the earlier ones.
struct GradedResolution {
    RingPtr ring;
    std::vector<std::vector<int64_t>> step_degrees; // step_degrees[0] = F_0 gens
    std::vector<std::vector<std::vector<GPoly>>> maps; // maps[i]: F_{i+1} -> F_i
    int64_t degree_cap = 0;
};

GradedResolution resolve(const ModulePresentation& m, size_t length, int64_t degree_cap);

/// Ext^i(m, n) degreewise on [lo, hi], from a free resolution of m.
DegreewiseModule ext_modules(const ModulePresentation& m, const ModulePresentation& n, size_t i,
                             int64_t lo, int64_t hi);

// -------------------------------------------------------- local cohomology

struct LocalCohomologyConfig {
    int s_cap = 12;
    int stable_runs = 3;
};

struct LocalCohomology {
    std::vector<DegreewiseModule> h; // h[i], 0 <= i <= d
    int stabilized_at = 0;           // first s of the stable run
    std::vector<GPoly> noether_system;
};

/// H^i at the irrelevant maximal ideal as the stabilized colimit of
/// Ext^i(R/(u_1^s..u_d^s), M) over s. Throws a non-stabilized error carrying
/// the partial tables in the message when the s-cap is hit. A caller-supplied
/// Noether system overrides the default search (the tables are independent
/// of the choice).
LocalCohomology local_cohomology_irrelevant(const ModulePresentation& m, int64_t lo, int64_t hi,
                                            const LocalCohomologyConfig& cfg = {},
                                            const std::vector<GPoly>* noether_system = nullptr);

/// Torsion submodule dimensions computed independently (iterated kernels of
/// powers of the Noether system); test oracle for H^0.
std::map<int64_t, int64_t> torsion_submodule_table(const ModulePresentation& m, int64_t lo,
                                                   int64_t hi);

struct GorensteinReport {
    RingPtr ring;
    int dimension = 0;       // Krull dimension
    int64_t a_invariant = 0; // top degree of H^d on the window
    bool pass = false;
    std::map<int64_t, int64_t> hd_table;
    std::map<int64_t, int64_t> dual_table; // dual of the ring, twisted to match
    std::string detail;
};

GorensteinReport gorenstein_check_irrelevant(const RingPtr& ring, int64_t lo = -8, int64_t hi = 8,
                                             const LocalCohomologyConfig& cfg = {});

// -------------------------------------------------- localization and hulls

struct LocalizeConfig {
    int max_power = 16;
    int stable_runs = 2;
};

/// Localization inverting a homogeneous element u: pieces are stabilized
/// images along multiplication by u, with induced action maps. The expander
/// callback supplies the base module on whatever window is needed.
DegreewiseModule localize_invert(
    const std::function<DegreewiseModule(int64_t, int64_t)>& expand, const GPoly& u, int64_t lo,
    int64_t hi, const LocalizeConfig& cfg = {});

/// Injective hull of the residue field at a closed point of a Krull
/// dimension one ring, as the graded dual of the localized ring.
DegreewiseModule injective_hull_closed_point(const RingPtr& ring, const HomIdeal& m, int64_t lo,
                                             int64_t hi);

struct HomIntoInjectiveConfig {
    int s_cap = 8;
    LocalizeConfig localize;
};

/// Hom_A(N, I(m)) for an m-torsion N (certified along the way), computed
/// without materializing I(m): graded dual of (N / m^s N) localized at the
/// Noether element of A/m.
DegreewiseModule hom_into_injective(const ModulePresentation& n, const HomIdeal& m, int64_t lo,
                                    int64_t hi, const HomIntoInjectiveConfig& cfg = {});

/// Generic rank at the zero prime of a domain: rank over the graded fraction
/// field via the presentation matrix (largest nonvanishing minor).
int64_t local_rank_at_zero(const ModulePresentation& m);

} // namespace gradua

#endif
