#ifndef GRADUA_GENPOINT_HPP
#define GRADUA_GENPOINT_HPP

#include "gradua/ring.hpp"

namespace gradua {

/// Degree-zero extension degree and the degree of the invertible generator
/// of the graded residue field at a closed point.
struct ResidueData {
    int degree0_extension = 0;
    int periodicity = 0;
};

/// m must be a closed point: Krull dimension of ring/m equal to one.
ResidueData residue_field_data(const RingPtr& ring, const HomIdeal& m);

struct GenPointConfig {
    /// Bound for the explicit radical-generator search and for the m cap A
    /// check; -1 means twice the largest generator degree.
    int degree_bound = -1;
    NoetherConfig noether;
};

/// Certificate for a closed point lying over p after a purely transcendental
/// extension: sheared Noether elements b_i = a_i - a_0 t_i, q = p' + (b),
/// m = sqrt(q). The radical is primarily an oracle (radical_membership
/// against q); explicit generators for m are collected by a degree-bounded
/// search. Invariants are checked degree-bounded and failures are loud.
struct GenericPointCertificate {
    RingPtr base_ring;
    HomIdeal base_prime;
    int dimension_d = 0;
    bool degenerate = false; // p was already closed: K = k and m = p

    RingPtr extended_ring; // ring over K = k(t_1..t_{d-1})
    std::vector<GPoly> noether_elements; // a_0..a_{d-1}, in the base ring
    std::vector<GPoly> shear_elements;   // b_1..b_{d-1}, over K
    HomIdeal q_ideal;
    HomIdeal m_ideal; // q generators plus any found radical generators
    ResidueData residue;

    int degree_bound_used = 0;
    std::vector<std::string> checks_passed;

    bool in_radical_of_q(const GPoly& f) const { return radical_membership(f, q_ideal); }
};

GenericPointCertificate generic_closed_point(const RingPtr& ring, const HomIdeal& p,
                                             const GenPointConfig& cfg = {});

} // namespace gradua

#endif
