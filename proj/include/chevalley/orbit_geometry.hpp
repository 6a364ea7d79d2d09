#pragma once

#include "chevalley/parabolic.hpp"

namespace chevalley {

// Dimension of the orbit of x in u_i under the full Levi (including the
// torus): the rank of l -> [l, x]. x must be supported on the roots of u_i.
int orbit_dimension(const ChevalleyBasis& basis, const ParabolicGrading& g, int i,
                    const AlgebraElement& x);

struct SL2Triple {
  AlgebraElement e, h, f;
};

// Completes a nilpotent element supported on positive roots to an sl2 triple
// (e, h, f). When the direct Cartan ansatz fails, e is conjugated by
// exponentials of positive root vectors (a bounded deterministic schedule)
// and the triple is pulled back, so the returned triple always contains the
// original e. Throws std::runtime_error when the schedule is exhausted.
SL2Triple jm_triple(const ChevalleyBasis& basis, const AlgebraElement& e);

// Weighted Dynkin diagram of the nilpotent orbit through e: the values
// alpha_j(h) of a Cartan h from an sl2 triple, moved to the dominant chamber.
// Entries are always 0, 1 or 2.
std::vector<int> weighted_dynkin(const ChevalleyBasis& basis, const AlgebraElement& e);

// Dimension of the adjoint orbit with the given weighted Dynkin diagram:
// dim g - dim g_0(h) - dim g_1(h).
long nilpotent_orbit_dim(const RootSystem& sys, const std::vector<int>& wdd);

// Weighted Dynkin diagram of the minimal (highest-root) nilpotent orbit.
std::vector<int> minimal_orbit_wdd(const RootSystem& sys);

bool is_minimal_orbit(const RootSystem& sys, const std::vector<int>& wdd);
bool is_minimal_orbit(const ChevalleyBasis& basis, const AlgebraElement& e);

// Matrix of ad(x) over the basis (H_1..H_n, X_0..X_{2R-1}); its rank is an
// independent route to the adjoint orbit dimension.
Mat ad_matrix(const ChevalleyBasis& basis, const AlgebraElement& x);

// exp(ad(t X_gamma)) applied to x; exact, terminates because ad of a root
// vector is nilpotent.
AlgebraElement exp_ad_root(const ChevalleyBasis& basis, int gamma, const Rat& t,
                           const AlgebraElement& x);

}  // namespace chevalley
