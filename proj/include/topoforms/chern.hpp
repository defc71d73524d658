#pragma once

#include "topoforms/gauge.hpp"

namespace topoforms::topo {

/// 4d Chern-Pontryagin density (1/4) eps^{mu nu alpha beta} F_{mu nu} F_{alpha beta},
/// Lie index summed. Closed form over the three disjoint pair couplings; the
/// test suite checks it against the naive 24-permutation epsilon sum.
ScalarField cp_density_4d(const FieldStrength& F);

/// 2d Chern-Pontryagin density (1/2) eps^{mu nu} F_{mu nu} = F_01 (Abelian).
ScalarField cp_density_2d(const FieldStrength& F);

/// Chern-Simons (anomaly) current. 2d Abelian: C^mu = eps^{mu nu} A_nu.
/// 4d: C^mu = eps^{mu alpha beta gamma} (A^a_alpha d_beta A^a_gamma
///            + (1/3) f^{abc} A^a_alpha A^b_beta A^c_gamma).
VectorField cs_current(const GaugePotential& A);

/// Per-site d_mu C^mu - CP(A).
ScalarField divergence_identity_field(const GaugePotential& A);
/// RMS norm of the above; stencil-exact zero in 2d, O(h^2) in 4d.
double divergence_identity_residual(const GaugePotential& A);

/// 3d Chern-Simons density eps^{ijk}(A^a_i d_j A^a_k + (1/3) f^{abc} A^a_i A^b_j A^c_k).
/// Periodic grids use the 4th-order stencil (see curl_order).
ScalarField cs_density_3d(const GaugePotential& A);

/// 1d Chern-Simons term: the single component A_1 itself.
ScalarField cs_1d(const GaugePotential& A);

/// Curl of a 3-vector field with the curl_order stencil.
VectorField curl(const VectorField& v);

/// Magnetic helicity / kinetic vorticity integral of v . (curl v). Computed
/// as the volume integral of the Abelian 3d CS density of v (the identical
/// expression with indices reshuffled).
double helicity(const VectorField& v);

} // namespace topoforms::topo
