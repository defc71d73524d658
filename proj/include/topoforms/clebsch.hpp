#pragma once

#include <optional>

#include "topoforms/chern.hpp"
#include "topoforms/field.hpp"
#include "topoforms/groupfield.hpp"

namespace topoforms::clebsch {

using groupfield::Scheme;

/// Clebsch/Monge data (theta, alpha, beta) for A_i = d_i theta + alpha d_i beta,
/// optionally with exact gradient callbacks.
struct ClebschPotentials {
    ScalarField theta, alpha, beta;
    std::optional<AnalyticScalar> theta_fn, alpha_fn, beta_fn;

    static ClebschPotentials sample(const GridSpec& g, const AnalyticScalar& theta,
                                    const AnalyticScalar& alpha, const AnalyticScalar& beta);
    static ClebschPotentials from_values(ScalarField theta, ScalarField alpha, ScalarField beta);

    const GridSpec& grid() const { return theta.grid; }
    bool has_analytic() const { return theta_fn && alpha_fn && beta_fn; }
};

/// A_i = d_i theta + alpha d_i beta.
topo::GaugePotential assemble_potential(const ClebschPotentials& c, Scheme scheme);

/// S^i = theta eps^{ijk} d_j alpha d_k beta = theta (grad alpha x grad beta)^i,
/// the vector whose divergence reproduces the Abelian CS density.
VectorField cs_surface_vector(const ClebschPotentials& c, Scheme scheme);

/// B = grad alpha x grad beta.
VectorField monge_b_field(const ClebschPotentials& c, Scheme scheme);

struct BoundaryCheck {
    double volume = 0.0;  // Int A . B
    double surface = 0.0; // Int dS . theta B
    double gap = 0.0;
};

/// Volume helicity against the boundary surface integral of theta B on an
/// open 3d grid. The gap is O(h^2).
BoundaryCheck helicity_boundary_check(const ClebschPotentials& c, Scheme scheme = Scheme::fd);

/// Clebsch data regained from an SU(2) Euler-angle field:
/// theta' = theta, alpha' = cos(gamma), beta' = beta, and the potential built
/// two ways (V^3 of g^-1 dg vs the Clebsch assembly), which must agree.
struct ClebschFromSu2 {
    ClebschPotentials potentials;
    topo::GaugePotential A_group;   // route (i): tr(i s3 g^-1 dg)
    topo::GaugePotential A_clebsch; // route (ii): d theta' + alpha' d beta'
    double route_gap = 0.0;         // max-norm difference
};
ClebschFromSu2 clebsch_from_su2(const groupfield::EulerAngleField& angles, Scheme scheme);

/// The Abelian CS density evaluated along three routes:
/// A dA, -V^1 V^2 V^3 (= -det V), and (2/3) tr(g^-1 dg)^3.
struct TripleRouteReport {
    double lhs = 0.0; // volume integral of A dA
    double rhs = 0.0; // volume integral of (2/3) tr(g^-1 dg)^3
    double middle = 0.0; // volume integral of -det V
    double gap_ada_detv = 0.0;
    double gap_ada_trace = 0.0;
    double gap_detv_trace = 0.0;
    double pointwise_gap = 0.0; // max of the three
};
TripleRouteReport abelian_cs_group_identity(const groupfield::EulerAngleField& angles, Scheme scheme);

} // namespace topoforms::clebsch
