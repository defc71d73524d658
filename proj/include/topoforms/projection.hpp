#pragma once

#include <Eigen/Dense>

#include "topoforms/gauge.hpp"
#include "topoforms/groupfield.hpp"
#include "topoforms/liealg.hpp"

namespace topoforms::projection {

using groupfield::Scheme;

/// H-connection A^a_i = kappa tr(T^a g^-1 d_i g) from an SU(2) pure gauge,
/// normalized through the T trace metric so that H = G returns the
/// Maurer-Cartan components exactly.
struct ProjectedConnection {
    topo::GaugePotential A;   // Lie index runs over the pair's T generators
    Eigen::MatrixXd weight;   // constant map A^a_i = sum_c weight(a,c) V^c_i
    double kappa = 0.0;       // scalar normalization when dim H = 1
};

/// Projects Maurer-Cartan data V of an SU(2) field onto the T generators of
/// the pair (pair.G must be 2x2, i.e. su(2)). Throws on a non-symmetric pair.
ProjectedConnection project_connection(const groupfield::MaurerCartanField& V,
                                       const liealg::SymmetricPairSpec& pair,
                                       double pair_tol = 1e-10);

struct CoincidenceReport {
    double cs_H = 0.0;      // volume integral of the H Chern-Simons density of A
    double cs_G = 0.0;      // volume integral of eps^{ijk} tr[(g^-1 dg)^3]
    double ratio = 0.0;     // cs_H / cs_G
    double constancy = 0.0; // relative std dev of the pointwise density ratio
    bool indeterminate = false;
    double kappa = 0.0;
    bool dim_condition = false; // dim G > 3 dim H, informational
};

/// Coincidence of the H- and G- Chern-Simons densities for an SU(2) group
/// field. "Coincides" is tested as pointwise proportionality with a
/// field-independent constant: the ratio is reported, its constancy across
/// sites (where |cs_G| clears density_floor * max) is the verdict.
CoincidenceReport cs_coincidence_check(const groupfield::EulerAngleField& angles,
                                       const liealg::SymmetricPairSpec& pair, Scheme scheme,
                                       double density_floor = 1e-2);

/// Same check from algebra-level Maurer-Cartan data for a larger G: the group
/// field is exp(X) of a random algebra-valued X, with g^-1 d_i g approximated
/// by d_i X + 1/2 [d_i X, X] + 1/6 [[d_i X, X], X] (the O(h^2) budget of the
/// stencil). Runs on any generator split, symmetric or not, so it serves as
/// the negative control. X is supplied as one coefficient field per generator.
CoincidenceReport cs_coincidence_check_matrix(const std::vector<ScalarField>& x_coeffs,
                                              const liealg::SymmetricPairSpec& pair,
                                              double density_floor = 1e-2);

} // namespace topoforms::projection
