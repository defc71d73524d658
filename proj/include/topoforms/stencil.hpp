#pragma once

#include <span>

#include "topoforms/field.hpp"
#include "topoforms/grid.hpp"

namespace topoforms {

/// Finite-difference derivative of one component array along `axis`.
/// order 2: central stencil, periodic wraparound or one-sided second-order at
/// open faces. order 4: central stencil, periodic grids only.
void derive(const GridSpec& g, std::span<const double> in, std::span<double> out,
            int axis, int order = 2);

/// Stencil order used by curl-type kernels: periodic grids take the 4th-order
/// stencil, open grids stay 2nd order (one-sided closures would dominate).
inline int curl_order(const GridSpec& g) { return g.boundary == Boundary::periodic ? 4 : 2; }

/// d f / d x_axis with the default second-order scheme.
ScalarField partial_derivative(const ScalarField& f, int axis);

/// Analytic-callback scheme: samples a supplied exact derivative on the grid.
ScalarField partial_derivative(const GridSpec& g, const AnalyticScalar& f, int axis);

} // namespace topoforms
