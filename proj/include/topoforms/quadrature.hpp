#pragma once

#include "topoforms/field.hpp"

namespace topoforms {

/// Quadrature weight of one site: 1 on periodic grids (plain Riemann sum,
/// spectrally accurate for band-limited data), trapezoidal (1/2 at each open
/// face, product over axes) on open grids.
double site_weight(const GridSpec& g, const std::array<int, 4>& idx);

/// Integral of f over the grid: weighted pairwise sum times the cell volume.
double volume_integral(const ScalarField& f);

/// Net outward flux of F through the six boundary faces of an open 3d grid,
/// trapezoidal weights on the face directions.
double surface_flux(const VectorField& F);

} // namespace topoforms
