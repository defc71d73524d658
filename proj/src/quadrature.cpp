#include "topoforms/quadrature.hpp"

#include <stdexcept>

namespace topoforms {

double site_weight(const GridSpec& g, const std::array<int, 4>& idx) {
    if (g.boundary == Boundary::periodic) return 1.0;
    double w = 1.0;
    for (int k = 0; k < g.dim; ++k)
        if (idx[k] == 0 || idx[k] == g.shape[k] - 1) w *= 0.5;
    return w;
}

double volume_integral(const ScalarField& f) {
    const GridSpec& g = f.grid;
    const double vol = g.cell_volume();
    if (g.boundary == Boundary::periodic)
        return vol * pairwise_sum(f.values);
    return vol * pairwise_sum(g.num_sites(), [&](std::size_t s) {
               return site_weight(g, g.coords_of(s)) * f.values[s];
           });
}

double surface_flux(const VectorField& F) {
    const GridSpec& g = F.grid;
    if (g.boundary != Boundary::periodic && g.dim == 3) {
        // fallthrough
    } else if (g.boundary == Boundary::periodic) {
        throw std::invalid_argument("surface_flux: periodic grid has no boundary");
    } else {
        throw std::invalid_argument("surface_flux: requires a 3d grid");
    }

    double total = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        const int t1 = (axis + 1) % 3, t2 = (axis + 2) % 3;
        const double area = g.spacing[t1] * g.spacing[t2];
        const std::size_t nface = static_cast<std::size_t>(g.shape[t1]) * g.shape[t2];
        for (int side = 0; side < 2; ++side) {
            const int iface = side == 0 ? 0 : g.shape[axis] - 1;
            const double sign = side == 0 ? -1.0 : 1.0; // outward normal
            total += sign * area *
                     pairwise_sum(nface, [&](std::size_t fs) {
                         std::array<int, 4> idx{};
                         idx[axis] = iface;
                         idx[t1] = static_cast<int>(fs / g.shape[t2]);
                         idx[t2] = static_cast<int>(fs % g.shape[t2]);
                         double w = 1.0;
                         if (idx[t1] == 0 || idx[t1] == g.shape[t1] - 1) w *= 0.5;
                         if (idx[t2] == 0 || idx[t2] == g.shape[t2] - 1) w *= 0.5;
                         return w * F.at(axis, g.index(idx));
                     });
        }
    }
    return total;
}

} // namespace topoforms
