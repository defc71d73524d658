#include "topoforms/stencil.hpp"

#include <stdexcept>
#include <string>

namespace topoforms {

void derive(const GridSpec& g, std::span<const double> in, std::span<double> out,
            int axis, int order) {
    if (axis < 0 || axis >= g.dim)
        throw std::invalid_argument("derive: axis " + std::to_string(axis) + " out of range for dim " +
                                    std::to_string(g.dim));
    const std::size_t ns = g.num_sites();
    if (in.size() != ns || out.size() != ns)
        throw std::invalid_argument("derive: array size does not match grid");
    if (order != 2 && order != 4)
        throw std::invalid_argument("derive: unsupported stencil order");
    if (order == 4 && g.boundary != Boundary::periodic)
        throw std::invalid_argument("derive: 4th-order stencil requires a periodic grid");

    const std::size_t stride = g.stride(axis);
    const std::size_t n = static_cast<std::size_t>(g.shape[axis]);
    const double h = g.spacing[axis];
    const double inv2h = 1.0 / (2.0 * h);
    const double inv12h = 1.0 / (12.0 * h);
    const bool periodic = g.boundary == Boundary::periodic;

    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            const std::size_t i = (s / stride) % n;
            const std::size_t line0 = s - i * stride; // site with index 0 along axis
            auto at = [&](std::size_t j) { return in[line0 + j * stride]; };

            if (order == 4) {
                const std::size_t ip1 = (i + 1) % n, ip2 = (i + 2) % n;
                const std::size_t im1 = (i + n - 1) % n, im2 = (i + n - 2) % n;
                out[s] = (-at(ip2) + 8.0 * at(ip1) - 8.0 * at(im1) + at(im2)) * inv12h;
            } else if (periodic) {
                const std::size_t ip1 = (i + 1) % n, im1 = (i + n - 1) % n;
                out[s] = (at(ip1) - at(im1)) * inv2h;
            } else if (i == 0) {
                out[s] = (-3.0 * at(0) + 4.0 * at(1) - at(2)) * inv2h;
            } else if (i == n - 1) {
                out[s] = (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) * inv2h;
            } else {
                out[s] = (at(i + 1) - at(i - 1)) * inv2h;
            }
        }
    });
}

ScalarField partial_derivative(const ScalarField& f, int axis) {
    ScalarField out(f.grid);
    derive(f.grid, f.values, out.values, axis, 2);
    return out;
}

ScalarField partial_derivative(const GridSpec& g, const AnalyticScalar& f, int axis) {
    if (axis < 0 || axis >= g.dim)
        throw std::invalid_argument("partial_derivative: axis out of range");
    if (!f.grad[axis])
        throw std::invalid_argument("partial_derivative: analytic scheme requires a gradient callback");
    return ScalarField::sample(g, f.grad[axis]);
}

} // namespace topoforms
