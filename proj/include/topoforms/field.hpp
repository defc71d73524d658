#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "topoforms/grid.hpp"
#include "topoforms/sum.hpp"

namespace topoforms {

using PointFn = std::function<double(const Coord&)>;

/// Exact scalar field with per-axis derivative callbacks; threads machine
/// precision through identity checks that would otherwise see O(h^2) noise.
struct AnalyticScalar {
    PointFn value;
    std::array<PointFn, 4> grad{};

    double d(int axis, const Coord& x) const {
        if (!grad[axis]) throw std::invalid_argument("AnalyticScalar: missing gradient callback");
        return grad[axis](x);
    }
};

struct ScalarField {
    GridSpec grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const GridSpec& g, double fill = 0.0)
        : grid(g), values(g.num_sites(), fill) {}
    ScalarField(const GridSpec& g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.num_sites())
            throw std::invalid_argument("ScalarField: value count != product of shape");
    }

    static ScalarField sample(const GridSpec& g, const PointFn& f) {
        ScalarField out(g);
        parallel_for(g.num_sites(), [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s)
                out.values[s] = f(g.position(g.coords_of(s)));
        });
        return out;
    }

    double& operator[](std::size_t s) { return values[s]; }
    double operator[](std::size_t s) const { return values[s]; }
};

/// One real component per site per axis index; component-major storage
/// (component varies slowest, sites row-major within each component block).
struct VectorField {
    GridSpec grid;
    std::vector<double> data;

    VectorField() = default;
    explicit VectorField(const GridSpec& g) : grid(g), data(g.num_sites() * g.dim, 0.0) {}

    static VectorField sample(const GridSpec& g, const std::function<double(int, const Coord&)>& f) {
        VectorField out(g);
        const std::size_t ns = g.num_sites();
        for (int c = 0; c < g.dim; ++c) {
            parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t s = lo; s < hi; ++s)
                    out.data[c * ns + s] = f(c, g.position(g.coords_of(s)));
            });
        }
        return out;
    }

    std::span<double> component(int c) {
        return {data.data() + static_cast<std::size_t>(c) * grid.num_sites(), grid.num_sites()};
    }
    std::span<const double> component(int c) const {
        return {data.data() + static_cast<std::size_t>(c) * grid.num_sites(), grid.num_sites()};
    }

    double at(int c, std::size_t s) const { return data[c * grid.num_sites() + s]; }
    double& at(int c, std::size_t s) { return data[c * grid.num_sites() + s]; }
};

} // namespace topoforms
