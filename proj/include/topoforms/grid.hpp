#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace topoforms {

enum class Boundary { periodic, open };

/// Position of a grid site in physical coordinates (axis k at index i is
/// i * spacing[k]; generators bake any origin shift into their callbacks).
using Coord = std::array<double, 4>;

/// Regular sample grid in d = 1..4 dimensions. Immutable after construction.
struct GridSpec {
    int dim = 0;
    std::array<int, 4> shape{};      // sites per axis, entries beyond dim unused
    std::array<double, 4> spacing{}; // step h per axis, > 0
    Boundary boundary = Boundary::periodic;

    GridSpec() = default;
    GridSpec(int d, std::array<int, 4> n, std::array<double, 4> h, Boundary b)
        : dim(d), shape(n), spacing(h), boundary(b) {
        validate();
    }

    /// Uniform grid: same N and h on every axis.
    static GridSpec uniform(int d, int n, double h, Boundary b) {
        std::array<int, 4> shape{};
        std::array<double, 4> spacing{};
        for (int k = 0; k < d; ++k) { shape[k] = n; spacing[k] = h; }
        return GridSpec(d, shape, spacing, b);
    }

    /// Periodic grid covering [0, extent) with n sites per axis.
    static GridSpec periodic_box(int d, int n, double extent) {
        return uniform(d, n, extent / n, Boundary::periodic);
    }

    /// Open grid covering [0, extent] with n sites per axis (h = extent/(n-1)).
    static GridSpec open_box(int d, int n, double extent) {
        return uniform(d, n, extent / (n - 1), Boundary::open);
    }

    void validate() const {
        if (dim < 1 || dim > 4)
            throw std::invalid_argument("GridSpec: dim must be in {1,2,3,4}");
        for (int k = 0; k < dim; ++k) {
            if (shape[k] < 4)
                throw std::invalid_argument("GridSpec: shape[" + std::to_string(k) +
                                            "] < 4, central stencil does not fit");
            if (!(spacing[k] > 0.0) || !(spacing[k] < 1e300))
                throw std::invalid_argument("GridSpec: spacing must be positive and finite");
        }
    }

    std::size_t num_sites() const {
        std::size_t n = 1;
        for (int k = 0; k < dim; ++k) n *= static_cast<std::size_t>(shape[k]);
        return n;
    }

    /// Row-major stride of axis k (axis 0 slowest).
    std::size_t stride(int k) const {
        std::size_t s = 1;
        for (int j = k + 1; j < dim; ++j) s *= static_cast<std::size_t>(shape[j]);
        return s;
    }

    std::size_t index(const std::array<int, 4>& idx) const {
        std::size_t s = 0;
        for (int k = 0; k < dim; ++k) s = s * static_cast<std::size_t>(shape[k]) + static_cast<std::size_t>(idx[k]);
        return s;
    }

    std::array<int, 4> coords_of(std::size_t site) const {
        std::array<int, 4> idx{};
        for (int k = dim - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(site % static_cast<std::size_t>(shape[k]));
            site /= static_cast<std::size_t>(shape[k]);
        }
        return idx;
    }

    Coord position(const std::array<int, 4>& idx) const {
        Coord x{};
        for (int k = 0; k < dim; ++k) x[k] = idx[k] * spacing[k];
        return x;
    }

    double cell_volume() const {
        double v = 1.0;
        for (int k = 0; k < dim; ++k) v *= spacing[k];
        return v;
    }

    /// Axis extent: N*h for periodic (covers [0, Nh)), (N-1)*h for open.
    double extent(int k) const {
        return boundary == Boundary::periodic ? shape[k] * spacing[k]
                                              : (shape[k] - 1) * spacing[k];
    }

    bool same_layout(const GridSpec& o) const {
        if (dim != o.dim || boundary != o.boundary) return false;
        for (int k = 0; k < dim; ++k)
            if (shape[k] != o.shape[k] || spacing[k] != o.spacing[k]) return false;
        return true;
    }

    /// Halve every spacing while keeping the extent: N -> 2N periodic, 2N-1 open.
    GridSpec refined() const {
        GridSpec g = *this;
        for (int k = 0; k < dim; ++k) {
            g.shape[k] = boundary == Boundary::periodic ? 2 * shape[k] : 2 * shape[k] - 1;
            g.spacing[k] = 0.5 * spacing[k];
        }
        return g;
    }
};

inline const char* to_string(Boundary b) {
    return b == Boundary::periodic ? "periodic" : "open";
}

inline Boundary boundary_from_string(const std::string& s) {
    if (s == "periodic") return Boundary::periodic;
    if (s == "open") return Boundary::open;
    throw std::invalid_argument("unknown boundary kind: " + s);
}

} // namespace topoforms
