#pragma once

#include <functional>
#include <optional>

#include "topoforms/field.hpp"
#include "topoforms/grid.hpp"
#include "topoforms/liealg.hpp"

namespace topoforms::topo {

/// A^a_mu on a grid. n_lie = 1 is the Abelian case (no Lie index); otherwise
/// the structure constants of the algebra must be attached. Storage is
/// component-major with index a*dim + mu.
struct GaugePotential {
    GridSpec grid;
    int n_lie = 1;
    std::optional<liealg::StructureConstants> f;
    std::vector<double> A;

    GaugePotential() = default;
    explicit GaugePotential(const GridSpec& g, int lie_dim = 1,
                            std::optional<liealg::StructureConstants> sc = std::nullopt);

    static GaugePotential sample(const GridSpec& g,
                                 const std::function<double(int mu, const Coord&)>& f);

    bool abelian() const { return n_lie == 1; }
    std::span<double> component(int a, int mu);
    std::span<const double> component(int a, int mu) const;
    double at(int a, int mu, std::size_t s) const { return component(a, mu)[s]; }
};

/// F^a_{mu nu} stored on ordered pairs mu < nu (lexicographic); the lower
/// triangle is implied by antisymmetry and the diagonal is zero.
struct FieldStrength {
    GridSpec grid;
    int n_lie = 1;
    std::vector<double> F;

    FieldStrength() = default;
    explicit FieldStrength(const GridSpec& g, int lie_dim = 1);

    static int pair_count(int dim) { return dim * (dim - 1) / 2; }
    static int pair_index(int dim, int mu, int nu); // requires mu < nu

    std::span<double> component(int a, int pair);
    std::span<const double> component(int a, int pair) const;
    /// Signed lookup F^a_{mu nu} for any index order.
    double at(int a, int mu, int nu, std::size_t s) const;
};

/// F = dA (+ f^{abc} A^b A^c when non-Abelian), central differences.
FieldStrength field_strength(const GaugePotential& A);

/// Same with exact derivatives supplied: dA(a, mu, nu, x) = d_mu A^a_nu(x).
using GaugeGradFn = std::function<double(int a, int mu, int nu, const Coord&)>;
FieldStrength field_strength(const GaugePotential& A, const GaugeGradFn& dA);

} // namespace topoforms::topo
