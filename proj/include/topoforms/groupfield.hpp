#pragma once

#include <optional>

#include "topoforms/field.hpp"
#include "topoforms/grid.hpp"
#include "topoforms/quaternion.hpp"

namespace topoforms::groupfield {

/// Derivative scheme shared by the group/Clebsch operations: second-order
/// central differences, or exact analytic callbacks threaded through.
enum class Scheme { fd, analytic };

/// SU(2)-valued lattice field stored as unit quaternions (4 reals/site).
struct GroupElementField {
    GridSpec grid; // dim 3
    std::vector<Quat> q;

    GroupElementField() = default;
    explicit GroupElementField(const GridSpec& g);
    static GroupElementField sample(const GridSpec& g, const std::function<Quat(const Coord&)>& f);

    double max_unit_violation() const;
    /// Left-multiply by a constant group element (gauge-left action).
    GroupElementField left_translated(const Quat& h) const;
    /// Pointwise product g1 * g2 on a shared grid.
    static GroupElementField product(const GroupElementField& a, const GroupElementField& b);
};

/// g = exp(s3 beta/2i) exp(s2 gamma/2i) exp(s3 theta/2i) data, optionally
/// with exact gradient callbacks for machine-precision identity checks.
struct EulerAngleField {
    ScalarField beta, gamma, theta;
    std::optional<AnalyticScalar> beta_fn, gamma_fn, theta_fn;

    static EulerAngleField sample(const GridSpec& g, const AnalyticScalar& beta,
                                  const AnalyticScalar& gamma, const AnalyticScalar& theta);
    static EulerAngleField from_values(ScalarField beta, ScalarField gamma, ScalarField theta);

    const GridSpec& grid() const { return beta.grid; }
    bool has_analytic() const { return beta_fn && gamma_fn && theta_fn; }
};

/// Components V^a_i of g^-1 dg = V^a sigma^a/2i. Storage is component-major
/// with index a*dim + i.
struct MaurerCartanField {
    GridSpec grid;
    std::vector<double> V;
    /// Largest Hermitian residue 2|scalar part| of the discrete g^-1 dg; the
    /// discrete derivative is not exactly anti-Hermitian and silently keeping
    /// that part would corrupt V^a. Zero in analytic mode.
    double hermitian_residual = 0.0;

    MaurerCartanField() = default;
    explicit MaurerCartanField(const GridSpec& g)
        : grid(g), V(static_cast<std::size_t>(3) * g.dim * g.num_sites(), 0.0) {}

    std::span<double> component(int a, int i) {
        const std::size_t ns = grid.num_sites();
        return {V.data() + (static_cast<std::size_t>(a) * grid.dim + i) * ns, ns};
    }
    std::span<const double> component(int a, int i) const {
        const std::size_t ns = grid.num_sites();
        return {V.data() + (static_cast<std::size_t>(a) * grid.dim + i) * ns, ns};
    }
    double at(int a, int i, std::size_t s) const { return component(a, i)[s]; }
};

GroupElementField from_euler(const EulerAngleField& angles);

/// V^a_i = tr(i sigma^a g^-1 d_i g) by entrywise central differences on g.
MaurerCartanField maurer_cartan(const GroupElementField& g);
/// Exact V from Euler angles with analytic gradients.
MaurerCartanField maurer_cartan(const EulerAngleField& angles);

/// Exact V plus the exact 2-form components (dV^a)_{ij}, i<j pairs (01,02,12).
/// Only first derivatives of the angles enter: the Hessian part of d_i V^a_j
/// is symmetric in (i,j) and drops out of the antisymmetrization.
struct EulerForms {
    MaurerCartanField V;
    std::vector<double> dV; // component-major, index a*3 + pair
    std::span<const double> d_component(int a, int pair) const {
        const std::size_t ns = V.grid.num_sites();
        return {dV.data() + (static_cast<std::size_t>(a) * 3 + pair) * ns, ns};
    }
};
EulerForms euler_analytic_forms(const EulerAngleField& angles);

/// Per-site norm over (a, i<j) of dV^a + 1/2 eps_abc V^b V^c, the identity a
/// pure-gauge V satisfies. FD scheme differentiates V with central stencils.
ScalarField flatness_residual(const MaurerCartanField& V);
ScalarField flatness_residual(const EulerAngleField& angles); // analytic route

struct WindingReport {
    double W = 0.0;
    long nearest_integer = 0;
    double deviation = 0.0;
    /// Normalization used: W = (1/(24 pi^2)) Int eps^{ijk} tr[(g^-1 d_i g)(g^-1 d_j g)(g^-1 d_k g)],
    /// sign fixed so the standard hedgehog (g(0) = -1, g -> +1 outward) winds +1.
    static const char* normalization();
};

/// Winding of g over a 3-torus, or an open grid where g is constant on the
/// boundary (tolerance 1e-6; throws otherwise).
WindingReport winding_number(const GroupElementField& g);

} // namespace topoforms::groupfield
