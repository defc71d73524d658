#include "topoforms/clebsch.hpp"

#include <cmath>
#include <stdexcept>

#include "topoforms/epsilon.hpp"
#include "topoforms/quadrature.hpp"
#include "topoforms/stencil.hpp"

namespace topoforms::clebsch {

using groupfield::EulerAngleField;
using groupfield::EulerForms;
using groupfield::MaurerCartanField;

ClebschPotentials ClebschPotentials::sample(const GridSpec& g, const AnalyticScalar& theta,
                                            const AnalyticScalar& alpha, const AnalyticScalar& beta) {
    ClebschPotentials out;
    out.theta = ScalarField::sample(g, theta.value);
    out.alpha = ScalarField::sample(g, alpha.value);
    out.beta = ScalarField::sample(g, beta.value);
    out.theta_fn = theta;
    out.alpha_fn = alpha;
    out.beta_fn = beta;
    return out;
}

ClebschPotentials ClebschPotentials::from_values(ScalarField theta, ScalarField alpha, ScalarField beta) {
    if (!theta.grid.same_layout(alpha.grid) || !theta.grid.same_layout(beta.grid))
        throw std::invalid_argument("ClebschPotentials: fields must share one grid");
    ClebschPotentials out;
    out.theta = std::move(theta);
    out.alpha = std::move(alpha);
    out.beta = std::move(beta);
    return out;
}

namespace {

void require_dim3(const GridSpec& g, const char* who) {
    if (g.dim != 3) throw std::invalid_argument(std::string(who) + ": requires a 3d grid");
}

void require_analytic(const ClebschPotentials& c, const char* who) {
    if (!c.has_analytic())
        throw std::invalid_argument(std::string(who) + ": analytic scheme requires gradient callbacks");
}

// gradients of one Clebsch scalar as three site arrays
std::array<std::vector<double>, 3> gradient_of(const GridSpec& g, const ScalarField& f,
                                               const std::optional<AnalyticScalar>& fn, Scheme scheme) {
    const std::size_t ns = g.num_sites();
    std::array<std::vector<double>, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[i].resize(ns);
        if (scheme == Scheme::analytic) {
            parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t s = lo; s < hi; ++s)
                    out[i][s] = fn->d(i, g.position(g.coords_of(s)));
            });
        } else {
            derive(g, f.values, out[i], i, 2);
        }
    }
    return out;
}

} // namespace

topo::GaugePotential assemble_potential(const ClebschPotentials& c, Scheme scheme) {
    const GridSpec& g = c.grid();
    require_dim3(g, "assemble_potential");
    if (scheme == Scheme::analytic) require_analytic(c, "assemble_potential");

    const std::size_t ns = g.num_sites();
    const auto dtheta = gradient_of(g, c.theta, c.theta_fn, scheme);
    const auto dbeta = gradient_of(g, c.beta, c.beta_fn, scheme);

    topo::GaugePotential A(g);
    for (int i = 0; i < 3; ++i) {
        auto comp = A.component(0, i);
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s)
                comp[s] = dtheta[i][s] + c.alpha[s] * dbeta[i][s];
        });
    }
    return A;
}

VectorField monge_b_field(const ClebschPotentials& c, Scheme scheme) {
    const GridSpec& g = c.grid();
    require_dim3(g, "monge_b_field");
    if (scheme == Scheme::analytic) require_analytic(c, "monge_b_field");

    const std::size_t ns = g.num_sites();
    const auto dalpha = gradient_of(g, c.alpha, c.alpha_fn, scheme);
    const auto dbeta = gradient_of(g, c.beta, c.beta_fn, scheme);

    VectorField B(g);
    for (const auto& t : epsilon_terms(3)) {
        auto comp = B.component(t.idx[0]);
        const auto& da = dalpha[t.idx[1]];
        const auto& db = dbeta[t.idx[2]];
        for (std::size_t s = 0; s < ns; ++s) comp[s] += t.sign * da[s] * db[s];
    }
    return B;
}

VectorField cs_surface_vector(const ClebschPotentials& c, Scheme scheme) {
    VectorField S = monge_b_field(c, scheme);
    const std::size_t ns = c.grid().num_sites();
    for (int i = 0; i < 3; ++i) {
        auto comp = S.component(i);
        for (std::size_t s = 0; s < ns; ++s) comp[s] *= c.theta[s];
    }
    return S;
}

BoundaryCheck helicity_boundary_check(const ClebschPotentials& c, Scheme scheme) {
    const GridSpec& g = c.grid();
    require_dim3(g, "helicity_boundary_check");
    if (g.boundary != Boundary::open)
        throw std::invalid_argument("helicity_boundary_check: open-boundary grids only (periodic has no surface)");

    const topo::GaugePotential A = assemble_potential(c, scheme);
    VectorField v(g);
    for (int i = 0; i < 3; ++i) {
        const auto src = A.component(0, i);
        auto dst = v.component(i);
        std::copy(src.begin(), src.end(), dst.begin());
    }

    BoundaryCheck out;
    out.volume = topo::helicity(v);
    out.surface = surface_flux(cs_surface_vector(c, scheme));
    out.gap = std::abs(out.volume - out.surface);
    return out;
}

ClebschFromSu2 clebsch_from_su2(const EulerAngleField& angles, Scheme scheme) {
    const GridSpec& g = angles.grid();
    require_dim3(g, "clebsch_from_su2");

    ClebschFromSu2 out;

    // theta' = theta, alpha' = cos(gamma), beta' = beta
    ScalarField alpha(g);
    for (std::size_t s = 0; s < g.num_sites(); ++s) alpha.values[s] = std::cos(angles.gamma[s]);
    out.potentials = ClebschPotentials::from_values(angles.theta, std::move(alpha), angles.beta);
    if (angles.has_analytic()) {
        out.potentials.theta_fn = angles.theta_fn;
        out.potentials.beta_fn = angles.beta_fn;
        AnalyticScalar alpha_fn;
        const AnalyticScalar gamma_fn = *angles.gamma_fn;
        alpha_fn.value = [gamma_fn](const Coord& x) { return std::cos(gamma_fn.value(x)); };
        for (int i = 0; i < 3; ++i)
            alpha_fn.grad[i] = [gamma_fn, i](const Coord& x) {
                return -std::sin(gamma_fn.value(x)) * gamma_fn.grad[i](x);
            };
        out.potentials.alpha_fn = std::move(alpha_fn);
    }

    // route (i): V^3 component of the Maurer-Cartan form
    const MaurerCartanField V = scheme == Scheme::analytic
                                    ? groupfield::maurer_cartan(angles)
                                    : groupfield::maurer_cartan(groupfield::from_euler(angles));
    out.A_group = topo::GaugePotential(g);
    for (int i = 0; i < 3; ++i) {
        const auto src = V.component(2, i);
        auto dst = out.A_group.component(0, i);
        std::copy(src.begin(), src.end(), dst.begin());
    }

    // route (ii): Clebsch assembly of the same data
    out.A_clebsch = assemble_potential(out.potentials, scheme);

    double gap = 0.0;
    for (std::size_t k = 0; k < out.A_group.A.size(); ++k)
        gap = std::max(gap, std::abs(out.A_group.A[k] - out.A_clebsch.A[k]));
    out.route_gap = gap;
    return out;
}

TripleRouteReport abelian_cs_group_identity(const EulerAngleField& angles, Scheme scheme) {
    const GridSpec& g = angles.grid();
    require_dim3(g, "abelian_cs_group_identity");
    const std::size_t ns = g.num_sites();

    ScalarField ada(g), mdet(g), trace(g);

    if (scheme == Scheme::analytic) {
        const EulerForms forms = groupfield::euler_analytic_forms(angles);
        const auto& eps = epsilon_terms(3);
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s) {
                double v[3][3];
                for (int a = 0; a < 3; ++a)
                    for (int i = 0; i < 3; ++i) v[a][i] = forms.V.at(a, i, s);

                // A dA with A = V^3, dA exact: pairs (01,02,12)
                const double d01 = forms.d_component(2, 0)[s];
                const double d02 = forms.d_component(2, 1)[s];
                const double d12 = forms.d_component(2, 2)[s];
                ada.values[s] = v[2][0] * d12 - v[2][1] * d02 + v[2][2] * d01;

                // -V^1 V^2 V^3 as a 3-form: -det(V^a_i)
                double det = 0.0;
                for (const auto& t : eps)
                    det += t.sign * v[0][t.idx[0]] * v[1][t.idx[1]] * v[2][t.idx[2]];
                mdet.values[s] = -det;

                // (2/3) tr[(g^-1 dg)^3] via quaternion products
                Quat p[3];
                for (int i = 0; i < 3; ++i)
                    p[i] = Quat{0.0, 0.5 * v[0][i], 0.5 * v[1][i], 0.5 * v[2][i]};
                double tr = 0.0;
                for (const auto& t : eps)
                    tr += t.sign * quat_trace(p[t.idx[0]] * p[t.idx[1]] * p[t.idx[2]]);
                trace.values[s] = (2.0 / 3.0) * tr;
            }
        });
    } else {
        const groupfield::GroupElementField gf = groupfield::from_euler(angles);
        const MaurerCartanField V = groupfield::maurer_cartan(gf);

        topo::GaugePotential A(g);
        for (int i = 0; i < 3; ++i) {
            const auto src = V.component(2, i);
            auto dst = A.component(0, i);
            std::copy(src.begin(), src.end(), dst.begin());
        }
        ada = topo::cs_density_3d(A);

        const auto& eps = epsilon_terms(3);
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s) {
                double v[3][3];
                for (int a = 0; a < 3; ++a)
                    for (int i = 0; i < 3; ++i) v[a][i] = V.at(a, i, s);
                double det = 0.0;
                for (const auto& t : eps)
                    det += t.sign * v[0][t.idx[0]] * v[1][t.idx[1]] * v[2][t.idx[2]];
                mdet.values[s] = -det;
                Quat p[3];
                for (int i = 0; i < 3; ++i)
                    p[i] = Quat{0.0, 0.5 * v[0][i], 0.5 * v[1][i], 0.5 * v[2][i]};
                double tr = 0.0;
                for (const auto& t : eps)
                    tr += t.sign * quat_trace(p[t.idx[0]] * p[t.idx[1]] * p[t.idx[2]]);
                trace.values[s] = (2.0 / 3.0) * tr;
            }
        });
    }

    TripleRouteReport rep;
    rep.lhs = volume_integral(ada);
    rep.middle = volume_integral(mdet);
    rep.rhs = volume_integral(trace);
    double g1 = 0.0, g2 = 0.0, g3 = 0.0;
    for (std::size_t s = 0; s < ns; ++s) {
        g1 = std::max(g1, std::abs(ada.values[s] - mdet.values[s]));
        g2 = std::max(g2, std::abs(ada.values[s] - trace.values[s]));
        g3 = std::max(g3, std::abs(mdet.values[s] - trace.values[s]));
    }
    rep.gap_ada_detv = g1;
    rep.gap_ada_trace = g2;
    rep.gap_detv_trace = g3;
    rep.pointwise_gap = std::max({g1, g2, g3});
    return rep;
}

} // namespace topoforms::clebsch
