#include "topoforms/groupfield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "topoforms/epsilon.hpp"
#include "topoforms/quadrature.hpp"
#include "topoforms/stencil.hpp"

namespace topoforms::groupfield {

namespace {

void require_dim3(const GridSpec& g, const char* who) {
    if (g.dim != 3) throw std::invalid_argument(std::string(who) + ": group fields live on 3d grids");
}

} // namespace

GroupElementField::GroupElementField(const GridSpec& g) : grid(g), q(g.num_sites()) {
    require_dim3(g, "GroupElementField");
}

GroupElementField GroupElementField::sample(const GridSpec& g,
                                            const std::function<Quat(const Coord&)>& f) {
    GroupElementField out(g);
    parallel_for(g.num_sites(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s)
            out.q[s] = f(g.position(g.coords_of(s))).normalized();
    });
    return out;
}

double GroupElementField::max_unit_violation() const {
    double m = 0.0;
    for (const Quat& v : q) m = std::max(m, std::abs(v.norm() - 1.0));
    return m;
}

GroupElementField GroupElementField::left_translated(const Quat& h) const {
    GroupElementField out = *this;
    for (Quat& v : out.q) v = h * v;
    return out;
}

GroupElementField GroupElementField::product(const GroupElementField& a, const GroupElementField& b) {
    if (!a.grid.same_layout(b.grid))
        throw std::invalid_argument("GroupElementField::product: grids differ");
    GroupElementField out = a;
    for (std::size_t s = 0; s < out.q.size(); ++s) out.q[s] = a.q[s] * b.q[s];
    return out;
}

EulerAngleField EulerAngleField::sample(const GridSpec& g, const AnalyticScalar& beta,
                                        const AnalyticScalar& gamma, const AnalyticScalar& theta) {
    EulerAngleField out;
    out.beta = ScalarField::sample(g, beta.value);
    out.gamma = ScalarField::sample(g, gamma.value);
    out.theta = ScalarField::sample(g, theta.value);
    out.beta_fn = beta;
    out.gamma_fn = gamma;
    out.theta_fn = theta;
    return out;
}

EulerAngleField EulerAngleField::from_values(ScalarField beta, ScalarField gamma, ScalarField theta) {
    if (!beta.grid.same_layout(gamma.grid) || !beta.grid.same_layout(theta.grid))
        throw std::invalid_argument("EulerAngleField: angle fields must share one grid");
    EulerAngleField out;
    out.beta = std::move(beta);
    out.gamma = std::move(gamma);
    out.theta = std::move(theta);
    return out;
}

GroupElementField from_euler(const EulerAngleField& angles) {
    const GridSpec& g = angles.grid();
    require_dim3(g, "from_euler");
    GroupElementField out(g);
    parallel_for(g.num_sites(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            const Quat zb = Quat::axis_angle(0, 0, 1, angles.beta[s]);
            const Quat yg = Quat::axis_angle(0, 1, 0, angles.gamma[s]);
            const Quat zt = Quat::axis_angle(0, 0, 1, angles.theta[s]);
            out.q[s] = (zb * yg * zt).normalized();
        }
    });
    return out;
}

MaurerCartanField maurer_cartan(const GroupElementField& g) {
    const GridSpec& grid = g.grid;
    const std::size_t ns = grid.num_sites();

    // entrywise derivative of the four quaternion components
    std::array<std::vector<double>, 4> comp;
    for (auto& c : comp) c.resize(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        comp[0][s] = g.q[s].w;
        comp[1][s] = g.q[s].x;
        comp[2][s] = g.q[s].y;
        comp[3][s] = g.q[s].z;
    }

    MaurerCartanField out(grid);
    std::vector<double> herm(ns * grid.dim, 0.0);
    std::array<std::vector<double>, 4> dq;
    for (auto& c : dq) c.resize(ns);

    for (int i = 0; i < grid.dim; ++i) {
        for (int c = 0; c < 4; ++c) derive(grid, comp[c], dq[c], i, 2);
        auto v1 = out.component(0, i);
        auto v2 = out.component(1, i);
        auto v3 = out.component(2, i);
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s) {
                const Quat d{dq[0][s], dq[1][s], dq[2][s], dq[3][s]};
                const Quat p = g.q[s].conj() * d; // g^-1 d_i g
                v1[s] = 2.0 * p.x;
                v2[s] = 2.0 * p.y;
                v3[s] = 2.0 * p.z;
                herm[i * ns + s] = 2.0 * p.w;
            }
        });
    }
    out.hermitian_residual = max_abs(herm);
    return out;
}

namespace {

// V^a_j = M(a,k) d_j phi_k with phi = (beta, gamma, theta):
//   V1 = -sin g cos t  dbeta + sin t dgamma
//   V2 =  sin g sin t  dbeta + cos t dgamma
//   V3 =  cos g        dbeta + dtheta
struct AngleMatrix {
    double m[3][3];
    double dgamma[3][3]; // dM/dgamma
    double dtheta[3][3]; // dM/dtheta

    AngleMatrix(double gamma, double theta) {
        const double sg = std::sin(gamma), cg = std::cos(gamma);
        const double st = std::sin(theta), ct = std::cos(theta);
        double m0[3][3] = {{-sg * ct, st, 0}, {sg * st, ct, 0}, {cg, 0, 1}};
        double dg[3][3] = {{-cg * ct, 0, 0}, {cg * st, 0, 0}, {-sg, 0, 0}};
        double dt[3][3] = {{sg * st, ct, 0}, {sg * ct, -st, 0}, {0, 0, 0}};
        std::copy(&m0[0][0], &m0[0][0] + 9, &m[0][0]);
        std::copy(&dg[0][0], &dg[0][0] + 9, &dgamma[0][0]);
        std::copy(&dt[0][0], &dt[0][0] + 9, &dtheta[0][0]);
    }
};

void require_analytic(const EulerAngleField& a, const char* who) {
    if (!a.has_analytic())
        throw std::invalid_argument(std::string(who) +
                                    ": euler-analytic scheme requires gradient callbacks");
}

} // namespace

MaurerCartanField maurer_cartan(const EulerAngleField& angles) {
    require_analytic(angles, "maurer_cartan");
    const GridSpec& grid = angles.grid();
    require_dim3(grid, "maurer_cartan");
    MaurerCartanField out(grid);
    const std::size_t ns = grid.num_sites();
    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            const Coord x = grid.position(grid.coords_of(s));
            const AngleMatrix M(angles.gamma[s], angles.theta[s]);
            for (int j = 0; j < 3; ++j) {
                const double dphi[3] = {angles.beta_fn->d(j, x), angles.gamma_fn->d(j, x),
                                        angles.theta_fn->d(j, x)};
                for (int a = 0; a < 3; ++a)
                    out.component(a, j)[s] =
                        M.m[a][0] * dphi[0] + M.m[a][1] * dphi[1] + M.m[a][2] * dphi[2];
            }
        }
    });
    out.hermitian_residual = 0.0;
    return out;
}

EulerForms euler_analytic_forms(const EulerAngleField& angles) {
    require_analytic(angles, "euler_analytic_forms");
    const GridSpec& grid = angles.grid();
    require_dim3(grid, "euler_analytic_forms");

    EulerForms out;
    out.V = MaurerCartanField(grid);
    const std::size_t ns = grid.num_sites();
    out.dV.assign(static_cast<std::size_t>(9) * ns, 0.0);
    constexpr int pair_i[3] = {0, 0, 1};
    constexpr int pair_j[3] = {1, 2, 2};

    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            const Coord x = grid.position(grid.coords_of(s));
            const AngleMatrix M(angles.gamma[s], angles.theta[s]);
            double grad[3][3]; // grad[k][j] = d_j phi_k
            for (int j = 0; j < 3; ++j) {
                grad[0][j] = angles.beta_fn->d(j, x);
                grad[1][j] = angles.gamma_fn->d(j, x);
                grad[2][j] = angles.theta_fn->d(j, x);
            }
            for (int a = 0; a < 3; ++a)
                for (int j = 0; j < 3; ++j)
                    out.V.component(a, j)[s] =
                        M.m[a][0] * grad[0][j] + M.m[a][1] * grad[1][j] + M.m[a][2] * grad[2][j];

            // (dV^a)_{ij} = (dM_ak/dphi_l)(d_i phi_l d_j phi_k - d_j phi_l d_i phi_k);
            // only l = gamma(1), theta(2) contribute since dM/dbeta = 0.
            for (int p = 0; p < 3; ++p) {
                const int i = pair_i[p], j = pair_j[p];
                for (int a = 0; a < 3; ++a) {
                    double v = 0.0;
                    for (int k = 0; k < 3; ++k) {
                        v += M.dgamma[a][k] * (grad[1][i] * grad[k][j] - grad[1][j] * grad[k][i]);
                        v += M.dtheta[a][k] * (grad[2][i] * grad[k][j] - grad[2][j] * grad[k][i]);
                    }
                    out.dV[(static_cast<std::size_t>(a) * 3 + p) * ns + s] = v;
                }
            }
        }
    });
    return out;
}

namespace {

// residual_{a,ij} = (dV^a)_{ij} + eps_abc V^b_i V^c_j  (pure gauges satisfy
// dV^a = -1/2 eps_abc V^b V^c; see the flatness tests)
double site_flatness(const double dv[3][3], const double v[3][3]) {
    constexpr int pair_i[3] = {0, 0, 1};
    constexpr int pair_j[3] = {1, 2, 2};
    double sum = 0.0;
    for (int p = 0; p < 3; ++p) {
        const int i = pair_i[p], j = pair_j[p];
        for (int a = 0; a < 3; ++a) {
            const int b = (a + 1) % 3, c = (a + 2) % 3;
            const double quad = v[b][i] * v[c][j] - v[c][i] * v[b][j]; // eps_abc V^b_i V^c_j
            const double r = dv[a][p] + quad;
            sum += r * r;
        }
    }
    return std::sqrt(sum);
}

} // namespace

ScalarField flatness_residual(const MaurerCartanField& V) {
    const GridSpec& grid = V.grid;
    require_dim3(grid, "flatness_residual");
    const std::size_t ns = grid.num_sites();

    // d_i V^a_j for all (a, i, j)
    std::vector<double> d(static_cast<std::size_t>(27) * ns);
    for (int a = 0; a < 3; ++a)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                derive(grid, V.component(a, j),
                       std::span<double>(d.data() + ((a * 3 + i) * 3 + j) * ns, ns), i, 2);

    ScalarField out(grid);
    constexpr int pair_i[3] = {0, 0, 1};
    constexpr int pair_j[3] = {1, 2, 2};
    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            double dv[3][3], v[3][3];
            for (int a = 0; a < 3; ++a)
                for (int i = 0; i < 3; ++i) v[a][i] = V.at(a, i, s);
            for (int p = 0; p < 3; ++p) {
                const int i = pair_i[p], j = pair_j[p];
                for (int a = 0; a < 3; ++a)
                    dv[a][p] = d[((a * 3 + i) * 3 + j) * ns + s] - d[((a * 3 + j) * 3 + i) * ns + s];
            }
            out.values[s] = site_flatness(dv, v);
        }
    });
    return out;
}

ScalarField flatness_residual(const EulerAngleField& angles) {
    const EulerForms forms = euler_analytic_forms(angles);
    const std::size_t ns = forms.V.grid.num_sites();
    ScalarField out(forms.V.grid);
    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            double dv[3][3], v[3][3];
            for (int a = 0; a < 3; ++a)
                for (int i = 0; i < 3; ++i) v[a][i] = forms.V.at(a, i, s);
            for (int a = 0; a < 3; ++a)
                for (int p = 0; p < 3; ++p) dv[a][p] = forms.d_component(a, p)[s];
            out.values[s] = site_flatness(dv, v);
        }
    });
    return out;
}

const char* WindingReport::normalization() {
    return "(1/(24*pi^2)) * integral eps^{ijk} tr[(g^-1 d_i g)(g^-1 d_j g)(g^-1 d_k g)]; "
           "hedgehog (g(0) = -1, g -> 1 outward) winds +1";
}

WindingReport winding_number(const GroupElementField& g) {
    const GridSpec& grid = g.grid;
    require_dim3(grid, "winding_number");
    const std::size_t ns = grid.num_sites();

    if (grid.boundary == Boundary::open) {
        // compactification: g must be one constant element on the whole boundary
        const Quat ref = g.q[0];
        double dev = 0.0;
        for (std::size_t s = 0; s < ns; ++s) {
            const auto idx = grid.coords_of(s);
            bool on_boundary = false;
            for (int k = 0; k < 3; ++k)
                if (idx[k] == 0 || idx[k] == grid.shape[k] - 1) on_boundary = true;
            if (!on_boundary) continue;
            const Quat d = g.q[s] - ref;
            dev = std::max(dev, d.norm());
        }
        if (dev > 1e-6)
            throw std::invalid_argument("winding_number: open grid requires g constant on the boundary "
                                        "(deviation " + std::to_string(dev) + ")");
    }

    // P_i = g^-1 d_i g as quaternions
    std::array<std::vector<double>, 4> comp;
    for (auto& c : comp) c.assign(ns, 0.0);
    for (std::size_t s = 0; s < ns; ++s) {
        comp[0][s] = g.q[s].w;
        comp[1][s] = g.q[s].x;
        comp[2][s] = g.q[s].y;
        comp[3][s] = g.q[s].z;
    }
    std::vector<double> dq(static_cast<std::size_t>(12) * ns);
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 4; ++c)
            derive(grid, comp[c], std::span<double>(dq.data() + (i * 4 + c) * ns, ns), i, 2);

    ScalarField density(grid);
    const auto& eps = epsilon_terms(3);
    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            Quat p[3];
            for (int i = 0; i < 3; ++i) {
                const Quat d{dq[(i * 4 + 0) * ns + s], dq[(i * 4 + 1) * ns + s],
                             dq[(i * 4 + 2) * ns + s], dq[(i * 4 + 3) * ns + s]};
                p[i] = g.q[s].conj() * d;
            }
            double dens = 0.0;
            for (const auto& t : eps)
                dens += t.sign * quat_trace(p[t.idx[0]] * p[t.idx[1]] * p[t.idx[2]]);
            density.values[s] = dens;
        }
    });

    WindingReport rep;
    rep.W = volume_integral(density) / (24.0 * std::numbers::pi * std::numbers::pi);
    rep.nearest_integer = std::lround(rep.W);
    rep.deviation = std::abs(rep.W - static_cast<double>(rep.nearest_integer));
    return rep;
}

} // namespace topoforms::groupfield
