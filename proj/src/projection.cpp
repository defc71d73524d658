#include "topoforms/projection.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "topoforms/epsilon.hpp"
#include "topoforms/quadrature.hpp"
#include "topoforms/stencil.hpp"

namespace topoforms::projection {

using liealg::CMatrix;
using groupfield::EulerAngleField;
using groupfield::MaurerCartanField;

namespace {

// coefficients x_a of a traceless anti-Hermitian 2x2 matrix X = x_a u_a,
// u_a = -i sigma^a (x_a = -tr(u_a X)/2)
Eigen::Vector3d quaternion_coefficients(const CMatrix& x) {
    using namespace std::complex_literals;
    if (x.rows() != 2 || x.cols() != 2)
        throw std::invalid_argument("projection: G generators must be 2x2 (su(2)) for the group route");
    if (std::abs(x.trace()) > 1e-12)
        throw std::invalid_argument("projection: generator has a trace part, not in su(2)");
    CMatrix u[3] = {CMatrix(2, 2), CMatrix(2, 2), CMatrix(2, 2)};
    u[0] << 0, -1i, -1i, 0;
    u[1] << 0, -1, 1, 0;
    u[2] << -1i, 0, 0, 1i;
    Eigen::Vector3d out;
    for (int a = 0; a < 3; ++a) {
        const std::complex<double> t = (u[a] * x).trace();
        if (std::abs(t.imag()) > 1e-12)
            throw std::invalid_argument("projection: generator is not anti-Hermitian");
        out(a) = -0.5 * t.real();
    }
    return out;
}

Eigen::MatrixXd restricted_metric(const liealg::SymmetricPairSpec& pair) {
    const int nT = static_cast<int>(pair.T_indices.size());
    Eigen::MatrixXd m(nT, nT);
    for (int a = 0; a < nT; ++a)
        for (int b = 0; b < nT; ++b)
            m(a, b) = pair.G.metric(pair.T_indices[a], pair.T_indices[b]);
    return m;
}

// structure constants of the T subalgebra viewed as its own algebra
std::optional<liealg::StructureConstants> h_structure(const liealg::SymmetricPairSpec& pair) {
    if (pair.T_indices.size() <= 1) return std::nullopt;
    std::vector<CMatrix> tgens;
    for (int i : pair.T_indices) tgens.push_back(pair.G.generators[i]);
    const auto h = liealg::LieAlgebraSpec::make(pair.G.name + "-H", std::move(tgens));
    return liealg::structure_constants(h);
}

struct RatioStats {
    double ratio = 0.0;
    double constancy = 0.0;
    bool indeterminate = false;
};

RatioStats ratio_statistics(const ScalarField& dh, const ScalarField& dg, double floor_frac) {
    RatioStats st;
    const double mx = max_abs(dg.values);
    if (mx < 1e-13) {
        st.indeterminate = true;
        return st;
    }
    const double floor = floor_frac * mx;
    std::vector<double> r;
    r.reserve(dg.values.size());
    for (std::size_t s = 0; s < dg.values.size(); ++s)
        if (std::abs(dg.values[s]) > floor) r.push_back(dh.values[s] / dg.values[s]);
    if (r.size() < 2) {
        st.indeterminate = true;
        return st;
    }
    const double mean = pairwise_sum(r) / static_cast<double>(r.size());
    const double var = pairwise_sum(r.size(), [&](std::size_t i) {
                           const double d = r[i] - mean;
                           return d * d;
                       }) /
                       static_cast<double>(r.size());
    st.ratio = mean;
    st.constancy = std::abs(mean) > 0.0 ? std::sqrt(var) / std::abs(mean) : order_infinity_marker();
    return st;
}

double order_infinity_marker() { return std::numeric_limits<double>::infinity(); }

ScalarField trace_cubed_density(const MaurerCartanField& V) {
    const GridSpec& g = V.grid;
    const std::size_t ns = g.num_sites();
    ScalarField out(g);
    const auto& eps = epsilon_terms(3);
    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t s = lo; s < hi; ++s) {
            Quat p[3];
            for (int i = 0; i < 3; ++i)
                p[i] = Quat{0.0, 0.5 * V.at(0, i, s), 0.5 * V.at(1, i, s), 0.5 * V.at(2, i, s)};
            double tr = 0.0;
            for (const auto& t : eps)
                tr += t.sign * quat_trace(p[t.idx[0]] * p[t.idx[1]] * p[t.idx[2]]);
            out.values[s] = tr;
        }
    });
    return out;
}

} // namespace

ProjectedConnection project_connection(const MaurerCartanField& V,
                                       const liealg::SymmetricPairSpec& pair, double pair_tol) {
    const auto report = liealg::check_symmetric_pair(pair, pair_tol);
    if (!report.pass())
        throw std::invalid_argument("project_connection: pair fails the symmetric-space conditions");

    const int nT = static_cast<int>(pair.T_indices.size());
    Eigen::MatrixXd tau(nT, 3);
    for (int a = 0; a < nT; ++a)
        tau.row(a) = quaternion_coefficients(pair.G.generators[pair.T_indices[a]]).transpose();

    const Eigen::MatrixXd metric_t = restricted_metric(pair);
    // A^a_i = (M^-1)_{ab} tr(T_b g^-1 d_i g) = -(M^-1 tau)_{ac} V^c_i
    const Eigen::MatrixXd weight = -metric_t.ldlt().solve(tau);

    ProjectedConnection out;
    out.weight = weight;
    out.kappa = nT == 1 ? 1.0 / metric_t(0, 0) : 0.0;
    out.A = topo::GaugePotential(V.grid, nT, h_structure(pair));

    const std::size_t ns = V.grid.num_sites();
    for (int a = 0; a < nT; ++a)
        for (int i = 0; i < 3; ++i) {
            auto comp = out.A.component(a, i);
            for (int c = 0; c < 3; ++c) {
                const double w = weight(a, c);
                if (w == 0.0) continue;
                const auto vc = V.component(c, i);
                for (std::size_t s = 0; s < ns; ++s) comp[s] += w * vc[s];
            }
        }
    return out;
}

CoincidenceReport cs_coincidence_check(const EulerAngleField& angles,
                                       const liealg::SymmetricPairSpec& pair, Scheme scheme,
                                       double density_floor) {
    const GridSpec& g = angles.grid();
    const std::size_t ns = g.num_sites();

    CoincidenceReport rep;
    rep.dim_condition = pair.G.dim() > 3 * static_cast<int>(pair.T_indices.size());

    ScalarField dh(g), dg(g);

    if (scheme == Scheme::analytic) {
        const auto forms = groupfield::euler_analytic_forms(angles);
        const ProjectedConnection proj = project_connection(forms.V, pair);
        rep.kappa = proj.kappa;
        const int nT = static_cast<int>(pair.T_indices.size());

        // A^a and dA^a are constant linear maps of V^c and dV^c
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s) {
                double acc = 0.0;
                for (int a = 0; a < nT; ++a) {
                    double A[3], dA[3]; // dA over pairs (01,02,12)
                    for (int i = 0; i < 3; ++i) A[i] = proj.A.at(a, i, s);
                    for (int p = 0; p < 3; ++p) {
                        double v = 0.0;
                        for (int c = 0; c < 3; ++c) v += proj.weight(a, c) * forms.d_component(c, p)[s];
                        dA[p] = v;
                    }
                    acc += A[0] * dA[2] - A[1] * dA[1] + A[2] * dA[0];
                }
                if (proj.A.f) {
                    const auto& f = *proj.A.f;
                    for (const auto& t : epsilon_terms(3))
                        for (int a = 0; a < nT; ++a)
                            for (int b = 0; b < nT; ++b)
                                for (int c = 0; c < nT; ++c) {
                                    const double fabc = f(a, b, c);
                                    if (fabc == 0.0) continue;
                                    acc += t.sign * fabc / 3.0 * proj.A.at(a, t.idx[0], s) *
                                           proj.A.at(b, t.idx[1], s) * proj.A.at(c, t.idx[2], s);
                                }
                }
                dh.values[s] = acc;
            }
        });
        dg = trace_cubed_density(forms.V);
    } else {
        const MaurerCartanField V = groupfield::maurer_cartan(groupfield::from_euler(angles));
        const ProjectedConnection proj = project_connection(V, pair);
        rep.kappa = proj.kappa;
        dh = topo::cs_density_3d(proj.A);
        dg = trace_cubed_density(V);
    }

    rep.cs_H = volume_integral(dh);
    rep.cs_G = volume_integral(dg);
    const RatioStats st = ratio_statistics(dh, dg, density_floor);
    rep.ratio = st.ratio;
    rep.constancy = st.constancy;
    rep.indeterminate = st.indeterminate;
    if (!rep.indeterminate && std::abs(rep.cs_G) > 1e-300) rep.ratio = rep.cs_H / rep.cs_G;
    return rep;
}

CoincidenceReport cs_coincidence_check_matrix(const std::vector<ScalarField>& x_coeffs,
                                              const liealg::SymmetricPairSpec& pair,
                                              double density_floor) {
    const int n = pair.G.dim();
    if (static_cast<int>(x_coeffs.size()) != n)
        throw std::invalid_argument("cs_coincidence_check_matrix: need one coefficient field per generator");
    const GridSpec& g = x_coeffs[0].grid;
    if (g.dim != 3) throw std::invalid_argument("cs_coincidence_check_matrix: requires a 3d grid");
    const std::size_t ns = g.num_sites();

    // d_i of every coefficient field
    std::vector<std::vector<double>> dc(static_cast<std::size_t>(n) * 3);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < 3; ++i) {
            dc[a * 3 + i].resize(ns);
            derive(g, x_coeffs[a].values, dc[a * 3 + i], i, 2);
        }

    const int nT = static_cast<int>(pair.T_indices.size());
    const Eigen::MatrixXd metric_t = restricted_metric(pair);
    const Eigen::MatrixXd minv = metric_t.inverse();

    topo::GaugePotential A(g, nT, h_structure(pair));
    ScalarField dg_density(g);

    const int md = pair.G.matrix_dim();
    parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
        CMatrix X(md, md), dX(md, md), c1(md, md), P[3] = {CMatrix(md, md), CMatrix(md, md), CMatrix(md, md)};
        for (std::size_t s = lo; s < hi; ++s) {
            X.setZero();
            for (int a = 0; a < n; ++a) X += std::complex<double>(x_coeffs[a][s], 0.0) * pair.G.generators[a];
            for (int i = 0; i < 3; ++i) {
                dX.setZero();
                for (int a = 0; a < n; ++a)
                    dX += std::complex<double>(dc[a * 3 + i][s], 0.0) * pair.G.generators[a];
                // exp(-X) d exp(X) = dX + 1/2 [dX, X] + 1/6 [[dX, X], X] + O(X^3 dX)
                c1 = dX * X - X * dX;
                P[i] = dX + 0.5 * c1 + (1.0 / 6.0) * (c1 * X - X * c1);
            }
            for (int a = 0; a < nT; ++a) {
                for (int i = 0; i < 3; ++i) {
                    double v = 0.0;
                    for (int b = 0; b < nT; ++b)
                        v += minv(a, b) * (pair.G.generators[pair.T_indices[b]] * P[i]).trace().real();
                    A.component(a, i)[s] = v;
                }
            }
            double tr = 0.0;
            for (const auto& t : epsilon_terms(3))
                tr += t.sign * (P[t.idx[0]] * P[t.idx[1]] * P[t.idx[2]]).trace().real();
            dg_density.values[s] = tr;
        }
    });

    CoincidenceReport rep;
    rep.dim_condition = n > 3 * nT;
    rep.kappa = nT == 1 ? minv(0, 0) : 0.0;

    const ScalarField dh = topo::cs_density_3d(A);
    rep.cs_H = volume_integral(dh);
    rep.cs_G = volume_integral(dg_density);
    const RatioStats st = ratio_statistics(dh, dg_density, density_floor);
    rep.ratio = st.ratio;
    rep.constancy = st.constancy;
    rep.indeterminate = st.indeterminate;
    if (!rep.indeterminate && std::abs(rep.cs_G) > 1e-300) rep.ratio = rep.cs_H / rep.cs_G;
    return rep;
}

} // namespace topoforms::projection
