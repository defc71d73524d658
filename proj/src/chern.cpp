#include "topoforms/chern.hpp"

#include <stdexcept>

#include "topoforms/epsilon.hpp"
#include "topoforms/quadrature.hpp"
#include "topoforms/stencil.hpp"
#include "topoforms/sum.hpp"

namespace topoforms::topo {

ScalarField cp_density_4d(const FieldStrength& F) {
    const GridSpec& g = F.grid;
    if (g.dim != 4) throw std::invalid_argument("cp_density_4d: requires a 4d grid");
    const std::size_t ns = g.num_sites();
    ScalarField out(g);
    for (int a = 0; a < F.n_lie; ++a) {
        const auto f01 = F.component(a, FieldStrength::pair_index(4, 0, 1));
        const auto f02 = F.component(a, FieldStrength::pair_index(4, 0, 2));
        const auto f03 = F.component(a, FieldStrength::pair_index(4, 0, 3));
        const auto f12 = F.component(a, FieldStrength::pair_index(4, 1, 2));
        const auto f13 = F.component(a, FieldStrength::pair_index(4, 1, 3));
        const auto f23 = F.component(a, FieldStrength::pair_index(4, 2, 3));
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s)
                out.values[s] += 2.0 * (f01[s] * f23[s] - f02[s] * f13[s] + f03[s] * f12[s]);
        });
    }
    return out;
}

ScalarField cp_density_2d(const FieldStrength& F) {
    const GridSpec& g = F.grid;
    if (g.dim != 2) throw std::invalid_argument("cp_density_2d: requires a 2d grid");
    if (F.n_lie != 1) throw std::invalid_argument("cp_density_2d: 2d anomaly is Abelian");
    ScalarField out(g);
    const auto f01 = F.component(0, 0);
    for (std::size_t s = 0; s < out.values.size(); ++s) out.values[s] = f01[s];
    return out;
}

namespace {

VectorField cs_current_2d(const GaugePotential& A) {
    if (!A.abelian()) throw std::invalid_argument("cs_current: 2d current is Abelian");
    const std::size_t ns = A.grid.num_sites();
    VectorField C(A.grid);
    const auto a0 = A.component(0, 0);
    const auto a1 = A.component(0, 1);
    auto c0 = C.component(0);
    auto c1 = C.component(1);
    for (std::size_t s = 0; s < ns; ++s) {
        c0[s] = a1[s];  // eps^{01} A_1
        c1[s] = -a0[s]; // eps^{10} A_0
    }
    return C;
}

VectorField cs_current_4d(const GaugePotential& A) {
    const GridSpec& g = A.grid;
    const std::size_t ns = g.num_sites();
    VectorField C(g);
    std::vector<double> dA(ns);

    for (const auto& t : epsilon_terms(4)) {
        const int mu = t.idx[0], alpha = t.idx[1], beta = t.idx[2], gamma = t.idx[3];
        auto c = C.component(mu);
        for (int a = 0; a < A.n_lie; ++a) {
            derive(g, A.component(a, gamma), dA, beta, 2);
            const auto Aa = A.component(a, alpha);
            parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t s = lo; s < hi; ++s) c[s] += t.sign * Aa[s] * dA[s];
            });
        }
        if (!A.abelian()) {
            const auto& f = *A.f;
            for (int a = 0; a < A.n_lie; ++a)
                for (int b = 0; b < A.n_lie; ++b)
                    for (int cc = 0; cc < A.n_lie; ++cc) {
                        const double fabc = f(a, b, cc);
                        if (fabc == 0.0) continue;
                        const auto Aa = A.component(a, alpha);
                        const auto Ab = A.component(b, beta);
                        const auto Ac = A.component(cc, gamma);
                        const double w = t.sign * fabc / 3.0;
                        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
                            for (std::size_t s = lo; s < hi; ++s)
                                c[s] += w * Aa[s] * Ab[s] * Ac[s];
                        });
                    }
        }
    }
    return C;
}

} // namespace

VectorField cs_current(const GaugePotential& A) {
    switch (A.grid.dim) {
        case 2: return cs_current_2d(A);
        case 4: return cs_current_4d(A);
        default: throw std::invalid_argument("cs_current: defined for dim 2 and 4 only");
    }
}

ScalarField divergence_identity_field(const GaugePotential& A) {
    const GridSpec& g = A.grid;
    if (g.boundary != Boundary::periodic)
        throw std::invalid_argument("divergence_identity_field: periodic grids only");
    const std::size_t ns = g.num_sites();

    const VectorField C = cs_current(A);
    ScalarField div(g);
    std::vector<double> d(ns);
    for (int mu = 0; mu < g.dim; ++mu) {
        derive(g, C.component(mu), d, mu, 2);
        for (std::size_t s = 0; s < ns; ++s) div.values[s] += d[s];
    }

    const FieldStrength F = field_strength(A);
    const ScalarField anom = g.dim == 2 ? cp_density_2d(F) : cp_density_4d(F);
    for (std::size_t s = 0; s < ns; ++s) div.values[s] -= anom.values[s];
    return div;
}

double divergence_identity_residual(const GaugePotential& A) {
    return rms(divergence_identity_field(A).values);
}

namespace {

// shared 3d Abelian CS kernel: eps^{ijk} v_i d_j v_k with the curl stencil
ScalarField cs_density_abelian_3d(const GridSpec& g, std::span<const double> v0,
                                  std::span<const double> v1, std::span<const double> v2) {
    const std::size_t ns = g.num_sites();
    const int order = curl_order(g);
    std::span<const double> v[3] = {v0, v1, v2};
    ScalarField out(g);
    std::vector<double> d(ns);
    for (const auto& t : epsilon_terms(3)) {
        derive(g, v[t.idx[2]], d, t.idx[1], order);
        const auto vi = v[t.idx[0]];
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s) out.values[s] += t.sign * vi[s] * d[s];
        });
    }
    return out;
}

} // namespace

ScalarField cs_density_3d(const GaugePotential& A) {
    const GridSpec& g = A.grid;
    if (g.dim != 3) throw std::invalid_argument("cs_density_3d: requires a 3d grid");
    const std::size_t ns = g.num_sites();

    ScalarField out(g);
    for (int a = 0; a < A.n_lie; ++a) {
        const ScalarField part =
            cs_density_abelian_3d(g, A.component(a, 0), A.component(a, 1), A.component(a, 2));
        for (std::size_t s = 0; s < ns; ++s) out.values[s] += part.values[s];
    }
    if (!A.abelian()) {
        const auto& f = *A.f;
        for (const auto& t : epsilon_terms(3))
            for (int a = 0; a < A.n_lie; ++a)
                for (int b = 0; b < A.n_lie; ++b)
                    for (int c = 0; c < A.n_lie; ++c) {
                        const double fabc = f(a, b, c);
                        if (fabc == 0.0) continue;
                        const auto Ai = A.component(a, t.idx[0]);
                        const auto Aj = A.component(b, t.idx[1]);
                        const auto Ak = A.component(c, t.idx[2]);
                        const double w = t.sign * fabc / 3.0;
                        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
                            for (std::size_t s = lo; s < hi; ++s)
                                out.values[s] += w * Ai[s] * Aj[s] * Ak[s];
                        });
                    }
    }
    return out;
}

ScalarField cs_1d(const GaugePotential& A) {
    if (A.grid.dim != 1) throw std::invalid_argument("cs_1d: requires a 1d grid");
    if (!A.abelian()) throw std::invalid_argument("cs_1d: Abelian only");
    ScalarField out(A.grid);
    const auto a0 = A.component(0, 0);
    for (std::size_t s = 0; s < out.values.size(); ++s) out.values[s] = a0[s];
    return out;
}

VectorField curl(const VectorField& v) {
    const GridSpec& g = v.grid;
    if (g.dim != 3) throw std::invalid_argument("curl: requires a 3d grid");
    const std::size_t ns = g.num_sites();
    const int order = curl_order(g);
    VectorField out(g);
    std::vector<double> d(ns);
    for (const auto& t : epsilon_terms(3)) {
        derive(g, v.component(t.idx[2]), d, t.idx[1], order);
        auto o = out.component(t.idx[0]);
        for (std::size_t s = 0; s < ns; ++s) o[s] += t.sign * d[s];
    }
    return out;
}

double helicity(const VectorField& v) {
    const GridSpec& g = v.grid;
    if (g.dim != 3) throw std::invalid_argument("helicity: requires a 3d grid");
    return volume_integral(cs_density_abelian_3d(g, v.component(0), v.component(1), v.component(2)));
}

} // namespace topoforms::topo
