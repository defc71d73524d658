#include "topoforms/gauge.hpp"

#include <stdexcept>

#include "topoforms/stencil.hpp"

namespace topoforms::topo {

GaugePotential::GaugePotential(const GridSpec& g, int lie_dim,
                               std::optional<liealg::StructureConstants> sc)
    : grid(g), n_lie(lie_dim), f(std::move(sc)),
      A(static_cast<std::size_t>(lie_dim) * g.dim * g.num_sites(), 0.0) {
    if (lie_dim < 1) throw std::invalid_argument("GaugePotential: n_lie < 1");
    if (lie_dim > 1 && (!f || f->n != lie_dim))
        throw std::invalid_argument("GaugePotential: non-Abelian potential needs matching structure constants");
}

GaugePotential GaugePotential::sample(const GridSpec& g,
                                      const std::function<double(int, const Coord&)>& fn) {
    GaugePotential out(g);
    const std::size_t ns = g.num_sites();
    for (int mu = 0; mu < g.dim; ++mu) {
        auto comp = out.component(0, mu);
        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t s = lo; s < hi; ++s)
                comp[s] = fn(mu, g.position(g.coords_of(s)));
        });
    }
    return out;
}

std::span<double> GaugePotential::component(int a, int mu) {
    const std::size_t ns = grid.num_sites();
    return {A.data() + (static_cast<std::size_t>(a) * grid.dim + mu) * ns, ns};
}
std::span<const double> GaugePotential::component(int a, int mu) const {
    const std::size_t ns = grid.num_sites();
    return {A.data() + (static_cast<std::size_t>(a) * grid.dim + mu) * ns, ns};
}

FieldStrength::FieldStrength(const GridSpec& g, int lie_dim)
    : grid(g), n_lie(lie_dim),
      F(static_cast<std::size_t>(lie_dim) * pair_count(g.dim) * g.num_sites(), 0.0) {}

int FieldStrength::pair_index(int dim, int mu, int nu) {
    if (!(0 <= mu && mu < nu && nu < dim))
        throw std::invalid_argument("FieldStrength::pair_index: need 0 <= mu < nu < dim");
    // lexicographic over (mu, nu)
    return mu * dim - mu * (mu + 1) / 2 + (nu - mu - 1);
}

std::span<double> FieldStrength::component(int a, int pair) {
    const std::size_t ns = grid.num_sites();
    return {F.data() + (static_cast<std::size_t>(a) * pair_count(grid.dim) + pair) * ns, ns};
}
std::span<const double> FieldStrength::component(int a, int pair) const {
    const std::size_t ns = grid.num_sites();
    return {F.data() + (static_cast<std::size_t>(a) * pair_count(grid.dim) + pair) * ns, ns};
}

double FieldStrength::at(int a, int mu, int nu, std::size_t s) const {
    if (mu == nu) return 0.0;
    if (mu < nu) return component(a, pair_index(grid.dim, mu, nu))[s];
    return -component(a, pair_index(grid.dim, nu, mu))[s];
}

namespace {

void add_commutator(const GaugePotential& A, FieldStrength& out) {
    if (A.abelian()) return;
    const std::size_t ns = A.grid.num_sites();
    const auto& f = *A.f;
    for (int a = 0; a < A.n_lie; ++a)
        for (int mu = 0; mu < A.grid.dim; ++mu)
            for (int nu = mu + 1; nu < A.grid.dim; ++nu) {
                auto comp = out.component(a, FieldStrength::pair_index(A.grid.dim, mu, nu));
                for (int b = 0; b < A.n_lie; ++b)
                    for (int c = 0; c < A.n_lie; ++c) {
                        const double fabc = f(a, b, c);
                        if (fabc == 0.0) continue;
                        const auto Ab = A.component(b, mu);
                        const auto Ac = A.component(c, nu);
                        parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
                            for (std::size_t s = lo; s < hi; ++s)
                                comp[s] += fabc * Ab[s] * Ac[s];
                        });
                    }
            }
}

} // namespace

FieldStrength field_strength(const GaugePotential& A) {
    const GridSpec& g = A.grid;
    const std::size_t ns = g.num_sites();
    FieldStrength out(g, A.n_lie);
    std::vector<double> dmu(ns), dnu(ns);
    for (int a = 0; a < A.n_lie; ++a)
        for (int mu = 0; mu < g.dim; ++mu)
            for (int nu = mu + 1; nu < g.dim; ++nu) {
                derive(g, A.component(a, nu), dmu, mu, 2);
                derive(g, A.component(a, mu), dnu, nu, 2);
                auto comp = out.component(a, FieldStrength::pair_index(g.dim, mu, nu));
                for (std::size_t s = 0; s < ns; ++s) comp[s] = dmu[s] - dnu[s];
            }
    add_commutator(A, out);
    return out;
}

FieldStrength field_strength(const GaugePotential& A, const GaugeGradFn& dA) {
    const GridSpec& g = A.grid;
    const std::size_t ns = g.num_sites();
    FieldStrength out(g, A.n_lie);
    for (int a = 0; a < A.n_lie; ++a)
        for (int mu = 0; mu < g.dim; ++mu)
            for (int nu = mu + 1; nu < g.dim; ++nu) {
                auto comp = out.component(a, FieldStrength::pair_index(g.dim, mu, nu));
                parallel_for(ns, [&](std::size_t lo, std::size_t hi) {
                    for (std::size_t s = lo; s < hi; ++s) {
                        const Coord x = g.position(g.coords_of(s));
                        comp[s] = dA(a, mu, nu, x) - dA(a, nu, mu, x);
                    }
                });
            }
    add_commutator(A, out);
    return out;
}

} // namespace topoforms::topo
