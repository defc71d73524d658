#include "topoforms/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace topoforms::liealg {

using nlohmann::json;
using namespace std::complex_literals;

double frob_inner(const CMatrix& a, const CMatrix& b) {
    return (a.adjoint() * b).trace().real();
}

double frob_norm(const CMatrix& a) { return std::sqrt(frob_inner(a, a)); }

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

ClosureError::ClosureError(int a_, int b_, double r)
    : std::runtime_error("commutator of generators (" + std::to_string(a_) + ", " + std::to_string(b_) +
                         ") leaves the span, residual " + std::to_string(r)),
      a(a_), b(b_), residual(r) {}

namespace {

// Coefficients c with M ~ sum_i c_i B_i, via the Gram matrix of the basis.
Eigen::VectorXd span_coefficients(const std::vector<const CMatrix*>& basis, const CMatrix& m) {
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd gram(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        rhs(i) = frob_inner(*basis[i], m);
        for (int j = 0; j < n; ++j) gram(i, j) = frob_inner(*basis[i], *basis[j]);
    }
    return gram.ldlt().solve(rhs);
}

double residual_outside_span(const std::vector<const CMatrix*>& basis, const CMatrix& m,
                             Eigen::VectorXd* coeff_out = nullptr) {
    if (basis.empty()) return frob_norm(m);
    const Eigen::VectorXd c = span_coefficients(basis, m);
    CMatrix rest = m;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        rest -= std::complex<double>(c(i), 0.0) * (*basis[i]);
    if (coeff_out) *coeff_out = c;
    return frob_norm(rest);
}

std::vector<const CMatrix*> pick(const std::vector<CMatrix>& gens, const std::vector<int>& idx) {
    std::vector<const CMatrix*> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(&gens[i]);
    return out;
}

} // namespace

LieAlgebraSpec LieAlgebraSpec::make(std::string name, std::vector<CMatrix> generators) {
    if (generators.empty()) throw std::invalid_argument("LieAlgebraSpec: no generators");
    const auto rows = generators.front().rows();
    for (std::size_t a = 0; a < generators.size(); ++a) {
        const CMatrix& g = generators[a];
        if (g.rows() != rows || g.cols() != rows)
            throw std::invalid_argument("LieAlgebraSpec: generators must be square and same size");
        if ((g.adjoint() + g).cwiseAbs().maxCoeff() > 1e-12)
            throw std::invalid_argument("LieAlgebraSpec: generator " + std::to_string(a) +
                                        " is not anti-Hermitian");
    }

    LieAlgebraSpec alg;
    alg.name = std::move(name);
    alg.generators = std::move(generators);

    const int n = alg.dim();
    alg.metric.resize(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            alg.metric(a, b) = (alg.generators[a] * alg.generators[b]).trace().real();

    if ((alg.metric - alg.metric.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("LieAlgebraSpec: trace metric is not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(alg.metric);
    if (es.eigenvalues().maxCoeff() >= -1e-14)
        throw std::invalid_argument("LieAlgebraSpec: trace metric is not negative definite "
                                    "(only compact algebras are accepted)");

    // closure of the full algebra
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double r = alg.span_residual(commutator(alg.generators[a], alg.generators[b]));
            if (r >= 1e-10) throw ClosureError(a, b, r);
        }
    return alg;
}

Eigen::VectorXd LieAlgebraSpec::project(const CMatrix& m) const {
    Eigen::VectorXd rhs(dim());
    for (int a = 0; a < dim(); ++a) rhs(a) = (generators[a] * m).trace().real();
    return metric.ldlt().solve(rhs);
}

double LieAlgebraSpec::span_residual(const CMatrix& m) const {
    const Eigen::VectorXd c = project(m);
    CMatrix rest = m;
    for (int a = 0; a < dim(); ++a) rest -= std::complex<double>(c(a), 0.0) * generators[a];
    return frob_norm(rest);
}

StructureConstants structure_constants(const LieAlgebraSpec& alg, double closure_tol) {
    const int n = alg.dim();
    StructureConstants sc;
    sc.n = n;
    sc.f.assign(static_cast<std::size_t>(n) * n * n, 0.0);

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const CMatrix comm = commutator(alg.generators[a], alg.generators[b]);
            const double resid = alg.span_residual(comm);
            if (resid >= closure_tol) throw ClosureError(a, b, resid);
            const Eigen::VectorXd c = alg.project(comm);
            for (int k = 0; k < n; ++k) {
                sc.f[(a * n + b) * n + k] = c(k);
                sc.f[(b * n + a) * n + k] = -c(k);
            }
        }

    // antisymmetry is exact by construction; report the numerical residue of
    // re-deriving f_ba from the commutator directly
    double anti = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Eigen::VectorXd c = alg.project(commutator(alg.generators[a], alg.generators[b]));
            for (int k = 0; k < n; ++k)
                anti = std::max(anti, std::abs(c(k) - sc(a, b, k)));
        }
    sc.antisymmetry_residual = anti;

    double jac = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    double s = 0.0;
                    for (int e = 0; e < n; ++e)
                        s += sc(a, b, e) * sc(e, c, d) + sc(b, c, e) * sc(e, a, d) +
                             sc(c, a, e) * sc(e, b, d);
                    jac = std::max(jac, std::abs(s));
                }
    sc.jacobi_residual = jac;
    return sc;
}

SymmetricPairSpec SymmetricPairSpec::make(LieAlgebraSpec g, std::vector<int> t_idx,
                                          std::vector<int> s_idx) {
    const int n = g.dim();
    std::vector<int> seen(n, 0);
    for (int i : t_idx) {
        if (i < 0 || i >= n) throw std::invalid_argument("SymmetricPairSpec: T index out of range");
        ++seen[i];
    }
    for (int i : s_idx) {
        if (i < 0 || i >= n) throw std::invalid_argument("SymmetricPairSpec: S index out of range");
        ++seen[i];
    }
    for (int i = 0; i < n; ++i)
        if (seen[i] != 1)
            throw std::invalid_argument("SymmetricPairSpec: T and S indices must partition the generators");
    return SymmetricPairSpec{std::move(g), std::move(t_idx), std::move(s_idx)};
}

PairReport check_symmetric_pair(const SymmetricPairSpec& pair, double tol) {
    const auto& gens = pair.G.generators;
    const auto T = pick(gens, pair.T_indices);
    const auto S = pick(gens, pair.S_indices);
    const int nT = static_cast<int>(T.size());
    const int nS = static_cast<int>(S.size());

    PairReport rep;
    rep.tol = tol;
    rep.dim_condition = pair.G.dim() > 3 * nT;

    // (a) [T,T] closes on span(T)
    double ra = 0.0;
    for (int a = 0; a < nT; ++a)
        for (int b = a + 1; b < nT; ++b)
            ra = std::max(ra, residual_outside_span(T, commutator(*T[a], *T[b])));
    rep.t_closure_residual = ra;
    rep.t_closure_ok = ra < tol;

    // (b) S carries a representation of H: [T_a, S_M] = h^{aMN} S_N
    std::vector<Eigen::VectorXd> h(static_cast<std::size_t>(nT) * nS); // h[a*nS+M](N)
    double rb = 0.0;
    for (int a = 0; a < nT; ++a)
        for (int m = 0; m < nS; ++m) {
            Eigen::VectorXd coeff = Eigen::VectorXd::Zero(nS);
            const CMatrix comm = commutator(*T[a], *S[m]);
            if (nS > 0) rb = std::max(rb, residual_outside_span(S, comm, &coeff));
            h[a * nS + m] = coeff;
        }
    rep.s_representation_residual = rb;
    rep.s_representation_ok = rb < tol;

    // (c) [S_M, S_N] proportional to h^{aMN} T_a; the constant is fitted by
    // least squares over all pairs because the paper never fixes it.
    double r_span = 0.0;
    double num = 0.0, den = 0.0;
    std::vector<CMatrix> lhs, rhs;
    for (int m = 0; m < nS; ++m)
        for (int n2 = m + 1; n2 < nS; ++n2) {
            const CMatrix l = commutator(*S[m], *S[n2]);
            r_span = std::max(r_span, residual_outside_span(T, l));
            CMatrix k = CMatrix::Zero(l.rows(), l.cols());
            for (int a = 0; a < nT; ++a)
                k += std::complex<double>(h[a * nS + m](n2), 0.0) * (*T[a]);
            lhs.push_back(l);
            rhs.push_back(k);
            num += frob_inner(k, l);
            den += frob_inner(k, k);
        }
    const double lambda = den > 0.0 ? num / den : 0.0;
    double rc = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        rc = std::max(rc, frob_norm(lhs[i] - std::complex<double>(lambda, 0.0) * rhs[i]));
    rep.s_span_residual = r_span;
    rep.s_closure_residual = rc;
    rep.closure_constant = lambda;
    rep.s_closure_ok = rc < tol;
    return rep;
}

LieAlgebraSpec su2() {
    CMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1 << 0, 1, 1, 0;
    s2 << 0, -1i, 1i, 0;
    s3 << 1, 0, 0, -1;
    const std::complex<double> half_over_i = 1.0 / (2.0 * 1i);
    return LieAlgebraSpec::make("su2", {half_over_i * s1, half_over_i * s2, half_over_i * s3});
}

LieAlgebraSpec su3() {
    auto m = [](std::initializer_list<std::complex<double>> v) {
        CMatrix out(3, 3);
        int i = 0;
        for (auto c : v) { out(i / 3, i % 3) = c; ++i; }
        return out;
    };
    const double r3 = 1.0 / std::sqrt(3.0);
    std::vector<CMatrix> lambda = {
        m({0, 1, 0, 1, 0, 0, 0, 0, 0}),
        m({0, -1i, 0, 1i, 0, 0, 0, 0, 0}),
        m({1, 0, 0, 0, -1, 0, 0, 0, 0}),
        m({0, 0, 1, 0, 0, 0, 1, 0, 0}),
        m({0, 0, -1i, 0, 0, 0, 1i, 0, 0}),
        m({0, 0, 0, 0, 0, 1, 0, 1, 0}),
        m({0, 0, 0, 0, 0, -1i, 0, 1i, 0}),
        m({r3, 0, 0, 0, r3, 0, 0, 0, -2 * r3}),
    };
    const std::complex<double> half_over_i = 1.0 / (2.0 * 1i);
    std::vector<CMatrix> gens;
    gens.reserve(8);
    for (auto& l : lambda) gens.push_back(half_over_i * l);
    return LieAlgebraSpec::make("su3", std::move(gens));
}

LieAlgebraSpec u1() {
    CMatrix g(1, 1);
    g(0, 0) = std::complex<double>(0.0, -0.5);
    return LieAlgebraSpec::make("u1", {g});
}

SymmetricPairSpec builtin_pair(const std::string& name) {
    if (name == "su2-u1") return SymmetricPairSpec::make(su2(), {2}, {0, 1});
    if (name == "su2-full") return SymmetricPairSpec::make(su2(), {0, 1, 2}, {});
    if (name == "su3-l3") return SymmetricPairSpec::make(su3(), {2}, {0, 1, 3, 4, 5, 6, 7});
    throw std::invalid_argument("unknown builtin pair: " + name);
}

namespace {

CMatrix matrix_from_json(const json& jm) {
    const int rows = static_cast<int>(jm.size());
    CMatrix out(rows, rows);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(jm[r].size()) != rows)
            throw std::invalid_argument("algebra json: generator matrix is not square");
        for (int c = 0; c < rows; ++c) {
            const auto& cell = jm[r][c];
            if (!cell.is_array() || cell.size() != 2)
                throw std::invalid_argument("algebra json: matrix entries must be [re, im]");
            out(r, c) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return out;
}

LieAlgebraSpec algebra_from_json(const json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "su2") return su2();
        if (name == "su3") return su3();
        if (name == "u1") return u1();
        throw std::invalid_argument("unknown builtin algebra: " + name);
    }
    std::vector<CMatrix> gens;
    for (const auto& jm : j.at("generators")) gens.push_back(matrix_from_json(jm));
    return LieAlgebraSpec::make(j.value("name", "custom"), std::move(gens));
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

} // namespace

LieAlgebraSpec algebra_from_json_file(const std::string& path) {
    return algebra_from_json(load_json_file(path));
}

SymmetricPairSpec pair_from_json_file(const std::string& path) {
    const json j = load_json_file(path);
    LieAlgebraSpec alg = algebra_from_json(j.at("algebra"));
    std::vector<int> t = j.at("T").get<std::vector<int>>();
    std::vector<int> s;
    if (j.contains("S")) {
        s = j.at("S").get<std::vector<int>>();
    } else {
        for (int i = 0; i < alg.dim(); ++i)
            if (std::find(t.begin(), t.end(), i) == t.end()) s.push_back(i);
    }
    return SymmetricPairSpec::make(std::move(alg), std::move(t), std::move(s));
}

std::string pair_report_json(const PairReport& r) {
    json j;
    j["t_closure"] = {{"ok", r.t_closure_ok}, {"residual", r.t_closure_residual}};
    j["s_representation"] = {{"ok", r.s_representation_ok}, {"residual", r.s_representation_residual}};
    j["s_closure"] = {{"ok", r.s_closure_ok},
                      {"residual", r.s_closure_residual},
                      {"span_residual", r.s_span_residual},
                      {"fitted_constant", r.closure_constant}};
    j["dim_condition_G_gt_3H"] = r.dim_condition;
    j["tol"] = r.tol;
    j["pass"] = r.pass();
    return j.dump(2);
}

} // namespace topoforms::liealg
