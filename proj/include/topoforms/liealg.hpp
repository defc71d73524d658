#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace topoforms::liealg {

using CMatrix = Eigen::MatrixXcd;

/// Frobenius inner product Re tr(A^dagger B).
double frob_inner(const CMatrix& a, const CMatrix& b);
double frob_norm(const CMatrix& a);
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Commutator of two generators escaped the span of the basis.
struct ClosureError : std::runtime_error {
    int a, b;
    double residual;
    ClosureError(int a_, int b_, double r);
};

/// Compact matrix Lie algebra: anti-Hermitian generators with a negative
/// definite trace metric tr(X_a X_b) and closed commutators.
struct LieAlgebraSpec {
    std::string name;
    std::vector<CMatrix> generators;
    Eigen::MatrixXd metric; // tr(X_a X_b)

    static LieAlgebraSpec make(std::string name, std::vector<CMatrix> generators);

    int dim() const { return static_cast<int>(generators.size()); }
    int matrix_dim() const { return static_cast<int>(generators.front().rows()); }

    /// Coefficients of M in the generator basis (trace-metric projection).
    Eigen::VectorXd project(const CMatrix& m) const;
    /// Frobenius norm of the part of M outside the span of the generators.
    double span_residual(const CMatrix& m) const;
};

struct StructureConstants {
    int n = 0;
    std::vector<double> f; // f[(a*n + b)*n + c], [X_a,X_b] = f_abc X_c
    double antisymmetry_residual = 0.0;
    double jacobi_residual = 0.0;

    double operator()(int a, int b, int c) const { return f[(a * n + b) * n + c]; }
};

/// f_abc by projecting [X_a, X_b] onto the basis through the trace metric.
/// Throws ClosureError naming the offending pair when a commutator leaves the
/// span (residual >= closure_tol).
StructureConstants structure_constants(const LieAlgebraSpec& alg, double closure_tol = 1e-10);

/// Lie-algebra split G = span(T) + span(S) to be tested as a symmetric pair.
struct SymmetricPairSpec {
    LieAlgebraSpec G;
    std::vector<int> T_indices;
    std::vector<int> S_indices;

    static SymmetricPairSpec make(LieAlgebraSpec g, std::vector<int> t_idx, std::vector<int> s_idx);
};

struct PairReport {
    bool t_closure_ok = false;        // [T,T] in span(T)
    bool s_representation_ok = false; // [T,S] in span(S)
    bool s_closure_ok = false;        // [S,S] ~ h^{aMN} T_a after the fit
    double t_closure_residual = 0.0;
    double s_representation_residual = 0.0;
    double s_span_residual = 0.0;   // part of [S,S] outside span(T)
    double s_closure_residual = 0.0; // post-fit residual against lambda*h^{aMN} T_a
    double closure_constant = 0.0;   // fitted proportionality lambda
    bool dim_condition = false;      // dim G > 3 dim H, informational only
    double tol = 0.0;

    bool pass() const { return t_closure_ok && s_representation_ok && s_closure_ok; }
};

PairReport check_symmetric_pair(const SymmetricPairSpec& pair, double tol = 1e-10);

// built-in algebras
LieAlgebraSpec su2();        // sigma^a / 2i, f_abc = epsilon_abc
LieAlgebraSpec su3();        // Gell-Mann lambda_a / 2i
LieAlgebraSpec u1();         // single anti-Hermitian 1x1 generator

// built-in pairs: "su2-u1", "su2-full", "su3-l3"
SymmetricPairSpec builtin_pair(const std::string& name);

// JSON file formats (algebra: name + generators as nested [re, im] arrays;
// pair: algebra or builtin name plus T/S index lists)
LieAlgebraSpec algebra_from_json_file(const std::string& path);
SymmetricPairSpec pair_from_json_file(const std::string& path);
std::string pair_report_json(const PairReport& r);

} // namespace topoforms::liealg
