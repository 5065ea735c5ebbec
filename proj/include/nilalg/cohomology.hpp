#pragma once

#include "nilalg/algebra.hpp"

namespace nilalg {

/// Bilinear forms are n x n scalar matrices; entry (i,j) is theta(e_i, e_j).
/// Their coordinates in the Delta_ij basis are row-major flattenings.
using BilinearForm = Mat;

Vec flattenForm(const BilinearForm& m);
BilinearForm unflattenForm(const Vec& v, size_t n);

/// theta = sum_i theta_i e_i with values in an s-dimensional space.
struct VectorCocycle {
    std::vector<BilinearForm> components;
    size_t arity() const { return components.size(); }
};

Scalar evalForm(const BilinearForm& theta, const Vec& u, const Vec& v);

struct CocycleViolation {
    enum Kind { RightEquation, LeftEquation } kind; // theta(xy,z)=theta(xz,y) / theta(x,yz)=theta(y,xz)
    size_t component;
    size_t i, j, k; // 1-based
    std::string describe() const;
};

/// First violated cocycle equation, or nullopt when theta is a cocycle.
std::optional<CocycleViolation> cocycleViolation(const Algebra& A, const BilinearForm& theta,
                                                 size_t componentIndex = 0);

/// Echelon basis of Z^2(A, C).
std::vector<BilinearForm> cocycleSpace(const Algebra& A);

/// Echelon basis of B^2(A, C) = { (x,y) -> f(xy) : f linear }.
std::vector<BilinearForm> coboundarySpace(const Algebra& A);

struct CohomologyData {
    std::vector<BilinearForm> z2Basis;
    std::vector<BilinearForm> b2Basis;
    std::vector<BilinearForm> h2Reps; // echelon complement of B^2 inside Z^2
    size_t dimZ2() const { return z2Basis.size(); }
    size_t dimB2() const { return b2Basis.size(); }
    size_t dimH2() const { return h2Reps.size(); }
};

CohomologyData h2(const Algebra& A);

/// { x : theta_i(x, A) = theta_i(A, x) = 0 for all i }.
Subspace cocycleAnnihilator(const Algebra& A, const VectorCocycle& theta);

/// A + V with products extended by theta; NotACocycle when a component fails
/// an equation (the message names the equation and triple).
Algebra centralExtension(const Algebra& A, const VectorCocycle& theta);

struct TsReport {
    bool annTrivial;          // Ann(theta) cap Ann(A) = 0
    bool classesIndependent;  // [theta_i] linearly independent in H^2
    bool member() const { return annTrivial && classesIndependent; }
};

TsReport checkTsMembership(const Algebra& A, const VectorCocycle& theta);

/// phi theta (x, y) = theta(phi x, phi y), i.e. phi^T theta phi.
BilinearForm transformCocycle(const BilinearForm& theta, const Mat& phi);

/// Coordinates of theta in the basis (nablas | B^2): solves
/// theta = sum c_i nabla_i + b with b in B^2 and returns c.
/// SingularMatrix when theta is outside the span.
Vec reduceModB2(const BilinearForm& theta, const std::vector<BilinearForm>& nablas,
                const std::vector<BilinearForm>& b2);

// --- orbit-normalization case data (section 1.4 style verifications) ---

struct NormalizationCase {
    std::string id;
    std::string bindParam;              // base parameter bound per value; empty = generic base
    std::vector<Scalar> bindValues;     // one verification run per value
    std::string contextLabel;           // groups cases for coverage checking
    std::vector<size_t> nonzero;        // 1-based indices of alpha_i required nonzero
    std::vector<size_t> zero;           // 1-based indices required zero
    std::vector<std::pair<std::string, std::string>> choices; // aut param -> expression
    std::string representativeText;     // sum of nabla<k> terms
};

struct NormalizationFamily {
    std::string id;
    std::string baseRef;                         // catalog id of the base algebra
    std::vector<std::string> autParams;
    std::vector<std::vector<std::string>> autMatrix; // entry expressions
    std::vector<std::string> nablaExprs;         // D(i,j) sums, may mention base params
    std::vector<std::vector<size_t>> excludedPatterns; // index sets required all-zero
    std::vector<NormalizationCase> cases;
};

struct NormalizationOutcome {
    bool pass = false;
    std::string detail; // residual/coefficient vector on failure
};

/// Verify one case item projectively mod B^2 over the rational-function field
/// in the free coefficients. `binding` fixes base parameters for this run
/// (empty = generic); it comes from the case's bind values.
NormalizationOutcome verifyNormalizationCase(const Algebra& genericBase,
                                             const NormalizationFamily& family,
                                             const NormalizationCase& item,
                                             const std::map<std::string, Scalar>& binding);

/// Check the case conditions cover every zero/nonzero pattern of the relevant
/// coefficients within each context group, up to the declared excluded
/// patterns. Returns an empty string on success, else a description.
std::string checkCaseCoverage(const NormalizationFamily& family);

} // namespace nilalg
