#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nilalg/matrix.hpp"

namespace nilalg {

struct ParamDecl {
    std::string name;
    std::vector<Scalar> excluded;
};

/// Finite-dimensional algebra given by its structure-constant tensor
/// c[i][j][k]: e_i * e_j = sum_k c[i][j][k] e_k (0-based storage).
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string name, size_t dim);

    const std::string& name() const { return name_; }
    void setName(std::string n) { name_ = std::move(n); }
    size_t dim() const { return dim_; }

    const std::vector<ParamDecl>& params() const { return params_; }
    void addParam(ParamDecl p) { params_.push_back(std::move(p)); }
    bool hasParam(const std::string& n) const;
    const std::optional<Polynomial>& radicand() const { return radicand_; }
    void setRadicand(Polynomial r) { radicand_ = std::move(r); }

    const Scalar& c(size_t i, size_t j, size_t k) const { return structure_[(i * dim_ + j) * dim_ + k]; }
    void setC(size_t i, size_t j, size_t k, Scalar v) { structure_[(i * dim_ + j) * dim_ + k] = std::move(v); }

    /// Coordinates of e_i * e_j.
    Vec productOfBasis(size_t i, size_t j) const;

    /// Bind parameters to values; ExcludedParameter when a binding hits a
    /// declared exclusion.
    Algebra substituted(const std::map<std::string, Scalar>& bindings) const;

    bool sameTensor(const Algebra& o) const;

    /// Algebra text format (grammar of the .alg files).
    std::string str() const;

private:
    std::string name_;
    size_t dim_ = 0;
    std::vector<ParamDecl> params_;
    std::optional<Polynomial> radicand_;
    std::vector<Scalar> structure_;
};

/// Bilinear product of coordinate vectors.
Vec product(const Algebra& A, const Vec& u, const Vec& v);

struct IdentityViolation {
    enum Kind { RightCommutativity, LeftCommutativity } kind;
    size_t i, j, k; // 1-based basis indices
    std::string describe() const;
};

struct BicommReport {
    std::vector<IdentityViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// Exhaustive check of (e_i e_j)e_k = (e_i e_k)e_j and e_i(e_j e_k) = e_j(e_i e_k).
BicommReport checkBicommutative(const Algebra& A);

struct PowerSeries {
    std::vector<Subspace> chain;      // A^(1), A^(2), ... down to the first zero term
    std::optional<size_t> nilIndex;   // least k with A^(k) = 0, or nullopt within bound
    std::vector<size_t> dims() const; // dims of A^(2), A^(3), ... (trailing 0 included)
};

PowerSeries powerSeries(const Algebra& A);

Subspace annihilator(const Algebra& A);
Subspace leftAnnihilator(const Algebra& A);
Subspace rightAnnihilator(const Algebra& A);

struct DerivationSpace {
    Subspace space; // ambient n^2; coordinate (p, q) at p*n+q is the matrix entry D[p][q]
    size_t dim() const { return space.dim(); }
    std::vector<Mat> basisMatrices(size_t n) const;
};

/// Solutions of D(e_i e_j) = D(e_i) e_j + e_i D(e_j).
DerivationSpace derivations(const Algebra& A);

/// det != 0 and phi(e_i e_j) = phi(e_i) phi(e_j) for all pairs.
bool isAutomorphism(const Algebra& A, const Mat& phi);

/// Structure constants in the basis given by P's columns.
Algebra changeBasis(const Algebra& A, const Mat& P);

/// Quotient by the two-sided ideal I on the coordinate complement of I.
Algebra quotient(const Algebra& A, const Subspace& I);

struct VectorCocycle; // cohomology.hpp

struct Decomposition {
    Algebra parent;                 // A / Ann(A)
    std::vector<Mat> cocycle;       // theta components with values in Ann(A)
    Mat adaptedBasis;               // columns: complement unit vectors then Ann basis
    bool split;                     // true when the classes are linearly dependent
};

/// Lemma-1 decomposition with V = Ann(A); ZeroAnnihilator when Ann(A) = 0.
Decomposition decomposeCentralExtension(const Algebra& A);

struct Fingerprint {
    std::vector<size_t> dimPowers; // dim A^2, dim A^3, ... down to 0
    size_t dimAnn = 0;
    size_t dimLeftAnn = 0;
    size_t dimRightAnn = 0;
    size_t dimDer = 0;
    std::multiset<size_t> rankProfile; // generic left/right multiplication ranks

    bool operator==(const Fingerprint&) const = default;
    std::string str() const;
};

Fingerprint fingerprint(const Algebra& A);

} // namespace nilalg
