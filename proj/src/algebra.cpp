#include "nilalg/algebra.hpp"

#include <algorithm>

namespace nilalg {

Algebra::Algebra(std::string name, size_t dim)
    : name_(std::move(name)), dim_(dim), structure_(dim * dim * dim) {}

bool Algebra::hasParam(const std::string& n) const {
    return std::any_of(params_.begin(), params_.end(),
                       [&](const ParamDecl& p) { return p.name == n; });
}

Vec Algebra::productOfBasis(size_t i, size_t j) const {
    Vec v(dim_);
    for (size_t k = 0; k < dim_; ++k)
        v[k] = c(i, j, k);
    return v;
}

Algebra Algebra::substituted(const std::map<std::string, Scalar>& bindings) const {
    Algebra out(name_, dim_);
    for (const auto& p : params_) {
        auto it = bindings.find(p.name);
        if (it == bindings.end()) {
            out.params_.push_back(p);
            continue;
        }
        for (const auto& ex : p.excluded)
            if (it->second == ex)
                fail(ErrorKind::ExcludedParameter,
                     name_ + ": parameter " + p.name + " = " + ex.str() + " is excluded");
    }
    if (radicand_) {
        Scalar sub = evaluate(*radicand_, bindings);
        auto p = sub.asPolynomial();
        if (!p)
            fail(ErrorKind::MalformedScalar, "radicand must stay polynomial under substitution");
        if (!p->isZero())
            out.radicand_ = *p;
    }
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            for (size_t k = 0; k < dim_; ++k)
                out.setC(i, j, k, c(i, j, k).substitute(bindings));
    return out;
}

bool Algebra::sameTensor(const Algebra& o) const {
    if (dim_ != o.dim_)
        return false;
    return structure_ == o.structure_;
}

std::string Algebra::str() const {
    std::string s = "algebra " + name_ + "\n";
    s += "dim " + std::to_string(dim_) + "\n";
    for (const auto& p : params_) {
        s += "param " + p.name;
        if (!p.excluded.empty()) {
            s += " exclude ";
            for (size_t k = 0; k < p.excluded.size(); ++k) {
                if (k)
                    s += ", ";
                s += p.excluded[k].str();
            }
        }
        s += "\n";
    }
    if (radicand_)
        s += "radical " + radicand_->str() + "\n";
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            Vec v = productOfBasis(i, j);
            if (isZeroVec(v))
                continue;
            s += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = ";
            bool first = true;
            for (size_t k = 0; k < dim_; ++k) {
                if (v[k].isZero())
                    continue;
                std::string coeff = v[k].str();
                std::string term;
                if (coeff == "1")
                    term = "e" + std::to_string(k + 1);
                else if (coeff == "-1")
                    term = "-e" + std::to_string(k + 1);
                else {
                    bool simple = coeff.find('+') == std::string::npos &&
                                  (coeff.find('-') == std::string::npos || coeff.rfind('-') == 0) &&
                                  coeff.find('/') == std::string::npos;
                    if (!simple)
                        coeff = "(" + coeff + ")";
                    term = coeff + "*e" + std::to_string(k + 1);
                }
                if (first) {
                    s += term;
                    first = false;
                } else if (term[0] == '-') {
                    s += " - " + term.substr(1);
                } else {
                    s += " + " + term;
                }
            }
            s += "\n";
        }
    return s;
}

Vec product(const Algebra& A, const Vec& u, const Vec& v) {
    size_t n = A.dim();
    if (u.size() != n || v.size() != n)
        fail(ErrorKind::DimensionMismatch, "product: vector length != algebra dimension");
    Vec out(n);
    for (size_t i = 0; i < n; ++i) {
        if (u[i].isZero())
            continue;
        for (size_t j = 0; j < n; ++j) {
            if (v[j].isZero())
                continue;
            Scalar uv = u[i] * v[j];
            for (size_t k = 0; k < n; ++k)
                if (!A.c(i, j, k).isZero())
                    out[k] += uv * A.c(i, j, k);
        }
    }
    return out;
}

std::string IdentityViolation::describe() const {
    std::string id = kind == RightCommutativity ? "(xy)z=(xz)y" : "x(yz)=y(xz)";
    return id + " fails at (e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" +
           std::to_string(k) + ")";
}

BicommReport checkBicommutative(const Algebra& A) {
    size_t n = A.dim();
    BicommReport rep;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec ei = unitVec(n, i), ej = unitVec(n, j), ek = unitVec(n, k);
                Vec r1 = product(A, product(A, ei, ej), ek);
                Vec r2 = product(A, product(A, ei, ek), ej);
                if (r1 != r2)
                    rep.violations.push_back(
                        {IdentityViolation::RightCommutativity, i + 1, j + 1, k + 1});
                Vec l1 = product(A, ei, product(A, ej, ek));
                Vec l2 = product(A, ej, product(A, ei, ek));
                if (l1 != l2)
                    rep.violations.push_back(
                        {IdentityViolation::LeftCommutativity, i + 1, j + 1, k + 1});
            }
    return rep;
}

std::vector<size_t> PowerSeries::dims() const {
    std::vector<size_t> d;
    for (size_t k = 1; k < chain.size(); ++k)
        d.push_back(chain[k].dim());
    return d;
}

PowerSeries powerSeries(const Algebra& A) {
    size_t n = A.dim();
    PowerSeries ps;
    ps.chain.push_back(Subspace::full(n));
    for (size_t k = 2; k <= n + 1; ++k) {
        std::vector<Vec> rows;
        for (size_t i = 1; i < k; ++i) {
            size_t j = k - i;
            for (const auto& u : ps.chain[i - 1].basis())
                for (const auto& v : ps.chain[j - 1].basis())
                    rows.push_back(product(A, u, v));
        }
        ps.chain.push_back(Subspace::span(n, rows));
        if (ps.chain.back().dim() == 0) {
            ps.nilIndex = k;
            return ps;
        }
    }
    return ps;
}

namespace {

Mat annihilatorSystem(const Algebra& A, bool left, bool right) {
    size_t n = A.dim();
    std::vector<Vec> eqRows;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) {
            if (left) {
                // (x * e_j)_k = sum_i x_i c[i][j][k]
                Vec row(n);
                for (size_t i = 0; i < n; ++i)
                    row[i] = A.c(i, j, k);
                eqRows.push_back(std::move(row));
            }
            if (right) {
                // (e_j * x)_k = sum_i x_i c[j][i][k]
                Vec row(n);
                for (size_t i = 0; i < n; ++i)
                    row[i] = A.c(j, i, k);
                eqRows.push_back(std::move(row));
            }
        }
    return Mat::fromRows(eqRows);
}

Subspace annihilatorSided(const Algebra& A, bool left, bool right) {
    size_t n = A.dim();
    if (n == 0)
        return Subspace(0);
    Mat M = annihilatorSystem(A, left, right);
    return Subspace::span(n, M.nullspace());
}

Mat derivationSystem(const Algebra& A) {
    size_t n = A.dim();
    // unknowns d[p][q] at coordinate p*n+q; D(e_q) = sum_p d[p][q] e_p
    std::vector<Vec> eqRows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec row(n * n);
                // D(e_i e_j)_k = sum_l c[i][j][l] d[k][l]
                for (size_t l = 0; l < n; ++l)
                    row[k * n + l] += Scalar(A.c(i, j, l));
                // (D(e_i) e_j)_k = sum_p d[p][i] c[p][j][k]
                for (size_t p = 0; p < n; ++p)
                    row[p * n + i] -= A.c(p, j, k);
                // (e_i D(e_j))_k = sum_q d[q][j] c[i][q][k]
                for (size_t q = 0; q < n; ++q)
                    row[q * n + j] -= A.c(i, q, k);
                eqRows.push_back(std::move(row));
            }
    return Mat::fromRows(eqRows);
}

} // namespace

Subspace annihilator(const Algebra& A) { return annihilatorSided(A, true, true); }
Subspace leftAnnihilator(const Algebra& A) { return annihilatorSided(A, true, false); }
Subspace rightAnnihilator(const Algebra& A) { return annihilatorSided(A, false, true); }

std::vector<Mat> DerivationSpace::basisMatrices(size_t n) const {
    std::vector<Mat> out;
    for (const auto& v : space.basis()) {
        Mat m(n, n);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q)
                m.at(p, q) = v[p * n + q];
        out.push_back(std::move(m));
    }
    return out;
}

DerivationSpace derivations(const Algebra& A) {
    size_t n = A.dim();
    Mat M = derivationSystem(A);
    DerivationSpace ds;
    ds.space = Subspace::span(n * n, M.nullspace());
    return ds;
}

bool isAutomorphism(const Algebra& A, const Mat& phi) {
    size_t n = A.dim();
    if (phi.rows() != n || phi.cols() != n)
        fail(ErrorKind::DimensionMismatch, "automorphism candidate has wrong shape");
    if (phi.det().isZero())
        return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec lhs = phi.apply(A.productOfBasis(i, j));
            Vec rhs = product(A, phi.col(i), phi.col(j));
            if (lhs != rhs)
                return false;
        }
    return true;
}

Algebra changeBasis(const Algebra& A, const Mat& P) {
    size_t n = A.dim();
    if (P.det().isZero())
        fail(ErrorKind::SingularMatrix, "change of basis must be invertible");
    Mat Pinv = P.inverse();
    Algebra out(A.name(), n);
    for (const auto& p : A.params())
        out.addParam(p);
    if (A.radicand())
        out.setRadicand(*A.radicand());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec w = Pinv.apply(product(A, P.col(i), P.col(j)));
            for (size_t k = 0; k < n; ++k)
                out.setC(i, j, k, w[k]);
        }
    return out;
}

Algebra quotient(const Algebra& A, const Subspace& I) {
    size_t n = A.dim();
    for (const auto& v : I.basis())
        for (size_t j = 0; j < n; ++j) {
            Vec ej = unitVec(n, j);
            if (!I.contains(product(A, v, ej)) || !I.contains(product(A, ej, v)))
                fail(ErrorKind::NotAnIdeal, "subspace is not a two-sided ideal of " + A.name());
        }
    auto coords = I.complementCoords();
    size_t m = coords.size();
    Algebra out(A.name() + "/I", m);
    for (const auto& p : A.params())
        out.addParam(p);
    if (A.radicand())
        out.setRadicand(*A.radicand());
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            Vec w = I.reduce(A.productOfBasis(coords[a], coords[b]));
            for (size_t kk = 0; kk < m; ++kk)
                out.setC(a, b, kk, w[coords[kk]]);
        }
    return out;
}

Decomposition decomposeCentralExtension(const Algebra& A) {
    size_t n = A.dim();
    Subspace ann = annihilator(A);
    if (ann.dim() == 0)
        fail(ErrorKind::ZeroAnnihilator, A.name() + " has zero annihilator");
    size_t s = ann.dim();
    auto coords = ann.complementCoords();
    size_t m = coords.size();

    Decomposition d;
    d.parent = quotient(A, ann);
    d.parent.setName(A.name() + "'");
    d.cocycle.assign(s, Mat(m, m));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            Vec w = A.productOfBasis(coords[a], coords[b]);
            for (size_t k = 0; k < s; ++k)
                d.cocycle[k].at(a, b) = w[ann.pivots()[k]];
        }

    d.adaptedBasis = Mat(n, n);
    for (size_t a = 0; a < m; ++a)
        d.adaptedBasis.at(coords[a], a) = Scalar::one();
    for (size_t k = 0; k < s; ++k)
        for (size_t r = 0; r < n; ++r)
            d.adaptedBasis.at(r, m + k) = ann.basis()[k][r];

    // class-dependence (true split test) is a cohomology question; the flag
    // here records the cheap certain case of a vanishing component
    d.split = std::any_of(d.cocycle.begin(), d.cocycle.end(),
                          [](const Mat& mref) { return mref.isZero(); });
    return d;
}

std::string Fingerprint::str() const {
    std::string s = "powers(";
    for (size_t i = 0; i < dimPowers.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(dimPowers[i]);
    }
    s += ") ann=" + std::to_string(dimAnn) + " lann=" + std::to_string(dimLeftAnn) +
         " rann=" + std::to_string(dimRightAnn) + " der=" + std::to_string(dimDer) + " ranks{";
    bool first = true;
    for (size_t r : rankProfile) {
        if (!first)
            s += ",";
        s += std::to_string(r);
        first = false;
    }
    return s + "}";
}

Fingerprint fingerprint(const Algebra& A) {
    size_t n = A.dim();
    Fingerprint fp;
    auto ps = powerSeries(A);
    fp.dimPowers = ps.dims();
    if (fp.dimPowers.empty())
        fp.dimPowers.push_back(0);
    // only dimensions are needed here; rank via fraction-free elimination
    fp.dimAnn = n - annihilatorSystem(A, true, true).rank();
    fp.dimLeftAnn = n - annihilatorSystem(A, true, false).rank();
    fp.dimRightAnn = n - annihilatorSystem(A, false, true).rank();
    fp.dimDer = n * n - derivationSystem(A).rank();

    // generic multiplication operators: adjoin fresh parameters u1..un
    std::vector<Scalar> u;
    for (size_t i = 0; i < n; ++i) {
        std::string base = "u" + std::to_string(i + 1);
        while (A.hasParam(base))
            base = "_" + base;
        u.push_back(Scalar::variable(base));
    }
    Mat L(n, n), R(n, n);
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j < n; ++j) {
            Scalar l, r;
            for (size_t i = 0; i < n; ++i) {
                if (!A.c(i, j, k).isZero())
                    l += u[i] * A.c(i, j, k);
                if (!A.c(j, i, k).isZero())
                    r += u[i] * A.c(j, i, k);
            }
            L.at(k, j) = l;
            R.at(k, j) = r;
        }
    fp.rankProfile.insert(L.rank());
    fp.rankProfile.insert(R.rank());
    return fp;
}

} // namespace nilalg
