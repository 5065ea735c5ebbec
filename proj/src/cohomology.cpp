#include "nilalg/cohomology.hpp"

#include <algorithm>

#include "nilalg/parse.hpp"

namespace nilalg {

Vec flattenForm(const BilinearForm& m) {
    size_t n = m.rows();
    Vec v(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            v[i * n + j] = m.at(i, j);
    return v;
}

BilinearForm unflattenForm(const Vec& v, size_t n) {
    BilinearForm m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = v[i * n + j];
    return m;
}

Scalar evalForm(const BilinearForm& theta, const Vec& u, const Vec& v) {
    size_t n = theta.rows();
    if (u.size() != n || v.size() != n)
        fail(ErrorKind::DimensionMismatch, "bilinear form argument length mismatch");
    Scalar out;
    for (size_t i = 0; i < n; ++i) {
        if (u[i].isZero())
            continue;
        for (size_t j = 0; j < n; ++j)
            if (!v[j].isZero() && !theta.at(i, j).isZero())
                out += u[i] * v[j] * theta.at(i, j);
    }
    return out;
}

std::string CocycleViolation::describe() const {
    std::string eq = kind == RightEquation ? "theta(xy,z)=theta(xz,y)" : "theta(x,yz)=theta(y,xz)";
    return eq + " violated by component " + std::to_string(component + 1) + " at (e" +
           std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(k) + ")";
}

std::optional<CocycleViolation> cocycleViolation(const Algebra& A, const BilinearForm& theta,
                                                 size_t componentIndex) {
    size_t n = A.dim();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec ei = unitVec(n, i), ej = unitVec(n, j), ek = unitVec(n, k);
                Vec eij = A.productOfBasis(i, j);
                Vec eik = A.productOfBasis(i, k);
                Vec ejk = A.productOfBasis(j, k);
                if (evalForm(theta, eij, ek) != evalForm(theta, eik, ej))
                    return CocycleViolation{CocycleViolation::RightEquation, componentIndex,
                                            i + 1, j + 1, k + 1};
                if (evalForm(theta, ei, ejk) != evalForm(theta, ej, eik))
                    return CocycleViolation{CocycleViolation::LeftEquation, componentIndex,
                                            i + 1, j + 1, k + 1};
            }
    return std::nullopt;
}

std::vector<BilinearForm> cocycleSpace(const Algebra& A) {
    size_t n = A.dim();
    // unknown theta_{lm} at coordinate l*n+m
    std::vector<Vec> rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                // theta(e_i e_j, e_k) - theta(e_i e_k, e_j) = 0
                Vec r1(n * n);
                for (size_t l = 0; l < n; ++l) {
                    if (!A.c(i, j, l).isZero())
                        r1[l * n + k] += A.c(i, j, l);
                    if (!A.c(i, k, l).isZero())
                        r1[l * n + j] -= A.c(i, k, l);
                }
                rows.push_back(std::move(r1));
                // theta(e_i, e_j e_k) - theta(e_j, e_i e_k) = 0
                Vec r2(n * n);
                for (size_t m = 0; m < n; ++m) {
                    if (!A.c(j, k, m).isZero())
                        r2[i * n + m] += A.c(j, k, m);
                    if (!A.c(i, k, m).isZero())
                        r2[j * n + m] -= A.c(i, k, m);
                }
                rows.push_back(std::move(r2));
            }
    Mat M = Mat::fromRows(rows);
    Subspace sol = Subspace::span(n * n, M.nullspace());
    std::vector<BilinearForm> out;
    for (const auto& v : sol.basis())
        out.push_back(unflattenForm(v, n));
    return out;
}

std::vector<BilinearForm> coboundarySpace(const Algebra& A) {
    size_t n = A.dim();
    std::vector<Vec> rows;
    for (size_t k = 0; k < n; ++k) {
        Vec r(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                r[i * n + j] = A.c(i, j, k);
        rows.push_back(std::move(r));
    }
    Subspace sp = Subspace::span(n * n, rows);
    std::vector<BilinearForm> out;
    for (const auto& v : sp.basis())
        out.push_back(unflattenForm(v, n));
    return out;
}

CohomologyData h2(const Algebra& A) {
    CohomologyData data;
    data.z2Basis = cocycleSpace(A);
    data.b2Basis = coboundarySpace(A);
    size_t n = A.dim();
    std::vector<Vec> b2rows;
    for (const auto& m : data.b2Basis)
        b2rows.push_back(flattenForm(m));
    Subspace b2 = Subspace::span(n * n, b2rows);
    std::vector<Vec> residuals;
    for (const auto& m : data.z2Basis) {
        Vec r = b2.reduce(flattenForm(m));
        if (!isZeroVec(r))
            residuals.push_back(std::move(r));
    }
    Subspace reps = Subspace::span(n * n, residuals);
    for (const auto& v : reps.basis())
        data.h2Reps.push_back(unflattenForm(v, n));
    return data;
}

Subspace cocycleAnnihilator(const Algebra& A, const VectorCocycle& theta) {
    size_t n = A.dim();
    std::vector<Vec> rows;
    for (const auto& comp : theta.components) {
        if (comp.rows() != n || comp.cols() != n)
            fail(ErrorKind::DimensionMismatch, "cocycle component dimension mismatch");
        // theta(x, e_j) = 0: sum_i x_i theta_{ij}; theta(e_j, x) = 0: sum_i x_i theta_{ji}
        for (size_t j = 0; j < n; ++j) {
            Vec r1(n), r2(n);
            for (size_t i = 0; i < n; ++i) {
                r1[i] = comp.at(i, j);
                r2[i] = comp.at(j, i);
            }
            rows.push_back(std::move(r1));
            rows.push_back(std::move(r2));
        }
    }
    Mat M = Mat::fromRows(rows);
    return Subspace::span(n, M.nullspace());
}

Algebra centralExtension(const Algebra& A, const VectorCocycle& theta) {
    size_t n = A.dim();
    size_t s = theta.arity();
    for (size_t c = 0; c < s; ++c) {
        if (theta.components[c].rows() != n)
            fail(ErrorKind::DimensionMismatch, "cocycle component dimension mismatch");
        if (auto viol = cocycleViolation(A, theta.components[c], c))
            fail(ErrorKind::NotACocycle, viol->describe());
    }
    Algebra ext(A.name() + "_ext", n + s);
    for (const auto& p : A.params())
        ext.addParam(p);
    if (A.radicand())
        ext.setRadicand(*A.radicand());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k)
                ext.setC(i, j, k, A.c(i, j, k));
            for (size_t c = 0; c < s; ++c)
                ext.setC(i, j, n + c, theta.components[c].at(i, j));
        }
    return ext;
}

TsReport checkTsMembership(const Algebra& A, const VectorCocycle& theta) {
    TsReport rep{};
    Subspace annTheta = cocycleAnnihilator(A, theta);
    Subspace annA = annihilator(A);
    rep.annTrivial = annTheta.intersect(annA).dim() == 0;

    size_t n = A.dim();
    auto b2 = coboundarySpace(A);
    std::vector<Vec> b2rows;
    for (const auto& m : b2)
        b2rows.push_back(flattenForm(m));
    Subspace b2sp = Subspace::span(n * n, b2rows);
    std::vector<Vec> residuals;
    for (const auto& comp : theta.components)
        residuals.push_back(b2sp.reduce(flattenForm(comp)));
    rep.classesIndependent =
        Subspace::span(n * n, residuals).dim() == theta.arity();
    return rep;
}

BilinearForm transformCocycle(const BilinearForm& theta, const Mat& phi) {
    return phi.transpose() * theta * phi;
}

Vec reduceModB2(const BilinearForm& theta, const std::vector<BilinearForm>& nablas,
                const std::vector<BilinearForm>& b2) {
    size_t n = theta.rows();
    size_t cols = nablas.size() + b2.size();
    Mat M(n * n, cols);
    for (size_t c = 0; c < nablas.size(); ++c) {
        Vec f = flattenForm(nablas[c]);
        for (size_t r = 0; r < n * n; ++r)
            M.at(r, c) = f[r];
    }
    for (size_t c = 0; c < b2.size(); ++c) {
        Vec f = flattenForm(b2[c]);
        for (size_t r = 0; r < n * n; ++r)
            M.at(r, nablas.size() + c) = f[r];
    }
    Vec sol = M.solve(flattenForm(theta));
    return Vec(sol.begin(), sol.begin() + static_cast<long>(nablas.size()));
}

NormalizationOutcome verifyNormalizationCase(const Algebra& genericBase,
                                             const NormalizationFamily& family,
                                             const NormalizationCase& item,
                                             const std::map<std::string, Scalar>& binding) {
    size_t n = genericBase.dim();
    NormalizationOutcome out;
    Algebra base = binding.empty() ? genericBase : genericBase.substituted(binding);

    ParseContext ctx;
    for (const auto& p : genericBase.params())
        ctx.params.insert(p.name);
    for (const auto& ap : family.autParams)
        ctx.params.insert(ap);
    for (size_t k = 1; k <= family.nablaExprs.size(); ++k)
        ctx.params.insert("a" + std::to_string(k));

    // nabla matrices over the base-parameter field, at the bound values
    std::vector<BilinearForm> nablas;
    for (const auto& expr : family.nablaExprs) {
        BilinearForm m = parseBilinearForm(expr, n, ctx);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                m.at(r, c) = m.at(r, c).substitute(binding);
        nablas.push_back(std::move(m));
    }

    // generic cocycle with condition-zero coefficients dropped
    std::vector<Scalar> coeffs(family.nablaExprs.size());
    for (size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = Scalar::variable("a" + std::to_string(k + 1));
    for (size_t z : item.zero)
        coeffs[z - 1] = Scalar::zero();

    BilinearForm theta(n, n);
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (!coeffs[k].isZero())
            theta = theta + nablas[k].scaled(coeffs[k]);

    // automorphism from the family shape and the chosen parameter expressions
    std::map<std::string, Scalar> chosen;
    for (const auto& [pname, pexpr] : item.choices)
        chosen[pname] = parseScalar(pexpr, ctx).substitute(binding).substitute(chosen);
    Mat phi(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            phi.at(r, c) = parseScalar(family.autMatrix[r][c], ctx)
                               .substitute(binding)
                               .substitute(chosen);

    if (!isAutomorphism(base, phi)) {
        out.detail = "chosen matrix is not an automorphism of " + base.name();
        return out;
    }

    BilinearForm transformed = transformCocycle(theta, phi);
    auto b2 = coboundarySpace(base);
    Vec c;
    try {
        c = reduceModB2(transformed, nablas, b2);
    } catch (const Error& e) {
        out.detail = std::string("transformed cocycle outside span: ") + e.what();
        return out;
    }

    std::vector<Scalar> rep = parseNablaCombination(item.representativeText,
                                                    family.nablaExprs.size(), ctx);
    size_t k0 = rep.size();
    for (size_t k = 0; k < rep.size(); ++k)
        if (!rep[k].isZero()) {
            k0 = k;
            break;
        }
    if (k0 == rep.size()) {
        out.detail = "representative vector is zero";
        return out;
    }
    Scalar lambda = c[k0] / rep[k0];
    if (lambda.isZero()) {
        out.detail = "transformed class vanishes on the representative's support";
        return out;
    }
    for (size_t k = 0; k < rep.size(); ++k) {
        Scalar resid = c[k] - lambda * rep[k];
        if (!resid.isZero()) {
            out.detail = "residual at nabla" + std::to_string(k + 1) + ": " + resid.str() +
                         " (class vector:" + vecStr(c) + ")";
            return out;
        }
    }
    out.pass = true;
    out.detail = "class = (" + lambda.str() + ") * representative";
    return out;
}

std::string checkCaseCoverage(const NormalizationFamily& family) {
    // group cases by context label
    std::map<std::string, std::vector<const NormalizationCase*>> groups;
    for (const auto& c : family.cases)
        groups[c.contextLabel].push_back(&c);

    for (const auto& [label, cases] : groups) {
        // the relevant coefficient indices in this group
        std::set<size_t> relevant;
        for (const auto* c : cases) {
            relevant.insert(c->nonzero.begin(), c->nonzero.end());
            relevant.insert(c->zero.begin(), c->zero.end());
        }
        for (const auto& pat : family.excludedPatterns)
            relevant.insert(pat.begin(), pat.end());
        std::vector<size_t> rel(relevant.begin(), relevant.end());
        size_t total = size_t{1} << rel.size();
        for (size_t mask = 0; mask < total; ++mask) {
            auto nonzeroAt = [&](size_t idx) {
                for (size_t b = 0; b < rel.size(); ++b)
                    if (rel[b] == idx)
                        return (mask >> b & 1u) != 0;
                return false;
            };
            bool excluded = false;
            for (const auto& pat : family.excludedPatterns) {
                bool allZero = std::none_of(pat.begin(), pat.end(), nonzeroAt);
                if (allZero) {
                    excluded = true;
                    break;
                }
            }
            if (excluded)
                continue;
            bool covered = false;
            for (const auto* c : cases) {
                bool ok = std::all_of(c->nonzero.begin(), c->nonzero.end(), nonzeroAt) &&
                          std::none_of(c->zero.begin(), c->zero.end(), nonzeroAt);
                if (ok) {
                    covered = true;
                    break;
                }
            }
            if (!covered) {
                std::string pat;
                for (size_t b = 0; b < rel.size(); ++b)
                    pat += "a" + std::to_string(rel[b]) + (mask >> b & 1u ? "!=0 " : "=0 ");
                return family.id + " [" + label + "]: uncovered pattern " + pat;
            }
        }
    }
    return "";
}

} // namespace nilalg
