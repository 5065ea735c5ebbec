#pragma once

#include <functional>
#include <set>

#include "nilalg/algebra.hpp"
#include "nilalg/cohomology.hpp"

namespace nilalg {

/// Declared names and radical context for the scalar literal grammar:
/// integers, fractions p/q, the imaginary unit i, declared parameter names,
/// sqrt(<polynomial>) restricted to the declared radicand, + - * / ^ and
/// parentheses.
struct ParseContext {
    std::set<std::string> params;
    std::optional<Polynomial> radicand;
};

Scalar parseScalar(const std::string& text, const ParseContext& ctx);

/// Linear combination of e1..en with scalar coefficients.
Vec parseLinearCombination(const std::string& text, size_t n, const ParseContext& ctx);

/// Sum of c*D(i,j) terms as an n x n bilinear form.
BilinearForm parseBilinearForm(const std::string& text, size_t n, const ParseContext& ctx);

/// Sum of c*nabla<k> terms as a coefficient vector of length `count`.
std::vector<Scalar> parseNablaCombination(const std::string& text, size_t count,
                                          const ParseContext& ctx);

Algebra parseAlgebraText(const std::string& text);

struct CocycleFile {
    std::string name;
    std::string overRef; // algebra reference, possibly with a parameter binding
    std::vector<std::string> componentExprs;
};
CocycleFile parseCocycleText(const std::string& text);

struct CertificateFile {
    std::string name;
    std::string sourceRef;
    std::optional<std::string> indexExpr;
    std::string targetRef;
    std::vector<std::string> constraintExprs; // polynomials required nonzero
    std::optional<std::string> radicalExpr;
    std::vector<std::string> basisExprs; // E1..En right-hand sides
};
CertificateFile parseCertificateText(const std::string& text);

struct ExpectedFile {
    std::map<std::string, std::string> values; // raw key=value pairs
};
ExpectedFile parseExpectedText(const std::string& text);

NormalizationFamily parseNormalizationText(const std::string& text);

/// Algebra reference grammar: `Name` or `Name(<scalar expr>)` binding the
/// single declared parameter.
struct AlgebraRef {
    std::string id;
    std::optional<std::string> argExpr;
};
AlgebraRef parseAlgebraRef(const std::string& text);

std::string readFile(const std::string& path);

} // namespace nilalg
