#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilalg/rational.hpp"

namespace nilalg {

/// Multivariate polynomial over Q(i). Variables are kept sorted by name and
/// pruned when unused; terms are kept in graded-lexicographic order with the
/// leading term first, so structural equality decides value equality.
class Polynomial {
public:
    using Exponents = std::vector<uint32_t>;

    struct TermOrder {
        // graded lex, descending: leading term compares smallest under map order
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, GaussRational, TermOrder>;

    Polynomial() = default;
    explicit Polynomial(GaussRational c);
    static Polynomial variable(const std::string& name);
    static Polynomial constant(GaussRational c) { return Polynomial(std::move(c)); }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return vars_.empty(); }
    /// Constant value; only valid when isConstant().
    GaussRational constantValue() const;

    bool dependsOn(const std::string& var) const;
    uint32_t degreeIn(const std::string& var) const;
    uint32_t totalDegree() const;

    /// Leading coefficient under the graded-lex term order.
    GaussRational leadingCoeff() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const GaussRational& c) const;
    Polynomial pow(uint32_t e) const;

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    /// Arbitrary total order for use as container key.
    bool operator<(const Polynomial& o) const;

    /// Exact division; nullopt when o does not divide *this.
    std::optional<Polynomial> dividedBy(const Polynomial& o) const;

    /// Monic gcd (leading coefficient 1) via fraction-free subresultant PRS.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    /// this with var set to zero (terms of positive degree in var dropped).
    Polynomial atZero(const std::string& var) const;

    /// Divide every coefficient so the leading one is 1. Zero stays zero.
    Polynomial monic() const;

    std::string str() const;

private:
    friend struct PolynomialOps;
    void normalize();

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Polynomial operator*(const GaussRational& c, const Polynomial& p) { return p * c; }

} // namespace nilalg
