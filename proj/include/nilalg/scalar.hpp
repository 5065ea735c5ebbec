#pragma once

#include <map>
#include <optional>
#include <string>

#include "nilalg/polynomial.hpp"

namespace nilalg {

/// num/den with gcd(num, den) = 1 and den monic under the term order.
class RationalFunction {
public:
    RationalFunction() : den_(GaussRational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(GaussRational(1)) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_ == den_; }
    bool isPolynomial() const { return den_.isConstant(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction inverse() const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Value at var = 0; PoleAtZero when the canonical denominator vanishes there.
    RationalFunction atZero(const std::string& var) const;

    std::string str() const;

private:
    void reduce();

    Polynomial num_;
    Polynomial den_;
};

/// Element of the scalar tower: base + rad * r where r^2 equals the radicand
/// polynomial. Values with zero radical part drop the radicand, so plain
/// rational-function scalars and radical-context scalars interoperate.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : base_(Polynomial(GaussRational(n))) {}
    explicit Scalar(Rational q) : base_(Polynomial(GaussRational(std::move(q)))) {}
    explicit Scalar(GaussRational g) : base_(Polynomial(std::move(g))) {}
    explicit Scalar(Polynomial p) : base_(RationalFunction(std::move(p))) {}
    explicit Scalar(RationalFunction f) : base_(std::move(f)) {}
    Scalar(RationalFunction base, RationalFunction rad, Polynomial radicand);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(GaussRational::i()); }
    static Scalar variable(const std::string& name) { return Scalar(Polynomial::variable(name)); }
    static Scalar sqrtOf(Polynomial radicand);

    const RationalFunction& base() const { return base_; }
    const RationalFunction& rad() const { return rad_; }
    const std::optional<Polynomial>& radicand() const { return radicand_; }

    bool isZero() const { return base_.isZero() && rad_.isZero(); }
    bool isOne() const { return rad_.isZero() && base_.isOne(); }
    bool hasRadical() const { return radicand_.has_value(); }

    /// The value as a polynomial, when it is one (no radical, den = 1).
    std::optional<Polynomial> asPolynomial() const;
    /// The value as a Gaussian rational constant, when it is one.
    std::optional<GaussRational> asConstant() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Replace parameters by scalar values; EvaluationPole when a stored
    /// denominator evaluates to zero.
    Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

    /// Value at param = 0; PoleAtZero when the canonical denominator vanishes.
    Scalar limitAtZero(const std::string& param) const;

    bool dependsOn(const std::string& param) const;

    std::string str() const;

private:
    void normalize();

    RationalFunction base_;
    RationalFunction rad_;
    std::optional<Polynomial> radicand_;
};

/// Evaluate a polynomial with parameters replaced per bindings; parameters not
/// bound stay symbolic.
Scalar evaluate(const Polynomial& p, const std::map<std::string, Scalar>& bindings);

} // namespace nilalg
