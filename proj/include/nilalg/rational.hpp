#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "nilalg/errors.hpp"

namespace nilalg {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored with gcd(num, den) = 1 and den > 0.
class Rational {
public:
    Rational() = default;
    Rational(long n) : num_(n) {}
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    bool isOne() const { return num_ == 1 && den_ == 1; }
    bool isInteger() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_, NoNorm{}); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.isZero())
            fail(ErrorKind::DivisionByZero, "rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational inverse() const { return Rational(1) / *this; }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

private:
    struct NoNorm {};
    Rational(BigInt n, BigInt d, NoNorm) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0)
            fail(ErrorKind::MalformedScalar, "zero denominator in rational");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

/// Element of Q(i): re + im*i with i^2 = -1.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isOne() const { return re_.isOne() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    GaussRational operator+(const GaussRational& o) const {
        return GaussRational(re_ + o.re_, im_ + o.im_);
    }
    GaussRational operator-(const GaussRational& o) const {
        return GaussRational(re_ - o.re_, im_ - o.im_);
    }
    GaussRational operator*(const GaussRational& o) const {
        return GaussRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussRational inverse() const {
        if (isZero())
            fail(ErrorKind::DivisionByZero, "gaussian rational division by zero");
        Rational n = re_ * re_ + im_ * im_;
        return GaussRational(re_ / n, -im_ / n);
    }
    GaussRational operator/(const GaussRational& o) const { return *this * o.inverse(); }

    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }

    bool operator==(const GaussRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    /// "3", "-1/2", "i", "-i", "2*i", "1+2*i", "1-i"
    std::string str() const {
        if (im_.isZero())
            return re_.str();
        std::string imPart;
        if (im_.isOne())
            imPart = "i";
        else if ((-im_).isOne())
            imPart = "-i";
        else
            imPart = im_.str() + "*i";
        if (re_.isZero())
            return imPart;
        if (!imPart.empty() && imPart[0] != '-')
            return re_.str() + "+" + imPart;
        return re_.str() + imPart;
    }

    /// True when str() needs parentheses inside a product.
    bool needsParens() const {
        return !im_.isZero() && !re_.isZero();
    }

private:
    Rational re_;
    Rational im_;
};

} // namespace nilalg
