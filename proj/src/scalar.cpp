#include "nilalg/scalar.hpp"

namespace nilalg {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero())
        fail(ErrorKind::MalformedScalar, "zero denominator in rational function");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.isZero()) {
        den_ = Polynomial(GaussRational(1));
        return;
    }
    if (den_.isConstant()) {
        GaussRational lc = den_.constantValue();
        if (!lc.isOne()) {
            num_ = num_ * lc.inverse();
            den_ = Polynomial(GaussRational(1));
        }
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!(g.isConstant() && g.constantValue().isOne())) {
        num_ = *num_.dividedBy(g);
        den_ = *den_.dividedBy(g);
    }
    GaussRational lc = den_.leadingCoeff();
    if (!lc.isOne()) {
        GaussRational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction f;
    f.num_ = -num_;
    f.den_ = den_;
    return f;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (num_.isZero())
        fail(ErrorKind::DivisionByZero, "division by zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::atZero(const std::string& var) const {
    Polynomial d0 = den_.atZero(var);
    if (d0.isZero())
        fail(ErrorKind::PoleAtZero,
             "pole at " + var + " = 0 in " + str());
    return RationalFunction(num_.atZero(var), std::move(d0));
}

std::string RationalFunction::str() const {
    if (den_.isConstant() && den_.constantValue().isOne()) {
        return num_.str();
    }
    auto wrap = [](const Polynomial& p) {
        std::string s = p.str();
        if (p.terms().size() > 1 || s.find('*') != std::string::npos ||
            s.find('/') != std::string::npos || (s.size() > 1 && s[0] == '-'))
            return "(" + s + ")";
        return s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------------------

Scalar::Scalar(RationalFunction base, RationalFunction rad, Polynomial radicand)
    : base_(std::move(base)), rad_(std::move(rad)), radicand_(std::move(radicand)) {
    normalize();
}

Scalar Scalar::sqrtOf(Polynomial radicand) {
    return Scalar(RationalFunction(), RationalFunction(Polynomial(GaussRational(1))),
                  std::move(radicand));
}

void Scalar::normalize() {
    if (rad_.isZero())
        radicand_.reset();
    else if (radicand_ && radicand_->isZero()) {
        rad_ = RationalFunction();
        radicand_.reset();
    }
}

std::optional<Polynomial> Scalar::asPolynomial() const {
    if (!rad_.isZero() || !base_.isPolynomial())
        return std::nullopt;
    return base_.num() * base_.den().constantValue().inverse();
}

std::optional<GaussRational> Scalar::asConstant() const {
    auto p = asPolynomial();
    if (!p || !p->isConstant())
        return std::nullopt;
    return p->constantValue();
}

namespace {

const Polynomial* commonRadicand(const Scalar& a, const Scalar& b) {
    if (a.radicand() && b.radicand()) {
        if (*a.radicand() != *b.radicand())
            fail(ErrorKind::MixedRadicand,
                 "scalars from different radical contexts: sqrt(" + a.radicand()->str() +
                     ") vs sqrt(" + b.radicand()->str() + ")");
        return &*a.radicand();
    }
    if (a.radicand())
        return &*a.radicand();
    if (b.radicand())
        return &*b.radicand();
    return nullptr;
}

} // namespace

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.base_ = -s.base_;
    s.rad_ = -s.rad_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (o.isZero())
        return *this;
    if (isZero())
        return o;
    const Polynomial* R = commonRadicand(*this, o);
    Scalar s;
    s.base_ = base_ + o.base_;
    s.rad_ = rad_ + o.rad_;
    if (R)
        s.radicand_ = *R;
    s.normalize();
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (isZero() || o.isZero())
        return Scalar();
    if (isOne())
        return o;
    if (o.isOne())
        return *this;
    const Polynomial* R = commonRadicand(*this, o);
    Scalar s;
    if (R) {
        RationalFunction rr(*R);
        s.base_ = base_ * o.base_ + rad_ * o.rad_ * rr;
        s.rad_ = base_ * o.rad_ + rad_ * o.base_;
        s.radicand_ = *R;
    } else {
        s.base_ = base_ * o.base_;
    }
    s.normalize();
    return s;
}

Scalar Scalar::inverse() const {
    if (rad_.isZero())
        return Scalar(base_.inverse());
    RationalFunction norm = base_ * base_ - rad_ * rad_ * RationalFunction(*radicand_);
    if (norm.isZero())
        fail(ErrorKind::DivisionByZero,
             "non-invertible radical scalar (norm zero): " + str());
    RationalFunction ninv = norm.inverse();
    return Scalar(base_ * ninv, -(rad_ * ninv), *radicand_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.isZero())
        fail(ErrorKind::DivisionByZero, "scalar division by zero");
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    Scalar acc = Scalar::one();
    Scalar b(*this);
    unsigned long u = static_cast<unsigned long>(e);
    while (u > 0) {
        if (u & 1ul)
            acc = acc * b;
        b = b * b;
        u >>= 1ul;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (base_ != o.base_ || rad_ != o.rad_)
        return false;
    if (rad_.isZero())
        return true;
    return *radicand_ == *o.radicand_;
}

bool Scalar::dependsOn(const std::string& param) const {
    if (base_.num().dependsOn(param) || base_.den().dependsOn(param) ||
        rad_.num().dependsOn(param) || rad_.den().dependsOn(param))
        return true;
    return radicand_ && radicand_->dependsOn(param);
}

Scalar evaluate(const Polynomial& p, const std::map<std::string, Scalar>& bindings) {
    Scalar acc;
    for (const auto& [e, c] : p.terms()) {
        Scalar term{GaussRational(c)};
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            auto it = bindings.find(p.vars()[i]);
            Scalar v = it != bindings.end() ? it->second : Scalar::variable(p.vars()[i]);
            term = term * v.pow(static_cast<long>(e[i]));
        }
        acc = acc + term;
    }
    return acc;
}

namespace {

Scalar evaluateRF(const RationalFunction& f, const std::map<std::string, Scalar>& bindings) {
    Scalar n = evaluate(f.num(), bindings);
    Scalar d = evaluate(f.den(), bindings);
    if (d.isZero())
        fail(ErrorKind::EvaluationPole,
             "substitution makes denominator " + f.den().str() + " vanish");
    return n / d;
}

} // namespace

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
    Scalar b = evaluateRF(base_, bindings);
    if (rad_.isZero())
        return b;
    Scalar r = evaluateRF(rad_, bindings);
    Scalar radicandValue = evaluate(*radicand_, bindings);
    auto rp = radicandValue.asPolynomial();
    if (!rp)
        fail(ErrorKind::MalformedScalar,
             "substitution must keep the radicand polynomial: " + radicand_->str());
    return b + r * Scalar::sqrtOf(*rp);
}

Scalar Scalar::limitAtZero(const std::string& param) const {
    Scalar out;
    out.base_ = base_.atZero(param);
    if (rad_.isZero())
        return out;
    out.rad_ = rad_.atZero(param);
    out.radicand_ = radicand_->atZero(param);
    out.normalize();
    return out;
}

std::string Scalar::str() const {
    if (rad_.isZero())
        return base_.str();
    auto wrap = [](const RationalFunction& f) {
        std::string s = f.str();
        bool simple = s.find('+') == std::string::npos && s.find('-') == std::string::npos &&
                      s.find('/') == std::string::npos && s.find('*') == std::string::npos;
        return simple ? s : "(" + s + ")";
    };
    std::string radPart;
    if (rad_.isOne())
        radPart = "sqrt(" + radicand_->str() + ")";
    else
        radPart = wrap(rad_) + "*sqrt(" + radicand_->str() + ")";
    if (base_.isZero())
        return radPart;
    return wrap(base_) + "+" + radPart;
}

} // namespace nilalg
