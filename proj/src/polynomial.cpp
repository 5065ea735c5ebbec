#include "nilalg/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace nilalg {

bool Polynomial::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(GaussRational c) {
    if (!c.isZero())
        terms_.emplace(Exponents{}, std::move(c));
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, GaussRational(1));
    return p;
}

GaussRational Polynomial::constantValue() const {
    if (terms_.empty())
        return GaussRational(0);
    return terms_.begin()->second;
}

bool Polynomial::dependsOn(const std::string& var) const {
    return degreeIn(var) > 0;
}

uint32_t Polynomial::degreeIn(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[idx]);
    return d;
}

uint32_t Polynomial::totalDegree() const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<uint32_t>(d, std::accumulate(e.begin(), e.end(), uint32_t{0}));
    return d;
}

GaussRational Polynomial::leadingCoeff() const {
    if (terms_.empty())
        return GaussRational(0);
    return terms_.begin()->second;
}

void Polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.isZero())
            it = terms_.erase(it);
        else
            ++it;
    }
    // prune unused variables
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
        return;
    std::vector<std::string> newVars;
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            newVars.push_back(vars_[i]);
            keep.push_back(i);
        }
    TermMap newTerms;
    for (const auto& [e, c] : terms_) {
        Exponents ne(keep.size());
        for (size_t i = 0; i < keep.size(); ++i)
            ne[i] = e[keep[i]];
        newTerms.emplace(std::move(ne), c);
    }
    vars_ = std::move(newVars);
    terms_ = std::move(newTerms);
}

namespace {

// Remap exponents of p onto the merged, sorted variable list.
Polynomial::TermMap remapTerms(const Polynomial& p, const std::vector<std::string>& merged) {
    std::vector<size_t> pos(p.vars().size());
    for (size_t i = 0; i < p.vars().size(); ++i) {
        auto it = std::lower_bound(merged.begin(), merged.end(), p.vars()[i]);
        pos[i] = static_cast<size_t>(it - merged.begin());
    }
    Polynomial::TermMap out;
    for (const auto& [e, c] : p.terms()) {
        Polynomial::Exponents ne(merged.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            ne[pos[i]] = e[i];
        out.emplace(std::move(ne), c);
    }
    return out;
}

std::vector<std::string> mergeVars(const std::vector<std::string>& a,
                                   const std::vector<std::string>& b) {
    std::vector<std::string> merged;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    return merged;
}

} // namespace

struct PolynomialOps {
    static Polynomial make(std::vector<std::string> vars, Polynomial::TermMap terms) {
        Polynomial p;
        p.vars_ = std::move(vars);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    static Polynomial addSub(const Polynomial& a, const Polynomial& b, bool sub) {
        auto merged = mergeVars(a.vars(), b.vars());
        auto ta = remapTerms(a, merged);
        auto tb = remapTerms(b, merged);
        for (auto& [e, c] : tb) {
            auto it = ta.find(e);
            GaussRational v = sub ? -c : c;
            if (it == ta.end())
                ta.emplace(e, v);
            else
                it->second += v;
        }
        return make(std::move(merged), std::move(ta));
    }

    static Polynomial mul(const Polynomial& a, const Polynomial& b) {
        auto merged = mergeVars(a.vars(), b.vars());
        auto ta = remapTerms(a, merged);
        auto tb = remapTerms(b, merged);
        Polynomial::TermMap out;
        for (const auto& [ea, ca] : ta)
            for (const auto& [eb, cb] : tb) {
                Polynomial::Exponents e(merged.size());
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                GaussRational c = ca * cb;
                auto it = out.find(e);
                if (it == out.end())
                    out.emplace(std::move(e), std::move(c));
                else
                    it->second += c;
            }
        return make(std::move(merged), std::move(out));
    }

    // --- univariate view helpers over a chosen variable (by index in vars_) ---

    // coefficients by degree in vars_[vi]; coefficient polys keep remaining vars
    static std::map<uint32_t, Polynomial> univariate(const Polynomial& p, size_t vi) {
        std::map<uint32_t, std::pair<std::vector<std::string>, Polynomial::TermMap>> buckets;
        std::vector<std::string> restVars = p.vars();
        restVars.erase(restVars.begin() + static_cast<long>(vi));
        for (const auto& [e, c] : p.terms()) {
            Polynomial::Exponents ne(e);
            uint32_t d = ne[vi];
            ne.erase(ne.begin() + static_cast<long>(vi));
            auto& slot = buckets[d];
            slot.first = restVars;
            slot.second.emplace(std::move(ne), c);
        }
        std::map<uint32_t, Polynomial> out;
        for (auto& [d, slot] : buckets)
            out.emplace(d, make(std::move(slot.first), std::move(slot.second)));
        return out;
    }

    static Polynomial fromUnivariate(const std::map<uint32_t, Polynomial>& coeffs,
                                     const std::string& var) {
        Polynomial x = Polynomial::variable(var);
        Polynomial out;
        for (const auto& [d, c] : coeffs)
            out += c * x.pow(d);
        return out;
    }

    static uint32_t degOf(const std::map<uint32_t, Polynomial>& u) {
        return u.empty() ? 0 : u.rbegin()->first;
    }

    static Polynomial lcOf(const std::map<uint32_t, Polynomial>& u) {
        return u.empty() ? Polynomial() : u.rbegin()->second;
    }
};

Polynomial Polynomial::operator-() const {
    Polynomial p(*this);
    for (auto& [e, c] : p.terms_)
        c = -c;
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    return PolynomialOps::addSub(*this, o, false);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return PolynomialOps::addSub(*this, o, true);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    return PolynomialOps::mul(*this, o);
}

Polynomial Polynomial::operator*(const GaussRational& c) const {
    if (c.isZero())
        return Polynomial();
    Polynomial p(*this);
    for (auto& [e, v] : p.terms_)
        v *= c;
    return p;
}

Polynomial Polynomial::pow(uint32_t e) const {
    Polynomial acc(GaussRational(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1u)
            acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (vars_ != o.vars_)
        return vars_ < o.vars_;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    TermOrder lt;
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first)
            return lt(it->first, jt->first);
        if (it->second != jt->second)
            return it->second.str() < jt->second.str();
    }
    return it == terms_.end() && jt != o.terms_.end();
}

std::optional<Polynomial> Polynomial::dividedBy(const Polynomial& o) const {
    if (o.isZero())
        return std::nullopt;
    if (o.isConstant()) {
        return *this * o.constantValue().inverse();
    }
    auto merged = mergeVars(vars_, o.vars_);
    Polynomial rem = PolynomialOps::make(merged, remapTerms(*this, merged));
    Polynomial div = PolynomialOps::make(merged, remapTerms(o, merged));
    // after make() vars may have been pruned; align again each round via ops
    Polynomial quot;
    while (!rem.isZero()) {
        auto mergedNow = mergeVars(rem.vars_, div.vars_);
        auto tr = remapTerms(rem, mergedNow);
        auto td = remapTerms(div, mergedNow);
        const auto& [er, cr] = *tr.begin();
        const auto& [ed, cd] = *td.begin();
        Exponents q(mergedNow.size());
        for (size_t i = 0; i < q.size(); ++i) {
            if (er[i] < ed[i])
                return std::nullopt;
            q[i] = er[i] - ed[i];
        }
        TermMap mono;
        mono.emplace(std::move(q), cr / cd);
        Polynomial m = PolynomialOps::make(mergedNow, std::move(mono));
        quot += m;
        rem = rem - m * div;
    }
    return quot;
}

Polynomial Polynomial::atZero(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
        return *this;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    TermMap out;
    for (const auto& [e, c] : terms_)
        if (e[idx] == 0)
            out.emplace(e, c);
    return PolynomialOps::make(vars_, std::move(out));
}

Polynomial Polynomial::monic() const {
    if (isZero())
        return *this;
    return *this * leadingCoeff().inverse();
}

namespace {

Polynomial exactDiv(const Polynomial& a, const Polynomial& b) {
    auto q = a.dividedBy(b);
    if (!q)
        fail(ErrorKind::Internal, "inexact polynomial division in gcd");
    return *q;
}

Polynomial gcdList(const std::vector<Polynomial>& ps) {
    Polynomial g;
    for (const auto& p : ps) {
        g = Polynomial::gcd(g, p);
        if (g.isConstant() && !g.isZero())
            return g;
    }
    return g;
}

// content of p w.r.t. variable index vi (gcd of univariate coefficients)
Polynomial contentIn(const Polynomial& p, size_t vi) {
    auto u = PolynomialOps::univariate(p, vi);
    std::vector<Polynomial> coeffs;
    for (auto& [d, c] : u)
        coeffs.push_back(c);
    return gcdList(coeffs);
}

// pseudo-remainder of F by G in the chosen variable, both as univariate views
std::map<uint32_t, Polynomial> prem(std::map<uint32_t, Polynomial> F,
                                    const std::map<uint32_t, Polynomial>& G) {
    uint32_t dG = PolynomialOps::degOf(G);
    Polynomial lcG = PolynomialOps::lcOf(G);
    uint32_t steps = 0;
    uint32_t dF0 = PolynomialOps::degOf(F);
    uint32_t maxSteps = dF0 >= dG ? dF0 - dG + 1 : 0;
    while (!F.empty() && PolynomialOps::degOf(F) >= dG) {
        uint32_t dF = PolynomialOps::degOf(F);
        Polynomial lcF = PolynomialOps::lcOf(F);
        std::map<uint32_t, Polynomial> next;
        // next = lcG * F - lcF * x^(dF-dG) * G
        for (const auto& [d, c] : F) {
            if (d == dF)
                continue;
            next[d] = lcG * c;
        }
        for (const auto& [d, c] : G) {
            if (d == dG)
                continue;
            uint32_t nd = d + (dF - dG);
            auto it = next.find(nd);
            if (it == next.end())
                next[nd] = -(lcF * c);
            else
                it->second -= lcF * c;
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.isZero())
                it = next.erase(it);
            else
                ++it;
        }
        F = std::move(next);
        ++steps;
    }
    // scale so the result equals lcG^(dF0-dG+1) * F0 mod G
    if (steps < maxSteps) {
        Polynomial scale = lcG.pow(maxSteps - steps);
        for (auto& [d, c] : F)
            c = c * scale;
    }
    return F;
}

// subresultant PRS on primitive parts; returns gcd of the primitive parts
Polynomial gcdPrimitive(Polynomial F, Polynomial G, const std::string& var) {
    auto uni = [&](const Polynomial& p) {
        auto vs = p.vars();
        auto it = std::find(vs.begin(), vs.end(), var);
        if (it == vs.end()) {
            std::map<uint32_t, Polynomial> m;
            if (!p.isZero())
                m.emplace(0u, p);
            return m;
        }
        return PolynomialOps::univariate(p, static_cast<size_t>(it - vs.begin()));
    };
    auto uF = uni(F);
    auto uG = uni(G);
    if (PolynomialOps::degOf(uF) < PolynomialOps::degOf(uG))
        std::swap(uF, uG);
    Polynomial g(GaussRational(1)), h(GaussRational(1));
    while (true) {
        uint32_t dF = PolynomialOps::degOf(uF);
        uint32_t dG = PolynomialOps::degOf(uG);
        uint32_t delta = dF - dG;
        auto R = prem(uF, uG);
        if (R.empty())
            break;
        if (PolynomialOps::degOf(R) == 0) {
            // gcd of primitive parts is trivial
            return Polynomial(GaussRational(1));
        }
        uF = std::move(uG);
        Polynomial divisor = g * h.pow(delta);
        std::map<uint32_t, Polynomial> newG;
        for (auto& [d, c] : R)
            newG.emplace(d, exactDiv(c, divisor));
        uG = std::move(newG);
        g = PolynomialOps::lcOf(uF);
        if (delta > 0) {
            Polynomial gd = g.pow(delta);
            h = (delta == 1) ? gd : exactDiv(gd, h.pow(delta - 1));
        }
    }
    // primitive part of uG
    Polynomial result = PolynomialOps::fromUnivariate(uG, var);
    auto vs = result.vars();
    auto it = std::find(vs.begin(), vs.end(), var);
    if (it != vs.end()) {
        Polynomial cont = contentIn(result, static_cast<size_t>(it - vs.begin()));
        result = exactDiv(result, cont);
    }
    return result;
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.isZero())
        return b.monic();
    if (b.isZero())
        return a.monic();
    if (a.isConstant() || b.isConstant())
        return Polynomial(GaussRational(1));
    // first variable (name order) present in either
    std::string var = a.vars_.empty() ? b.vars_.front()
                                      : (b.vars_.empty() ? a.vars_.front()
                                                         : std::min(a.vars_.front(), b.vars_.front()));
    uint32_t da = a.degreeIn(var);
    uint32_t db = b.degreeIn(var);
    if (da == 0 && db == 0)
        fail(ErrorKind::Internal, "gcd: chosen variable absent from both polynomials");
    if (da == 0) {
        auto vs = b.vars_;
        size_t vi = static_cast<size_t>(std::find(vs.begin(), vs.end(), var) - vs.begin());
        return gcd(a, contentIn(b, vi));
    }
    if (db == 0) {
        auto vs = a.vars_;
        size_t vi = static_cast<size_t>(std::find(vs.begin(), vs.end(), var) - vs.begin());
        return gcd(contentIn(a, vi), b);
    }
    size_t via = static_cast<size_t>(std::find(a.vars_.begin(), a.vars_.end(), var) - a.vars_.begin());
    size_t vib = static_cast<size_t>(std::find(b.vars_.begin(), b.vars_.end(), var) - b.vars_.begin());
    Polynomial contA = contentIn(a, via);
    Polynomial contB = contentIn(b, vib);
    Polynomial ppA = exactDiv(a, contA);
    Polynomial ppB = exactDiv(b, contB);
    Polynomial c = gcd(contA, contB);
    Polynomial pp = gcdPrimitive(ppA, ppB, var);
    return (c * pp).monic();
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string cs;
        if (mono.empty()) {
            cs = c.needsParens() ? "(" + c.str() + ")" : c.str();
        } else if (c.isOne()) {
            cs = mono;
        } else if ((-c).isOne()) {
            cs = "-" + mono;
        } else {
            cs = (c.needsParens() ? "(" + c.str() + ")" : c.str()) + "*" + mono;
        }
        if (first) {
            out = cs;
            first = false;
        } else if (!cs.empty() && cs[0] == '-') {
            out += cs;
        } else {
            out += "+" + cs;
        }
    }
    return out;
}

} // namespace nilalg
