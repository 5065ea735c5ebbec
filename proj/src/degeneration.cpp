#include "nilalg/degeneration.hpp"

#include <algorithm>

namespace nilalg {

std::string CertApplication::summary() const {
    if (pass)
        return "ok; det " + detNote;
    std::string s = "failures:";
    for (const auto& f : failures) {
        s += " (" + std::to_string(f.i) + "," + std::to_string(f.j) + "," + std::to_string(f.k) +
             ") " + (f.pole ? "pole: " : "residual ") + f.detail + ";";
        if (s.size() > 400) {
            s += " ...";
            break;
        }
    }
    return s;
}

CertApplication applyCertificate(const Catalog& cat, const CertificateFile& cert,
                                 const std::map<std::string, Scalar>& familyBinding) {
    CertApplication out;

    ParseContext ctx;
    ctx.params.insert("t");
    Algebra source = cat.resolveRef(cert.sourceRef, {"t"});
    Algebra target = cat.resolveRef(cert.targetRef, {"t"});
    for (const auto& p : source.params())
        ctx.params.insert(p.name);
    for (const auto& p : target.params())
        ctx.params.insert(p.name);

    if (cert.indexExpr) {
        if (source.params().empty())
            fail(ErrorKind::ParseError, cert.name + ": index on a parameterless source");
        Scalar f = parseScalar(*cert.indexExpr, ctx);
        source = source.substituted({{source.params().front().name, f}});
    }
    if (!familyBinding.empty()) {
        source = source.substituted(familyBinding);
        target = target.substituted(familyBinding);
    }
    if (source.dim() != target.dim())
        fail(ErrorKind::DimensionMismatch, cert.name + ": source and target dimensions differ");
    size_t n = source.dim();

    if (cert.radicalExpr) {
        Scalar r = parseScalar(*cert.radicalExpr, ctx);
        auto poly = r.asPolynomial();
        if (!poly)
            fail(ErrorKind::ParseError, cert.name + ": radical must be a polynomial");
        ctx.radicand = *poly;
    }

    // constraints must stay nonzero under the binding
    for (const auto& cexpr : cert.constraintExprs) {
        Scalar c = parseScalar(cexpr, ctx).substitute(familyBinding);
        if (c.isZero())
            fail(ErrorKind::ConstraintViolation,
                 cert.name + ": constraint " + cexpr + " != 0 violated by the binding");
    }

    Mat P(n, n);
    for (size_t r = 0; r < n; ++r) {
        Vec row = parseLinearCombination(cert.basisExprs[r], n, ctx);
        for (size_t c = 0; c < n; ++c)
            P.at(c, r) = row[c].substitute(familyBinding);
    }
    Scalar det = P.det();
    if (det.isZero()) {
        out.failures.push_back({0, 0, 0, false, "parametrized basis is singular"});
        return out;
    }
    out.detNote = det.str();

    Algebra inBasis = changeBasis(source, P);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Scalar want = target.c(i, j, k);
                Scalar lim;
                try {
                    lim = inBasis.c(i, j, k).limitAtZero("t");
                } catch (const Error& e) {
                    out.failures.push_back({i + 1, j + 1, k + 1, true, e.what()});
                    continue;
                }
                if (lim != want)
                    out.failures.push_back(
                        {i + 1, j + 1, k + 1, false,
                         (lim - want).str() + " (limit " + lim.str() + ", target " +
                             want.str() + ")"});
            }
    out.pass = out.failures.empty();
    return out;
}

NecessaryConditionReport checkNecessaryConditions(const Algebra& src, const Algebra& tgt) {
    NecessaryConditionReport r{};
    r.derSrc = derivations(src).dim();
    r.derTgt = derivations(tgt).dim();
    auto ps = powerSeries(src);
    auto pt = powerSeries(tgt);
    r.sqSrc = ps.chain.size() > 1 ? ps.chain[1].dim() : 0;
    r.sqTgt = pt.chain.size() > 1 ? pt.chain[1].dim() : 0;
    r.derOk = r.derSrc < r.derTgt;
    r.sqOk = r.sqSrc >= r.sqTgt;
    return r;
}

namespace {

// family parameters still free in a certificate (for numeric sampling)
std::vector<std::string> freeParams(const Catalog& cat, const CertificateFile& cert) {
    std::set<std::string> names;
    Algebra source = cat.resolveRef(cert.sourceRef, {"t"});
    Algebra target = cat.resolveRef(cert.targetRef, {"t"});
    if (!cert.indexExpr) // index substitution consumes the source parameter
        for (const auto& p : source.params())
            names.insert(p.name);
    for (const auto& p : target.params())
        names.insert(p.name);
    names.erase("t");
    return {names.begin(), names.end()};
}

bool sampleAdmissible(const Catalog& cat, const CertificateFile& cert,
                      const std::string& param, const Scalar& value) {
    ParseContext ctx;
    ctx.params.insert("t");
    ctx.params.insert(param);
    for (const auto& cexpr : cert.constraintExprs) {
        Scalar c = parseScalar(cexpr, ctx).substitute({{param, value}});
        if (c.isZero())
            return false;
    }
    auto checkExcluded = [&](const Algebra& A) {
        for (const auto& p : A.params())
            if (p.name == param)
                for (const auto& ex : p.excluded)
                    if (ex == value)
                        return true;
        return false;
    };
    return !checkExcluded(cat.resolveRef(cert.sourceRef, {"t"})) &&
           !checkExcluded(cat.resolveRef(cert.targetRef, {"t"}));
}

} // namespace

Report verifyDegenerationTable(const Catalog& cat) {
    Report rep;
    rep.command = "degeneration-table";
    for (const auto& id : cat.certificateIds()) {
        const CertificateEntry& entry = cat.certificate(id);
        if (entry.kind != CertificateEntry::Table)
            continue;
        rep.add(timedItem(id, "certificate", [&]() -> std::pair<bool, std::string> {
            CertApplication generic = applyCertificate(cat, entry.file);
            if (!generic.pass)
                return {false, "suspected typo in the printed row; " + generic.summary()};
            std::string detail = "generic ok; det " + generic.detNote;
            auto params = freeParams(cat, entry.file);
            if (!params.empty()) {
                const std::string& pname = params.front();
                std::string sampled;
                for (const auto& v : Catalog::parameterSamples()) {
                    if (!sampleAdmissible(cat, entry.file, pname, v))
                        continue;
                    CertApplication s = applyCertificate(cat, entry.file, {{pname, v}});
                    if (!s.pass)
                        return {false, pname + "=" + v.str() + ": " + s.summary()};
                    sampled += (sampled.empty() ? "" : ",") + v.str();
                }
                if (!sampled.empty())
                    detail += "; samples " + pname + " in {" + sampled + "}";
            }
            return {true, detail};
        }));
    }
    return rep;
}

Report verifyComponentFamilies(const Catalog& cat) {
    Report rep;
    rep.command = "component-families";

    // auxiliary basis of the radical family: change to f_i and compare with
    // the catalog's auxiliary presentation
    rep.add(timedItem("N3_family", "auxiliary-basis-table",
                      [&]() -> std::pair<bool, std::string> {
        Algebra n3 = cat.get("N3_family");
        Algebra n3aux = cat.get("N3_aux_basis");
        Polynomial radicand = *n3aux.radicand();
        Scalar r = Scalar::sqrtOf(radicand);
        Scalar a = Scalar::variable("alpha");
        Mat f(4, 4);
        // f1 = e1, f2 = e2, f3 = e1 + alpha e2 + i r e3, f4 = e4
        f.at(0, 0) = Scalar::one();
        f.at(1, 1) = Scalar::one();
        f.at(0, 2) = Scalar::one();
        f.at(1, 2) = a;
        f.at(2, 2) = Scalar::i() * r;
        f.at(3, 3) = Scalar::one();
        Algebra changed = changeBasis(n3, f);
        if (!changed.sameTensor(n3aux))
            return {false, "auxiliary basis does not reproduce the stored table"};
        return {true, "f-basis products match, including f1*f3 = (1+alpha^2)*f4"};
    }));

    const CertificateFile& interm = cat.certificate("B4_10_to_N3_intermediate").file;
    const CertificateFile& radical = cat.certificate("B4_10_to_N3_radical").file;

    rep.add(timedItem("B4_10_to_N3_intermediate", "certificate",
                      [&]() -> std::pair<bool, std::string> {
        CertApplication res = applyCertificate(cat, interm);
        return {res.pass, res.pass ? "det " + res.detNote : res.summary()};
    }));

    rep.add(timedItem("B4_10_to_N3_radical", "certificate",
                      [&]() -> std::pair<bool, std::string> {
        CertApplication res = applyCertificate(cat, radical);
        return {res.pass, res.pass ? "det " + res.detNote : res.summary()};
    }));

    // the radical basis is the intermediate basis composed with the f-basis
    // change: E1 = F1, E2 = F2, E3 = (i/sqrt(alpha^2+1)) (F1 + alpha F2 - F3),
    // E4 = F4
    rep.add(timedItem("B4_10_to_N3_radical", "composition-consistency",
                      [&]() -> std::pair<bool, std::string> {
        ParseContext ctx;
        ctx.params = {"t", "alpha"};
        Algebra n3aux = cat.get("N3_aux_basis");
        Polynomial radicand = *n3aux.radicand();
        ctx.radicand = radicand;
        auto rows = [&](const CertificateFile& c) {
            std::vector<Vec> out;
            for (const auto& expr : c.basisExprs)
                out.push_back(parseLinearCombination(expr, 4, ctx));
            return out;
        };
        auto F = rows(interm);
        auto E = rows(radical);
        Scalar coeff = Scalar::i() / Scalar::sqrtOf(radicand);
        Scalar a = Scalar::variable("alpha");
        Vec combo = scaleVec(addVec(addVec(F[0], scaleVec(F[1], a)), scaleVec(F[2], Scalar(-1))),
                             coeff);
        if (E[0] != F[0] || E[1] != F[1] || E[3] != F[3] || E[2] != combo)
            return {false, "radical basis is not the stated combination of the intermediate one"};
        return {true, "E3 = (i/sqrt(alpha^2+1)) (F1 + alpha F2 - F3)"};
    }));

    rep.add(timedItem("B4_10_to_N3_radical", "sample alpha=2",
                      [&]() -> std::pair<bool, std::string> {
        CertApplication res = applyCertificate(cat, radical, {{"alpha", Scalar(2)}});
        return {res.pass,
                res.pass ? "radicand becomes 5; det " + res.detNote : res.summary()};
    }));

    return rep;
}

Report verifyComponentTheorem(const Catalog& cat) {
    Report rep;
    rep.command = "component-theorem";

    std::vector<std::string> pure4;
    for (const auto& id : cat.algebraIds())
        if (id.rfind("B4_", 0) == 0)
            pure4.push_back(id);

    rep.add(timedItem("B4_10", "der-minimality", [&]() -> std::pair<bool, std::string> {
        size_t derRigid = derivations(cat.get("B4_10")).dim();
        Fingerprint fpRigid = fingerprint(cat.get("B4_10"));
        size_t minOther = SIZE_MAX;
        for (const auto& id : pure4) {
            if (id == "B4_10")
                continue;
            std::vector<Algebra> variants;
            if (cat.entry(id).algebra.params().empty()) {
                variants.push_back(cat.get(id));
            } else {
                variants.push_back(cat.get(id));
                const std::string& pname = cat.entry(id).algebra.params().front().name;
                for (const auto& v : cat.samplesFor(id))
                    variants.push_back(cat.get(id, {{pname, v}}));
            }
            for (const auto& A : variants) {
                if (fingerprint(A) == fpRigid)
                    return {false, id + " is not fingerprint-distinguished from B4_10"};
                minOther = std::min(minOther, derivations(A).dim());
            }
        }
        bool ok = derRigid == 2 && minOther > derRigid;
        return {ok, "der(B4_10) = " + std::to_string(derRigid) +
                        ", min over the rest = " + std::to_string(minOther)};
    }));

    rep.add(timedItem("B4_10 -> B4_24", "square-obstruction",
                      [&]() -> std::pair<bool, std::string> {
        auto sq = [&](const Algebra& A) {
            auto ps = powerSeries(A);
            return ps.chain.size() > 1 ? ps.chain[1].dim() : 0;
        };
        size_t sq10 = sq(cat.get("B4_10"));
        size_t sq24 = sq(cat.get("B4_24"));
        bool ok = sq10 == 2 && sq24 == 3 && sq10 < sq24;
        std::string detail = "dim squares " + std::to_string(sq10) + " < " + std::to_string(sq24);
        for (const auto& v : cat.samplesFor("B4_24")) {
            size_t s = sq(cat.get("B4_24", {{"alpha", v}}));
            if (s != 3) {
                ok = false;
                detail += "; B4_24(" + v.str() + ") square " + std::to_string(s);
            }
        }
        return {ok, detail};
    }));

    rep.add(timedItem("catalog", "reachability", [&]() -> std::pair<bool, std::string> {
        std::map<std::string, std::vector<std::string>> edges;
        for (const auto& id : cat.certificateIds()) {
            const CertificateEntry& entry = cat.certificate(id);
            CertApplication res = applyCertificate(cat, entry.file);
            if (!res.pass)
                return {false, "certificate " + id + " failed: " + res.summary()};
            std::string src = parseAlgebraRef(entry.file.sourceRef).id;
            std::string tgt = parseAlgebraRef(entry.file.targetRef).id;
            edges[src].push_back(tgt);
        }
        std::set<std::string> reached{"B4_10", "B4_24"};
        std::vector<std::string> work(reached.begin(), reached.end());
        while (!work.empty()) {
            std::string cur = work.back();
            work.pop_back();
            for (const auto& next : edges[cur])
                if (reached.insert(next).second)
                    work.push_back(next);
        }
        std::vector<std::string> targets = pure4;
        targets.push_back("N2_family");
        targets.push_back("N3_family");
        std::string missing;
        for (const auto& id : targets)
            if (!reached.count(id) && id != "N3_aux_basis")
                missing += id + " ";
        if (!missing.empty())
            return {false, "unreachable targets: " + missing};
        return {true, std::to_string(targets.size()) + " targets reachable from {B4_10, B4_24}"};
    }));

    return rep;
}

} // namespace nilalg
