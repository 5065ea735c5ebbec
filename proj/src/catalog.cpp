#include "nilalg/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace nilalg {

namespace {

std::string trimLine(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

ExpectedInvariants parseExpected(const ExpectedFile& f) {
    ExpectedInvariants e;
    auto num = [&](const char* key) -> std::optional<size_t> {
        auto it = f.values.find(key);
        if (it == f.values.end())
            return std::nullopt;
        return std::stoul(it->second);
    };
    e.z2 = num("z2");
    e.b2 = num("b2");
    e.h2 = num("h2");
    e.der = num("der");
    auto splitList = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == sep) {
                out.push_back(trimLine(cur));
                cur.clear();
            } else
                cur += c;
        }
        if (!trimLine(cur).empty())
            out.push_back(trimLine(cur));
        return out;
    };
    if (auto it = f.values.find("der_exceptions"); it != f.values.end()) {
        ParseContext pctx;
        for (const auto& part : splitList(it->second, ','))
            e.derExceptions.push_back(parseScalar(part, pctx));
    }
    if (auto it = f.values.find("z2_span"); it != f.values.end())
        e.z2Span = splitList(it->second, ';');
    if (auto it = f.values.find("b2_span"); it != f.values.end())
        e.b2Span = splitList(it->second, ';');
    if (auto it = f.values.find("h2_span"); it != f.values.end())
        e.h2Span = splitList(it->second, ';');
    return e;
}

} // namespace

std::string Catalog::defaultFixturesDir() {
    if (const char* env = std::getenv("NILALG_FIXTURES"))
        return env;
#ifdef NILALG_DEFAULT_FIXTURES
    return NILALG_DEFAULT_FIXTURES;
#else
    return "fixtures";
#endif
}

Catalog::Catalog(std::string fixturesDir) : dir_(std::move(fixturesDir)) {
    namespace fs = std::filesystem;
    std::string manifestPath = dir_ + "/catalog.txt";
    std::istringstream manifest(readFile(manifestPath));
    std::string line;
    std::string section;
    while (std::getline(manifest, line)) {
        line = trimLine(line);
        if (line.empty() || line[0] == '#')
            continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        std::string path = dir_ + "/" + line;
        if (section == "algebras") {
            Algebra A = parseAlgebraText(readFile(path));
            std::string id = A.name();
            if (entries_.count(id))
                fail(ErrorKind::ParseError, "duplicate algebra id " + id);
            CatalogEntry entry{std::move(A), std::nullopt, std::nullopt, {}};
            std::string expPath = dir_ + "/expected/" + id + ".exp";
            if (fs::exists(expPath))
                entry.expected = parseExpected(parseExpectedText(readFile(expPath)));
            std::string cocPath = dir_ + "/cocycles/" + id + ".coc";
            if (fs::exists(cocPath)) {
                CocycleFile cf = parseCocycleText(readFile(cocPath));
                entry.parentRef = cf.overRef;
                entry.cocycleExprs = cf.componentExprs;
            }
            algebraIds_.push_back(id);
            entries_.emplace(id, std::move(entry));
        } else if (section == "degeneration-table" || section == "component-family") {
            CertificateFile cf = parseCertificateText(readFile(path));
            CertificateEntry::Kind kind = section == "degeneration-table"
                                              ? CertificateEntry::Table
                                              : CertificateEntry::ComponentFamily;
            std::string certId = cf.name;
            if (certificates_.count(certId))
                fail(ErrorKind::ParseError, "duplicate certificate id " + certId);
            certificateIds_.push_back(certId);
            certificates_.emplace(certId, CertificateEntry{kind, std::move(cf)});
        } else if (section == "normalization") {
            NormalizationFamily fam = parseNormalizationText(readFile(path));
            std::string famId = fam.id;
            if (normalizations_.count(famId))
                fail(ErrorKind::ParseError, "duplicate normalization id " + famId);
            normalizationIds_.push_back(famId);
            normalizations_.emplace(famId, std::move(fam));
        } else {
            fail(ErrorKind::ParseError, "manifest line outside a known section: " + line);
        }
    }
}

const CatalogEntry& Catalog::entry(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end())
        fail(ErrorKind::UnknownId, "unknown algebra id " + id);
    return it->second;
}

const CertificateEntry& Catalog::certificate(const std::string& id) const {
    auto it = certificates_.find(id);
    if (it == certificates_.end())
        fail(ErrorKind::UnknownId, "unknown certificate id " + id);
    return it->second;
}

const NormalizationFamily& Catalog::normalization(const std::string& id) const {
    auto it = normalizations_.find(id);
    if (it == normalizations_.end())
        fail(ErrorKind::UnknownId, "unknown normalization family " + id);
    return it->second;
}

Algebra Catalog::get(const std::string& id,
                     const std::map<std::string, Scalar>& bindings) const {
    const Algebra& A = entry(id).algebra;
    if (bindings.empty())
        return A;
    return A.substituted(bindings);
}

Algebra Catalog::resolveRef(const std::string& refText,
                            const std::set<std::string>& extraParams) const {
    AlgebraRef ref = parseAlgebraRef(refText);
    const Algebra& A = entry(ref.id).algebra;
    if (!ref.argExpr)
        return A;
    if (A.params().empty())
        fail(ErrorKind::ParseError, ref.id + " takes no parameter");
    ParseContext ctx;
    ctx.params = extraParams;
    for (const auto& p : A.params())
        ctx.params.insert(p.name);
    Scalar v = parseScalar(*ref.argExpr, ctx);
    const std::string& pname = A.params().front().name;
    if (v == Scalar::variable(pname))
        return A; // generic self-binding
    return A.substituted({{pname, v}});
}

std::vector<Scalar> Catalog::parameterSamples() {
    return {Scalar(-1), Scalar(2), Scalar(3), Scalar::i(),
            Scalar(Rational(BigInt(1), BigInt(2)))};
}

std::vector<Scalar> Catalog::samplesFor(const std::string& id) const {
    const Algebra& A = entry(id).algebra;
    std::vector<Scalar> out;
    for (const auto& s : parameterSamples()) {
        bool excluded = false;
        for (const auto& p : A.params())
            for (const auto& ex : p.excluded)
                if (s == ex)
                    excluded = true;
        if (!excluded)
            out.push_back(s);
    }
    return out;
}

} // namespace nilalg
