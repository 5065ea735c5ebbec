#include <doctest.h>

#include "nilalg/catalog.hpp"

using namespace nilalg;

namespace {

Scalar sc(long n) { return Scalar(n); }

const Catalog& cat() {
    static Catalog c(Catalog::defaultFixturesDir());
    return c;
}

} // namespace

TEST_CASE("scalar literal grammar") {
    ParseContext ctx;
    ctx.params = {"t", "alpha"};
    auto P = [&](const char* s) { return parseScalar(s, ctx); };

    CHECK(P("3/4") == Scalar(Rational(BigInt(3), BigInt(4))));
    CHECK(P("i*i") == sc(-1));
    CHECK(P("2*t^3") == sc(2) * Scalar::variable("t").pow(3));
    CHECK(P("t^-1") == Scalar::one() / Scalar::variable("t"));
    CHECK(P("-(1-t)^2") == -(sc(1) - Scalar::variable("t")).pow(2));
    CHECK(P("alpha/(1-alpha)") ==
          Scalar::variable("alpha") / (sc(1) - Scalar::variable("alpha")));

    ctx.radicand = (Scalar::variable("alpha") * Scalar::variable("alpha") + sc(1))
                       .asPolynomial()
                       .value();
    Scalar r = P("sqrt(alpha^2+1)");
    CHECK(r * r == Scalar::variable("alpha").pow(2) + sc(1));
    CHECK(P("i*t/sqrt(alpha^2+1)") == Scalar::i() * Scalar::variable("t") / r);
}

TEST_CASE("parse errors carry positions") {
    ParseContext ctx;
    ctx.params = {"t"};
    auto expectError = [&](const char* s, const char* fragment) {
        try {
            parseScalar(s, ctx);
            FAIL("expected parse error for ", s);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
            CHECK(std::string(e.what()).find("column") != std::string::npos);
        }
    };
    expectError("t +", "unexpected token");
    expectError("2 * bogus", "unknown name");
    expectError("(1+t", "expected ')'");
    expectError("sqrt(t)", "sqrt used without a declared radical");
}

TEST_CASE("linear combination parsing") {
    ParseContext ctx;
    ctx.params = {"t", "alpha"};
    Vec v = parseLinearCombination("t*(e1+e3) - 2*e2", 4, ctx);
    Scalar t = Scalar::variable("t");
    CHECK(v == Vec{t, sc(-2), t, sc(0)});
    CHECK_THROWS_AS(parseLinearCombination("e1*e2", 4, ctx), Error);
    CHECK_THROWS_AS(parseLinearCombination("e1 + 5", 4, ctx), Error);
    CHECK_THROWS_AS(parseLinearCombination("e7", 4, ctx), Error);
}

TEST_CASE("bilinear form parsing") {
    ParseContext ctx;
    ctx.params = {"alpha"};
    BilinearForm m = parseBilinearForm("alpha*D(2,2) + D(1,3) + alpha*D(3,1)", 3, ctx);
    CHECK(m.at(1, 1) == Scalar::variable("alpha"));
    CHECK(m.at(0, 2) == sc(1));
    CHECK(m.at(2, 0) == Scalar::variable("alpha"));
    CHECK(m.at(0, 0) == sc(0));
    CHECK_THROWS_AS(parseBilinearForm("D(4,1)", 3, ctx), Error);
}

TEST_CASE("malformed algebra files") {
    CHECK_THROWS_AS(parseAlgebraText("dim 2\ne1*e1 = e2\n"), Error);
    CHECK_THROWS_AS(parseAlgebraText("algebra X\ne1*e1 = e2\n"), Error);
    CHECK_THROWS_AS(parseAlgebraText("algebra X\ndim 2\ne1&e1 = e2\n"), Error);
    CHECK_THROWS_AS(parseAlgebraText("algebra X\ndim 2\ne1*e9 = e2\n"), Error);
    CHECK_THROWS_AS(parseAlgebraText("algebra X\ndim 2\ne1*e1 = e1*e1\n"), Error);
}

TEST_CASE("catalog listing order is deterministic") {
    const auto& ids = cat().algebraIds();
    REQUIRE(ids.size() == 39);
    CHECK(ids.front() == "N1");
    CHECK(ids[4] == "B2s_01");
    // six three-dimensional entries in catalog order
    std::vector<std::string> dim3;
    for (const auto& id : ids)
        if (cat().entry(id).algebra.dim() == 3 && id != "N3")
            dim3.push_back(id);
    CHECK(dim3 == std::vector<std::string>{"B3s_01", "B3s_02", "B3s_03", "B3s_04", "B3s_04_0",
                                           "B3_01", "B3_02"});
    CHECK(cat().certificateIds().size() == 25); // 23 table rows + 2 component-family
    size_t tableRows = 0;
    for (const auto& id : cat().certificateIds())
        if (cat().certificate(id).kind == CertificateEntry::Table)
            ++tableRows;
    CHECK(tableRows == 23);
    CHECK(cat().normalizationIds() ==
          std::vector<std::string>{"B3s_04_0", "B3_01", "B3_02"});
    size_t cases = 0;
    for (const auto& id : cat().normalizationIds())
        cases += cat().normalization(id).cases.size();
    CHECK(cases == 15);
}

TEST_CASE("catalog lookup errors") {
    CHECK_THROWS_AS(cat().get("B9_99"), Error);
    CHECK_THROWS_AS(cat().get("B3s_04", {{"alpha", sc(0)}}), Error);
    CHECK_NOTHROW(cat().get("B3s_04", {{"alpha", sc(2)}}));
}

TEST_CASE("algebra references") {
    Algebra a = cat().resolveRef("B3_02(1)");
    CHECK(a.productOfBasis(1, 0)[2] == sc(1));
    Algebra b = cat().resolveRef("B3_02(alpha)");
    CHECK(b.hasParam("alpha"));
    CHECK_THROWS_AS(cat().resolveRef("N1(2)"), Error);
}

TEST_CASE("expected invariants load") {
    const auto& e = cat().entry("B3s_01").expected;
    REQUIRE(e.has_value());
    CHECK(e->z2 == 6);
    CHECK(e->b2 == 1);
    CHECK(e->h2 == 5);
    CHECK(e->z2Span.size() == 6);

    const auto& e24 = cat().entry("B4_24").expected;
    REQUIRE(e24.has_value());
    CHECK(e24->der == 3);
    REQUIRE(e24->derExceptions.size() == 2);
    CHECK(e24->derExceptions[0] == sc(0));
    CHECK(e24->derExceptions[1] == sc(1));
}

TEST_CASE("parameter samples respect exclusions") {
    CHECK(Catalog::parameterSamples().size() == 5);
    CHECK(cat().samplesFor("B4_24").size() == 5);
    CHECK(cat().samplesFor("B4_06").size() == 5); // 0 is excluded but not sampled anyway
}
