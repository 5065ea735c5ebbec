#include <doctest.h>

#include <random>

#include "nilalg/catalog.hpp"

using namespace nilalg;

namespace {

Scalar sc(long n) { return Scalar(n); }

const Catalog& cat() {
    static Catalog c(Catalog::defaultFixturesDir());
    return c;
}

Subspace formSpan(const std::vector<BilinearForm>& forms, size_t n) {
    std::vector<Vec> rows;
    for (const auto& f : forms)
        rows.push_back(flattenForm(f));
    return Subspace::span(n * n, rows);
}

BilinearForm delta(size_t n, size_t i, size_t j) {
    BilinearForm m(n, n);
    m.at(i - 1, j - 1) = Scalar::one();
    return m;
}

} // namespace

TEST_CASE("cocycle spaces") {
    auto z2n2 = cocycleSpace(cat().get("N2"));
    CHECK(z2n2.size() == 4); // no constraints from the zero product

    auto z2b3s01 = cocycleSpace(cat().get("B3s_01"));
    CHECK(z2b3s01.size() == 6);
    Subspace sp = formSpan(z2b3s01, 3);
    for (auto [i, j] : {std::pair<size_t, size_t>{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {3, 3}})
        CHECK(sp.contains(flattenForm(delta(3, i, j))));

    Algebra b302 = cat().get("B3_02");
    auto z2 = cocycleSpace(b302);
    CHECK(z2.size() == 4);
    Scalar alpha = Scalar::variable("alpha");
    BilinearForm special = delta(3, 1, 3) + delta(3, 2, 2).scaled(alpha) +
                           delta(3, 3, 1).scaled(alpha);
    CHECK(formSpan(z2, 3).contains(flattenForm(special)));
}

TEST_CASE("coboundary spaces") {
    auto b2 = coboundarySpace(cat().get("B3s_02"));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == delta(3, 1, 1) + delta(3, 2, 2));

    CHECK(coboundarySpace(cat().get("N3")).empty());

    auto b2b302 = coboundarySpace(cat().get("B3_02"));
    CHECK(b2b302.size() == 2);
    Scalar alpha = Scalar::variable("alpha");
    Subspace sp = formSpan(b2b302, 3);
    CHECK(sp.contains(flattenForm(delta(3, 1, 1))));
    CHECK(sp.contains(flattenForm(delta(3, 1, 2) + delta(3, 2, 1).scaled(alpha))));
}

TEST_CASE("h2 data") {
    CohomologyData d1 = h2(cat().get("B3s_01"));
    CHECK(d1.dimH2() == 5);
    CHECK(d1.dimZ2() == d1.dimB2() + d1.dimH2());

    CohomologyData dn1 = h2(cat().get("N1"));
    CHECK(dn1.dimZ2() == 1);
    CHECK(dn1.dimB2() == 0);
    CHECK(dn1.dimH2() == 1);

    CohomologyData d301 = h2(cat().get("B3_01"));
    CHECK(d301.dimH2() == 2);
    // the classes of D(1,2) and D(3,1) span H^2
    Subspace b2 = formSpan(d301.b2Basis, 3);
    Subspace reps = formSpan(d301.h2Reps, 3);
    std::vector<Vec> reduced{b2.reduce(flattenForm(delta(3, 1, 2))),
                             b2.reduce(flattenForm(delta(3, 3, 1)))};
    CHECK(Subspace::span(9, reduced) == reps);
}

TEST_CASE("dimension bookkeeping on the whole catalog") {
    for (const auto& id : cat().algebraIds()) {
        Algebra A = cat().get(id);
        CohomologyData data = h2(A);
        CHECK(data.dimZ2() == data.dimB2() + data.dimH2());
        auto ps = powerSeries(A);
        size_t dimSquare = ps.chain.size() > 1 ? ps.chain[1].dim() : 0;
        CHECK(data.dimB2() == dimSquare);
    }
}

TEST_CASE("cocycle annihilator") {
    VectorCocycle th1{{delta(2, 1, 1)}};
    Subspace ann = cocycleAnnihilator(cat().get("N2"), th1);
    CHECK(ann.dim() == 1);
    CHECK(ann.contains(unitVec(2, 1)));

    VectorCocycle th2{{delta(3, 1, 2) + delta(3, 3, 1)}};
    CHECK(cocycleAnnihilator(cat().get("B3_01"), th2).dim() == 0);

    VectorCocycle zero{{BilinearForm(3, 3)}};
    CHECK(cocycleAnnihilator(cat().get("N3"), zero) == Subspace::full(3));
}

TEST_CASE("central extensions") {
    VectorCocycle d11{{delta(1, 1, 1)}};
    Algebra ext = centralExtension(cat().get("N1"), d11);
    CHECK(ext.sameTensor(cat().get("B2s_01")));

    VectorCocycle th{{delta(3, 1, 2) + delta(3, 3, 1)}};
    CHECK(centralExtension(cat().get("B3_01"), th).sameTensor(cat().get("B4_20")));

    // split extension by the zero cocycle
    VectorCocycle zero{{BilinearForm(3, 3)}};
    Algebra split = centralExtension(cat().get("B3_01"), zero);
    CHECK(split.sameTensor(cat().get("B4_01")));

    // non-cocycle input names the violated equation and triple
    VectorCocycle bad{{delta(3, 2, 3)}};
    try {
        centralExtension(cat().get("B3_01"), bad);
        FAIL("expected NotACocycle");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACocycle);
        CHECK(std::string(e.what()).find("theta(") != std::string::npos);
        CHECK(std::string(e.what()).find("(e") != std::string::npos);
    }
}

TEST_CASE("extension membership report") {
    Algebra b301 = cat().get("B3_01");
    VectorCocycle th{{delta(3, 1, 2) + delta(3, 3, 1)}};
    TsReport good = checkTsMembership(b301, th);
    CHECK(good.annTrivial);
    CHECK(good.classesIndependent);
    CHECK(good.member());

    VectorCocycle zero{{BilinearForm(3, 3)}};
    CHECK_FALSE(checkTsMembership(b301, zero).classesIndependent);

    Algebra n2 = cat().get("N2");
    VectorCocycle th11{{delta(2, 1, 1)}};
    TsReport bad = checkTsMembership(n2, th11);
    CHECK_FALSE(bad.annTrivial); // e2 survives in both annihilators
}

TEST_CASE("cocycle transforms") {
    BilinearForm th = delta(3, 1, 2) + delta(3, 3, 1).scaled(sc(2));
    CHECK(transformCocycle(th, Mat::identity(3)) == th);

    // group action: transform by phi then psi equals transform by phi*psi
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int k = 0; k < 20; ++k) {
        Mat phi(3, 3), psi(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                phi.at(i, j) = sc(d(rng));
                psi.at(i, j) = sc(d(rng));
            }
        CHECK(transformCocycle(transformCocycle(th, phi), psi) ==
              transformCocycle(th, phi * psi));
    }
}

TEST_CASE("displayed action coefficients of the generic automorphisms") {
    ParseContext ctx;
    ctx.params = {"x", "y", "z", "t", "alpha", "a1", "a2", "a3", "a4", "a5"};
    auto v = [&](const char* n) { return Scalar::variable(n); };

    SUBCASE("three-parameter base with five classes") {
        Algebra base = cat().get("B3s_04_0");
        std::vector<BilinearForm> nablas{delta(3, 1, 1), delta(3, 1, 3), delta(3, 2, 1),
                                         delta(3, 2, 2), delta(3, 3, 2)};
        BilinearForm theta(3, 3);
        for (size_t k = 0; k < 5; ++k)
            theta = theta + nablas[k].scaled(v(("a" + std::to_string(k + 1)).c_str()));
        Mat phi = Mat::fromRows({{v("x"), sc(0), sc(0)},
                                 {sc(0), v("y"), sc(0)},
                                 {v("z"), v("t"), v("x") * v("y")}});
        REQUIRE(isAutomorphism(base, phi));
        Vec c = reduceModB2(transformCocycle(theta, phi), nablas, coboundarySpace(base));
        CHECK(c[0] == v("x") * (v("x") * v("a1") + v("z") * v("a2")));
        CHECK(c[1] == v("x") * v("x") * v("y") * v("a2"));
        CHECK(c[2] == v("x") * v("y") * v("a3"));
        CHECK(c[3] == v("y") * (v("y") * v("a4") + v("t") * v("a5")));
        CHECK(c[4] == v("x") * v("y") * v("y") * v("a5"));
    }

    SUBCASE("pure three-dimensional bases with two classes") {
        Algebra base = cat().get("B3_01");
        std::vector<BilinearForm> nablas{delta(3, 1, 2), delta(3, 3, 1)};
        BilinearForm theta = nablas[0].scaled(v("a1")) + nablas[1].scaled(v("a2"));
        Mat phi = Mat::fromRows({{v("x"), sc(0), sc(0)},
                                 {v("y"), v("x").pow(2), sc(0)},
                                 {v("z"), v("x") * v("y"), v("x").pow(3)}});
        REQUIRE(isAutomorphism(base, phi));
        Vec c = reduceModB2(transformCocycle(theta, phi), nablas, coboundarySpace(base));
        CHECK(c[0] == v("x").pow(3) * v("a1"));
        CHECK(c[1] == v("x").pow(4) * v("a2"));

        Algebra base2 = cat().get("B3_02");
        Scalar al = v("alpha");
        std::vector<BilinearForm> nablas2{
            delta(3, 2, 1),
            delta(3, 1, 3) + delta(3, 2, 2).scaled(al) + delta(3, 3, 1).scaled(al)};
        BilinearForm theta2 = nablas2[0].scaled(v("a1")) + nablas2[1].scaled(v("a2"));
        Mat phi2 = Mat::fromRows({{v("x"), sc(0), sc(0)},
                                  {v("y"), v("x").pow(2), sc(0)},
                                  {v("z"), (al + sc(1)) * v("x") * v("y"), v("x").pow(3)}});
        REQUIRE(isAutomorphism(base2, phi2));
        Vec c2 = reduceModB2(transformCocycle(theta2, phi2), nablas2, coboundarySpace(base2));
        CHECK(c2[0] == v("x").pow(2) *
                           (v("x") * v("a1") + al * (sc(1) - al) * v("y") * v("a2")));
        CHECK(c2[1] == v("x").pow(4) * v("a2"));
    }
}

TEST_CASE("automorphism transforms preserve cocycles and coboundaries") {
    auto v = [&](const char* n) { return Scalar::variable(n); };
    Algebra base = cat().get("B3s_04_0");
    Mat phi = Mat::fromRows({{v("x"), sc(0), sc(0)},
                             {sc(0), v("y"), sc(0)},
                             {v("z"), v("t"), v("x") * v("y")}});
    REQUIRE(isAutomorphism(base, phi));
    auto z2 = cocycleSpace(base);
    auto b2 = coboundarySpace(base);
    Subspace z2sp = formSpan(z2, 3);
    Subspace b2sp = formSpan(b2, 3);
    for (const auto& f : z2)
        CHECK(z2sp.contains(flattenForm(transformCocycle(f, phi))));
    for (const auto& f : b2)
        CHECK(b2sp.contains(flattenForm(transformCocycle(f, phi))));
}

TEST_CASE("normalization case machinery rejects wrong representatives") {
    const NormalizationFamily& fam = cat().normalization("B3_01");
    const Algebra& base = cat().resolveRef(fam.baseRef);
    NormalizationCase wrong = fam.cases[0];
    wrong.representativeText = "nabla1"; // correct one is nabla1 + nabla2
    NormalizationOutcome out = verifyNormalizationCase(base, fam, wrong, {});
    CHECK_FALSE(out.pass);
    CHECK(out.detail.find("residual") != std::string::npos);
}

TEST_CASE("coverage checker flags gaps") {
    NormalizationFamily fam = cat().normalization("B3_01");
    CHECK(checkCaseCoverage(fam).empty());
    fam.cases.erase(fam.cases.begin()); // drop the a1!=0 case
    CHECK_FALSE(checkCaseCoverage(fam).empty());
}

TEST_CASE("coboundaries of random linear maps are cocycles") {
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<long> d(-4, 4);
    for (const std::string id : {"B3_02", "B4_10", "B4_24"}) {
        Algebra A = cat().get(id);
        size_t n = A.dim();
        for (int trial = 0; trial < 25; ++trial) {
            Vec f(n);
            for (size_t k = 0; k < n; ++k)
                f[k] = sc(d(rng));
            BilinearForm df(n, n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) {
                    Scalar s;
                    Vec prod = A.productOfBasis(i, j);
                    for (size_t k = 0; k < n; ++k)
                        s += f[k] * prod[k];
                    df.at(i, j) = s;
                }
            CHECK_FALSE(cocycleViolation(A, df).has_value());
        }
    }
}
