#include <doctest.h>

#include "nilalg/matrix.hpp"

using namespace nilalg;

namespace {
Scalar sc(long n) { return Scalar(n); }
}

TEST_CASE("rref, rank, nullspace") {
    Mat m = Mat::fromRows({{sc(1), sc(2), sc(3)}, {sc(2), sc(4), sc(6)}, {sc(1), sc(0), sc(1)}});
    CHECK(m.rank() == 2);
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    for (const auto& v : ns)
        CHECK(isZeroVec(m.apply(v)));
}

TEST_CASE("determinant and inverse") {
    Mat m = Mat::fromRows({{sc(2), sc(1)}, {sc(1), sc(1)}});
    CHECK(m.det() == sc(1));
    Mat inv = m.inverse();
    CHECK(m * inv == Mat::identity(2));

    Mat sing = Mat::fromRows({{sc(1), sc(2)}, {sc(2), sc(4)}});
    CHECK(sing.det() == sc(0));
    CHECK_THROWS_AS(sing.inverse(), Error);
}

TEST_CASE("parametric elimination over the function field") {
    Scalar t = Scalar::variable("t");
    Mat m = Mat::fromRows({{t, sc(1)}, {sc(0), t}});
    CHECK(m.det() == t * t);
    Mat inv = m.inverse();
    CHECK(m * inv == Mat::identity(2));
}

TEST_CASE("solve") {
    Mat m = Mat::fromRows({{sc(1), sc(1)}, {sc(1), sc(-1)}});
    Vec x = m.solve({sc(3), sc(1)});
    CHECK(x == Vec{sc(2), sc(1)});
    Mat rect = Mat::fromRows({{sc(1), sc(0)}, {sc(0), sc(1)}, {sc(1), sc(1)}});
    CHECK_THROWS_AS(rect.solve({sc(1), sc(1), sc(3)}), Error);
    CHECK(rect.solve({sc(1), sc(2), sc(3)}) == Vec{sc(1), sc(2)});
}

TEST_CASE("subspace canonical form and operations") {
    Subspace s = Subspace::span(3, {{sc(1), sc(1), sc(0)}, {sc(2), sc(2), sc(0)}});
    CHECK(s.dim() == 1);
    CHECK(s.contains(Vec{sc(3), sc(3), sc(0)}));
    CHECK_FALSE(s.contains(Vec{sc(1), sc(0), sc(0)}));

    Subspace a = Subspace::span(3, {{sc(1), sc(0), sc(0)}, {sc(0), sc(1), sc(0)}});
    Subspace b = Subspace::span(3, {{sc(0), sc(1), sc(0)}, {sc(0), sc(0), sc(1)}});
    Subspace cap = a.intersect(b);
    CHECK(cap.dim() == 1);
    CHECK(cap.contains(Vec{sc(0), sc(1), sc(0)}));
    CHECK(a.sum(b) == Subspace::full(3));

    // equal spans have identical canonical bases
    Subspace c1 = Subspace::span(2, {{sc(1), sc(2)}, {sc(0), sc(1)}});
    Subspace c2 = Subspace::span(2, {{sc(3), sc(1)}, {sc(1), sc(1)}});
    CHECK(c1 == c2);

    CHECK(a.complementCoords() == std::vector<size_t>{2});
}
