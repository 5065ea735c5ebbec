#pragma once

#include <vector>

#include "nilalg/scalar.hpp"

namespace nilalg {

using Vec = std::vector<Scalar>;

/// Dense matrix of scalars with exact Gauss-Jordan elimination.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Mat identity(size_t n);
    static Mat fromRows(const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Vec row(size_t r) const;
    Vec col(size_t c) const;

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    Vec apply(const Vec& v) const;

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool isZero() const;

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref();
    /// Rank; radical-free matrices go through fraction-free (Bareiss)
    /// elimination on cleared denominators, which avoids gcd blowup over
    /// multi-parameter function fields.
    size_t rank() const;
    Scalar det() const;
    /// Inverse; SingularMatrix when not invertible.
    Mat inverse() const;
    /// Basis of {x : A x = 0} as rows.
    std::vector<Vec> nullspace() const;
    /// Solve A x = b; SingularMatrix when no solution (least index solution
    /// with free coordinates set to zero otherwise).
    Vec solve(const Vec& b) const;

    std::string str() const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Row space in reduced echelon form; the canonical representation of a
/// coordinate subspace.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient) {}
    static Subspace span(size_t ambient, const std::vector<Vec>& rows);
    static Subspace full(size_t ambient);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// v minus its projection onto the pivot coordinates of this space.
    Vec reduce(const Vec& v) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Coordinates not used as pivots (a complement's coordinate set).
    std::vector<size_t> complementCoords() const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    size_t ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<size_t> pivots_;
};

Vec zeroVec(size_t n);
Vec unitVec(size_t n, size_t i);
Vec addVec(const Vec& a, const Vec& b);
Vec subVec(const Vec& a, const Vec& b);
Vec scaleVec(const Vec& a, const Scalar& s);
bool isZeroVec(const Vec& v);
std::string vecStr(const Vec& v);

} // namespace nilalg
