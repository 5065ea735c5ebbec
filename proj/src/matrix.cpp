#include "nilalg/matrix.hpp"

#include <algorithm>

namespace nilalg {

Vec zeroVec(size_t n) { return Vec(n); }

Vec unitVec(size_t n, size_t i) {
    Vec v(n);
    v[i] = Scalar::one();
    return v;
}

Vec addVec(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

Vec subVec(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

Vec scaleVec(const Vec& a, const Scalar& s) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * s;
    return out;
}

bool isZeroVec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
}

std::string vecStr(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one();
    return m;
}

Mat Mat::fromRows(const std::vector<Vec>& rows) {
    if (rows.empty())
        return Mat();
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            fail(ErrorKind::DimensionMismatch, "ragged rows");
        for (size_t j = 0; j < m.cols_; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(size_t r) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; ++j)
        v[j] = at(r, j);
    return v;
}

Vec Mat::col(size_t c) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i)
        v[i] = at(i, c);
    return v;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_)
        fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Mat m(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).isZero())
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = data_[i] + o.data_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = data_[i] - o.data_[i];
    return m;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = data_[i] * s;
    return m;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_)
        fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    Vec out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).isZero())
                out[i] += at(i, j) * v[j];
    return out;
}

bool Mat::isZero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.isZero(); });
}

std::vector<size_t> Mat::rref() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && at(p, c).isZero())
            ++p;
        if (p == rows_)
            continue;
        if (p != r)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(at(p, j), at(r, j));
        Scalar inv = at(r, c).inverse();
        for (size_t j = c; j < cols_; ++j)
            at(r, j) = at(r, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).isZero())
                continue;
            Scalar f = at(i, c);
            for (size_t j = c; j < cols_; ++j)
                at(i, j) = at(i, j) - f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

namespace {

// plain field elimination for matrices of constants
std::optional<size_t> constantRank(const Mat& m) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<GaussRational>> a(rows, std::vector<GaussRational>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            auto v = m.at(r, c).asConstant();
            if (!v)
                return std::nullopt;
            a[r][c] = *v;
        }
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c].isZero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        GaussRational inv = a[rank][c].inverse();
        for (size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c].isZero())
                continue;
            GaussRational f = a[r][c] * inv;
            for (size_t cc = c; cc < cols; ++cc)
                a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// Bareiss condensation on polynomial entries; row scaling by the nonzero
// denominators does not change the rank over the function field.
std::optional<size_t> fractionFreeRank(const Mat& m) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols));
    for (size_t r = 0; r < rows; ++r) {
        Polynomial common(GaussRational(1));
        for (size_t c = 0; c < cols; ++c) {
            const Scalar& s = m.at(r, c);
            if (s.hasRadical())
                return std::nullopt;
            if (!s.base().den().isConstant())
                common = common * s.base().den();
        }
        for (size_t c = 0; c < cols; ++c) {
            const RationalFunction& f = m.at(r, c).base();
            auto scaled = (f.num() * common).dividedBy(f.den());
            if (!scaled)
                return std::nullopt;
            a[r][c] = *scaled;
        }
    }
    Polynomial prev(GaussRational(1));
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c].isZero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[rank]);
        const Polynomial pivot = a[rank][c];
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t cc = c + 1; cc < cols; ++cc) {
                Polynomial num = a[r][cc] * pivot - a[r][c] * a[rank][cc];
                auto q = num.dividedBy(prev);
                if (!q)
                    return std::nullopt;
                a[r][cc] = std::move(*q);
            }
            a[r][c] = Polynomial();
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

} // namespace

size_t Mat::rank() const {
    if (auto r = constantRank(*this))
        return *r;
    if (auto r = fractionFreeRank(*this))
        return *r;
    Mat m(*this);
    return m.rref().size();
}

Scalar Mat::det() const {
    if (rows_ != cols_)
        fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    Mat m(*this);
    Scalar d = Scalar::one();
    for (size_t c = 0; c < cols_; ++c) {
        size_t p = c;
        while (p < rows_ && m.at(p, c).isZero())
            ++p;
        if (p == rows_)
            return Scalar::zero();
        if (p != c) {
            for (size_t j = 0; j < cols_; ++j)
                std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d = d * m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).isZero())
                continue;
            Scalar f = m.at(i, c) * inv;
            for (size_t j = c; j < cols_; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_)
        fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one();
    }
    auto piv = aug.rref();
    if (piv.size() != rows_ || piv.back() >= cols_)
        fail(ErrorKind::SingularMatrix, "matrix is singular");
    Mat inv(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<Vec> Mat::nullspace() const {
    Mat m(*this);
    auto piv = m.rref();
    std::vector<bool> isPivot(cols_, false);
    for (size_t c : piv)
        isPivot[c] = true;
    std::vector<Vec> basis;
    for (size_t c = 0; c < cols_; ++c) {
        if (isPivot[c])
            continue;
        Vec v(cols_);
        v[c] = Scalar::one();
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -m.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec Mat::solve(const Vec& b) const {
    if (b.size() != rows_)
        fail(ErrorKind::DimensionMismatch, "solve shape mismatch");
    Mat aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j)
            aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_)
        fail(ErrorKind::SingularMatrix, "inconsistent linear system");
    Vec x(cols_);
    for (size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = aug.at(r, cols_);
    return x;
}

std::string Mat::str() const {
    std::string s;
    for (size_t i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : " ";
        for (size_t j = 0; j < cols_; ++j) {
            if (j)
                s += ", ";
            s += at(i, j).str();
        }
        s += i + 1 == rows_ ? "]" : ";\n";
    }
    return s;
}

Subspace Subspace::span(size_t ambient, const std::vector<Vec>& rows) {
    Subspace s(ambient);
    if (rows.empty())
        return s;
    Mat m = Mat::fromRows(rows);
    if (m.cols() != ambient)
        fail(ErrorKind::DimensionMismatch, "subspace ambient mismatch");
    s.pivots_ = m.rref();
    for (size_t i = 0; i < s.pivots_.size(); ++i)
        s.basis_.push_back(m.row(i));
    return s;
}

Subspace Subspace::full(size_t ambient) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < ambient; ++i)
        rows.push_back(unitVec(ambient, i));
    return span(ambient, rows);
}

Vec Subspace::reduce(const Vec& v) const {
    Vec r = v;
    for (size_t k = 0; k < basis_.size(); ++k) {
        const Scalar& c = r[pivots_[k]];
        if (!c.isZero())
            r = subVec(r, scaleVec(basis_[k], c));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_)
        fail(ErrorKind::DimensionMismatch, "vector ambient mismatch");
    return isZeroVec(reduce(v));
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
        if (!contains(v))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // rows of [U; V]: nullspace of [U^T | -V^T] gives coefficient pairs
    if (dim() == 0 || o.dim() == 0)
        return Subspace(ambient_);
    Mat m(ambient_, dim() + o.dim());
    for (size_t c = 0; c < dim(); ++c)
        for (size_t r = 0; r < ambient_; ++r)
            m.at(r, c) = basis_[c][r];
    for (size_t c = 0; c < o.dim(); ++c)
        for (size_t r = 0; r < ambient_; ++r)
            m.at(r, dim() + c) = -o.basis_[c][r];
    auto ns = m.nullspace();
    std::vector<Vec> rows;
    for (const auto& coeffs : ns) {
        Vec v(ambient_);
        for (size_t k = 0; k < dim(); ++k)
            v = addVec(v, scaleVec(basis_[k], coeffs[k]));
        rows.push_back(std::move(v));
    }
    return span(ambient_, rows);
}

std::vector<size_t> Subspace::complementCoords() const {
    std::vector<bool> isPivot(ambient_, false);
    for (size_t c : pivots_)
        isPivot[c] = true;
    std::vector<size_t> out;
    for (size_t c = 0; c < ambient_; ++c)
        if (!isPivot[c])
            out.push_back(c);
    return out;
}

} // namespace nilalg
