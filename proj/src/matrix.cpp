#include "dglift/matrix.hpp"

#include <sstream>

namespace dglift {

Vec zero_vec(const Field& field, size_t n)
{
    return Vec(n, FieldElement::zero(field));
}

Vec unit_vec(const Field& field, size_t n, size_t i)
{
    Vec v = zero_vec(field, n);
    v.at(i) = FieldElement::one(field);
    return v;
}

bool is_zero_vec(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec add(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw ShapeError("vector size mismatch in add");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    if (a.size() != b.size())
        throw ShapeError("vector size mismatch in sub");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vec scale(const FieldElement& c, const Vec& v)
{
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

void add_scaled(Vec& acc, const FieldElement& c, const Vec& v)
{
    if (acc.size() != v.size())
        throw ShapeError("vector size mismatch in add_scaled");
    for (size_t i = 0; i < acc.size(); ++i)
        acc[i] += c * v[i];
}

Matrix Matrix::identity(const Field& field, size_t n)
{
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = FieldElement::one(field);
    return m;
}

Matrix Matrix::from_columns(const Field& field, size_t rows, const std::vector<Vec>& cols)
{
    Matrix m(field, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw ShapeError("column size mismatch in from_columns");
        for (size_t i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(size_t i) const
{
    Vec v = zero_vec(field_, cols_);
    for (size_t j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

Vec Matrix::column(size_t j) const
{
    Vec v = zero_vec(field_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_)
        throw ShapeError("matrix shape mismatch in multiply");
    Matrix r(field_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += at(i, k) * other.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("matrix shape mismatch in add");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += other.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("matrix shape mismatch in sub");
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= other.a_[i];
    return r;
}

bool Matrix::operator==(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != other.a_[i])
            return false;
    return true;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw ShapeError("vector length " + std::to_string(v.size()) + " does not match matrix with "
                         + std::to_string(cols_) + " columns");
    Vec r = zero_vec(field_, rows_);
    for (size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero())
            continue;
        for (size_t i = 0; i < rows_; ++i)
            r[i] += at(i, j) * v[j];
    }
    return r;
}

std::vector<size_t> Matrix::rref()
{
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t p = r;
        while (p < rows_ && at(p, c).is_zero())
            ++p;
        if (p == rows_)
            continue;
        if (p != r)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(at(p, j), at(r, j));
        const FieldElement inv = at(r, c).inverse();
        for (size_t j = 0; j < cols_; ++j)
            at(r, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero())
                continue;
            const FieldElement factor = at(i, c);
            for (size_t j = 0; j < cols_; ++j)
                at(i, j) -= factor * at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

size_t Matrix::rank() const
{
    Matrix copy = *this;
    return copy.rref().size();
}

std::string Matrix::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

std::optional<Vec> solve(const Matrix& A, const Vec& b)
{
    if (b.size() != A.rows())
        throw ShapeError("rhs length mismatch in solve");
    Matrix aug(A.field(), A.rows(), A.cols() + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < A.cols(); ++j)
            aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == A.cols())
        return std::nullopt;
    Vec x = zero_vec(A.field(), A.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, A.cols());
    return x;
}

std::vector<Vec> kernel_basis(const Matrix& A)
{
    Matrix R = A;
    const auto pivots = R.rref();
    std::vector<bool> is_pivot(A.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t c = 0; c < A.cols(); ++c) {
        if (is_pivot[c])
            continue;
        Vec v = zero_vec(A.field(), A.cols());
        v[c] = FieldElement::one(A.field());
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -R.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> column_space_basis(const Matrix& A)
{
    Matrix T = A.transpose();
    const auto pivots = T.rref();
    std::vector<Vec> basis;
    for (size_t r = 0; r < pivots.size(); ++r)
        basis.push_back(T.row(r));
    return basis;
}

}  // namespace dglift
