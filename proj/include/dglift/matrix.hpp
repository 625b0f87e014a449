#pragma once

#include <optional>
#include <vector>

#include "dglift/field.hpp"

namespace dglift {

using Vec = std::vector<FieldElement>;

Vec zero_vec(const Field& field, size_t n);
Vec unit_vec(const Field& field, size_t n, size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const FieldElement& c, const Vec& v);
void add_scaled(Vec& acc, const FieldElement& c, const Vec& v);

/* Dense matrix over an exact field. Sizes here are tiny, so all
 * elimination is plain reduced row echelon form with leftmost pivots
 * and lowest-row-index selection, which makes every derived basis and
 * preimage deterministic. */
class Matrix {
public:
    Matrix(const Field& field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, FieldElement::zero(field))
    {
    }

    static Matrix identity(const Field& field, size_t n);
    static Matrix from_columns(const Field& field, size_t rows, const std::vector<Vec>& cols);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec row(size_t i) const;
    Vec column(size_t j) const;

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    bool operator==(const Matrix& other) const;
    bool is_zero() const;
    Matrix transpose() const;

    Vec apply(const Vec& v) const;

    /* In-place RREF; returns the pivot column of each pivot row. */
    std::vector<size_t> rref();

    size_t rank() const;

    std::string str() const;

private:
    Field field_;
    size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

/* Echelon-deterministic particular solution of A x = b (free variables
 * set to zero), or nullopt when the system is inconsistent. */
std::optional<Vec> solve(const Matrix& A, const Vec& b);

/* Canonical kernel basis: one vector per free column of the RREF. */
std::vector<Vec> kernel_basis(const Matrix& A);

/* Canonical basis of the column space: RREF the transpose and read the
 * nonzero rows back as vectors. */
std::vector<Vec> column_space_basis(const Matrix& A);

}  // namespace dglift
