#pragma once

#include "antialg/space.hpp"

#include <optional>
#include <vector>

namespace al {

// Sparse row-major rational matrix; each row is a Vector keyed by column.
struct Matrix
{
    int cols = 0;
    std::vector<Vector> rows;

    Matrix() = default;
    explicit Matrix(int c) : cols(c) {}

    int row_count() const { return static_cast<int>(rows.size()); }
    Matrix transpose() const;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& v);

struct Rref
{
    std::vector<Vector> rows;
    std::vector<int> pivots;
};

// Reduced row echelon form, eliminating columns in the given order.
// Pivots are chosen by smallest coefficient size.
Rref rref(const Matrix& m, const std::vector<int>& column_order);
Rref rref(const Matrix& m);

// Rank from two elimination orders; throws std::logic_error if they differ.
int rank(const Matrix& m);

std::vector<Vector> nullspace(const Matrix& m);

// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Canonical basis of the row space of the given vectors.
std::vector<Vector> row_space_basis(const std::vector<Vector>& vs, int cols);

} // namespace al
