#include "antialg/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace al {

Matrix Matrix::transpose() const
{
    Matrix t(row_count());
    t.rows.resize(cols);
    for (int i = 0; i < row_count(); ++i)
        for (const auto& [j, c] : rows[i])
            t.rows[j].add(i, c);
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    if (a.cols != b.row_count())
        throw std::invalid_argument("multiply: dimension mismatch");
    Matrix r(b.cols);
    r.rows.resize(a.row_count());
    for (int i = 0; i < a.row_count(); ++i)
        for (const auto& [k, c] : a.rows[i])
            r.rows[i].add(b.rows[k], c);
    return r;
}

Vector apply(const Matrix& a, const Vector& v)
{
    Vector r;
    for (int i = 0; i < a.row_count(); ++i) {
        Rational s = 0;
        for (const auto& [j, c] : a.rows[i]) {
            Rational x = v.coeff(j);
            if (x != 0)
                s += c * x;
        }
        r.add(i, s);
    }
    return r;
}

namespace {

std::size_t coeff_size(const Rational& r)
{
    using boost::multiprecision::msb;
    auto n = boost::multiprecision::abs(numerator(r));
    auto d = denominator(r);
    return (n == 0 ? 0 : msb(n)) + msb(d);
}

} // namespace

Rref rref(const Matrix& m, const std::vector<int>& column_order)
{
    std::vector<Vector> rows;
    for (const auto& r : m.rows)
        if (!r.is_zero())
            rows.push_back(r);
    Rref out;
    std::size_t done = 0;
    for (int col : column_order) {
        std::size_t best = rows.size();
        std::size_t best_size = 0;
        for (std::size_t i = done; i < rows.size(); ++i) {
            Rational c = rows[i].coeff(col);
            if (c == 0)
                continue;
            std::size_t sz = coeff_size(c) + rows[i].size();
            if (best == rows.size() || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == rows.size())
            continue;
        std::swap(rows[done], rows[best]);
        Vector& piv = rows[done];
        piv *= Rational(1) / piv.coeff(col);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == done)
                continue;
            Rational c = rows[i].coeff(col);
            if (c != 0)
                rows[i].add(piv, -c);
        }
        out.pivots.push_back(col);
        ++done;
        if (done == rows.size())
            break;
    }
    rows.resize(done);
    out.rows = std::move(rows);
    return out;
}

Rref rref(const Matrix& m)
{
    std::vector<int> order(m.cols);
    std::iota(order.begin(), order.end(), 0);
    return rref(m, order);
}

int rank(const Matrix& m)
{
    std::vector<int> order(m.cols);
    std::iota(order.begin(), order.end(), 0);
    int r1 = static_cast<int>(rref(m, order).pivots.size());
    std::vector<int> back(m.row_count());
    std::iota(back.rbegin(), back.rend(), 0);
    int r2 = static_cast<int>(rref(m.transpose(), back).pivots.size());
    if (r1 != r2)
        throw std::logic_error("rank: elimination orders disagree");
    return r1;
}

std::vector<Vector> nullspace(const Matrix& m)
{
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : r.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v = Vector::basis(f);
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            Rational c = r.rows[i].coeff(f);
            if (c != 0)
                v.add(r.pivots[i], -c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    Matrix aug(m.cols + 1);
    aug.rows = m.rows;
    for (const auto& [i, c] : b) {
        if (i >= aug.row_count())
            aug.rows.resize(i + 1);
        aug.rows[i].add(m.cols, c);
    }
    Rref r = rref(aug);
    Vector x;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols)
            return std::nullopt;
        x.add(r.pivots[i], r.rows[i].coeff(m.cols));
    }
    return x;
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vs, int cols)
{
    Matrix m(cols);
    m.rows = vs;
    return rref(m).rows;
}

} // namespace al
