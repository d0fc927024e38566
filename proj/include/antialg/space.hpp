#pragma once

#include "antialg/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace al {

// Basis vectors carry a global index: even labels first, then odd labels.
class GradedSpace
{
public:
    GradedSpace() = default;
    GradedSpace(std::vector<std::string> even, std::vector<std::string> odd);

    int dim0() const { return static_cast<int>(even_.size()); }
    int dim1() const { return static_cast<int>(odd_.size()); }
    int dim() const { return dim0() + dim1(); }

    int parity(int g) const { return g < dim0() ? 0 : 1; }
    int even(int i) const { return i; }
    int odd(int j) const { return dim0() + j; }
    std::vector<int> basis(int parity) const;

    const std::string& label(int g) const;
    std::optional<int> find(const std::string& label) const;

    const std::vector<std::string>& even_labels() const { return even_; }
    const std::vector<std::string>& odd_labels() const { return odd_; }

    bool operator==(const GradedSpace& o) const { return even_ == o.even_ && odd_ == o.odd_; }

private:
    std::vector<std::string> even_, odd_;
    std::map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<std::string> even, std::vector<std::string> odd);

// V ⊕ W with V's evens, W's evens, V's odds, W's odds.
struct DirectSum
{
    SpacePtr space;
    std::vector<int> from_first, from_second;
};

DirectSum direct_sum(const GradedSpace& v, const GradedSpace& w);

// Sparse vector over global basis indices; zero coefficients are never stored.
class Vector
{
public:
    using Map = std::map<int, Rational>;

    Vector() = default;
    static Vector basis(int g) { Vector v; v.c_[g] = 1; return v; }

    void add(int g, const Rational& c);
    void add(const Vector& v, const Rational& c = 1);
    Vector& operator+=(const Vector& v) { add(v); return *this; }
    Vector& operator-=(const Vector& v) { add(v, -1); return *this; }
    Vector& operator*=(const Rational& c);

    Rational coeff(int g) const;
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const Map& coeffs() const { return c_; }
    Map::const_iterator begin() const { return c_.begin(); }
    Map::const_iterator end() const { return c_.end(); }

    bool operator==(const Vector& o) const { return c_ == o.c_; }

private:
    Map c_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Rational& c, Vector v);

// Parity of the support, or nullopt for zero and mixed vectors.
std::optional<int> vector_parity(const GradedSpace& s, const Vector& v);

std::string format_vector(const GradedSpace& s, const Vector& v);

} // namespace al
