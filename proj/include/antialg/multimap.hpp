#pragma once

#include "antialg/space.hpp"

#include <compare>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace al {

// Arguments of a (p,q)-map: p even basis indices followed by q odd ones.
struct Args
{
    std::vector<int> x, y;

    int p() const { return static_cast<int>(x.size()); }
    int q() const { return static_cast<int>(y.size()); }
    auto operator<=>(const Args&) const = default;
};

// Sorts y ascending; returns the sign of the sorting permutation, or 0 on a repeat.
int canonicalize_y(std::vector<int>& y);

// Sparse multilinear map V0^p ⊗ V1^q → V.  Entries of several (p,q) blocks
// may coexist; p() and q() are only meaningful for a single block.
class MultiMap
{
public:
    using Entries = std::map<Args, Vector>;

    MultiMap() = default;
    explicit MultiMap(SpacePtr space) : space_(std::move(space)) {}

    const SpacePtr& space_ptr() const { return space_; }
    const GradedSpace& space() const { return *space_; }

    void add(const Args& a, int out, const Rational& c);
    void add(const Args& a, const Vector& v, const Rational& c = 1);
    void add(const MultiMap& m, const Rational& c = 1);

    const Entries& entries() const { return e_; }
    Vector value(const Args& a) const;
    bool is_zero() const { return e_.empty(); }

    std::set<std::pair<int, int>> blocks() const;
    MultiMap block(int p, int q) const;
    MultiMap part(int out_parity) const;
    int p() const;
    int q() const;

    MultiMap& operator+=(const MultiMap& m) { add(m); return *this; }
    MultiMap& operator-=(const MultiMap& m) { add(m, -1); return *this; }
    MultiMap& operator*=(const Rational& c);
    bool operator==(const MultiMap& o) const { return e_ == o.e_; }

private:
    SpacePtr space_;
    Entries e_;
};

MultiMap operator+(MultiMap a, const MultiMap& b);
MultiMap operator-(MultiMap a, const MultiMap& b);
MultiMap operator*(const Rational& c, MultiMap m);

// Multilinear evaluation of the (|xs|,|ys|) block of phi.
Vector multimap_eval(const MultiMap& phi, const std::vector<Vector>& xs, const std::vector<Vector>& ys);

// p + i + 1 mod 2 for a (p,q)-map with values in V_i.
inline int map_parity(int p, int out_parity) { return (p + out_parity + 1) % 2; }

// nullopt for inhomogeneous maps and for the zero map.
std::optional<int> parity_of(const MultiMap& phi);

bool is_parity_preserving(const MultiMap& phi);

// True iff every block is skew-symmetric in its y-arguments.
bool is_y_skew(const MultiMap& phi);

std::string format_multimap(const MultiMap& phi);

} // namespace al
