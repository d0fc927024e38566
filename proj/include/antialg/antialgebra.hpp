#pragma once

#include "antialg/multimap.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace al {

// Products of basis pairs.  Explicit entries are stored as given; a missing
// ordered pair is completed from its transpose by a.b = (-1)^{|a||b|} b.a.
// Unknown pairs are products that leave a finite window: their value is
// known to lie outside the space.
class ProductTable
{
public:
    ProductTable() = default;
    explicit ProductTable(SpacePtr space) : space_(std::move(space)) {}

    const SpacePtr& space_ptr() const { return space_; }
    const GradedSpace& space() const { return *space_; }

    void set(int a, int b, const Vector& v);
    void mark_unknown(int a, int b);

    bool is_explicit(int a, int b) const { return explicit_.count({a, b}) > 0; }
    bool is_unknown(int a, int b) const { return unknown_.count({std::min(a, b), std::max(a, b)}) > 0; }
    bool has_unknowns() const { return !unknown_.empty(); }

    std::optional<Vector> product(int a, int b) const;
    std::optional<Vector> product(const Vector& u, const Vector& v) const;

    const std::map<std::pair<int, int>, Vector>& explicit_entries() const { return explicit_; }
    const std::set<std::pair<int, int>>& unknown_entries() const { return unknown_; }

private:
    SpacePtr space_;
    std::map<std::pair<int, int>, Vector> explicit_;
    std::set<std::pair<int, int>> unknown_;
};

class Antialgebra
{
public:
    Antialgebra() = default;
    explicit Antialgebra(ProductTable t, std::string name = {}) : t_(std::move(t)), name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    const GradedSpace& space() const { return t_.space(); }
    const SpacePtr& space_ptr() const { return t_.space_ptr(); }
    const ProductTable& table() const { return t_; }

    std::optional<Vector> mul(int a, int b) const { return t_.product(a, b); }
    std::optional<Vector> mul(const Vector& u, const Vector& v) const { return t_.product(u, v); }

    // m(x1,x2) = x1.x2/2, m(x;y) = x.y, m(y1,y2) = y1.y2 over known products.
    MultiMap m() const;

private:
    ProductTable t_;
    std::string name_;
};

// Action rho_a b of base basis a on module basis b, with unknown entries
// as in ProductTable.
class Module
{
public:
    Module() = default;
    Module(SpacePtr base, SpacePtr space, std::string name = {})
        : base_(std::move(base)), space_(std::move(space)), name_(std::move(name))
    {
    }

    const std::string& name() const { return name_; }
    const GradedSpace& base() const { return *base_; }
    const SpacePtr& base_ptr() const { return base_; }
    const GradedSpace& space() const { return *space_; }
    const SpacePtr& space_ptr() const { return space_; }

    void set(int a, int b, const Vector& v);
    void mark_unknown(int a, int b) { unknown_.insert({a, b}); }
    bool is_unknown(int a, int b) const { return unknown_.count({a, b}) > 0; }

    std::optional<Vector> act(int a, int b) const;
    std::optional<Vector> act(const Vector& a, const Vector& b) const;

    const std::map<std::pair<int, int>, Vector>& entries() const { return act_; }
    const std::set<std::pair<int, int>>& unknown_entries() const { return unknown_; }

private:
    SpacePtr base_, space_;
    std::string name_;
    std::map<std::pair<int, int>, Vector> act_;
    std::set<std::pair<int, int>> unknown_;
};

// Copy of the algebra acting on itself; module labels get a trailing prime.
Module adjoint_module(const Antialgebra& a);

// One-dimensional even module with zero action.
Module trivial_module(const Antialgebra& a);

// <rho*_a u, b> = (-1)^{|u||a|} <u, rho_a b>, dual basis labels get a
// trailing star and keep the parity of the underlying vector.
Module dual_module(const Module& m);

// Keeps base indices in base_keep and module indices in keep; entries with
// support outside keep become unknown.
Module restrict_module(const Module& m, SpacePtr base, const std::vector<int>& base_keep, SpacePtr space,
                       const std::vector<int>& keep);

struct Violation
{
    std::string identity;
    std::vector<int> args;
    Vector residual;
};

struct AxiomReport
{
    std::vector<Violation> violations;
    long checked = 0;
    long skipped = 0;

    bool ok() const { return violations.empty(); }
};

std::string format_report(const GradedSpace& s, const AxiomReport& r);

// The four third-order identities plus SkewP and parity of products.
AxiomReport check_axioms(const Antialgebra& a);

// Associative even part, commuting left multiplications by even elements,
// right multiplication by odd elements an odd derivation.
AxiomReport check_axioms_v2(const Antialgebra& a);

struct ZeroSquareReport
{
    // Nonzero entries of [m,m]_al on canonical argument tuples.
    std::vector<Violation> nonzero;
    // Entries where (1/2)[m,m]_al disagrees with the expanded identities.
    std::vector<Violation> expansion_mismatch;
    long checked = 0;
    long skipped = 0;

    bool ok() const { return nonzero.empty() && expansion_mismatch.empty(); }
};

ZeroSquareReport zero_square_check(const Antialgebra& a);

struct Semidirect
{
    Antialgebra algebra;
    DirectSum sum;
};

// (a,b).(a',b') = (a.a', rho_a b' + (-1)^{|a'||b|} rho_a' b).
Semidirect semidirect(const Antialgebra& a, const Module& m);

// Parity-preserving check for a table: a_i.a_j lies in a_{i+j}.
bool table_is_parity_preserving(const ProductTable& t);

} // namespace al
