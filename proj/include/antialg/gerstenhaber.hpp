#pragma once

#include "antialg/multimap.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace al {

// j_phi psi on restricted representatives, summed over the homogeneous
// parts of phi.  Both maps must be parity preserving with p+q >= 1.
MultiMap gerstenhaber_product(const MultiMap& phi, const MultiMap& psi);

// [phi,psi] = j_phi psi - (-1)^{|phi||psi|} j_psi phi, extended bilinearly
// over the parity-homogeneous parts.
MultiMap gerstenhaber_bracket(const MultiMap& phi, const MultiMap& psi);

// (1/q!) sum over S_q of sign(s) phi(x; y_s(1), ..., y_s(q)).
MultiMap alt(const MultiMap& phi);

// Parity-preserving, y-skew map with p+q >= 1.
class AlElement
{
public:
    explicit AlElement(MultiMap m);

    const MultiMap& map() const { return m_; }
    std::optional<int> parity() const { return parity_of(m_); }

private:
    MultiMap m_;
};

AlElement al_bracket(const AlElement& a, const AlElement& b);

// Hochschild differential on a purely even space; phi with n arguments
// goes to n+1 arguments.
MultiMap hochschild_differential(const MultiMap& m, const MultiMap& phi);

// Chevalley-Eilenberg differential at a tuple of basis indices.
// bracket(a,b) = [e_a,e_b]; act(a,v) = e_a acting on a coefficient value;
// phi(args) = value on basis arguments.  Any nullopt makes the result unknown.
struct CeOracle
{
    std::function<std::optional<Vector>(int, int)> bracket;
    std::function<std::optional<Vector>(int, const Vector&)> act;
    std::function<std::optional<Vector>(const std::vector<int>&)> phi;
};

std::optional<Vector> ce_differential_at(const CeOracle& o, const std::vector<int>& args);

// Finite purely even version with adjoint coefficients.  bracket is a
// skew (2,0)-map, phi a skew (k,0)-map.
MultiMap ce_differential(const MultiMap& bracket, const MultiMap& phi);

// Skew in the x arguments (purely even maps).
bool is_x_skew(const MultiMap& phi);

} // namespace al
