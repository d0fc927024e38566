#pragma once

#include "antialg/antialgebra.hpp"
#include "antialg/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace al {

// Values on canonical argument tuples (odd arguments strictly increasing).
using Cochain = std::map<Args, Vector>;

enum Part : unsigned { D10 = 1, D01 = 2, DM12 = 4, DALL = 7 };

// Basis indices of the algebra allowed as cochain arguments.
struct Window
{
    std::vector<int> even, odd;
};

// An antialgebra with coefficients, realized as the semidirect product.
// Indices below are global indices of the semidirect space.
class CochainContext
{
public:
    CochainContext(const Antialgebra& a, const Module& m);

    const Antialgebra& base() const { return base_; }
    const Module& module() const { return module_; }
    const Antialgebra& algebra() const { return sd_.algebra; }
    const GradedSpace& space() const { return sd_.algebra.space(); }
    const SpacePtr& space_ptr() const { return sd_.algebra.space_ptr(); }
    const DirectSum& sum() const { return sd_.sum; }

    const std::vector<int>& algebra_even() const { return ea_; }
    const std::vector<int>& algebra_odd() const { return oa_; }
    const std::vector<int>& module_even() const { return eb_; }
    const std::vector<int>& module_odd() const { return ob_; }
    Window full_window() const { return {ea_, oa_}; }

    // Whether the module action is identically zero.
    bool trivial_action() const;

    std::optional<Vector> mul(int a, int b) const { return sd_.algebra.mul(a, b); }
    std::optional<Vector> mul(const Vector& u, const Vector& v) const { return sd_.algebra.mul(u, v); }

private:
    Antialgebra base_;
    Module module_;
    Semidirect sd_;
    std::vector<int> ea_, oa_, eb_, ob_;
};

struct CochainKey
{
    Args args;
    int out = 0;
    auto operator<=>(const CochainKey&) const = default;
};

// Basic cochains of degree k: blocks p = k..0, lexicographic within a block,
// target forced into B_0 for even q and B_1 for odd q.
class CochainSpace
{
public:
    CochainSpace(const CochainContext& ctx, int k);
    CochainSpace(const CochainContext& ctx, int k, Window w, std::vector<int> out_even, std::vector<int> out_odd);

    int degree() const { return k_; }
    int dim() const { return static_cast<int>(keys_.size()); }
    const CochainKey& key(int i) const { return keys_[i]; }
    std::optional<int> index(const CochainKey& k) const;
    const Window& window() const { return w_; }
    int block_dim(int p, int q) const;

    Vector coords(const Cochain& c) const;
    Cochain cochain(const Vector& coords) const;
    Cochain basic(int i) const;

private:
    int k_;
    Window w_;
    std::vector<CochainKey> keys_;
    std::map<CochainKey, int> index_;
};

// Canonical values of a y-skew map, and the skew extension back.
Cochain canonical_part(const MultiMap& phi);
MultiMap skew_extend(const Cochain& c, const SpacePtr& space);

// Literal evaluation of the three components at one target tuple;
// nullopt when a needed product is unknown.
std::optional<Vector> delta_at(const CochainContext& ctx, const MultiMap& phi, const Args& target,
                               unsigned parts = DALL);

// delta on a finite structure evaluated tuple by tuple from the formulas.
MultiMap apply_delta(const CochainContext& ctx, const MultiMap& phi, unsigned parts = DALL);

// delta by expansion of each entry of phi; targets restricted to w.
// Returns nullopt if a needed product is unknown.
std::optional<Cochain> delta_expand(const CochainContext& ctx, const Cochain& phi, unsigned parts, const Window& w);

// ad_m phi, alternated, computed in the bracket engine on the semidirect space.
MultiMap ad_m_alt(const CochainContext& ctx, const MultiMap& phi);

struct DifferentialMatrix
{
    std::shared_ptr<const CochainSpace> source, target;
    Matrix d10, d01, dm12;

    Matrix total() const;
};

DifferentialMatrix build_differential(const CochainContext& ctx, std::shared_ptr<const CochainSpace> source,
                                      std::shared_ptr<const CochainSpace> target);

struct CompositeCheck
{
    std::string name;
    long columns = 0;
    long skipped = 0;
    long failures = 0;
    std::string witness;

    bool ok() const { return failures == 0; }
};

struct ComplexReport
{
    std::vector<DifferentialMatrix> matrices;
    // Per degree: delta^2 and the five block identities, plus the bicomplex
    // relations when the action is trivial.
    std::vector<CompositeCheck> checks;

    bool ok() const;
};

// Matrices delta^1..delta^kmax on the full finite complex, with composites checked.
ComplexReport assemble_complex(const CochainContext& ctx, int kmax);

// Composites delta^{k+1} delta^k on basic cochains of degree k over the source
// window, evaluated at target tuples over the target window.
std::vector<CompositeCheck> check_delta_squared(const CochainContext& ctx, int k, const Window& source,
                                                const std::vector<int>& out_even, const std::vector<int>& out_odd,
                                                const Window& target);

struct CohomologyRow
{
    int k;
    int dim_cochains;
    int rank_delta;
    int dim_cocycles;
    int dim_cohomology;
};

std::vector<CohomologyRow> cohomology_dims(const ComplexReport& complex);

// Even derivations as coordinates in the degree-1 cochain basis.
std::vector<Vector> derivation_space(const CochainContext& ctx, const CochainSpace& c1);

// Product table on a + B from a 2-cochain c: c(x1,x2) = 2c(x1,x2;),
// c(x,y) = c(y,x) = c(x;y), c(y1,y2) = c(;y1,y2).
Antialgebra extension_from_cocycle(const CochainContext& ctx, const Cochain& c);

// L with delta L = c, if any.
std::optional<Vector> solve_coboundary(const DifferentialMatrix& d1, const Vector& c);

// Whether (a,b) -> (a, b + L(a)) is a homomorphism from the semidirect
// product onto the extension.
bool is_trivializing(const CochainContext& ctx, const Antialgebra& extension, const Cochain& l);

} // namespace al
