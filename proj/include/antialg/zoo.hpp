#pragma once

#include "antialg/cohomology.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace al {

// Basis vectors of an index family, keyed by twice the index so that
// half-integer odd indices stay integral.
struct IndexedBasis
{
    SpacePtr space;
    std::map<int, int> even, odd;
    std::vector<int> twice;

    std::optional<int> even_at(int twice_n) const;
    std::optional<int> odd_at(int twice_i) const;
    std::vector<int> even_indices() const;
    std::vector<int> odd_indices() const;
};

// Index window: even n with lo <= n <= N, odd i with lo_odd <= i <= N - 1/2.
struct IndexRange
{
    int even_lo2, even_hi2, odd_lo2, odd_hi2;

    bool has_even(int t) const { return t % 2 == 0 && even_lo2 <= t && t <= even_hi2; }
    bool has_odd(int t) const { return t % 2 != 0 && odd_lo2 <= t && t <= odd_hi2; }
};

IndexRange ak1_range(int n);
IndexRange m1_range(int n);

struct IndexedAntialgebra
{
    Antialgebra algebra;
    IndexedBasis basis;
};

// e_n.e_m = e_{n+m}, e_n.a_i = a_{n+i}/2, a_i.a_j = (j-i)/2 e_{i+j};
// products leaving the window are unknown.
IndexedAntialgebra ak1(int n);
IndexedAntialgebra m1(int n);
IndexedAntialgebra conformal_antialgebra(const IndexRange& r, const std::string& name);

// Dual of the adjoint module of `big` acting through `small`, kept on the
// window of `small`; big must contain every difference of small indices.
struct IndexedModule
{
    Module module;
    IndexedBasis basis;
};

IndexedModule dual_adjoint_window(const IndexedAntialgebra& small, const IndexedAntialgebra& big);

// Lie superalgebra given by its bracket table; entries leaving the window
// are unknown.
struct LieSuperalgebra
{
    std::string name;
    IndexedBasis basis;
    std::map<std::pair<int, int>, Vector> table;
    std::set<std::pair<int, int>> unknown;

    const GradedSpace& space() const { return *basis.space; }
    std::optional<Vector> bracket(int a, int b) const;
};

// [l_n,l_m] = (m-n) l_{n+m}, [l_n,x_i] = (i-n/2) x_{n+i}, [x_i,x_j] = 2 l_{i+j}.
LieSuperalgebra k1(int n);
// [l_n,l_m] = (m-n) l_{n+m}, n >= -1.
LieSuperalgebra w1(int n);

// c(l_n,l_m) = (n^3 - n) delta_{n+m,0}, c(x_i,x_j) = (1 - 4i^2) delta_{i+j,0}.
Rational gf_cocycle(const LieSuperalgebra& g, int a, int b);
// C(X) = c(X, .) as coordinates on the dual basis of g.
Vector dual_gf_cocycle(const LieSuperalgebra& g, int x);
// l*_{-1} ^ l*_0 ^ l*_1 on W1.
Rational gv_cocycle(const LieSuperalgebra& g, const std::vector<int>& args);

struct CheckLine
{
    std::string name;
    long checked = 0;
    long skipped = 0;
    long failed = 0;
    std::string detail;

    bool ok() const { return failed == 0; }
};

struct VerifyReport
{
    std::string target;
    int window = 0;
    std::vector<CheckLine> checks;
    std::vector<std::pair<std::string, std::string>> facts;

    bool ok() const;
};

std::string format_verify_text(const VerifyReport& r);
std::string format_verify_structured(const VerifyReport& r);

// gamma(e_n) = -n e*_{-n}, gamma(a_i) = (i^2 - 1/4) a*_{-i}.
Cochain gamma_cochain(const CochainContext& ctx, const IndexedBasis& alg, const IndexedBasis& dual,
                      const std::map<int, Rational>& perturb = {});

// lambda a*_{-1/2}^a*_{1/2} (x) e*_0 + mu (e*_0^e*_0 (x) e*_0 - 1/2 e*_0^a*_{-1/2} (x) a*_{1/2}
// + 1/2 e*_0^a*_{1/2} (x) a*_{-1/2}).
Cochain eta_cochain(const CochainContext& ctx, const IndexedBasis& alg, const IndexedBasis& dual,
                    const Rational& lambda, const Rational& mu);

VerifyReport verify_gamma(int n);
VerifyReport verify_eta(int n);
VerifyReport verify_gf(int n);
VerifyReport verify_dual_gf(int n);
VerifyReport verify_gv(int n);
VerifyReport verify_ak1_axioms(int n);
VerifyReport verify_m1_axioms(int n);

// Composites delta^{k+1} delta^k for k < kmax on AK(1) with adjoint
// coefficients: arguments and values on window n, structure on window 4n.
std::vector<CompositeCheck> ak1_delta_squared(int n, int kmax);

VerifyReport verify_named(const std::string& target, int n);
const std::vector<std::string>& verify_targets();

} // namespace al
