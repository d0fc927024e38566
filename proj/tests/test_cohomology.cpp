#include "support.hpp"

#include <doctest.h>

using namespace al;

namespace {

long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// (dim a0)^p C(dim a1, q) dim B_{q mod 2}, summed over p + q = k.
long count_cochains(const Antialgebra& a, const Module& m, int k)
{
    long total = 0;
    for (int p = 0; p <= k; ++p) {
        int q = k - p;
        long n = 1;
        for (int i = 0; i < p; ++i)
            n *= a.space().dim0();
        total += n * binomial(a.space().dim1(), q) * (q % 2 ? m.space().dim1() : m.space().dim0());
    }
    return total;
}

Vector prod(const CochainContext& ctx, const Vector& u, const Vector& v) { return *ctx.mul(u, v); }

} // namespace

TEST_SUITE("cohomology")
{
    TEST_CASE("cochain dimensions")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext adj(k3, adjoint_module(k3));
        CochainSpace c1(adj, 1);
        CHECK(c1.dim() == 5);
        CHECK(c1.block_dim(1, 0) == 1);
        CHECK(c1.block_dim(0, 1) == 4);
        CochainContext triv(k3, trivial_module(k3));
        CHECK(CochainSpace(triv, 2).dim() == 2);
        for (int k = 1; k <= 4; ++k) {
            CHECK(CochainSpace(adj, k).dim() == count_cochains(k3, adj.module(), k));
            CHECK(CochainSpace(triv, k).dim() == count_cochains(k3, triv.module(), k));
        }
    }

    TEST_CASE("degree one components on K3")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext ctx(k3, adjoint_module(k3));
        CochainSpace c1(ctx, 1);
        std::mt19937 rng(11);
        const auto& F = ctx.sum().from_first;
        int e = F[0], a = F[1], b = F[2];
        for (int t = 0; t < 10; ++t) {
            Cochain c = c1.cochain(testing::random_coords(rng, c1.dim()));
            auto value = [&](int g) {
                Args args;
                (ctx.space().parity(g) == 0 ? args.x : args.y).push_back(g);
                auto it = c.find(args);
                return it == c.end() ? Vector{} : it->second;
            };
            auto lin = [&](const Vector& v) {
                Vector r;
                for (const auto& [g, k] : v)
                    r.add(value(g), k);
                return r;
            };
            MultiMap phi = skew_extend(c, ctx.space_ptr());
            MultiMap c00 = phi.block(1, 0), c11 = phi.block(0, 1);
            Vector E = Vector::basis(e);
            MultiMap d10 = apply_delta(ctx, c00, D10);
            // (2,0)-values carry the 1/2 of m'0, as in c(x1,x2) = 2c(x1,x2;).
            CHECK(2 * d10.value(Args{{e, e}, {}}) ==
                  -1 * prod(ctx, E, value(e)) - prod(ctx, value(e), E) + lin(prod(ctx, E, E)));
            MultiMap d01 = apply_delta(ctx, c00, D01);
            MultiMap d11 = apply_delta(ctx, c11, D10);
            for (int y : {a, b}) {
                Vector Y = Vector::basis(y);
                CHECK(d01.value(Args{{e}, {y}}) == -1 * prod(ctx, value(e), Y));
                CHECK(d11.value(Args{{e}, {y}}) == -1 * prod(ctx, E, value(y)) + lin(prod(ctx, E, Y)));
            }
        }
    }

    TEST_CASE("delta of zero is zero")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext ctx(k3, adjoint_module(k3));
        CHECK(apply_delta(ctx, MultiMap(ctx.space_ptr())).is_zero());
    }

    TEST_CASE("delta01 vanishes with trivial coefficients")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext ctx(k3, trivial_module(k3));
        CHECK(ctx.trivial_action());
        std::mt19937 rng(12);
        for (int k = 1; k <= 4; ++k) {
            CochainSpace cs(ctx, k);
            for (int t = 0; t < 5; ++t) {
                MultiMap phi = skew_extend(cs.cochain(testing::random_coords(rng, cs.dim())), ctx.space_ptr());
                CHECK(apply_delta(ctx, phi, D01).is_zero());
            }
        }
    }

    TEST_CASE("formula, bracket, expansion and matrix agree")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext ctx(k3, adjoint_module(k3));
        std::mt19937 rng(13);
        for (int k = 1; k <= 3; ++k) {
            auto src = std::make_shared<CochainSpace>(ctx, k);
            auto tgt = std::make_shared<CochainSpace>(ctx, k + 1);
            DifferentialMatrix d = build_differential(ctx, src, tgt);
            for (int t = 0; t < 5; ++t) {
                Vector v = testing::random_coords(rng, src->dim());
                Cochain c = src->cochain(v);
                MultiMap phi = skew_extend(c, ctx.space_ptr());
                MultiMap lhs = apply_delta(ctx, phi);
                CHECK(lhs == ad_m_alt(ctx, phi));
                CHECK(tgt->coords(canonical_part(lhs)) == apply(d.total(), v));
                auto expanded = delta_expand(ctx, c, DALL, ctx.full_window());
                REQUIRE(expanded);
                CHECK(tgt->coords(*expanded) == apply(d.total(), v));
            }
        }
    }

    TEST_CASE("composites vanish on K3")
    {
        Antialgebra k3 = testing::load_k3();
        for (auto mod : {trivial_module(k3), adjoint_module(k3)}) {
            CochainContext ctx(k3, mod);
            ComplexReport rep = assemble_complex(ctx, 4);
            for (const auto& c : rep.checks) {
                INFO(c.name << " " << c.witness);
                CHECK(c.ok());
            }
            Window w = ctx.full_window();
            for (const auto& c : check_delta_squared(ctx, 2, w, ctx.module_even(), ctx.module_odd(), w))
                CHECK(c.ok());
        }
    }

    TEST_CASE("cohomology of K3")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext triv(k3, trivial_module(k3));
        for (const auto& r : cohomology_dims(assemble_complex(triv, 4)))
            CHECK(r.dim_cohomology == 0);
        CochainContext adj(k3, adjoint_module(k3));
        auto rows = cohomology_dims(assemble_complex(adj, 3));
        CHECK(rows[0].dim_cochains == 5);
        CHECK(rows[0].dim_cohomology == 3);
        CHECK(rows[1].dim_cohomology == 0);
        CHECK(rows[2].dim_cohomology == 0);
    }

    TEST_CASE("derivations against ker delta1")
    {
        Antialgebra k3 = testing::load_k3();
        auto z = make_space({"e"}, {"a"});
        Antialgebra zero(ProductTable(z), "Z");
        struct Case
        {
            Antialgebra a;
            Module m;
            int dim;
        };
        std::vector<Case> cases{{k3, adjoint_module(k3), 3}, {k3, trivial_module(k3), 0},
                                {zero, trivial_module(zero), 1}, {zero, adjoint_module(zero), 2}};
        for (const auto& c : cases) {
            CochainContext ctx(c.a, c.m);
            ComplexReport rep = assemble_complex(ctx, 1);
            const auto& d1 = rep.matrices[0];
            int n = d1.source->dim();
            auto der = row_space_basis(derivation_space(ctx, *d1.source), n);
            auto ker = row_space_basis(nullspace(d1.total()), n);
            CHECK(static_cast<int>(der.size()) == c.dim);
            CHECK(der == ker);
            CHECK(cohomology_dims(rep)[0].dim_cohomology == c.dim);
        }
    }

    TEST_CASE("extensions from cocycles")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext ctx(k3, adjoint_module(k3));
        Antialgebra plain = extension_from_cocycle(ctx, Cochain{});
        for (int u = 0; u < ctx.space().dim(); ++u)
            for (int v = 0; v < ctx.space().dim(); ++v)
                CHECK(*plain.mul(u, v) == *ctx.mul(u, v));

        ComplexReport rep = assemble_complex(ctx, 2);
        const auto& d1 = rep.matrices[0];
        std::mt19937 rng(14);
        for (int t = 0; t < 5; ++t) {
            Vector l = testing::random_coords(rng, d1.source->dim());
            Vector c = apply(d1.total(), l);
            Cochain cc = rep.matrices[1].source->cochain(c);
            Antialgebra ext = extension_from_cocycle(ctx, cc);
            CHECK(check_axioms(ext).ok());
            auto found = solve_coboundary(d1, c);
            REQUIRE(found);
            CHECK(apply(d1.total(), *found) == c);
            CHECK(is_trivializing(ctx, ext, d1.source->cochain(*found)));
        }
    }

    TEST_CASE("every central extension of K3 is trivial")
    {
        Antialgebra k3 = testing::load_k3();
        CochainContext ctx(k3, trivial_module(k3));
        ComplexReport rep = assemble_complex(ctx, 2);
        for (const Vector& z : nullspace(rep.matrices[1].total())) {
            auto l = solve_coboundary(rep.matrices[0], z);
            CHECK(l);
        }
    }
}
