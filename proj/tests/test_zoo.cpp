#include "support.hpp"

#include "antialg/gerstenhaber.hpp"
#include "antialg/zoo.hpp"

#include <doctest.h>

using namespace al;

namespace {

Vector b(int g) { return Vector::basis(g); }

} // namespace

TEST_SUITE("algebra-zoo")
{
    TEST_CASE("AK(1) structure constants")
    {
        IndexedAntialgebra ak = ak1(3);
        const auto& B = ak.basis;
        int a1 = *B.odd_at(1), a3 = *B.odd_at(3), e2 = *B.even_at(4);
        CHECK(*ak.algebra.mul(a1, a3) == Rational(1, 2) * b(e2));
        CHECK(ak.algebra.mul(a1, a1)->is_zero());
        CHECK(*ak.algebra.mul(*B.even_at(2), *B.even_at(-4)) == b(*B.even_at(-2)));
        CHECK(*ak.algebra.mul(*B.even_at(2), a1) == Rational(1, 2) * b(a3));
        CHECK_FALSE(ak.algebra.mul(*B.even_at(6), *B.even_at(2)));
        CHECK(ak.algebra.space().label(a1) == "a1/2");
        CHECK(ak.algebra.space().label(*B.odd_at(-1)) == "a-1/2");
    }

    TEST_CASE("M1 window")
    {
        IndexedAntialgebra m = m1(2);
        CHECK(m.basis.even.begin()->first == 0);
        CHECK(m.basis.odd.begin()->first == -1);
        CHECK_FALSE(m.basis.even_at(-2));
    }

    TEST_CASE("K3 sits in AK(1)")
    {
        IndexedAntialgebra ak = ak1(2);
        const auto& B = ak.basis;
        int e0 = *B.even_at(0), am = *B.odd_at(-1), ap = *B.odd_at(1);
        CHECK(*ak.algebra.mul(e0, e0) == b(e0));
        CHECK(*ak.algebra.mul(e0, am) == Rational(1, 2) * b(am));
        CHECK(*ak.algebra.mul(am, ap) == Rational(1, 2) * b(e0));
    }

    TEST_CASE("K(1) and W1 brackets")
    {
        LieSuperalgebra k = k1(3);
        int x1 = *k.basis.odd_at(1), l1 = *k.basis.even_at(2);
        CHECK(*k.bracket(x1, x1) == 2 * b(l1));
        int l2 = *k.basis.even_at(4), lm1 = *k.basis.even_at(-2);
        CHECK(*k.bracket(l2, lm1) == -3 * b(l1));
        // [l_1, x_{1/2}] = (1/2 - 1/2) x_{3/2}
        CHECK(k.bracket(l1, x1)->is_zero());
        LieSuperalgebra w = w1(3);
        CHECK(w.basis.even.begin()->first == -2);
        CHECK(*w.bracket(*w.basis.even_at(-2), *w.basis.even_at(2)) == 2 * b(*w.basis.even_at(0)));
    }

    TEST_CASE("dual action table")
    {
        IndexedAntialgebra small = ak1(3), big = ak1(6);
        IndexedModule d = dual_adjoint_window(small, big);
        const auto& A = small.basis;
        const auto& D = d.basis;
        CHECK(*d.module.act(*A.even_at(2), *D.even_at(6)) == b(*D.even_at(4)));
        CHECK(*d.module.act(*A.odd_at(1), *D.odd_at(3)) == Rational(-1, 2) * b(*D.even_at(2)));
    }

    TEST_CASE("gamma values")
    {
        IndexedAntialgebra small = ak1(4), big = ak1(8);
        IndexedModule d = dual_adjoint_window(small, big);
        CochainContext ctx(small.algebra, d.module);
        Cochain g = gamma_cochain(ctx, small.basis, d.basis);
        const auto& F = ctx.sum().from_first;
        const auto& S = ctx.sum().from_second;
        CHECK(g.at(Args{{F[*small.basis.even_at(6)]}, {}}) == -3 * b(S[*d.basis.even_at(-6)]));
        CHECK_FALSE(g.count(Args{{}, {F[*small.basis.odd_at(1)]}}));
        CHECK_FALSE(g.count(Args{{F[*small.basis.even_at(0)]}, {}}));
        CHECK(g.at(Args{{}, {F[*small.basis.odd_at(3)]}}) == 2 * b(S[*d.basis.odd_at(-3)]));

        // gamma(e1 e2) = e1 gamma(e2) + e2 gamma(e1)
        int e1 = F[*small.basis.even_at(2)], e2 = F[*small.basis.even_at(4)];
        Vector lhs = g.at(Args{{F[*small.basis.even_at(6)]}, {}});
        Vector rhs = *ctx.mul(b(e1), g.at(Args{{e2}, {}})) + *ctx.mul(b(e2), g.at(Args{{e1}, {}}));
        CHECK(lhs == rhs);
    }

    TEST_CASE("eta entries")
    {
        IndexedAntialgebra small = m1(3), big = m1(6);
        IndexedModule d = dual_adjoint_window(small, big);
        CochainContext ctx(small.algebra, d.module);
        Cochain eta = eta_cochain(ctx, small.basis, d.basis, 1, 0);
        MultiMap full = skew_extend(eta, ctx.space_ptr());
        const auto& F = ctx.sum().from_first;
        const auto& S = ctx.sum().from_second;
        int am = F[*small.basis.odd_at(-1)], ap = F[*small.basis.odd_at(1)];
        Vector e0s = b(S[*d.basis.even_at(0)]);
        CHECK(full.value(Args{{}, {am, ap}}) == e0s);
        CHECK(full.value(Args{{}, {ap, am}}) == -1 * e0s);
        CHECK(full.entries().size() == 2);
    }

    TEST_CASE("Gelfand-Fuchs values")
    {
        LieSuperalgebra k = k1(4);
        const auto& B = k.basis;
        CHECK(gf_cocycle(k, *B.even_at(4), *B.even_at(-4)) == 6);
        CHECK(gf_cocycle(k, *B.even_at(2), *B.even_at(-2)) == 0);
        CHECK(gf_cocycle(k, *B.odd_at(-1), *B.odd_at(1)) == 0);
        CHECK(gf_cocycle(k, *B.even_at(4), *B.even_at(-2)) == 0);
        CHECK(dual_gf_cocycle(k, *B.odd_at(3)) == -8 * b(*B.odd_at(-3)));
        CHECK(dual_gf_cocycle(k, *B.even_at(4)) == 6 * b(*B.even_at(-4)));
    }

    TEST_CASE("Godbillon-Vey values")
    {
        LieSuperalgebra w = w1(4);
        int lm = *w.basis.even_at(-2), l0 = *w.basis.even_at(0), l1 = *w.basis.even_at(2),
            l2 = *w.basis.even_at(4);
        CHECK(gv_cocycle(w, {lm, l0, l1}) == 1);
        CHECK(gv_cocycle(w, {l0, lm, l1}) == -1);
        CHECK(gv_cocycle(w, {l1, lm, l0}) == 1);
        CHECK(gv_cocycle(w, {lm, l0, l2}) == 0);
        CHECK(gv_cocycle(w, {lm, lm, l1}) == 0);
        CeOracle o{[&](int u, int v) { return w.bracket(u, v); },
                   [](int, const Vector&) -> std::optional<Vector> { return Vector{}; },
                   [&](const std::vector<int>& t) -> std::optional<Vector> { return gv_cocycle(w, t) * b(0); }};
        auto d = ce_differential_at(o, {lm, l0, l1, l2});
        REQUIRE(d);
        CHECK(d->is_zero());
    }

    TEST_CASE("verification reports")
    {
        VerifyReport r = verify_named("ak1-axioms", 3);
        CHECK(r.ok());
        std::string text = format_verify_structured(r);
        CHECK(text.find("schema=antialg-report/1") != std::string::npos);
        CHECK(text.find("result=pass") != std::string::npos);
        CHECK(verify_named("gf", 3).ok());
        CHECK(verify_named("gamma", 3).ok());
        CHECK_THROWS(verify_named("nothing", 3));
    }
}
