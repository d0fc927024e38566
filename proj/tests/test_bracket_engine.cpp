#include "support.hpp"

#include "antialg/gerstenhaber.hpp"

#include <doctest.h>

using namespace al;

namespace {

// Upper triangular 2x2 matrices: p = e11, q = e12, r = e22.
MultiMap triangular(const SpacePtr& s)
{
    MultiMap m(s);
    m.add(Args{{0, 0}, {}}, 0, 1);
    m.add(Args{{0, 1}, {}}, 1, 1);
    m.add(Args{{1, 2}, {}}, 1, 1);
    m.add(Args{{2, 2}, {}}, 2, 1);
    return m;
}

// sl2 with h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
MultiMap sl2(const SpacePtr& s)
{
    MultiMap b(s);
    auto put = [&](int u, int v, int out, int c) {
        b.add(Args{{u, v}, {}}, out, c);
        b.add(Args{{v, u}, {}}, out, -c);
    };
    put(0, 1, 1, 2);
    put(0, 2, 2, -2);
    put(1, 2, 0, 1);
    return b;
}

Vector ev(const MultiMap& phi, std::vector<int> x, std::vector<int> y = {})
{
    std::vector<Vector> xs, ys;
    for (int i : x)
        xs.push_back(Vector::basis(i));
    for (int i : y)
        ys.push_back(Vector::basis(i));
    return multimap_eval(phi, xs, ys);
}

} // namespace

TEST_SUITE("bracket-engine")
{
    TEST_CASE("case (c): m1 inserted into m''0")
    {
        Antialgebra k3 = testing::load_k3();
        MultiMap m = k3.m();
        MultiMap m1 = m.block(1, 1), m02 = m.block(0, 2);
        MultiMap j = gerstenhaber_product(m1, m02);
        // (j m1 m''0)(x; y1, y2) = (-1)^{0*1} m''0(m1(x;y1), y2)
        for (int y1 : {1, 2})
            for (int y2 : {1, 2}) {
                Vector want;
                for (const auto& [g, c] : ev(m1, {0}, {y1}))
                    want.add(ev(m02, {}, {g, y2}), c);
                CHECK(j.value(Args{{0}, {y1, y2}}) == want);
            }
        CHECK(j.value(Args{{0}, {1, 2}}) == Rational(1, 4) * Vector::basis(0));
    }

    TEST_CASE("product with the zero map is zero")
    {
        Antialgebra k3 = testing::load_k3();
        MultiMap zero(k3.space_ptr());
        CHECK(gerstenhaber_product(zero, k3.m()).is_zero());
        CHECK(gerstenhaber_product(k3.m(), zero).is_zero());
    }

    TEST_CASE("purely even j_m m is the associator")
    {
        auto s = make_space({"p", "q", "r"}, {});
        std::mt19937 rng(1);
        MultiMap m = testing::random_map(rng, s, 2, 0, false);
        MultiMap j = gerstenhaber_product(m, m);
        for (const auto& t : testing::tuples(s->basis(0), 3)) {
            Vector direct;
            for (const auto& [g, c] : ev(m, {t[0], t[1]}))
                direct.add(ev(m, {g, t[2]}), c);
            for (const auto& [g, c] : ev(m, {t[1], t[2]}))
                direct.add(ev(m, {t[0], g}), -c);
            CHECK(j.value(Args{t, {}}) == direct);
        }
        CHECK(gerstenhaber_product(triangular(s), triangular(s)).is_zero());
    }

    TEST_CASE("graded antisymmetry")
    {
        std::mt19937 rng(2);
        auto s = make_space({"x0", "x1"}, {"y0", "y1"});
        std::vector<std::pair<int, int>> ar{{0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}, {1, 2}};
        for (int t = 0; t < 30; ++t) {
            auto a = ar[rng() % ar.size()], b = ar[rng() % ar.size()];
            AlElement u(testing::random_map(rng, s, a.first, a.second, true));
            AlElement v(testing::random_map(rng, s, b.first, b.second, true));
            if (u.map().is_zero() || v.map().is_zero())
                continue;
            MultiMap uv = al_bracket(u, v).map(), vu = al_bracket(v, u).map();
            uv.add(vu, sign_of_power(*u.parity() * *v.parity()));
            CHECK(uv.is_zero());
        }
    }

    TEST_CASE("bracket of an odd map with itself")
    {
        Antialgebra k3 = testing::load_k3();
        MultiMap m = k3.m();
        CHECK(*parity_of(m.block(2, 0)) == 1);
        std::mt19937 rng(3);
        auto s = make_space({"x0", "x1"}, {});
        MultiMap odd = testing::random_map(rng, s, 2, 0, false);
        MultiMap twice = 2 * gerstenhaber_product(odd, odd);
        CHECK(gerstenhaber_bracket(odd, odd) == twice);
        MultiMap even = testing::random_map(rng, s, 1, 0, false);
        CHECK(gerstenhaber_bracket(even, even).is_zero());
    }

    TEST_CASE("alt is a projector")
    {
        auto s = make_space({"e"}, {"a", "b"});
        MultiMap single(s);
        single.add(Args{{}, {1, 2}}, 0, 1);
        MultiMap a = alt(single);
        CHECK(a.value(Args{{}, {1, 2}}) == Rational(1, 2) * Vector::basis(0));
        CHECK(a.value(Args{{}, {2, 1}}) == Rational(-1, 2) * Vector::basis(0));
        CHECK(alt(a) == a);

        std::mt19937 rng(4);
        MultiMap q1 = testing::random_map(rng, s, 1, 1, false);
        CHECK(alt(q1) == q1);
        MultiMap q0 = testing::random_map(rng, s, 2, 0, false);
        CHECK(alt(q0) == q0);
        MultiMap q2 = testing::random_map(rng, s, 1, 2, false);
        CHECK(alt(alt(q2)) == alt(q2));
    }

    TEST_CASE("K3 has [m,m] = 0 and the components expand as computed")
    {
        Antialgebra k3 = testing::load_k3();
        AlElement m(k3.m());
        CHECK(al_bracket(m, m).map().is_zero());
        CHECK(zero_square_check(k3).ok());
    }

    TEST_CASE("component expansions of [m,m] on random tables")
    {
        // Brute force fixes the prefactors: (1/2)[m,m](x1,x2,x3) is the
        // associator of m'0, and [m,m](x;y1,y2) = m''0(m1(x;y1),y2)
        // - m''0(m1(x;y2),y1) - 2 m'0(x, m''0(y1,y2)).
        std::mt19937 rng(5);
        auto s = make_space({"e", "f"}, {"a", "b"});
        for (int t = 0; t < 5; ++t) {
            MultiMap raw = testing::random_map(rng, s, 2, 0, false);
            MultiMap m0(s);
            for (const auto& [a, v] : raw.entries()) {
                m0.add(a, v, Rational(1, 2));
                m0.add(Args{{a.x[1], a.x[0]}, {}}, v, Rational(1, 2));
            }
            MultiMap m1 = testing::random_map(rng, s, 1, 1, false);
            MultiMap m2 = testing::random_map(rng, s, 0, 2, true);
            MultiMap m = m0 + m1 + m2;
            MultiMap br = al_bracket(AlElement(m), AlElement(m)).map();
            auto M = [&](const MultiMap& f, std::vector<Vector> x, std::vector<Vector> y) {
                return multimap_eval(f, x, y);
            };
            auto B = [](int g) { return Vector::basis(g); };
            for (const auto& x : testing::tuples({0, 1}, 3)) {
                Vector lhs = Rational(1, 2) * br.value(Args{x, {}});
                Vector rhs = M(m0, {M(m0, {B(x[0]), B(x[1])}, {}), B(x[2])}, {}) -
                             M(m0, {B(x[0]), M(m0, {B(x[1]), B(x[2])}, {})}, {});
                CHECK(lhs == rhs);
            }
            for (int x : {0, 1})
                for (int y1 : {2, 3})
                    for (int y2 : {2, 3}) {
                        Vector rhs = M(m2, {}, {M(m1, {B(x)}, {B(y1)}), B(y2)}) -
                                     M(m2, {}, {M(m1, {B(x)}, {B(y2)}), B(y1)}) -
                                     2 * M(m0, {B(x), M(m2, {}, {B(y1), B(y2)})}, {});
                        CHECK(br.value(Args{{x}, {y1, y2}}) == rhs);
                    }
        }
    }

    TEST_CASE("Hochschild differential")
    {
        auto s = make_space({"p", "q", "r"}, {});
        MultiMap m = triangular(s);
        MultiMap id(s);
        for (int i = 0; i < 3; ++i)
            id.add(Args{{i}, {}}, i, 1);
        // m(x0,x1) - m(x0,x1) + m(x0,x1)
        CHECK(hochschild_differential(m, id) == m);
        std::mt19937 rng(6);
        for (int n = 1; n <= 2; ++n) {
            MultiMap phi = testing::random_map(rng, s, n, 0, false);
            MultiMap d = hochschild_differential(m, phi);
            CHECK(hochschild_differential(m, d).is_zero());
            CHECK(d == -1 * gerstenhaber_bracket(m, phi));
        }
        auto bad = make_space({"p"}, {"a"});
        CHECK_THROWS_AS(hochschild_differential(MultiMap(bad), MultiMap(bad)), std::invalid_argument);
    }

    TEST_CASE("Chevalley-Eilenberg differential on sl2")
    {
        auto s = make_space({"h", "e", "f"}, {});
        MultiMap b = sl2(s);
        CHECK(ce_differential(b, b).is_zero());
        std::mt19937 rng(7);
        for (int n = 1; n <= 2; ++n) {
            MultiMap phi = testing::random_map(rng, s, n, 0, false);
            MultiMap skew(s);
            for (const auto& [a, v] : phi.entries()) {
                skew.add(a, v);
                if (n == 2)
                    skew.add(Args{{a.x[1], a.x[0]}, {}}, v, -1);
            }
            REQUIRE(is_x_skew(skew));
            MultiMap d = ce_differential(b, skew);
            CHECK(is_x_skew(d));
            CHECK(ce_differential(b, d).is_zero());
        }
    }

    TEST_CASE("pointwise CE differential matches the finite one")
    {
        auto s = make_space({"h", "e", "f"}, {});
        MultiMap b = sl2(s);
        std::mt19937 rng(8);
        MultiMap raw = testing::random_map(rng, s, 2, 0, false);
        MultiMap phi(s);
        for (const auto& [a, v] : raw.entries()) {
            phi.add(a, v);
            phi.add(Args{{a.x[1], a.x[0]}, {}}, v, -1);
        }
        CeOracle o{[&](int u, int v) -> std::optional<Vector> { return ev(b, {u, v}); },
                   [&](int u, const Vector& v) -> std::optional<Vector> {
                       return multimap_eval(b, {Vector::basis(u), v}, {});
                   },
                   [&](const std::vector<int>& t) -> std::optional<Vector> { return phi.value(Args{t, {}}); }};
        MultiMap d = ce_differential(b, phi);
        for (const auto& t : testing::tuples({0, 1, 2}, 3))
            CHECK(*ce_differential_at(o, t) == d.value(Args{t, {}}));
        auto o2 = o;
        o2.bracket = [](int, int) -> std::optional<Vector> { return std::nullopt; };
        CHECK_FALSE(ce_differential_at(o2, {0, 1, 2}));
    }
}
