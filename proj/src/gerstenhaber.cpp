#include "antialg/gerstenhaber.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace al {

namespace {

void require_product_input(const MultiMap& phi, const char* who)
{
    for (const auto& [a, v] : phi.entries()) {
        if (a.p() + a.q() == 0)
            throw std::invalid_argument(std::string(who) + ": map with p+q=0");
        for (const auto& [g, c] : v)
            if (phi.space().parity(g) != a.q() % 2)
                throw std::invalid_argument(std::string(who) + ": map is not parity preserving");
    }
}

int permutation_sign(const std::vector<int>& perm)
{
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                s = -s;
    return s;
}

template <class T>
std::vector<T> splice(const std::vector<T>& outer, std::size_t at, const std::vector<T>& inner)
{
    std::vector<T> r(outer.begin(), outer.begin() + at);
    r.insert(r.end(), inner.begin(), inner.end());
    r.insert(r.end(), outer.begin() + at + 1, outer.end());
    return r;
}

MultiMap product_unchecked(const MultiMap& phi, const MultiMap& psi)
{
    MultiMap res(phi.space_ptr() ? phi.space_ptr() : psi.space_ptr());
    if (phi.is_zero() || psi.is_zero())
        return res;
    const GradedSpace& s = phi.space();
    for (const auto& [a, v] : phi.entries()) {
        const int p = a.p(), q = a.q();
        for (const auto& [o, c] : v) {
            const int g = s.parity(o);
            const int par = map_parity(p, g);
            for (const auto& [b, w] : psi.entries()) {
                const int pp = b.p(), qq = b.q();
                if (g == 0) {
                    if (pp < 1)
                        continue;
                    int lo = q == 0 ? 0 : pp - 1;
                    for (int i = lo; i < pp; ++i) {
                        if (b.x[i] != o)
                            continue;
                        Args r;
                        r.x = splice(b.x, i, a.x);
                        r.y = a.y;
                        r.y.insert(r.y.end(), b.y.begin(), b.y.end());
                        res.add(r, w, c * sign_of_power(static_cast<long long>(i) * par));
                    }
                } else {
                    if (qq < 1)
                        continue;
                    int hi = p > 0 ? 1 : qq;
                    for (int j = 0; j < hi; ++j) {
                        if (b.y[j] != o)
                            continue;
                        Args r;
                        r.x = b.x;
                        r.x.insert(r.x.end(), a.x.begin(), a.x.end());
                        r.y = splice(b.y, j, a.y);
                        res.add(r, w, c * sign_of_power(static_cast<long long>(pp) * par));
                    }
                }
            }
        }
    }
    return res;
}

std::pair<MultiMap, MultiMap> parity_parts(const MultiMap& phi)
{
    std::pair<MultiMap, MultiMap> r{MultiMap(phi.space_ptr()), MultiMap(phi.space_ptr())};
    for (const auto& [a, v] : phi.entries())
        for (const auto& [g, c] : v)
            (map_parity(a.p(), phi.space().parity(g)) == 0 ? r.first : r.second).add(a, g, c);
    return r;
}

} // namespace

MultiMap gerstenhaber_product(const MultiMap& phi, const MultiMap& psi)
{
    require_product_input(phi, "gerstenhaber_product");
    require_product_input(psi, "gerstenhaber_product");
    return product_unchecked(phi, psi);
}

MultiMap gerstenhaber_bracket(const MultiMap& phi, const MultiMap& psi)
{
    require_product_input(phi, "gerstenhaber_bracket");
    require_product_input(psi, "gerstenhaber_bracket");
    auto [a0, a1] = parity_parts(phi);
    auto [b0, b1] = parity_parts(psi);
    const MultiMap* A[2] = {&a0, &a1};
    const MultiMap* B[2] = {&b0, &b1};
    MultiMap res(phi.space_ptr() ? phi.space_ptr() : psi.space_ptr());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (A[i]->is_zero() || B[j]->is_zero())
                continue;
            res += product_unchecked(*A[i], *B[j]);
            res.add(product_unchecked(*B[j], *A[i]), -sign_of_power(i * j));
        }
    return res;
}

MultiMap alt(const MultiMap& phi)
{
    MultiMap res(phi.space_ptr());
    for (const auto& [a, v] : phi.entries()) {
        const int q = a.q();
        if (q < 2) {
            res.add(a, v);
            continue;
        }
        Rational fact = 1;
        for (int i = 2; i <= q; ++i)
            fact *= i;
        std::vector<int> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Args r = a;
            for (int k = 0; k < q; ++k)
                r.y[perm[k]] = a.y[k];
            res.add(r, v, Rational(permutation_sign(perm)) / fact);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return res;
}

AlElement::AlElement(MultiMap m) : m_(std::move(m))
{
    require_product_input(m_, "AlElement");
    if (!is_y_skew(m_))
        throw std::invalid_argument("AlElement: map is not skew in its odd arguments");
}

AlElement al_bracket(const AlElement& a, const AlElement& b)
{
    return AlElement(alt(gerstenhaber_bracket(a.map(), b.map())));
}

namespace {

template <class F>
void for_each_tuple(int base, int len, F&& f)
{
    std::vector<int> t(len, 0);
    if (len > 0 && base == 0)
        return;
    while (true) {
        f(t);
        int k = len - 1;
        for (; k >= 0; --k) {
            if (++t[k] < base)
                break;
            t[k] = 0;
        }
        if (k < 0)
            break;
    }
}

std::vector<Vector> basis_vectors(const std::vector<int>& t)
{
    std::vector<Vector> r;
    for (int g : t)
        r.push_back(Vector::basis(g));
    return r;
}

} // namespace

MultiMap hochschild_differential(const MultiMap& m, const MultiMap& phi)
{
    const GradedSpace& s = m.space();
    if (s.dim1() != 0)
        throw std::invalid_argument("hochschild_differential: space is not purely even");
    for (const auto& [a, v] : m.entries())
        if (a.p() != 2 || a.q() != 0)
            throw std::invalid_argument("hochschild_differential: m is not bilinear");
    MultiMap res(m.space_ptr());
    for (auto [n, q] : phi.blocks()) {
        if (q != 0 || n == 0)
            throw std::invalid_argument("hochschild_differential: cochain must have k >= 1 even arguments");
        MultiMap ph = phi.block(n, 0);
        for_each_tuple(s.dim0(), n + 1, [&](const std::vector<int>& t) {
            auto X = basis_vectors(t);
            Vector val;
            std::vector<Vector> tail(X.begin() + 1, X.end());
            val.add(multimap_eval(m, {X[0], multimap_eval(ph, tail, {})}, {}));
            for (int i = 0; i < n; ++i) {
                std::vector<Vector> args(X.begin(), X.begin() + i);
                args.push_back(multimap_eval(m, {X[i], X[i + 1]}, {}));
                args.insert(args.end(), X.begin() + i + 2, X.end());
                val.add(multimap_eval(ph, args, {}), -sign_of_power(i));
            }
            std::vector<Vector> head(X.begin(), X.end() - 1);
            val.add(multimap_eval(m, {multimap_eval(ph, head, {}), X[n]}, {}), sign_of_power(n - 1));
            res.add(Args{t, {}}, val);
        });
    }
    return res;
}

std::optional<Vector> ce_differential_at(const CeOracle& o, const std::vector<int>& args)
{
    const int n = static_cast<int>(args.size());
    Vector out;
    for (int i = 0; i < n; ++i) {
        std::vector<int> rest;
        for (int k = 0; k < n; ++k)
            if (k != i)
                rest.push_back(args[k]);
        auto v = o.phi(rest);
        if (!v)
            return std::nullopt;
        if (v->is_zero())
            continue;
        auto w = o.act(args[i], *v);
        if (!w)
            return std::nullopt;
        out.add(*w, sign_of_power(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto br = o.bracket(args[i], args[j]);
            if (!br)
                return std::nullopt;
            for (const auto& [g, c] : *br) {
                std::vector<int> rest{g};
                for (int k = 0; k < n; ++k)
                    if (k != i && k != j)
                        rest.push_back(args[k]);
                auto v = o.phi(rest);
                if (!v)
                    return std::nullopt;
                out.add(*v, c * sign_of_power(i + j));
            }
        }
    return out;
}

bool is_x_skew(const MultiMap& phi)
{
    for (const auto& [a, v] : phi.entries())
        for (std::size_t i = 0; i + 1 < a.x.size(); ++i) {
            if (a.x[i] == a.x[i + 1])
                return false;
            Args b = a;
            std::swap(b.x[i], b.x[i + 1]);
            if (phi.value(b) != Rational(-1) * v)
                return false;
        }
    return true;
}

MultiMap ce_differential(const MultiMap& bracket, const MultiMap& phi)
{
    const GradedSpace& s = bracket.space();
    if (s.dim1() != 0)
        throw std::invalid_argument("ce_differential: space is not purely even");
    for (const auto& [a, v] : bracket.entries())
        if (a.p() != 2 || a.q() != 0)
            throw std::invalid_argument("ce_differential: bracket is not bilinear");
    if (!is_x_skew(bracket))
        throw std::invalid_argument("ce_differential: bracket is not skew");
    if (!is_x_skew(phi))
        throw std::invalid_argument("ce_differential: cochain is not skew");
    CeOracle o;
    o.bracket = [&](int a, int b) { return std::optional<Vector>(bracket.value(Args{{a, b}, {}})); };
    o.act = [&](int a, const Vector& v) {
        return std::optional<Vector>(multimap_eval(bracket, {Vector::basis(a), v}, {}));
    };
    MultiMap res(bracket.space_ptr());
    for (auto [n, q] : phi.blocks()) {
        if (q != 0)
            throw std::invalid_argument("ce_differential: cochain has odd arguments");
        MultiMap ph = phi.block(n, 0);
        o.phi = [&](const std::vector<int>& t) { return std::optional<Vector>(ph.value(Args{t, {}})); };
        for_each_tuple(s.dim0(), n + 1, [&](const std::vector<int>& t) {
            res.add(Args{t, {}}, *ce_differential_at(o, t));
        });
    }
    return res;
}

} // namespace al
