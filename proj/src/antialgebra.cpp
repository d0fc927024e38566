#include "antialg/antialgebra.hpp"

#include "antialg/gerstenhaber.hpp"

#include <sstream>
#include <stdexcept>

namespace al {

void ProductTable::set(int a, int b, const Vector& v)
{
    if (a < 0 || b < 0 || a >= space_->dim() || b >= space_->dim())
        throw std::out_of_range("product table index out of range");
    explicit_[{a, b}] = v;
    unknown_.erase({std::min(a, b), std::max(a, b)});
}

void ProductTable::mark_unknown(int a, int b)
{
    explicit_.erase({a, b});
    explicit_.erase({b, a});
    unknown_.insert({std::min(a, b), std::max(a, b)});
}

std::optional<Vector> ProductTable::product(int a, int b) const
{
    if (is_unknown(a, b))
        return std::nullopt;
    auto it = explicit_.find({a, b});
    if (it != explicit_.end())
        return it->second;
    it = explicit_.find({b, a});
    if (it != explicit_.end())
        return sign_of_power(space_->parity(a) * space_->parity(b)) * it->second;
    return Vector{};
}

std::optional<Vector> ProductTable::product(const Vector& u, const Vector& v) const
{
    Vector r;
    for (const auto& [a, ca] : u)
        for (const auto& [b, cb] : v) {
            auto w = product(a, b);
            if (!w)
                return std::nullopt;
            r.add(*w, ca * cb);
        }
    return r;
}

MultiMap Antialgebra::m() const
{
    const GradedSpace& s = space();
    MultiMap r(space_ptr());
    for (int a = 0; a < s.dim(); ++a)
        for (int b = 0; b < s.dim(); ++b) {
            auto v = mul(a, b);
            if (!v)
                continue;
            int pa = s.parity(a), pb = s.parity(b);
            if (pa == 0 && pb == 0)
                r.add(Args{{a, b}, {}}, *v, Rational(1, 2));
            else if (pa == 0 && pb == 1)
                r.add(Args{{a}, {b}}, *v);
            else if (pa == 1 && pb == 1)
                r.add(Args{{}, {a, b}}, *v);
        }
    return r;
}

void Module::set(int a, int b, const Vector& v)
{
    if (a < 0 || b < 0 || a >= base_->dim() || b >= space_->dim())
        throw std::out_of_range("module action index out of range");
    unknown_.erase({a, b});
    if (v.is_zero())
        act_.erase({a, b});
    else
        act_[{a, b}] = v;
}

std::optional<Vector> Module::act(int a, int b) const
{
    if (is_unknown(a, b))
        return std::nullopt;
    auto it = act_.find({a, b});
    return it == act_.end() ? Vector{} : it->second;
}

std::optional<Vector> Module::act(const Vector& a, const Vector& b) const
{
    Vector r;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            auto w = act(i, j);
            if (!w)
                return std::nullopt;
            r.add(*w, ci * cj);
        }
    return r;
}

namespace {

std::vector<std::string> suffixed(const std::vector<std::string>& v, const std::string& suf)
{
    std::vector<std::string> r;
    for (const auto& l : v)
        r.push_back(l + suf);
    return r;
}

Vector remap(const Vector& v, const std::vector<int>& to)
{
    Vector r;
    for (const auto& [g, c] : v)
        r.add(to.at(g), c);
    return r;
}

} // namespace

Module adjoint_module(const Antialgebra& a)
{
    const GradedSpace& s = a.space();
    Module m(a.space_ptr(), make_space(suffixed(s.even_labels(), "'"), suffixed(s.odd_labels(), "'")),
             a.name().empty() ? "adjoint" : a.name() + "'");
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) {
            auto v = a.mul(i, j);
            if (v)
                m.set(i, j, *v);
            else
                m.mark_unknown(i, j);
        }
    return m;
}

Module trivial_module(const Antialgebra& a)
{
    return Module(a.space_ptr(), make_space({"1"}, {}), "trivial");
}

Module dual_module(const Module& m)
{
    const GradedSpace& s = m.space();
    const GradedSpace& base = m.base();
    Module d(m.base_ptr(), make_space(suffixed(s.even_labels(), "*"), suffixed(s.odd_labels(), "*")),
             m.name() + "*");
    std::map<std::pair<int, int>, Vector> acc;
    for (const auto& [key, v] : m.entries()) {
        auto [a, b] = key;
        for (const auto& [c, coef] : v)
            acc[{a, c}].add(b, coef * sign_of_power(s.parity(c) * base.parity(a)));
    }
    for (const auto& [key, v] : acc)
        d.set(key.first, key.second, v);
    return d;
}

Module restrict_module(const Module& m, SpacePtr base, const std::vector<int>& base_keep, SpacePtr space,
                       const std::vector<int>& keep)
{
    if (static_cast<int>(base_keep.size()) != base->dim() || static_cast<int>(keep.size()) != space->dim())
        throw std::invalid_argument("restrict_module: index lists do not match the target spaces");
    std::map<int, int> to;
    for (std::size_t i = 0; i < keep.size(); ++i)
        to[keep[i]] = static_cast<int>(i);
    Module r(std::move(base), std::move(space), m.name());
    for (std::size_t a = 0; a < base_keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) {
            auto v = m.act(base_keep[a], keep[b]);
            bool inside = v.has_value();
            Vector w;
            if (v)
                for (const auto& [g, c] : *v) {
                    auto it = to.find(g);
                    if (it == to.end()) {
                        inside = false;
                        break;
                    }
                    w.add(it->second, c);
                }
            if (inside)
                r.set(static_cast<int>(a), static_cast<int>(b), w);
            else
                r.mark_unknown(static_cast<int>(a), static_cast<int>(b));
        }
    return r;
}

std::string format_report(const GradedSpace& s, const AxiomReport& r)
{
    std::ostringstream os;
    for (const auto& v : r.violations) {
        os << v.identity << "(";
        for (std::size_t i = 0; i < v.args.size(); ++i)
            os << (i ? "," : "") << s.label(v.args[i]);
        os << "): residual " << format_vector(s, v.residual) << "\n";
    }
    return os.str();
}

namespace {

class Checker
{
public:
    Checker(const Antialgebra& a, AxiomReport& r) : a_(a), r_(r) {}

    std::optional<Vector> mul(const Vector& u, const Vector& v) const { return a_.mul(u, v); }
    std::optional<Vector> mul(int i, const Vector& v) const { return a_.mul(Vector::basis(i), v); }
    std::optional<Vector> mul(const Vector& u, int j) const { return a_.mul(u, Vector::basis(j)); }
    std::optional<Vector> mul(int i, int j) const { return a_.mul(i, j); }

    void record(const char* name, std::vector<int> args, const std::optional<Vector>& residual)
    {
        if (!residual) {
            ++r_.skipped;
            return;
        }
        ++r_.checked;
        if (!residual->is_zero())
            r_.violations.push_back({name, std::move(args), *residual});
    }

private:
    const Antialgebra& a_;
    AxiomReport& r_;
};

template <class... Opt>
bool all_known(const Opt&... o)
{
    return (o.has_value() && ...);
}

void check_table_shape(const Antialgebra& a, Checker& ck)
{
    const GradedSpace& s = a.space();
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) {
            auto u = a.mul(i, j);
            if (!u)
                continue;
            int want = (s.parity(i) + s.parity(j)) % 2;
            Vector bad;
            for (const auto& [g, c] : *u)
                if (s.parity(g) != want)
                    bad.add(g, c);
            ck.record("Parity", {i, j}, bad);
            if (i < j) {
                auto w = a.mul(j, i);
                if (!w)
                    continue;
                ck.record("SkewP", {i, j}, *u - sign_of_power(s.parity(i) * s.parity(j)) * *w);
            }
        }
}

} // namespace

AxiomReport check_axioms(const Antialgebra& a)
{
    AxiomReport r;
    Checker ck(a, r);
    check_table_shape(a, ck);
    const GradedSpace& s = a.space();
    auto E = s.basis(0), O = s.basis(1);
    for (int x1 : E)
        for (int x2 : E) {
            auto x12 = ck.mul(x1, x2);
            for (int x3 : E) {
                auto x23 = ck.mul(x2, x3);
                std::optional<Vector> res;
                if (all_known(x12, x23)) {
                    auto l = ck.mul(x1, *x23), rr = ck.mul(*x12, x3);
                    if (all_known(l, rr))
                        res = *l - *rr;
                }
                ck.record("AssCommT", {x1, x2, x3}, res);
            }
            for (int y : O) {
                auto x2y = ck.mul(x2, y);
                std::optional<Vector> res;
                if (all_known(x12, x2y)) {
                    auto l = ck.mul(x1, *x2y), rr = ck.mul(*x12, y);
                    if (all_known(l, rr))
                        res = *l - Rational(1, 2) * *rr;
                }
                ck.record("CacT", {x1, x2, y}, res);
            }
        }
    for (int x : E)
        for (int y1 : O)
            for (int y2 : O) {
                auto y12 = ck.mul(y1, y2), xy1 = ck.mul(x, y1), xy2 = ck.mul(x, y2);
                std::optional<Vector> res;
                if (all_known(y12, xy1, xy2)) {
                    auto l = ck.mul(x, *y12), r1 = ck.mul(*xy1, y2), r2 = ck.mul(y1, *xy2);
                    if (all_known(l, r1, r2))
                        res = *l - *r1 - *r2;
                }
                ck.record("ICommT", {x, y1, y2}, res);
            }
    for (int y1 : O)
        for (int y2 : O)
            for (int y3 : O) {
                auto y23 = ck.mul(y2, y3), y31 = ck.mul(y3, y1), y12 = ck.mul(y1, y2);
                std::optional<Vector> res;
                if (all_known(y23, y31, y12)) {
                    auto t1 = ck.mul(y1, *y23), t2 = ck.mul(y2, *y31), t3 = ck.mul(y3, *y12);
                    if (all_known(t1, t2, t3))
                        res = *t1 + *t2 + *t3;
                }
                ck.record("Jack", {y1, y2, y3}, res);
            }
    return r;
}

AxiomReport check_axioms_v2(const Antialgebra& a)
{
    AxiomReport r;
    Checker ck(a, r);
    check_table_shape(a, ck);
    const GradedSpace& s = a.space();
    auto E = s.basis(0), O = s.basis(1);
    for (int x1 : E)
        for (int x2 : E) {
            auto x12 = ck.mul(x1, x2);
            for (int x3 : E) {
                auto x23 = ck.mul(x2, x3);
                std::optional<Vector> res;
                if (all_known(x12, x23)) {
                    auto l = ck.mul(x1, *x23), rr = ck.mul(*x12, x3);
                    if (all_known(l, rr))
                        res = *l - *rr;
                }
                ck.record("EvenAssociative", {x1, x2, x3}, res);
            }
            for (int b = 0; b < s.dim(); ++b) {
                auto x2b = ck.mul(x2, b), x1b = ck.mul(x1, b);
                std::optional<Vector> res;
                if (all_known(x2b, x1b)) {
                    auto l = ck.mul(x1, *x2b), rr = ck.mul(x2, *x1b);
                    if (all_known(l, rr))
                        res = *l - *rr;
                }
                ck.record("LeftCommute", {x1, x2, b}, res);
            }
        }
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j)
            for (int y : O) {
                auto ij = ck.mul(i, j), iy = ck.mul(i, y), jy = ck.mul(j, y);
                std::optional<Vector> res;
                if (all_known(ij, iy, jy)) {
                    auto l = ck.mul(*ij, y), r1 = ck.mul(*iy, j), r2 = ck.mul(i, *jy);
                    if (all_known(l, r1, r2))
                        res = *l - *r1 - sign_of_power(s.parity(i)) * *r2;
                }
                ck.record("OddDerivation", {i, j, y}, res);
            }
    return r;
}

namespace {

// m on vectors of definite parity, in the argument order of the model.
std::optional<Vector> m_of(const Antialgebra& a, const Vector& u, const Vector& v, bool both_even)
{
    auto w = a.mul(u, v);
    if (w && both_even)
        *w *= Rational(1, 2);
    return w;
}

} // namespace

ZeroSquareReport zero_square_check(const Antialgebra& a)
{
    ZeroSquareReport rep;
    const GradedSpace& s = a.space();
    MultiMap m = a.m();
    MultiMap half = alt(gerstenhaber_bracket(m, m));
    half *= Rational(1, 2);
    auto E = s.basis(0), O = s.basis(1);
    auto B = [](int g) { return Vector::basis(g); };

    auto handle = [&](Args args, std::optional<Vector> expected) {
        if (!expected) {
            ++rep.skipped;
            return;
        }
        ++rep.checked;
        Vector got = half.value(args);
        std::vector<int> flat = args.x;
        flat.insert(flat.end(), args.y.begin(), args.y.end());
        if (!got.is_zero())
            rep.nonzero.push_back({"[m,m]", flat, Rational(2) * got});
        if (got != *expected)
            rep.expansion_mismatch.push_back({"expansion", flat, got - *expected});
    };

    auto diff = [](const std::optional<Vector>& l, const std::optional<Vector>& r, Rational cl = 1,
                   Rational cr = 1) -> std::optional<Vector> {
        if (!l || !r)
            return std::nullopt;
        return cl * *l - cr * *r;
    };

    for (int x1 : E)
        for (int x2 : E) {
            auto x12 = m_of(a, B(x1), B(x2), true);
            for (int x3 : E) {
                auto x23 = m_of(a, B(x2), B(x3), true);
                std::optional<Vector> l, r;
                if (x12)
                    l = m_of(a, *x12, B(x3), true);
                if (x23)
                    r = m_of(a, B(x1), *x23, true);
                handle(Args{{x1, x2, x3}, {}}, diff(l, r));
            }
            for (int y : O) {
                auto x2y = m_of(a, B(x2), B(y), false);
                std::optional<Vector> l, r;
                if (x12)
                    l = m_of(a, *x12, B(y), false);
                if (x2y)
                    r = m_of(a, B(x1), *x2y, false);
                handle(Args{{x1, x2}, {y}}, diff(l, r));
            }
        }
    for (int x : E)
        for (std::size_t i = 0; i < O.size(); ++i)
            for (std::size_t j = i + 1; j < O.size(); ++j) {
                int y1 = O[i], y2 = O[j];
                auto xy1 = m_of(a, B(x), B(y1), false), xy2 = m_of(a, B(x), B(y2), false);
                auto y12 = m_of(a, B(y1), B(y2), false);
                std::optional<Vector> t1, t2, t3;
                if (xy1)
                    t1 = m_of(a, *xy1, B(y2), false);
                if (xy2)
                    t2 = m_of(a, *xy2, B(y1), false);
                if (y12)
                    t3 = m_of(a, B(x), *y12, true);
                std::optional<Vector> e;
                if (t1 && t2 && t3)
                    e = Rational(1, 2) * *t1 - Rational(1, 2) * *t2 - *t3;
                handle(Args{{x}, {y1, y2}}, e);
            }
    for (std::size_t i = 0; i < O.size(); ++i)
        for (std::size_t j = i + 1; j < O.size(); ++j)
            for (std::size_t k = j + 1; k < O.size(); ++k) {
                int ys[3] = {O[i], O[j], O[k]};
                std::optional<Vector> e = Vector{};
                for (int c = 0; c < 3 && e; ++c) {
                    auto p = m_of(a, B(ys[c]), B(ys[(c + 1) % 3]), false);
                    std::optional<Vector> t;
                    if (p)
                        t = m_of(a, *p, B(ys[(c + 2) % 3]), false);
                    if (!t)
                        e.reset();
                    else
                        e->add(*t, Rational(1, 3));
                }
                handle(Args{{}, {ys[0], ys[1], ys[2]}}, e);
            }
    return rep;
}

Semidirect semidirect(const Antialgebra& a, const Module& m)
{
    if (!(*m.base_ptr() == a.space()))
        throw std::invalid_argument("semidirect: module is over a different algebra");
    Semidirect r;
    r.sum = direct_sum(a.space(), m.space());
    ProductTable t(r.sum.space);
    const auto& F = r.sum.from_first;
    const auto& S = r.sum.from_second;
    for (const auto& [key, v] : a.table().explicit_entries())
        t.set(F[key.first], F[key.second], remap(v, F));
    for (const auto& key : a.table().unknown_entries())
        t.mark_unknown(F[key.first], F[key.second]);
    for (const auto& [key, v] : m.entries())
        t.set(F[key.first], S[key.second], remap(v, S));
    for (const auto& key : m.unknown_entries())
        t.mark_unknown(F[key.first], S[key.second]);
    r.algebra = Antialgebra(std::move(t), a.name() + " x " + m.name());
    return r;
}

bool table_is_parity_preserving(const ProductTable& t)
{
    const GradedSpace& s = t.space();
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) {
            auto v = t.product(i, j);
            if (!v)
                continue;
            for (const auto& [g, c] : *v)
                if (s.parity(g) != (s.parity(i) + s.parity(j)) % 2)
                    return false;
        }
    return true;
}

} // namespace al
