#include "antialg/cohomology.hpp"

#include "antialg/gerstenhaber.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace al {

namespace {

template <class F>
void for_each_product(const std::vector<int>& base, int len, F&& f)
{
    std::vector<int> idx(len, 0), t(len);
    if (len > 0 && base.empty())
        return;
    while (true) {
        for (int i = 0; i < len; ++i)
            t[i] = base[idx[i]];
        f(t);
        int k = len - 1;
        for (; k >= 0; --k) {
            if (++idx[k] < static_cast<int>(base.size()))
                break;
            idx[k] = 0;
        }
        if (k < 0)
            break;
    }
}

template <class F>
void for_each_combination(const std::vector<int>& base, int len, F&& f)
{
    int n = static_cast<int>(base.size());
    if (len > n)
        return;
    std::vector<int> idx(len), t(len);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        for (int i = 0; i < len; ++i)
            t[i] = base[idx[i]];
        f(t);
        int k = len - 1;
        while (k >= 0 && idx[k] == n - len + k)
            --k;
        if (k < 0)
            break;
        ++idx[k];
        for (int i = k + 1; i < len; ++i)
            idx[i] = idx[i - 1] + 1;
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

std::string format_args(const GradedSpace& s, const Args& a)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.x.size(); ++i)
        os << (i ? "," : "") << s.label(a.x[i]);
    os << ";";
    for (std::size_t i = 0; i < a.y.size(); ++i)
        os << (i ? "," : "") << s.label(a.y[i]);
    os << ")";
    return os.str();
}

std::vector<int> mapped(const std::vector<int>& idx, const std::vector<int>& to)
{
    std::vector<int> r;
    for (int i : idx)
        r.push_back(to[i]);
    return r;
}

} // namespace

CochainContext::CochainContext(const Antialgebra& a, const Module& m) : base_(a), module_(m), sd_(semidirect(a, m))
{
    ea_ = mapped(a.space().basis(0), sd_.sum.from_first);
    oa_ = mapped(a.space().basis(1), sd_.sum.from_first);
    eb_ = mapped(m.space().basis(0), sd_.sum.from_second);
    ob_ = mapped(m.space().basis(1), sd_.sum.from_second);
}

bool CochainContext::trivial_action() const
{
    return module_.entries().empty() && module_.unknown_entries().empty();
}

CochainSpace::CochainSpace(const CochainContext& ctx, int k)
    : CochainSpace(ctx, k, ctx.full_window(), ctx.module_even(), ctx.module_odd())
{
}

CochainSpace::CochainSpace(const CochainContext&, int k, Window w, std::vector<int> out_even,
                           std::vector<int> out_odd)
    : k_(k), w_(std::move(w))
{
    if (k < 1)
        throw std::invalid_argument("cochain degree must be at least 1");
    std::sort(w_.even.begin(), w_.even.end());
    std::sort(w_.odd.begin(), w_.odd.end());
    for (int p = k; p >= 0; --p) {
        int q = k - p;
        const auto& outs = q % 2 == 0 ? out_even : out_odd;
        for_each_product(w_.even, p, [&](const std::vector<int>& xs) {
            for_each_combination(w_.odd, q, [&](const std::vector<int>& ys) {
                for (int o : outs) {
                    index_.emplace(CochainKey{Args{xs, ys}, o}, static_cast<int>(keys_.size()));
                    keys_.push_back(CochainKey{Args{xs, ys}, o});
                }
            });
        });
    }
}

std::optional<int> CochainSpace::index(const CochainKey& k) const
{
    auto it = index_.find(k);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int CochainSpace::block_dim(int p, int q) const
{
    int n = 0;
    for (const auto& k : keys_)
        if (k.args.p() == p && k.args.q() == q)
            ++n;
    return n;
}

Vector CochainSpace::coords(const Cochain& c) const
{
    Vector r;
    for (const auto& [a, v] : c)
        for (const auto& [g, x] : v) {
            auto i = index({a, g});
            if (!i)
                throw std::invalid_argument("cochain entry outside the cochain space");
            r.add(*i, x);
        }
    return r;
}

Cochain CochainSpace::cochain(const Vector& coords) const
{
    Cochain c;
    for (const auto& [i, x] : coords)
        c[keys_.at(i).args].add(keys_[i].out, x);
    return c;
}

Cochain CochainSpace::basic(int i) const
{
    Cochain c;
    c[keys_.at(i).args].add(keys_[i].out, 1);
    return c;
}

Cochain canonical_part(const MultiMap& phi)
{
    Cochain c;
    for (const auto& [a, v] : phi.entries())
        if (std::adjacent_find(a.y.begin(), a.y.end(), std::greater_equal<int>()) == a.y.end())
            c[a] = v;
    return c;
}

MultiMap skew_extend(const Cochain& c, const SpacePtr& space)
{
    MultiMap m(space);
    for (const auto& [a, v] : c) {
        std::vector<int> perm(a.q());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Args r = a;
            for (int k = 0; k < a.q(); ++k)
                r.y[k] = a.y[perm[k]];
            m.add(r, v, permutation_sign(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return m;
}

namespace {

struct Unknown
{
};

Vector need(const std::optional<Vector>& v)
{
    if (!v)
        throw Unknown{};
    return *v;
}

Vector basis_vec(int g) { return Vector::basis(g); }

std::vector<Vector> basis_vecs(const std::vector<int>& t)
{
    std::vector<Vector> r;
    for (int g : t)
        r.push_back(Vector::basis(g));
    return r;
}

} // namespace

std::optional<Vector> delta_at(const CochainContext& ctx, const MultiMap& phi, const Args& target, unsigned parts)
{
    const int P = target.p(), Q = target.q();
    const auto X = basis_vecs(target.x);
    const auto Y = basis_vecs(target.y);
    auto prod = [&](const Vector& u, const Vector& v) { return need(ctx.mul(u, v)); };
    Vector out;
    try {
        if ((parts & D10) && P >= 1) {
            const int p = P - 1, q = Q;
            MultiMap ph = phi.block(p, q);
            if (!ph.is_zero()) {
                std::vector<Vector> tail(X.begin() + 1, X.end());
                Vector v = multimap_eval(ph, tail, Y);
                if (!v.is_zero())
                    out.add(prod(X[0], v), q % 2 == 0 ? Rational(-1, 2) : Rational(-1));
                for (int i = 0; i < p; ++i) {
                    std::vector<Vector> args(X.begin(), X.begin() + i);
                    args.push_back(Rational(1, 2) * prod(X[i], X[i + 1]));
                    args.insert(args.end(), X.begin() + i + 2, X.end());
                    out.add(multimap_eval(ph, args, Y), sign_of_power(i));
                }
                std::vector<Vector> head(X.begin(), X.begin() + p);
                if (q == 0) {
                    Vector w = multimap_eval(ph, head, {});
                    if (!w.is_zero())
                        out.add(prod(w, X[p]), Rational(sign_of_power(p), 2));
                } else {
                    for (int j = 0; j < q; ++j) {
                        std::vector<Vector> ys{prod(X[p], Y[j])};
                        for (int l = 0; l < q; ++l)
                            if (l != j)
                                ys.push_back(Y[l]);
                        out.add(multimap_eval(ph, head, ys), Rational(sign_of_power(p + j), q));
                    }
                }
            }
        }
        if ((parts & D01) && Q >= 1) {
            const int p = P, q = Q - 1;
            MultiMap ph = phi.block(p, q);
            if (!ph.is_zero()) {
                Rational pref = (p == 0 && q % 2 == 1) ? Rational(2, q + 1) : Rational(1, q + 1);
                for (int j = 0; j <= q; ++j) {
                    std::vector<Vector> ys;
                    for (int l = 0; l <= q; ++l)
                        if (l != j)
                            ys.push_back(Y[l]);
                    Vector v = multimap_eval(ph, X, ys);
                    if (!v.is_zero())
                        out.add(prod(v, Y[j]), pref * sign_of_power(p + j));
                }
            }
        }
        if ((parts & DM12) && Q >= 2) {
            const int p = P + 1, q = Q - 2;
            MultiMap ph = phi.block(p, q);
            if (!ph.is_zero()) {
                Rational pref(2, (q + 1) * (q + 2));
                for (int i = 0; i < Q; ++i)
                    for (int j = i + 1; j < Q; ++j) {
                        std::vector<Vector> xs = X;
                        xs.push_back(prod(Y[i], Y[j]));
                        std::vector<Vector> ys;
                        for (int l = 0; l < Q; ++l)
                            if (l != i && l != j)
                                ys.push_back(Y[l]);
                        out.add(multimap_eval(ph, xs, ys), pref * sign_of_power(p + i + j));
                    }
            }
        }
    } catch (const Unknown&) {
        return std::nullopt;
    }
    return out;
}

namespace {

void require_cochain(const CochainContext& ctx, const MultiMap& phi)
{
    std::set<int> ea(ctx.algebra_even().begin(), ctx.algebra_even().end());
    std::set<int> oa(ctx.algebra_odd().begin(), ctx.algebra_odd().end());
    std::set<int> b(ctx.module_even().begin(), ctx.module_even().end());
    b.insert(ctx.module_odd().begin(), ctx.module_odd().end());
    for (const auto& [a, v] : phi.entries()) {
        if (a.p() + a.q() == 0)
            throw std::invalid_argument("cochain of degree 0");
        for (int x : a.x)
            if (!ea.count(x))
                throw std::invalid_argument("cochain argument outside the even part of the algebra");
        for (int y : a.y)
            if (!oa.count(y))
                throw std::invalid_argument("cochain argument outside the odd part of the algebra");
        for (const auto& [g, c] : v)
            if (!b.count(g))
                throw std::invalid_argument("cochain value outside the module");
    }
    if (!is_parity_preserving(phi))
        throw std::invalid_argument("cochain is not parity preserving");
    if (!is_y_skew(phi))
        throw std::invalid_argument("cochain is not skew in its odd arguments");
}

} // namespace

MultiMap apply_delta(const CochainContext& ctx, const MultiMap& phi, unsigned parts)
{
    require_cochain(ctx, phi);
    std::set<int> degrees;
    for (auto [p, q] : phi.blocks())
        degrees.insert(p + q);
    Cochain res;
    for (int k : degrees) {
        CochainSpace target(ctx, k + 1);
        std::set<Args> done;
        for (int i = 0; i < target.dim(); ++i) {
            const Args& t = target.key(i).args;
            if (!done.insert(t).second)
                continue;
            auto v = delta_at(ctx, phi, t, parts);
            if (!v)
                throw std::runtime_error("apply_delta: product outside the structure");
            if (!v->is_zero())
                res[t].add(*v);
        }
    }
    return skew_extend(res, ctx.space_ptr());
}

namespace {

struct Pre
{
    int u, v;
    Rational c;
};

class Expander
{
public:
    Expander(const CochainContext& ctx, const Window& w) : ctx_(ctx)
    {
        const int n = ctx.space().dim();
        in_even_.assign(n, false);
        in_odd_.assign(n, false);
        for (int g : w.even)
            in_even_[g] = true;
        for (int g : w.odd)
            in_odd_[g] = true;
        auto known = [&](int a, int b) {
            auto v = ctx.mul(a, b);
            if (!v)
                throw std::runtime_error("window products leave the materialized structure");
            return *v;
        };
        for (int u : w.even)
            for (int v : w.even)
                for (const auto& [g, c] : known(u, v))
                    even_pre_[g].push_back({u, v, c});
        for (int x : w.even)
            for (int y : w.odd)
                for (const auto& [g, c] : known(x, y))
                    mixed_pre_[g].push_back({x, y, c});
        for (int u : w.odd)
            for (int v : w.odd)
                if (u < v)
                    for (const auto& [g, c] : known(u, v))
                        odd_pre_[g].push_back({u, v, c});
        evens_ = w.even;
        odds_ = w.odd;
        std::sort(evens_.begin(), evens_.end());
        std::sort(odds_.begin(), odds_.end());
    }

    std::optional<Cochain> apply(const Cochain& phi, unsigned parts) const
    {
        Cochain res;
        try {
            for (const auto& [a, v] : phi)
                for (const auto& [o, c] : v)
                    expand(a, o, c, parts, res);
        } catch (const Unknown&) {
            return std::nullopt;
        }
        for (auto it = res.begin(); it != res.end();)
            it = it->second.is_zero() ? res.erase(it) : std::next(it);
        return res;
    }

private:
    const std::vector<Pre>& pre(const std::map<int, std::vector<Pre>>& m, int g) const
    {
        static const std::vector<Pre> none;
        auto it = m.find(g);
        return it == m.end() ? none : it->second;
    }

    bool xs_in(const std::vector<int>& xs, int skip = -1) const
    {
        for (int i = 0; i < static_cast<int>(xs.size()); ++i)
            if (i != skip && !in_even_[xs[i]])
                return false;
        return true;
    }

    bool ys_in(const std::vector<int>& ys, int skip = -1) const
    {
        for (int i = 0; i < static_cast<int>(ys.size()); ++i)
            if (i != skip && !in_odd_[ys[i]])
                return false;
        return true;
    }

    static std::vector<int> insert_sorted(std::vector<int> ys, int y, int& pos)
    {
        auto it = std::lower_bound(ys.begin(), ys.end(), y);
        pos = static_cast<int>(it - ys.begin());
        ys.insert(it, y);
        return ys;
    }

    void expand(const Args& a, int o, const Rational& coef, unsigned parts, Cochain& res) const
    {
        const int p = a.p(), q = a.q();
        const Vector vo = Vector::basis(o);
        const bool xin = xs_in(a.x), yin = ys_in(a.y);
        if (parts & D10) {
            if (xin && yin)
                for (int x0 : evens_) {
                    Vector v = need(ctx_.mul(x0, o));
                    if (v.is_zero())
                        continue;
                    Args t{{x0}, a.y};
                    t.x.insert(t.x.end(), a.x.begin(), a.x.end());
                    res[t].add(v, coef * (q % 2 == 0 ? Rational(-1, 2) : Rational(-1)));
                }
            if (yin)
                for (int i = 0; i < p; ++i) {
                    if (!xs_in(a.x, i))
                        continue;
                    for (const auto& pr : pre(even_pre_, a.x[i])) {
                        Args t;
                        t.x.assign(a.x.begin(), a.x.begin() + i);
                        t.x.push_back(pr.u);
                        t.x.push_back(pr.v);
                        t.x.insert(t.x.end(), a.x.begin() + i + 1, a.x.end());
                        t.y = a.y;
                        res[t].add(o, coef * sign_of_power(i) * pr.c / 2);
                    }
                }
            if (q == 0) {
                if (xin)
                    for (int xp : evens_) {
                        Vector v = need(ctx_.mul(o, xp));
                        if (v.is_zero())
                            continue;
                        Args t{a.x, {}};
                        t.x.push_back(xp);
                        res[t].add(v, coef * Rational(sign_of_power(p), 2));
                    }
            } else if (xin) {
                for (int k = 0; k < q; ++k) {
                    if (!ys_in(a.y, k))
                        continue;
                    std::vector<int> rest;
                    for (int l = 0; l < q; ++l)
                        if (l != k)
                            rest.push_back(a.y[l]);
                    for (const auto& pr : pre(mixed_pre_, a.y[k])) {
                        if (std::binary_search(rest.begin(), rest.end(), pr.v))
                            continue;
                        int j;
                        Args t{a.x, insert_sorted(rest, pr.v, j)};
                        t.x.push_back(pr.u);
                        res[t].add(o, coef * pr.c * sign_of_power(p + j + k) / q);
                    }
                }
            }
        }
        if ((parts & D01) && xin && yin) {
            Rational pref = (p == 0 && q % 2 == 1) ? Rational(2, q + 1) : Rational(1, q + 1);
            for (int y : odds_) {
                if (std::binary_search(a.y.begin(), a.y.end(), y))
                    continue;
                Vector v = need(ctx_.mul(o, y));
                if (v.is_zero())
                    continue;
                int j;
                Args t{a.x, insert_sorted(a.y, y, j)};
                res[t].add(v, coef * pref * sign_of_power(p + j));
            }
        }
        if ((parts & DM12) && p >= 1 && yin && xs_in(a.x, p - 1)) {
            Rational pref(2, (q + 1) * (q + 2));
            for (const auto& pr : pre(odd_pre_, a.x[p - 1])) {
                if (std::binary_search(a.y.begin(), a.y.end(), pr.u) ||
                    std::binary_search(a.y.begin(), a.y.end(), pr.v))
                    continue;
                int i, j;
                std::vector<int> ty = insert_sorted(a.y, pr.u, i);
                ty = insert_sorted(ty, pr.v, j);
                Args t{std::vector<int>(a.x.begin(), a.x.end() - 1), ty};
                res[t].add(o, coef * pref * pr.c * sign_of_power(p + i + j));
            }
        }
        (void)vo;
    }

    const CochainContext& ctx_;
    std::vector<bool> in_even_, in_odd_;
    std::vector<int> evens_, odds_;
    std::map<int, std::vector<Pre>> even_pre_, mixed_pre_, odd_pre_;
};

} // namespace

std::optional<Cochain> delta_expand(const CochainContext& ctx, const Cochain& phi, unsigned parts, const Window& w)
{
    return Expander(ctx, w).apply(phi, parts);
}

MultiMap ad_m_alt(const CochainContext& ctx, const MultiMap& phi)
{
    return alt(gerstenhaber_bracket(ctx.algebra().m(), phi));
}

Matrix DifferentialMatrix::total() const
{
    Matrix r = d10;
    for (int i = 0; i < r.row_count(); ++i) {
        r.rows[i].add(d01.rows[i]);
        r.rows[i].add(dm12.rows[i]);
    }
    return r;
}

DifferentialMatrix build_differential(const CochainContext& ctx, std::shared_ptr<const CochainSpace> source,
                                      std::shared_ptr<const CochainSpace> target)
{
    if (target->degree() != source->degree() + 1)
        throw std::invalid_argument("build_differential: degrees do not match");
    Expander ex(ctx, target->window());
    DifferentialMatrix d{source, target, Matrix(target->dim()), Matrix(target->dim()), Matrix(target->dim())};
    Matrix* comp[3] = {&d.d10, &d.d01, &d.dm12};
    const unsigned part[3] = {D10, D01, DM12};
    for (int c = 0; c < 3; ++c)
        comp[c]->rows.resize(source->dim());
    for (int j = 0; j < source->dim(); ++j) {
        Cochain e = source->basic(j);
        for (int c = 0; c < 3; ++c) {
            auto img = ex.apply(e, part[c]);
            if (!img)
                throw std::runtime_error("differential needs a product outside the materialized window");
            for (const auto& [t, v] : *img)
                for (const auto& [g, x] : v)
                    if (auto i = target->index({t, g}))
                        comp[c]->rows[j].add(*i, x);
        }
    }
    for (int c = 0; c < 3; ++c)
        *comp[c] = comp[c]->transpose();
    for (int c = 0; c < 3; ++c)
        comp[c]->cols = source->dim();
    return d;
}

bool ComplexReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CompositeCheck& c) { return c.ok(); });
}

namespace {

const char* const kGroupNames[5] = {"d10.d10", "d10.d01+d01.d10", "d01.d01+d10.d-12+d-12.d10",
                                    "d01.d-12+d-12.d01", "d-12.d-12"};

// Index pairs (outer, inner) over components {d10, d01, d-12}.
const std::vector<std::pair<int, int>> kGroups[5] = {
    {{0, 0}}, {{0, 1}, {1, 0}}, {{1, 1}, {0, 2}, {2, 0}}, {{1, 2}, {2, 1}}, {{2, 2}}};

} // namespace

ComplexReport assemble_complex(const CochainContext& ctx, int kmax)
{
    if (kmax < 1)
        throw std::invalid_argument("kmax must be at least 1");
    ComplexReport rep;
    std::vector<std::shared_ptr<const CochainSpace>> spaces;
    for (int k = 1; k <= kmax + 1; ++k)
        spaces.push_back(std::make_shared<const CochainSpace>(ctx, k));
    for (int k = 1; k <= kmax; ++k)
        rep.matrices.push_back(build_differential(ctx, spaces[k - 1], spaces[k]));
    const bool trivial = ctx.trivial_action();
    for (int k = 1; k < kmax; ++k) {
        const auto& d1 = rep.matrices[k - 1];
        const auto& d2 = rep.matrices[k];
        const Matrix* A[3] = {&d2.d10, &d2.d01, &d2.dm12};
        const Matrix* B[3] = {&d1.d10, &d1.d01, &d1.dm12};
        Matrix prod[3][3];
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                prod[a][b] = multiply(*A[a], *B[b]);
        auto check = [&](const std::string& name, const std::vector<std::pair<int, int>>& terms) {
            CompositeCheck c;
            c.name = name + " k=" + std::to_string(k);
            c.columns = d1.source->dim();
            Matrix sum(d1.source->dim());
            sum.rows.resize(d2.target->dim());
            for (auto [a, b] : terms)
                for (int i = 0; i < sum.row_count(); ++i)
                    sum.rows[i].add(prod[a][b].rows[i]);
            for (int i = 0; i < sum.row_count(); ++i)
                for (const auto& [j, x] : sum.rows[i]) {
                    if (c.failures++ == 0) {
                        const auto& src = d1.source->key(j);
                        const auto& tgt = d2.target->key(i);
                        c.witness = format_args(ctx.space(), src.args) + "->" + ctx.space().label(src.out) + " at " +
                                    format_args(ctx.space(), tgt.args) + " component " +
                                    ctx.space().label(tgt.out) + ": " + to_string(x);
                    }
                }
            rep.checks.push_back(c);
        };
        std::vector<std::pair<int, int>> all;
        for (int g = 0; g < 5; ++g)
            all.insert(all.end(), kGroups[g].begin(), kGroups[g].end());
        check("delta^2", all);
        for (int g = 0; g < 5; ++g)
            check(std::string("Delta2Eq[") + std::to_string(g + 1) + "] " + kGroupNames[g], kGroups[g]);
        if (trivial) {
            check("bicomplex d10^2", {{0, 0}});
            check("bicomplex d-12^2", {{2, 2}});
            check("bicomplex [d10,d-12]", {{0, 2}, {2, 0}});
        }
    }
    return rep;
}

std::vector<CompositeCheck> check_delta_squared(const CochainContext& ctx, int k, const Window& source,
                                                const std::vector<int>& out_even, const std::vector<int>& out_odd,
                                                const Window& target)
{
    CochainSpace src(ctx, k, source, out_even, out_odd);
    std::set<int> e1(target.even.begin(), target.even.end()), o1(target.odd.begin(), target.odd.end());
    auto known = [&](int a, int b) {
        auto v = ctx.mul(a, b);
        if (!v)
            throw std::runtime_error("target window products leave the materialized structure");
        return *v;
    };
    for (int u : target.even)
        for (int v : target.even)
            for (const auto& [g, c] : known(u, v))
                e1.insert(g);
    for (int u : target.even)
        for (int y : target.odd)
            for (const auto& [g, c] : known(u, y))
                o1.insert(g);
    for (int u : target.odd)
        for (int v : target.odd)
            for (const auto& [g, c] : known(u, v))
                e1.insert(g);
    Window mid{{e1.begin(), e1.end()}, {o1.begin(), o1.end()}};
    Expander inner(ctx, mid), outer(ctx, target);

    std::vector<CompositeCheck> checks;
    std::vector<std::vector<std::pair<int, int>>> groups;
    auto add = [&](const std::string& name, std::vector<std::pair<int, int>> terms) {
        CompositeCheck c;
        c.name = name + " k=" + std::to_string(k);
        checks.push_back(c);
        groups.push_back(std::move(terms));
    };
    std::vector<std::pair<int, int>> all;
    for (int g = 0; g < 5; ++g)
        all.insert(all.end(), kGroups[g].begin(), kGroups[g].end());
    add("delta^2", all);
    for (int g = 0; g < 5; ++g)
        add(std::string("Delta2Eq[") + std::to_string(g + 1) + "] " + kGroupNames[g], kGroups[g]);
    if (ctx.trivial_action()) {
        add("bicomplex d10^2", {{0, 0}});
        add("bicomplex d-12^2", {{2, 2}});
        add("bicomplex [d10,d-12]", {{0, 2}, {2, 0}});
    }

    const unsigned part[3] = {D10, D01, DM12};
    for (int j = 0; j < src.dim(); ++j) {
        Cochain e = src.basic(j);
        std::optional<Cochain> chi[3][3];
        bool skip = false;
        for (int b = 0; b < 3 && !skip; ++b) {
            auto psi = inner.apply(e, part[b]);
            if (!psi) {
                skip = true;
                break;
            }
            for (int a = 0; a < 3 && !skip; ++a) {
                chi[a][b] = outer.apply(*psi, part[a]);
                skip = !chi[a][b];
            }
        }
        for (std::size_t g = 0; g < checks.size(); ++g) {
            auto& c = checks[g];
            if (skip) {
                ++c.skipped;
                continue;
            }
            ++c.columns;
            Cochain sum;
            for (auto [a, b] : groups[g])
                for (const auto& [t, v] : *chi[a][b])
                    sum[t].add(v);
            for (const auto& [t, v] : sum) {
                if (v.is_zero())
                    continue;
                if (c.failures == 0) {
                    const auto& key = src.key(j);
                    c.witness = format_args(ctx.space(), key.args) + "->" + ctx.space().label(key.out) + " at " +
                                format_args(ctx.space(), t) + ": " + format_vector(ctx.space(), v);
                }
                c.failures += static_cast<long>(v.size());
            }
        }
    }
    return checks;
}

std::vector<CohomologyRow> cohomology_dims(const ComplexReport& complex)
{
    std::vector<CohomologyRow> rows;
    int prev_rank = 0;
    for (const auto& d : complex.matrices) {
        CohomologyRow r;
        r.k = d.source->degree();
        r.dim_cochains = d.source->dim();
        r.rank_delta = rank(d.total());
        r.dim_cocycles = r.dim_cochains - r.rank_delta;
        r.dim_cohomology = r.dim_cocycles - prev_rank;
        prev_rank = r.rank_delta;
        rows.push_back(r);
    }
    return rows;
}

std::vector<Vector> derivation_space(const CochainContext& ctx, const CochainSpace& c1)
{
    if (c1.degree() != 1)
        throw std::invalid_argument("derivation_space needs the degree-1 cochain space");
    const GradedSpace& s = ctx.space();
    std::vector<int> alg = ctx.algebra_even();
    alg.insert(alg.end(), ctx.algebra_odd().begin(), ctx.algebra_odd().end());
    // unknowns[h] = list of (coordinate, output) with c(e_h) = sum coordinate * output
    std::map<int, std::vector<std::pair<int, int>>> unknowns;
    for (int i = 0; i < c1.dim(); ++i) {
        const auto& key = c1.key(i);
        int h = key.args.p() == 1 ? key.args.x[0] : key.args.y[0];
        unknowns[h].push_back({i, key.out});
    }
    auto mul = [&](int a, int b) {
        auto v = ctx.mul(a, b);
        if (!v)
            throw std::runtime_error("derivation_space: product outside the structure");
        return *v;
    };
    Matrix m(c1.dim());
    for (int a : alg)
        for (int b : alg) {
            std::map<int, Vector> rows;
            for (const auto& [h, c] : mul(a, b))
                for (auto [i, out] : unknowns[h])
                    rows[out].add(i, c);
            for (auto [i, out] : unknowns[a])
                for (const auto& [g, c] : mul(out, b))
                    rows[g].add(i, -c);
            for (auto [i, out] : unknowns[b])
                for (const auto& [g, c] : mul(a, out))
                    rows[g].add(i, -c);
            for (auto& [g, r] : rows)
                if (!r.is_zero())
                    m.rows.push_back(r);
        }
    (void)s;
    return nullspace(m);
}

Antialgebra extension_from_cocycle(const CochainContext& ctx, const Cochain& c)
{
    const GradedSpace& s = ctx.space();
    std::set<int> ea(ctx.algebra_even().begin(), ctx.algebra_even().end());
    std::set<int> oa(ctx.algebra_odd().begin(), ctx.algebra_odd().end());
    auto cval = [&](const Args& a) {
        auto it = c.find(a);
        return it == c.end() ? Vector{} : it->second;
    };
    ProductTable t(ctx.space_ptr());
    for (int u = 0; u < s.dim(); ++u)
        for (int v = 0; v < s.dim(); ++v) {
            auto base = ctx.mul(u, v);
            if (!base)
                throw std::runtime_error("extension_from_cocycle: product outside the structure");
            Vector w = *base;
            if (ea.count(u) && ea.count(v))
                w.add(cval(Args{{u, v}, {}}), 2);
            else if (ea.count(u) && oa.count(v))
                w.add(cval(Args{{u}, {v}}));
            else if (oa.count(u) && ea.count(v))
                w.add(cval(Args{{v}, {u}}));
            else if (oa.count(u) && oa.count(v) && u != v)
                w.add(u < v ? cval(Args{{}, {u, v}}) : Rational(-1) * cval(Args{{}, {v, u}}));
            t.set(u, v, w);
        }
    return Antialgebra(std::move(t), ctx.base().name() + " ext");
}

std::optional<Vector> solve_coboundary(const DifferentialMatrix& d1, const Vector& c)
{
    return solve(d1.total(), c);
}

bool is_trivializing(const CochainContext& ctx, const Antialgebra& extension, const Cochain& l)
{
    const GradedSpace& s = ctx.space();
    std::set<int> ea(ctx.algebra_even().begin(), ctx.algebra_even().end());
    std::set<int> oa(ctx.algebra_odd().begin(), ctx.algebra_odd().end());
    auto phi = [&](const Vector& v) {
        Vector r = v;
        for (const auto& [g, c] : v) {
            Args a = ea.count(g) ? Args{{g}, {}} : Args{{}, {g}};
            if (!ea.count(g) && !oa.count(g))
                continue;
            auto it = l.find(a);
            if (it != l.end())
                r.add(it->second, c);
        }
        return r;
    };
    for (int u = 0; u < s.dim(); ++u)
        for (int v = 0; v < s.dim(); ++v) {
            auto lhs = extension.mul(phi(basis_vec(u)), phi(basis_vec(v)));
            auto uv = ctx.mul(u, v);
            if (!lhs || !uv || *lhs != phi(*uv))
                return false;
        }
    return true;
}

} // namespace al
