#include "antialg/multimap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace al {

int canonicalize_y(std::vector<int>& y)
{
    int sign = 1;
    for (std::size_t i = 1; i < y.size(); ++i)
        for (std::size_t j = i; j > 0 && y[j - 1] >= y[j]; --j) {
            if (y[j - 1] == y[j])
                return 0;
            std::swap(y[j - 1], y[j]);
            sign = -sign;
        }
    return sign;
}

void MultiMap::add(const Args& a, int out, const Rational& c)
{
    if (c == 0)
        return;
    auto it = e_.try_emplace(a).first;
    it->second.add(out, c);
    if (it->second.is_zero())
        e_.erase(it);
}

void MultiMap::add(const Args& a, const Vector& v, const Rational& c)
{
    if (c == 0 || v.is_zero())
        return;
    auto it = e_.try_emplace(a).first;
    it->second.add(v, c);
    if (it->second.is_zero())
        e_.erase(it);
}

void MultiMap::add(const MultiMap& m, const Rational& c)
{
    if (!space_)
        space_ = m.space_;
    for (const auto& [a, v] : m.e_)
        add(a, v, c);
}

Vector MultiMap::value(const Args& a) const
{
    auto it = e_.find(a);
    return it == e_.end() ? Vector{} : it->second;
}

std::set<std::pair<int, int>> MultiMap::blocks() const
{
    std::set<std::pair<int, int>> r;
    for (const auto& kv : e_)
        r.emplace(kv.first.p(), kv.first.q());
    return r;
}

MultiMap MultiMap::block(int p, int q) const
{
    MultiMap r(space_);
    for (const auto& [a, v] : e_)
        if (a.p() == p && a.q() == q)
            r.e_.emplace(a, v);
    return r;
}

MultiMap MultiMap::part(int out_parity) const
{
    MultiMap r(space_);
    for (const auto& [a, v] : e_)
        for (const auto& [g, c] : v)
            if (space_->parity(g) == out_parity)
                r.add(a, g, c);
    return r;
}

int MultiMap::p() const
{
    auto b = blocks();
    if (b.size() > 1)
        throw std::logic_error("p() of a map with several blocks");
    return b.empty() ? 0 : b.begin()->first;
}

int MultiMap::q() const
{
    auto b = blocks();
    if (b.size() > 1)
        throw std::logic_error("q() of a map with several blocks");
    return b.empty() ? 0 : b.begin()->second;
}

MultiMap& MultiMap::operator*=(const Rational& c)
{
    if (c == 0) {
        e_.clear();
        return *this;
    }
    for (auto& kv : e_)
        kv.second *= c;
    return *this;
}

MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
MultiMap operator*(const Rational& c, MultiMap m) { return m *= c; }

namespace {

void check_grading(const GradedSpace& s, const Vector& v, int parity, const char* what)
{
    for (const auto& [g, c] : v)
        if (g < 0 || g >= s.dim() || s.parity(g) != parity)
            throw std::invalid_argument(std::string(what) + " argument has support outside its grading component");
}

} // namespace

Vector multimap_eval(const MultiMap& phi, const std::vector<Vector>& xs, const std::vector<Vector>& ys)
{
    auto bl = phi.blocks();
    std::pair<int, int> want(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
    if (bl.size() == 1 && *bl.begin() != want)
        throw std::invalid_argument("arity mismatch in multimap_eval");
    if (phi.space_ptr()) {
        for (const auto& v : xs)
            check_grading(phi.space(), v, 0, "even");
        for (const auto& v : ys)
            check_grading(phi.space(), v, 1, "odd");
    }
    Vector out;
    if (!bl.count(want))
        return out;

    std::vector<const Vector*> args;
    for (const auto& v : xs)
        args.push_back(&v);
    for (const auto& v : ys)
        args.push_back(&v);
    for (const auto* v : args)
        if (v->is_zero())
            return out;

    std::vector<Vector::Map::const_iterator> it;
    for (const auto* v : args)
        it.push_back(v->begin());
    Args key;
    key.x.resize(xs.size());
    key.y.resize(ys.size());
    while (true) {
        Rational c = 1;
        for (std::size_t k = 0; k < args.size(); ++k) {
            c *= it[k]->second;
            if (k < xs.size())
                key.x[k] = it[k]->first;
            else
                key.y[k - xs.size()] = it[k]->first;
        }
        auto e = phi.entries().find(key);
        if (e != phi.entries().end())
            out.add(e->second, c);
        std::size_t k = 0;
        for (; k < args.size(); ++k) {
            if (++it[k] != args[k]->end())
                break;
            it[k] = args[k]->begin();
        }
        if (k == args.size())
            break;
    }
    return out;
}

std::optional<int> parity_of(const MultiMap& phi)
{
    std::optional<int> r;
    for (const auto& [a, v] : phi.entries())
        for (const auto& [g, c] : v) {
            int t = map_parity(a.p(), phi.space().parity(g));
            if (r && *r != t)
                return std::nullopt;
            r = t;
        }
    return r;
}

bool is_parity_preserving(const MultiMap& phi)
{
    for (const auto& [a, v] : phi.entries())
        for (const auto& [g, c] : v)
            if (phi.space().parity(g) != a.q() % 2)
                return false;
    return true;
}

bool is_y_skew(const MultiMap& phi)
{
    for (const auto& [a, v] : phi.entries()) {
        for (std::size_t j = 0; j + 1 < a.y.size(); ++j) {
            if (a.y[j] == a.y[j + 1])
                return false;
            Args b = a;
            std::swap(b.y[j], b.y[j + 1]);
            if (phi.value(b) != Rational(-1) * v)
                return false;
        }
        std::vector<int> y = a.y;
        if (canonicalize_y(y) == 0)
            return false;
    }
    return true;
}

std::string format_multimap(const MultiMap& phi)
{
    std::ostringstream os;
    for (const auto& [a, v] : phi.entries()) {
        os << "(";
        for (std::size_t i = 0; i < a.x.size(); ++i)
            os << (i ? "," : "") << phi.space().label(a.x[i]);
        os << ";";
        for (std::size_t i = 0; i < a.y.size(); ++i)
            os << (i ? "," : "") << phi.space().label(a.y[i]);
        os << ") -> " << format_vector(phi.space(), v) << "\n";
    }
    return os.str();
}

} // namespace al
