#include "antialg/space.hpp"

#include <sstream>
#include <stdexcept>

namespace al {

GradedSpace::GradedSpace(std::vector<std::string> even, std::vector<std::string> odd)
    : even_(std::move(even)), odd_(std::move(odd))
{
    for (int g = 0; g < dim(); ++g) {
        const auto& l = label(g);
        if (l.empty())
            throw std::invalid_argument("empty basis label");
        if (!index_.emplace(l, g).second)
            throw std::invalid_argument("duplicate basis label '" + l + "'");
    }
}

std::vector<int> GradedSpace::basis(int parity) const
{
    std::vector<int> r;
    int lo = parity == 0 ? 0 : dim0();
    int hi = parity == 0 ? dim0() : dim();
    for (int g = lo; g < hi; ++g)
        r.push_back(g);
    return r;
}

const std::string& GradedSpace::label(int g) const
{
    if (g < 0 || g >= dim())
        throw std::out_of_range("basis index out of range");
    return g < dim0() ? even_[g] : odd_[g - dim0()];
}

std::optional<int> GradedSpace::find(const std::string& label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

SpacePtr make_space(std::vector<std::string> even, std::vector<std::string> odd)
{
    return std::make_shared<const GradedSpace>(std::move(even), std::move(odd));
}

DirectSum direct_sum(const GradedSpace& v, const GradedSpace& w)
{
    std::vector<std::string> ev = v.even_labels(), od = v.odd_labels();
    ev.insert(ev.end(), w.even_labels().begin(), w.even_labels().end());
    od.insert(od.end(), w.odd_labels().begin(), w.odd_labels().end());
    DirectSum r;
    r.space = make_space(std::move(ev), std::move(od));
    int n0 = r.space->dim0();
    for (int g = 0; g < v.dim(); ++g)
        r.from_first.push_back(g < v.dim0() ? g : n0 + (g - v.dim0()));
    for (int g = 0; g < w.dim(); ++g)
        r.from_second.push_back(g < w.dim0() ? v.dim0() + g : n0 + v.dim1() + (g - w.dim0()));
    return r;
}

void Vector::add(int g, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = c_.try_emplace(g, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            c_.erase(it);
    }
}

void Vector::add(const Vector& v, const Rational& c)
{
    if (c == 0)
        return;
    for (const auto& [g, a] : v.c_)
        add(g, a * c);
}

Vector& Vector::operator*=(const Rational& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& kv : c_)
        kv.second *= c;
    return *this;
}

Rational Vector::coeff(int g) const
{
    auto it = c_.find(g);
    return it == c_.end() ? Rational(0) : it->second;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(const Rational& c, Vector v) { return v *= c; }

std::optional<int> vector_parity(const GradedSpace& s, const Vector& v)
{
    std::optional<int> p;
    for (const auto& [g, c] : v) {
        int q = s.parity(g);
        if (p && *p != q)
            return std::nullopt;
        p = q;
    }
    return p;
}

std::string format_vector(const GradedSpace& s, const Vector& v)
{
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        if (c == 1)
            os << s.label(g);
        else
            os << c.str() << "*" << s.label(g);
    }
    return os.str();
}

} // namespace al
