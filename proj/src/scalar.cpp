#include "antialg/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace al {

namespace {

boost::multiprecision::mpz_int parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        neg = s[i++] == '-';
    if (i == s.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    boost::multiprecision::mpz_int v(std::string(s.substr(i)));
    return neg ? boost::multiprecision::mpz_int(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    auto num = parse_integer(text.substr(0, slash), text);
    auto den_view = text.substr(slash + 1);
    if (!den_view.empty() && (den_view[0] == '-' || den_view[0] == '+'))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    auto den = parse_integer(den_view, text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r)
{
    return r.str();
}

} // namespace al
