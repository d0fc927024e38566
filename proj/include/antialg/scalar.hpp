#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace al {

using Rational = boost::multiprecision::mpq_rational;

// Accepts "p/q", "-p/q" or an integer; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline int sign_of_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace al
