#pragma once

#include "antialg/antialgebra.hpp"
#include "antialg/cohomology.hpp"
#include "antialg/io.hpp"

#include <random>
#include <string>
#include <vector>

#ifndef ANTIALG_DATA_DIR
#define ANTIALG_DATA_DIR "data"
#endif

namespace testing {

inline al::Antialgebra load_k3() { return al::load_algebra(std::string(ANTIALG_DATA_DIR) + "/k3.alg").algebra; }

// Small rationals with numerators in [-3,3] and denominators in [1,3].
inline al::Rational small_rational(std::mt19937& rng)
{
    int num = static_cast<int>(rng() % 7) - 3;
    int den = 1 + static_cast<int>(rng() % 3);
    return al::Rational(num, den);
}

inline al::Vector random_coords(std::mt19937& rng, int dim, double density = 1.0)
{
    std::uniform_real_distribution<double> u(0, 1);
    al::Vector v;
    for (int i = 0; i < dim; ++i)
        if (u(rng) < density)
            v.add(i, small_rational(rng));
    return v;
}

inline al::Vector combination(std::mt19937& rng, const std::vector<al::Vector>& basis)
{
    al::Vector v;
    for (const auto& b : basis)
        v.add(b, small_rational(rng));
    return v;
}

// Random parity-preserving (p,q)-map on s; skew in y when skew is set.
al::MultiMap random_map(std::mt19937& rng, const al::SpacePtr& s, int p, int q, bool skew);

// All ordered tuples of length len from base.
std::vector<std::vector<int>> tuples(const std::vector<int>& base, int len);

} // namespace testing
