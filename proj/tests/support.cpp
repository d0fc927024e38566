#include "support.hpp"

#include "antialg/gerstenhaber.hpp"

namespace testing {

std::vector<std::vector<int>> tuples(const std::vector<int>& base, int len)
{
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < len; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int b : base) {
                auto u = t;
                u.push_back(b);
                next.push_back(u);
            }
        out = std::move(next);
    }
    return out;
}

al::MultiMap random_map(std::mt19937& rng, const al::SpacePtr& s, int p, int q, bool skew)
{
    al::MultiMap m(s);
    auto outs = s->basis(q % 2);
    for (const auto& x : tuples(s->basis(0), p))
        for (const auto& y : tuples(s->basis(1), q)) {
            if (rng() % 2)
                continue;
            for (int o : outs)
                m.add(al::Args{x, y}, o, small_rational(rng));
        }
    return skew ? al::alt(m) : m;
}

} // namespace testing
