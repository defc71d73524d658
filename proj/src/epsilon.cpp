#include "topoforms/epsilon.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace topoforms {

namespace {

// Heap's algorithm; every emitted permutation is one transposition away from
// the previous, so parity alternates starting from +1 for the identity.
std::vector<EpsTerm> generate(int d) {
    std::array<int, 4> p{};
    for (int i = 0; i < d; ++i) p[i] = i;
    std::vector<EpsTerm> out;
    double sign = 1.0;
    std::array<int, 4> c{};

    out.push_back({p, sign});
    int i = 0;
    while (i < d) {
        if (c[i] < i) {
            if (i % 2 == 0)
                std::swap(p[0], p[i]);
            else
                std::swap(p[c[i]], p[i]);
            sign = -sign;
            out.push_back({p, sign});
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return out;
}

} // namespace

const std::vector<EpsTerm>& epsilon_terms(int d) {
    static const std::vector<EpsTerm> e2 = generate(2);
    static const std::vector<EpsTerm> e3 = generate(3);
    static const std::vector<EpsTerm> e4 = generate(4);
    switch (d) {
        case 2: return e2;
        case 3: return e3;
        case 4: return e4;
        default: throw std::invalid_argument("epsilon_terms: d must be 2, 3 or 4");
    }
}

} // namespace topoforms
