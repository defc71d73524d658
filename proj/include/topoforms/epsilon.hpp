#pragma once

#include <array>
#include <vector>

namespace topoforms {

/// One nonzero entry of the d-index Levi-Civita symbol.
struct EpsTerm {
    std::array<int, 4> idx{};
    double sign = 0.0;
};

/// Nonzero Levi-Civita entries for d in {2,3,4}, generated once with Heap's
/// algorithm (each output differs from the previous by one swap, so the sign
/// just alternates). Tests cross-check against a naive inversion-count oracle.
const std::vector<EpsTerm>& epsilon_terms(int d);

} // namespace topoforms
