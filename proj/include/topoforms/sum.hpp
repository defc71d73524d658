#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace topoforms {

/// Deterministic pairwise-tree summation. The reduction order depends only on
/// the element order, never on thread count, so reports reproduce to the bit.
double pairwise_sum(std::span<const double> v);

/// Pairwise sum of f(i) for i in [0, n) without materializing the terms.
double pairwise_sum(std::size_t n, const std::function<double(std::size_t)>& f);

double max_abs(std::span<const double> v);

/// Root-mean-square over the raw entries.
double rms(std::span<const double> v);

/// Runs f(begin, end) over chunks of [0, n). Thread count is capped by the
/// TOPOFORMS_THREADS environment variable (read once). Chunks write disjoint
/// data in the callers, so results do not depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& f);

int thread_cap();

} // namespace topoforms
