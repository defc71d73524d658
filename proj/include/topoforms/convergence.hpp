#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "topoforms/grid.hpp"

namespace topoforms {

struct ConvergenceStudy {
    std::vector<double> h;      // representative spacing per level
    std::vector<double> error;  // nonnegative error norm per level
    double order = 0.0;         // least-squares slope of log(error) vs log(h)
};

/// Least-squares slope of log(err) vs log(h). Any exactly-zero error short
/// circuits to the +infinity sentinel (the measure hit the floor).
double convergence_order(std::span<const double> h, std::span<const double> err);

/// Runs `measure` on each grid level and fits the order. Levels are typically
/// produced with GridSpec::refined() (halved spacing) but any monotone set of
/// spacings works for the fit.
ConvergenceStudy convergence_order(const std::function<double(const GridSpec&)>& measure,
                                   std::span<const GridSpec> levels);

inline constexpr double order_infinity = std::numeric_limits<double>::infinity();

} // namespace topoforms
