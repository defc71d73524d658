#include "topoforms/convergence.hpp"

#include <cmath>
#include <stdexcept>

namespace topoforms {

double convergence_order(std::span<const double> h, std::span<const double> err) {
    if (h.size() != err.size() || h.size() < 2)
        throw std::invalid_argument("convergence_order: need >= 2 matching (h, error) pairs");
    for (double e : err) {
        if (e < 0.0 || !std::isfinite(e))
            throw std::invalid_argument("convergence_order: error norms must be finite and nonnegative");
        if (e == 0.0) return order_infinity;
    }
    // least-squares slope of log(e) on log(h)
    const std::size_t n = h.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(h[i]);
        const double y = std::log(err[i]);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        throw std::invalid_argument("convergence_order: degenerate spacings");
    return (n * sxy - sx * sy) / denom;
}

ConvergenceStudy convergence_order(const std::function<double(const GridSpec&)>& measure,
                                   std::span<const GridSpec> levels) {
    if (levels.size() < 3)
        throw std::invalid_argument("convergence_order: need >= 3 refinement levels");
    ConvergenceStudy study;
    for (const GridSpec& g : levels) {
        double hmax = 0.0;
        for (int k = 0; k < g.dim; ++k) hmax = std::max(hmax, g.spacing[k]);
        study.h.push_back(hmax);
        study.error.push_back(measure(g));
    }
    study.order = convergence_order(study.h, study.error);
    return study;
}

} // namespace topoforms
