#include "topoforms/sum.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace topoforms {

namespace {

double pairwise_span(const double* v, std::size_t n) {
    if (n <= 64) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_span(v, half) + pairwise_span(v + half, n - half);
}

double pairwise_fn(std::size_t lo, std::size_t hi, const std::function<double(std::size_t)>& f) {
    const std::size_t n = hi - lo;
    if (n <= 64) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += f(i);
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_fn(lo, mid, f) + pairwise_fn(mid, hi, f);
}

} // namespace

double pairwise_sum(std::span<const double> v) { return pairwise_span(v.data(), v.size()); }

double pairwise_sum(std::size_t n, const std::function<double(std::size_t)>& f) {
    return pairwise_fn(0, n, f);
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double rms(std::span<const double> v) {
    if (v.empty()) return 0.0;
    const double s = pairwise_sum(v.size(), [&](std::size_t i) { return v[i] * v[i]; });
    return std::sqrt(s / static_cast<double>(v.size()));
}

int thread_cap() {
    static const int cap = [] {
        unsigned hw = std::thread::hardware_concurrency();
        int n = hw == 0 ? 1 : static_cast<int>(hw);
        if (const char* env = std::getenv("TOPOFORMS_THREADS")) {
            const int req = std::atoi(env);
            if (req >= 1) n = std::min(n, req);
        }
        return std::max(1, n);
    }();
    return cap;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& f) {
    const int threads = thread_cap();
    if (threads == 1 || n < 4096) {
        f(0, n);
        return;
    }
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = std::min(n, t * chunk);
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] { f(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace topoforms
