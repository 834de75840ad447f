#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace relflow {

inline constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

/// x^n for integer n (exact repeated multiplication, n may be negative).
inline double ipow(double x, int n) {
    if (n < 0) return 1.0 / ipow(x, -n);
    double acc = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

/// Exact falling factorial n!/(n-m)! as double; requires n <= 20 so the
/// intermediate integer fits in 64 bits.
inline double falling_factorial(int n, int m) {
    if (n < 0 || m < 0 || m > n || n > 20)
        throw std::invalid_argument("falling_factorial: need 0 <= m <= n <= 20");
    std::int64_t acc = 1;
    for (int k = 0; k < m; ++k) acc *= (n - k);
    return static_cast<double>(acc);
}

/// Deterministic RNG: xoshiro-free, just mt19937_64 with a bit-exact
/// uniform double so output does not depend on the standard library's
/// distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next_u64() {
        // splitmix64; plenty for sampling test points
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0,1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

private:
    std::uint64_t state_;
};

/// Least-squares slope of y against x.
inline double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("lsq_slope: need >= 2 samples");
    double xm = 0, ym = 0;
    for (std::size_t i = 0; i < x.size(); ++i) { xm += x[i]; ym += y[i]; }
    xm /= static_cast<double>(x.size());
    ym /= static_cast<double>(x.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - xm) * (y[i] - ym);
        den += (x[i] - xm) * (x[i] - xm);
    }
    return num / den;
}

/// Deterministic parallel map: body(i) for i in [0,n). Each index writes
/// only its own output slot, so the aggregation order never depends on
/// the number of jobs.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const int nthreads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = static_cast<std::size_t>(w); i < n;
                     i += static_cast<std::size_t>(nthreads))
                    body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace relflow
