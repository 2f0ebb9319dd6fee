#pragma once

// Data-parallel inner loops. Every parallel kernel has a serial twin with the same
// contract; the serial versions are the reference the tests compare against.

#include <cmath>
#include <cstdint>
#include <exception>
#include <span>
#include <vector>

#include <omp.h>

namespace jordan::kernels {

// Neumaier compensated accumulator.
class CompensatedSum {
  public:
    void add(long double term) {
        const long double t = sum_ + term;
        if (std::fabs(sum_) >= std::fabs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
        abs_ += std::fabs(term);
    }
    long double value() const { return sum_ + comp_; }
    // Sum of |term|, used for rounding budgets.
    long double magnitude() const { return abs_; }

  private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
    long double abs_ = 0.0L;
};

struct RangeSum {
    long double value = 0.0L;
    long double magnitude = 0.0L;
};

template <class Term>
RangeSum sum_range_serial(std::int64_t first, std::int64_t last, Term&& term) {
    CompensatedSum acc;
    for (std::int64_t n = first; n <= last; ++n) acc.add(term(n));
    return {acc.value(), acc.magnitude()};
}

// Ranges shorter than this are summed serially; longer ones are cut into kChunks
// fixed pieces so the result does not depend on the thread count.
inline constexpr std::int64_t kParallelThreshold = 1 << 16;
inline constexpr int kChunks = 64;

template <class Term>
RangeSum sum_range(std::int64_t first, std::int64_t last, Term&& term) {
    const std::int64_t count = last - first + 1;
    if (count < kParallelThreshold) return sum_range_serial(first, last, term);

    std::vector<RangeSum> partial(kChunks);
    const std::int64_t step = (count + kChunks - 1) / kChunks;
#pragma omp parallel for schedule(static)
    for (int c = 0; c < kChunks; ++c) {
        const std::int64_t lo = first + c * step;
        const std::int64_t hi = std::min(last, lo + step - 1);
        if (lo <= hi) partial[c] = sum_range_serial(lo, hi, term);
    }
    CompensatedSum acc;
    long double magnitude = 0.0L;
    for (const auto& p : partial) {
        acc.add(p.value);
        magnitude += p.magnitude;
    }
    return {acc.value(), magnitude};
}

template <class F>
auto map_serial(std::span<const double> xs, F&& f) {
    using R = decltype(f(0.0));
    std::vector<R> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(f(x));
    return out;
}

// Element-wise map; output order matches input order regardless of scheduling.
// The first exception thrown by any worker is rethrown on the calling thread.
template <class F>
auto map(std::span<const double> xs, F&& f) {
    using R = decltype(f(0.0));
    std::vector<R> out(xs.size());
    std::exception_ptr error;
    const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[i] = f(xs[i]);
        } catch (...) {
#pragma omp critical(jordan_kernels_map)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

// n equally spaced points on [lo, hi], endpoints included.
inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    xs[n - 1] = hi;
    return xs;
}

}  // namespace jordan::kernels
