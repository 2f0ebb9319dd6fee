#include <gtest/gtest.h>

#include <stdexcept>

#include "jordan/kernels.hpp"

using namespace jordan::kernels;

TEST(Kernels, CompensatedSumRecoversSmallTerms) {
    CompensatedSum s;
    s.add(1.0L);
    for (int i = 0; i < 1000; ++i) s.add(1e-20L);
    s.add(-1.0L);
    EXPECT_NEAR(static_cast<double>(s.value()), 1e-17, 1e-30);
    EXPECT_NEAR(static_cast<double>(s.magnitude()), 2.0, 1e-15);
}

TEST(Kernels, RangeSumParallelMatchesSerial) {
    auto term = [](std::int64_t n) { return 1.0L / (static_cast<long double>(n) * n); };
    const auto a = sum_range(1, 1 << 20, term);
    const auto b = sum_range_serial(1, 1 << 20, term);
    EXPECT_NEAR(static_cast<double>(a.value), static_cast<double>(b.value), 1e-18);
    EXPECT_NEAR(static_cast<double>(a.magnitude), static_cast<double>(b.magnitude), 1e-15);
}

TEST(Kernels, RangeSumDeterministic) {
    auto term = [](std::int64_t n) { return (n % 2 ? 1.0L : -1.0L) / n; };
    const auto a = sum_range(1, 3'000'001, term);
    const auto b = sum_range(1, 3'000'001, term);
    EXPECT_EQ(a.value, b.value);
}

TEST(Kernels, EmptyAndShortRanges) {
    auto term = [](std::int64_t n) { return static_cast<long double>(n); };
    EXPECT_EQ(sum_range(5, 4, term).value, 0.0L);
    EXPECT_EQ(sum_range(1, 10, term).value, 55.0L);
}

TEST(Kernels, MapPreservesOrder) {
    const auto xs = linspace(0.0, 1.0, 1001);
    const auto a = map(std::span<const double>(xs), [](double x) { return x * x; });
    const auto b = map_serial(std::span<const double>(xs), [](double x) { return x * x; });
    EXPECT_EQ(a, b);
}

TEST(Kernels, MapRethrows) {
    const auto xs = linspace(0.0, 1.0, 101);
    EXPECT_THROW(map(std::span<const double>(xs),
                     [](double x) -> double {
                         if (x > 0.5) throw std::runtime_error("boom");
                         return x;
                     }),
                 std::runtime_error);
}

TEST(Kernels, Linspace) {
    const auto xs = linspace(-0.9998, 0.9998, 10001);
    EXPECT_EQ(xs.size(), 10001u);
    EXPECT_EQ(xs.front(), -0.9998);
    EXPECT_EQ(xs.back(), 0.9998);
    EXPECT_EQ(xs[5000], 0.0);
    EXPECT_EQ(linspace(2.0, 3.0, 1), std::vector<double>{2.0});
}
