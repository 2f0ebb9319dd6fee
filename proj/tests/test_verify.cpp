#include <gtest/gtest.h>

#include <algorithm>

#include "jordan/verify.hpp"

using namespace jordan;

namespace {

const CheckResult* find(const VerifyReport& r, Family f, const std::string& name) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](const CheckResult& c) { return c.family == f && c.name == name; });
    return it == r.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST(Verify, DefaultSuitePasses) {
    const auto report = run_verification({});
    EXPECT_TRUE(report.passed());
    for (const auto& c : report.checks) {
        EXPECT_TRUE(c.passed()) << to_string(c.family) << " " << c.name << " worst " << c.worst;
        EXPECT_GT(c.checked, 0) << c.name;
    }
    ASSERT_NE(find(report, Family::Tan, "bracketing"), nullptr);
    EXPECT_EQ(find(report, Family::Tan, "bracketing")->checked, 9L * 4 * 10001);
    EXPECT_NE(find(report, Family::Sec, "sec-tan-convolution"), nullptr);
    EXPECT_NE(find(report, Family::Cosec, "cot-cosec-recurrence"), nullptr);
    EXPECT_NE(find(report, Family::Tan, "gap-bound"), nullptr);
}

TEST(Verify, SmallRun) {
    VerifyOptions opt;
    opt.families = {Family::Tan};
    opt.order_hi = 2;
    opt.samples = 100;
    const auto report = run_verification(opt);
    EXPECT_TRUE(report.passed());
    for (const auto& c : report.checks) EXPECT_EQ(c.family, Family::Tan);
}

TEST(Verify, InjectedFaultIsCaught) {
    for (Family f : kAllFamilies) {
        VerifyOptions opt;
        opt.families = {f};
        opt.samples = 501;
        opt.fault = Fault{f, 2, 1.2};
        const auto report = run_verification(opt);
        EXPECT_FALSE(report.passed()) << to_string(f);
        const auto* oracle = find(report, f, "closed-vs-direct");
        ASSERT_NE(oracle, nullptr);
        EXPECT_EQ(oracle->failed, 1);
    }
}

TEST(Verify, FaultInPartnerFamilyBreaksIdentity) {
    VerifyOptions opt;
    opt.families = {Family::Sec};
    opt.samples = 101;
    opt.fault = Fault{Family::Tan, 4, 1.01};
    const auto report = run_verification(opt);
    const auto* conv = find(report, Family::Sec, "sec-tan-convolution");
    ASSERT_NE(conv, nullptr);
    EXPECT_FALSE(conv->passed());
}

TEST(Verify, RejectsBadOptions) {
    VerifyOptions opt;
    opt.samples = 1;
    EXPECT_THROW(run_verification(opt), std::invalid_argument);
    opt.samples = 10;
    opt.order_lo = 3;
    opt.order_hi = 2;
    EXPECT_THROW(run_verification(opt), std::invalid_argument);
    opt.order_lo = 0;
    opt.order_hi = 18;
    EXPECT_THROW(run_verification(opt), std::invalid_argument);
}
