#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordan/coefficients.hpp"
#include "jordan/family.hpp"

namespace jordan {

// --- coefficient identities -----------------------------------------------------

// (n+1) S_{n+1} - T_{n+1} - sum_{k=0}^{n-1} S_{k+1} T_{n-k}, obtained by inserting
// both expansions into d/dx((1-x^2) sec(pi x/2)).
double convolution_residual(const CoefficientTable& tan, const CoefficientTable& sec, int n);
// The same relation without the (n+1) factor, as it is usually quoted:
// S_{n+1} - T_{n+1} - sum_{k=0}^{n-1} T_{k+1} S_{n-k}. Nonzero for n >= 1.
double convolution_residual_unweighted(const CoefficientTable& tan, const CoefficientTable& sec,
                                       int n);

// n D_n + 4n D_{n-1} - C_n - 2C_{n-1} - sum_{k=1}^{n-1} D_k C_{n-k} - 4 sum_{k=1}^{n-2} D_k C_{n-k-1}.
double cd_residual(const CoefficientTable& cot, const CoefficientTable& cosec, int n);
// Variant with weight 1 on the last sum. Nonzero for n >= 3.
double cd_residual_unit_weight(const CoefficientTable& cot, const CoefficientTable& cosec, int n);

// |pi^2/8 - (1 + sum_{k=0}^{K} (-1)^k T_{k+1}/4^{k+1})|.
double sum_identity_gap(const CoefficientTable& tan, int K);

// --- verification suite ------------------------------------------------------------

struct Fault {
    Family family = Family::Tan;
    int order = 3;
    double factor = 1.5;
};

struct VerifyOptions {
    std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
    int order_lo = 0;
    int order_hi = 8;
    int samples = 10001;
    std::optional<Fault> fault;
};

struct CheckResult {
    Family family = Family::Tan;
    std::string name;
    long checked = 0;
    long failed = 0;
    double worst = 0.0;  // worst observed violation (<= 0 or tiny when passing)
    std::string note;

    bool passed() const { return failed == 0; }
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace jordan
