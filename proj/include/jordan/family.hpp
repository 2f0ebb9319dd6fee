#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace jordan {

// The four pole-carrying expansions in powers of u = 1 - x^2:
//   Tan   tan(pi x/2)/(pi x/2)   = 8/pi^2 [1/u + sum (-1)^k T_{k+1}/4^{k+1} u^k]
//   Sec   sec(pi x/2)            = 4/pi   [1/u - sum (-1)^k S_{k+1}/4^{k+1} u^k]
//   Cot   1 - pi x cot(pi x)     = 2x^2   [1/u + sum (-1)^k C_{k+1}/4^{k+1} u^k]
//   Cosec pi x cosec(pi x) - 1   = 2x^2   [1/u - sum (-1)^k D_{k+1}/4^{k+1} u^k]
enum class Family { Tan, Sec, Cot, Cosec };

inline constexpr std::array<Family, 4> kAllFamilies{Family::Tan, Family::Sec, Family::Cot,
                                                    Family::Cosec};

struct FamilyTraits {
    std::string_view name;
    // Sign in front of the inner series.
    int inner_sign;
    // Constant prefactor (Tan, Sec); Cot and Cosec use 2x^2 instead.
    bool constant_prefactor;
    // The direct-sum definition of the coefficient alternates in n.
    bool alternating_definition;
    // A sharpened truncation constant (H for Tan, J for Sec) exists.
    bool sharpenable;
};

constexpr FamilyTraits traits(Family f) {
    switch (f) {
        case Family::Tan: return {"tan", +1, true, false, true};
        case Family::Sec: return {"sec", -1, true, true, true};
        case Family::Cot: return {"cot", +1, false, false, false};
        case Family::Cosec: return {"cosec", -1, false, true, false};
    }
    return {"?", 0, false, false, false};
}

constexpr std::string_view to_string(Family f) { return traits(f).name; }

inline std::optional<Family> parse_family(std::string_view s) {
    for (Family f : kAllFamilies)
        if (traits(f).name == s) return f;
    if (s == "csc") return Family::Cosec;
    return std::nullopt;
}

}  // namespace jordan
