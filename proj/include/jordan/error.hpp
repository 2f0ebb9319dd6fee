#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

// Argument lies outside the function's domain (|x| >= 1, r outside (0,1), ...).
class domain_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Domain error raised by the shifted expansion; carries the validity window on x^2.
class window_error : public domain_error {
  public:
    window_error(const std::string& what, double lo, double hi)
        : domain_error(what), lo_(lo), hi_(hi) {}

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

  private:
    double lo_;
    double hi_;
};

// Request is well formed but beyond what the evaluator supports (series caps, no root found).
class unsupported_range : public std::range_error {
  public:
    using std::range_error::range_error;
};

// Option combination that has no meaning for the family (sharpened cot/cosec).
class unsupported_option : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace jordan
