#pragma once

#include <stdexcept>
#include <string>

namespace horadam {

// Bad arguments from the caller: mismatched discriminants, unknown preset
// names, out-of-domain indices.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Division by zero or by a zero divisor of Q(sqrt D) when D is a square.
class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// p^2 + 4q = 0: the characteristic roots coincide.
class DegenerateRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// 1 - p - q = 0: one of the roots equals 1 and the summation formula has a pole.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form left a nonzero sqrt(D) component (or a non-integral value
// where an integer was required). Firing means an identity is broken.
class NotRationalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace horadam
