#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cherw {

// Exact rationals. gmpxx keeps every result in lowest terms with a positive
// denominator, so no separate normalization step is needed.
using Scalar = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);

Scalar factorial(long n);
Scalar binomial(long n, long k);

// mpq_class(p, q) does not reduce; always go through this
inline Scalar frac(long p, long q) {
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Scalar& s) { return s.get_den() == 1; }

}  // namespace cherw
