#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace roelcke {

// Exact rational scalar. gmpxx keeps results of arithmetic canonical
// (coprime, positive denominator); values built from strings go through
// parse_rational, which canonicalizes.
using Rational = mpq_class;

// Raised for malformed or out-of-contract input (bad JSON, t outside [0,1],
// mismatched tuple lengths, ...). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal invariant that a theorem guarantees fails at
// runtime (e.g. a discontinuity while splicing through a pseudo-inverse).
// The CLI maps it to exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parses "p/q" or "p" (optional leading '-'). Rejects zero denominators,
// whitespace and anything that is not a plain decimal integer pair.
Rational parse_rational(std::string_view text);

// Canonical text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw InputError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

}  // namespace roelcke
