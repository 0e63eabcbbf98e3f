#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ahrc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an input violates an operation's precondition. The CLI maps
/// this to exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed or loaded object fails an invariant. The CLI maps
/// this to exit code 3.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer pow2(unsigned long exponent);

/// Lowest-terms rational from numerator and denominator; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

std::string to_string(const Integer& value);
/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" with decimal digits only (an optional leading '-').
/// Decimal points and exponents are rejected so that no input is ever
/// approximated.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Nonnegative exact rational or +infinity.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  explicit ExtendedRational(Rational value);

  static ExtendedRational infinity();
  /// Accepts "inf" or a nonnegative rational literal.
  static ExtendedRational parse(std::string_view text);

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Throws PreconditionError when infinite.
  const Rational& value() const;

  std::string to_string() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  std::optional<Rational> value_ = Rational(0);
};

}  // namespace ahrc
