#include "ahrc/numeric.hpp"

#include <cctype>

namespace ahrc {

Integer pow2(unsigned long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  if (!all_digits(body))
    throw PreconditionError("not an integer literal: '" + std::string(text) + "'");
  Integer out(std::string(body), 10);
  return negative ? Integer(-out) : out;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text))
    throw PreconditionError("not a rational literal: '" + std::string(text) + "'");
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den(std::string(den_text), 10);
  if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

ExtendedRational::ExtendedRational(Rational value) : value_(std::move(value)) {
  if (*value_ < 0) throw PreconditionError("extended rational must be nonnegative");
}

ExtendedRational ExtendedRational::infinity() {
  ExtendedRational out;
  out.value_.reset();
  return out;
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtendedRational(parse_rational(text));
}

const Rational& ExtendedRational::value() const {
  if (!value_) throw PreconditionError("value of infinity requested");
  return *value_;
}

std::string ExtendedRational::to_string() const {
  return value_ ? ahrc::to_string(*value_) : std::string("inf");
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ahrc
