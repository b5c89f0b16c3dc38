#include "casimir/rational.hpp"

#include <cctype>
#include <ostream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw InvalidArgument("malformed integer '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt exact_sqrt_or_negative(const Rational& value) {
  if (!value.is_integer() || value.sign() < 0) return -1;
  const BigInt n = value.numerator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return -1;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

}  // namespace casimir
