#include "polarlink/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace polarlink {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_integer = [](std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer(num_text)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string num(num_text);
  if (num.front() == '+') num.erase(0, 1);
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(num, 10));
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!valid_integer(den_text) || den_text.front() == '-' || den_text.front() == '+')
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(num, 10), den);
  }
  return Rational(std::move(q));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("integer " + str() + " out of range");
  return n.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace polarlink
