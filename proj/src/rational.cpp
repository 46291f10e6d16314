#include "rcalg/rational.hpp"

#include <cctype>

#include "rcalg/errors.hpp"

namespace rcalg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t num_end = digits(i);
  if (num_end == i) throw ValidationError("invalid rational '" + std::string(text) + "'");
  Integer num(std::string(text.substr(i, num_end - i)));
  Integer den = 1;
  if (num_end < text.size()) {
    if (text[num_end] != '/') throw ValidationError("invalid rational '" + std::string(text) + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size()) {
      throw ValidationError("invalid rational '" + std::string(text) + "'");
    }
    den = Integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && sgn(q) <= 0; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw PreconditionError("expected a machine-size integer, got " + to_string(q));
  }
  return q.get_num().get_si();
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pochhammer(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= x + i;
  return r;
}

Rational gen_binomial(const Rational& x, unsigned j) {
  Rational r = 1;
  for (unsigned i = 0; i < j; ++i) r *= x - i;
  return r / Rational(factorial(j));
}

}  // namespace rcalg
