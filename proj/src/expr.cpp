#include "rcalg/expr.hpp"

#include <cctype>
#include <sstream>

#include "rcalg/errors.hpp"

namespace rcalg {
namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, const AlgebraPtr& algebra) : text_(text), algebra_(algebra) {}

  GradedPoly parse() {
    GradedPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(ParseError::Kind::Syntax, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(ParseError::Kind kind, const std::string& message) const {
    throw ParseError(kind, pos_, message);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  GradedPoly expr() {
    GradedPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  GradedPoly term() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    GradedPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return negate ? -acc : acc;
  }

  GradedPoly factor() {
    GradedPoly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      fail(ParseError::Kind::BadExponent, "exponent must be a non-negative integer literal");
    }
    if (!at_digit()) fail(ParseError::Kind::Syntax, "expected exponent");
    std::size_t start = pos_;
    std::string e = digits();
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
      pos_ = start;
      fail(ParseError::Kind::BadExponent, "exponent must be a non-negative integer literal");
    }
    if (e.size() > 6 || std::stoul(e) > kMaxExponent) {
      pos_ = start;
      fail(ParseError::Kind::BadExponent, "exponent too large");
    }
    return base.pow(static_cast<unsigned>(std::stoul(e)));
  }

  GradedPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail(ParseError::Kind::Syntax, "unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      GradedPoly inner = expr();
      if (!accept(')')) fail(ParseError::Kind::Syntax, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      Integer den = 1;
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (!at_digit()) fail(ParseError::Kind::Syntax, "expected denominator");
        std::size_t den_pos = pos_;
        den = Integer(digits());
        if (den == 0) {
          pos_ = den_pos;
          fail(ParseError::Kind::Syntax, "zero denominator");
        }
      } else {
        pos_ = save;
      }
      Rational q(num, den);
      q.canonicalize();
      return GradedPoly::constant(algebra_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (!algebra_->index_of(name)) {
        pos_ = start;
        fail(ParseError::Kind::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
      }
      return GradedPoly::generator(algebra_, name);
    }
    fail(ParseError::Kind::Syntax, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const AlgebraPtr& algebra_;
  std::size_t pos_ = 0;
};

void write_monomial(std::ostream& os, const AlgebraSpec& alg, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << alg.name(i);
    if (m[i] > 1) os << '^' << m[i];
  }
}

void write_term(std::ostream& os, const AlgebraSpec& alg, const Monomial& m, const Rational& c) {
  if (m.is_unit()) {
    os << to_string(c);
    return;
  }
  if (c == -1) {
    os << '-';
  } else if (c != 1) {
    os << to_string(c) << '*';
  }
  write_monomial(os, alg, m);
}

}  // namespace

GradedPoly parse_expr(std::string_view text, const AlgebraPtr& algebra) { return Parser(text, algebra).parse(); }

std::string format(const GradedPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (first) {
      write_term(os, *f.algebra(), m, c);
      first = false;
    } else if (sgn(c) < 0) {
      os << " - ";
      write_term(os, *f.algebra(), m, Rational(-c));
    } else {
      os << " + ";
      write_term(os, *f.algebra(), m, c);
    }
  }
  return os.str();
}

}  // namespace rcalg
