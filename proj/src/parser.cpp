#include "colonlab/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include <gmpxx.h>

#include "colonlab/errors.hpp"

namespace colonlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, char separator)
      : text_(text), ring_(ring), separator_(separator) {}

  Polynomial parse_single() {
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip_ws();
    if (at_end()) return out;
    while (true) {
      out.push_back(expr());
      skip_ws();
      if (at_end()) break;
      if (peek() != separator_) {
        fail("expected '" + std::string(1, separator_) + "' between polynomials, found '" +
             std::string(1, peek()) + "'");
      }
      advance();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() != c || at_end()) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(at_end() ? std::string("unexpected end of input, expected '") + c + "'"
                    : std::string("expected '") + c + "', found '" + peek() + "'");
    }
  }

  mpz_class uint_literal() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())) || at_end()) fail("expected an unsigned integer");
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return mpz_class(digits, 10);
  }

  std::uint32_t exponent() {
    skip_ws();
    if (peek() == '-') fail("negative exponent");
    mpz_class e = uint_literal();
    if (e > std::numeric_limits<std::uint32_t>::max() / 2) fail("exponent too large");
    return static_cast<std::uint32_t>(e.get_ui());
  }

  Polynomial power(const Polynomial& base, std::uint32_t e) const {
    Polynomial result = Polynomial::constant(ring_, ring_->field().one());
    for (std::uint32_t i = 0; i < e; ++i) result = result * base;
    return result;
  }

  Polynomial coeff() {
    mpz_class num = uint_literal();
    if (accept('/')) {
      const std::size_t line = line_, column = column_;
      mpz_class den = uint_literal();
      if (den == 0) throw ParseError("zero denominator", line, column);
      try {
        return Polynomial::constant(ring_, ring_->field().from_fraction(num, den));
      } catch (const ArithmeticError& e) {
        throw ParseError(e.what(), line, column);
      }
    }
    return Polynomial::constant(ring_, ring_->field().from_integer(num));
  }

  bool starts_factor() {
    skip_ws();
    return !at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(');
  }

  bool starts_coeff() {
    skip_ws();
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  Polynomial factor() {
    skip_ws();
    Polynomial base(ring_);
    if (accept('(')) {
      base = expr();
      expect(')');
    } else if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      const std::size_t line = line_, column = column_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        advance();
      }
      auto index = ring_->index_of(name);
      if (!index) throw ParseError("unknown variable '" + name + "'", line, column);
      base = Polynomial::variable(ring_, *index);
    } else {
      fail(at_end() ? "unexpected end of input" : "unexpected character '" + std::string(1, peek()) + "'");
    }
    if (accept('^')) return power(base, exponent());
    return base;
  }

  Polynomial term() {
    bool last_was_coeff = starts_coeff();
    Polynomial acc = last_was_coeff ? coeff() : factor();
    while (true) {
      if (accept('*')) {
        last_was_coeff = starts_coeff();
        acc = acc * (last_was_coeff ? coeff() : factor());
      } else if (last_was_coeff && starts_factor()) {
        last_was_coeff = false;
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  std::string_view text_;
  const RingPtr& ring_;
  char separator_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, '\0').parse_single();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              char separator) {
  return Parser(text, ring, separator).parse_list();
}

}  // namespace colonlab
