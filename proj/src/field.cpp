#include "colonlab/field.hpp"

#include <cctype>
#include <charconv>
#include <utility>

#include "colonlab/errors.hpp"

namespace colonlab {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field().characteristic() != b.field().characteristic()) {
    throw UsageError("field operands from different fields: " + a.field().name() +
                     " and " + b.field().name());
  }
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p < 2 || static_cast<std::uint64_t>(p) >= kMaxPrime) {
    throw UsageError("field characteristic must satisfy 2 <= p < 2^31, got " + std::to_string(p));
  }
  if (!is_prime_u32(static_cast<std::uint64_t>(p))) {
    throw UsageError("field characteristic is not prime: " + std::to_string(p));
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::int64_t p = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last) return prime(p);
  }
  throw UsageError("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t value) const {
  if (p_ == 0) return FieldElement(mpq_class(static_cast<long>(value)));
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElement(p_, static_cast<std::uint32_t>(r));
}

FieldElement Field::from_integer(const mpz_class& value) const {
  if (p_ == 0) return FieldElement(mpq_class(value));
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p_);
  return FieldElement(p_, static_cast<std::uint32_t>(r.get_ui()));
}

FieldElement Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (den == 0) throw ArithmeticError("division by zero in rational literal");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(std::move(q));
  }
  const FieldElement d = from_integer(den);
  if (d.is_zero()) {
    throw ArithmeticError("denominator " + den.get_str() + " vanishes in " + name());
  }
  return from_integer(num) * d.inverse();
}

FieldElement Field::from_residue(std::uint32_t residue) const {
  if (p_ == 0 || residue >= p_) throw UsageError("residue out of range for " + name());
  return FieldElement(p_, residue);
}

Field FieldElement::field() const { return Field(p_); }

bool FieldElement::is_zero() const noexcept {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (p_ != 0) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool FieldElement::is_negative() const noexcept {
  return p_ == 0 && sgn(std::get<mpq_class>(value_)) < 0;
}

std::uint32_t FieldElement::residue() const {
  if (p_ == 0) throw UsageError("residue() requested for a rational element");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& FieldElement::rational() const {
  if (p_ != 0) throw UsageError("rational() requested for a prime-field element");
  return std::get<mpq_class>(value_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  if (p_ != 0) return FieldElement(p_, inverse_mod(std::get<std::uint32_t>(value_), p_));
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return FieldElement(std::move(q));
}

std::string FieldElement::to_string() const {
  if (p_ != 0) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.p_ != 0) {
    std::uint32_t s = std::get<std::uint32_t>(a.value_) + std::get<std::uint32_t>(b.value_);
    if (s >= a.p_) s -= a.p_;
    return FieldElement(a.p_, s);
  }
  return FieldElement(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

FieldElement operator-(const FieldElement& a) {
  if (a.p_ != 0) {
    const std::uint32_t r = std::get<std::uint32_t>(a.value_);
    return FieldElement(a.p_, r == 0 ? 0 : a.p_ - r);
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(a.value_)));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.p_ != 0) return a + (-b);
  return FieldElement(mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.p_ != 0) {
    const std::uint64_t prod = std::uint64_t{std::get<std::uint32_t>(a.value_)} *
                               std::get<std::uint32_t>(b.value_);
    return FieldElement(a.p_, static_cast<std::uint32_t>(prod % a.p_));
  }
  return FieldElement(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.p_ == b.p_ && a.value_ == b.value_;
}

}  // namespace colonlab
