#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace colonlab {

class FieldElement;

// Coefficient field: a prime field F_p (2 <= p < 2^31) or the rationals.
class Field {
 public:
  enum class Kind { Prime, Rationals };

  static Field prime(std::int64_t p);
  static Field rationals() { return Field(0); }
  // Accepts "Q" or "F<p>", e.g. "F2", "F32003".
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return p_ == 0 ? Kind::Rationals : Kind::Prime; }
  bool is_prime() const noexcept { return p_ != 0; }
  // 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_integer(const mpz_class& value) const;
  // Throws ArithmeticError when the denominator vanishes in the field.
  FieldElement from_fraction(const mpz_class& num, const mpz_class& den) const;
  // Residue must already lie in [0, p).
  FieldElement from_residue(std::uint32_t residue) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime_u32(std::uint64_t n);

// Immutable element of a Field. Prime-field elements hold a reduced residue;
// rationals are kept in lowest terms with a positive denominator.
class FieldElement {
 public:
  Field field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  // Prime fields only.
  std::uint32_t residue() const;
  // Rationals only.
  const mpq_class& rational() const;

  FieldElement inverse() const;
  std::string to_string() const;
  // True when the printed form starts with '-' (only possible over Q).
  bool is_negative() const noexcept;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  friend class Field;
  FieldElement(std::uint32_t p, std::uint32_t residue) : p_(p), value_(residue) {}
  explicit FieldElement(mpq_class q) : p_(0), value_(std::move(q)) {}

  std::uint32_t p_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace colonlab
