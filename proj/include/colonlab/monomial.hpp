#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace colonlab {

// Exponent vector over the ambient variables, with cached total degree.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 8>;

  Monomial() = default;
  // The monomial 1 in `num_vars` variables.
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(Exponents exponents);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  static Monomial variable(std::size_t num_vars, std::size_t index, std::uint32_t power = 1);

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exponents_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept {
    return {exponents_.data(), exponents_.size()};
  }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept;
  // Index of the only variable appearing, if this is a pure power x_i^k, k > 0.
  int pure_power_variable() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

 private:
  Exponents exponents_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elim };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  // Block order: the first `k` coordinates by degrevlex dominate, ties
  // broken by degrevlex on the remaining coordinates.
  static MonomialOrder elim(std::size_t k);
  static MonomialOrder parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  std::string name() const;

  // Throws UsageError on mismatched exponent lengths.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
  Kind kind_;
  std::size_t block_;
};

}  // namespace colonlab
