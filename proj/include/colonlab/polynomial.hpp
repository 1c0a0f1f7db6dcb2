#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colonlab/field.hpp"
#include "colonlab/monomial.hpp"
#include "colonlab/ring.hpp"

namespace colonlab {

struct Term {
  FieldElement coeff;
  Monomial monomial;
};

// Sparse polynomial: nonzero terms strictly descending in the ring order.
// The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial monomial(RingPtr ring, Monomial m);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().monomial.is_one(); }

  // Require a nonzero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const FieldElement& leading_coefficient() const { return leading_term().coeff; }

  std::uint32_t total_degree() const;
  struct Homogeneity {
    bool homogeneous;
    // Empty for the zero polynomial or when not homogeneous.
    std::optional<std::uint32_t> degree;
  };
  Homogeneity homogeneity() const;
  bool is_homogeneous() const { return homogeneity().homogeneous; }

  // All terms but the leading one.
  Polynomial tail() const;
  Polynomial monic() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const FieldElement& c, const Monomial& m) const;
  // *this - c * m * g, computed in one merge pass.
  Polynomial minus_term_times(const FieldElement& c, const Monomial& m, const Polynomial& g) const;

  // Re-embeds into `target` by a coordinate map: exponent i of the result
  // is exponent source_index[i] of this polynomial (or 0 when negative).
  Polynomial remap(RingPtr target, std::span<const int> source_index) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Ring& ring, const Monomial& m);

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline Polynomial poly_scale(const FieldElement& c, const Polynomial& f) { return f.scaled(c); }

}  // namespace colonlab
