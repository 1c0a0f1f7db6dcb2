#pragma once

// Hand-rolled generators for property tests.

#include <random>
#include <vector>

#include <gmpxx.h>

#include "colonlab/polynomial.hpp"

namespace colonlab::testing {

inline FieldElement random_element(const Field& field, std::mt19937_64& rng) {
  if (field.is_prime()) {
    std::uniform_int_distribution<std::uint32_t> d(0, field.characteristic() - 1);
    return field.from_residue(d(rng));
  }
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  return field.from_fraction(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline FieldElement random_nonzero(const Field& field, std::mt19937_64& rng) {
  while (true) {
    FieldElement e = random_element(field, rng);
    if (!e.is_zero()) return e;
  }
}

inline Monomial random_monomial(std::size_t num_vars, std::uint32_t max_exponent, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, max_exponent);
  Monomial::Exponents e(num_vars);
  for (auto& x : e) x = d(rng);
  return Monomial(std::move(e));
}

inline Monomial random_monomial_of_degree_at_most(std::size_t num_vars, std::uint32_t max_degree,
                                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, num_vars - 1);
  Monomial::Exponents e(num_vars, 0);
  const std::uint32_t d = deg(rng);
  for (std::uint32_t k = 0; k < d; ++k) ++e[var(rng)];
  return Monomial(std::move(e));
}

inline Polynomial random_polynomial(const RingPtr& ring, std::size_t max_terms, std::uint32_t max_degree,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::vector<Term> terms;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    terms.push_back({random_element(ring->field(), rng),
                     random_monomial_of_degree_at_most(ring->num_vars(), max_degree, rng)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero_polynomial(const RingPtr& ring, std::size_t max_terms,
                                            std::uint32_t max_degree, std::mt19937_64& rng) {
  while (true) {
    Polynomial p = random_polynomial(ring, max_terms, max_degree, rng);
    if (!p.is_zero()) return p;
  }
}

inline Polynomial random_homogeneous(const RingPtr& ring, std::size_t max_terms, std::uint32_t degree,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> var(0, ring->num_vars() - 1);
  while (true) {
    std::vector<Term> terms;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial::Exponents e(ring->num_vars(), 0);
      for (std::uint32_t k = 0; k < degree; ++k) ++e[var(rng)];
      terms.push_back({random_element(ring->field(), rng), Monomial(std::move(e))});
    }
    Polynomial p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

}  // namespace colonlab::testing
