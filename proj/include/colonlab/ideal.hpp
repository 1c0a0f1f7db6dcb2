#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "colonlab/groebner.hpp"
#include "colonlab/polynomial.hpp"

namespace colonlab {

// An ideal of a polynomial ring given by generators. The reduced Groebner
// basis is computed on first use and shared by all copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  // Wraps an already reduced Groebner basis; the cache is pre-populated.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> reduced_basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  // Monic, autoreduced, sorted by descending leading monomial.
  const std::vector<Polynomial>& groebner_basis() const;
  std::vector<Monomial> leading_monomials() const;

  bool contains(const Polynomial& f) const;
  // Every generator of `other` lies in this ideal.
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return groebner_basis().empty(); }
  // Every element of the reduced basis is homogeneous.
  bool is_homogeneous() const;

  Polynomial reduce(const Polynomial& f) const;
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal);
// Reduced Groebner bases coincide.
bool ideal_equal(const Ideal& a, const Ideal& b);
inline bool operator==(const Ideal& a, const Ideal& b) { return ideal_equal(a, b); }

}  // namespace colonlab
