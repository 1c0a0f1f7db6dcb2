#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "colonlab/ideal.hpp"

namespace colonlab {

// Generators concatenated / pairwise products / iterated product with
// I^0 = (1). Zero and duplicate generators are dropped.
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& ideal, long long k);

// m^i: generated by every monomial of total degree exactly i.
Ideal irrelevant_power(const RingPtr& ring, long long i);
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree);

// Elimination: <t*I, (1-t)*J> in k[t, x] under Elim(1), t-free part.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

// I : (f), as (I ∩ (f)) / f with every division checked exact.
Ideal colon(const Ideal& ideal, const Polynomial& f);
// I : J = ∩ over the basis elements f of J of I : (f). J must be nonzero.
Ideal colon(const Ideal& ideal, const Ideal& by);

// Throws InternalError unless f divides g.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

// Monomials outside the leading-monomial ideal of `ideal`, ascending in
// the ring order. Throws PreconditionError naming the first variable with
// no pure-power leading monomial when the quotient is not Artinian. The
// unit ideal has no standard monomials.
std::vector<Monomial> standard_monomials(const Ideal& ideal);

// Artinian quotient R/J with its standard-monomial basis.
class QuotientRing {
 public:
  const RingPtr& ring() const noexcept { return defining_.ring(); }
  const Ideal& defining() const noexcept { return defining_; }
  const std::vector<Monomial>& standard_monomials() const noexcept { return basis_; }
  std::size_t length() const noexcept { return basis_.size(); }

  std::optional<std::size_t> index_of(const Monomial& m) const;
  // Coordinates of the normal form of f in the standard-monomial basis.
  std::vector<FieldElement> coordinates(const Polynomial& f) const;

  // The irrelevant ideal m = (x1, ..., xn) of the ambient ring.
  Ideal maximal_ideal() const { return irrelevant_power(ring(), 1); }

 private:
  friend QuotientRing make_quotient(const Ideal& defining);
  QuotientRing(Ideal defining, std::vector<Monomial> basis);

  Ideal defining_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

QuotientRing make_quotient(const Ideal& defining);

// J : m as an ambient ideal (contains J).
Ideal socle(const QuotientRing& a);
std::size_t socle_dimension(const QuotientRing& a);
bool is_gorenstein(const QuotientRing& a);

// Ambient preimage J + I^k of the k-th power of the image of I in A = R/J.
Ideal quotient_power(const QuotientRing& a, const Ideal& ideal, long long k);

// L_0 = (1), L_1 = J + I, ..., stopping at the first L_k equal to J (kept as
// the last entry). Throws UsageError when J + I = (1) and PreconditionError
// when the image of I is not nilpotent within length(A) + 1 steps.
std::vector<Ideal> quotient_power_sequence(const QuotientRing& a, const Ideal& ideal);

}  // namespace colonlab
