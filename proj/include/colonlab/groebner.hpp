#pragma once

#include <span>
#include <vector>

#include "colonlab/polynomial.hpp"

namespace colonlab {

// Full multivariate division remainder: no term of the result is divisible
// by a leading monomial of `divisors`. The greatest reducible term is
// always reduced first, by the first eligible divisor in list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

// (L/lt(f))*f - (L/lt(g))*g with L = lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct BuchbergerOptions {
  // Buchberger's chain criterion. Off by default; the coprime criterion is
  // always applied.
  bool chain_criterion = false;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

// A (not necessarily reduced) Groebner basis of the ideal generated by
// `generators`. Zero generators are dropped; an empty input yields an empty
// basis. Pairs are processed by the normal strategy: smallest lcm degree
// first, ties by (i, j).
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const BuchbergerOptions& options = {},
                                   BuchbergerStats* stats = nullptr);

// Monic autoreduction sorted by descending leading monomial. Applied to a
// Groebner basis this yields the unique reduced Groebner basis.
std::vector<Polynomial> reduce_gb(std::span<const Polynomial> basis);

// buchberger followed by reduce_gb.
std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> generators,
                                               const BuchbergerOptions& options = {});

// Every S-polynomial of `basis` reduces to zero modulo `basis`.
bool is_groebner_basis(std::span<const Polynomial> basis);

}  // namespace colonlab
