#pragma once

// Brute-force checks that share no code path with the Groebner engine or
// the oracle's row reduction: naive staircase enumeration and Macaulay
// matrix membership with a local elimination routine.

#include <map>
#include <span>
#include <vector>

#include "colonlab/polynomial.hpp"

namespace colonlab::testing {

// All exponent vectors with entries <= bound not divisible by any lead.
inline std::vector<Monomial> brute_staircase(std::span<const Monomial> leads, std::size_t num_vars,
                                             std::uint32_t bound) {
  std::vector<Monomial> out;
  Monomial::Exponents e(num_vars, 0);
  while (true) {
    Monomial m(e);
    bool divisible = false;
    for (const auto& l : leads) divisible = divisible || l.divides(m);
    if (!divisible) out.push_back(m);
    std::size_t k = 0;
    while (k < num_vars && e[k] == bound) e[k++] = 0;
    if (k == num_vars) break;
    ++e[k];
  }
  return out;
}

inline std::vector<Monomial> all_monomials_up_to(std::size_t num_vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  Monomial::Exponents e(num_vars, 0);
  while (true) {
    Monomial m(e);
    if (m.degree() <= degree) out.push_back(m);
    std::size_t k = 0;
    while (k < num_vars && e[k] == degree) e[k++] = 0;
    if (k == num_vars) break;
    ++e[k];
  }
  return out;
}

// Incremental echelon basis over FieldElement vectors.
class NaiveEchelon {
 public:
  NaiveEchelon(Field field, std::size_t width) : field_(field), width_(width) {}

  // Returns the reduced vector (zero iff v was in the span).
  std::vector<FieldElement> reduce(std::vector<FieldElement> v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      const FieldElement c = v[pivot];
      for (std::size_t k = 0; k < width_; ++k) v[k] = v[k] - c * row[k];
    }
    return v;
  }

  bool insert(std::vector<FieldElement> v) {
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < width_ && v[pivot].is_zero()) ++pivot;
    if (pivot == width_) return false;
    const FieldElement inv = v[pivot].inverse();
    for (auto& x : v) x = x * inv;
    for (auto& [p, row] : rows_) {
      if (row[pivot].is_zero()) continue;
      const FieldElement c = row[pivot];
      for (std::size_t k = 0; k < width_; ++k) row[k] = row[k] - c * v[k];
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const std::vector<FieldElement>& v) const {
    for (const auto& x : reduce(v)) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  std::size_t dimension() const { return rows_.size(); }

 private:
  Field field_;
  std::size_t width_;
  std::map<std::size_t, std::vector<FieldElement>> rows_;
};

// f in <gens> certified by a Macaulay matrix of all multiples m*g with
// total degree <= degree_bound. A false answer only means "not certified
// at this degree".
inline bool macaulay_member(const Polynomial& f, std::span<const Polynomial> gens,
                            std::uint32_t degree_bound) {
  const RingPtr& ring = f.ring();
  const auto cols = all_monomials_up_to(ring->num_vars(), degree_bound);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    index[{cols[i].exponents().begin(), cols[i].exponents().end()}] = i;
  }
  auto vec = [&](const Polynomial& p) {
    std::vector<FieldElement> v(cols.size(), ring->field().zero());
    for (const auto& t : p.terms()) {
      auto it = index.find({t.monomial.exponents().begin(), t.monomial.exponents().end()});
      if (it == index.end()) return std::vector<FieldElement>{};
      v[it->second] = t.coeff;
    }
    return v;
  };
  NaiveEchelon span(ring->field(), cols.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (const auto& m : cols) {
      const Polynomial multiple = g.times_term(ring->field().one(), m);
      if (multiple.total_degree() > degree_bound) continue;
      span.insert(vec(multiple));
    }
  }
  const auto target = vec(f);
  if (target.empty()) return false;
  return span.contains(target);
}

}  // namespace colonlab::testing
