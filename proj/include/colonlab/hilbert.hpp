#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "colonlab/ideal_ops.hpp"

namespace colonlab {

struct HilbertTable {
  enum class Kind { GradedPieces, FiltrationQuotients };

  std::vector<std::size_t> values;  // indexed 0..delta
  std::size_t delta = 0;
  Kind kind = Kind::GradedPieces;

  friend bool operator==(const HilbertTable&, const HilbertTable&) = default;
};

std::string to_string(const HilbertTable& table);

// Number of standard monomials of J; (1) has length 0.
std::size_t length_of_quotient(const Ideal& defining);

// values[d] = number of standard monomials of degree d. Requires a
// homogeneous defining ideal.
HilbertTable graded_hilbert(const QuotientRing& a);

// Largest i with I^i not contained in J.
std::size_t nilpotency_index(const QuotientRing& a, const Ideal& ideal);

// values[i] = l(A/I^{i+1}) - l(A/I^i) for i = 0..delta.
HilbertTable filtration_hilbert(const QuotientRing& a, const Ideal& ideal);

// Same table from an already computed power sequence (see
// quotient_power_sequence).
HilbertTable filtration_hilbert(const std::vector<Ideal>& power_sequence);

bool is_symmetric(const HilbertTable& table);

}  // namespace colonlab
