#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "colonlab/hilbert.hpp"
#include "colonlab/ideal_ops.hpp"

namespace colonlab {

struct LadderRung {
  std::size_t i = 0;
  std::size_t lhs_gb_size = 0;
  std::size_t rhs_gb_size = 0;
  bool equal = false;
};

struct LadderReport {
  std::size_t delta = 0;
  std::vector<LadderRung> per_i;
  bool holds = false;
};

struct EquivalenceReport {
  std::size_t delta = 0;
  std::size_t length = 0;
  bool ladder_holds = false;
  // 0 : I^i = I^{delta+1-i} checked for i = 0..delta.
  LadderReport ladder;
  HilbertTable table;
  bool symmetric = false;
  bool consistent = false;
};

struct SymmetryReport {
  HilbertTable table;
  bool symmetric = false;
};

// n homogeneous generators of positive degree in n variables with Artinian
// quotient. Checks I : m^i = I + m^{delta+1-i} for i = 0..delta+1 where
// delta = d_1 + ... + d_n - n. Hypothesis violations throw
// PreconditionError.
LadderReport verify_macaulay_ladder(std::span<const Polynomial> generators);

// Graded Hilbert function of R/J and whether it is symmetric. Requires J
// homogeneous, R/J Artinian and Gorenstein.
SymmetryReport verify_symmetry(const Ideal& defining);

// For Gorenstein A and I proper in A (so nilpotent): compares the colon
// ladder 0 : I^i = I^{delta+1-i}, i = 0..delta, with symmetry of the
// filtration Hilbert function.
EquivalenceReport verify_main_equivalence(const QuotientRing& a, const Ideal& ideal);

// 0 : m^i = m^{delta+1-i} for i = 0..delta, J homogeneous and Gorenstein.
LadderReport verify_corollary(const Ideal& defining);

// Top nonzero degree of the graded Hilbert function of R/I equals
// sum(d_i) - n, with value 1 there.
bool check_delta_identity(std::span<const Polynomial> generators);

// F_2[X, Y] / (X^2 + Y^2, X^2 + XY + Y^3).
RingPtr storch_ring();
Ideal storch_ideal();
// The equivalence report for I = m in the Storch quotient. Throws
// InternalError if the quotient is not Gorenstein.
EquivalenceReport storch_counterexample();

// Values published for the Storch example: associated graded series
// 1 + 2t + t^2 + t^3, hence length 5.
inline const std::vector<std::size_t> kStorchPublishedSeries{1, 2, 1, 1};
inline constexpr std::size_t kStorchPublishedLength = 5;

struct StorchComparison {
  bool gorenstein = false;
  bool asymmetric = false;
  bool ladder_fails = false;
  bool consistent = false;
  bool series_matches = false;
  bool length_matches = false;

  // The qualitative counterexample: Gorenstein, asymmetric, ladder fails.
  bool qualitative() const { return gorenstein && asymmetric && ladder_fails && consistent; }
  bool matches_published() const { return qualitative() && series_matches && length_matches; }
};

StorchComparison compare_with_published(const EquivalenceReport& report);

// Dense homogeneous polynomials of the given degrees with uniform
// coefficients, resampled (up to `max_attempts` times) until the quotient is
// Artinian.
std::vector<Polynomial> random_complete_intersection(const RingPtr& ring,
                                                     std::span<const std::uint32_t> degrees,
                                                     std::mt19937_64& rng, int max_attempts = 100);

struct RandomInstance {
  RingPtr ring;
  std::vector<std::uint32_t> degrees;
  std::vector<Polynomial> generators;
};

// n in {2, 3} variables, each degree uniform in 1..max_degree.
RandomInstance random_ci_instance(const Field& field, std::mt19937_64& rng,
                                  std::uint32_t max_degree = 4);

}  // namespace colonlab
