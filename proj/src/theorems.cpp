#include "colonlab/theorems.hpp"

#include <future>
#include <numeric>
#include <string>

#include "colonlab/errors.hpp"
#include "colonlab/parser.hpp"

namespace colonlab {

namespace {

struct CompleteIntersection {
  Ideal ideal;
  std::vector<std::uint32_t> degrees;
  std::size_t delta;
};

CompleteIntersection check_ci_hypotheses(std::span<const Polynomial> generators) {
  if (generators.empty()) throw PreconditionError("no generators given");
  const RingPtr& ring = generators.front().ring();
  if (generators.size() != ring->num_vars()) {
    throw PreconditionError("expected " + std::to_string(ring->num_vars()) +
                            " generators (one per variable), got " + std::to_string(generators.size()));
  }
  std::vector<std::uint32_t> degrees;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring(), "complete intersection");
    const auto h = g.homogeneity();
    if (!h.homogeneous || !h.degree) {
      throw PreconditionError("generator is not homogeneous: " + g.to_string());
    }
    if (*h.degree == 0) throw PreconditionError("generator of degree 0: " + g.to_string());
    degrees.push_back(*h.degree);
  }
  Ideal ideal(ring, {generators.begin(), generators.end()});
  standard_monomials(ideal);  // throws when not Artinian (height < n)
  const std::size_t sum = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  return {std::move(ideal), std::move(degrees), sum - ring->num_vars()};
}

QuotientRing gorenstein_quotient(const Ideal& defining) {
  QuotientRing a = make_quotient(defining);
  if (a.length() == 0) throw PreconditionError("quotient is the zero ring");
  if (!is_gorenstein(a)) {
    throw PreconditionError("quotient is not Gorenstein (socle dimension " +
                            std::to_string(socle_dimension(a)) + ")");
  }
  return a;
}

// 0 : I^i versus I^{delta+1-i} over i = 0..delta, from the power sequence.
LadderReport colon_ladder(const QuotientRing& a, const std::vector<Ideal>& powers) {
  const std::size_t delta = powers.size() - 2;
  LadderReport report;
  report.delta = delta;
  std::vector<std::future<LadderRung>> rungs;
  for (std::size_t i = 0; i <= delta; ++i) {
    rungs.push_back(std::async(std::launch::async, [&a, &powers, i, delta] {
      const Ideal lhs = colon(a.defining(), powers[i]);
      const Ideal& rhs = powers[delta + 1 - i];
      return LadderRung{i, lhs.groebner_basis().size(), rhs.groebner_basis().size(), ideal_equal(lhs, rhs)};
    }));
  }
  report.holds = true;
  for (auto& r : rungs) {
    report.per_i.push_back(r.get());
    report.holds = report.holds && report.per_i.back().equal;
  }
  return report;
}

}  // namespace

LadderReport verify_macaulay_ladder(std::span<const Polynomial> generators) {
  const CompleteIntersection ci = check_ci_hypotheses(generators);
  const RingPtr& ring = ci.ideal.ring();
  LadderReport report;
  report.delta = ci.delta;
  std::vector<std::future<LadderRung>> rungs;
  for (std::size_t i = 0; i <= ci.delta + 1; ++i) {
    rungs.push_back(std::async(std::launch::async, [&ci, &ring, i] {
      const Ideal lhs = colon(ci.ideal, irrelevant_power(ring, static_cast<long long>(i)));
      const long long exponent = static_cast<long long>(ci.delta) + 1 - static_cast<long long>(i);
      const Ideal rhs = exponent <= 0 ? Ideal::unit(ring)
                                      : ideal_sum(ci.ideal, irrelevant_power(ring, exponent));
      return LadderRung{i, lhs.groebner_basis().size(), rhs.groebner_basis().size(), ideal_equal(lhs, rhs)};
    }));
  }
  report.holds = true;
  for (auto& r : rungs) {
    report.per_i.push_back(r.get());
    report.holds = report.holds && report.per_i.back().equal;
  }
  return report;
}

SymmetryReport verify_symmetry(const Ideal& defining) {
  if (!defining.is_homogeneous()) throw PreconditionError("defining ideal is not homogeneous");
  const QuotientRing a = gorenstein_quotient(defining);
  SymmetryReport report;
  report.table = graded_hilbert(a);
  report.symmetric = is_symmetric(report.table);
  return report;
}

EquivalenceReport verify_main_equivalence(const QuotientRing& a, const Ideal& ideal) {
  if (a.length() == 0) throw PreconditionError("quotient is the zero ring");
  if (!is_gorenstein(a)) {
    throw PreconditionError("quotient is not Gorenstein (socle dimension " +
                            std::to_string(socle_dimension(a)) + ")");
  }
  if (ideal_sum(a.defining(), ideal).is_unit()) {
    throw PreconditionError("ideal is not m-primary: its image in the quotient is the unit ideal");
  }
  const auto powers = quotient_power_sequence(a, ideal);
  EquivalenceReport report;
  report.length = a.length();
  report.ladder = colon_ladder(a, powers);
  report.delta = report.ladder.delta;
  report.ladder_holds = report.ladder.holds;
  report.table = filtration_hilbert(powers);
  report.symmetric = is_symmetric(report.table);
  report.consistent = report.ladder_holds == report.symmetric;
  return report;
}

LadderReport verify_corollary(const Ideal& defining) {
  if (!defining.is_homogeneous()) {
    for (const auto& g : defining.generators()) {
      if (!g.is_homogeneous()) {
        throw PreconditionError("defining ideal is not homogeneous: " + g.to_string());
      }
    }
    throw PreconditionError("defining ideal is not homogeneous");
  }
  const QuotientRing a = gorenstein_quotient(defining);
  return colon_ladder(a, quotient_power_sequence(a, a.maximal_ideal()));
}

bool check_delta_identity(std::span<const Polynomial> generators) {
  const CompleteIntersection ci = check_ci_hypotheses(generators);
  const HilbertTable table = graded_hilbert(make_quotient(ci.ideal));
  return table.delta == ci.delta && table.values.back() == 1;
}

RingPtr storch_ring() {
  static const RingPtr ring = Ring::make({"X", "Y"}, Field::prime(2));
  return ring;
}

Ideal storch_ideal() {
  const RingPtr ring = storch_ring();
  return Ideal(ring, parse_polynomial_list("X^2+Y^2, X^2+X*Y+Y^3", ring));
}

EquivalenceReport storch_counterexample() {
  const QuotientRing a = make_quotient(storch_ideal());
  if (!is_gorenstein(a)) throw InternalError("Storch quotient is expected to be Gorenstein");
  return verify_main_equivalence(a, a.maximal_ideal());
}

StorchComparison compare_with_published(const EquivalenceReport& report) {
  StorchComparison c;
  // verify_main_equivalence only returns for Gorenstein quotients
  c.gorenstein = true;
  c.asymmetric = !report.symmetric;
  c.ladder_fails = !report.ladder_holds;
  c.consistent = report.consistent;
  c.series_matches = report.table.values == kStorchPublishedSeries;
  c.length_matches = report.length == kStorchPublishedLength;
  return c;
}

std::vector<Polynomial> random_complete_intersection(const RingPtr& ring,
                                                     std::span<const std::uint32_t> degrees,
                                                     std::mt19937_64& rng, int max_attempts) {
  if (!ring->field().is_prime()) throw UsageError("random complete intersections need a prime field");
  const std::uint32_t p = ring->field().characteristic();
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Polynomial> gens;
    for (std::uint32_t d : degrees) {
      std::vector<Term> terms;
      for (auto& m : monomials_of_degree(ring->num_vars(), d)) {
        terms.push_back({ring->field().from_residue(coeff(rng)), std::move(m)});
      }
      gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    try {
      standard_monomials(Ideal(ring, gens));
      return gens;
    } catch (const PreconditionError&) {
    }
  }
  throw PreconditionError("no Artinian sample found in " + std::to_string(max_attempts) + " attempts");
}

RandomInstance random_ci_instance(const Field& field, std::mt19937_64& rng, std::uint32_t max_degree) {
  std::uniform_int_distribution<int> nvars(2, 3);
  std::uniform_int_distribution<std::uint32_t> degree(1, max_degree);
  const int n = nvars(rng);
  static const std::vector<std::string> names{"x", "y", "z"};
  RandomInstance inst;
  inst.ring = Ring::make({names.begin(), names.begin() + n}, field);
  for (int i = 0; i < n; ++i) inst.degrees.push_back(degree(rng));
  inst.generators = random_complete_intersection(inst.ring, inst.degrees, rng);
  return inst;
}

}  // namespace colonlab
