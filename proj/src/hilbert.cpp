#include "colonlab/hilbert.hpp"

#include "colonlab/errors.hpp"

namespace colonlab {

std::string to_string(const HilbertTable& table) {
  std::string out = "(";
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(table.values[i]);
  }
  return out + ")";
}

std::size_t length_of_quotient(const Ideal& defining) { return standard_monomials(defining).size(); }

HilbertTable graded_hilbert(const QuotientRing& a) {
  if (!a.defining().is_homogeneous()) {
    throw PreconditionError("graded Hilbert function needs a homogeneous defining ideal");
  }
  if (a.length() == 0) throw PreconditionError("graded Hilbert function of the zero ring");
  HilbertTable table;
  table.kind = HilbertTable::Kind::GradedPieces;
  for (const auto& m : a.standard_monomials()) {
    if (m.degree() >= table.values.size()) table.values.resize(m.degree() + 1, 0);
    ++table.values[m.degree()];
  }
  table.delta = table.values.size() - 1;
  return table;
}

std::size_t nilpotency_index(const QuotientRing& a, const Ideal& ideal) {
  return quotient_power_sequence(a, ideal).size() - 2;
}

HilbertTable filtration_hilbert(const std::vector<Ideal>& power_sequence) {
  if (power_sequence.size() < 2) throw UsageError("power sequence too short");
  std::vector<std::size_t> lengths;
  lengths.reserve(power_sequence.size());
  for (const auto& p : power_sequence) lengths.push_back(length_of_quotient(p));
  HilbertTable table;
  table.kind = HilbertTable::Kind::FiltrationQuotients;
  table.delta = power_sequence.size() - 2;
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    if (lengths[i + 1] < lengths[i]) throw InternalError("power lengths are not monotone");
    table.values.push_back(lengths[i + 1] - lengths[i]);
  }
  return table;
}

HilbertTable filtration_hilbert(const QuotientRing& a, const Ideal& ideal) {
  return filtration_hilbert(quotient_power_sequence(a, ideal));
}

bool is_symmetric(const HilbertTable& table) {
  const auto& v = table.values;
  for (std::size_t i = 0, j = v.size(); i < v.size(); ++i) {
    if (v[i] != v[--j]) return false;
  }
  return true;
}

}  // namespace colonlab
