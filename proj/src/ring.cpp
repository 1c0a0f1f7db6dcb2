#include "colonlab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "colonlab/errors.hpp"

namespace colonlab {

bool is_valid_identifier(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

RingPtr Ring::make(std::vector<std::string> variables, Field field, MonomialOrder order) {
  if (variables.empty()) throw UsageError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!is_valid_identifier(v)) throw UsageError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw UsageError("duplicate variable name '" + v + "'");
  }
  return RingPtr(new Ring(std::move(variables), field, order));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr Ring::with_elimination_variable() const {
  std::string fresh = "t";
  for (int suffix = 0; index_of(fresh); ++suffix) fresh = "t_" + std::to_string(suffix);
  std::vector<std::string> vars;
  vars.reserve(variables_.size() + 1);
  vars.push_back(fresh);
  vars.insert(vars.end(), variables_.begin(), variables_.end());
  return make(std::move(vars), field_, MonomialOrder::elim(1));
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
  if (!same_ring(a, b)) throw UsageError(std::string(what) + ": operands live in different rings");
}

}  // namespace colonlab
