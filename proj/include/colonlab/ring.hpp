#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colonlab/field.hpp"
#include "colonlab/monomial.hpp"

namespace colonlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Polynomial ring k[x1,...,xn] with x1 > x2 > ... > xn and a fixed order.
class Ring {
 public:
  // Validates: at least one variable, identifiers unique and matching
  // [A-Za-z][A-Za-z0-9_]*.
  static RingPtr make(std::vector<std::string> variables, Field field,
                      MonomialOrder order = MonomialOrder::degrevlex());

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_vars() const noexcept { return variables_.size(); }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Monomial one() const { return Monomial(num_vars()); }

  // k[t, x1..xn] under Elim(1), t a fresh identifier, prepended (greatest).
  RingPtr with_elimination_variable() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(std::vector<std::string> variables, Field field, MonomialOrder order)
      : variables_(std::move(variables)), field_(field), order_(order) {}

  std::vector<std::string> variables_;
  Field field_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what);
bool is_valid_identifier(std::string_view name) noexcept;

}  // namespace colonlab
