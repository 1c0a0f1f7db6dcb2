#pragma once

// Independent linear-algebra model of an Artinian quotient A = R/J. It uses
// normal forms only to build multiplication matrices; every ideal-theoretic
// quantity (images, products, annihilators, lengths) is then computed by
// exact row reduction, never by the Groebner-side colon/intersection/power
// routines it is meant to check.

#include <span>
#include <vector>

#include "colonlab/hilbert.hpp"
#include "colonlab/ideal_ops.hpp"
#include "colonlab/linalg.hpp"

namespace colonlab {

// Row space of a matrix, kept in reduced row echelon form.
class Subspace {
 public:
  static Subspace span(DenseMatrix rows);
  static Subspace zero(Field field, std::size_t ambient_dimension);
  static Subspace full(Field field, std::size_t ambient_dimension);

  const DenseMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::size_t dimension() const noexcept { return basis_.rows(); }
  std::size_t ambient_dimension() const noexcept { return basis_.cols(); }

  bool contains(std::span<const FieldElement> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);

 private:
  Subspace(DenseMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  DenseMatrix basis_;
  std::vector<std::size_t> pivots_;
};

class VectorSpaceModel {
 public:
  // Throws InternalError if the multiplication matrices do not commute.
  static VectorSpaceModel build(const QuotientRing& a);

  const Field& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t num_vars() const noexcept { return variable_actions_.size(); }

  // Column j holds the coordinates of x_var * basis_j.
  DenseMatrix multiplication_matrix(std::size_t var) const;
  // Transposed form acting on row vectors: v * action(var) = coords(x_var * v).
  const DenseMatrix& action(std::size_t var) const { return variable_actions_.at(var); }
  // v * element_action(u) = coords(u * v).
  DenseMatrix element_action(std::span<const FieldElement> u) const;

  std::vector<FieldElement> coordinates(const Polynomial& f) const;
  std::vector<FieldElement> multiply(std::span<const FieldElement> u,
                                     std::span<const FieldElement> v) const;

  // Stable under multiplication by every variable, i.e. an ideal of A.
  bool is_ideal(const Subspace& v) const;

 private:
  VectorSpaceModel(const QuotientRing& a);

  Field field_;
  Ideal defining_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<DenseMatrix> variable_actions_;
  // basis_actions_[j] = action of the standard monomial basis_j.
  std::vector<DenseMatrix> basis_actions_;
};

inline VectorSpaceModel build_model(const QuotientRing& a) { return VectorSpaceModel::build(a); }

// Image of K in A: the closure of K's generator normal forms under the
// multiplication matrices.
Subspace subspace_of_ideal(const VectorSpaceModel& model, const Ideal& k);

// {a in A : a * V = 0}. V must be an ideal of A.
Subspace annihilator(const VectorSpaceModel& model, const Subspace& v);

// V^k as the span of iterated products; V^0 = A.
Subspace oracle_power(const VectorSpaceModel& model, const Subspace& v, std::size_t k);

inline std::size_t oracle_length(const Subspace& v) { return v.dimension(); }

// Dimension differences of V^0 ⊇ V ⊇ V^2 ⊇ ... for V the image of K.
HilbertTable oracle_filtration_hilbert(const VectorSpaceModel& model, const Ideal& k);

// dim (0 : m).
std::size_t oracle_socle_dimension(const VectorSpaceModel& model);

}  // namespace colonlab
