#include "colonlab/oracle.hpp"

#include "colonlab/errors.hpp"

namespace colonlab {

namespace {

DenseMatrix stack(const DenseMatrix& top, const DenseMatrix& bottom) {
  DenseMatrix out(top.field(), 0, top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r) out.append_row_from(top, r);
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row_from(bottom, r);
  return out;
}

// Rows: every basis row of `v` times every matrix in `actions`.
DenseMatrix images(const DenseMatrix& rows, std::span<const DenseMatrix> actions) {
  DenseMatrix out(rows.field(), 0, rows.cols());
  for (const auto& act : actions) {
    const DenseMatrix prod = rows * act;
    for (std::size_t r = 0; r < prod.rows(); ++r) out.append_row_from(prod, r);
  }
  return out;
}

}  // namespace

Subspace Subspace::span(DenseMatrix rows) {
  auto pivots = row_reduce(rows);
  return Subspace(std::move(rows), std::move(pivots));
}

Subspace Subspace::zero(Field field, std::size_t ambient_dimension) {
  return Subspace(DenseMatrix(field, 0, ambient_dimension), {});
}

Subspace Subspace::full(Field field, std::size_t ambient_dimension) {
  return span(DenseMatrix::identity(field, ambient_dimension));
}

bool Subspace::contains(std::span<const FieldElement> v) const {
  DenseMatrix m = basis_;
  m.append_row(v);
  return rank(std::move(m)) == dimension();
}

bool Subspace::contains(const Subspace& other) const { return (*this + other).dimension() == dimension(); }

Subspace operator+(const Subspace& a, const Subspace& b) { return Subspace::span(stack(a.basis_, b.basis_)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dimension() != b.ambient_dimension()) throw UsageError("subspace dimension mismatch");
  if (a.dimension() == 0 || b.dimension() == 0) return Subspace::zero(a.basis_.field(), a.ambient_dimension());
  // x*A + y*B = 0  =>  x*A lies in both row spaces
  const DenseMatrix kernel = left_kernel(stack(a.basis_, b.basis_));
  return Subspace::span(kernel.column_slice(0, a.dimension()) * a.basis_);
}

VectorSpaceModel::VectorSpaceModel(const QuotientRing& a)
    : field_(a.ring()->field()), defining_(a.defining()), basis_(a.standard_monomials()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

VectorSpaceModel VectorSpaceModel::build(const QuotientRing& a) {
  VectorSpaceModel model(a);
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->num_vars();
  const std::size_t dim = model.basis_.size();

  for (std::size_t v = 0; v < n; ++v) {
    DenseMatrix act(model.field_, 0, dim);
    const Polynomial xv = Polynomial::variable(ring, v);
    for (const auto& b : model.basis_) {
      act.append_row(model.coordinates(xv * Polynomial::monomial(ring, b)));
    }
    model.variable_actions_.push_back(std::move(act));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(model.variable_actions_[i] * model.variable_actions_[j] ==
            model.variable_actions_[j] * model.variable_actions_[i])) {
        throw InternalError("multiplication matrices of " + ring->variables()[i] + " and " +
                            ring->variables()[j] + " do not commute");
      }
    }
  }

  // The basis is ascending and closed under division, so b_j / x_v is
  // always an earlier basis element.
  for (std::size_t j = 0; j < dim; ++j) {
    const Monomial& b = model.basis_[j];
    if (b.is_one()) {
      model.basis_actions_.push_back(DenseMatrix::identity(model.field_, dim));
      continue;
    }
    std::size_t v = 0;
    while (b[v] == 0) ++v;
    const std::size_t prev = model.index_.at(b / Monomial::variable(n, v));
    model.basis_actions_.push_back(model.basis_actions_[prev] * model.variable_actions_[v]);
  }
  return model;
}

DenseMatrix VectorSpaceModel::multiplication_matrix(std::size_t var) const {
  return action(var).transposed();
}

DenseMatrix VectorSpaceModel::element_action(std::span<const FieldElement> u) const {
  if (u.size() != dimension()) throw UsageError("element_action: dimension mismatch");
  DenseMatrix out(field_, dimension(), dimension());
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j].is_zero()) continue;
    DenseMatrix term = basis_actions_[j];
    for (std::size_t r = 0; r < term.rows(); ++r) term.scale_row(r, u[j]);
    out = out + term;
  }
  return out;
}

std::vector<FieldElement> VectorSpaceModel::coordinates(const Polynomial& f) const {
  std::vector<FieldElement> out(dimension(), field_.zero());
  const Polynomial r = defining_.reduce(f);
  for (const auto& t : r.terms()) {
    auto it = index_.find(t.monomial);
    if (it == index_.end()) throw InternalError("normal form outside the standard monomials");
    out[it->second] = t.coeff;
  }
  return out;
}

std::vector<FieldElement> VectorSpaceModel::multiply(std::span<const FieldElement> u,
                                                     std::span<const FieldElement> v) const {
  return vector_times(v, element_action(u));
}

bool VectorSpaceModel::is_ideal(const Subspace& v) const {
  if (v.dimension() == 0) return true;
  return v.contains(Subspace::span(images(v.basis(), variable_actions_)));
}

Subspace subspace_of_ideal(const VectorSpaceModel& model, const Ideal& k) {
  DenseMatrix rows(model.field(), 0, model.dimension());
  for (const auto& g : k.generators()) rows.append_row(model.coordinates(g));
  Subspace current = Subspace::span(std::move(rows));
  std::vector<DenseMatrix> actions;
  for (std::size_t v = 0; v < model.num_vars(); ++v) actions.push_back(model.action(v));
  while (true) {
    Subspace next = current + Subspace::span(images(current.basis(), actions));
    if (next.dimension() == current.dimension()) return current;
    current = std::move(next);
  }
}

Subspace annihilator(const VectorSpaceModel& model, const Subspace& v) {
  if (!model.is_ideal(v)) throw UsageError("annihilator: subspace is not an ideal of the quotient");
  DenseMatrix stacked(model.field(), model.dimension(), 0);
  for (std::size_t r = 0; r < v.dimension(); ++r) {
    stacked = stacked.hconcat(model.element_action(v.basis().row(r)));
  }
  return Subspace::span(left_kernel(stacked));
}

Subspace oracle_power(const VectorSpaceModel& model, const Subspace& v, std::size_t k) {
  if (!model.is_ideal(v)) throw UsageError("oracle_power: subspace is not an ideal of the quotient");
  if (k == 0) return Subspace::full(model.field(), model.dimension());
  std::vector<DenseMatrix> actions;
  for (std::size_t r = 0; r < v.dimension(); ++r) actions.push_back(model.element_action(v.basis().row(r)));
  Subspace current = v;
  for (std::size_t i = 1; i < k && current.dimension() > 0; ++i) {
    current = Subspace::span(images(current.basis(), actions));
  }
  return current;
}

HilbertTable oracle_filtration_hilbert(const VectorSpaceModel& model, const Ideal& k) {
  const Subspace v = subspace_of_ideal(model, k);
  if (v.dimension() == model.dimension()) {
    throw UsageError("ideal is not proper in the quotient");
  }
  std::vector<DenseMatrix> actions;
  for (std::size_t r = 0; r < v.dimension(); ++r) actions.push_back(model.element_action(v.basis().row(r)));
  std::vector<std::size_t> dims{model.dimension(), v.dimension()};
  Subspace current = v;
  while (current.dimension() > 0) {
    if (dims.size() > model.dimension() + 1) {
      throw PreconditionError("ideal is not nilpotent in the quotient");
    }
    current = Subspace::span(images(current.basis(), actions));
    dims.push_back(current.dimension());
  }
  HilbertTable table;
  table.kind = HilbertTable::Kind::FiltrationQuotients;
  table.delta = dims.size() - 2;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) table.values.push_back(dims[i] - dims[i + 1]);
  return table;
}

std::size_t oracle_socle_dimension(const VectorSpaceModel& model) {
  if (model.dimension() == 0) return 0;
  DenseMatrix rows(model.field(), 0, model.dimension());
  // m is spanned, as an ideal, by the images of the variables
  std::vector<FieldElement> unit(model.dimension(), model.field().zero());
  unit[0] = model.field().one();
  for (std::size_t v = 0; v < model.num_vars(); ++v) rows.append_row(vector_times(unit, model.action(v)));
  Subspace m = Subspace::span(std::move(rows));
  std::vector<DenseMatrix> actions;
  for (std::size_t v = 0; v < model.num_vars(); ++v) actions.push_back(model.action(v));
  while (true) {
    Subspace next = m + Subspace::span(images(m.basis(), actions));
    if (next.dimension() == m.dimension()) break;
    m = std::move(next);
  }
  return annihilator(model, m).dimension();
}

}  // namespace colonlab
