#include "colonlab/polynomial.hpp"

#include <algorithm>

#include "colonlab/errors.hpp"

namespace colonlab {

namespace {

void require_field(const Ring& ring, const FieldElement& c) {
  if (!(c.field() == ring.field())) {
    throw UsageError("coefficient from " + c.field().name() + " used in a ring over " +
                     ring.field().name());
  }
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  for (const auto& t : terms) {
    if (t.monomial.num_vars() != ring->num_vars()) throw UsageError("term has wrong number of exponents");
    require_field(*ring, t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff = merged.back().coeff + t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  return Polynomial(std::move(ring), std::move(merged));
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  require_field(*ring, c);
  if (c.is_zero()) return Polynomial(std::move(ring));
  Monomial one = ring->one();
  return Polynomial(std::move(ring), std::vector<Term>{{c, std::move(one)}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m) {
  if (m.num_vars() != ring->num_vars()) throw UsageError("monomial has wrong number of exponents");
  FieldElement one = ring->field().one();
  return Polynomial(std::move(ring), std::vector<Term>{{std::move(one), std::move(m)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->num_vars(), index);
  return monomial(std::move(ring), std::move(m));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw UsageError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial::Homogeneity Polynomial::homogeneity() const {
  if (terms_.empty()) return {true, std::nullopt};
  const std::uint32_t d = terms_.front().monomial.degree();
  for (const auto& t : terms_) {
    if (t.monomial.degree() != d) return {false, std::nullopt};
  }
  return {true, d};
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  require_field(*ring_, c);
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coeff * c, t.monomial});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const FieldElement& c, const Monomial& m) const {
  require_field(*ring_, c);
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // multiplication by a monomial preserves the order
  for (const auto& t : terms_) out.push_back({t.coeff * c, t.monomial * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::minus_term_times(const FieldElement& c, const Monomial& m,
                                        const Polynomial& g) const {
  require_same_ring(ring_, g.ring_, "polynomial reduction");
  const auto& order = ring_->order();
  const FieldElement neg = -c;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial shifted = b->monomial * m;
    const auto cmp = a == terms_.end() ? std::strong_ordering::less : order.compare(a->monomial, shifted);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({b->coeff * neg, std::move(shifted)});
      ++b;
    } else {
      FieldElement s = a->coeff + b->coeff * neg;
      if (!s.is_zero()) out.push_back({std::move(s), std::move(shifted)});
      ++a;
      ++b;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::remap(RingPtr target, std::span<const int> source_index) const {
  if (source_index.size() != target->num_vars()) throw UsageError("remap: index map has wrong size");
  if (!(target->field() == ring_->field())) throw UsageError("remap: field mismatch");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial::Exponents e(target->num_vars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (source_index[i] >= 0) e[i] = t.monomial[static_cast<std::size_t>(source_index[i])];
    }
    out.push_back({t.coeff, Monomial(std::move(e))});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    FieldElement c = t.coeff;
    const bool negative = c.is_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += monomial_to_string(*ring_, t.monomial);
    } else {
      out += c.to_string() + "*" + monomial_to_string(*ring_, t.monomial);
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial addition");
  return a.minus_term_times(-a.ring_->field().one(), a.ring_->one(), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial subtraction");
  return a.minus_term_times(a.ring_->field().one(), a.ring_->one(), b);
}

Polynomial operator-(const Polynomial& a) { return a.scaled(-a.ring_->field().one()); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
  Polynomial acc(a.ring_);
  for (const auto& t : b.terms_) acc = acc.minus_term_times(-t.coeff, t.monomial, a);
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

}  // namespace colonlab
