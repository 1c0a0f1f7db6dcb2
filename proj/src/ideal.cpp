#include "colonlab/ideal.hpp"

#include "colonlab/errors.hpp"

namespace colonlab {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_same_ring(ring_, g.ring(), "ideal generator");
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, ring->field().one());
  return from_reduced_basis(std::move(ring), {std::move(one)});
}

Ideal Ideal::from_reduced_basis(RingPtr ring, std::vector<Polynomial> reduced_basis) {
  Ideal out(std::move(ring), reduced_basis);
  std::call_once(out.cache_->once, [&] { out.cache_->basis = std::move(reduced_basis); });
  return out;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->basis = reduced_groebner_basis(generators_); });
  return cache_->basis;
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis()) out.push_back(g.leading_monomial());
  return out;
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(ring_, f.ring(), "ideal membership");
  return reduce(f).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_, "ideal containment");
  for (const auto& g : other.generators_) {
    if (!contains(g)) return false;
  }
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : groebner_basis()) {
    if (!g.is_homogeneous()) return false;
  }
  return true;
}

Polynomial Ideal::reduce(const Polynomial& f) const { return normal_form(f, groebner_basis()); }

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_equal");
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i] == gb[i])) return false;
  }
  return true;
}

}  // namespace colonlab
