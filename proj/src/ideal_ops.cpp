#include "colonlab/ideal_ops.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "colonlab/errors.hpp"

namespace colonlab {

namespace {

// Drops zero generators and duplicates (by canonical printed form).
std::vector<Polynomial> dedup(std::vector<Polynomial> gens) {
  std::unordered_set<std::string> seen;
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (seen.insert(g.to_string()).second) out.push_back(std::move(g));
  }
  return out;
}

void enumerate_degree(std::size_t var, std::uint32_t remaining, Monomial::Exponents& e,
                      std::vector<Monomial>& out) {
  if (var + 1 == e.size()) {
    e[var] = remaining;
    out.emplace_back(e);
    return;
  }
  for (std::uint32_t k = remaining + 1; k-- > 0;) {
    e[var] = k;
    enumerate_degree(var + 1, remaining - k, e, out);
  }
  e[var] = 0;
}

// Basis elements of `ideal` that are nonzero modulo `modulus`, reduced.
std::vector<Polynomial> reduced_modulo(const Ideal& ideal, const Ideal& modulus) {
  std::vector<Polynomial> out;
  for (const auto& g : ideal.groebner_basis()) {
    Polynomial r = modulus.reduce(g);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return dedup(std::move(out));
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), dedup(std::move(gens)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_product");
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), dedup(std::move(gens)));
}

Ideal ideal_power(const Ideal& ideal, long long k) {
  if (k < 0) throw UsageError("ideal_power: negative exponent " + std::to_string(k));
  Ideal result = Ideal::unit(ideal.ring());
  for (long long i = 0; i < k; ++i) result = ideal_product(result, ideal);
  return result;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  Monomial::Exponents e(num_vars, 0);
  enumerate_degree(0, degree, e, out);
  return out;
}

Ideal irrelevant_power(const RingPtr& ring, long long i) {
  if (i < 0) throw UsageError("irrelevant_power: negative exponent " + std::to_string(i));
  if (i == 0) return Ideal::unit(ring);
  std::vector<Polynomial> gens;
  for (auto& m : monomials_of_degree(ring->num_vars(), static_cast<std::uint32_t>(i))) {
    gens.push_back(Polynomial::monomial(ring, std::move(m)));
  }
  return Ideal(ring, std::move(gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal_intersect");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  const RingPtr ext = ring->with_elimination_variable();
  const std::size_t n = ring->num_vars();
  std::vector<int> embed(n + 1), project(n);
  embed[0] = -1;
  for (std::size_t i = 0; i < n; ++i) {
    embed[i + 1] = static_cast<int>(i);
    project[i] = static_cast<int>(i + 1);
  }
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, ext->field().one()) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : a.groebner_basis()) gens.push_back(t * g.remap(ext, embed));
  for (const auto& g : b.groebner_basis()) gens.push_back(one_minus_t * g.remap(ext, embed));

  std::vector<Polynomial> kept;
  for (const auto& g : reduced_groebner_basis(gens)) {
    if (g.leading_monomial()[0] == 0) kept.push_back(g.remap(ring, project));
  }
  if (ring->order() == MonomialOrder::degrevlex()) {
    // Elim(1) restricted to t-free monomials is degrevlex, so this is
    // already the reduced basis in the base ring.
    return Ideal::from_reduced_basis(ring, reduce_gb(kept));
  }
  return Ideal(ring, std::move(kept));
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  require_same_ring(g.ring(), f.ring(), "divide_exact");
  if (f.is_zero()) throw UsageError("divide_exact: division by zero");
  std::vector<Term> quotient;
  Polynomial p = g;
  while (!p.is_zero()) {
    const Term& lead = p.leading_term();
    if (!f.leading_monomial().divides(lead.monomial)) {
      throw InternalError("non-exact division of " + g.to_string() + " by " + f.to_string());
    }
    const FieldElement c = lead.coeff / f.leading_coefficient();
    const Monomial m = lead.monomial / f.leading_monomial();
    quotient.push_back({c, m});
    p = p.minus_term_times(c, m, f);
  }
  return Polynomial::from_terms(g.ring(), std::move(quotient));
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "colon");
  if (f.is_zero()) return Ideal::unit(ideal.ring());
  if (ideal.contains(f)) return Ideal::unit(ideal.ring());
  if (f.is_constant()) return ideal;
  const Ideal meet = ideal_intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.groebner_basis()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), dedup(std::move(gens)));
}

Ideal colon(const Ideal& ideal, const Ideal& by) {
  require_same_ring(ideal.ring(), by.ring(), "colon");
  if (by.is_zero()) throw UsageError("colon by the zero ideal");
  Ideal result = Ideal::unit(ideal.ring());
  for (const auto& f : by.groebner_basis()) {
    const Ideal part = colon(ideal, f);
    if (part.is_unit()) continue;
    result = ideal_intersect(result, part);
    // I is contained in every I : f, so once the running intersection is I
    // it stays I.
    if (ideal_equal(result, ideal)) return result;
  }
  return result;
}

std::vector<Monomial> standard_monomials(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_unit()) return {};
  const auto leads = ideal.leading_monomials();
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    const bool has_pure_power = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      return m.pure_power_variable() == static_cast<int>(v);
    });
    if (!has_pure_power) {
      throw PreconditionError("quotient is not Artinian: no pure power of variable '" +
                              ring->variables()[v] + "' among the leading monomials");
    }
  }
  auto is_standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue{ring->one()};
  seen.insert(ring->one());
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < ring->num_vars(); ++v) {
      Monomial next = m * Monomial::variable(ring->num_vars(), v);
      if (!seen.count(next) && is_standard(next)) {
        seen.insert(next);
        queue.push_back(std::move(next));
      }
    }
    out.push_back(std::move(m));
  }
  const auto& order = ring->order();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

QuotientRing::QuotientRing(Ideal defining, std::vector<Monomial> basis)
    : defining_(std::move(defining)), basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> QuotientRing::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<FieldElement> QuotientRing::coordinates(const Polynomial& f) const {
  std::vector<FieldElement> out(basis_.size(), ring()->field().zero());
  const Polynomial r = defining_.reduce(f);
  for (const auto& t : r.terms()) {
    auto idx = index_of(t.monomial);
    if (!idx) throw InternalError("normal form has a non-standard monomial");
    out[*idx] = t.coeff;
  }
  return out;
}

QuotientRing make_quotient(const Ideal& defining) {
  auto basis = standard_monomials(defining);
  return QuotientRing(defining, std::move(basis));
}

Ideal socle(const QuotientRing& a) { return colon(a.defining(), a.maximal_ideal()); }

std::size_t socle_dimension(const QuotientRing& a) {
  return a.length() - standard_monomials(socle(a)).size();
}

bool is_gorenstein(const QuotientRing& a) { return socle_dimension(a) == 1; }

std::vector<Ideal> quotient_power_sequence(const QuotientRing& a, const Ideal& ideal) {
  require_same_ring(a.ring(), ideal.ring(), "quotient_power_sequence");
  const Ideal& defining = a.defining();
  const Ideal first = ideal_sum(defining, ideal);
  if (first.is_unit()) throw UsageError("ideal is not proper in the quotient (J + I = (1))");

  std::vector<Ideal> seq{Ideal::unit(a.ring()), first};
  const std::vector<Polynomial> factors = reduced_modulo(first, defining);
  std::vector<Polynomial> current = factors;
  while (!current.empty()) {
    if (seq.size() > a.length() + 1) {
      throw PreconditionError("ideal is not nilpotent in the quotient (not m-primary in a local ring)");
    }
    std::vector<Polynomial> products;
    for (const auto& f : current) {
      for (const auto& g : factors) {
        Polynomial r = defining.reduce(f * g);
        if (!r.is_zero()) products.push_back(std::move(r));
      }
    }
    std::vector<Polynomial> gens = defining.groebner_basis();
    products = dedup(std::move(products));
    gens.insert(gens.end(), products.begin(), products.end());
    Ideal next(a.ring(), std::move(gens));
    current = reduced_modulo(next, defining);
    seq.push_back(std::move(next));
  }
  return seq;
}

Ideal quotient_power(const QuotientRing& a, const Ideal& ideal, long long k) {
  if (k < 0) throw UsageError("quotient_power: negative exponent " + std::to_string(k));
  if (k == 0) return Ideal::unit(a.ring());
  const auto seq = quotient_power_sequence(a, ideal);
  if (static_cast<std::size_t>(k) < seq.size()) return seq[static_cast<std::size_t>(k)];
  return seq.back();
}

}  // namespace colonlab
