#include "colonlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "colonlab/errors.hpp"

namespace colonlab {

namespace {

struct Pair {
  std::uint32_t lcm_degree;
  std::size_t i;
  std::size_t j;

  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.lcm_degree, a.i, a.j) < std::tie(b.lcm_degree, b.i, b.j);
  }
};

const Polynomial* find_reducer(const Monomial& m, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    require_same_ring(f.ring(), g.ring(), "normal_form");
    if (g.is_zero()) throw UsageError("normal_form: zero divisor polynomial");
  }
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lead = p.leading_term();
    if (const Polynomial* g = find_reducer(lead.monomial, divisors)) {
      const FieldElement c = lead.coeff / g->leading_coefficient();
      const Monomial shift = lead.monomial / g->leading_monomial();
      p = p.minus_term_times(c, shift, *g);
    } else {
      // lead is irreducible and greater than every remaining term
      remainder.push_back(lead);
      p = p.tail();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "s_polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial left = f.times_term(g.leading_coefficient(), l / f.leading_monomial());
  return left.minus_term_times(f.leading_coefficient(), l / g.leading_monomial(), g);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const BuchbergerOptions& options, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!basis.empty()) require_same_ring(basis.front().ring(), g.ring(), "buchberger");
    if (g.is_zero()) continue;
    if (g.is_constant()) return {g.monic()};
    basis.push_back(g.monic());
  }

  std::set<Pair> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      pending.insert({l.degree(), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const Monomial l = lcm(basis[a].leading_monomial(), basis[b].leading_monomial());
    return pending.count({l.degree(), a, b}) > 0;
  };

  while (!pending.empty()) {
    const Pair pair = *pending.begin();
    pending.erase(pending.begin());
    ++st.pairs_considered;
    const Polynomial& f = basis[pair.i];
    const Polynomial& g = basis[pair.j];
    if (coprime(f.leading_monomial(), g.leading_monomial())) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    if (options.chain_criterion) {
      const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
      bool skip = false;
      for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == pair.i || k == pair.j) continue;
        skip = basis[k].leading_monomial().divides(l) && !is_pending(pair.i, k) &&
               !is_pending(pair.j, k);
      }
      if (skip) {
        ++st.pairs_skipped_chain;
        continue;
      }
    }
    Polynomial h = normal_form(s_polynomial(f, g), basis);
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (h.is_constant()) return {h.monic()};
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }
  return basis;
}

std::vector<Polynomial> reduce_gb(std::span<const Polynomial> basis) {
  std::vector<Polynomial> reduced;
  for (const auto& g : basis) {
    if (!g.is_zero()) reduced.push_back(g.monic());
  }
  // Interreduce until nothing moves. On a Groebner basis this is the usual
  // minimalize-then-tail-reduce; on other inputs it is plain autoreduction.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < reduced.size();) {
      std::vector<Polynomial> others;
      others.reserve(reduced.size() - 1);
      for (std::size_t j = 0; j < reduced.size(); ++j) {
        if (j != i) others.push_back(reduced[j]);
      }
      Polynomial r = normal_form(reduced[i], others);
      if (r == reduced[i]) {
        ++i;
        continue;
      }
      changed = true;
      if (r.is_zero()) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        reduced[i++] = r.monic();
      }
    }
  }
  if (!reduced.empty()) {
    const auto& order = reduced.front().ring()->order();
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
  }
  return reduced;
}

std::vector<Polynomial> reduced_groebner_basis(std::span<const Polynomial> generators,
                                               const BuchbergerOptions& options) {
  const auto basis = buchberger(generators, options);
  return reduce_gb(basis);
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace colonlab
