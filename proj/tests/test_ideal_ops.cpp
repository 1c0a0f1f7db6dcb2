#include <doctest.h>

#include <algorithm>
#include <random>

#include "colonlab/errors.hpp"
#include "colonlab/hilbert.hpp"
#include "colonlab/ideal_ops.hpp"
#include "colonlab/parser.hpp"
#include "colonlab/theorems.hpp"
#include "support/brute_force.hpp"
#include "support/random.hpp"

using namespace colonlab;

namespace {

RingPtr ring(const char* field, std::vector<std::string> vars) {
  return Ring::make(std::move(vars), Field::parse(field));
}

Ideal id(const RingPtr& r, const char* text) { return Ideal(r, parse_polynomial_list(text, r)); }

Polynomial p(const RingPtr& r, const char* text) { return parse_polynomial(text, r); }

// monomial ideal with a few random generators; plus m^5 when bounded
Ideal random_monomial_ideal(const RingPtr& r, std::mt19937_64& rng, bool bounded) {
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<Polynomial> gens;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m = colonlab::testing::random_monomial_of_degree_at_most(r->num_vars(), 4, rng);
    if (m.is_one()) m = Monomial::variable(r->num_vars(), 0);
    gens.push_back(Polynomial::monomial(r, m));
  }
  Ideal out(r, gens);
  return bounded ? ideal_sum(out, irrelevant_power(r, 5)) : out;
}

Ideal random_ideal(const RingPtr& r, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < 2; ++i) gens.push_back(colonlab::testing::random_nonzero_polynomial(r, 3, 3, rng));
  return ideal_sum(Ideal(r, gens), irrelevant_power(r, 4));
}

bool subset(const Ideal& a, const Ideal& b) { return b.contains(a); }

}  // namespace

TEST_CASE("sum, product and power examples") {
  const auto r = ring("Q", {"x", "y"});
  const Ideal m = irrelevant_power(r, 1);
  const Ideal s = ideal_sum(id(r, "x^2, y^2"), ideal_power(m, 3));
  CHECK(s == id(r, "x^2, y^2, x*y^2"));
  CHECK(make_quotient(s).length() == 4);
  CHECK(ideal_power(id(r, "x^2 + y"), 0) == Ideal::unit(r));
  CHECK(ideal_power(m, 2) == id(r, "x^2, x*y, y^2"));
  CHECK(ideal_power(m, 2).generators().size() == 3);
  CHECK_THROWS_AS(ideal_power(m, -1), UsageError);
  CHECK(ideal_product(id(r, "x"), id(r, "y")) == id(r, "x*y"));
  CHECK(ideal_sum(id(r, "x, 0, x"), Ideal::zero(r)).generators().size() == 1);
}

TEST_CASE("irrelevant power examples") {
  const auto r2 = ring("F7", {"x", "y"});
  CHECK(irrelevant_power(r2, 2) == id(r2, "x^2, x*y, y^2"));
  CHECK(irrelevant_power(r2, 0).is_unit());
  const auto r3 = ring("F7", {"x", "y", "z"});
  CHECK(irrelevant_power(r3, 1) == id(r3, "x, y, z"));
  CHECK(monomials_of_degree(3, 4).size() == 15);
  CHECK_THROWS_AS(irrelevant_power(r3, -2), UsageError);
  const Ideal m = irrelevant_power(r3, 1);
  for (int i = 0; i <= 6; ++i) CHECK(irrelevant_power(r3, i) == ideal_power(m, i));
}

TEST_CASE("intersection examples") {
  const auto r = ring("Q", {"x", "y"});
  CHECK(ideal_intersect(id(r, "x"), id(r, "y")) == id(r, "x*y"));
  const Ideal k = ideal_intersect(id(r, "x^2, y^2"), id(r, "x"));
  const Ideal expect = id(r, "x^2, x*y^2");
  CHECK(k.contains(expect));
  CHECK(expect.contains(k));
  const Ideal i = id(r, "x^2 - y, x*y^3");
  CHECK(ideal_intersect(i, Ideal::unit(r)) == i);
  CHECK(ideal_intersect(Ideal::unit(r), i) == i);
  CHECK(ideal_intersect(i, Ideal::zero(r)).is_zero());
}

TEST_CASE("intersection is the largest common sub-ideal") {
  std::mt19937_64 rng(43);
  const auto r = ring("F32003", {"x", "y", "z"});
  for (int k = 0; k < 25; ++k) {
    const Ideal a = random_ideal(r, rng);
    const Ideal b = random_ideal(r, rng);
    const Ideal c = ideal_intersect(a, b);
    REQUIRE(subset(c, a));
    REQUIRE(subset(c, b));
    REQUIRE(subset(ideal_product(a, b), c));
    REQUIRE(ideal_intersect(b, a) == c);
  }
}

TEST_CASE("colon examples") {
  const auto r = ring("Q", {"x", "y"});
  const Ideal i = id(r, "x^2, y^2");
  const Ideal m = irrelevant_power(r, 1);
  CHECK(colon(i, m) == id(r, "x^2, x*y, y^2"));
  CHECK(colon(i, Ideal::unit(r)) == i);
  CHECK(colon(i, ideal_power(m, 3)).is_unit());
  CHECK(colon(i, p(r, "x")) == id(r, "x, y^2"));
  CHECK(colon(id(r, "x*y"), p(r, "x")) == id(r, "y"));
  CHECK_THROWS_AS(colon(i, Ideal::zero(r)), UsageError);
  CHECK(divide_exact(p(r, "x^2 - y^2"), p(r, "x + y")) == p(r, "x - y"));
  CHECK_THROWS_AS(divide_exact(p(r, "x^2 + y^2"), p(r, "x + y")), InternalError);
}

TEST_CASE("colon absorbs and contains") {
  std::mt19937_64 rng(47);
  const auto r = ring("F32003", {"x", "y", "z"});
  for (int k = 0; k < 25; ++k) {
    const Ideal i = random_ideal(r, rng);
    const Ideal j = random_ideal(r, rng);
    const Ideal c = colon(i, j);
    REQUIRE(subset(i, c));
    for (const auto& a : c.groebner_basis()) {
      for (const auto& b : j.generators()) REQUIRE(i.contains(a * b));
    }
  }
}

TEST_CASE("colon is antitone in the second argument on monomial ideals") {
  std::mt19937_64 rng(53);
  const auto r = ring("Q", {"x", "y", "z"});
  for (int k = 0; k < 40; ++k) {
    const Ideal i = random_monomial_ideal(r, rng, true);
    const Ideal j_big = random_monomial_ideal(r, rng, false);
    const Ideal j_small = ideal_product(j_big, random_monomial_ideal(r, rng, false));
    REQUIRE(subset(j_small, j_big));
    REQUIRE(subset(colon(i, j_big), colon(i, j_small)));
    REQUIRE(colon(i, ideal_sum(j_big, j_small)) == colon(i, j_big));
  }
}

TEST_CASE("quotient construction") {
  const auto r = ring("Q", {"x", "y"});
  const QuotientRing a = make_quotient(id(r, "x^2, y^2"));
  CHECK(a.length() == 4);
  const std::vector<Monomial> leads = a.defining().leading_monomials();
  auto brute = colonlab::testing::brute_staircase(leads, 2, 2);
  CHECK(brute.size() == 4);
  for (const auto& m : brute) CHECK(a.index_of(m).has_value());
  CHECK_FALSE(a.index_of(Monomial{2, 0}).has_value());
  try {
    make_quotient(id(r, "x"));
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("y") != std::string::npos);
  }
  CHECK(make_quotient(storch_ideal()).length() == 6);
  CHECK(make_quotient(Ideal::unit(r)).length() == 0);
}

TEST_CASE("standard monomials agree with a brute-force staircase") {
  std::mt19937_64 rng(59);
  for (const char* field : {"F2", "F32003", "Q"}) {
    const auto r = ring(field, {"x", "y", "z"});
    for (int k = 0; k < 30; ++k) {
      const Ideal j = random_ideal(r, rng);
      const auto leads = j.leading_monomials();
      const auto brute = colonlab::testing::brute_staircase(leads, 3, 4);
      const auto fast = standard_monomials(j);
      REQUIRE(fast.size() == brute.size());
      for (const auto& m : brute) REQUIRE(std::find(fast.begin(), fast.end(), m) != fast.end());
    }
  }
}

TEST_CASE("socle and gorenstein detection") {
  const auto r = ring("Q", {"x", "y"});
  const QuotientRing ci = make_quotient(id(r, "x^2, y^2"));
  CHECK(socle_dimension(ci) == 1);
  CHECK(socle(ci).contains(p(r, "x*y")));
  CHECK_FALSE(socle(ci).contains(p(r, "x")));
  CHECK(is_gorenstein(ci));
  const QuotientRing flat = make_quotient(id(r, "x^2, x*y, y^2"));
  CHECK(socle_dimension(flat) == 2);
  CHECK_FALSE(is_gorenstein(flat));
  CHECK(is_gorenstein(make_quotient(storch_ideal())));
}

TEST_CASE("powers inside a quotient") {
  const auto r = ring("Q", {"x", "y"});
  const QuotientRing a = make_quotient(id(r, "x^2, y^2"));
  const auto seq = quotient_power_sequence(a, a.maximal_ideal());
  REQUIRE(seq.size() == 4);
  CHECK(seq[0].is_unit());
  CHECK(seq[1] == id(r, "x, y"));
  CHECK(seq[2] == id(r, "x*y, x^2, y^2"));
  CHECK(seq[3] == a.defining());
  CHECK(quotient_power(a, a.maximal_ideal(), 7) == a.defining());
  CHECK_THROWS_AS(quotient_power(a, a.maximal_ideal(), -1), UsageError);
}
