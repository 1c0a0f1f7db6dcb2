#include <doctest.h>

#include "colonlab/errors.hpp"
#include "colonlab/hilbert.hpp"
#include "colonlab/parser.hpp"
#include "colonlab/theorems.hpp"
#include "support/corpus.hpp"

using namespace colonlab;
using colonlab::testing::ideal_of;
using colonlab::testing::ring_of;

namespace {

// coefficients of (1 - t^a)(1 - t^b) / (1 - t)^2 by polynomial long division
std::vector<std::size_t> closed_form(std::size_t a, std::size_t b) {
  std::vector<long> num(a + b + 1, 0);
  num[0] += 1;
  num[a] -= 1;
  num[b] -= 1;
  num[a + b] += 1;
  for (int pass = 0; pass < 2; ++pass) {
    // divide by (1 - t): prefix sums
    for (std::size_t k = 1; k < num.size(); ++k) num[k] += num[k - 1];
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return {num.begin(), num.end()};
}

HilbertTable graded(std::vector<std::size_t> v) {
  HilbertTable t;
  t.delta = v.size() - 1;
  t.values = std::move(v);
  return t;
}

}  // namespace

TEST_CASE("closed form helper") {
  CHECK(closed_form(2, 2) == std::vector<std::size_t>{1, 2, 1});
  CHECK(closed_form(2, 3) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(closed_form(1, 4) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("length examples") {
  const auto r = ring_of("Q", {"x", "y"});
  CHECK(length_of_quotient(ideal_of(r, "x^2, y^2")) == 4);
  CHECK(length_of_quotient(Ideal::unit(r)) == 0);
  CHECK(length_of_quotient(storch_ideal()) == 6);
  CHECK_THROWS_AS(length_of_quotient(ideal_of(r, "x^2")), PreconditionError);
}

TEST_CASE("graded hilbert examples") {
  const auto r = ring_of("Q", {"x", "y"});
  const HilbertTable t = graded_hilbert(make_quotient(ideal_of(r, "x^2, y^2")));
  CHECK(t.values == std::vector<std::size_t>{1, 2, 1});
  CHECK(t.delta == 2);
  CHECK(to_string(t) == "(1,2,1)");
  const auto r1 = ring_of("F7", {"x"});
  for (int d = 1; d <= 6; ++d) {
    const auto a = make_quotient(Ideal(r1, {Polynomial::monomial(r1, Monomial{static_cast<std::uint32_t>(d)})}));
    const HilbertTable td = graded_hilbert(a);
    CHECK(td.values == std::vector<std::size_t>(d, 1));
    CHECK(td.delta == static_cast<std::size_t>(d - 1));
  }
  const auto r3 = ring_of("Q", {"x", "y", "z"});
  const HilbertTable t3 = graded_hilbert(make_quotient(ideal_of(r3, "x^2, y^2, z^2")));
  CHECK(t3.values == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(t3.delta == 3);
  CHECK_THROWS_AS(graded_hilbert(make_quotient(storch_ideal())), PreconditionError);
}

TEST_CASE("monomial complete intersections follow the closed form") {
  const auto r = ring_of("F32003", {"x", "y"});
  for (std::uint32_t a = 1; a <= 5; ++a) {
    for (std::uint32_t b = 1; b <= 5; ++b) {
      const Ideal j(r, {Polynomial::monomial(r, Monomial{a, 0}), Polynomial::monomial(r, Monomial{0, b})});
      const HilbertTable t = graded_hilbert(make_quotient(j));
      CHECK(t.values == closed_form(a, b));
      CHECK(t.delta == a + b - 2);
      CHECK(is_symmetric(t));
    }
  }
}

TEST_CASE("nilpotency index examples") {
  const auto r = ring_of("Q", {"x", "y"});
  const auto a = make_quotient(ideal_of(r, "x^2, y^2"));
  CHECK(nilpotency_index(a, a.maximal_ideal()) == 2);
  const auto storch = make_quotient(storch_ideal());
  CHECK(nilpotency_index(storch, storch.maximal_ideal()) == 4);
  CHECK(nilpotency_index(a, a.defining()) == 0);
  CHECK(nilpotency_index(a, Ideal::zero(r)) == 0);
  CHECK_THROWS_AS(nilpotency_index(a, Ideal::unit(r)), UsageError);
}

TEST_CASE("filtration hilbert examples") {
  const auto storch = make_quotient(storch_ideal());
  const HilbertTable ts = filtration_hilbert(storch, storch.maximal_ideal());
  CHECK(ts.values == std::vector<std::size_t>{1, 2, 1, 1, 1});
  CHECK(ts.kind == HilbertTable::Kind::FiltrationQuotients);
  const auto r = ring_of("Q", {"x", "y"});
  const auto a = make_quotient(ideal_of(r, "x^2, y^2"));
  CHECK(filtration_hilbert(a, a.maximal_ideal()).values == std::vector<std::size_t>{1, 2, 1});
  const auto r1 = ring_of("F7", {"x"});
  const auto c = make_quotient(ideal_of(r1, "x^3"));
  const HilbertTable tc = filtration_hilbert(c, ideal_of(r1, "x^2"));
  CHECK(tc.values == std::vector<std::size_t>{2, 1});
  CHECK(tc.delta == 1);
}

TEST_CASE("symmetry examples") {
  CHECK(is_symmetric(graded({1, 2, 1})));
  CHECK_FALSE(is_symmetric(graded({1, 2, 1, 1})));
  CHECK(is_symmetric(graded({1})));
  CHECK_FALSE(is_symmetric(graded({1, 2, 1, 1, 1})));
}

TEST_CASE("filtration tables satisfy the partial sum identity on the corpus") {
  for (const auto& inst : colonlab::testing::full_corpus()) {
    CAPTURE(inst.name);
    const auto a = make_quotient(inst.defining);
    const auto seq = quotient_power_sequence(a, inst.ideal);
    const HilbertTable t = filtration_hilbert(seq);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      sum += t.values[i];
      CHECK(sum == length_of_quotient(seq[i + 1]));
    }
    CHECK(sum == a.length());
    CHECK(t.delta + 1 == t.values.size());
    if (inst.defining.is_homogeneous() && inst.name.find("I=m^2") == std::string::npos &&
        inst.ideal == a.maximal_ideal()) {
      CHECK(t.values == graded_hilbert(a).values);
    }
  }
}
