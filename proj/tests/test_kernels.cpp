#include <doctest.h>

#include <random>
#include <vector>

#include "colonlab/errors.hpp"
#include "colonlab/kernels.hpp"

using namespace colonlab::kernels;

namespace {

std::vector<std::uint32_t> random_residues(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

std::uint32_t naive_axpy(std::uint32_t d, std::uint32_t s, std::uint32_t c, std::uint32_t p) {
  return static_cast<std::uint32_t>((d + static_cast<unsigned __int128>(s) * c) % p);
}

}  // namespace

TEST_CASE("scalar kernels match naive arithmetic") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 32003u, 2147483647u}) {
    for (std::size_t n = 0; n < 40; ++n) {
      auto dst = random_residues(n, p, rng);
      const auto src = random_residues(n, p, rng);
      const std::uint32_t c = random_residues(1, p, rng)[0];
      auto expect = dst;
      for (std::size_t i = 0; i < n; ++i) expect[i] = naive_axpy(dst[i], src[i], c, p);
      scalar::axpy(dst, src, c, p);
      CHECK(dst == expect);
    }
  }
}

TEST_CASE("every available isa agrees with the scalar reference") {
  std::mt19937_64 rng(5);
  for (Isa isa : available_isas()) {
    const ModKernels& k = kernels_for(isa);
    CAPTURE(isa_name(isa));
    for (std::uint32_t p : {2u, 3u, 5u, 32003u, 65537u, 2147483629u, 2147483647u}) {
      for (std::size_t n = 0; n < 68; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
          auto a = random_residues(n, p, rng);
          auto b = a;
          const auto src = random_residues(n, p, rng);
          std::uint32_t c = random_residues(1, p, rng)[0];
          if (rep == 0) c = p - 1;
          scalar::axpy(a, src, c, p);
          k.axpy(b, src, c, p);
          REQUIRE(a == b);
          scalar::scale(a, c, p);
          k.scale(b, c, p);
          REQUIRE(a == b);
        }
      }
    }
  }
}

TEST_CASE("isa selection") {
  CHECK(isa_available(Isa::Scalar));
  CHECK(isa_name(Isa::Scalar) == "scalar");
  const auto isas = available_isas();
  CHECK(isas.front() == Isa::Scalar);
  CHECK(isa_available(active().isa));
  if (!isa_available(Isa::Avx2)) CHECK_THROWS_AS(kernels_for(Isa::Avx2), colonlab::UsageError);
}
