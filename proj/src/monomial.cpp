#include "colonlab/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "colonlab/errors.hpp"

namespace colonlab {

namespace {

std::uint32_t sum(std::span<const std::uint32_t> e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// degrevlex on the coordinate range [lo, hi)
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) {
  const auto ea = a.exponents().subspan(lo, hi - lo);
  const auto eb = b.exponents().subspan(lo, hi - lo);
  if (auto c = sum(ea) <=> sum(eb); c != 0) return c;
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return eb[i] <=> ea[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(Exponents exponents)
    : exponents_(std::move(exponents)), degree_(sum({exponents_.data(), exponents_.size()})) {}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : exponents_(exponents.begin(), exponents.end()),
      degree_(sum({exponents_.data(), exponents_.size()})) {}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, std::uint32_t power) {
  if (index >= num_vars) throw UsageError("variable index out of range");
  Exponents e(num_vars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

int Monomial::pure_power_variable() const noexcept {
  int found = -1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw UsageError("monomial length mismatch");
  Monomial::Exponents e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents_[i];
  Monomial out;
  out.exponents_ = std::move(e);
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw InternalError("inexact monomial division");
  Monomial::Exponents e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exponents_[i];
  Monomial out;
  out.exponents_ = std::move(e);
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw UsageError("monomial length mismatch");
  Monomial::Exponents e(a.exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    if (a.exponents_[i] != 0 && b.exponents_[i] != 0) return false;
  }
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

MonomialOrder MonomialOrder::elim(std::size_t k) {
  if (k == 0) throw UsageError("elimination block must be nonempty");
  return MonomialOrder(Kind::Elim, k);
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "degrevlex" || name == "grevlex") return degrevlex();
  if (name == "lex") return lex();
  throw UsageError("unknown monomial order '" + std::string(name) + "' (expected degrevlex or lex)");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elim:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.num_vars();
  if (n != b.num_vars()) throw UsageError("monomial comparison with mismatched lengths");
  switch (kind_) {
    case Kind::DegRevLex:
      if (auto c = a.degree() <=> b.degree(); c != 0) return c;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::Elim: {
      const std::size_t k = std::min(block_, n);
      if (auto c = degrevlex_range(a, b, 0, k); c != 0) return c;
      return degrevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace colonlab
