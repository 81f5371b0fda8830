#include "tcl/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

void check_width(std::size_t n) {
  if (n > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_width(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    e_[i] = exps[i];
    deg_ += exps[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent v) {
  if (i >= n_) throw std::out_of_range("monomial index out of range");
  deg_ = deg_ - e_[i] + v;
  e_[i] = v;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(e_[i]) + o.e_[i];
    if (s > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<Exponent>(s);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(*this);
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && k > kMaxExponent / e_[i])
      throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<Exponent>(e_[i] * k);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] - o.e_[i];
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  r.deg_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    r.e_[i] = std::max(e_[i], o.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

int Monomial::pure_power_variable() const noexcept {
  int found = -1;
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial Monomial::with_tag(Exponent tag) const {
  check_width(n_ + 1U);
  Monomial r(*this);
  r.n_ = static_cast<std::uint8_t>(n_ + 1);
  r.e_[n_] = tag;
  r.deg_ += tag;
  return r;
}

Monomial Monomial::without_tag() const {
  Monomial r(*this);
  r.n_ = static_cast<std::uint8_t>(n_ - 1);
  r.deg_ -= e_[n_ - 1];
  r.e_[n_ - 1] = 0;
  return r;
}

int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  if (a.size() != b.size()) throw InputError("monomial length mismatch");
  if (ord.tagged && a.size() == 0) throw InputError("elimination order needs a tag slot");
  return compare_unchecked(a, b, ord);
}

}  // namespace tcl
