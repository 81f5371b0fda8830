#include "tcl/field.hpp"

#include <stdexcept>
#include <string>

#include "tcl/errors.hpp"

namespace tcl {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeChar::PrimeChar(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeChar::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint32_t PrimeChar::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeChar::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::optional<unsigned> PrimeChar::log_p(std::uint64_t q) const noexcept {
  if (q == 0) return std::nullopt;
  unsigned k = 0;
  while (q % p_ == 0) {
    q /= p_;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return k;
}

}  // namespace tcl
