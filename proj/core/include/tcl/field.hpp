#ifndef TCL_FIELD_HPP
#define TCL_FIELD_HPP

#include <cstdint>
#include <optional>

namespace tcl {

// Characteristic of a prime field. Primality is checked at construction by
// trial division; the toolkit targets small primes.
class PrimeChar {
 public:
  explicit PrimeChar(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  // Reduce an arbitrary signed integer into [0, p).
  std::uint32_t reduce(std::int64_t v) const noexcept;

  // Returns k with q == p^k, or nullopt when q is not a power of p.
  std::optional<unsigned> log_p(std::uint64_t q) const noexcept;

  friend bool operator==(const PrimeChar&, const PrimeChar&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

// A scalar of F_p in canonical representation.
class FieldScalar {
 public:
  FieldScalar(std::int64_t v, PrimeChar ch) : value_(ch.reduce(v)), ch_(ch) {}

  std::uint32_t value() const noexcept { return value_; }
  PrimeChar characteristic() const noexcept { return ch_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldScalar operator+(FieldScalar o) const { return {Raw{}, ch_.add(value_, o.value_), ch_}; }
  FieldScalar operator-(FieldScalar o) const { return {Raw{}, ch_.sub(value_, o.value_), ch_}; }
  FieldScalar operator*(FieldScalar o) const { return {Raw{}, ch_.mul(value_, o.value_), ch_}; }
  FieldScalar operator-() const { return {Raw{}, ch_.neg(value_), ch_}; }
  FieldScalar inverse() const { return {Raw{}, ch_.inv(value_), ch_}; }
  FieldScalar pow(std::uint64_t e) const { return {Raw{}, ch_.pow(value_, e), ch_}; }

  friend bool operator==(const FieldScalar&, const FieldScalar&) = default;

 private:
  struct Raw {};
  FieldScalar(Raw, std::uint32_t v, PrimeChar ch) : value_(v), ch_(ch) {}

  std::uint32_t value_;
  PrimeChar ch_;
};

}  // namespace tcl

#endif  // TCL_FIELD_HPP
