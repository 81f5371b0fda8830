#ifndef TCL_MONOMIAL_HPP
#define TCL_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace tcl {

// Ambient variables plus one slot for the elimination tag.
inline constexpr std::size_t kMaxVars = 8;

// Exponent vector of a monomial with inline storage. The total degree is
// cached; all arithmetic is overflow checked.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return n_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  std::uint64_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }
  std::span<const Exponent> exponents() const noexcept { return {e_.data(), n_}; }

  void set(std::size_t i, Exponent v);

  // Product of monomials; throws std::overflow_error on exponent overflow.
  Monomial operator*(const Monomial& o) const;
  // Every exponent multiplied by k.
  Monomial scaled(std::uint64_t k) const;
  // Exact quotient; precondition: o divides *this.
  Monomial operator/(const Monomial& o) const;

  bool divides(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }
  Monomial lcm(const Monomial& o) const;
  // Single nonzero exponent; returns its variable index, or -1.
  int pure_power_variable() const noexcept;

  // Drops or appends the trailing tag slot.
  Monomial with_tag(Exponent tag) const;
  Monomial without_tag() const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint64_t deg_ = 0;
  std::uint8_t n_ = 0;
};

// Graded reverse lexicographic order with x0 > x1 > ... . With `tagged`
// set the last slot is an elimination tag compared before everything else.
struct MonomialOrder {
  bool tagged = false;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder elimination() { return {true}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

// Returns <0, 0, >0 as a is smaller, equal, larger than b.
// Throws InputError on a length mismatch.
int compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder ord);

// Same comparison without the length check, for inner loops.
inline int compare_unchecked(const Monomial& a, const Monomial& b, MonomialOrder ord) noexcept {
  std::size_t n = a.size();
  if (ord.tagged) {
    --n;
    if (a[n] != b[n]) return a[n] > b[n] ? 1 : -1;
    std::uint64_t da = a.degree() - a[n];
    std::uint64_t db = b.degree() - b[n];
    if (da != db) return da > db ? 1 : -1;
  } else if (a.degree() != b.degree()) {
    return a.degree() > b.degree() ? 1 : -1;
  }
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace tcl

#endif  // TCL_MONOMIAL_HPP
