#ifndef TCL_POLY_HPP
#define TCL_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tcl/field.hpp"
#include "tcl/monomial.hpp"

namespace tcl {

struct Term {
  Monomial mono;
  std::uint32_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Multivariate polynomial over F_p. Terms are kept strictly decreasing in
// the polynomial's monomial order with no zero coefficients; the zero
// polynomial has no terms. Values are immutable through the public API.
class Poly {
 public:
  Poly(PrimeChar ch, std::size_t nvars, MonomialOrder ord = {});

  static Poly constant(PrimeChar ch, std::size_t nvars, std::int64_t c, MonomialOrder ord = {});
  static Poly monomial(PrimeChar ch, const Monomial& m, std::int64_t c = 1, MonomialOrder ord = {});
  static Poly variable(PrimeChar ch, std::size_t nvars, std::size_t index, MonomialOrder ord = {});
  // Sorts and merges arbitrary terms; coefficients must already be < p.
  static Poly from_terms(PrimeChar ch, std::size_t nvars, std::vector<Term> terms,
                         MonomialOrder ord = {});
  // Precondition: terms strictly decreasing in `ord`, coefficients in [1, p).
  static Poly from_sorted_terms(PrimeChar ch, std::size_t nvars, std::vector<Term> terms,
                                MonomialOrder ord = {});

  PrimeChar characteristic() const noexcept { return ch_; }
  std::size_t nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return ord_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Preconditions: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coeff() const { return terms_.front().coeff; }

  // Maximal total degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;

  Poly scaled(std::uint32_t c) const;
  Poly times_term(const Monomial& m, std::uint32_t c) const;
  Poly monic() const;
  Poly pow(std::uint64_t n) const;

  // Re-sorts into another order on the same variables.
  Poly with_order(MonomialOrder ord) const;
  // Appends an elimination tag variable raised to `tag` and switches to the
  // elimination order.
  Poly with_tag(Monomial::Exponent tag) const;
  // Drops the tag variable; precondition: no term involves it.
  Poly without_tag() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.ch_ == b.ch_ && a.nvars_ == b.nvars_ && a.ord_ == b.ord_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Poly& o) const;

  PrimeChar ch_;
  std::size_t nvars_;
  MonomialOrder ord_;
  std::vector<Term> terms_;
};

// q-th power for q a power of the characteristic: exponents scaled by q,
// coefficients raised to the q-th power (the identity on F_p).
// Throws InputError when q is not a power of p.
Poly frobenius_pow(const Poly& a, std::uint64_t q);

}  // namespace tcl

#endif  // TCL_POLY_HPP
