#ifndef TCL_GROEBNER_HPP
#define TCL_GROEBNER_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tcl/poly.hpp"

namespace tcl {

// Generators of an ideal of the ambient polynomial ring. Zeros are dropped,
// generators are made monic, and repeated generators are pruned keeping the
// first occurrence. An empty list is the zero ideal.
class IdealGens {
 public:
  IdealGens(PrimeChar ch, std::size_t nvars, std::vector<Poly> gens = {});

  static IdealGens unit(PrimeChar ch, std::size_t nvars);

  PrimeChar characteristic() const noexcept { return ch_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Poly>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  bool is_homogeneous() const noexcept;

 private:
  PrimeChar ch_;
  std::size_t nvars_;
  std::vector<Poly> gens_;
};

// Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial
// in descending order.
class GroebnerBasis {
 public:
  GroebnerBasis(PrimeChar ch, std::size_t nvars, MonomialOrder ord) : ch_(ch), nvars_(nvars), ord_(ord) {}

  PrimeChar characteristic() const noexcept { return ch_; }
  std::size_t nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return ord_; }
  const std::vector<Poly>& basis() const noexcept { return basis_; }
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }

 private:
  friend GroebnerBasis buchberger(const IdealGens&, MonomialOrder);

  PrimeChar ch_;
  std::size_t nvars_;
  MonomialOrder ord_;
  std::vector<Poly> basis_;
};

// Buchberger's algorithm with the normal selection strategy (least lcm,
// ties by pair index) and the Gebauer-Moeller installation of the coprime
// and chain criteria. Generators are converted to `ord` first.
GroebnerBasis buchberger(const IdealGens& g, MonomialOrder ord = {});

// Fully reduced remainder of f. Each step reduces by the first basis
// element, in stored order, whose leading monomial divides the term.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

bool member(const Poly& f, const GroebnerBasis& gb);

IdealGens ideal_sum(const IdealGens& a, const IdealGens& b);
IdealGens ideal_product(const IdealGens& a, const IdealGens& b);
// All products of n generators with repetition; n == 0 gives the unit ideal.
IdealGens ideal_power(const IdealGens& a, unsigned n);
// Generator-wise Frobenius power; q must be a power of p.
IdealGens bracket_power(const IdealGens& a, std::uint64_t q);

// a ∩ b as (t·a + (1-t)·b) ∩ S with t an elimination tag.
IdealGens intersect(const IdealGens& a, const IdealGens& b);
// (a : b) as the intersection over generators g of b of (a ∩ (g)) / g.
// Throws InputError when b is the zero ideal.
IdealGens colon(const IdealGens& a, const IdealGens& b);

// b ⊆ a, decided against a precomputed basis of a.
bool contains(const GroebnerBasis& a, const IdealGens& b);
bool ideal_equal(const IdealGens& a, const IdealGens& b);

// a / g; throws InconsistencyError when g does not divide a.
Poly divide_exact(const Poly& a, const Poly& g);

}  // namespace tcl

#endif  // TCL_GROEBNER_HPP
