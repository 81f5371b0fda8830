#ifndef TCL_GRADED_RING_HPP
#define TCL_GRADED_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcl/groebner.hpp"
#include "tcl/poly.hpp"

namespace tcl {

struct FermatData {
  unsigned r;  // exponent of the relation
  unsigned d;  // Krull dimension; the ring has d + 1 variables
};

// R = F_p[x_0..x_d]/(f) for a homogeneous relation f, or the plain
// polynomial ring when f is zero. All variables have degree 1. Copies share
// one immutable state, including the Groebner basis of (f).
class HypersurfaceRing {
 public:
  // x0^r + ... + xd^r over F_p. Rejects p | r, r < 2, d < 2.
  static HypersurfaceRing fermat(std::uint32_t p, unsigned r, unsigned d);
  // Rejects a zero or non-homogeneous relation.
  static HypersurfaceRing general(std::uint32_t p, std::vector<std::string> vars, std::string_view relation);
  static HypersurfaceRing polynomial_ring(std::uint32_t p, std::vector<std::string> vars);

  PrimeChar characteristic() const noexcept;
  std::size_t nvars() const noexcept;
  const std::vector<std::string>& vars() const noexcept;
  const Poly& relation() const noexcept;
  bool has_relation() const noexcept { return !relation().is_zero(); }
  std::size_t krull_dimension() const noexcept { return has_relation() ? nvars() - 1 : nvars(); }
  const GroebnerBasis& relation_basis() const noexcept;

  const std::optional<FermatData>& fermat_data() const noexcept;
  bool is_fermat() const noexcept { return fermat_data().has_value(); }
  // Fermat with p > (d-1)r - d; the closed-form operations require it.
  bool formula_licensed() const noexcept;
  // Human-readable statement of the licensing inequality and its outcome.
  std::string license_condition() const;

  Poly parse(std::string_view text) const;
  std::string format(const Poly& a) const;
  Poly variable(std::size_t i) const;
  Poly one() const;

  friend bool operator==(const HypersurfaceRing& a, const HypersurfaceRing& b) noexcept {
    return a.impl_ == b.impl_;
  }

 private:
  struct Impl;
  explicit HypersurfaceRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Homogeneous-or-not ideal of R given by lifts to the ambient ring. The
// relation is adjoined for every basis computation; the basis is computed
// once at construction.
class RIdeal {
 public:
  RIdeal(HypersurfaceRing ring, IdealGens gens);
  RIdeal(HypersurfaceRing ring, std::vector<Poly> gens);

  static RIdeal unit(const HypersurfaceRing& ring);
  static RIdeal zero(const HypersurfaceRing& ring);
  // Parses each generator in the ring's variables.
  static RIdeal parse(const HypersurfaceRing& ring, const std::vector<std::string>& gens);

  const HypersurfaceRing& ring() const noexcept { return state_->ring; }
  const IdealGens& gens() const noexcept { return state_->gens; }
  // Generators together with the relation.
  const IdealGens& lifted() const noexcept { return state_->lifted; }
  const GroebnerBasis& basis() const noexcept { return state_->basis; }
  bool is_homogeneous() const noexcept { return state_->homogeneous; }
  bool is_unit() const noexcept { return basis().is_unit(); }

  bool contains(const Poly& f) const;
  bool contains(const RIdeal& other) const;

  // Generator strings in the ring's variable names.
  std::vector<std::string> format_gens() const;

 private:
  struct State {
    HypersurfaceRing ring;
    IdealGens gens;
    IdealGens lifted;
    GroebnerBasis basis;
    bool homogeneous;
  };
  std::shared_ptr<const State> state_;
};

bool ideal_equal(const RIdeal& a, const RIdeal& b);
RIdeal ideal_sum(const RIdeal& a, const RIdeal& b);
RIdeal ideal_product(const RIdeal& a, const RIdeal& b);
RIdeal ideal_power(const RIdeal& a, unsigned n);
RIdeal intersect(const RIdeal& a, const RIdeal& b);
RIdeal colon(const RIdeal& a, const RIdeal& b);

// m = (x_0, ..., x_d).
RIdeal maximal_ideal(const HypersurfaceRing& ring);
// All monomials of degree n; n == 0 is the unit ideal.
RIdeal maximal_ideal_power(const HypersurfaceRing& ring, unsigned n);

// Monomials of total degree t in `nvars` variables, descending in grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t t);
// Degree-t monomials divisible by no leading monomial of `gb`.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::uint64_t t);

// dim_F (R/K)_t. Throws InputError when K is not homogeneous.
std::uint64_t hilbert_function(const RIdeal& K, std::uint64_t t);

// Index of a variable with no pure power among the leading monomials of
// K's basis, or nullopt when K is m-primary.
std::optional<std::size_t> non_primary_variable(const RIdeal& K);

struct HilbertTable {
  std::vector<std::uint64_t> values;  // values[t] for t = 0 .. first zero (inclusive)
  std::uint64_t total_length = 0;
};

// Throws InputError when K is not homogeneous or not m-primary.
HilbertTable hilbert_table(const RIdeal& K);
std::uint64_t length_of_quotient(const RIdeal& K);

// Degrees of a basis of the socle (K : m)/K, with multiplicity, ascending.
std::vector<std::uint64_t> socle_degrees(const RIdeal& K);
// Socle degrees shifted by d·e: the last twists of a minimal resolution.
std::vector<std::uint64_t> infer_last_twists(const RIdeal& K, unsigned d, unsigned e);

}  // namespace tcl

#endif  // TCL_GRADED_RING_HPP
