#ifndef TCL_FILTRATION_HPP
#define TCL_FILTRATION_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcl/tight.hpp"

namespace tcl {

// floor(a / b) for b > 0, rounding toward negative infinity.
long long floor_div(long long a, long long b) noexcept;

struct IdentityCheckReport {
  std::string name;
  std::vector<std::pair<unsigned, bool>> verdicts;  // (n, identity holds)
  bool overall = true;                              // conjunction of verdicts
  bool applicable = true;                           // false when a hypothesis is not met
  std::string note;
};

struct FitResult {
  std::vector<long long> coefficients;  // e*_0 .. e*_d
  unsigned window_lo = 0;               // first n of the fit window
  unsigned window_hi = 0;               // last n of the fit window
  unsigned validation_n = 0;
  bool stabilized = false;
};

// Solves for e*_0..e*_d in
//   P(n) = sum_i (-1)^i e*_i C(n+d-1-i, d-i)
// from values[k] = H(first_n + k). The first d+1 values determine the
// coefficients; every remaining value must agree, the last one being the
// validation point. Throws InconsistencyError when they do not.
FitResult fit_tight_coefficients(std::span<const std::uint64_t> values, unsigned first_n, unsigned d);

struct HuckabaMarleyResult {
  unsigned j = 0;
  long long value = 0;
  std::vector<std::pair<unsigned, std::uint64_t>> terms;  // (n, length of (J^n)*/J(J^(n-1))*)
  unsigned stopped_at = 0;
};

struct ReductionData {
  unsigned r_j_me = 0;               // computed r_J(m^e)
  long long closed_form_value = 0;   // floor((r-1-d)/e) + d
  unsigned r_star = 0;               // least n0 with J(J^n)* = (J^(n+1))* on [n0, cap]
  long long r_star_bound = 0;        // floor((r-1-d)/e) + 1
  unsigned r_star_cap = 0;
  bool rees_cm = false;              // r* <= d-1
  bool sufficient_condition = false; // floor((r-1-d)/e) <= d-2
  std::string rationale;
};

// The tight filtration {(J^n)*} of a parameter ideal on a Fermat ring,
// with closures supplied by the closed form. Closures and powers are
// cached, so an instance is not safe to share across threads.
class TightFiltration {
 public:
  explicit TightFiltration(HsopIdeal J, bool force = false);

  const HsopIdeal& hsop() const noexcept { return j_; }
  const RIdeal& ideal() const noexcept { return j_.ideal(); }
  unsigned dimension() const noexcept { return j_.dimension(); }
  // floor((r-1-d)/e); requires a Fermat ring.
  long long slack() const;
  bool conjectural() const noexcept { return force_ && !j_.ring().formula_licensed(); }

  // (J^n)*, with (J^0)* = R.
  const RIdeal& closure(unsigned n);
  const RIdeal& power(unsigned n);
  // J·(J^n)*
  const RIdeal& shifted(unsigned n);

  std::uint64_t tight_hilbert_function(unsigned n);
  std::vector<std::uint64_t> tight_hilbert_series(unsigned n_max);

  // Default window: n in [r*+1, r*+d+2], validated at r*+d+3.
  FitResult fit_coefficients();
  HuckabaMarleyResult huckaba_marley_coefficient(unsigned j, unsigned cap);

  IdentityCheckReport vv_check(unsigned n_max);
  IdentityCheckReport buchsbaum_check(unsigned n_max);
  IdentityCheckReport itoh_check(unsigned n_max);
  IdentityCheckReport tightly_closed_powers_check(unsigned n_max);

  unsigned reduction_number_me();
  long long reduction_number_me_closed_form() const;
  // Throws InconsistencyError when the identity fails at `cap`.
  unsigned tight_reduction_number(unsigned cap);
  unsigned default_cap() const;
  ReductionData reduction_data();

 private:
  HsopIdeal j_;
  bool force_;
  std::map<unsigned, RIdeal> closures_;
  std::map<unsigned, RIdeal> powers_;
  std::map<unsigned, RIdeal> shifted_;
  std::map<unsigned, bool> reduction_identity_;
};

}  // namespace tcl

#endif  // TCL_FILTRATION_HPP
