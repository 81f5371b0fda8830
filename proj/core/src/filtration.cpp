#include "tcl/filtration.hpp"

#include <numeric>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Fraction operator-(const Fraction& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  Fraction operator/(const Fraction& o) const { return {num * o.den, den * o.num}; }
  bool is_zero() const { return num == 0; }
};

// C(m, k) for any integer m and k >= 0.
long long binomial(long long m, unsigned k) {
  long long result = 1;
  for (unsigned i = 0; i < k; ++i) result = result * (m - static_cast<long long>(i)) / static_cast<long long>(i + 1);
  return result;
}

long long basis_value(unsigned n, unsigned d, unsigned i) {
  long long b = binomial(static_cast<long long>(n) + d - 1 - i, d - i);
  return i % 2 == 0 ? b : -b;
}

}  // namespace

long long floor_div(long long a, long long b) noexcept {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

FitResult fit_tight_coefficients(std::span<const std::uint64_t> values, unsigned first_n, unsigned d) {
  const std::size_t unknowns = d + 1;
  if (values.size() < unknowns + 1)
    throw InputError("fit needs at least d+2 values, got " + std::to_string(values.size()));

  std::vector<std::vector<Fraction>> a(unknowns, std::vector<Fraction>(unknowns + 1));
  for (std::size_t row = 0; row < unknowns; ++row) {
    const unsigned n = first_n + static_cast<unsigned>(row);
    for (unsigned i = 0; i <= d; ++i) a[row][i] = Fraction(basis_value(n, d, i));
    a[row][unknowns] = Fraction(static_cast<long long>(values[row]));
  }
  for (std::size_t c = 0; c < unknowns; ++c) {
    std::size_t pr = c;
    while (pr < unknowns && a[pr][c].is_zero()) ++pr;
    if (pr == unknowns) throw InconsistencyError("singular fit system");
    std::swap(a[pr], a[c]);
    for (std::size_t r = 0; r < unknowns; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Fraction f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= unknowns; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }

  FitResult fit;
  fit.window_lo = first_n;
  fit.window_hi = first_n + static_cast<unsigned>(values.size()) - 2;
  fit.validation_n = first_n + static_cast<unsigned>(values.size()) - 1;
  for (std::size_t i = 0; i < unknowns; ++i) {
    Fraction x = a[i][unknowns] / a[i][i];
    if (x.den != 1) throw InconsistencyError("polynomial regime not reached; increase window");
    fit.coefficients.push_back(x.num);
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    const unsigned n = first_n + static_cast<unsigned>(k);
    long long p = 0;
    for (unsigned i = 0; i <= d; ++i) p += fit.coefficients[i] * basis_value(n, d, i);
    if (p != static_cast<long long>(values[k]))
      throw InconsistencyError("polynomial regime not reached; increase window (mismatch at n = " +
                               std::to_string(n) + ")");
  }
  fit.stabilized = true;
  return fit;
}

TightFiltration::TightFiltration(HsopIdeal J, bool force) : j_(std::move(J)), force_(force) {
  if (!j_.ring().is_fermat()) throw LicenseError("tight filtration needs a Fermat hypersurface");
  if (!j_.ring().formula_licensed() && !force_)
    throw LicenseError("closed form refused: " + j_.ring().license_condition());
}

long long TightFiltration::slack() const {
  const auto [r, d] = *j_.ring().fermat_data();
  return floor_div(static_cast<long long>(r) - 1 - d, j_.degree_e());
}

const RIdeal& TightFiltration::closure(unsigned n) {
  auto it = closures_.find(n);
  if (it != closures_.end()) return it->second;
  RIdeal value = n == 0 ? RIdeal::unit(j_.ring()) : closed_form_tight_closure(j_, n, force_).ideal;
  return closures_.emplace(n, std::move(value)).first->second;
}

const RIdeal& TightFiltration::power(unsigned n) {
  auto it = powers_.find(n);
  if (it != powers_.end()) return it->second;
  return powers_.emplace(n, ideal_power(j_.ideal(), n)).first->second;
}

const RIdeal& TightFiltration::shifted(unsigned n) {
  auto it = shifted_.find(n);
  if (it != shifted_.end()) return it->second;
  RIdeal value = ideal_product(j_.ideal(), closure(n));
  return shifted_.emplace(n, std::move(value)).first->second;
}

std::uint64_t TightFiltration::tight_hilbert_function(unsigned n) {
  if (n < 1) throw InputError("tight Hilbert function is indexed from n = 1");
  return length_of_quotient(closure(n));
}

std::vector<std::uint64_t> TightFiltration::tight_hilbert_series(unsigned n_max) {
  std::vector<std::uint64_t> out;
  for (unsigned n = 1; n <= n_max; ++n) out.push_back(tight_hilbert_function(n));
  return out;
}

FitResult TightFiltration::fit_coefficients() {
  const unsigned r_star = tight_reduction_number(default_cap());
  const unsigned d = dimension();
  const unsigned lo = r_star + 1;
  std::vector<std::uint64_t> values;
  for (unsigned n = lo; n <= r_star + d + 3; ++n) values.push_back(tight_hilbert_function(n));
  return fit_tight_coefficients(values, lo, d);
}

HuckabaMarleyResult TightFiltration::huckaba_marley_coefficient(unsigned j, unsigned cap) {
  if (j < 1 || j > dimension()) throw InputError("coefficient index j must lie in [1, d]");
  HuckabaMarleyResult out;
  out.j = j;
  for (unsigned n = 1;; ++n) {
    if (n > cap)
      throw InconsistencyError("Huckaba-Marley sum did not vanish by n = " + std::to_string(cap) +
                               " (partial sum " + std::to_string(out.value) + ")");
    const std::uint64_t lower = length_of_quotient(shifted(n - 1));
    const std::uint64_t upper = length_of_quotient(closure(n));
    const std::uint64_t term = lower - upper;
    out.terms.emplace_back(n, term);
    if (n >= j) out.value += binomial(static_cast<long long>(n) - 1, j - 1) * static_cast<long long>(term);
    if (term == 0) {
      out.stopped_at = n;
      return out;
    }
  }
}

IdentityCheckReport TightFiltration::vv_check(unsigned n_max) {
  IdentityCheckReport rep{"valabrega_valla", {}, true, true, "J ∩ (J^(n+1))* = J (J^n)*"};
  for (unsigned n = 0; n <= n_max; ++n) {
    const bool ok = ideal_equal(intersect(ideal(), closure(n + 1)), shifted(n));
    rep.verdicts.emplace_back(n, ok);
    rep.overall = rep.overall && ok;
  }
  return rep;
}

IdentityCheckReport TightFiltration::buchsbaum_check(unsigned n_max) {
  if (n_max < 3) throw InputError("buchsbaum check needs n_max >= 3");
  IdentityCheckReport rep{"buchsbaum", {}, true, true, "(a_i^2) ∩ (J^n)* = (a_i^2) (J^(n-2))*"};
  std::vector<Poly> squares;
  for (const auto& g : ideal().gens().gens()) squares.push_back(g * g);
  const RIdeal sq(j_.ring(), std::move(squares));
  for (unsigned n = 3; n <= n_max; ++n) {
    const bool ok = ideal_equal(intersect(sq, closure(n)), ideal_product(sq, closure(n - 2)));
    rep.verdicts.emplace_back(n, ok);
    rep.overall = rep.overall && ok;
  }
  return rep;
}

IdentityCheckReport TightFiltration::itoh_check(unsigned n_max) {
  IdentityCheckReport rep{"itoh", {}, true, true, "J^n ∩ (J^(n+1))* = J^n J*"};
  for (unsigned n = 0; n <= n_max; ++n) {
    const bool ok = ideal_equal(intersect(power(n), closure(n + 1)), ideal_product(power(n), closure(1)));
    rep.verdicts.emplace_back(n, ok);
    rep.overall = rep.overall && ok;
  }
  return rep;
}

IdentityCheckReport TightFiltration::tightly_closed_powers_check(unsigned n_max) {
  IdentityCheckReport rep{"tightly_closed_powers", {}, true, true, "(J^n)* = J^n"};
  if (!ideal_equal(closure(1), ideal())) {
    rep.applicable = false;
    rep.note = "hypothesis not met: J* differs from J";
    return rep;
  }
  for (unsigned n = 2; n <= n_max; ++n) {
    const bool ok = ideal_equal(closure(n), power(n));
    rep.verdicts.emplace_back(n, ok);
    rep.overall = rep.overall && ok;
  }
  return rep;
}

long long TightFiltration::reduction_number_me_closed_form() const { return slack() + dimension(); }

unsigned TightFiltration::reduction_number_me() {
  const unsigned e = j_.degree_e();
  const long long closed = reduction_number_me_closed_form();
  const unsigned cap = static_cast<unsigned>(std::max<long long>(closed, 0)) + 3;
  // (m^e)^n and m^(en) are the same ideal.
  for (unsigned n = 0; n <= cap; ++n) {
    const RIdeal lhs = ideal_product(ideal(), maximal_ideal_power(j_.ring(), e * n));
    if (ideal_equal(lhs, maximal_ideal_power(j_.ring(), e * (n + 1)))) return n;
  }
  throw InconsistencyError("reduction number of m^e exceeds the search cap " + std::to_string(cap));
}

unsigned TightFiltration::default_cap() const {
  return static_cast<unsigned>(std::max<long long>(slack() + 1, 0)) + 3;
}

unsigned TightFiltration::tight_reduction_number(unsigned cap) {
  auto holds = [&](unsigned n) {
    auto it = reduction_identity_.find(n);
    if (it != reduction_identity_.end()) return it->second;
    const bool ok = ideal_equal(shifted(n), closure(n + 1));
    reduction_identity_.emplace(n, ok);
    return ok;
  };
  if (!holds(cap))
    throw InconsistencyError("cap " + std::to_string(cap) + " too small to certify the tight reduction number");
  unsigned n0 = cap;
  while (n0 > 0 && holds(n0 - 1)) --n0;
  return n0;
}

ReductionData TightFiltration::reduction_data() {
  ReductionData data;
  const unsigned d = dimension();
  data.closed_form_value = reduction_number_me_closed_form();
  data.r_j_me = reduction_number_me();
  data.r_star_bound = slack() + 1;
  data.r_star_cap = default_cap();
  data.r_star = tight_reduction_number(data.r_star_cap);
  data.rees_cm = data.r_star + 1 <= d;
  data.sufficient_condition = slack() <= static_cast<long long>(d) - 2;
  data.rationale = std::string("Rees algebra of the tight filtration is Cohen-Macaulay iff r* <= d-1 (") +
                   "r* = " + std::to_string(data.r_star) + ", d-1 = " + std::to_string(d - 1) + ")";
  if (data.sufficient_condition) data.rationale += "; sufficient condition floor((r-1-d)/e) <= d-2 holds";
  return data;
}

}  // namespace tcl
