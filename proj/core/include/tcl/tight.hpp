#ifndef TCL_TIGHT_HPP
#define TCL_TIGHT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcl/graded_ring.hpp"

namespace tcl {

// Homogeneous system of parameters of common degree e: exactly dim R
// generators, all of degree e, generating an m-primary ideal.
class HsopIdeal {
 public:
  const RIdeal& ideal() const noexcept { return ideal_; }
  const HypersurfaceRing& ring() const noexcept { return ideal_.ring(); }
  unsigned degree_e() const noexcept { return degree_e_; }
  unsigned dimension() const noexcept { return static_cast<unsigned>(ring().krull_dimension()); }

 private:
  friend HsopIdeal validate_hsop(const RIdeal& J);
  HsopIdeal(RIdeal ideal, unsigned e) : ideal_(std::move(ideal)), degree_e_(e) {}

  RIdeal ideal_;
  unsigned degree_e_;
};

// Throws InputError naming the failed condition: generator count, homogeneity,
// equal degrees, or m-primarity.
HsopIdeal validate_hsop(const RIdeal& J);

enum class ClosureMethod { ClosedForm, SliceApproximation };
const char* to_string(ClosureMethod m) noexcept;

struct ClosureResult {
  unsigned power;
  RIdeal ideal;
  ClosureMethod method;
  unsigned maximal_power;  // exponent k of the m^k summand
  bool licensed;
  bool conjectural;  // emitted outside the licensed range on request
  std::string license_note;
};

// (J^n)* = J^n + m^((n-1)e + de) on a licensed Fermat ring. Outside the
// licensed range throws LicenseError unless `force`, in which case the
// result is tagged conjectural.
ClosureResult closed_form_tight_closure(const HsopIdeal& J, unsigned n, bool force = false);

struct TestElement {
  Poly c;
  std::string origin;
};

// x0^(r-1), a unit multiple of the partial derivative of the Fermat
// relation in x0. Throws InputError for non-Fermat rings.
TestElement default_test_element(const HypersurfaceRing& ring);
// Caller-supplied element; must be homogeneous and nonzero in R.
TestElement make_test_element(const HypersurfaceRing& ring, const Poly& c, std::string origin);

// c * z^q ∈ K^[q] + (f).
bool frobenius_certificate(const Poly& z, const RIdeal& K, const TestElement& c, std::uint64_t q);

enum class Verdict {
  NotInTightClosure,       // refuted at `q`
  EvidenceIn,              // survived every q up to `q`
  FrobeniusClosureMember,  // z^q ∈ K^[q] at `q`
  NoFrobeniusWitness,      // no such q up to `q`
};
const char* to_string(Verdict v) noexcept;

struct Certificate {
  Poly element;
  RIdeal ideal;
  Verdict verdict;
  std::uint64_t q;
  std::vector<std::uint64_t> q_checked;
  std::string test_element_note;
};

// Scans q = p, p^2, ... <= q_max; refutes on the first failure.
Certificate certify_non_membership(const Poly& z, const RIdeal& K, const TestElement& c, std::uint64_t q_max);
// Least q <= q_max with z^q ∈ K^[q] + (f).
Certificate frobenius_closure_member(const Poly& z, const RIdeal& K, std::uint64_t q_max);

struct SliceResult {
  std::uint64_t degree;
  std::vector<Monomial> basis;   // standard monomials of R_t
  std::vector<Poly> kernel;      // basis of the slice, as elements of R_t
  std::uint64_t ideal_dim;       // dim K_t, a lower bound for the slice
  std::vector<std::pair<std::uint64_t, std::size_t>> history;  // (q, accumulated kernel dim)

  std::size_t dimension() const noexcept { return kernel.size(); }
};

// {z ∈ R_t : c z^q ∈ K^[q] for q = p, p^2, ... <= q_max}, an F_p-subspace
// containing (K*)_t. Unless `stop_when_exact` is false the scan stops early
// once the slice equals K_t, its lower bound.
SliceResult tight_closure_degree_slice(const RIdeal& K, std::uint64_t t, const TestElement& c,
                                       std::uint64_t q_max, bool stop_when_exact = true);

}  // namespace tcl

#endif  // TCL_TIGHT_HPP
