#include "tcl/tight.hpp"

#include <map>

#include "tcl/errors.hpp"
#include "tcl/linalg.hpp"

namespace tcl {

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_unchecked(a, b, {}) > 0; }
};

void require_power_of_p(PrimeChar ch, std::uint64_t q) {
  if (!ch.log_p(q))
    throw InputError(std::to_string(q) + " is not a power of the characteristic " + std::to_string(ch.value()));
}

std::vector<std::uint64_t> q_ladder(PrimeChar ch, std::uint64_t q_max) {
  if (q_max < ch.value())
    throw InputError("q_max must be at least p = " + std::to_string(ch.value()));
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = ch.value(); q <= q_max; q *= ch.value()) qs.push_back(q);
  return qs;
}

RIdeal bracket(const RIdeal& K, std::uint64_t q) { return RIdeal(K.ring(), bracket_power(K.gens(), q)); }

}  // namespace

HsopIdeal validate_hsop(const RIdeal& J) {
  const auto& gens = J.gens().gens();
  const std::size_t d = J.ring().krull_dimension();
  if (gens.size() != d)
    throw InputError("system of parameters needs " + std::to_string(d) + " generators, got " +
                     std::to_string(gens.size()));
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw InputError("generator " + J.ring().format(g) + " is not homogeneous");
  const std::uint64_t e = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != e) throw InputError("generators have mixed degrees");
  if (e == 0) throw InputError("generators must have positive degree");
  if (auto v = non_primary_variable(J))
    throw InputError("ideal is not m-primary: no pure power of " + J.ring().vars()[*v] +
                     " among the leading terms");
  return HsopIdeal(J, static_cast<unsigned>(e));
}

const char* to_string(ClosureMethod m) noexcept {
  return m == ClosureMethod::ClosedForm ? "closed_form" : "slice_approximation";
}

ClosureResult closed_form_tight_closure(const HsopIdeal& J, unsigned n, bool force) {
  if (n < 1) throw InputError("power must be at least 1");
  const HypersurfaceRing& ring = J.ring();
  const bool licensed = ring.formula_licensed();
  std::string note = ring.license_condition();
  if (!licensed && !force) throw LicenseError("closed form refused: " + note);
  const unsigned d = J.dimension();
  const unsigned e = J.degree_e();
  const unsigned k = (n - 1) * e + d * e;
  RIdeal closure = ideal_sum(ideal_power(J.ideal(), n), maximal_ideal_power(ring, k));
  return ClosureResult{n, std::move(closure), ClosureMethod::ClosedForm, k, licensed, !licensed, std::move(note)};
}

TestElement default_test_element(const HypersurfaceRing& ring) {
  if (!ring.is_fermat()) throw InputError("default test element needs a Fermat ring; pass one explicitly");
  const unsigned r = ring.fermat_data()->r;
  Poly c = Poly::monomial(ring.characteristic(), Monomial::variable(ring.nvars(), 0, r - 1));
  return TestElement{std::move(c), "x0^" + std::to_string(r - 1) +
                                       ": unit multiple of the x0-partial of the relation (assumed test element)"};
}

TestElement make_test_element(const HypersurfaceRing& ring, const Poly& c, std::string origin) {
  if (c.nvars() != ring.nvars()) throw InputError("test element is not in the ring");
  if (!c.is_homogeneous()) throw InputError("test element must be homogeneous");
  if (normal_form(c, ring.relation_basis()).is_zero()) throw InputError("test element must be nonzero in R");
  return TestElement{c, std::move(origin)};
}

bool frobenius_certificate(const Poly& z, const RIdeal& K, const TestElement& c, std::uint64_t q) {
  require_power_of_p(K.ring().characteristic(), q);
  return bracket(K, q).contains(c.c * frobenius_pow(z, q));
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotInTightClosure:
      return "NOT_IN_TIGHT_CLOSURE";
    case Verdict::EvidenceIn:
      return "EVIDENCE_IN";
    case Verdict::FrobeniusClosureMember:
      return "FROBENIUS_CLOSURE_MEMBER";
    case Verdict::NoFrobeniusWitness:
      return "NO_FROBENIUS_WITNESS";
  }
  return "?";
}

Certificate certify_non_membership(const Poly& z, const RIdeal& K, const TestElement& c, std::uint64_t q_max) {
  Certificate cert{z, K, Verdict::EvidenceIn, q_max, {}, c.origin};
  for (std::uint64_t q : q_ladder(K.ring().characteristic(), q_max)) {
    cert.q_checked.push_back(q);
    if (!frobenius_certificate(z, K, c, q)) {
      cert.verdict = Verdict::NotInTightClosure;
      cert.q = q;
      return cert;
    }
  }
  return cert;
}

Certificate frobenius_closure_member(const Poly& z, const RIdeal& K, std::uint64_t q_max) {
  Certificate cert{z, K, Verdict::NoFrobeniusWitness, q_max, {}, "no test element involved"};
  for (std::uint64_t q : q_ladder(K.ring().characteristic(), q_max)) {
    cert.q_checked.push_back(q);
    if (bracket(K, q).contains(frobenius_pow(z, q))) {
      cert.verdict = Verdict::FrobeniusClosureMember;
      cert.q = q;
      return cert;
    }
  }
  return cert;
}

SliceResult tight_closure_degree_slice(const RIdeal& K, std::uint64_t t, const TestElement& c,
                                       std::uint64_t q_max, bool stop_when_exact) {
  const HypersurfaceRing& ring = K.ring();
  const PrimeChar ch = ring.characteristic();
  const auto qs = q_ladder(ch, q_max);

  SliceResult out{t, standard_monomials(ring.relation_basis(), t), {}, 0, {}};
  const std::size_t cols = out.basis.size();
  out.ideal_dim = cols - hilbert_function(K, t);

  // Columns whose monomial lies in K are zero for every q.
  std::vector<bool> trivially_in(cols);
  for (std::size_t j = 0; j < cols; ++j)
    trivially_in[j] = K.contains(Poly::monomial(ch, out.basis[j]));

  FpMatrix stacked(ch, 0, cols);
  std::vector<std::vector<std::uint32_t>> kernel;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::uint32_t> v(cols, 0);
    v[j] = 1;
    kernel.push_back(std::move(v));
  }

  for (std::uint64_t q : qs) {
    if (stop_when_exact && kernel.size() == out.ideal_dim) break;
    const RIdeal target = bracket(K, q);
    std::map<Monomial, std::size_t, MonoLess> row_of;
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> columns(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (trivially_in[j]) continue;
      Poly image = normal_form(c.c * frobenius_pow(Poly::monomial(ch, out.basis[j]), q), target.basis());
      for (const auto& term : image.terms()) {
        auto [it, fresh] = row_of.try_emplace(term.mono, row_of.size());
        columns[j].emplace_back(it->second, term.coeff);
      }
    }
    std::vector<std::vector<std::uint32_t>> rows(row_of.size(), std::vector<std::uint32_t>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
      for (auto [r, v] : columns[j]) rows[r][j] = v;
    for (auto& row : rows) stacked.append_row(row);
    kernel = kernel_basis(stacked);
    out.history.emplace_back(q, kernel.size());
  }

  for (const auto& v : kernel) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < cols; ++j)
      if (v[j] != 0) terms.push_back({out.basis[j], v[j]});
    out.kernel.push_back(Poly::from_terms(ch, ring.nvars(), std::move(terms)));
  }
  return out;
}

}  // namespace tcl
