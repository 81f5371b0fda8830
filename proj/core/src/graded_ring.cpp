#include "tcl/graded_ring.hpp"

#include <algorithm>
#include <cctype>

#include "tcl/errors.hpp"
#include "tcl/parse.hpp"

namespace tcl {

struct HypersurfaceRing::Impl {
  PrimeChar ch;
  std::vector<std::string> vars;
  Poly relation;
  GroebnerBasis relation_basis;
  std::optional<FermatData> fermat;
};

namespace {

void check_names(const std::vector<std::string>& vars) {
  if (vars.empty()) throw InputError("a ring needs at least one variable");
  if (vars.size() + 1 > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars - 1) + " variables are supported");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& v = vars[i];
    bool ok = !v.empty() && std::isalpha(static_cast<unsigned char>(v[0]));
    for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw InputError("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (vars[j] == v) throw InputError("duplicate variable name '" + v + "'");
  }
}

GroebnerBasis basis_of(PrimeChar ch, std::size_t n, const Poly& f) {
  return buchberger(IdealGens(ch, n, f.is_zero() ? std::vector<Poly>{} : std::vector<Poly>{f}));
}

}  // namespace

HypersurfaceRing HypersurfaceRing::fermat(std::uint32_t p, unsigned r, unsigned d) {
  PrimeChar ch(p);
  if (r < 2) throw InputError("Fermat exponent r must be at least 2");
  if (d < 2) throw InputError("dimension d must be at least 2");
  if (r % p == 0)
    throw InputError("p divides r (" + std::to_string(p) + " | " + std::to_string(r) +
                     "): the relation is not reduced");
  std::vector<std::string> vars;
  for (unsigned i = 0; i <= d; ++i) vars.push_back("x" + std::to_string(i));
  check_names(vars);
  std::vector<Term> terms;
  for (unsigned i = 0; i <= d; ++i) terms.push_back({Monomial::variable(d + 1, i, r), 1});
  Poly f = Poly::from_terms(ch, d + 1, std::move(terms));
  GroebnerBasis gb = basis_of(ch, d + 1, f);
  return HypersurfaceRing(std::make_shared<const Impl>(
      Impl{ch, std::move(vars), std::move(f), std::move(gb), FermatData{r, d}}));
}

HypersurfaceRing HypersurfaceRing::general(std::uint32_t p, std::vector<std::string> vars,
                                           std::string_view relation) {
  PrimeChar ch(p);
  check_names(vars);
  Poly f = parse_poly(relation, vars, ch);
  if (f.is_zero()) throw InputError("relation must be nonzero");
  if (!f.is_homogeneous()) throw InputError("relation must be homogeneous");
  if (f.is_constant()) throw InputError("relation must have positive degree");
  GroebnerBasis gb = basis_of(ch, vars.size(), f);
  return HypersurfaceRing(
      std::make_shared<const Impl>(Impl{ch, std::move(vars), std::move(f), std::move(gb), std::nullopt}));
}

HypersurfaceRing HypersurfaceRing::polynomial_ring(std::uint32_t p, std::vector<std::string> vars) {
  PrimeChar ch(p);
  check_names(vars);
  Poly zero(ch, vars.size());
  GroebnerBasis gb = basis_of(ch, vars.size(), zero);
  return HypersurfaceRing(
      std::make_shared<const Impl>(Impl{ch, std::move(vars), std::move(zero), std::move(gb), std::nullopt}));
}

PrimeChar HypersurfaceRing::characteristic() const noexcept { return impl_->ch; }
std::size_t HypersurfaceRing::nvars() const noexcept { return impl_->vars.size(); }
const std::vector<std::string>& HypersurfaceRing::vars() const noexcept { return impl_->vars; }
const Poly& HypersurfaceRing::relation() const noexcept { return impl_->relation; }
const GroebnerBasis& HypersurfaceRing::relation_basis() const noexcept { return impl_->relation_basis; }
const std::optional<FermatData>& HypersurfaceRing::fermat_data() const noexcept { return impl_->fermat; }

bool HypersurfaceRing::formula_licensed() const noexcept {
  if (!impl_->fermat) return false;
  const auto [r, d] = *impl_->fermat;
  const long long bound = static_cast<long long>(d - 1) * r - static_cast<long long>(d);
  return static_cast<long long>(impl_->ch.value()) > bound;
}

std::string HypersurfaceRing::license_condition() const {
  if (!impl_->fermat) return "ring is not a Fermat hypersurface";
  const auto [r, d] = *impl_->fermat;
  const long long bound = static_cast<long long>(d - 1) * r - static_cast<long long>(d);
  return "p > (d-1)r - d: " + std::to_string(impl_->ch.value()) + (formula_licensed() ? " > " : " <= ") +
         std::to_string(bound);
}

Poly HypersurfaceRing::parse(std::string_view text) const { return parse_poly(text, impl_->vars, impl_->ch); }
std::string HypersurfaceRing::format(const Poly& a) const { return to_string(a, impl_->vars); }
Poly HypersurfaceRing::variable(std::size_t i) const { return Poly::variable(impl_->ch, nvars(), i); }
Poly HypersurfaceRing::one() const { return Poly::constant(impl_->ch, nvars(), 1); }

RIdeal::RIdeal(HypersurfaceRing ring, IdealGens gens) {
  if (gens.nvars() != ring.nvars() || !(gens.characteristic() == ring.characteristic()))
    throw InputError("ideal generators do not belong to the ring");
  std::vector<Poly> all = gens.gens();
  if (ring.has_relation()) all.push_back(ring.relation());
  IdealGens lifted(ring.characteristic(), ring.nvars(), std::move(all));
  GroebnerBasis gb = buchberger(lifted);
  const bool homogeneous = gens.is_homogeneous();
  state_ = std::make_shared<const State>(
      State{std::move(ring), std::move(gens), std::move(lifted), std::move(gb), homogeneous});
}

RIdeal::RIdeal(HypersurfaceRing ring, std::vector<Poly> gens)
    : RIdeal(ring, IdealGens(ring.characteristic(), ring.nvars(), std::move(gens))) {}

RIdeal RIdeal::unit(const HypersurfaceRing& ring) { return RIdeal(ring, std::vector<Poly>{ring.one()}); }
RIdeal RIdeal::zero(const HypersurfaceRing& ring) { return RIdeal(ring, std::vector<Poly>{}); }

RIdeal RIdeal::parse(const HypersurfaceRing& ring, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  ps.reserve(gens.size());
  for (const auto& g : gens) ps.push_back(ring.parse(g));
  return RIdeal(ring, std::move(ps));
}

bool RIdeal::contains(const Poly& f) const { return member(f, basis()); }

bool RIdeal::contains(const RIdeal& other) const { return tcl::contains(basis(), other.gens()); }

std::vector<std::string> RIdeal::format_gens() const {
  std::vector<std::string> out;
  for (const auto& g : gens().gens()) out.push_back(ring().format(g));
  return out;
}

bool ideal_equal(const RIdeal& a, const RIdeal& b) { return a.contains(b) && b.contains(a); }

RIdeal ideal_sum(const RIdeal& a, const RIdeal& b) { return RIdeal(a.ring(), ideal_sum(a.gens(), b.gens())); }

RIdeal ideal_product(const RIdeal& a, const RIdeal& b) {
  return RIdeal(a.ring(), ideal_product(a.gens(), b.gens()));
}

RIdeal ideal_power(const RIdeal& a, unsigned n) { return RIdeal(a.ring(), ideal_power(a.gens(), n)); }

RIdeal intersect(const RIdeal& a, const RIdeal& b) {
  return RIdeal(a.ring(), intersect(a.lifted(), b.lifted()));
}

RIdeal colon(const RIdeal& a, const RIdeal& b) {
  if (b.gens().is_zero_ideal()) return RIdeal::unit(a.ring());
  return RIdeal(a.ring(), colon(a.lifted(), b.gens()));
}

RIdeal maximal_ideal(const HypersurfaceRing& ring) { return maximal_ideal_power(ring, 1); }

RIdeal maximal_ideal_power(const HypersurfaceRing& ring, unsigned n) {
  if (n == 0) return RIdeal::unit(ring);
  std::vector<Poly> gens;
  for (const auto& m : monomials_of_degree(ring.nvars(), n))
    gens.push_back(Poly::monomial(ring.characteristic(), m));
  return RIdeal(ring, std::move(gens));
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t t) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (t == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  // Fill variables left to right; x0 takes the largest share first.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == nvars) {
      cur.set(i, static_cast<Monomial::Exponent>(left));
      out.push_back(cur);
      return;
    }
    for (std::uint64_t e = left + 1; e-- > 0;) {
      cur.set(i, static_cast<Monomial::Exponent>(e));
      self(self, i + 1, left - e);
    }
    cur.set(i, 0);
  };
  rec(rec, 0, t);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_unchecked(a, b, {}) > 0; });
  return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::uint64_t t) {
  const auto lms = gb.leading_monomials();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(gb.nvars(), t)) {
    bool divisible = std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
    if (!divisible) out.push_back(m);
  }
  return out;
}

std::uint64_t hilbert_function(const RIdeal& K, std::uint64_t t) {
  if (!K.is_homogeneous()) throw InputError("Hilbert function needs a homogeneous ideal");
  return standard_monomials(K.basis(), t).size();
}

std::optional<std::size_t> non_primary_variable(const RIdeal& K) {
  const std::size_t n = K.ring().nvars();
  std::vector<bool> seen(n, false);
  for (const auto& m : K.basis().leading_monomials()) {
    if (m.is_one()) return std::nullopt;
    int v = m.pure_power_variable();
    if (v >= 0) seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) return i;
  return std::nullopt;
}

HilbertTable hilbert_table(const RIdeal& K) {
  if (!K.is_homogeneous()) throw InputError("length needs a homogeneous ideal");
  if (auto v = non_primary_variable(K))
    throw InputError("ideal is not m-primary: no pure power of " + K.ring().vars()[*v] +
                     " among the leading terms");
  // Standard monomials of an m-primary leading-term ideal are degree
  // bounded and, once a degree has none, no higher degree has any.
  HilbertTable table;
  for (std::uint64_t t = 0;; ++t) {
    std::uint64_t h = hilbert_function(K, t);
    table.values.push_back(h);
    table.total_length += h;
    if (h == 0) break;
  }
  return table;
}

std::uint64_t length_of_quotient(const RIdeal& K) { return hilbert_table(K).total_length; }

std::vector<std::uint64_t> socle_degrees(const RIdeal& K) {
  const HilbertTable base = hilbert_table(K);
  const RIdeal wider = colon(K, maximal_ideal(K.ring()));
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < base.values.size(); ++t) {
    const std::uint64_t h_wide = hilbert_function(wider, t);
    for (std::uint64_t k = h_wide; k < base.values[t]; ++k) out.push_back(t);
  }
  return out;
}

std::vector<std::uint64_t> infer_last_twists(const RIdeal& K, unsigned d, unsigned e) {
  auto out = socle_degrees(K);
  for (auto& t : out) t += static_cast<std::uint64_t>(d) * e;
  return out;
}

}  // namespace tcl
