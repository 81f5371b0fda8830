#include "tcl/poly.hpp"

#include <algorithm>
#include <string>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

void sort_and_merge(std::vector<Term>& terms, PrimeChar ch, MonomialOrder ord) {
  std::sort(terms.begin(), terms.end(), [ord](const Term& a, const Term& b) {
    return compare_unchecked(a.mono, b.mono, ord) > 0;
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::uint32_t c = terms[i].coeff;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c = ch.add(c, terms[j++].coeff);
    if (c != 0) terms[out++] = Term{terms[i].mono, c};
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly::Poly(PrimeChar ch, std::size_t nvars, MonomialOrder ord) : ch_(ch), nvars_(nvars), ord_(ord) {
  if (nvars > kMaxVars) throw InputError("too many variables");
  if (ord.tagged && nvars == 0) throw InputError("elimination order needs a tag variable");
}

Poly Poly::constant(PrimeChar ch, std::size_t nvars, std::int64_t c, MonomialOrder ord) {
  return monomial(ch, Monomial(nvars), c, ord);
}

Poly Poly::monomial(PrimeChar ch, const Monomial& m, std::int64_t c, MonomialOrder ord) {
  Poly r(ch, m.size(), ord);
  std::uint32_t v = ch.reduce(c);
  if (v != 0) r.terms_.push_back({m, v});
  return r;
}

Poly Poly::variable(PrimeChar ch, std::size_t nvars, std::size_t index, MonomialOrder ord) {
  return monomial(ch, Monomial::variable(nvars, index), 1, ord);
}

Poly Poly::from_terms(PrimeChar ch, std::size_t nvars, std::vector<Term> terms, MonomialOrder ord) {
  Poly r(ch, nvars, ord);
  for (const auto& t : terms)
    if (t.mono.size() != nvars) throw InputError("term has wrong variable count");
  sort_and_merge(terms, ch, ord);
  r.terms_ = std::move(terms);
  return r;
}

Poly Poly::from_sorted_terms(PrimeChar ch, std::size_t nvars, std::vector<Term> terms,
                             MonomialOrder ord) {
  Poly r(ch, nvars, ord);
  r.terms_ = std::move(terms);
  return r;
}

std::uint64_t Poly::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Poly::check_compatible(const Poly& o) const {
  if (nvars_ != o.nvars_) throw InputError("mismatched variable count");
  if (!(ch_ == o.ch_)) throw InputError("mismatched characteristic");
  if (!(ord_ == o.ord_)) throw InputError("mismatched monomial order");
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly r(ch_, nvars_, ord_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare_unchecked(terms_[i].mono, o.terms_[j].mono, ord_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      std::uint32_t s = ch_.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = ch_.neg(t.coeff);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(ch_, nvars_, ord_);
  if (is_zero() || o.is_zero()) return r;
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prods.push_back({a.mono * b.mono, ch_.mul(a.coeff, b.coeff)});
  sort_and_merge(prods, ch_, ord_);
  r.terms_ = std::move(prods);
  return r;
}

Poly Poly::scaled(std::uint32_t c) const {
  c %= ch_.value();
  Poly r(ch_, nvars_, ord_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ch_.mul(t.coeff, c);
  return r;
}

Poly Poly::times_term(const Monomial& m, std::uint32_t c) const {
  if (m.size() != nvars_) throw InputError("mismatched variable count");
  c %= ch_.value();
  Poly r(ch_, nvars_, ord_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ch_.mul(t.coeff, c)});
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ch_.inv(leading_coeff()));
}

Poly Poly::pow(std::uint64_t n) const {
  Poly result = constant(ch_, nvars_, 1, ord_);
  Poly base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

Poly Poly::with_order(MonomialOrder ord) const {
  if (ord == ord_) return *this;
  return from_terms(ch_, nvars_, terms_, ord);
}

Poly Poly::with_tag(Monomial::Exponent tag) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back({t.mono.with_tag(tag), t.coeff});
  return from_terms(ch_, nvars_ + 1, std::move(ts), MonomialOrder::elimination());
}

Poly Poly::without_tag() const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono[nvars_ - 1] != 0) throw InconsistencyError("elimination tag leaked into a result");
    ts.push_back({t.mono.without_tag(), t.coeff});
  }
  return from_terms(ch_, nvars_ - 1, std::move(ts), MonomialOrder::grevlex());
}

Poly frobenius_pow(const Poly& a, std::uint64_t q) {
  PrimeChar ch = a.characteristic();
  if (!ch.log_p(q))
    throw InputError(std::to_string(q) + " is not a power of the characteristic " +
                     std::to_string(ch.value()));
  std::vector<Term> ts;
  ts.reserve(a.size());
  for (const auto& t : a.terms()) ts.push_back({t.mono.scaled(q), ch.pow(t.coeff, q)});
  // Scaling by q preserves the order; from_terms only re-checks it.
  return Poly::from_terms(ch, a.nvars(), std::move(ts), a.order());
}

}  // namespace tcl
