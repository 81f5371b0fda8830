#include "tcl/groebner.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "reducer.hpp"
#include "tcl/errors.hpp"

namespace tcl {

namespace detail {

std::size_t Reducer::add(Poly p) {
  std::uint32_t mask = mask_of(p.leading_monomial());
  entries_.push_back({std::move(p), mask, true});
  return entries_.size() - 1;
}

Poly Reducer::reduce(const Poly& f, std::size_t skip) const {
  auto less = [ord = ord_](const Term& a, const Term& b) {
    return compare_unchecked(a.mono, b.mono, ord) < 0;
  };
  std::vector<Term> heap(f.terms().begin(), f.terms().end());
  std::make_heap(heap.begin(), heap.end(), less);
  std::vector<Term> remainder;

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), less);
    Term top = heap.back();
    heap.pop_back();
    while (!heap.empty() && heap.front().mono == top.mono) {
      top.coeff = ch_.add(top.coeff, heap.front().coeff);
      std::pop_heap(heap.begin(), heap.end(), less);
      heap.pop_back();
    }
    if (top.coeff == 0) continue;

    const std::uint32_t mask = mask_of(top.mono);
    const Entry* divisor = nullptr;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const Entry& e = entries_[i];
      if (!e.active || i == skip || (e.mask & ~mask) != 0) continue;
      if (e.poly.leading_monomial().divides(top.mono)) {
        divisor = &e;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(top);
      continue;
    }
    const Monomial factor = top.mono / divisor->poly.leading_monomial();
    const std::uint32_t mult = ch_.neg(top.coeff);
    const auto& ts = divisor->poly.terms();
    for (std::size_t k = 1; k < ts.size(); ++k) {
      heap.push_back({ts[k].mono * factor, ch_.mul(ts[k].coeff, mult)});
      std::push_heap(heap.begin(), heap.end(), less);
    }
  }
  return Poly::from_sorted_terms(ch_, nvars_, std::move(remainder), ord_);
}

}  // namespace detail

namespace {

// Lexicographic comparison of term lists, used only to detect duplicates.
bool term_list_less(const Poly& a, const Poly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_unchecked(x[i].mono, y[i].mono, a.order());
    if (c != 0) return c < 0;
    if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff;
  }
  return x.size() < y.size();
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

IdealGens::IdealGens(PrimeChar ch, std::size_t nvars, std::vector<Poly> gens) : ch_(ch), nvars_(nvars) {
  std::vector<Poly> seen;
  for (auto& g : gens) {
    if (g.nvars() != nvars || !(g.characteristic() == ch))
      throw InputError("generator does not belong to the ring");
    if (g.is_zero()) continue;
    Poly m = g.monic();
    auto it = std::lower_bound(seen.begin(), seen.end(), m, term_list_less);
    if (it != seen.end() && *it == m) continue;
    seen.insert(it, m);
    gens_.push_back(std::move(m));
  }
}

IdealGens IdealGens::unit(PrimeChar ch, std::size_t nvars) {
  return IdealGens(ch, nvars, {Poly::constant(ch, nvars, 1)});
}

bool IdealGens::is_homogeneous() const noexcept {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_homogeneous(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const IdealGens& g, MonomialOrder ord) {
  GroebnerBasis out(g.characteristic(), g.nvars(), ord);
  const PrimeChar ch = g.characteristic();
  detail::Reducer red(ch, g.nvars(), ord);
  std::vector<Pair> pairs;

  std::vector<Poly> input;
  input.reserve(g.size());
  for (const auto& p : g.gens()) input.push_back(p.with_order(ord));
  std::stable_sort(input.begin(), input.end(), [ord](const Poly& a, const Poly& b) {
    return compare_unchecked(a.leading_monomial(), b.leading_monomial(), ord) < 0;
  });

  bool unit = false;
  // Gebauer-Moeller installation of a new basis element h.
  auto install = [&](Poly h) {
    if (h.is_constant()) {
      unit = true;
      return;
    }
    const std::size_t k = red.add(std::move(h));
    const Monomial& lmh = red.lm(k);

    std::vector<Pair> candidates;
    for (std::size_t j = 0; j < k; ++j)
      if (red.active(j)) candidates.push_back({j, k, red.lm(j).lcm(lmh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = red.lm(p.i).coprime(lmh);
      if (!keep) {
        keep = true;
        for (std::size_t o = c + 1; o < candidates.size() && keep; ++o)
          if (candidates[o].lcm.divides(p.lcm)) keep = false;
        for (std::size_t o = 0; o < kept.size() && keep; ++o)
          if (kept[o].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (auto& p : pairs) {
      bool drop = lmh.divides(p.lcm) && !(red.lm(p.i).lcm(lmh) == p.lcm) &&
                  !(red.lm(p.j).lcm(lmh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!red.lm(p.i).coprime(lmh)) next.push_back(std::move(p));
    pairs = std::move(next);

    for (std::size_t j = 0; j < k; ++j)
      if (red.active(j) && lmh.divides(red.lm(j))) red.deactivate(j);
  };

  for (const auto& p : input) {
    Poly h = red.reduce(p);
    if (!h.is_zero()) install(h.monic());
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < pairs.size(); ++c) {
      int cmp = compare_unchecked(pairs[c].lcm, pairs[best].lcm, ord);
      if (cmp < 0 || (cmp == 0 && std::tie(pairs[c].i, pairs[c].j) < std::tie(pairs[best].i, pairs[best].j)))
        best = c;
    }
    Pair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    const Poly& a = red.poly(p.i);
    const Poly& b = red.poly(p.j);
    Poly s = a.times_term(p.lcm / a.leading_monomial(), 1) - b.times_term(p.lcm / b.leading_monomial(), 1);
    Poly h = red.reduce(s);
    if (!h.is_zero()) install(h.monic());
  }

  if (unit) {
    out.basis_.push_back(Poly::constant(ch, g.nvars(), 1, ord));
    return out;
  }

  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < red.size(); ++i)
    if (red.active(i)) live.push_back(i);
  for (std::size_t i : live) red.replace(i, red.reduce(red.poly(i), i).monic());
  for (std::size_t i : live) out.basis_.push_back(red.poly(i));
  std::sort(out.basis_.begin(), out.basis_.end(), [ord](const Poly& x, const Poly& y) {
    return compare_unchecked(x.leading_monomial(), y.leading_monomial(), ord) > 0;
  });
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
  if (f.nvars() != gb.nvars()) throw InputError("mismatched variable count");
  detail::Reducer red(gb.characteristic(), gb.nvars(), gb.order());
  for (const auto& g : gb.basis()) red.add(g);
  return red.reduce(f.with_order(gb.order()));
}

bool member(const Poly& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  return normal_form(f, gb).is_zero();
}

IdealGens ideal_sum(const IdealGens& a, const IdealGens& b) {
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return IdealGens(a.characteristic(), a.nvars(), std::move(gens));
}

IdealGens ideal_product(const IdealGens& a, const IdealGens& b) {
  std::vector<Poly> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) gens.push_back(x * y);
  return IdealGens(a.characteristic(), a.nvars(), std::move(gens));
}

IdealGens ideal_power(const IdealGens& a, unsigned n) {
  if (n == 0) return IdealGens::unit(a.characteristic(), a.nvars());
  std::vector<Poly> gens;
  const auto& base = a.gens();
  // Multisets of size n as non-decreasing index sequences.
  std::vector<std::size_t> idx(n, 0);
  if (base.empty()) return IdealGens(a.characteristic(), a.nvars());
  for (;;) {
    Poly prod = base[idx[0]];
    for (unsigned k = 1; k < n; ++k) prod = prod * base[idx[k]];
    gens.push_back(std::move(prod));
    int k = static_cast<int>(n) - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == base.size() - 1) --k;
    if (k < 0) break;
    std::size_t v = ++idx[static_cast<std::size_t>(k)];
    for (std::size_t m = static_cast<std::size_t>(k) + 1; m < n; ++m) idx[m] = v;
  }
  return IdealGens(a.characteristic(), a.nvars(), std::move(gens));
}

IdealGens bracket_power(const IdealGens& a, std::uint64_t q) {
  if (!a.characteristic().log_p(q))
    throw InputError(std::to_string(q) + " is not a power of the characteristic " +
                     std::to_string(a.characteristic().value()));
  std::vector<Poly> gens;
  gens.reserve(a.size());
  for (const auto& g : a.gens()) gens.push_back(frobenius_pow(g, q));
  return IdealGens(a.characteristic(), a.nvars(), std::move(gens));
}

IdealGens intersect(const IdealGens& a, const IdealGens& b) {
  if (a.nvars() != b.nvars()) throw InputError("mismatched variable count");
  const PrimeChar ch = a.characteristic();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return IdealGens(ch, a.nvars());

  std::vector<Poly> tagged;
  tagged.reserve(a.size() + b.size());
  for (const auto& x : a.gens()) tagged.push_back(x.with_tag(1));
  for (const auto& y : b.gens()) tagged.push_back(y.with_tag(0) - y.with_tag(1));
  GroebnerBasis gb = buchberger(IdealGens(ch, a.nvars() + 1, std::move(tagged)), MonomialOrder::elimination());

  const std::size_t tag = a.nvars();
  std::vector<Poly> result;
  for (const auto& g : gb.basis())
    if (g.leading_monomial()[tag] == 0) result.push_back(g.without_tag());
  return IdealGens(ch, a.nvars(), std::move(result));
}

Poly divide_exact(const Poly& a, const Poly& g) {
  if (g.is_zero()) throw InputError("division by zero polynomial");
  const PrimeChar ch = a.characteristic();
  const std::uint32_t inv = ch.inv(g.leading_coeff());
  Poly rest = a;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) throw InconsistencyError("inexact polynomial division");
    Term qt{lt.mono / g.leading_monomial(), ch.mul(lt.coeff, inv)};
    quotient.push_back(qt);
    rest = rest - g.times_term(qt.mono, qt.coeff);
  }
  return Poly::from_sorted_terms(ch, a.nvars(), std::move(quotient), a.order());
}

IdealGens colon(const IdealGens& a, const IdealGens& b) {
  if (b.is_zero_ideal()) throw InputError("colon by the zero ideal");
  std::optional<IdealGens> acc;
  for (const auto& g : b.gens()) {
    IdealGens part = a;
    if (!g.is_constant()) {
      IdealGens cut = intersect(a, IdealGens(a.characteristic(), a.nvars(), {g}));
      std::vector<Poly> q;
      q.reserve(cut.size());
      for (const auto& h : cut.gens()) q.push_back(divide_exact(h, g));
      part = IdealGens(a.characteristic(), a.nvars(), std::move(q));
    }
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

bool contains(const GroebnerBasis& a, const IdealGens& b) {
  if (a.nvars() != b.nvars()) throw InputError("mismatched variable count");
  detail::Reducer red(a.characteristic(), a.nvars(), a.order());
  for (const auto& g : a.basis()) red.add(g);
  return std::all_of(b.gens().begin(), b.gens().end(),
                     [&](const Poly& g) { return red.reduce(g.with_order(a.order())).is_zero(); });
}

bool ideal_equal(const IdealGens& a, const IdealGens& b) {
  return contains(buchberger(b), a) && contains(buchberger(a), b);
}

}  // namespace tcl
