#ifndef TCL_SRC_REDUCER_HPP
#define TCL_SRC_REDUCER_HPP

#include <cstdint>
#include <vector>

#include "tcl/poly.hpp"

namespace tcl::detail {

// Owns a list of monic divisors and reduces polynomials against them.
// Entries can be switched off without renumbering, which is what the
// Buchberger loop needs when a new element makes an old one redundant.
class Reducer {
 public:
  Reducer(PrimeChar ch, std::size_t nvars, MonomialOrder ord) : ch_(ch), nvars_(nvars), ord_(ord) {}

  // Precondition: p is nonzero, monic, in this reducer's order.
  std::size_t add(Poly p);
  void deactivate(std::size_t i) { entries_[i].active = false; }
  bool active(std::size_t i) const { return entries_[i].active; }
  std::size_t size() const { return entries_.size(); }
  const Poly& poly(std::size_t i) const { return entries_[i].poly; }
  const Monomial& lm(std::size_t i) const { return entries_[i].poly.leading_monomial(); }
  void replace(std::size_t i, Poly p) { entries_[i].poly = std::move(p); }

  // Full reduction. `skip` excludes one entry (used for inter-reduction).
  Poly reduce(const Poly& f, std::size_t skip = static_cast<std::size_t>(-1)) const;

  static std::uint32_t mask_of(const Monomial& m) noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) mask |= 1U << i;
    return mask;
  }

 private:
  struct Entry {
    Poly poly;
    std::uint32_t mask;
    bool active;
  };

  PrimeChar ch_;
  std::size_t nvars_;
  MonomialOrder ord_;
  std::vector<Entry> entries_;
};

}  // namespace tcl::detail

#endif  // TCL_SRC_REDUCER_HPP
