#include "tcl/linalg.hpp"

#include <stdexcept>

namespace tcl {

void FpMatrix::append_row(const std::vector<std::uint32_t>& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> FpMatrix::row_reduce() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pr = r;
    while (pr < rows_ && at(pr, c) == 0) ++pr;
    if (pr == rows_) continue;
    if (pr != r)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(pr, k), at(r, k));
    const std::uint32_t inv = ch_.inv(at(r, c));
    for (std::size_t k = c; k < cols_; ++k) at(r, k) = ch_.mul(at(r, k), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const std::uint32_t f = at(i, c);
      for (std::size_t k = c; k < cols_; ++k) at(i, k) = ch_.sub(at(i, k), ch_.mul(f, at(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::uint32_t>> kernel_basis(FpMatrix m) {
  const PrimeChar ch = m.characteristic();
  const auto pivots = m.row_reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = ch.neg(m.at(i, f));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace tcl
