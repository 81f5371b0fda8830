#ifndef TCL_LINALG_HPP
#define TCL_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tcl/field.hpp"

namespace tcl {

// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(PrimeChar ch, std::size_t rows, std::size_t cols)
      : ch_(ch), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  PrimeChar characteristic() const noexcept { return ch_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<std::uint32_t>& row);

  // In-place reduced row echelon form. Pivots are chosen column by column,
  // taking the first row with a nonzero entry. Returns the pivot columns.
  std::vector<std::size_t> row_reduce();

 private:
  PrimeChar ch_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

// Basis of {x : M x = 0}, one vector per free column in increasing order,
// each with a 1 in its free column.
std::vector<std::vector<std::uint32_t>> kernel_basis(FpMatrix m);

}  // namespace tcl

#endif  // TCL_LINALG_HPP
