#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace reeblab {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Throws Error on int64 overflow.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form D = U * M * V with U, V unimodular and D diagonal with
/// non-negative entries d_1 | d_2 | ... .
struct SmithForm {
  /// The min(rows, cols) diagonal entries, zeros last.
  std::vector<std::int64_t> factors;
  std::size_t cols = 0;
  IntMatrix left;   // U
  IntMatrix right;  // V

  std::size_t nonzero() const;
  /// Free rank of the cokernel Z^cols / (row lattice).
  std::size_t cokernel_free_rank() const { return cols - nonzero(); }
};

/// Computes the Smith form; arithmetic is checked and throws Error on
/// int64 overflow.
SmithForm smith_normal_form(const IntMatrix& m);

/// True when v is an integer combination of the rows of m.
bool lattice_contains(const IntMatrix& rows, std::span<const std::int64_t> v);

}  // namespace reeblab
