#include "reeblab/smith.hpp"

#include <cstdlib>
#include <utility>

#include "reeblab/error.hpp"

namespace reeblab {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in Smith normal form");
  return r;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return out;
}

std::size_t SmithForm::nonzero() const {
  std::size_t n = 0;
  for (auto d : factors) n += d != 0;
  return n;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr == rows || std::llabs(d(i, j)) < std::llabs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      swap_rows(d, t, pr);
      swap_rows(u, t, pr);
      swap_cols(d, t, pc);
      swap_cols(v, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        auto q = d(i, t) / d(t, t);
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        clean = clean && d(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        auto q = d(t, j) / d(t, t);
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      // Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(d, t, i, -1);
            row_axpy(u, t, i, -1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }

  SmithForm out;
  out.cols = cols;
  for (std::size_t t = 0; t < diag; ++t) out.factors.push_back(d(t, t));
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

bool lattice_contains(const IntMatrix& rows, std::span<const std::int64_t> v) {
  if (v.size() != rows.cols()) throw Error("lattice_contains: dimension mismatch");
  auto snf = smith_normal_form(rows);
  for (std::size_t j = 0; j < rows.cols(); ++j) {
    std::int64_t w = 0;
    for (std::size_t k = 0; k < rows.cols(); ++k)
      w = checked_add(w, checked_mul(v[k], snf.right(k, j)));
    std::int64_t d = j < snf.factors.size() ? snf.factors[j] : 0;
    if (d == 0 ? w != 0 : w % d != 0) return false;
  }
  return true;
}

}  // namespace reeblab
