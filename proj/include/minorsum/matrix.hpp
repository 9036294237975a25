#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "minorsum/rational.hpp"

namespace minorsum {

/// Row-major dense matrix over a field F. Immutable after construction.
template <typename F>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("entry count does not match rows*cols");
  }

  template <typename Fn>
  static DenseMatrix build(std::size_t rows, std::size_t cols, Fn&& entry) {
    std::vector<F> data;
    data.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) data.push_back(entry(i, j));
    return DenseMatrix(rows, cols, std::move(data));
  }

  static DenseMatrix from_rows(std::vector<std::vector<F>> rows) {
    std::size_t n = rows.size();
    std::size_t k = n == 0 ? 0 : rows.front().size();
    std::vector<F> data;
    data.reserve(n * k);
    for (auto& row : rows) {
      if (row.size() != k) throw std::invalid_argument("ragged row lengths");
      for (auto& x : row) data.push_back(std::move(x));
    }
    return DenseMatrix(n, k, std::move(data));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const F& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return at(i, j); }
  const std::vector<F>& entries() const { return entries_; }

  std::vector<F> column(std::size_t j) const {
    std::vector<F> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
  }

  /// Square submatrix picking the given rows (in order) and all columns.
  DenseMatrix pick_rows(std::span<const std::size_t> row_indices) const {
    std::vector<F> data;
    data.reserve(row_indices.size() * cols_);
    for (std::size_t r : row_indices)
      for (std::size_t j = 0; j < cols_; ++j) data.push_back(at(r, j));
    return DenseMatrix(row_indices.size(), cols_, std::move(data));
  }

  DenseMatrix with_column(std::size_t j, const std::vector<F>& col) const {
    if (col.size() != rows_) throw std::invalid_argument("column length mismatch");
    std::vector<F> data = entries_;
    for (std::size_t i = 0; i < rows_; ++i) data[i * cols_ + j] = col[i];
    return DenseMatrix(rows_, cols_, std::move(data));
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<F> entries_;
};

/// Skew-symmetric square matrix: entries(i,j) = -entries(j,i), zero diagonal.
/// Construction verifies antisymmetry (exactly for exact fields, within an
/// absolute tolerance for floating ones) and then forces it by copying the
/// upper triangle, so downstream algebra sees exact skewness.
template <typename F>
class SkewMatrix {
 public:
  static constexpr double kFloatSkewTolerance = 1e-12;

  static SkewMatrix from_full(std::size_t dim, std::vector<F> entries) {
    if (entries.size() != dim * dim)
      throw std::invalid_argument("entry count does not match dim*dim");
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i; j < dim; ++j) {
        const F& upper = entries[i * dim + j];
        const F& lower = entries[j * dim + i];
        if constexpr (is_exact_field_v<F>) {
          if (!(upper == -lower)) throw std::invalid_argument("matrix is not skew-symmetric");
        } else {
          if (std::abs(upper + lower) > kFloatSkewTolerance)
            throw std::invalid_argument("matrix is not skew-symmetric within tolerance");
        }
      }
    }
    force_skew(dim, entries);
    return SkewMatrix(dim, std::move(entries));
  }

  /// Builds from a generator for the strict upper triangle (i < j); the
  /// lower triangle and diagonal are derived.
  template <typename Fn>
  static SkewMatrix from_upper(std::size_t dim, Fn&& upper) {
    std::vector<F> entries;
    entries.reserve(dim * dim);
    if constexpr (std::is_constructible_v<F, int>) {
      entries.assign(dim * dim, F(0));
    } else {
      if (dim < 2)
        throw std::invalid_argument("dim < 2 needs an int-constructible field for the zero diagonal");
      F sample = upper(0, 1);
      F zero = sample - sample;
      entries.assign(dim * dim, zero);
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i + 1; j < dim; ++j) {
        F value = upper(i, j);
        entries[j * dim + i] = -value;
        entries[i * dim + j] = std::move(value);
      }
    }
    return SkewMatrix(dim, std::move(entries));
  }

  std::size_t dim() const { return dim_; }
  const F& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

  /// Working copy of the entries for elimination routines.
  std::vector<F> entries_copy() const { return entries_; }

  DenseMatrix<F> to_dense() const { return DenseMatrix<F>(dim_, dim_, entries_); }

  /// Simultaneous swap of rows i,j and columns i,j (negates the Pfaffian).
  SkewMatrix with_swapped(std::size_t i, std::size_t j) const {
    std::vector<F> e = entries_;
    for (std::size_t c = 0; c < dim_; ++c) std::swap(e[i * dim_ + c], e[j * dim_ + c]);
    for (std::size_t r = 0; r < dim_; ++r) std::swap(e[r * dim_ + i], e[r * dim_ + j]);
    return SkewMatrix(dim_, std::move(e));
  }

  /// Scales row i and column i by lambda (scales the Pfaffian by lambda).
  SkewMatrix with_index_scaled(std::size_t i, const F& lambda) const {
    std::vector<F> e = entries_;
    for (std::size_t c = 0; c < dim_; ++c) e[i * dim_ + c] = e[i * dim_ + c] * lambda;
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r != i) e[r * dim_ + i] = e[r * dim_ + i] * lambda;
    }
    return SkewMatrix(dim_, std::move(e));
  }

 private:
  SkewMatrix(std::size_t dim, std::vector<F> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  static void force_skew(std::size_t dim, std::vector<F>& entries) {
    for (std::size_t i = 0; i < dim; ++i) {
      entries[i * dim + i] = entries[i * dim + i] - entries[i * dim + i];
      for (std::size_t j = i + 1; j < dim; ++j)
        entries[j * dim + i] = -entries[i * dim + j];
    }
  }

  std::size_t dim_;
  std::vector<F> entries_;
};

}  // namespace minorsum
