/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "eacqc/gf.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eacqc {

/// Dense row-major matrix over a finite field. Empty shapes (0 rows or
/// 0 columns) are valid and have rank 0.
class Matrix {
public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols,
         std::vector<std::uint32_t> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field,
                          const std::vector<std::vector<std::uint32_t>> &rows);

  const Field &field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<std::uint32_t> &entries() const { return data_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v);
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  /// Entrywise x -> x^base; the field must have size base^2.
  Matrix conjugate(std::uint32_t base) const;
  /// Transpose with entrywise x -> x^base (the Hermitian adjoint).
  Matrix conj_transpose(std::uint32_t base) const;

  Matrix operator*(const Matrix &rhs) const;
  bool operator==(const Matrix &rhs) const;

  /// Row-reduced echelon form plus the pivot column of each nonzero row.
  struct Echelon;
  Echelon rref() const;

  std::size_t rank() const;

  /// Canonical basis of {x : M x^T = 0}, one basis vector per row. Row i has
  /// a 1 in the i-th free column (ascending) and zeros in the other free
  /// columns.
  Matrix nullspace() const;

  /// The nonzero rows of rref(): a canonical basis of the row space.
  Matrix rowspace_basis() const;

  bool is_zero() const;

private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

struct Matrix::Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// A on top of B. Column counts and fields must agree.
Matrix vstack(const Matrix &a, const Matrix &b);

/// dim(rowspace(A) ∩ rowspace(B)) = rank A + rank B - rank [A; B].
std::size_t rowspace_intersection_dim(const Matrix &a, const Matrix &b);

/// v * M for a row vector v.
std::vector<std::uint32_t> row_times(std::span<const std::uint32_t> v,
                                     const Matrix &m);

} // namespace eacqc
