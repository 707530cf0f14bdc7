/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/matrix.hpp"
#include "eacqc/error.hpp"

#include <algorithm>

namespace eacqc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_)
    throw Error(ErrorKind::InvalidParams, "matrix without a field");
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols,
               std::vector<std::uint32_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      data_(std::move(entries)) {
  if (!field_)
    throw Error(ErrorKind::InvalidParams, "matrix without a field");
  if (data_.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch,
                "entry count does not match " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  for (auto v : data_)
    if (v >= field_->size())
      throw Error(ErrorKind::InvalidParams,
                  "entry " + std::to_string(v) + " outside GF(" +
                      std::to_string(field_->size()) + ")");
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(Field field,
                         const std::vector<std::vector<std::uint32_t>> &rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint32_t> data;
  data.reserve(rows.size() * cols);
  for (const auto &r : rows) {
    if (r.size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

void Matrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
  if (v >= field_->size())
    throw Error(ErrorKind::InvalidParams, "entry outside the field");
  data_[r * cols_ + c] = v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Matrix Matrix::conjugate(std::uint32_t base) const {
  if (static_cast<std::uint64_t>(base) * base != field_->size())
    throw Error(ErrorKind::FieldMismatch,
                "conjugation needs a field of size " + std::to_string(base) +
                    "^2, have " + std::to_string(field_->size()));
  Matrix out = *this;
  for (auto &v : out.data_)
    v = field_->frobenius(v, base);
  return out;
}

Matrix Matrix::conj_transpose(std::uint32_t base) const {
  return conjugate(base).transpose();
}

Matrix Matrix::operator*(const Matrix &rhs) const {
  require_same_field(field_, rhs.field_, "matrix product across fields");
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(rows_) + "x" + std::to_string(cols_) + " times " +
                    std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  const GaloisField &f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const std::uint32_t a = data_[i * cols_ + l];
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        auto &dst = out.data_[i * rhs.cols_ + j];
        dst = f.add(dst, f.mul(a, rhs.data_[l * rhs.cols_ + j]));
      }
    }
  return out;
}

bool Matrix::operator==(const Matrix &rhs) const {
  return same_field(field_, rhs.field_) && rows_ == rhs.rows_ &&
         cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix::Echelon Matrix::rref() const {
  const GaloisField &f = *field_;
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
    std::size_t pivot = lead_row;
    while (pivot < rows_ && m.data_[pivot * cols_ + col] == 0)
      ++pivot;
    if (pivot == rows_)
      continue;
    if (pivot != lead_row)
      std::swap_ranges(m.data_.begin() + pivot * cols_,
                       m.data_.begin() + (pivot + 1) * cols_,
                       m.data_.begin() + lead_row * cols_);
    auto *prow = m.data_.data() + lead_row * cols_;
    const std::uint32_t scale = f.inv(prow[col]);
    for (std::size_t c = col; c < cols_; ++c)
      prow[c] = f.mul(prow[c], scale);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row)
        continue;
      auto *row = m.data_.data() + r * cols_;
      const std::uint32_t factor = row[col];
      if (factor == 0)
        continue;
      for (std::size_t c = col; c < cols_; ++c)
        row[c] = f.sub(row[c], f.mul(factor, prow[c]));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0)
    return 0;
  return rref().pivots.size();
}

Matrix Matrix::nullspace() const {
  const auto [reduced, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);

  const GaloisField &f = *field_;
  Matrix basis(field_, free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    basis.data_[i * cols_ + fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.data_[i * cols_ + pivots[r]] = f.neg(reduced.at(r, fc));
  }
  return basis;
}

Matrix Matrix::rowspace_basis() const {
  auto [reduced, pivots] = rref();
  std::vector<std::uint32_t> data(reduced.data_.begin(),
                                  reduced.data_.begin() + pivots.size() * cols_);
  return Matrix(field_, pivots.size(), cols_, std::move(data));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

Matrix vstack(const Matrix &a, const Matrix &b) {
  require_same_field(a.field(), b.field(), "vstack across fields");
  if (a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "vstack column counts differ");
  std::vector<std::uint32_t> data = a.entries();
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

std::size_t rowspace_intersection_dim(const Matrix &a, const Matrix &b) {
  require_same_field(a.field(), b.field(), "intersection across fields");
  if (a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "intersection column counts differ");
  return a.rank() + b.rank() - vstack(a, b).rank();
}

std::vector<std::uint32_t> row_times(std::span<const std::uint32_t> v,
                                     const Matrix &m) {
  if (v.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "vector length vs matrix rows");
  const GaloisField &f = *m.field();
  std::vector<std::uint32_t> out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    const auto r = m.row(i);
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = f.add(out[j], f.mul(v[i], r[j]));
  }
  return out;
}

} // namespace eacqc
