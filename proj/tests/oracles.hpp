/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

// Independent reference computations. They share only the field element
// arithmetic with the library and use no library linear algebra.

#include "eacqc/classical_code.hpp"
#include "eacqc/gf.hpp"
#include "eacqc/matrix.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<std::uint32_t>>;

inline Rows rows_of(const eacqc::Matrix &m) {
  Rows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    out[r].assign(m.row(r).begin(), m.row(r).end());
  return out;
}

/// Rank by plain Gaussian elimination without row reduction above pivots.
inline std::size_t rank(const eacqc::GaloisField &f, Rows a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0)
      ++piv;
    if (piv == a.size())
      continue;
    std::swap(a[piv], a[rank]);
    const std::uint32_t inv = f.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0)
        continue;
      const std::uint32_t factor = f.mul(a[r][c], inv);
      for (std::size_t j = c; j < cols; ++j)
        a[r][j] = f.sub(a[r][j], f.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(const eacqc::Matrix &m) {
  return rank(*m.field(), rows_of(m));
}

/// Every vector in the row span, enumerated (q^rows combinations).
inline std::set<std::vector<std::uint32_t>> span(const eacqc::GaloisField &f,
                                                 const Rows &rows,
                                                 std::size_t cols) {
  std::set<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> coeff(rows.size(), 0);
  while (true) {
    std::vector<std::uint32_t> v(cols, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        v[j] = f.add(v[j], f.mul(coeff[i], rows[i][j]));
    out.insert(std::move(v));
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == f.size())
      coeff[i++] = 0;
    if (i == coeff.size())
      break;
  }
  return out;
}

/// log_q of a power of q.
inline std::size_t log_size(std::size_t count, std::uint32_t q) {
  std::size_t d = 0;
  while (count > 1) {
    count /= q;
    ++d;
  }
  return d;
}

/// dim(rowspace A ∩ rowspace B) by enumerating both spans.
inline std::size_t intersection_dim_by_span(const eacqc::Matrix &a,
                                            const eacqc::Matrix &b) {
  const auto &f = *a.field();
  const auto sa = span(f, rows_of(a), a.cols());
  const auto sb = span(f, rows_of(b), b.cols());
  std::size_t common = 0;
  for (const auto &v : sa)
    common += sb.count(v);
  return log_size(common, f.size());
}

inline std::size_t weight(const std::vector<std::uint32_t> &v) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; }));
}

/// Minimum nonzero weight over the full span of the generator; n + 1 for the
/// zero code.
inline std::int64_t min_distance(const eacqc::ClassicalCode &code) {
  const auto &g = code.generator();
  std::size_t best = code.length() + 1;
  for (const auto &v : span(*g.field(), rows_of(g), g.cols())) {
    const auto w = weight(v);
    if (w > 0)
      best = std::min(best, w);
  }
  return static_cast<std::int64_t>(best);
}

/// Quaternary entropy with 50-digit arithmetic.
inline double entropy_q4(double gamma) {
  using F = boost::multiprecision::cpp_bin_float_50;
  if (gamma == 0.0)
    return 0.0;
  const F g(gamma);
  const F one(1);
  F h = g * log(F(3)) - g * log(g);
  if (gamma < 1.0)
    h -= (one - g) * log(one - g);
  return static_cast<double>(h / log(F(4)));
}

/// Uniform random matrix.
inline eacqc::Matrix random_matrix(const eacqc::Field &f, std::size_t rows,
                                   std::size_t cols, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f->size() - 1);
  eacqc::Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, dist(rng));
  return m;
}

} // namespace oracle
