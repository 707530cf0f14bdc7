/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/classical_code.hpp"
#include "eacqc/error.hpp"

#include <algorithm>
#include <limits>

namespace eacqc {

namespace {

Matrix full_rank_basis(const Matrix &m) {
  if (m.rank() == m.rows())
    return m;
  return m.rowspace_basis();
}

void check_distance(const Distance &d, std::size_t n, std::size_t k) {
  if (!d.known())
    return;
  const auto upper = static_cast<std::int64_t>(n - k + 1);
  if (d.value < 1 || d.value > upper)
    throw Error(ErrorKind::InvalidDistance,
                "d = " + std::to_string(d.value) + " outside [1, " +
                    std::to_string(upper) + "]");
}

// q^k, saturating at uint64 max.
std::uint64_t saturating_pow(std::uint64_t q, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

} // namespace

ClassicalCode::ClassicalCode(Matrix generator, Matrix parity_check,
                             Distance distance)
    : generator_(std::move(generator)), parity_check_(std::move(parity_check)),
      distance_(distance) {
  check_distance(distance_, length(), dimension());
}

ClassicalCode ClassicalCode::from_generator(const Matrix &generator,
                                            Distance distance) {
  Matrix g = full_rank_basis(generator);
  Matrix h = g.nullspace();
  return ClassicalCode(std::move(g), std::move(h), distance);
}

ClassicalCode ClassicalCode::from_parity_check(const Matrix &parity_check,
                                               Distance distance) {
  Matrix h = full_rank_basis(parity_check);
  Matrix g = h.nullspace();
  return ClassicalCode(std::move(g), std::move(h), distance);
}

ClassicalCode ClassicalCode::with_distance(Distance distance) const {
  return ClassicalCode(generator_, parity_check_, distance);
}

bool ClassicalCode::contains(std::span<const std::uint32_t> word) const {
  if (word.size() != length())
    throw Error(ErrorKind::DimensionMismatch, "word length");
  const GaloisField &f = *field();
  for (std::size_t r = 0; r < parity_check_.rows(); ++r) {
    std::uint32_t acc = 0;
    const auto row = parity_check_.row(r);
    for (std::size_t c = 0; c < word.size(); ++c)
      acc = f.add(acc, f.mul(row[c], word[c]));
    if (acc != 0)
      return false;
  }
  return true;
}

ClassicalCode dual(const ClassicalCode &code) {
  return ClassicalCode::from_generator(code.parity_check());
}

ClassicalCode hermitian_dual(const ClassicalCode &code, std::uint32_t base) {
  return ClassicalCode::from_generator(code.parity_check().conjugate(base));
}

Distance min_distance(const ClassicalCode &code, std::uint64_t budget) {
  if (budget < 1)
    throw Error(ErrorKind::BudgetInvalid, "budget must be >= 1");
  const std::size_t n = code.length(), k = code.dimension();
  if (k == 0)
    return Distance::exact(static_cast<std::int64_t>(n) + 1);
  const GaloisField &f = *code.field();
  const std::uint32_t q = f.size();
  if (saturating_pow(q, k) > budget)
    return Distance::unknown();

  const Matrix &g = code.generator();
  std::size_t best = n;
  std::vector<std::uint32_t> word(n);
  std::vector<std::uint32_t> digits(k);

  auto weight = [&] {
    return static_cast<std::size_t>(
        std::count_if(word.begin(), word.end(), [](auto v) { return v != 0; }));
  };
  auto add_scaled_row = [&](std::size_t r, std::uint32_t scale) {
    const auto row = g.row(r);
    for (std::size_t c = 0; c < n; ++c)
      word[c] = f.add(word[c], f.mul(scale, row[c]));
  };

  // Scalar multiples share a weight: fix the first nonzero message symbol
  // to 1 and run an odometer over the symbols after it.
  for (std::size_t lead = 0; lead < k && best > 1; ++lead) {
    std::copy(g.row(lead).begin(), g.row(lead).end(), word.begin());
    std::fill(digits.begin(), digits.end(), 0);
    while (true) {
      best = std::min(best, weight());
      if (best == 1)
        break;
      std::size_t pos = lead + 1;
      while (pos < k) {
        const std::uint32_t old = digits[pos];
        const std::uint32_t next = old + 1 == q ? 0 : old + 1;
        digits[pos] = next;
        add_scaled_row(pos, f.sub(next, old));
        if (next != 0)
          break;
        ++pos;
      }
      if (pos == k)
        break;
    }
  }
  return Distance::exact(static_cast<std::int64_t>(best));
}

ClassicalCode with_computed_distance(const ClassicalCode &code,
                                     std::uint64_t budget) {
  return code.with_distance(min_distance(code, budget));
}

std::string_view to_string(DefectClass cls) {
  switch (cls) {
  case DefectClass::Mds:
    return "MDS";
  case DefectClass::Amds:
    return "AMDS";
  case DefectClass::Nmds:
    return "NMDS";
  case DefectClass::HbarMds:
    return "hbar-MDS";
  }
  return "?";
}

DefectReport singleton_defect(const ClassicalCode &code,
                              std::uint64_t dual_budget) {
  const Distance &d = code.distance();
  if (!d.known())
    throw Error(ErrorKind::DistanceUnknown,
                "Singleton defect needs a known or bounded distance");
  const auto n = static_cast<std::int64_t>(code.length());
  const auto k = static_cast<std::int64_t>(code.dimension());
  DefectReport report;
  report.defect = n - k + 1 - d.value;
  report.from_bound = d.kind == Distance::Kind::DesignLowerBound;
  if (report.defect == 0) {
    report.cls = DefectClass::Mds;
  } else if (report.defect == 1) {
    report.cls = DefectClass::Amds;
    const ClassicalCode dual_code = dual(code);
    const Distance dd = min_distance(dual_code, dual_budget);
    if (dd.kind == Distance::Kind::Exact && n - (n - k) + 1 - dd.value == 1)
      report.cls = DefectClass::Nmds;
  } else {
    report.cls = DefectClass::HbarMds;
  }
  return report;
}

} // namespace eacqc
