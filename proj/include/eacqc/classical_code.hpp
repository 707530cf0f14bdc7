/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "eacqc/matrix.hpp"

#include <cstdint>
#include <string_view>

namespace eacqc {

/// Minimum-distance knowledge. Published tables mix exact values and design
/// lower bounds, so the two are never conflated.
struct Distance {
  enum class Kind { Exact, DesignLowerBound, Unknown };

  Kind kind = Kind::Unknown;
  std::int64_t value = 0;

  static Distance exact(std::int64_t d) { return {Kind::Exact, d}; }
  static Distance lower_bound(std::int64_t d) {
    return {Kind::DesignLowerBound, d};
  }
  static Distance unknown() { return {}; }

  bool known() const { return kind != Kind::Unknown; }
  bool operator==(const Distance &) const = default;
};

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1}
                                                            << 24;

/// An [n, k, d]_q linear code carrying both a generator matrix (k x n) and a
/// parity-check matrix ((n-k) x n), each of full row rank.
///
/// The zero code (k = 0) has no nonzero codeword; its distance is taken to be
/// n + 1 so the Singleton bound d <= n - k + 1 still holds with equality.
class ClassicalCode {
public:
  static ClassicalCode from_generator(const Matrix &generator,
                                      Distance distance = Distance::unknown());
  static ClassicalCode from_parity_check(const Matrix &parity_check,
                                         Distance distance = Distance::unknown());

  const Field &field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const Matrix &generator() const { return generator_; }
  const Matrix &parity_check() const { return parity_check_; }
  const Distance &distance() const { return distance_; }

  ClassicalCode with_distance(Distance distance) const;

  /// Membership test: H x^T = 0.
  bool contains(std::span<const std::uint32_t> word) const;

private:
  ClassicalCode(Matrix generator, Matrix parity_check, Distance distance);

  Matrix generator_;
  Matrix parity_check_;
  Distance distance_;
};

/// Euclidean dual: generator = H of C, parity check = G of C.
ClassicalCode dual(const ClassicalCode &code);

/// Hermitian dual over GF(base^2): the entrywise conjugate of the Euclidean
/// dual.
ClassicalCode hermitian_dual(const ClassicalCode &code, std::uint32_t base);

/// Brute-force minimum distance. Enumerates one representative per
/// one-dimensional subspace of the message space when q^k <= budget, and
/// returns Unknown otherwise.
Distance min_distance(const ClassicalCode &code,
                      std::uint64_t budget = default_enumeration_budget);

/// Copy of `code` with an exact distance if it fits in the budget.
ClassicalCode with_computed_distance(const ClassicalCode &code,
                                     std::uint64_t budget = default_enumeration_budget);

enum class DefectClass { Mds, Amds, Nmds, HbarMds };

std::string_view to_string(DefectClass cls);

struct DefectReport {
  std::int64_t defect = 0;
  DefectClass cls = DefectClass::Mds;
  /// The stored distance was a design bound, so the defect is an upper bound.
  bool from_bound = false;
};

/// Singleton defect n - k + 1 - d and its class. An AMDS code is labelled
/// NMDS when its dual's exact defect (enumerated within `dual_budget`) is 1.
DefectReport singleton_defect(const ClassicalCode &code,
                              std::uint64_t dual_budget = default_enumeration_budget);

} // namespace eacqc
