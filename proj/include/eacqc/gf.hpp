/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace eacqc {

/// Exact arithmetic in GF(p^m).
///
/// Elements are plain integers in [0, q) holding the polynomial-basis
/// coefficients in base p: value = sum c_i p^i, where c_i multiplies x^i
/// modulo the field's monic irreducible modulus. Multiplication goes through
/// discrete log tables built once at construction; they are not part of the
/// observable encoding.
///
/// Instances are immutable and shared. Use GaloisField::make, which returns a
/// cached instance for each distinct (p, m, modulus).
class GaloisField {
public:
  static constexpr std::uint64_t max_size = std::uint64_t{1} << 20;

  /// Builds (or fetches) GF(p^m). When `modulus` is omitted, m = 1 uses x and
  /// m > 1 uses the built-in Conway polynomial table.
  static std::shared_ptr<const GaloisField>
  make(std::uint32_t p, std::uint32_t m,
       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Convenience lookup by field size using the default modulus.
  static std::shared_ptr<const GaloisField> of_size(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  /// m + 1 coefficients, lowest degree first, leading coefficient 1.
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0)
      return 0;
    return exp_[log_[a] + log_[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// x -> x^base, for a field of size base^2.
  std::uint32_t frobenius(std::uint32_t a, std::uint32_t base) const;

  /// The generator used for the log tables.
  std::uint32_t primitive_element() const { return generator_; }

  std::vector<std::uint32_t> to_coefficients(std::uint32_t value) const;
  std::uint32_t from_coefficients(std::span<const std::uint32_t> coeffs) const;

  bool same_as(const GaloisField &other) const {
    return this == &other ||
           (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
  }

  GaloisField(std::uint32_t p, std::uint32_t m,
              std::vector<std::uint32_t> modulus);

private:
  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, bool subtract) const;
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> exp_; // length 2(q-1)
  std::vector<std::uint32_t> log_; // log_[0] unused
  std::vector<std::uint32_t> add_table_; // q*q when q is small and p odd
};

using Field = std::shared_ptr<const GaloisField>;

bool same_field(const Field &a, const Field &b);

/// Throws FieldMismatch unless both fields are structurally equal.
void require_same_field(const Field &a, const Field &b, const char *what);

/// True when n is prime (trial division; n < 2^32).
bool is_prime(std::uint64_t n);

/// Monic irreducibility test over GF(p) by trial division against every
/// monic polynomial of degree <= deg/2. Coefficients lowest first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Default modulus for GF(p^m), or nullopt when none is shipped.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p,
                                                          std::uint32_t m);

/// A value tagged with its field. Mixing fields throws FieldMismatch.
class FieldElement {
public:
  FieldElement(Field field, std::uint32_t value);

  const Field &field() const { return field_; }
  std::uint32_t value() const { return value_; }

  FieldElement operator+(const FieldElement &o) const;
  FieldElement operator-(const FieldElement &o) const;
  FieldElement operator*(const FieldElement &o) const;
  FieldElement operator/(const FieldElement &o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(std::uint32_t base) const;

  bool operator==(const FieldElement &o) const {
    return same_field(field_, o.field_) && value_ == o.value_;
  }

private:
  Field field_;
  std::uint32_t value_;
};

} // namespace eacqc
