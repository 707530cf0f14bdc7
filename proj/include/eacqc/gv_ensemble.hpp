/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eacqc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Random concatenated ensemble: inner [n1, k1]_4 code with c1 ebits, outer
/// [n2, k2] code over GF(4^kbar1) with c2 ebits. n2 = 0 is the empty
/// concatenation.
struct EnsembleSpec {
  std::int64_t n1 = 1, k1 = 1, c1 = 0;
  std::int64_t n2 = 0, k2 = 0, c2 = 0;

  /// Throws InvalidParams unless 0 <= c_i <= n_i - k_i and both quantum
  /// dimensions are non-negative.
  static EnsembleSpec make(std::int64_t n1, std::int64_t k1, std::int64_t c1,
                           std::int64_t n2, std::int64_t k2, std::int64_t c2);

  std::int64_t r1() const { return n1 - k1; }
  std::int64_t r2() const { return n2 - k2; }
  std::int64_t kbar1() const { return 2 * k1 - n1 + c1; }
  std::int64_t kbar2() const { return 2 * k2 - n2 + c2; }
  std::int64_t ne() const { return n1 * n2; }
  std::int64_t ce() const { return c1 * n2 + c2 * kbar1(); }
  std::int64_t re() const { return ne() - kbar1() * kbar2(); }
  /// Rates are 0 for the empty concatenation.
  double rate() const;
  double ent_rate() const;
  double net_rate() const { return rate() - ent_rate(); }
  /// Inner classical rate k1 / n1.
  double inner_rate() const {
    return static_cast<double>(k1) / static_cast<double>(n1);
  }

  std::string to_string() const;
};

/// Exact polynomial with non-negative coefficients; index = weight.
struct WeightPolynomial {
  std::vector<BigInt> coeffs;
  std::int64_t ne = 0;

  BigInt at_one() const;
};

/// Psi_t(x) = C(n2, t) [(1 + 3x)^n1 - 1]^t, coefficients up to x^(n1 n2).
/// Requires 0 <= t <= n2 and n1 n2 <= 10^4.
WeightPolynomial psi_t(std::int64_t n1, std::int64_t n2, std::int64_t t);

/// Psi_t via M_t(w) = sum_i 3^i C(n1, i) M_{t-1}(w - i) and
/// N_t(w) = C(n2, t) M_t(w). Same preconditions as psi_t.
WeightPolynomial psi_t_recursive(std::int64_t n1, std::int64_t n2,
                                 std::int64_t t);

/// counts[t][w]: quaternary vectors of length n1 n2 with weight w and exactly
/// t nonzero blocks of length n1. Requires 4^(n1 n2) <= 2^24.
std::vector<std::vector<std::uint64_t>> nt_w_bruteforce(std::int64_t n1,
                                                        std::int64_t n2);

/// A positive real kept in log2 form; `value` is set when finite as a double.
struct Log2Value {
  double log2 = 0.0;
  std::optional<double> value;
};

/// 2^(-r_e - c_e) [(1 + 3x)^n1 + 4^r1]^n2 for 0 < x < 1.
Log2Value phi_upper_bound(const EnsembleSpec &spec, double x);

/// Exact sum_t 4^(-t r1 - kbar1 r2) Psi_t(x) over t = 1..n2 at rational x.
Rational phi_psi_sum(const EnsembleSpec &spec, const Rational &x);

/// log2 of 2^(n_e (R_e + 2 H4(gamma) - 1 - C_e)) [1 + 4^r1 (1 - gamma)^n1]^n2
/// for 0 < gamma <= 3/4.
double avg_codeword_bound(const EnsembleSpec &spec, double gamma);

struct ProbabilityBound {
  double log2 = 0.0;
  /// 4^(r1 / n1) (1 - delta).
  double tau = 0.0;
  /// tau^n1 n2.
  double c = 0.0;
};

/// log2 of (1 - d)/(1 - 2d) 2^(n_e (R_e + 2 H4(d) - 1 - C_e))
/// [1 + 4^r1 (1 - d)^n1]^n2 for 0 < d < 1/2.
ProbabilityBound theorem2_probability_bound(const EnsembleSpec &spec,
                                         double delta);

// ---------------------------------------------------------------------------
// Exhaustive ensembles
// ---------------------------------------------------------------------------

struct VectorFrequency {
  std::vector<std::uint32_t> u;
  bool info_zero = false;
  std::int64_t weight = 0;
  /// Fraction of systematic codes [I P] whose check [-P^T I] annihilates u.
  Rational frequency;
};

struct SyndromeStats {
  std::uint32_t field_size = 4;
  std::int64_t n = 0, k = 0;
  std::uint64_t ensemble_size = 0;
  Rational expected; // field_size^(-r)
  std::vector<VectorFrequency> vectors;
  /// Every info-zero vector has frequency 0 and every other one `expected`.
  bool identities_hold = false;
};

/// Enumerates every systematic [n, k] code over GF(field_size) and every
/// nonzero u. field_size is 4 or 16; n <= 3 and 1 <= k <= min(n, 2).
SyndromeStats ensemble_exhaustive(std::uint32_t field_size, std::int64_t n,
                                  std::int64_t k);

/// Exact ensemble average N(w), w = 0..n1 n2 (N(0) = 0), of the concatenation
/// of a uniform systematic [n1, k1]_4 inner code with a uniform systematic
/// [n2, k2] outer code over GF(4^k1). Outer symbols map to GF(4)^k1 through
/// the basis {1, alpha} of GF(16) over GF(4) with omega = alpha^5. Requires
/// k1 in {1, 2} and at most 2^24 ensemble members.
std::vector<Rational> concatenated_ensemble_average(std::int64_t n1,
                                                    std::int64_t k1,
                                                    std::int64_t n2,
                                                    std::int64_t k2);

/// The ensemble matching concatenated_ensemble_average: c1 = r1, c2 = r2.
EnsembleSpec concatenated_ensemble_spec(std::int64_t n1, std::int64_t k1,
                                        std::int64_t n2, std::int64_t k2);

std::string syndrome_report(const SyndromeStats &stats);

} // namespace eacqc
