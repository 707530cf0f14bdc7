/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eacqc {

// ---------------------------------------------------------------------------
// Length bounds and rational points
// ---------------------------------------------------------------------------

/// floor(2 sqrt(q)), exact.
std::uint64_t floor_two_sqrt(std::uint64_t q);

/// Lower bound on the maximum length of a q-ary AMDS code of dimension
/// 2 <= k <= n - 2: q + floor(2 sqrt q), plus one unless p divides
/// floor(2 sqrt q) with m odd and m >= 3.
std::uint64_t amds_length_bound(std::uint64_t p, unsigned m);

/// Maximum number of rational points on a genus-2 curve over GF(p^m).
std::uint64_t genus2_points(std::uint64_t p, unsigned m);

/// q + 1 + g floor(2 sqrt q).
std::uint64_t weil_bound(std::uint64_t q, std::uint64_t g);

struct EaqLengthBounds {
  std::uint64_t b = 0;
  std::uint64_t c = 0;
};

/// (q^2 + 2q + 1, q^2 + 4q + 1), with the second value 10 for q = 2 and 20
/// for q = 3.
EaqLengthBounds eaq_length_bounds(std::uint64_t p, unsigned m);

// ---------------------------------------------------------------------------
// Real-valued asymptotics
// ---------------------------------------------------------------------------

/// Quaternary entropy on [0, 1] with H(0) = 0.
double entropy_q4(double gamma);

/// 1 - delta - 1/(sqrt(q) - 1) for a square q >= 4 and
/// 0 <= delta <= 1 - 1/(sqrt(q) - 1).
double tvz_rate(std::uint64_t q, double delta);

/// Root in [0, 3/4] of 2 H4(x) = 1 - r_e + c_e, by bisection.
double gv_root_x0(double r_e, double c_e);

enum class Family { P1a, P1b, C5, C6, C7, C8, GV };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilyParams {
  Family family = Family::C5;
  /// Extension degree of the outer alphabet; unused by GV.
  int m = 0;
  /// Entanglement rate; GV only.
  double ce = 0.0;
};

/// Throws BadFamilyParams when (m, ce) is outside the family's range.
void check_family_params(const FamilyParams &params);

/// Upper end of the family's delta domain; the lower end is 0.
double family_delta_max(const FamilyParams &params);

/// True when delta is inside the domain (respecting strict upper ends).
bool in_family_domain(const FamilyParams &params, double delta);

/// Rate bound at delta. Throws BadFamilyParams or DomainError.
double family_rate(const FamilyParams &params, double delta);

/// Sampled (delta, R) curve.
struct BoundCurve {
  std::string label;
  double delta_min = 0.0;
  double delta_max = 0.0;
  std::vector<std::pair<double, double>> samples;
};

/// 0, step, 2 step, ... up to and including `max_delta`. Throws DomainError
/// for a non-positive or non-finite step.
std::vector<double> delta_grid(double step, double max_delta);

/// The family at each grid point inside its domain.
BoundCurve sample_curve(const FamilyParams &params, std::span<const double> grid);

/// Per grid point, the maximum rate over every valid m in [m_lo, m_hi] whose
/// domain contains it. Throws BadFamilyParams when no m in range is valid.
BoundCurve envelope_curve(Family family, int m_lo, int m_hi,
                          std::span<const double> grid);

/// Valid m values of the family within [m_lo, m_hi].
std::vector<int> valid_family_degrees(Family family, int m_lo, int m_hi);

/// Columns not computed here but kept so external data can be merged.
inline constexpr std::string_view comparator_columns[] = {
    "ext_quantum_zyablov", "ext_prior_maximal_ea"};

/// CSV with header `delta,<label>...,<comparators>`, one row per grid point,
/// `%.12g` values, blank cells outside a curve's domain, LF line endings.
std::string curves_csv(std::span<const double> grid,
                       std::span<const BoundCurve> curves);

} // namespace eacqc
