/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/bounds.hpp"
#include "eacqc/error.hpp"
#include "eacqc/gf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace eacqc {

namespace {

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v)
    --r;
  while ((r + 1) * (r + 1) <= v)
    ++r;
  return r;
}

std::uint64_t field_order(std::uint64_t p, unsigned m) {
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1)
    throw Error(ErrorKind::InvalidParams, "degree m must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > GaloisField::max_size)
      throw Error(ErrorKind::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(m) + " > 2^20");
  }
  return q;
}

bool is_serre_special(std::uint64_t q, std::uint64_t p, std::uint64_t s) {
  if (s % p == 0)
    return true;
  for (std::uint64_t x = 0; x * x <= q; ++x)
    if (q == x * x + 1 || q == x * x + x + 1 || q == x * x + x + 2)
      return true;
  return false;
}

} // namespace

std::uint64_t floor_two_sqrt(std::uint64_t q) { return isqrt(4 * q); }

std::uint64_t amds_length_bound(std::uint64_t p, unsigned m) {
  const std::uint64_t q = field_order(p, m);
  const std::uint64_t s = floor_two_sqrt(q);
  const std::uint64_t chi = q + s;
  if (s % p == 0 && m >= 3 && m % 2 == 1)
    return chi;
  return chi + 1;
}

std::uint64_t genus2_points(std::uint64_t p, unsigned m) {
  const std::uint64_t q = field_order(p, m);
  const std::uint64_t s = floor_two_sqrt(q);
  if (m % 2 == 0) {
    if (q == 4)
      return 10;
    if (q == 9)
      return 20;
    return q + 1 + 2 * s; // 2s = 4 sqrt(q) exactly
  }
  if (!is_serre_special(q, p, s))
    return q + 1 + 2 * s;
  const double frac = 2.0 * std::sqrt(static_cast<double>(q)) -
                      static_cast<double>(s);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  return frac > golden ? q + 2 * s : q + 2 * s - 1;
}

std::uint64_t weil_bound(std::uint64_t q, std::uint64_t g) {
  return q + 1 + g * floor_two_sqrt(q);
}

EaqLengthBounds eaq_length_bounds(std::uint64_t p, unsigned m) {
  const std::uint64_t q = field_order(p, m);
  EaqLengthBounds out;
  out.b = q * q + 2 * q + 1;
  out.c = q == 2 ? 10 : q == 3 ? 20 : q * q + 4 * q + 1;
  return out;
}

double entropy_q4(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw Error(ErrorKind::DomainError, "entropy argument outside [0, 1]");
  const double log4_3 = std::log(3.0) / std::log(4.0);
  double h = gamma * log4_3;
  if (gamma > 0.0)
    h -= gamma * std::log(gamma) / std::log(4.0);
  if (gamma < 1.0)
    h -= (1.0 - gamma) * std::log1p(-gamma) / std::log(4.0);
  return h;
}

double tvz_rate(std::uint64_t q, double delta) {
  const std::uint64_t r = isqrt(q);
  if (q < 4 || r * r != q)
    throw Error(ErrorKind::NotSquare,
                std::to_string(q) + " is not a square >= 4");
  const double inv_a = 1.0 / (static_cast<double>(r) - 1.0);
  if (!(delta >= 0.0 && delta <= 1.0 - inv_a))
    throw Error(ErrorKind::DomainError, "delta outside [0, 1 - 1/A(q)]");
  return 1.0 - delta - inv_a;
}

double gv_root_x0(double r_e, double c_e) {
  const double target = 1.0 - r_e + c_e;
  if (!(target >= 0.0 && target <= 2.0))
    throw Error(ErrorKind::NoRoot, "2 H4(x) = " + std::to_string(target) +
                                       " has no root in [0, 3/4]");
  double lo = 0.0, hi = 0.75;
  // H4 is increasing on [0, 3/4]; stop once the bracket stops shrinking.
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (2.0 * entropy_q4(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return target - 2.0 * entropy_q4(lo) <= 2.0 * entropy_q4(hi) - target ? lo
                                                                        : hi;
}

// ---------------------------------------------------------------------------
// Rate families
// ---------------------------------------------------------------------------

std::string_view to_string(Family f) {
  switch (f) {
  case Family::P1a:
    return "P1a";
  case Family::P1b:
    return "P1b";
  case Family::C5:
    return "C5";
  case Family::C6:
    return "C6";
  case Family::C7:
    return "C7";
  case Family::C8:
    return "C8";
  case Family::GV:
    return "GV";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::P1a, Family::P1b, Family::C5, Family::C6, Family::C7,
                   Family::C8, Family::GV})
    if (to_string(f) == name)
      return f;
  return std::nullopt;
}

namespace {

constexpr int max_family_degree = 120;

bool degree_ok(Family f, int m) {
  if (m > max_family_degree)
    return false;
  switch (f) {
  case Family::P1a:
  case Family::C5:
    return m > 1 && m % 2 == 0;
  case Family::P1b:
  case Family::C6:
    return m > 2 && m % 2 == 1;
  case Family::C7:
    return m > 3 && m % 2 == 0;
  case Family::C8:
    return m > 4 && m % 2 == 1;
  case Family::GV:
    return true;
  }
  return false;
}

// 1 / A(2^e) with A(q) = sqrt(q) - 1 and e even.
double inv_a(int e) { return 1.0 / (std::ldexp(1.0, e / 2) - 1.0); }

} // namespace

void check_family_params(const FamilyParams &params) {
  if (params.family == Family::GV) {
    if (!(params.ce >= 0.0 && params.ce < 1.0))
      throw Error(ErrorKind::BadFamilyParams, "GV needs C_e in [0, 1)");
    return;
  }
  if (!degree_ok(params.family, params.m))
    throw Error(ErrorKind::BadFamilyParams,
                std::string(to_string(params.family)) + " does not admit m = " +
                    std::to_string(params.m));
}

double family_delta_max(const FamilyParams &params) {
  check_family_params(params);
  const double m = params.m;
  switch (params.family) {
  case Family::P1a:
  case Family::C5:
    return (1.0 - inv_a(params.m)) / m;
  case Family::P1b:
  case Family::C6:
    return 2.0 * (1.0 - inv_a(params.m - 1)) / m;
  case Family::C7:
    return (1.0 - 2.0 * inv_a(params.m)) / (2.0 * m);
  case Family::C8:
    return (1.0 - 1.0 / (m - 1.0) - 2.0 * inv_a(params.m - 1)) / m;
  case Family::GV:
    return gv_root_x0(0.0, params.ce);
  }
  return 0.0;
}

bool in_family_domain(const FamilyParams &params, double delta) {
  const double hi = family_delta_max(params);
  if (!(delta >= 0.0))
    return false;
  return params.family == Family::C7 ? delta < hi : delta <= hi;
}

double family_rate(const FamilyParams &params, double delta) {
  if (!in_family_domain(params, delta))
    throw Error(ErrorKind::DomainError,
                "delta = " + std::to_string(delta) + " outside the " +
                    std::string(to_string(params.family)) + " domain");
  const double m = params.m;
  switch (params.family) {
  case Family::P1a:
  case Family::C5:
    return 1.0 - m * delta - inv_a(params.m);
  case Family::P1b:
  case Family::C6:
    return (1.0 - 1.0 / m) * (1.0 - 0.5 * m * delta - inv_a(params.m - 1));
  case Family::C7:
    return 1.0 - 2.0 * m * delta - 2.0 * inv_a(params.m);
  case Family::C8:
    return (2.0 - 2.0 / m) * (1.0 - 0.5 * m * delta - inv_a(params.m - 1)) -
           1.0;
  case Family::GV:
    return 1.0 + params.ce - 2.0 * entropy_q4(delta);
  }
  return 0.0;
}

std::vector<double> delta_grid(double step, double max_delta) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw Error(ErrorKind::DomainError, "delta step must be positive");
  if (!(max_delta >= 0.0) || !std::isfinite(max_delta))
    throw Error(ErrorKind::DomainError, "grid end must be >= 0");
  if (max_delta / step > 1e7)
    throw Error(ErrorKind::DomainError, "grid would exceed 10^7 points");
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double d = static_cast<double>(i) * step;
    if (d > max_delta)
      break;
    grid.push_back(d);
  }
  return grid;
}

namespace {

std::string curve_label(const FamilyParams &p) {
  if (p.family == Family::GV) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "GV[ce=%.12g]", p.ce);
    return buf;
  }
  return std::string(to_string(p.family)) + "[m=" + std::to_string(p.m) + "]";
}

} // namespace

BoundCurve sample_curve(const FamilyParams &params,
                        std::span<const double> grid) {
  BoundCurve curve;
  curve.label = curve_label(params);
  curve.delta_max = family_delta_max(params);
  for (double d : grid)
    if (in_family_domain(params, d))
      curve.samples.emplace_back(d, family_rate(params, d));
  return curve;
}

std::vector<int> valid_family_degrees(Family family, int m_lo, int m_hi) {
  std::vector<int> out;
  for (int m = std::max(m_lo, 0); m <= std::min(m_hi, max_family_degree); ++m)
    if (degree_ok(family, m))
      out.push_back(m);
  return out;
}

BoundCurve envelope_curve(Family family, int m_lo, int m_hi,
                          std::span<const double> grid) {
  if (family == Family::GV)
    throw Error(ErrorKind::BadFamilyParams, "GV has no degree to sweep");
  const auto degrees = valid_family_degrees(family, m_lo, m_hi);
  if (degrees.empty())
    throw Error(ErrorKind::BadFamilyParams,
                "no valid m for " + std::string(to_string(family)) + " in " +
                    std::to_string(m_lo) + ".." + std::to_string(m_hi));
  BoundCurve curve;
  curve.label = std::string(to_string(family)) + "[envelope]";
  for (int m : degrees)
    curve.delta_max =
        std::max(curve.delta_max, family_delta_max({family, m, 0.0}));
  for (double d : grid) {
    std::optional<double> best;
    for (int m : degrees) {
      const FamilyParams p{family, m, 0.0};
      if (in_family_domain(p, d)) {
        const double r = family_rate(p, d);
        best = best ? std::max(*best, r) : r;
      }
    }
    if (best)
      curve.samples.emplace_back(d, *best);
  }
  return curve;
}

std::string curves_csv(std::span<const double> grid,
                       std::span<const BoundCurve> curves) {
  std::string out = "delta";
  for (const auto &c : curves)
    out += "," + c.label;
  for (auto name : comparator_columns)
    out += "," + std::string(name);
  out += "\n";

  std::vector<std::size_t> cursor(curves.size(), 0);
  char buf[64];
  for (double d : grid) {
    std::snprintf(buf, sizeof buf, "%.12g", d);
    out += buf;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      out += ",";
      const auto &s = curves[i].samples;
      if (cursor[i] < s.size() && s[cursor[i]].first == d) {
        std::snprintf(buf, sizeof buf, "%.12g", s[cursor[i]].second);
        out += buf;
        ++cursor[i];
      }
    }
    for (std::size_t i = 0; i < std::size(comparator_columns); ++i)
      out += ",";
    out += "\n";
  }
  return out;
}

} // namespace eacqc
