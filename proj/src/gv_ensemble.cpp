/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/gv_ensemble.hpp"
#include "eacqc/bounds.hpp"
#include "eacqc/error.hpp"
#include "eacqc/gf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <sstream>

namespace eacqc {

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n)
    return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

BigInt pow_int(std::int64_t base, std::int64_t exp) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < exp; ++i)
    r *= base;
  return r;
}

/// log2(2^a + 2^b).
double log2_sum(double a, double b) {
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

void check_psi_args(std::int64_t n1, std::int64_t n2, std::int64_t t) {
  if (n1 < 1 || n2 < 0)
    throw Error(ErrorKind::DomainError, "psi needs n1 >= 1 and n2 >= 0");
  if (t < 0 || t > n2)
    throw Error(ErrorKind::DomainError, "psi needs 0 <= t <= n2");
  if (n1 * n2 > 10000)
    throw Error(ErrorKind::DomainError, "psi needs n1 n2 <= 10^4");
}

} // namespace

EnsembleSpec EnsembleSpec::make(std::int64_t n1, std::int64_t k1,
                                std::int64_t c1, std::int64_t n2,
                                std::int64_t k2, std::int64_t c2) {
  EnsembleSpec s;
  s.n1 = n1;
  s.k1 = k1;
  s.c1 = c1;
  s.n2 = n2;
  s.k2 = k2;
  s.c2 = c2;
  auto fail = [&](const char *what) {
    throw Error(ErrorKind::InvalidParams, std::string(what) + " in " +
                                              s.to_string());
  };
  if (n1 < 1 || k1 < 0 || k1 > n1)
    fail("inner needs 0 <= k1 <= n1, n1 >= 1");
  if (c1 < 0 || c1 > s.r1())
    fail("inner needs 0 <= c1 <= n1 - k1");
  if (s.kbar1() < 0)
    fail("inner quantum dimension 2k1 - n1 + c1 < 0");
  if (n2 < 0 || k2 < 0 || k2 > n2)
    fail("outer needs 0 <= k2 <= n2");
  if (c2 < 0 || c2 > s.r2())
    fail("outer needs 0 <= c2 <= n2 - k2");
  if (s.kbar2() < 0)
    fail("outer quantum dimension 2k2 - n2 + c2 < 0");
  if (s.re() + s.ce() != 2 * (s.kbar1() * s.r2() + s.r1() * s.n2))
    fail("r_e + c_e != 2 (kbar1 r2 + r1 n2)");
  return s;
}

double EnsembleSpec::rate() const {
  return ne() == 0 ? 0.0
                   : static_cast<double>(kbar1() * kbar2()) /
                         static_cast<double>(ne());
}

double EnsembleSpec::ent_rate() const {
  return ne() == 0 ? 0.0
                   : static_cast<double>(ce()) / static_cast<double>(ne());
}

std::string EnsembleSpec::to_string() const {
  std::ostringstream os;
  os << "n1=" << n1 << " k1=" << k1 << " c1=" << c1 << " n2=" << n2
     << " k2=" << k2 << " c2=" << c2;
  return os.str();
}

BigInt WeightPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto &c : coeffs)
    s += c;
  return s;
}

WeightPolynomial psi_t(std::int64_t n1, std::int64_t n2, std::int64_t t) {
  check_psi_args(n1, n2, t);
  std::vector<BigInt> base(static_cast<std::size_t>(n1) + 1);
  for (std::int64_t i = 1; i <= n1; ++i)
    base[i] = pow_int(3, i) * binomial(n1, i);

  std::vector<BigInt> acc{1};
  for (std::int64_t s = 0; s < t; ++s) {
    std::vector<BigInt> next(acc.size() + base.size() - 1);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0)
        continue;
      for (std::size_t b = 1; b < base.size(); ++b)
        next[a + b] += acc[a] * base[b];
    }
    acc = std::move(next);
  }
  WeightPolynomial out;
  out.ne = n1 * n2;
  out.coeffs.assign(static_cast<std::size_t>(out.ne) + 1, 0);
  const BigInt choose = binomial(n2, t);
  for (std::size_t w = 0; w < acc.size(); ++w)
    out.coeffs[w] = choose * acc[w];
  return out;
}

WeightPolynomial psi_t_recursive(std::int64_t n1, std::int64_t n2,
                                 std::int64_t t) {
  check_psi_args(n1, n2, t);
  const auto ne = static_cast<std::size_t>(n1 * n2);
  // Pascal row for C(n1, i), independent of the closed-form path.
  std::vector<BigInt> pascal{1};
  for (std::int64_t r = 0; r < n1; ++r) {
    std::vector<BigInt> next(pascal.size() + 1, 0);
    for (std::size_t i = 0; i < pascal.size(); ++i) {
      next[i] += pascal[i];
      next[i + 1] += pascal[i];
    }
    pascal = std::move(next);
  }
  std::vector<BigInt> weight(static_cast<std::size_t>(n1) + 1);
  BigInt three = 1;
  for (std::size_t i = 0; i < weight.size(); ++i, three *= 3)
    weight[i] = three * pascal[i];

  std::vector<BigInt> m(ne + 1, 0);
  m[0] = 1;
  for (std::int64_t s = 1; s <= t; ++s) {
    std::vector<BigInt> next(ne + 1, 0);
    for (std::size_t w = 0; w <= ne; ++w)
      for (std::size_t i = 1; i < weight.size() && i <= w; ++i)
        next[w] += weight[i] * m[w - i];
    m = std::move(next);
  }
  BigInt choose = 1;
  for (std::int64_t i = 1; i <= t; ++i)
    choose = choose * (n2 - t + i) / i;
  WeightPolynomial out;
  out.ne = n1 * n2;
  out.coeffs.resize(ne + 1);
  for (std::size_t w = 0; w <= ne; ++w)
    out.coeffs[w] = choose * m[w];
  return out;
}

std::vector<std::vector<std::uint64_t>> nt_w_bruteforce(std::int64_t n1,
                                                        std::int64_t n2) {
  if (n1 < 1 || n2 < 0)
    throw Error(ErrorKind::DomainError, "need n1 >= 1 and n2 >= 0");
  const std::int64_t ne = n1 * n2;
  if (2 * ne > 24)
    throw Error(ErrorKind::TooLarge, "4^(n1 n2) exceeds 2^24");
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(n2) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(ne) + 1, 0));

  // Two bits per symbol; a symbol is nonzero iff either bit is set.
  std::uint64_t low_bits = 0;
  for (std::int64_t j = 0; j < ne; ++j)
    low_bits |= std::uint64_t{1} << (2 * j);
  std::vector<std::uint64_t> block_mask(static_cast<std::size_t>(n2));
  for (std::int64_t b = 0; b < n2; ++b)
    for (std::int64_t j = 0; j < n1; ++j)
      block_mask[b] |= std::uint64_t{1} << (2 * (b * n1 + j));

  const std::uint64_t total = std::uint64_t{1} << (2 * ne);
  for (std::uint64_t v = 0; v < total; ++v) {
    const std::uint64_t nz = (v | (v >> 1)) & low_bits;
    std::size_t t = 0;
    for (auto m : block_mask)
      t += (nz & m) != 0;
    ++counts[t][static_cast<std::size_t>(std::popcount(nz))];
  }
  return counts;
}

Log2Value phi_upper_bound(const EnsembleSpec &spec, double x) {
  if (!(x > 0.0 && x < 1.0))
    throw Error(ErrorKind::DomainError, "phi bound needs 0 < x < 1");
  Log2Value out;
  const double inner = log2_sum(static_cast<double>(spec.n1) * std::log2(1.0 + 3.0 * x),
                                2.0 * static_cast<double>(spec.r1()));
  out.log2 = -static_cast<double>(spec.re() + spec.ce()) +
             static_cast<double>(spec.n2) * inner;
  if (out.log2 < 1023.0)
    out.value = std::exp2(out.log2);
  return out;
}

Rational phi_psi_sum(const EnsembleSpec &spec, const Rational &x) {
  Rational total = 0;
  for (std::int64_t t = 1; t <= spec.n2; ++t) {
    const WeightPolynomial psi = psi_t(spec.n1, spec.n2, t);
    Rational value = 0;
    for (auto it = psi.coeffs.rbegin(); it != psi.coeffs.rend(); ++it)
      value = value * x + Rational(*it);
    const BigInt scale = pow_int(4, t * spec.r1() + spec.kbar1() * spec.r2());
    total += value / Rational(scale);
  }
  return total;
}

namespace {

/// n_e (R_e + 2 H4(g) - 1 - C_e) + n2 log2(1 + 4^r1 (1 - g)^n1).
double average_bound_log2(const EnsembleSpec &spec, double g) {
  const double ne = static_cast<double>(spec.ne());
  const double exponent = static_cast<double>(spec.kbar1() * spec.kbar2()) +
                          2.0 * ne * entropy_q4(g) - ne -
                          static_cast<double>(spec.ce());
  const double bracket =
      log2_sum(0.0, 2.0 * static_cast<double>(spec.r1()) +
                        static_cast<double>(spec.n1) * std::log2(1.0 - g));
  return exponent + static_cast<double>(spec.n2) * bracket;
}

} // namespace

double avg_codeword_bound(const EnsembleSpec &spec, double gamma) {
  if (!(gamma > 0.0 && gamma <= 0.75))
    throw Error(ErrorKind::DomainError, "gamma outside (0, 3/4]");
  return average_bound_log2(spec, gamma);
}

ProbabilityBound theorem2_probability_bound(const EnsembleSpec &spec,
                                         double delta) {
  if (!(delta > 0.0 && delta < 0.5))
    throw Error(ErrorKind::DomainError, "delta_e outside (0, 1/2)");
  ProbabilityBound out;
  out.log2 = std::log2((1.0 - delta) / (1.0 - 2.0 * delta)) +
             average_bound_log2(spec, delta);
  out.tau = std::pow(4.0, static_cast<double>(spec.r1()) /
                              static_cast<double>(spec.n1)) *
            (1.0 - delta);
  out.c = std::pow(out.tau, static_cast<double>(spec.n1)) *
          static_cast<double>(spec.n2);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive ensembles
// ---------------------------------------------------------------------------

namespace {

/// Mixed-radix counter over `len` digits in [0, radix).
bool next_digits(std::vector<std::uint32_t> &d, std::uint32_t radix) {
  for (auto &v : d) {
    if (++v < radix)
      return true;
    v = 0;
  }
  return false;
}

std::uint64_t checked_count(std::uint64_t base, std::int64_t exp,
                            std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (r > limit / base)
      throw Error(ErrorKind::TooLarge, "ensemble exceeds 2^24 members");
    r *= base;
  }
  return r;
}

constexpr std::uint64_t ensemble_limit = std::uint64_t{1} << 24;

} // namespace

SyndromeStats ensemble_exhaustive(std::uint32_t field_size, std::int64_t n,
                                  std::int64_t k) {
  if (field_size != 4 && field_size != 16)
    throw Error(ErrorKind::InvalidParams, "ensemble field must be GF(4) or GF(16)");
  if (k < 1 || k > n)
    throw Error(ErrorKind::InvalidParams, "ensemble needs 1 <= k <= n");
  if (n > 3 || k > 2)
    throw Error(ErrorKind::TooLarge, "ensemble needs n <= 3 and k <= 2");
  const Field f = GaloisField::of_size(field_size);
  const std::int64_t r = n - k;

  SyndromeStats stats;
  stats.field_size = field_size;
  stats.n = n;
  stats.k = k;
  stats.ensemble_size = checked_count(field_size, k * r, ensemble_limit);
  stats.expected = Rational(1) / Rational(pow_int(field_size, r));

  std::vector<std::uint32_t> u(static_cast<std::size_t>(n), 0);
  while (next_digits(u, field_size)) {
    std::uint64_t hits = 0;
    std::vector<std::uint32_t> p(static_cast<std::size_t>(k * r), 0);
    do {
      // Syndrome of u under H = [-P^T | I]: -(u_info P)_j + u_check_j.
      bool zero = true;
      for (std::int64_t j = 0; j < r && zero; ++j) {
        std::uint32_t s = u[k + j];
        for (std::int64_t i = 0; i < k; ++i)
          s = f->sub(s, f->mul(u[i], p[i * r + j]));
        zero = s == 0;
      }
      hits += zero;
    } while (next_digits(p, field_size));

    VectorFrequency vf;
    vf.u = u;
    vf.info_zero = std::all_of(u.begin(), u.begin() + k,
                               [](auto v) { return v == 0; });
    vf.weight = std::count_if(u.begin(), u.end(), [](auto v) { return v != 0; });
    vf.frequency = Rational(hits) / Rational(stats.ensemble_size);
    stats.vectors.push_back(std::move(vf));
  }
  stats.identities_hold = std::all_of(
      stats.vectors.begin(), stats.vectors.end(), [&](const VectorFrequency &v) {
        return v.frequency == (v.info_zero ? Rational(0) : stats.expected);
      });
  return stats;
}

EnsembleSpec concatenated_ensemble_spec(std::int64_t n1, std::int64_t k1,
                                        std::int64_t n2, std::int64_t k2) {
  return EnsembleSpec::make(n1, k1, n1 - k1, n2, k2, n2 - k2);
}

std::vector<Rational> concatenated_ensemble_average(std::int64_t n1,
                                                    std::int64_t k1,
                                                    std::int64_t n2,
                                                    std::int64_t k2) {
  if (k1 < 1 || k1 > 2 || n1 < k1)
    throw Error(ErrorKind::InvalidParams, "inner needs k1 in {1, 2}, n1 >= k1");
  if (k2 < 1 || n2 < k2)
    throw Error(ErrorKind::InvalidParams, "outer needs 1 <= k2 <= n2");
  const std::int64_t r1 = n1 - k1, r2 = n2 - k2;
  const std::uint32_t q2 = k1 == 1 ? 4 : 16;
  const Field f4 = GaloisField::of_size(4);
  const Field fo = GaloisField::of_size(q2);

  const std::uint64_t inner_count = checked_count(4, k1 * r1, ensemble_limit);
  const std::uint64_t outer_count =
      checked_count(q2, k2 * r2, ensemble_limit / inner_count);
  checked_count(q2, k2, (std::uint64_t{1} << 30) / (inner_count * outer_count));

  // Outer symbol -> inner information digits.
  std::vector<std::array<std::uint32_t, 2>> digits(q2);
  if (k1 == 1) {
    for (std::uint32_t z = 0; z < 4; ++z)
      digits[z] = {z, 0};
  } else {
    const std::uint32_t alpha = fo->primitive_element();
    const std::array<std::uint32_t, 4> embed = {0, 1, fo->pow(alpha, 5),
                                                fo->pow(alpha, 10)};
    std::vector<bool> seen(q2, false);
    for (std::uint32_t a0 = 0; a0 < 4; ++a0)
      for (std::uint32_t a1 = 0; a1 < 4; ++a1) {
        const std::uint32_t z = fo->add(embed[a0], fo->mul(embed[a1], alpha));
        seen[z] = true;
        digits[z] = {a0, a1};
      }
    if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
      throw Error(ErrorKind::InvalidParams, "GF(16) basis over GF(4) failed");
  }

  const std::int64_t ne = n1 * n2;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(ne) + 1, 0);
  std::vector<std::uint32_t> p1(static_cast<std::size_t>(k1 * r1), 0);
  do {
    // Weight of the inner codeword for each outer symbol.
    std::vector<std::int64_t> block_weight(q2, 0);
    for (std::uint32_t z = 0; z < q2; ++z) {
      const auto &a = digits[z];
      std::int64_t w = 0;
      for (std::int64_t i = 0; i < k1; ++i)
        w += a[i] != 0;
      for (std::int64_t j = 0; j < r1; ++j) {
        std::uint32_t s = 0;
        for (std::int64_t i = 0; i < k1; ++i)
          s = f4->add(s, f4->mul(a[i], p1[i * r1 + j]));
        w += s != 0;
      }
      block_weight[z] = w;
    }
    std::vector<std::uint32_t> p2(static_cast<std::size_t>(k2 * r2), 0);
    do {
      std::vector<std::uint32_t> msg(static_cast<std::size_t>(k2), 0);
      while (next_digits(msg, q2)) {
        std::int64_t w = 0;
        for (std::int64_t i = 0; i < k2; ++i)
          w += block_weight[msg[i]];
        for (std::int64_t j = 0; j < r2; ++j) {
          std::uint32_t s = 0;
          for (std::int64_t i = 0; i < k2; ++i)
            s = fo->add(s, fo->mul(msg[i], p2[i * r2 + j]));
          w += block_weight[s];
        }
        ++counts[static_cast<std::size_t>(w)];
      }
    } while (next_digits(p2, q2));
  } while (next_digits(p1, 4));

  const Rational members(inner_count * outer_count);
  std::vector<Rational> avg(counts.size());
  for (std::size_t w = 1; w < counts.size(); ++w)
    avg[w] = Rational(counts[w]) / members;
  return avg;
}

std::string syndrome_report(const SyndromeStats &stats) {
  std::ostringstream os;
  os << "field=GF(" << stats.field_size << ") n=" << stats.n
     << " k=" << stats.k << " r=" << stats.n - stats.k
     << " ensemble=" << stats.ensemble_size << "\n";
  os << "expected Pr[syndrome=0 | info nonzero] = " << stats.expected << "\n";
  for (const auto &v : stats.vectors) {
    const Rational want = v.info_zero ? Rational(0) : stats.expected;
    os << "u=(";
    for (std::size_t i = 0; i < v.u.size(); ++i)
      os << (i ? "," : "") << v.u[i];
    os << ") info=" << (v.info_zero ? "zero" : "nonzero") << " wt=" << v.weight
       << " freq=" << v.frequency << " formula=" << want << " "
       << (v.frequency == want ? "PASS" : "FAIL") << "\n";
  }
  os << "identities: " << (stats.identities_hold ? "PASS" : "FAIL") << "\n";
  return os.str();
}

} // namespace eacqc
