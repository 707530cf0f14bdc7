/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "eacqc/classical_code.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace eacqc {

enum class Provenance { Css, Hermitian, Concatenation, Literal };

std::string_view to_string(Provenance p);

struct ConcatSource;

/// [[n, k, d; c]]_q parameters of an entanglement-assisted quantum code.
///
/// Every instance satisfies q >= 2 a prime power, n >= 1, 0 <= k <= n and
/// 0 <= c <= n - k. The net transmission k - c may be negative.
struct EaqeccParams {
  std::uint64_t q = 2;
  std::int64_t n = 1;
  std::int64_t k = 0;
  Distance d;
  std::int64_t c = 0;
  Provenance provenance = Provenance::Literal;
  /// Set when provenance is Concatenation.
  std::shared_ptr<const ConcatSource> source;
  /// Total padding applied by extend().
  std::int64_t extended = 0;

  /// Validated literal tuple.
  static EaqeccParams literal(std::uint64_t q, std::int64_t n, std::int64_t k,
                              Distance d, std::int64_t c);

  std::int64_t net() const { return k - c; }
  bool maximal() const { return c == n - k; }

  /// Same (q, n, k, d, c); provenance is ignored.
  bool same_tuple(const EaqeccParams &o) const {
    return q == o.q && n == o.n && k == o.k && d == o.d && c == o.c;
  }

  /// Throws InvalidParams when the tuple invariants fail.
  void validate() const;
};

/// The inner and outer codes a concatenated code came from, plus the number
/// of inner blocks replaced by expurgation.
struct ConcatSource {
  EaqeccParams inner;
  EaqeccParams outer;
  std::int64_t expurgated = 0;
};

/// `[[n,k,d;c]]_q`, with `>=d` for a design bound and `?` for unknown.
std::string format(const EaqeccParams &p);
std::string format(const Distance &d);

/// Both entanglement counts: the rank of the check-matrix product and the
/// dimension formula. They agree for correct input.
struct EntanglementCounts {
  std::int64_t by_rank = 0;
  std::int64_t by_dimension = 0;
};

/// rank(H1 H2^T) and (n - k2) - dim(C2^perp ∩ C1).
EntanglementCounts css_entanglement(const ClassicalCode &c1,
                                    const ClassicalCode &c2);

/// rank(H H^dagger) and (n - k) - dim(C^perp_h ∩ C) over GF(base^2).
EntanglementCounts hermitian_entanglement(const ClassicalCode &code,
                                          std::uint32_t base);

/// [[n, k1 + k2 - n + c, >= min(d1, d2); c]]_q.
EaqeccParams css_construct(const ClassicalCode &c1, const ClassicalCode &c2);

/// [[n, 2k - n + c, >= d; c]]_base from a code over GF(base^2).
EaqeccParams hermitian_construct(const ClassicalCode &code, std::uint32_t base);

enum class EaDefectClass { Eaqmds, Intermediate, Eaqamds, HbarEaqmds, Negative };

std::string_view to_string(EaDefectClass cls);

struct EaDefectReport {
  std::int64_t defect = 0;
  EaDefectClass cls = EaDefectClass::Eaqmds;
  /// The distance was a design bound, so the defect is an upper bound.
  bool from_bound = false;
  /// The defect is negative: the tuple violates the EA Singleton bound.
  bool warning = false;
};

/// n - k - 2d + 2 + c.
EaDefectReport ea_singleton_defect(const EaqeccParams &p);

inline std::int64_t net_transmission(const EaqeccParams &p) { return p.net(); }

bool is_prime_power(std::uint64_t q);

} // namespace eacqc
