/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "eacqc/eaqecc.hpp"
#include "eacqc/error.hpp"

#include <algorithm>

namespace eacqc {

std::string_view to_string(Provenance p) {
  switch (p) {
  case Provenance::Css:
    return "css";
  case Provenance::Hermitian:
    return "hermitian";
  case Provenance::Concatenation:
    return "concatenation";
  case Provenance::Literal:
    return "literal";
  }
  return "?";
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2)
    return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0)
    ++p;
  if (q % p != 0)
    return true; // q itself is prime
  while (q % p == 0)
    q /= p;
  return q == 1;
}

void EaqeccParams::validate() const {
  auto fail = [&](const std::string &what) {
    throw Error(ErrorKind::InvalidParams, what + " in " + format(*this));
  };
  if (!is_prime_power(q))
    fail("alphabet is not a prime power");
  if (n < 1)
    fail("n < 1");
  if (k < 0 || k > n)
    fail("k outside [0, n]");
  if (c < 0 || c > n - k)
    fail("c outside [0, n - k]");
  if (d.known() && d.value < 1)
    fail("d < 1");
}

EaqeccParams EaqeccParams::literal(std::uint64_t q, std::int64_t n,
                                   std::int64_t k, Distance d, std::int64_t c) {
  EaqeccParams p;
  p.q = q;
  p.n = n;
  p.k = k;
  p.d = d;
  p.c = c;
  p.validate();
  return p;
}

std::string format(const Distance &d) {
  switch (d.kind) {
  case Distance::Kind::Exact:
    return std::to_string(d.value);
  case Distance::Kind::DesignLowerBound:
    return ">=" + std::to_string(d.value);
  case Distance::Kind::Unknown:
    break;
  }
  return "?";
}

std::string format(const EaqeccParams &p) {
  return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         format(p.d) + ";" + std::to_string(p.c) + "]]_" + std::to_string(p.q);
}

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

void check_result(const EntanglementCounts &counts) {
  if (counts.by_rank != counts.by_dimension)
    throw Error(ErrorKind::EntanglementFormulaMismatch,
                "rank formula gives " + std::to_string(counts.by_rank) +
                    ", dimension formula gives " +
                    std::to_string(counts.by_dimension));
}

} // namespace

EntanglementCounts css_entanglement(const ClassicalCode &c1,
                                    const ClassicalCode &c2) {
  require_same_field(c1.field(), c2.field(), "CSS inputs over different fields");
  if (c1.length() != c2.length())
    throw Error(ErrorKind::LengthMismatch,
                "CSS inputs of length " + std::to_string(c1.length()) +
                    " and " + std::to_string(c2.length()));
  const Matrix &h1 = c1.parity_check();
  const Matrix &h2 = c2.parity_check();
  EntanglementCounts out;
  out.by_rank = as_int((h1 * h2.transpose()).rank());
  out.by_dimension = as_int(h2.rows()) -
                     as_int(rowspace_intersection_dim(h2, c1.generator()));
  return out;
}

EntanglementCounts hermitian_entanglement(const ClassicalCode &code,
                                          std::uint32_t base) {
  const Matrix &h = code.parity_check();
  EntanglementCounts out;
  out.by_rank = as_int((h * h.conj_transpose(base)).rank());
  out.by_dimension =
      as_int(h.rows()) -
      as_int(rowspace_intersection_dim(h.conjugate(base), code.generator()));
  return out;
}

EaqeccParams css_construct(const ClassicalCode &c1, const ClassicalCode &c2) {
  const EntanglementCounts counts = css_entanglement(c1, c2);
  if (!c1.distance().known() || !c2.distance().known())
    throw Error(ErrorKind::DistanceUnknown, "CSS inputs need distances");
  check_result(counts);
  const std::int64_t n = as_int(c1.length());
  EaqeccParams p;
  p.q = c1.field()->size();
  p.n = n;
  p.c = counts.by_rank;
  p.k = as_int(c1.dimension()) + as_int(c2.dimension()) - n + p.c;
  p.d = Distance::lower_bound(
      std::min(c1.distance().value, c2.distance().value));
  p.provenance = Provenance::Css;
  p.validate();
  return p;
}

EaqeccParams hermitian_construct(const ClassicalCode &code,
                                 std::uint32_t base) {
  const EntanglementCounts counts = hermitian_entanglement(code, base);
  if (!code.distance().known())
    throw Error(ErrorKind::DistanceUnknown, "Hermitian input needs a distance");
  check_result(counts);
  const std::int64_t n = as_int(code.length());
  EaqeccParams p;
  p.q = base;
  p.n = n;
  p.c = counts.by_rank;
  p.k = 2 * as_int(code.dimension()) - n + p.c;
  p.d = Distance::lower_bound(code.distance().value);
  p.provenance = Provenance::Hermitian;
  p.validate();
  return p;
}

std::string_view to_string(EaDefectClass cls) {
  switch (cls) {
  case EaDefectClass::Eaqmds:
    return "EAQMDS";
  case EaDefectClass::Intermediate:
    return "intermediate";
  case EaDefectClass::Eaqamds:
    return "EAQAMDS";
  case EaDefectClass::HbarEaqmds:
    return "hbar_e-EAQMDS";
  case EaDefectClass::Negative:
    return "below-singleton";
  }
  return "?";
}

EaDefectReport ea_singleton_defect(const EaqeccParams &p) {
  if (!p.d.known())
    throw Error(ErrorKind::DistanceUnknown, "EA Singleton defect of " +
                                                format(p));
  EaDefectReport r;
  r.defect = p.n - p.k - 2 * p.d.value + 2 + p.c;
  r.from_bound = p.d.kind == Distance::Kind::DesignLowerBound;
  if (r.defect < 0) {
    r.cls = EaDefectClass::Negative;
    r.warning = true;
  } else if (r.defect == 0) {
    r.cls = EaDefectClass::Eaqmds;
  } else if (r.defect == 1) {
    r.cls = EaDefectClass::Intermediate;
  } else if (r.defect == 2) {
    r.cls = EaDefectClass::Eaqamds;
  } else {
    r.cls = EaDefectClass::HbarEaqmds;
  }
  return r;
}

} // namespace eacqc
