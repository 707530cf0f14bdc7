/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "eacqc/eaqecc.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace eacqc {

/// Concatenation of an inner [[n1,k1,d1;c1]]_q code with an outer
/// [[n2,k2,d2;c2]]_{q^k1} code: [[n1 n2, k1 k2, >= d1 d2; c1 n2 + c2 k1]]_q.
/// The outer alphabet must equal q^k1 exactly.
EaqeccParams concatenate(const EaqeccParams &inner, const EaqeccParams &outer);

/// If both components have maximal entanglement, the output must satisfy
/// c = n1 n2 - k1 k2. Vacuously true otherwise.
bool maximal_entanglement_closure_check(const EaqeccParams &inner,
                                        const EaqeccParams &outer,
                                        const EaqeccParams &out);

/// Pads t positions: [[n + t, k, d; c]].
EaqeccParams extend(const EaqeccParams &p, std::int64_t t);

/// Replaces t inner [[4,2,2;0]]_2 blocks of a concatenated code by
/// [[3,2,2;1]]_2 blocks: [[n - t, k, d; c + t]]. At most n2 blocks in total.
EaqeccParams expurgate(const EaqeccParams &p, std::int64_t t);

// ---------------------------------------------------------------------------
// Table audit
// ---------------------------------------------------------------------------

/// One parameter tuple as written in a table file: `n,k,d,c,q[,net]`. With the
/// net flag set, k holds the net transmission k - c and c is `-` (unknown).
struct TableTuple {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::optional<std::int64_t> c;
  std::uint64_t q = 2;
  bool net = false;

  std::string to_string() const;
};

TableTuple parse_tuple(const std::string &text);

enum class TransformKind { Base, Extension, Expurgation };

struct TableRow {
  std::string table;
  /// 1-based line number in the source file.
  std::size_t line = 0;
  TableTuple inner;
  TableTuple outer;
  TransformKind transform = TransformKind::Base;
  std::int64_t amount = 0;
  TableTuple published;
  /// Opaque comparator annotations, never re-derived.
  std::string comparators;
};

/// Parses `table|inner|outer|transform|published|comparators` lines. Blank
/// lines and lines starting with `#` are skipped. Throws ParseError naming
/// the line.
std::vector<TableRow> parse_table_rows(std::istream &in);

struct FieldMismatch {
  std::string field;
  std::int64_t expected = 0;
  std::int64_t published = 0;
};

struct RowVerdict {
  std::size_t index = 0;
  const TableRow *row = nullptr;
  /// Derived tuple, formatted; empty when derivation itself failed.
  std::string derived;
  std::vector<FieldMismatch> mismatches;
  /// Derivation error, if any (counts as a mismatch).
  std::string error;
  /// Every mismatch is on the documented allowlist.
  bool known_issue = false;

  bool consistent() const { return mismatches.empty() && error.empty(); }
};

struct AuditReport {
  std::vector<RowVerdict> verdicts;
  std::size_t consistent = 0;
  std::size_t mismatched = 0;
  std::size_t known_issues = 0;

  /// Mismatches that are not known issues (or all of them when
  /// `allow_known` is false).
  std::size_t unexpected(bool allow_known) const {
    return allow_known ? mismatched - known_issues : mismatched;
  }
};

/// Re-derives every row with concatenate / extend / expurgate and compares
/// against the published tuple. Rows must outlive the report.
AuditReport audit_tables(const std::vector<TableRow> &rows);

std::string audit_text(const AuditReport &report, bool allow_known);
std::string audit_json_lines(const AuditReport &report, bool allow_known);

} // namespace eacqc
