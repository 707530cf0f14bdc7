/*******************************************************************************
 * Copyright (c) 2026 The eacqc Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include "eacqc/classical_code.hpp"
#include "eacqc/eaqecc.hpp"
#include "eacqc/matrix.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace eacqc {

inline constexpr std::string_view version = "0.1.0";

/// Process exit codes.
enum ExitCode : int {
  ExitOk = 0,
  ExitAuditFailed = 1,
  ExitParse = 2,
  ExitDomain = 3,
};

/// Reads a matrix file:
///
///   q <size> [poly <c0,...,cm>]
///   <row of integers in [0, size)>
///   ...
///
/// `#` starts a comment. At least one row is required and all rows have the
/// same width. Every failure is reported as ParseError.
Matrix read_matrix_file(std::istream &in);
Matrix read_matrix_file(const std::string &path);

/// The code defined by a matrix file. `kind` is "H" for a parity-check
/// matrix and "G" for a generator matrix.
ClassicalCode read_code_file(const std::string &path, std::string_view kind);

/// Comma-separated `n,k,d,c,q` with the distance taken as a lower bound.
EaqeccParams params_from_tuple(const std::string &text);

/// `n,k,d,c,q` for a parameter set; round-trips through parse_tuple.
std::string tuple_string(const EaqeccParams &p);

/// Human summary: `<params> net=<k*> hbar_e=<h> class=<class>[ maximal]`.
std::string describe(const EaqeccParams &p);

/// One JSON object (no trailing newline) describing the parameters.
std::string describe_json(const EaqeccParams &p);

/// Runs the command line. Never throws; returns an ExitCode.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace eacqc
